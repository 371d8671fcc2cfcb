"""Borel-de Siebenthal positive root systems of equi-rank simple Lie algebras."""

from .bds import (
    BdsError,
    BdsSystem,
    Provenance,
    candidate_pairs,
    construct_bds,
    enumerate_bds,
    lemma_checks,
    noncompact_split,
)
from .oracle import brute_bds_filter, brute_positive_systems, oracle_check
from .root_core import LieType, RootSystem, RootSystemError, cartan_matrix, generate_roots, root_system
from .series import SeriesCount, blattner, count_series, hc_root_order, hc_translate
from .vogan import (
    CompactDatum,
    DatumError,
    VoganDatum,
    admissible_data,
    compact_datum,
    compact_dynkin,
    gradation,
    make_vogan,
)
from .weyl import (
    SubBase,
    antidominant_rep,
    dominant_rep,
    longest_involution,
    parabolic_order,
    reflect,
    weyl_order,
)

__version__ = "0.1.0"
