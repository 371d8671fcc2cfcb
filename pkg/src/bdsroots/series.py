"""Counting discrete series with a fixed infinitesimal character.

Only the combinatorial content is modeled: the number of classes with a given
infinitesimal character, how many of them are Borel-de Siebenthal, the
Harish-Chandra root order of the latter, and the Blattner shift.  Parameters
are abstract weights; integrality is not checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, NamedTuple, Optional

from .bds import BdsError, BdsSystem, Provenance, enumerate_bds, system_from_base
from .root_core import Vec, vadd, vneg
from .vogan import CompactDatum, VoganDatum, compact_datum
from .weyl import apply_word, longest_word, parabolic_order, weyl_order


@dataclass(frozen=True)
class SeriesCount:
    total: int
    bds: int
    hermitian: bool = False


def count_series(vd: VoganDatum) -> SeriesCount:
    """``|W_g| / |W_k|`` classes in all; ``bds`` of them Borel-de Siebenthal.

    For hermitian data ``bds`` is the number of positive systems of that kind
    (always 2) and the ``hermitian`` flag is set.
    """
    cd = compact_datum(vd)
    wg = weyl_order(vd.type)
    wk = parabolic_order(cd.phi_k, vd.rs)
    if wg % wk:
        raise AssertionError(f"|W_k|={wk} does not divide |W_g|={wg}")
    return SeriesCount(wg // wk, len(enumerate_bds(vd, None if vd.hermitian else cd)), vd.hermitian)


def _require_nonhermitian(vd: VoganDatum):
    if vd.hermitian:
        raise ValueError(f"{vd}: defined only when k is semisimple")


def hc_positive_set(vd: VoganDatum) -> FrozenSet[Vec]:
    """``P_0`` together with the negatives of ``P \\ P_0``."""
    return frozenset(r if vd.n_nu(r) == 0 else vneg(r) for r in vd.rs.positive_roots)


def hc_root_order(vd: VoganDatum, cd: Optional[CompactDatum] = None) -> BdsSystem:
    """Harish-Chandra root order of the Borel-de Siebenthal discrete series.

    Its simple roots are ``Phi_0`` and ``-lambda``; the highest root is
    ``-eps``.  Its translate under :func:`hc_translate` is checked to be one of
    :func:`~bdsroots.bds.enumerate_bds`.
    """
    _require_nonhermitian(vd)
    cd = cd or compact_datum(vd)
    phi0 = vd.phi0
    p0 = [r for r in vd.rs.positive_roots if vd.n_nu(r) == 0]
    system = system_from_base(phi0.elements + (vneg(cd.lam),), phi0.labels + ("-lambda",),
                              vd, Provenance("harish-chandra"), required=p0)
    if system.positive_set != hc_positive_set(vd):
        raise BdsError("HC order has simple roots Phi_0 + {-lambda}")
    if system.highest_root != vneg(cd.epsilon):
        raise BdsError("HC order has highest root -eps")
    hc_translate(vd, cd, system)
    return system


def hc_translate(vd: VoganDatum, cd: Optional[CompactDatum] = None,
                 system: Optional[BdsSystem] = None) -> BdsSystem:
    """The enumerated system equal to the HC order moved by ``w0_k w0_{l_0}``.

    ``w0_{l_0}`` carries the HC order onto ``-P``; ``w0_k`` then brings it back
    to a positive system containing ``P_k``.
    """
    _require_nonhermitian(vd)
    cd = cd or compact_datum(vd)
    positive = system.positive_set if system is not None else hc_positive_set(vd)
    # w0_{l_0} acts first (sending the HC order to -P), then w0_k
    word = longest_word(vd.phi0, vd.rs) + longest_word(cd.phi_k, vd.rs)
    image = frozenset(apply_word(word, r, vd.rs) for r in positive)
    for s in enumerate_bds(vd, cd):
        if s.positive_set == image:
            return s
    raise BdsError("w'_0 translate of the HC order is Borel-de Siebenthal and contains P_k")


class Blattner(NamedTuple):
    parameter: Vec
    shift: Vec
    hermitian: bool


def blattner(gamma: Vec, vd: VoganDatum) -> Blattner:
    """``gamma`` plus the sum of the positive roots with ``nu``-coefficient 2.

    For hermitian data that layer is empty; ``gamma`` comes back unchanged
    with the ``hermitian`` flag set.
    """
    shift = (0,) * vd.rank
    for r in vd.rs.positive_roots:
        if vd.n_nu(r) == 2:
            shift = vadd(shift, r)
    return Blattner(vadd(tuple(gamma), shift), shift, vd.hermitian)


def expected_bds_count(vd: VoganDatum) -> int:
    """Number of Borel-de Siebenthal systems containing ``P_k`` by family.

    Two when ``k`` has a centre; otherwise 1 for E8/F4/G2, 2 for B/C/E7,
    3 for E6 and 4 for D.
    """
    if vd.hermitian:
        return 2
    f, l = vd.type.family, vd.type.rank
    if f == "D":
        return 4
    if f == "E":
        return {6: 3, 7: 2, 8: 1}[l]
    return {"B": 2, "C": 2, "F": 1, "G": 1}[f]
