import json

import pytest

from bdsroots import linalg
from bdsroots.bds import (
    BdsError,
    BdsSystem,
    Provenance,
    candidate_pairs,
    construct_bds,
    enumerate_bds,
    lemma_checks,
    noncompact_split,
    original_system,
    system_from_base,
)
from bdsroots.root_core import vneg
from bdsroots.series import expected_bds_count
from bdsroots.vogan import admissible_data, compact_datum, make_vogan

import cases

NONHERMITIAN = [vd for vd in admissible_data(8) if not vd.hermitian]


@pytest.mark.parametrize("case", cases.all_cases(), ids=lambda c: f"{c['type']}-{c['nu']}")
def test_closed_form_fixtures(case):
    assert cases.mismatches(case) == []


@pytest.mark.parametrize("vd", admissible_data(8), ids=str)
def test_enumeration_count_matches_table(vd):
    systems = enumerate_bds(vd)
    assert len(systems) == expected_bds_count(vd)
    for s in systems:
        assert all(r in s.positive_set for r in vd.positive_compact)
        assert linalg.determinant(linalg.columns(s.base)) in (1, -1)


def test_e6_three_systems():
    vd = make_vogan("E6", 2)
    systems = enumerate_bds(vd)
    assert [s.provenance.kind for s in systems] == ["original", "constructed", "constructed"]
    assert {s.provenance.phi_prime for s in systems[1:]} == {(1, 0, 0, 0, 0, 0), (0, 0, 0, 0, 0, 1)}


@pytest.mark.parametrize("vd", NONHERMITIAN, ids=str)
def test_lemma_identities(vd):
    cd = compact_datum(vd)
    for pair in candidate_pairs(cd, vd):
        report = lemma_checks(pair, cd, vd)
        assert report.ok, [c for c in report.checks if not c.ok]


@pytest.mark.parametrize("vd", NONHERMITIAN, ids=str)
def test_noncompact_split(vd):
    cd = compact_datum(vd)
    noncompact_split(original_system(vd), None, vd)
    for pair in candidate_pairs(cd, vd):
        noncompact_split(construct_bds(pair, cd, vd), pair[1], vd)


def test_system_from_base_rejects_non_unimodular():
    vd = make_vogan("B3", 2)
    with pytest.raises(BdsError, match="base"):
        system_from_base([(1, 0, 0), (1, 0, 0), (0, 0, 1)], ["a", "b", "c"], vd, Provenance("original"))


def test_system_from_base_rejects_missing_pk():
    vd = make_vogan("B3", 2)
    base = [vneg(s) for s in vd.rs.simple_roots]
    with pytest.raises(BdsError, match="required compact roots"):
        system_from_base(base, ["a", "b", "c"], vd, Provenance("original"))


def test_system_from_base_checks_coefficient():
    # the standard base of B3 has phi1 with coefficient 1, not 2
    vd = make_vogan("B3", 2)
    wrong = type(vd)(vd.rs, 0, hermitian=False)
    with pytest.raises(BdsError, match="coefficient"):
        original_system(wrong)


def test_bds_error_is_assertion():
    assert issubclass(BdsError, AssertionError)


@pytest.mark.parametrize("name,node", [("E6", 2), ("B4", 3), ("C3", 3), ("D5", 1)])
def test_system_json_round_trip(name, node):
    vd = make_vogan(name, node)
    for s in enumerate_bds(vd):
        data = json.loads(json.dumps(s.to_json()))
        again = BdsSystem.from_json(data, vd)
        assert again == s and again.positive_set == s.positive_set


def test_hermitian_candidate_pairs_undefined():
    vd = make_vogan("A3", 2)
    with pytest.raises(ValueError):
        candidate_pairs(compact_datum(vd), vd)


def test_describe_marks_noncompact_root():
    vd = make_vogan("B3", 3)
    text = enumerate_bds(vd)[1].describe(3)
    assert text.startswith("constructed (phi'=phi1, phi=phi2)")
    assert sum(line.endswith("*") for line in text.splitlines()) == 1
