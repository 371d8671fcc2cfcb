from fractions import Fraction

import pytest

from bdsroots.root_core import LieType, cartan_matrix, root_system, unit, vneg
from bdsroots.vogan import admissible_data, compact_datum, make_vogan
from bdsroots.weyl import (
    SubBase,
    SubBaseError,
    antidominant_rep,
    apply_word,
    dominant_rep,
    longest_involution,
    longest_word,
    parabolic_order,
    reflect,
    weyl_order,
)


def chamber_bfs_order(cartan):
    """|W| as the orbit size of rho, in fundamental-weight coordinates."""
    n = len(cartan)
    # simple root alpha_i has omega-coordinates <alpha_i, alpha_j^vee> = A[j][i]
    alpha = [tuple(cartan[j][i] for j in range(n)) for i in range(n)]
    start = (1,) * n
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for mu in frontier:
            for i in range(n):
                nu = tuple(m - mu[i] * a for m, a in zip(mu, alpha[i]))
                if nu not in seen:
                    seen.add(nu)
                    nxt.append(nu)
        frontier = nxt
    return len(seen)


def reflection_group_orbit(vectors, rs, start):
    """Orbit of ``start`` under reflections in ``vectors``, via Gram-matrix reflections."""
    gram = [[rs.pairing(unit(rs.rank, i), unit(rs.rank, j)) for j in range(rs.rank)] for i in range(rs.rank)]

    def ip(a, b):
        return sum(a[i] * gram[i][j] * b[j] for i in range(rs.rank) for j in range(rs.rank))

    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for a in vectors:
                c = 2 * ip(v, a) / ip(a, a)
                w = tuple(x - c * y for x, y in zip(v, a))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return len(seen)


SMALL_TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"]


@pytest.mark.parametrize("name", SMALL_TYPES)
def test_weyl_order_matches_chamber_bfs(name):
    t = LieType.parse(name)
    assert weyl_order(t) == chamber_bfs_order(cartan_matrix(t))


def test_weyl_order_e6_by_orbit():
    assert chamber_bfs_order(cartan_matrix(LieType("E", 6))) == 51840 == weyl_order(LieType("E", 6))


def test_weyl_order_b2():
    assert weyl_order(LieType("B", 2)) == 8


@pytest.mark.parametrize("vd", [vd for vd in admissible_data(4)], ids=str)
def test_parabolic_order_matches_orbit(vd):
    cd = compact_datum(vd)
    rs = vd.rs
    generic = tuple(Fraction(10 ** i + 1, 7) for i in range(rs.rank))
    assert all(rs.pairing(generic, r) != 0 for r in rs.roots)
    assert parabolic_order(cd.phi_k, rs) == reflection_group_orbit(cd.phi_k.elements, rs, generic)


def test_parabolic_order_empty():
    assert parabolic_order(SubBase((), ()), root_system("A3")) == 1


def test_reflect_basics():
    rs = root_system("B2")
    a = (1, 1)
    assert reflect(a, a, rs) == (-1, -1)
    v = (3, -5)
    assert reflect(reflect(v, a, rs), a, rs) == v
    # delta = phi1 + 2 phi2 is orthogonal to phi1
    assert reflect(rs.highest_root, (1, 0), rs) == (1, 2)
    assert reflect(rs.highest_root, (0, 1), rs) == (1, 0)
    with pytest.raises(ValueError):
        reflect(v, (2, 0), rs)


def test_reflection_permutes_roots():
    rs = root_system("F4")
    for a in rs.positive_roots[::7]:
        assert {reflect(r, a, rs) for r in rs.roots} == set(rs.roots)


def test_antidominant_eps_orthogonal_cases():
    vd = make_vogan("B5", 3)
    eps, word = antidominant_rep(vd.rs.highest_root, vd.phi0, vd.rs)
    assert eps == (0, 1, 2, 2, 2)
    assert apply_word(word, vd.rs.highest_root, vd.rs) == eps
    assert antidominant_rep(eps, vd.phi0, vd.rs) == (eps, ())


def test_dominant_of_highest_root_is_itself():
    rs = root_system("E7")
    assert dominant_rep(rs.highest_root, rs.simple_roots, rs) == (rs.highest_root, ())


def test_dominant_is_minus_antidominant_of_negative():
    rs = root_system("D5")
    S = [unit(5, i) for i in (0, 1, 3, 4)]
    for r in rs.roots:
        assert dominant_rep(r, S, rs)[0] == vneg(antidominant_rep(vneg(r), S, rs)[0])


def test_longest_involution_examples():
    vd = make_vogan("B6", 4)
    inv = longest_involution(vd.phi0, vd.rs)
    assert inv[unit(6, 0)] == unit(6, 2)  # phi_1 -> phi_{p-1}
    e6 = make_vogan("E6", 2)
    inv = longest_involution(e6.phi0, e6.rs)
    assert inv[unit(6, 0)] == unit(6, 5)
    rs = root_system("A3")
    single = SubBase.of(rs, [(0, 1, 0)])
    assert longest_involution(single, rs) == {(0, 1, 0): (0, 1, 0)}


def test_longest_involution_reverses_type_a_chains():
    rs = root_system("A6")
    inv = longest_involution(rs.simple_roots, rs)
    assert all(inv[unit(6, i)] == unit(6, 5 - i) for i in range(6))
    rs = root_system("D5")
    inv = longest_involution(rs.simple_roots, rs)
    assert inv[unit(5, 3)] == unit(5, 4)  # odd rank D swaps the fork
    rs = root_system("D6")
    inv = longest_involution(rs.simple_roots, rs)
    assert all(inv[s] == s for s in rs.simple_roots)
    for name in ["B4", "C5", "E7", "E8", "F4", "G2"]:
        rs = root_system(name)
        inv = longest_involution(rs.simple_roots, rs)
        assert all(inv[s] == s for s in rs.simple_roots)


@pytest.mark.parametrize("name", ["A3", "B3", "D4", "E6", "G2"])
def test_longest_word_length_is_number_of_positive_roots(name):
    rs = root_system(name)
    word = longest_word(rs.simple_roots, rs)
    assert len(word) == len(rs.positive_roots)
    assert {apply_word(word, r, rs) for r in rs.positive_roots} == {vneg(r) for r in rs.positive_roots}


def test_sub_base_validation():
    rs = root_system("A3")
    with pytest.raises(SubBaseError):
        SubBase.of(rs, [(1, 0, 0), (1, 1, 0)])  # positive Cartan integer
    with pytest.raises(SubBaseError):
        SubBase.of(rs, [(2, 0, 0)])
    sb = SubBase.of(rs, [(1, 0, 0), (0, 0, 1)])
    assert sb.cartan(rs) == ((2, 0), (0, 2))
