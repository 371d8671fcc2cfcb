"""Borel-de Siebenthal positive systems containing a fixed compact positive system.

Given a datum with semisimple ``k``, every such positive system other than the
standard one is obtained from a simple root ``phi'`` of ``Phi_0`` with
highest-root coefficient 1: drop ``phi = -w0(phi')`` from the compact base
``Phi_k`` and adjoin the lowest weight ``nu'`` of the submodule of ``p``
generated from ``lambda`` under the remaining compact simple roots.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Sequence, Tuple

from . import linalg
from .root_core import Vec, format_vec, height, vadd, vneg, vsub
from .vogan import CompactDatum, VoganDatum, compact_datum
from .weyl import antidominant_rep, longest_involution


class BdsError(AssertionError):
    """A constructed system violates one of its defining predicates."""

    def __init__(self, predicate: str, detail: str = ""):
        self.predicate = predicate
        super().__init__(f"{predicate}: {detail}" if detail else predicate)


@dataclass(frozen=True)
class Provenance:
    kind: str  # "original", "constructed", "opposite" or "harish-chandra"
    phi_prime: Optional[Vec] = None
    phi: Optional[Vec] = None
    nu_prime: Optional[Vec] = None

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        for key in ("phi_prime", "phi", "nu_prime"):
            v = getattr(self, key)
            out[key] = list(v) if v is not None else None
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Provenance":
        def vec(key):
            return tuple(data[key]) if data.get(key) is not None else None
        return cls(data["kind"], vec("phi_prime"), vec("phi"), vec("nu_prime"))


@dataclass(frozen=True)
class BdsSystem:
    base: Tuple[Vec, ...]
    labels: Tuple[str, ...]
    positive_set: FrozenSet[Vec] = field(repr=False)
    provenance: Provenance
    noncompact_simple: Vec
    highest_root: Vec
    highest_root_coeffs: Tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "base": [list(v) for v in self.base],
            "labels": list(self.labels),
            "provenance": self.provenance.to_json(),
            "noncompact_simple": list(self.noncompact_simple),
            "highest_root": list(self.highest_root),
            "highest_root_coeffs": list(self.highest_root_coeffs),
        }

    @classmethod
    def from_json(cls, data: dict, vd: VoganDatum) -> "BdsSystem":
        return system_from_base(
            [tuple(v) for v in data["base"]], data["labels"], vd, Provenance.from_json(data["provenance"])
        )

    def describe(self, rank: int) -> str:
        names = [f"phi{i + 1}" for i in range(rank)]
        p = self.provenance
        head = p.kind
        if p.kind == "constructed":
            head += f" (phi'={format_vec(p.phi_prime, names)}, phi={format_vec(p.phi, names)})"
        lines = [head]
        for v, l in zip(self.base, self.labels):
            mark = "  *" if v == self.noncompact_simple else ""
            lines.append(f"    {l} = {format_vec(v, names)}{mark}")
        lines.append(f"    highest root = {format_vec(self.highest_root, names)}"
                     f" = {format_vec(self.highest_root_coeffs, self.labels)}")
        return "\n".join(lines)


def _require(ok: bool, predicate: str, detail: str = ""):
    if not ok:
        raise BdsError(predicate, detail)


def system_from_base(base: Sequence[Vec], labels: Sequence[str], vd: VoganDatum,
                     provenance: Provenance, required: Optional[Sequence[Vec]] = None) -> BdsSystem:
    """Materialize and certify the positive system with simple roots ``base``.

    Coordinates of every root in the new base come from the integer inverse
    of the (unimodular) change-of-basis matrix.  ``required`` (default
    ``P_k``) must lie in the result.
    """
    rs = vd.rs
    base = tuple(tuple(b) for b in base)
    _require(len(base) == rs.rank, "base size", f"{len(base)} != {rs.rank}")
    _require(all(rs.is_root(b) for b in base), "base consists of roots")
    mat = linalg.columns(base)
    det = linalg.determinant(mat)
    _require(det in (1, -1), "unimodular base change", f"det={det}")
    inv = linalg.inverse(mat)
    positive = []
    coords = {}
    for r in rs.roots:
        c = linalg.matvec(inv, r)
        _require(all(isinstance(x, int) for x in c), "integral coordinates", str(r))
        if all(x >= 0 for x in c):
            positive.append(r)
        else:
            _require(all(x <= 0 for x in c), "coordinates of one sign", str(r))
        coords[r] = c
    positive_set = frozenset(positive)
    _require(len(positive_set) * 2 == len(rs.roots), "P' and -P' partition the roots")
    if required is None:
        required = vd.positive_compact
    _require(all(r in positive_set for r in required), "contains the required compact roots")
    noncompact = [b for b in base if not vd.is_compact(b)]
    _require(len(noncompact) == 1, "exactly one non-compact simple root", str(len(noncompact)))
    top = max(positive_set, key=lambda r: (height(coords[r]), r))
    _require(all(vadd(top, b) not in positive_set for b in base), "highest root is maximal")
    j = base.index(noncompact[0])
    want = 1 if vd.hermitian else 2
    _require(coords[top][j] == want, "non-compact coefficient in highest root",
             f"{coords[top][j]} != {want}")
    return BdsSystem(base, tuple(labels), positive_set, provenance, noncompact[0], top, coords[top])


def candidate_pairs(cd: CompactDatum, vd: VoganDatum) -> List[Tuple[Vec, Vec]]:
    """``(phi', phi)`` with ``n_{phi'}(delta) = 1`` and ``w0_{Phi_0}(phi') = -phi``."""
    if vd.hermitian:
        raise ValueError("candidate pairs are defined for semisimple k only")
    delta = vd.rs.highest_root
    invol = longest_involution(vd.phi0, vd.rs)
    return [(a, invol[a]) for a in vd.phi0 if delta[a.index(1)] == 1]


def _primed_base(phi: Vec, cd: CompactDatum):
    sub = cd.phi_k.without(phi)
    return sub


def construct_bds(pair: Tuple[Vec, Vec], cd: CompactDatum, vd: VoganDatum) -> BdsSystem:
    phi_prime, phi = pair
    sub = _primed_base(phi, cd)
    nu_prime, _ = antidominant_rep(cd.lam, sub, vd.rs)
    return system_from_base(
        sub.elements + (nu_prime,),
        sub.labels + ("nu'",),
        vd,
        Provenance("constructed", phi_prime, phi, nu_prime),
    )


def original_system(vd: VoganDatum) -> BdsSystem:
    labels = tuple(f"phi{i + 1}" for i in range(vd.rank))
    return system_from_base(vd.rs.simple_roots, labels, vd, Provenance("original"))


def enumerate_bds(vd: VoganDatum, cd: Optional[CompactDatum] = None) -> List[BdsSystem]:
    """Every Borel-de Siebenthal positive system containing ``P_k``."""
    if vd.hermitian:
        phi0 = vd.phi0
        opposite = system_from_base(
            phi0.elements + (vneg(vd.rs.highest_root),),
            phi0.labels + ("-delta",),
            vd,
            Provenance("opposite"),
        )
        systems = [original_system(vd), opposite]
    else:
        cd = cd or compact_datum(vd)
        systems = [original_system(vd)]
        systems += [construct_bds(pair, cd, vd) for pair in candidate_pairs(cd, vd)]
    sets = {s.positive_set for s in systems}
    _require(len(sets) == len(systems), "enumerated systems are distinct")
    return systems


def noncompact_split(bs: BdsSystem, phi: Optional[Vec], vd: VoganDatum) -> FrozenSet[Vec]:
    """``P' & Delta_n``, checked against its description through ``n_phi``."""
    got = frozenset(r for r in vd.noncompact_roots if r in bs.positive_set)
    positive = set(vd.rs.positive_roots)
    if phi is None:
        want = frozenset(r for r in vd.noncompact_roots if r in positive)
    else:
        i = phi.index(1)
        want = frozenset(
            r for r in vd.noncompact_roots
            if r[i] == 1 or (r not in positive and r[i] == 0)
        )
    _require(got == want, "non-compact split", f"{len(got)} vs {len(want)} roots")
    return got


@dataclass(frozen=True)
class Check:
    name: str
    expected: int
    actual: int

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class LemmaReport:
    pair: Tuple[Vec, Vec]
    checks: Tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def compact_coordinates(v: Vec, cd: CompactDatum):
    """Coefficients of ``v`` in the compact base ``Phi_k`` (semisimple case)."""
    return linalg.solve(linalg.columns(cd.phi_k.elements), v)


def lemma_checks(pair: Tuple[Vec, Vec], cd: CompactDatum, vd: VoganDatum) -> LemmaReport:
    """Coefficient identities satisfied by a candidate pair.

    ``n_phi(lambda) = 1``, ``n_phi(eps) = 1``, ``n_phi(delta)`` is 2 exactly
    when ``phi`` lies in the component ``C`` of ``eps``, the highest root of
    the compact component through ``phi`` has ``phi``-coefficient 1, and
    ``lambda - nu'`` has ``eps``-coefficient 1.
    """
    rs = vd.rs
    _, phi = pair
    i = phi.index(1)
    checks = [
        Check("n_phi(lambda)", 1, cd.lam[i]),
        Check("n_phi(eps)", 1, cd.epsilon[i]),
        Check("n_phi(delta)", 2 if phi in cd.component_c else 1, rs.highest_root[i]),
    ]
    k = cd.phi_k.elements.index(phi)
    comp = cd.phi_k.diagram(rs).component_of(k)
    inside = []
    for r in vd.positive_compact:
        c = compact_coordinates(r, cd)
        if all(c[j] == 0 for j in range(len(c)) if j not in comp):
            inside.append(c)
    delta2 = max(inside, key=lambda c: (sum(c), c))
    checks.append(Check("c_phi(delta_2)", 1, delta2[k]))
    sub = _primed_base(phi, cd)
    nu_prime, _ = antidominant_rep(cd.lam, sub, rs)
    diff = compact_coordinates(vsub(cd.lam, nu_prime), cd)
    checks.append(Check("c_phi(lambda - nu')", 0, diff[k]))
    checks.append(Check("c_eps(lambda - nu')", 1, diff[-1]))
    return LemmaReport(pair, tuple(checks))
