"""Equi-rank real forms given by one painted (non-compact) simple root.

A :class:`VoganDatum` fixes the standard positive system ``P`` of a simple
root system and a simple root ``nu``.  Roots are graded by their
``nu``-coefficient; odd layers are non-compact, even layers compact.  Nodes
are numbered from 1 as in the usual diagrams.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Optional, Tuple

from .dynkin import Diagram
from .root_core import LieType, RootSystem, Vec, format_vec, root_system, unit
from .weyl import SubBase, antidominant_rep, dominant_rep


class DatumError(ValueError):
    """The painted node does not give an equi-rank Borel-de Siebenthal datum."""


@dataclass(frozen=True)
class VoganDatum:
    rs: RootSystem
    nu_index: int  # 0-based
    hermitian: bool

    @property
    def type(self) -> LieType:
        return self.rs.type

    @property
    def rank(self) -> int:
        return self.rs.rank

    @property
    def node(self) -> int:
        """1-based label of the painted node."""
        return self.nu_index + 1

    @property
    def nu(self) -> Vec:
        return unit(self.rank, self.nu_index)

    def n_nu(self, v: Vec):
        return v[self.nu_index]

    def is_compact(self, v: Vec) -> bool:
        return v[self.nu_index] % 2 == 0

    @cached_property
    def phi0(self) -> SubBase:
        idx = [i for i in range(self.rank) if i != self.nu_index]
        return SubBase(tuple(unit(self.rank, i) for i in idx), tuple(f"phi{i + 1}" for i in idx))

    @cached_property
    def compact_roots(self) -> Tuple[Vec, ...]:
        return tuple(r for r in self.rs.roots if self.is_compact(r))

    @cached_property
    def noncompact_roots(self) -> Tuple[Vec, ...]:
        return tuple(r for r in self.rs.roots if not self.is_compact(r))

    @cached_property
    def positive_compact(self) -> Tuple[Vec, ...]:
        """``P_k = P`` intersected with the compact roots."""
        return tuple(r for r in self.rs.positive_roots if self.is_compact(r))

    def __str__(self):
        kind = "hermitian" if self.hermitian else "non-hermitian"
        return f"{self.type} nu=phi{self.node} ({kind})"


def make_vogan(type, node: int) -> VoganDatum:
    """Datum for ``type`` with the 1-based simple root ``node`` painted."""
    if isinstance(type, str):
        type = LieType.parse(type)
    rs = root_system(type)
    if not 1 <= node <= rs.rank:
        raise DatumError(f"node {node} out of range 1..{rs.rank} for {type}")
    c = rs.highest_root[node - 1]
    if c not in (1, 2):
        raise DatumError(f"n_nu(delta)={c} for nu=phi{node} in {type}; must be 1 or 2")
    return VoganDatum(rs, node - 1, hermitian=(c == 1))


def admissible_data(max_rank: int = 8):
    """All data of rank at most ``max_rank``, in canonical order."""
    out = []
    for family in "ABCDEFG":
        for l in range(1, max_rank + 1):
            try:
                t = LieType(family, l)
            except ValueError:
                continue
            hr = root_system(t).highest_root
            out += [make_vogan(t, i + 1) for i in range(l) if hr[i] in (1, 2)]
    return out


def gradation(vd: VoganDatum) -> Dict[int, Tuple[Vec, ...]]:
    """Roots grouped by ``nu``-coefficient (keys -2..2, or -1..1 if hermitian)."""
    top = 1 if vd.hermitian else 2
    return {i: tuple(r for r in vd.rs.roots if vd.n_nu(r) == i) for i in range(-top, top + 1)}


@dataclass(frozen=True)
class CompactDatum:
    phi_k: SubBase
    epsilon: Optional[Vec]
    lam: Vec
    component_c: Tuple[Vec, ...]
    delta_n: Tuple[Vec, ...]

    def to_json(self) -> dict:
        return {
            "phi_k": [list(v) for v in self.phi_k.elements],
            "phi_k_labels": list(self.phi_k.labels),
            "epsilon": list(self.epsilon) if self.epsilon is not None else None,
            "lambda": list(self.lam),
            "component_c": [list(v) for v in self.component_c],
            "delta_n": [list(v) for v in self.delta_n],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CompactDatum":
        return cls(
            phi_k=SubBase(tuple(tuple(v) for v in data["phi_k"]), tuple(data["phi_k_labels"])),
            epsilon=tuple(data["epsilon"]) if data["epsilon"] is not None else None,
            lam=tuple(data["lambda"]),
            component_c=tuple(tuple(v) for v in data["component_c"]),
            delta_n=tuple(tuple(v) for v in data["delta_n"]),
        )


def compact_datum(vd: VoganDatum) -> CompactDatum:
    rs = vd.rs
    phi0 = vd.phi0
    lam, _ = dominant_rep(vd.nu, phi0, rs)
    if vd.hermitian:
        return CompactDatum(phi0, None, lam, (), vd.noncompact_roots)
    eps, _ = antidominant_rep(rs.highest_root, phi0, rs)
    phi_k = SubBase(phi0.elements + (eps,), phi0.labels + ("eps",))
    diagram = phi_k.diagram(rs)
    comp = diagram.component_of(len(phi_k) - 1)
    return CompactDatum(phi_k, eps, lam, tuple(phi_k.elements[i] for i in comp), vd.noncompact_roots)


def compact_dynkin(cd: CompactDatum, rs: RootSystem) -> Diagram:
    """Diagram of ``k``; every component must be of finite type."""
    d = cd.phi_k.diagram(rs)
    d.component_types()  # raises if some component is not recognized
    return d


def describe(vd: VoganDatum, cd: CompactDatum) -> str:
    labels = [f"phi{i + 1}" for i in range(vd.rank)]
    lines = [str(vd), f"  delta = {format_vec(vd.rs.highest_root, labels)}"]
    if cd.epsilon is not None:
        lines.append(f"  eps = {format_vec(cd.epsilon, labels)}")
    lines.append(f"  lambda = {format_vec(cd.lam, labels)}")
    lines.append("  Phi_k = {" + ", ".join(cd.phi_k.labels) + "}")
    if cd.component_c:
        names = [l for v, l in zip(cd.phi_k.elements, cd.phi_k.labels) if v in cd.component_c]
        lines.append("  C = {" + ", ".join(names) + "}")
    return "\n".join(lines)
