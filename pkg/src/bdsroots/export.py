"""DOT rendering of the weights of ``p`` as a ``k``-module."""

from __future__ import annotations

from .root_core import format_vec
from .vogan import CompactDatum, VoganDatum, compact_datum


def weight_edges(vd: VoganDatum, cd: CompactDatum):
    """``(beta, gamma, label)`` with ``gamma = beta + psi`` for ``psi`` in ``Phi_k``."""
    nodes = set(vd.noncompact_roots)
    edges = []
    for beta in sorted(nodes):
        for psi, label in zip(cd.phi_k.elements, cd.phi_k.labels):
            gamma = tuple(a + b for a, b in zip(beta, psi))
            if gamma in nodes:
                edges.append((beta, gamma, label))
    return edges


def weight_diagram_dot(vd: VoganDatum, cd: CompactDatum = None) -> str:
    cd = cd or compact_datum(vd)
    names = [f"phi{i + 1}" for i in range(vd.rank)]
    nodes = sorted(vd.noncompact_roots)

    def node_id(v):
        return "n_" + "_".join(str(c).replace("-", "m") for c in v)

    lines = [f'digraph "{vd.type}_nu{vd.node}" {{', "  rankdir=BT;"]
    for v in nodes:
        extra = ', shape=doublecircle' if v == cd.lam else ""
        lines.append(f'  {node_id(v)} [label="{format_vec(v, names)}"{extra}];')
    for beta, gamma, label in weight_edges(vd, cd):
        lines.append(f'  {node_id(beta)} -> {node_id(gamma)} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
