"""Brute-force search for positive systems containing ``P_k``.

Independent of :mod:`bdsroots.bds`: no Weyl group, no linear algebra.  A
positive system is a subset ``S`` of the roots, closed under addition within
the roots, with ``S`` and ``-S`` partitioning them.  Each non-compact pair
``{b, -b}`` is assigned a sign by backtracking; every assignment is
propagated through sums with roots already in ``S``.
"""

from __future__ import annotations

from typing import FrozenSet, List

from .root_core import Vec, vadd, vneg, vsub
from .vogan import VoganDatum

DEFAULT_BOUND = 64


class OracleBoundExceeded(RuntimeError):
    pass


class _Search:
    def __init__(self, vd: VoganDatum):
        rs = vd.rs
        self.roots = list(rs.roots)
        self.index = {r: i for i, r in enumerate(self.roots)}
        self.neg = [self.index[vneg(r)] for r in self.roots]
        # sums[i] = [(j, k)] with roots[i] + roots[j] == roots[k]
        self.sums = []
        for r in self.roots:
            row = []
            for j, s in enumerate(self.roots):
                k = self.index.get(vadd(r, s))
                if k is not None:
                    row.append((j, k))
            self.sums.append(row)
        self.state = [0] * len(self.roots)  # +1 in S, -1 in -S, 0 open
        self.pairs = [self.index[r] for r in rs.positive_roots if not vd.is_compact(r)]
        self.seed = [self.index[r] for r in vd.positive_compact]

    def assign(self, state, i) -> bool:
        """Put root ``i`` into S and close up; False on contradiction."""
        if state[i] == 1:
            return True
        if state[i] == -1:
            return False
        stack = [i]
        state[i], state[self.neg[i]] = 1, -1
        sums = self.sums
        neg = self.neg
        while stack:
            x = stack.pop()
            for y, z in sums[x]:
                if state[y] != 1:
                    continue
                if state[z] == -1:
                    return False
                if state[z] == 0:
                    state[z], state[neg[z]] = 1, -1
                    stack.append(z)
        return True

    def run(self) -> List[FrozenSet[Vec]]:
        state = list(self.state)
        for i in self.seed:
            if not self.assign(state, i):
                raise AssertionError("P_k is not closed")
        found = []

        def branch(state):
            open_pair = next((p for p in self.pairs if state[p] == 0), None)
            if open_pair is None:
                found.append(frozenset(self.roots[i] for i, s in enumerate(state) if s == 1))
                return
            for choice in (open_pair, self.neg[open_pair]):
                trial = list(state)
                if self.assign(trial, choice):
                    branch(trial)

        branch(state)
        return sorted(found, key=lambda s: sorted(s))


def brute_positive_systems(vd: VoganDatum, bound: int = DEFAULT_BOUND) -> List[FrozenSet[Vec]]:
    """All positive systems of the roots that contain ``P_k``, canonically sorted."""
    pairs = len(vd.noncompact_roots) // 2
    if pairs > bound:
        raise OracleBoundExceeded(f"{vd}: {pairs} non-compact pairs exceeds bound {bound}")
    return _Search(vd).run()


def indecomposables(positive: FrozenSet[Vec]) -> List[Vec]:
    """Elements of ``positive`` that are not a sum of two of its elements."""
    out = []
    for r in positive:
        if not any(vsub(r, s) in positive for s in positive if s != r):
            out.append(r)
    return sorted(out)


def _coefficient_by_descent(root: Vec, target: Vec, simple: List[Vec], positive) -> int:
    # Peel simple roots off while staying in the positive set; count target.
    count = 0
    while root not in simple:
        for s in simple:
            lower = vsub(root, s)
            if lower in positive:
                count += s == target
                root = lower
                break
        else:
            raise AssertionError(f"{root} cannot be lowered in its positive system")
    return count + (root == target)


def brute_bds_filter(systems, vd: VoganDatum) -> List[FrozenSet[Vec]]:
    """Keep systems with one non-compact simple root of highest-root coefficient 2 (1 if hermitian)."""
    want = 1 if vd.hermitian else 2
    keep = []
    for positive in systems:
        simple = indecomposables(positive)
        noncompact = [s for s in simple if not vd.is_compact(s)]
        if len(noncompact) != 1:
            continue
        top = [r for r in positive if all(vadd(r, s) not in positive for s in simple)]
        if len(top) != 1:
            continue
        if _coefficient_by_descent(top[0], noncompact[0], simple, positive) == want:
            keep.append(positive)
    return keep


def oracle_check(vd: VoganDatum, bound: int = DEFAULT_BOUND) -> dict:
    """Compare the brute-force families with :func:`bdsroots.bds.enumerate_bds`.

    Returns a JSON-ready report; ``report["ok"]`` is the verdict.
    """
    from .bds import enumerate_bds
    from .series import count_series

    systems = brute_positive_systems(vd, bound)
    survivors = brute_bds_filter(systems, vd)
    enumerated = [s.positive_set for s in enumerate_bds(vd)]
    count = count_series(vd)
    missing = [s for s in survivors if s not in set(enumerated)]
    extra = [s for s in enumerated if s not in set(survivors)]
    return {
        "datum": {"type": str(vd.type), "nu": vd.node, "hermitian": vd.hermitian},
        "positive_systems": len(systems),
        "weyl_quotient": count.total,
        "bds_brute": len(survivors),
        "bds_enumerated": len(enumerated),
        "missing_from_enumeration": [sorted(list(r) for r in s) for s in missing],
        "not_found_by_search": [sorted(list(r) for r in s) for s in extra],
        "ok": not missing and not extra and len(systems) == count.total,
    }
