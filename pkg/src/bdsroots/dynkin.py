"""Dynkin diagrams of sub-bases: connected components, type recognition, ASCII.

A diagram is given by its Cartan matrix (same convention as
:mod:`bdsroots.root_core`) and one label per node.  Components are typed by
testing Cartan-matrix isomorphism against the standard list of the same rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .root_core import LieType, RootSystemError, cartan_matrix


def components(cartan: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """Connected components as sorted index tuples, ordered by smallest index."""
    n = len(cartan)
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [s], [s]
        while stack:
            i = stack.pop()
            for j in range(n):
                if not seen[j] and cartan[i][j] != 0:
                    seen[j] = True
                    comp.append(j)
                    stack.append(j)
        out.append(tuple(sorted(comp)))
    return out


def _candidates(n: int) -> List[LieType]:
    out = [LieType("A", n)]
    if n >= 2:
        out.append(LieType("B", n))
    if n >= 3:
        out.append(LieType("C", n))
    if n >= 4:
        out.append(LieType("D", n))
    if n in (6, 7, 8):
        out.append(LieType("E", n))
    if n == 4:
        out.append(LieType("F", 4))
    if n == 2:
        out.append(LieType("G", 2))
    return out


def find_isomorphism(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Optional[List[int]]:
    """Permutation ``p`` with ``a[i][j] == b[p[i]][p[j]]``, or None."""
    n = len(a)
    if len(b) != n:
        return None

    def profile(m, i):
        return sorted(m[i][j] for j in range(n)), sorted(m[j][i] for j in range(n))

    pa = [profile(a, i) for i in range(n)]
    pb = [profile(b, i) for i in range(n)]
    perm = [-1] * n
    used = [False] * n

    def extend(i):
        if i == n:
            return True
        for k in range(n):
            if used[k] or pa[i] != pb[k]:
                continue
            if all(a[i][j] == b[k][perm[j]] and a[j][i] == b[perm[j]][k] for j in range(i)):
                perm[i] = k
                used[k] = True
                if extend(i + 1):
                    return True
                used[k] = False
        perm[i] = -1
        return False

    return perm if extend(0) else None


def recognize(cartan: Sequence[Sequence[int]]) -> LieType:
    """Type of a connected finite-type Cartan matrix."""
    n = len(cartan)
    for t in _candidates(n):
        if find_isomorphism(cartan, cartan_matrix(t)) is not None:
            return t
    raise RootSystemError("Cartan matrix is not of connected finite type")


def submatrix(cartan, idx: Sequence[int]):
    return tuple(tuple(cartan[i][j] for j in idx) for i in idx)


@dataclass(frozen=True)
class Diagram:
    labels: Tuple[str, ...]
    cartan: Tuple[Tuple[int, ...], ...]

    def components(self) -> List[Tuple[int, ...]]:
        return components(self.cartan)

    def component_types(self) -> List[Tuple[LieType, Tuple[int, ...]]]:
        return [(recognize(submatrix(self.cartan, c)), c) for c in self.components()]

    def component_of(self, node: int) -> Tuple[int, ...]:
        return next(c for c in self.components() if node in c)

    def edges(self) -> List[Tuple[int, int, int, int]]:
        """``(i, j, A[i][j], A[j][i])`` for ``i < j`` joined in the diagram."""
        n = len(self.cartan)
        return [(i, j, self.cartan[i][j], self.cartan[j][i])
                for i in range(n) for j in range(i + 1, n) if self.cartan[i][j] != 0]

    def render(self, title: str = "") -> str:
        """Deterministic ASCII rendering, one line per component.

        Bonds: ``---`` single; ``=>``/``<=`` double and ``3>``/``<3`` triple,
        the arrow pointing at the shorter root.
        """
        lines = []
        if title:
            lines.append(title)
        for t, comp in self.component_types():
            bonds = []
            for i, j, aij, aji in self.edges():
                if i not in comp:
                    continue
                m = max(-aij, -aji)
                if m == 1:
                    bond = "---"
                else:
                    # A[i][j] = -m means node i is the shorter root
                    arrow = str(m) if m == 3 else "="
                    bond = f"<{arrow}" if -aij == m else f"{arrow}>"
                bonds.append(f"{self.labels[i]} {bond} {self.labels[j]}")
            body = ", ".join(bonds) if bonds else self.labels[comp[0]]
            lines.append(f"  {t}: {body}")
        return "\n".join(lines)
