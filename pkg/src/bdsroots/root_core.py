"""Finite root systems built from Cartan matrices, in exact arithmetic.

Vectors are plain tuples of coefficients in the basis of simple roots
``phi_1, ..., phi_l``.  Roots have integer entries; general weights may carry
:class:`fractions.Fraction` entries.

Cartan matrix convention: ``A[i][j] = 2 (phi_i, phi_j) / (phi_i, phi_i)``,
so ``A[i][j] == cartan_integer(phi_j, phi_i)``.  Node numbering follows the
usual chain/branch pictures (B_l, C_l with the double bond at the end of the
chain, D_l forked at ``phi_{l-2}``, E_n with ``phi_2`` attached to ``phi_4``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Optional, Sequence, Tuple

Vec = Tuple  # tuple of int / Fraction

MAX_ROOTS = 480

_RANK_RULES = {
    "A": lambda l: l >= 1,
    "B": lambda l: l >= 2,
    "C": lambda l: l >= 2,
    "D": lambda l: l >= 4,
    "E": lambda l: l in (6, 7, 8),
    "F": lambda l: l == 4,
    "G": lambda l: l == 2,
}

_ROOT_COUNTS = {
    "A": lambda l: l * (l + 1),
    "B": lambda l: 2 * l * l,
    "C": lambda l: 2 * l * l,
    "D": lambda l: 2 * l * (l - 1),
    "E": lambda l: {6: 72, 7: 126, 8: 240}[l],
    "F": lambda l: 48,
    "G": lambda l: 12,
}


class RootSystemError(ValueError):
    """Raised for invalid Lie types or non-finite Cartan data."""


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_RULES:
            raise RootSystemError(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or not _RANK_RULES[self.family](self.rank):
            raise RootSystemError(f"invalid rank {self.rank} for family {self.family}")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", text)
        if not m:
            raise RootSystemError(f"cannot parse Lie type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def root_count(self) -> int:
        return _ROOT_COUNTS[self.family](self.rank)

    def __str__(self):
        return f"{self.family}{self.rank}"


# -- vector helpers ---------------------------------------------------------

def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def vadd(a: Vec, b: Vec) -> Vec:
    return tuple(_norm(x + y) for x, y in zip(a, b))


def vsub(a: Vec, b: Vec) -> Vec:
    return tuple(_norm(x - y) for x, y in zip(a, b))


def vneg(a: Vec) -> Vec:
    return tuple(-x for x in a)


def vscale(c, a: Vec) -> Vec:
    return tuple(_norm(c * x) for x in a)


def vsum(vectors: Iterable[Vec], rank: int) -> Vec:
    total = (0,) * rank
    for v in vectors:
        total = vadd(total, v)
    return total


def unit(rank: int, i: int) -> Vec:
    """The simple root ``phi_{i+1}`` (0-based index ``i``)."""
    return tuple(1 if j == i else 0 for j in range(rank))


def height(v: Vec):
    return sum(v)


def format_vec(v: Vec, labels: Optional[Sequence[str]] = None) -> str:
    """Render ``v`` as e.g. ``phi1+2phi2-phi3`` (``0`` for the zero vector)."""
    if labels is None:
        labels = [f"phi{i + 1}" for i in range(len(v))]
    parts = []
    for c, name in zip(v, labels):
        if c == 0:
            continue
        if name[:1] in "+-":
            name = f"({name})"
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        coeff = "" if mag == 1 else (f"({mag})" if isinstance(mag, Fraction) else str(mag))
        parts.append(f"{sign}{coeff}{name}")
    if not parts:
        return "0"
    text = "".join(parts)
    return text[1:] if text[0] == "+" else text


# -- Cartan data ------------------------------------------------------------

def _chain(l: int):
    a = [[0] * l for _ in range(l)]
    for i in range(l):
        a[i][i] = 2
        if i + 1 < l:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def cartan_matrix(type: LieType) -> Tuple[Tuple[int, ...], ...]:
    """Cartan matrix of ``type`` in the chain/branch numbering of the module."""
    f, l = type.family, type.rank
    a = _chain(l)
    if f == "B":
        a[l - 1][l - 2] = -2  # phi_l short
    elif f == "C":
        a[l - 2][l - 1] = -2  # phi_l long
    elif f == "D":
        a[l - 2][l - 1] = a[l - 1][l - 2] = 0
        a[l - 3][l - 1] = a[l - 1][l - 3] = -1
    elif f == "E":
        a = [[0] * l for _ in range(l)]
        for i in range(l):
            a[i][i] = 2
        edges = [(1, 3), (2, 4), (3, 4)] + [(k, k + 1) for k in range(4, l)]
        for i, j in edges:
            a[i - 1][j - 1] = a[j - 1][i - 1] = -1
    elif f == "F":
        a[2][1] = -2  # phi_1, phi_2 long; phi_3, phi_4 short
    elif f == "G":
        a[1][0] = -3  # phi_2 short
    return tuple(tuple(row) for row in a)


def symmetrizer(cartan: Sequence[Sequence[int]]) -> Tuple[Fraction, ...]:
    """Half squared lengths ``d_i`` with ``d_i A[i][j]`` symmetric.

    Normalized per connected component so that the longest simple root has
    ``d_i = 1`` (squared length 2).
    """
    n = len(cartan)
    d: list = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        comp = [start]
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and cartan[i][j] != 0:
                    if cartan[j][i] == 0:
                        raise RootSystemError("Cartan matrix is not symmetrizable")
                    dj = d[i] * Fraction(cartan[i][j], cartan[j][i])
                    if d[j] is None:
                        d[j] = dj
                        comp.append(j)
                        stack.append(j)
                    elif d[j] != dj:
                        raise RootSystemError("Cartan matrix is not symmetrizable")
        top = max(d[i] for i in comp)
        for i in comp:
            d[i] = d[i] / top
    return tuple(d)


def _validate_cartan(cartan) -> Tuple[Tuple[int, ...], ...]:
    rows = tuple(tuple(int(x) for x in row) for row in cartan)
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise RootSystemError("Cartan matrix must be square and non-empty")
    for i in range(n):
        if rows[i][i] != 2:
            raise RootSystemError("Cartan matrix diagonal must be 2")
        for j in range(n):
            if i != j and (rows[i][j] > 0 or (rows[i][j] == 0) != (rows[j][i] == 0)):
                raise RootSystemError(f"invalid off-diagonal entries at ({i}, {j})")
    return rows


# -- root systems -----------------------------------------------------------

@dataclass(frozen=True)
class RootSystem:
    cartan: Tuple[Tuple[int, ...], ...]
    symmetrizer: Tuple[Fraction, ...]
    positive_roots: Tuple[Vec, ...]
    roots: Tuple[Vec, ...]
    highest_root: Vec
    type: Optional[LieType] = None
    _root_set: frozenset = field(default=frozenset(), repr=False, compare=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def simple_roots(self) -> Tuple[Vec, ...]:
        return tuple(unit(self.rank, i) for i in range(self.rank))

    def is_root(self, v: Vec) -> bool:
        return tuple(v) in self._root_set

    def is_positive(self, v: Vec) -> bool:
        return self.is_root(v) and any(c > 0 for c in v)

    def sum_roots(self, a: Vec, b: Vec) -> Optional[Vec]:
        s = vadd(a, b)
        return s if s in self._root_set else None

    @property
    def _gram(self):
        # integer Gram matrix scaled by the common denominator of the symmetrizer
        g = self.__dict__.get("_gram_cache")
        if g is None:
            scale = 1
            for d in self.symmetrizer:
                scale = scale * d.denominator // gcd(scale, d.denominator)
            g = (scale, tuple(tuple(int(self.symmetrizer[i] * scale) * self.cartan[i][j]
                                    for j in range(self.rank)) for i in range(self.rank)))
            object.__setattr__(self, "_gram_cache", g)
        return g

    def _scaled_pairing(self, a: Vec, b: Vec):
        _, g = self._gram
        total = 0
        for i, x in enumerate(a):
            if x:
                row = g[i]
                total += x * sum(row[j] * y for j, y in enumerate(b) if y)
        return total

    def pairing(self, a: Vec, b: Vec) -> Fraction:
        """W-invariant inner product; long roots have squared length 2."""
        scale, _ = self._gram
        return Fraction(self._scaled_pairing(a, b)) / scale

    def cartan_integer(self, a: Vec, b: Vec):
        """``2 (a, b) / (b, b)``; an integer whenever both are roots."""
        bb = self._scaled_pairing(b, b)
        if bb == 0:
            raise ValueError("cartan_integer: second argument must be non-zero")
        num = 2 * self._scaled_pairing(a, b)
        if isinstance(num, int) and isinstance(bb, int) and num % bb == 0:
            return num // bb
        return _norm(Fraction(num) / bb)

    def dump(self) -> str:
        """Canonical text serialization (type, Cartan matrix, root list)."""
        lines = [f"type {self.type if self.type else 'custom'}", f"rank {self.rank}", "cartan"]
        lines += [" ".join(f"{x:d}" for x in row) for row in self.cartan]
        lines.append(f"highest_root {' '.join(str(c) for c in self.highest_root)}")
        lines.append(f"roots {len(self.roots)}")
        lines += [" ".join(str(c) for c in r) for r in self.roots]
        return "\n".join(lines) + "\n"


def _root_key(v: Vec):
    return (height(v), tuple(-c for c in v))


def generate_roots(cartan, type: Optional[LieType] = None) -> RootSystem:
    """All roots by string closure from the simple roots.

    Positive roots are built height by height: for a root ``a`` and simple
    root ``phi_i``, the ``phi_i``-string through ``a`` reaches ``p`` steps down
    and ``p - <a, phi_i^vee>`` steps up.
    """
    cartan = _validate_cartan(cartan)
    n = len(cartan)
    d = symmetrizer(cartan)
    simple = [unit(n, i) for i in range(n)]
    positive = set(simple)
    layer = list(simple)
    while layer:
        nxt = set()
        for a in layer:
            for i in range(n):
                # <a, phi_i^vee> = sum_j a_j A[i][j]
                ci = sum(a[j] * cartan[i][j] for j in range(n))
                p = 0
                down = a
                while True:
                    down = tuple(c - (1 if j == i else 0) for j, c in enumerate(down))
                    if down in positive:
                        p += 1
                    else:
                        break
                if p - ci > 0:
                    up = tuple(c + (1 if j == i else 0) for j, c in enumerate(a))
                    if up not in positive:
                        nxt.add(up)
        positive |= nxt
        if 2 * len(positive) > MAX_ROOTS:
            raise RootSystemError(
                f"root closure exceeded {MAX_ROOTS} roots; Cartan matrix is not of finite type"
            )
        layer = sorted(nxt)
    pos = tuple(sorted(positive, key=_root_key))
    roots = tuple(sorted(list(pos) + [vneg(r) for r in pos], key=_root_key))
    maximal = [r for r in pos if all(vadd(r, s) not in positive for s in simple)]
    if len(maximal) != 1:
        raise RootSystemError("Cartan matrix is decomposable: no unique highest root")
    rs = RootSystem(
        cartan=cartan,
        symmetrizer=d,
        positive_roots=pos,
        roots=roots,
        highest_root=maximal[0],
        type=type,
        _root_set=frozenset(roots),
    )
    if type is not None and len(roots) != type.root_count():
        raise RootSystemError(f"generated {len(roots)} roots for {type}, expected {type.root_count()}")
    return rs


@lru_cache(maxsize=None)
def _cached_root_system(type: LieType) -> RootSystem:
    return generate_roots(cartan_matrix(type), type)


def root_system(type) -> RootSystem:
    """Root system of a simple Lie type (a :class:`LieType` or e.g. ``"E6"``); cached."""
    if isinstance(type, str):
        type = LieType.parse(type)
    return _cached_root_system(type)

