"""Weyl group actions over sub-bases of a root system.

Elements are never stored as matrices; they act through reflection words.
A word ``(a_1, ..., a_k)`` acts on ``v`` as ``s_{a_k} ... s_{a_1} v`` (letters
are applied left to right).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, prod
from typing import Dict, Sequence, Tuple

from . import linalg
from .dynkin import Diagram
from .root_core import LieType, RootSystem, Vec, vadd, vneg, vscale, vsub

WeylWord = Tuple[Vec, ...]

_EXCEPTIONAL_ORDERS = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
    ("F", 4): 1152,
    ("G", 2): 12,
}


class SubBaseError(ValueError):
    pass


@dataclass(frozen=True)
class SubBase:
    """Linearly independent roots with pairwise non-positive Cartan integers."""

    elements: Tuple[Vec, ...]
    labels: Tuple[str, ...] = ()

    @classmethod
    def of(cls, rs: RootSystem, elements: Sequence[Vec], labels: Sequence[str] = ()) -> "SubBase":
        elements = tuple(tuple(e) for e in elements)
        for e in elements:
            if not rs.is_root(e):
                raise SubBaseError(f"{e} is not a root")
        for i, a in enumerate(elements):
            for b in elements[i + 1:]:
                if rs.cartan_integer(a, b) > 0:
                    raise SubBaseError(f"{a} and {b} have positive Cartan integer")
        if elements and linalg.rank(elements) != len(elements):
            raise SubBaseError("sub-base elements are linearly dependent")
        if not labels:
            labels = tuple(f"b{i + 1}" for i in range(len(elements)))
        return cls(elements, tuple(labels))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def cartan(self, rs: RootSystem) -> Tuple[Tuple[int, ...], ...]:
        """Induced Cartan matrix, ``M[i][j] = <e_j, e_i^vee>``."""
        return tuple(tuple(rs.cartan_integer(b, a) for b in self.elements) for a in self.elements)

    def diagram(self, rs: RootSystem) -> Diagram:
        return Diagram(self.labels, self.cartan(rs))

    def without(self, element: Vec) -> "SubBase":
        keep = [(e, l) for e, l in zip(self.elements, self.labels) if e != element]
        return SubBase(tuple(e for e, _ in keep), tuple(l for _, l in keep))


def reflect(v: Vec, alpha: Vec, rs: RootSystem) -> Vec:
    """``s_alpha v = v - <v, alpha^vee> alpha``."""
    if not rs.is_root(alpha):
        raise ValueError(f"{alpha} is not a root")
    c = rs.cartan_integer(v, alpha)
    return vsub(v, vscale(c, alpha)) if c else tuple(v)


def apply_word(word: Sequence[Vec], v: Vec, rs: RootSystem) -> Vec:
    for a in word:
        v = reflect(v, a, rs)
    return v


def _representative(v: Vec, S, rs: RootSystem, sign: int) -> Tuple[Vec, WeylWord]:
    word = []
    u = tuple(v)
    elements = tuple(S)
    while True:
        for a in elements:
            if sign * rs.cartan_integer(u, a) < 0:
                u = reflect(u, a, rs)
                word.append(a)
                break
        else:
            return u, tuple(word)


def antidominant_rep(v: Vec, S, rs: RootSystem) -> Tuple[Vec, WeylWord]:
    """Unique element ``u`` of ``W_S v`` with ``<u, a^vee> <= 0`` for ``a`` in S.

    Returns ``(u, word)`` with ``apply_word(word, v) == u``.  The lowest-index
    violating generator is reflected first; the word is a certificate only.
    """
    return _representative(v, S, rs, -1)


def dominant_rep(v: Vec, S, rs: RootSystem) -> Tuple[Vec, WeylWord]:
    """Mirror of :func:`antidominant_rep` with ``<u, a^vee> >= 0``."""
    return _representative(v, S, rs, +1)


def regular_dominant(S, rs: RootSystem) -> Vec:
    """Vector in the span of S with ``<v, a^vee> = 1`` for every ``a`` in S."""
    elements = tuple(S)
    if not elements:
        return (0,) * rs.rank
    m = [[rs.cartan_integer(b, a) for b in elements] for a in elements]
    coeffs = linalg.solve(m, [1] * len(elements))
    v = (0,) * rs.rank
    for c, b in zip(coeffs, elements):
        v = vadd(v, vscale(c, b))
    return v


def longest_word(S, rs: RootSystem) -> WeylWord:
    """A reduced word for the longest element of ``W_S``.

    Obtained by driving a regular dominant vector to its antidominant
    representative; the element doing so is unique.
    """
    _, word = antidominant_rep(regular_dominant(S, rs), S, rs)
    return word


def longest_involution(S, rs: RootSystem) -> Dict[Vec, Vec]:
    """Map ``phi' -> phi`` with ``w0_S(phi') = -phi`` for each ``phi'`` in S."""
    word = longest_word(S, rs)
    elements = set(tuple(S))
    out = {}
    for a in tuple(S):
        image = vneg(apply_word(word, a, rs))
        if image not in elements:
            raise AssertionError(f"longest element maps {a} to non-simple {vneg(image)}")
        out[a] = image
    return out


def weyl_order(type: LieType) -> int:
    f, l = type.family, type.rank
    if f == "A":
        return factorial(l + 1)
    if f in ("B", "C"):
        return 2 ** l * factorial(l)
    if f == "D":
        return 2 ** (l - 1) * factorial(l)
    return _EXCEPTIONAL_ORDERS[(f, l)]


def parabolic_order(S, rs: RootSystem) -> int:
    """``|W_S|`` as the product over the components of the induced diagram."""
    sub = S if isinstance(S, SubBase) else SubBase.of(rs, tuple(S))
    if not len(sub):
        return 1
    return prod(weyl_order(t) for t, _ in sub.diagram(rs).component_types())
