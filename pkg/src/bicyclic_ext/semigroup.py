"""Arithmetic in the bicyclic monoid and its extension over a family of tails.

Elements are ``Triple(i, j, f)`` with ``f`` a nonempty tail, plus ``ZERO``
which stands for the collapsed ideal of ``(i, j, empty)`` triples.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Union

from .omega import STUDY_FAMILY, Empty, Family, FamilyError, OmegaSet, Tail, shift_intersect


class _TripleFields(NamedTuple):
    i: int
    j: int
    f: Tail


class Triple(_TripleFields):
    __slots__ = ()

    def __new__(cls, i: int, j: int, f: Tail):
        for v in (i, j):
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValueError(f"indices must be non-negative integers, got ({i!r},{j!r})")
        if not isinstance(f, Tail):
            raise ValueError("third coordinate must be a nonempty tail; use ZERO for the ideal")
        return tuple.__new__(cls, (i, j, f))

    def __repr__(self):
        return f"Triple({self.i}, {self.j}, {self.f!r})"

    def __str__(self):
        return f"({self.i},{self.j},{self.f})"


def _triple(i: int, j: int, f: Tail) -> Triple:
    return tuple.__new__(Triple, (i, j, f))


@dataclass(frozen=True, slots=True)
class Zero:
    def __str__(self):
        return "0"


ZERO = Zero()

Element = Union[Triple, Zero]

IDENTITY = Triple(0, 0, Tail(0))

RELATIONS = ("R", "L", "H", "D")


def _make(i: int, j: int, f: OmegaSet) -> Element:
    if isinstance(f, Empty):
        return ZERO
    return _triple(i, j, f)


def check_member(x: Element, family: Family) -> None:
    if isinstance(x, Zero):
        if not family.contains_empty:
            raise FamilyError(f"0 is not an element when the family {family} has no empty set")
    elif x.f not in family:
        raise FamilyError(f"{x} has third coordinate outside the family {family}")


def multiply(a: Element, b: Element, family: Optional[Family] = None) -> Element:
    """Product of two elements; pass ``family`` to validate membership first."""
    if family is not None:
        check_member(a, family)
        check_member(b, family)
    if isinstance(a, Zero) or isinstance(b, Zero):
        return ZERO
    i1, j1, f1 = a
    i2, j2, f2 = b
    if j1 <= i2:
        return _make(i1 - j1 + i2, j2, shift_intersect(f1, j1 - i2, f2))
    return _make(i1, j1 - i2 + j2, shift_intersect(f2, i2 - j1, f1))


def multiply_bicyclic(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    k, l = a
    m, n = b
    t = min(l, m)
    return (k + m - t, l + n - t)


def inverse(a: Element) -> Element:
    if isinstance(a, Zero):
        return ZERO
    return _triple(a.j, a.i, a.f)


def is_idempotent(a: Element) -> bool:
    return multiply(a, a) == a


def natural_leq(s: Element, t: Element, family: Optional[Family] = None) -> bool:
    """``s <= t`` in the natural partial order, decided as ``s == t * (s^-1 s)``."""
    if family is not None:
        check_member(s, family)
        check_member(t, family)
    return s == multiply(t, multiply(inverse(s), s))


def green_related(a: Element, b: Element, relation: str, family: Optional[Family] = None) -> bool:
    """Green's R, L, H or D on elements, through the inverse-semigroup idempotents."""
    if family is not None:
        check_member(a, family)
        check_member(b, family)
    if relation == "R":
        return multiply(a, inverse(a)) == multiply(b, inverse(b))
    if relation == "L":
        return multiply(inverse(a), a) == multiply(inverse(b), b)
    if relation == "H":
        return green_related(a, b, "R") and green_related(a, b, "L")
    if relation == "D":
        if isinstance(a, Zero) or isinstance(b, Zero):
            return a == b
        # c = (i_b, j_a, f_a) is the only element with c^-1 c = a^-1 a and c c^-1 = b b^-1
        c = Triple(b.i, a.j, a.f)
        return green_related(a, c, "L") and green_related(c, b, "R")
    raise ValueError(f"unknown relation {relation!r}; expected one of {', '.join(RELATIONS)}")


def window_elements(window: int, family: Family = STUDY_FAMILY) -> Iterator[Element]:
    """All elements with both indices ``<= window``, in a fixed order."""
    for f in family.members:
        if isinstance(f, Empty):
            continue
        for i in range(window + 1):
            for j in range(window + 1):
                yield Triple(i, j, f)
    if family.contains_empty:
        yield ZERO
