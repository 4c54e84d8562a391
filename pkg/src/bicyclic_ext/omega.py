"""Inductive subsets of omega and omega-closed families of them.

A nonempty inductive subset of omega is always a tail ``[n) = {x >= n}``,
so the only values we ever need are ``Tail(n)`` and ``EMPTY``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Union


class _TailFields(NamedTuple):
    start: int


class Tail(_TailFields):
    """The tail ``[start) = {x in omega : x >= start}``."""

    __slots__ = ()

    def __new__(cls, start: int):
        if not isinstance(start, int) or isinstance(start, bool) or start < 0:
            raise ValueError(f"tail index must be a non-negative integer, got {start!r}")
        return tuple.__new__(cls, (start,))

    def __contains__(self, x: int) -> bool:
        return x >= self.start

    def __repr__(self):
        return f"Tail({self.start})"

    def __str__(self):
        return f"[{self.start})"


def _tail(start: int) -> Tail:
    # unchecked constructor for hot paths
    return tuple.__new__(Tail, (start,))


@dataclass(frozen=True, slots=True)
class Empty:
    def __contains__(self, x: int) -> bool:
        return False

    def __str__(self):
        return "empty"


EMPTY = Empty()

OmegaSet = Union[Tail, Empty]


def sort_key(f: OmegaSet) -> int:
    return -1 if isinstance(f, Empty) else f.start


def shift_intersect(f1: OmegaSet, n: int, f2: OmegaSet) -> OmegaSet:
    """Return ``f2 & (n + f1)``; the shift ``n`` may be negative.

    The shift happens in Z, but ``f2`` is a subset of omega, so the
    intersection of two tails is ``[max(b, a + n))`` with a non-negative index.
    """
    if isinstance(f1, Empty) or isinstance(f2, Empty):
        return EMPTY
    start = f1.start + n
    if start <= f2.start:
        return f2
    if n == 0:
        return f1
    return _tail(start)


def is_omega_closed(candidate: Iterable[OmegaSet]) -> bool:
    """Check ``F1 & (-n + F2) in candidate`` for all members and all ``n >= 0``.

    With tail indices bounded by M, any shift ``n > M`` makes ``-n + F2``
    contain all of omega, so ``F1 & (-n + F2) = F1``. Checking
    ``n in 0..M`` is therefore enough.
    """
    members = set(candidate)
    bound = max((f.start for f in members if isinstance(f, Tail)), default=0)
    for f1 in members:
        for f2 in members:
            for n in range(bound + 1):
                if shift_intersect(f2, -n, f1) not in members:
                    return False
    return True


class FamilyError(ValueError):
    """Raised for families that are not omega-closed or for elements outside a family."""


@dataclass(frozen=True)
class Family:
    """A finite omega-closed family of inductive sets, stored sorted and duplicate-free."""

    members: tuple[OmegaSet, ...]

    def __init__(self, members: Iterable[OmegaSet]):
        unique = tuple(sorted(set(members), key=sort_key))
        if not unique:
            raise FamilyError("a family needs at least one member")
        if not is_omega_closed(unique):
            raise FamilyError(f"family {{{','.join(map(str, unique))}}} is not omega-closed")
        # up to isomorphism every family of inductive sets can be taken to contain [0)
        if Tail(0) not in unique:
            raise FamilyError("family must contain [0)")
        object.__setattr__(self, "members", unique)

    @property
    def contains_empty(self) -> bool:
        return EMPTY in self.members

    @property
    def tails(self) -> tuple[Tail, ...]:
        return tuple(f for f in self.members if isinstance(f, Tail))

    def __contains__(self, f: object) -> bool:
        return f in self.members

    def __str__(self):
        return "{" + ",".join(map(str, self.members)) + "}"


STUDY_FAMILY = Family([Tail(0), Tail(1)])
