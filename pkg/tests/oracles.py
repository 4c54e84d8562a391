"""Independent reference computations used only by the tests.

Sets are finite windows of omega (``frozenset`` of ints), words are strings
rewritten by deleting ``pq``. None of this goes through the library's
tail arithmetic or its fold-based normalizer.
"""

from bicyclic_ext.omega import Tail
from bicyclic_ext.semigroup import Triple

UNIVERSE = 64


def as_set(f, universe=UNIVERSE):
    return frozenset(x for x in range(universe + 1) if x in f)


def shift(s, n):
    return frozenset(x + n for x in s)


def from_set(s):
    """Back to a tail, asserting the set really is one (on the window)."""
    if not s:
        return None
    start = min(s)
    assert s == frozenset(range(start, max(s) + 1)), f"{sorted(s)} is not an interval"
    return Tail(start)


def shift_intersect_pointwise(f1, n, f2, universe=UNIVERSE):
    """``f2 & (n + f1)`` on ``0..universe - |n|``, where truncation cannot bite."""
    upto = universe - abs(n)
    s = as_set(f2, universe) & shift(as_set(f1, universe), n)
    return frozenset(x for x in s if x <= upto)


def multiply_pointwise(a, b):
    """The two-case product with third coordinates as explicit finite sets."""
    i1, j1, f1 = a
    i2, j2, f2 = b
    s1, s2 = as_set(f1), as_set(f2)
    if j1 <= i2:
        i, j, s = i1 - j1 + i2, j2, shift(s1, j1 - i2) & s2
    else:
        i, j, s = i1, j1 - i2 + j2, s1 & shift(s2, i2 - j1)
    # drop the truncation artefacts at the top of the window
    s = frozenset(x for x in s if x <= UNIVERSE - abs(j1 - i2))
    return Triple(i, j, from_set(s))


def rewrite_word(word):
    """Delete ``pq`` factors until none remain; the result is ``q^k p^l``."""
    while "pq" in word:
        word = word.replace("pq", "", 1)
    k = len(word) - len(word.lstrip("q"))
    assert word == "q" * k + "p" * (len(word) - k)
    return (k, len(word) - k)


def omega_closed_bruteforce(members):
    sets = {as_set(f) for f in members}
    bound = max((f.start for f in members if isinstance(f, Tail)), default=0) + 2
    for f1 in members:
        for f2 in members:
            for n in range(bound + 1):
                s = as_set(f1) & shift(as_set(f2), -n)
                s = frozenset(x for x in s if x <= UNIVERSE - n)
                if not any(frozenset(x for x in t if x <= UNIVERSE - n) == s for t in sets):
                    return False
    return True
