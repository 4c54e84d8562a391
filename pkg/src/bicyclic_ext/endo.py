"""Monoid endomorphisms of the extension over the family ``{[0), [1)}``.

Endomorphisms act on the right, so ``compose(e1, e2)`` is "first ``e1``,
then ``e2``". The five families are

* ``Alpha(k, p)``: injective, keeps the ``[1)`` layer, ``0 <= p < k``
* ``Beta(k, p)``: injective, folds ``[1)`` into ``[0)`` at offset ``0 < p < k``
* ``Gamma(k)``: forgets the layer, offset 0
* ``Delta(k)``: folds ``[1)`` into ``[0)`` at offset ``k``
* ``ZeroEndo``: everything goes to the identity
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, NamedTuple, Optional, Union

from .omega import FamilyError, Tail
from .semigroup import IDENTITY, Element, Triple, Zero, _triple, multiply, window_elements

T0 = Tail(0)
T1 = Tail(1)


def _check_int(owner: str, name: str, value: object, low: int, high: Optional[int] = None) -> None:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValueError(f"{name} must be an integer, got {value!r}")
    if value < low or (high is not None and value > high):
        span = f"{low}..{high}" if high is not None else f">= {low}"
        raise ValueError(f"{name}={value} out of range: {owner} requires {name} in {span}")


@dataclass(frozen=True, slots=True)
class Alpha:
    k: int
    p: int

    def __post_init__(self):
        _check_int("alpha", "k", self.k, 1)
        _check_int(f"alpha with k={self.k}", "p", self.p, 0, self.k - 1)

    def __str__(self):
        return f"alpha:{self.k},{self.p}"


@dataclass(frozen=True, slots=True)
class Beta:
    k: int
    p: int

    def __post_init__(self):
        _check_int("beta", "k", self.k, 2)
        _check_int(f"beta with k={self.k}", "p", self.p, 1, self.k - 1)

    def __str__(self):
        return f"beta:{self.k},{self.p}"


@dataclass(frozen=True, slots=True)
class Gamma:
    k: int

    def __post_init__(self):
        # k = 0 is the annihilating endomorphism, spelled ZERO_ENDO
        _check_int("gamma", "k", self.k, 1)

    def __str__(self):
        return f"gamma:{self.k}"


@dataclass(frozen=True, slots=True)
class Delta:
    k: int

    def __post_init__(self):
        _check_int("delta", "k", self.k, 1)

    def __str__(self):
        return f"delta:{self.k}"


@dataclass(frozen=True, slots=True)
class ZeroEndo:
    def __str__(self):
        return "zero"


ZERO_ENDO = ZeroEndo()
IDENTITY_ENDO = Alpha(1, 0)

MonoidEndo = Union[Alpha, Beta, Gamma, Delta, ZeroEndo]

GREEN_RELATIONS = ("R", "L", "H", "D", "J")

# (i,j,[0)) = b^i a^j and (i,j,[1)) = b^i c a^j
GEN_A = Triple(0, 1, T0)
GEN_B = Triple(1, 0, T0)
GEN_C = Triple(0, 0, T1)
GENERATORS = (GEN_A, GEN_B, GEN_C)


class GeneratorImages(NamedTuple):
    img_a: Element
    img_b: Element
    img_c: Element

    def __str__(self):
        return " ".join(map(str, self))


class Rejected(Exception):
    """Generator images that do not define a monoid endomorphism.

    ``pair`` is a witness ``(x, y)`` with ``(xy)e != (x)e (y)e`` when the
    homomorphism check failed, otherwise ``None``.
    """

    def __init__(self, reason: str, pair: Optional[tuple[Element, Element]] = None):
        super().__init__(reason)
        self.reason = reason
        self.pair = pair


def apply(e: MonoidEndo, x: Element) -> Element:
    if isinstance(x, Zero) or x.f not in (T0, T1):
        raise FamilyError(f"{x} is not an element of the extension over {{[0),[1)}}")
    if isinstance(e, ZeroEndo):
        return IDENTITY
    k = e.k
    i, j = x.i, x.j
    if x.f == T0:
        return _triple(k * i, k * j, T0)
    if isinstance(e, Gamma):
        return _triple(k * i, k * j, T0)
    if isinstance(e, Delta):
        return _triple(k * (i + 1), k * (j + 1), T0)
    if isinstance(e, Alpha):
        return _triple(e.p + k * i, e.p + k * j, T1)
    if isinstance(e, Beta):
        return _triple(e.p + k * i, e.p + k * j, T0)
    raise TypeError(f"not a monoid endomorphism: {e!r}")


def generator_images(e: MonoidEndo) -> GeneratorImages:
    return GeneratorImages(*(apply(e, g) for g in GENERATORS))


def read_shape(images: GeneratorImages) -> MonoidEndo:
    """Name the endomorphism family matching the generator images.

    Only the shape is inspected; whether the images actually extend to a
    homomorphism is the job of :func:`classify`.
    """
    a, b, c = images
    if not (isinstance(a, Triple) and isinstance(b, Triple) and isinstance(c, Triple)):
        raise Rejected("generator images must be nonzero elements")
    if a.i != 0 or a.f != T0 or b != Triple(a.j, 0, T0):
        raise Rejected(f"images of a, b must be (0,k,[0)) and (k,0,[0)), got {a} and {b}")
    k = a.j
    if c.i != c.j:
        raise Rejected(f"image of c must be idempotent, got {c}")
    s = c.i
    if k == 0:
        if c == IDENTITY:
            return ZERO_ENDO
        raise Rejected(f"with k=0 the image of c must be (0,0,[0)), got {c}")
    if c.f == T1:
        if s <= k - 1:
            return Alpha(k, s)
        raise Rejected(f"image of c on the [1) layer needs offset 0..{k - 1}, got {s}")
    if s == 0:
        return Gamma(k)
    if s == k:
        return Delta(k)
    if 1 <= s <= k - 1:
        return Beta(k, s)
    raise Rejected(f"image of c on the [0) layer needs offset 0..{k}, got {s}")


class WordExtension:
    """The map induced by generator images through ``b^i a^j`` and ``b^i c a^j``.

    It is always well defined because those words are normal forms; it is a
    homomorphism exactly when the images respect the monoid's relations.
    """

    def __init__(self, images: GeneratorImages):
        self.images = images
        self._pow_a = [IDENTITY]
        self._pow_b = [IDENTITY]
        self._cache: dict[Element, Element] = {}

    @staticmethod
    def _power(powers: list[Element], base: Element, n: int) -> Element:
        while len(powers) <= n:
            powers.append(multiply(powers[-1], base))
        return powers[n]

    def __call__(self, x: Element) -> Element:
        try:
            return self._cache[x]
        except KeyError:
            pass
        if isinstance(x, Zero) or x.f not in (T0, T1):
            raise FamilyError(f"{x} is not an element of the extension over {{[0),[1)}}")
        img_a, img_b, img_c = self.images
        left = self._power(self._pow_b, img_b, x.i)
        right = self._power(self._pow_a, img_a, x.j)
        if x.f == T1:
            left = multiply(left, img_c)
        y = multiply(left, right)
        self._cache[x] = y
        return y


@lru_cache(maxsize=8)
def _window_products(window: int):
    """Windowed pairs as index triples into a table of all elements they touch."""
    # products of windowed elements have indices <= 2 * window
    table = list(window_elements(2 * window))
    index = {x: n for n, x in enumerate(table)}
    elems = list(window_elements(window))
    # generator pairs first so that bad images are rejected on short relations
    firsts = [(x, y) for x in GENERATORS for y in GENERATORS]
    seen = set(firsts)
    pairs = firsts + [(x, y) for x in elems for y in elems if (x, y) not in seen]
    return table, tuple((index[x], index[y], index[multiply(x, y)]) for x, y in pairs)


def homomorphism_witness(f: Callable[[Element], Element], window: int) -> Optional[tuple[Element, Element]]:
    """First windowed pair ``(x, y)`` with ``f(xy) != f(x) f(y)``, or ``None``."""
    if f(IDENTITY) != IDENTITY:
        return (IDENTITY, IDENTITY)
    table, triples = _window_products(window)
    # generator relations first, before paying for the whole image table
    for ix, iy, ixy in triples[:len(GENERATORS) ** 2]:
        x, y = table[ix], table[iy]
        if f(table[ixy]) != multiply(f(x), f(y)):
            return (x, y)
    images = [f(x) for x in table]
    for ix, iy, ixy in triples:
        if images[ixy] != multiply(images[ix], images[iy]):
            return (table[ix], table[iy])
    return None


def classify(images: GeneratorImages, window: int = 8) -> MonoidEndo:
    """Decide which monoid endomorphism the generator images define.

    Raises :class:`Rejected` if the induced map fails the homomorphism check
    on the window, or if it passes but matches none of the five families.
    """
    if window < 2:
        raise ValueError("classification window must be at least 2")
    ext = WordExtension(images)
    pair = homomorphism_witness(ext, window)
    if pair is not None:
        x, y = pair
        raise Rejected(f"not a homomorphism: images of {x}*{y} disagree", pair)
    return read_shape(images)


def compose_generic(e1: MonoidEndo, e2: MonoidEndo) -> MonoidEndo:
    """``e1`` then ``e2``, found by pushing the generators through both maps."""
    return read_shape(GeneratorImages(*(apply(e2, apply(e1, g)) for g in GENERATORS)))


def compose(e1: MonoidEndo, e2: MonoidEndo) -> MonoidEndo:
    """``e1`` then ``e2``, by closed form where one is known."""
    if isinstance(e1, ZeroEndo) or isinstance(e2, ZeroEndo):
        return ZERO_ENDO
    k = e1.k * e2.k
    if isinstance(e1, (Gamma, Delta)) and isinstance(e2, (Gamma, Delta)):
        return type(e1)(k)
    if isinstance(e1, Alpha) and isinstance(e2, Alpha):
        return Alpha(k, e2.p + e2.k * e1.p)
    if isinstance(e1, Alpha) and isinstance(e2, Beta):
        return Beta(k, e2.p + e2.k * e1.p)
    if isinstance(e1, Beta) and isinstance(e2, (Alpha, Beta)):
        return Beta(k, e2.k * e1.p)
    # mixed injective / non-injective products
    return compose_generic(e1, e2)


def is_injective(e: MonoidEndo) -> bool:
    return isinstance(e, (Alpha, Beta))


def find_collision(e: MonoidEndo, window: int) -> Optional[tuple[Element, Element]]:
    """Two distinct windowed elements with the same image, or ``None``."""
    seen: dict[Element, Element] = {}
    for x in window_elements(window):
        y = apply(e, x)
        if y in seen:
            return (seen[y], x)
        seen[y] = x
    return None


class UnsupportedEndo(ValueError):
    pass


def _require_non_injective(e: MonoidEndo) -> None:
    if not isinstance(e, (Gamma, Delta, ZeroEndo)):
        raise UnsupportedEndo(f"{e} is injective; only gamma, delta and zero are supported here")


def green_endo(e1: MonoidEndo, e2: MonoidEndo, relation: str) -> bool:
    """Green's relations in the semigroup of non-injective monoid endomorphisms."""
    _require_non_injective(e1)
    _require_non_injective(e2)
    if relation not in GREEN_RELATIONS:
        raise ValueError(f"unknown relation {relation!r}; expected one of {', '.join(GREEN_RELATIONS)}")
    if isinstance(e1, ZeroEndo) or isinstance(e2, ZeroEndo):
        return e1 == e2
    if relation in ("R", "H"):
        return e1 == e2
    # L, D and J only see the multiplier
    return e1.k == e2.k


def iso_to_lz2xN(e: MonoidEndo) -> tuple[str, int]:
    if isinstance(e, Gamma):
        return ("c", e.k)
    if isinstance(e, Delta):
        return ("d", e.k)
    raise UnsupportedEndo(f"{e} is not a non-annihilating non-injective endomorphism")


def lz2xN_multiply(x: tuple[str, int], y: tuple[str, int]) -> tuple[str, int]:
    """Left-zero on the tag, multiplication on the integer."""
    return (x[0], x[1] * y[1])


@dataclass(frozen=True, slots=True)
class BicyclicEndo:
    """``(i, j) -> (k i, k j)``; ``k = 0`` annihilates."""

    k: int

    def __post_init__(self):
        _check_int("bicyclic endomorphism", "k", self.k, 0)


def apply_bicyclic(e: BicyclicEndo, x: tuple[int, int]) -> tuple[int, int]:
    i, j = x
    return (e.k * i, e.k * j)
