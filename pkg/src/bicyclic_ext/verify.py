"""Exhaustive, window-bounded checks of the structural results.

Each suite returns a :class:`VerificationReport`. Suites take the operation
under test as a keyword argument so that a deliberately broken version can
be swapped in; a suite that cannot catch its mutant proves nothing.
"""

from __future__ import annotations

import functools
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .endo import (
    GREEN_RELATIONS,
    ZERO_ENDO,
    Alpha,
    Beta,
    Delta,
    Gamma,
    GeneratorImages,
    MonoidEndo,
    Rejected,
    T0,
    T1,
    ZeroEndo,
    apply,
    classify,
    compose,
    compose_generic,
    find_collision,
    generator_images,
    green_endo,
    is_injective,
    iso_to_lz2xN,
    lz2xN_multiply,
)
from .semigroup import IDENTITY, Triple, multiply, natural_leq, window_elements

REPORT_LIMIT = 10


@dataclass
class VerificationReport:
    suite: str
    params: dict
    checked: int = 0
    counterexamples: list[tuple[str, str, str]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def fail(self, inputs, expected, actual) -> None:
        self.counterexamples.append((str(inputs), str(expected), str(actual)))

    def to_dict(self, limit: int = REPORT_LIMIT) -> dict:
        shown = sorted(self.counterexamples)[:limit]
        return {
            "suite": self.suite,
            "params": self.params,
            "checked": self.checked,
            "counterexamples": [
                {"inputs": i, "expected": e, "actual": a} for i, e, a in shown
            ],
            "counterexample_count": len(self.counterexamples),
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }

    def to_text(self, limit: int = REPORT_LIMIT) -> str:
        status = "PASS" if self.passed else "FAIL"
        params = ", ".join(f"{k}={v}" for k, v in self.params.items())
        lines = [
            f"{self.suite}: {status}",
            f"  params: {params}",
            f"  checked: {self.checked}",
            f"  counterexamples: {len(self.counterexamples)}",
        ]
        for i, e, a in sorted(self.counterexamples)[:limit]:
            lines.append(f"    {i}: expected {e}, got {a}")
        if len(self.counterexamples) > limit:
            lines.append(f"    ... {len(self.counterexamples) - limit} more")
        lines.append(f"  elapsed: {self.elapsed * 1000:.1f} ms")
        return "\n".join(lines)


def _timed(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        report = fn(*args, **kwargs)
        report.elapsed = time.perf_counter() - start
        return report

    return wrapper


def _require(name: str, value: int, low: int) -> None:
    if value < low:
        raise ValueError(f"{name} must be at least {low}, got {value}")


def non_injective_grid(k_max: int, with_zero: bool = True) -> list[MonoidEndo]:
    """Gamma before Delta, ascending k, then zero."""
    grid: list[MonoidEndo] = [Gamma(k) for k in range(1, k_max + 1)]
    grid += [Delta(k) for k in range(1, k_max + 1)]
    if with_zero:
        grid.append(ZERO_ENDO)
    return grid


def injective_grid(k_max: int) -> list[MonoidEndo]:
    alphas = [Alpha(k, p) for k in range(1, k_max + 1) for p in range(k)]
    betas = [Beta(k, p) for k in range(2, k_max + 1) for p in range(1, k)]
    return alphas + betas


def all_endos(k_max: int) -> list[MonoidEndo]:
    return injective_grid(k_max) + non_injective_grid(k_max)


@_timed
def suite_associativity(window: int = 8, mul: Callable = multiply) -> VerificationReport:
    """``(ab)c == a(bc)`` for every windowed triple over ``{[0), [1)}``."""
    _require("window", window, 1)
    report = VerificationReport("associativity", {"window": window})
    elems = list(window_elements(window))
    n = len(elems)
    # intern elements so the memo is keyed on small ints, not tuples of tuples
    objs = list(elems)
    ids = {x: k for k, x in enumerate(objs)}

    def intern(x):
        try:
            return ids[x]
        except KeyError:
            ids[x] = len(objs)
            objs.append(x)
            return ids[x]

    memo: dict[tuple[int, int], int] = {}

    def times(u: int, v: int) -> int:
        key = (u, v)
        try:
            return memo[key]
        except KeyError:
            memo[key] = w = intern(mul(objs[u], objs[v]))
            return w

    ab = [[times(a, b) for b in range(n)] for a in range(n)]
    for a in range(n):
        row_a = ab[a]
        for b in range(n):
            ab_id = row_a[b]
            row_b = ab[b]
            for c in range(n):
                left = times(ab_id, c)
                right = times(a, row_b[c])
                if left != right:
                    report.fail(f"{elems[a]} {elems[b]} {elems[c]}", objs[left], objs[right])
    report.checked = n ** 3
    return report


@_timed
def suite_prop_2_6(k_max: int = 30, window: int = 8, apply_fn: Callable = apply) -> VerificationReport:
    """``delta_k`` is a homomorphism on every windowed pair, mixed layers included."""
    _require("k_max", k_max, 1)
    _require("window", window, 1)
    report = VerificationReport("prop2.6", {"k_max": k_max, "window": window})
    table = list(window_elements(2 * window))
    index = {x: n for n, x in enumerate(table)}
    elems = list(window_elements(window))
    triples = [(index[x], index[y], index[multiply(x, y)]) for x in elems for y in elems]
    for k in range(1, k_max + 1):
        e = Delta(k)
        images = [apply_fn(e, x) for x in table]
        for ix, iy, ixy in triples:
            lhs = images[ixy]
            rhs = multiply(images[ix], images[iy])
            if lhs != rhs:
                report.fail(f"{e} on {table[ix]}*{table[iy]}", lhs, rhs)
        report.checked += len(triples)
    return report


@_timed
def suite_thm_2_8(
    entry_bound: int = 8,
    window: int = 8,
    collision_window: int | None = None,
    classify_fn: Callable = classify,
) -> VerificationReport:
    """Enumerate generator images; valid ones must split into the five families.

    Every candidate image has both indices ``<= entry_bound`` in either layer.
    A candidate is valid when the induced map passes the homomorphism check on
    ``window``. Valid candidates must classify, reproduce their images, and be
    non-injective exactly for gamma, delta and zero (a collision on
    ``collision_window`` for those, none for alpha and beta).
    """
    _require("entry_bound", entry_bound, 2)
    _require("window", window, 2)
    if collision_window is None:
        collision_window = window + 4
    report = VerificationReport(
        "thm2.8",
        {"entry_bound": entry_bound, "window": window, "collision_window": collision_window},
    )
    cands = list(window_elements(entry_bound))
    found: dict[MonoidEndo, GeneratorImages] = {}
    tags: dict[str, int] = {}
    for a in cands:
        for b in cands:
            # the pair (a, b) must multiply to the identity; skip all c at once
            if multiply(a, b) != IDENTITY:
                report.checked += len(cands)
                continue
            for c in cands:
                report.checked += 1
                images = GeneratorImages(a, b, c)
                try:
                    e = classify_fn(images, window)
                except Rejected as exc:
                    if exc.pair is None:
                        report.fail(f"images {images}", "one of alpha/beta/gamma/delta/zero", exc.reason)
                    continue
                found[e] = images
                tag = "Zero" if isinstance(e, ZeroEndo) else type(e).__name__
                tags[tag] = tags.get(tag, 0) + 1
                if generator_images(e) != images:
                    report.fail(f"images {images}", images, generator_images(e))
                collision = find_collision(e, collision_window)
                if is_injective(e) and collision is not None:
                    report.fail(f"{e} injectivity", "no collision", collision)
                if not is_injective(e) and collision is None:
                    report.fail(f"{e} injectivity", "a collision", "none")
    # every endomorphism whose generator images fit the bound must have been found
    for e in all_endos(entry_bound):
        if e not in found and all(max(x.i, x.j) <= entry_bound for x in generator_images(e)):
            report.fail(f"{e} completeness", "found valid", "rejected")
    report.params["valid"] = len(found)
    report.params["tags"] = dict(sorted(tags.items()))
    return report


THM_2_9_CASES = (
    ("gamma*gamma", Gamma, Gamma, Gamma),
    ("gamma*delta", Gamma, Delta, Gamma),
    ("delta*gamma", Delta, Gamma, Delta),
    ("delta*delta", Delta, Delta, Delta),
)


@_timed
def suite_thm_2_9(k_max: int = 30, compose_fn: Callable = compose) -> VerificationReport:
    """The four products of gamma and delta, against generator-image composition."""
    _require("k_max", k_max, 2)
    report = VerificationReport("thm2.9", {"k_max": k_max})
    for name, left, right, result in THM_2_9_CASES:
        for k1 in range(1, k_max + 1):
            for k2 in range(1, k_max + 1):
                e1, e2 = left(k1), right(k2)
                got = compose_fn(e1, e2)
                oracle = compose_generic(e1, e2)
                stated = result(k1 * k2)
                report.checked += 1
                if got != oracle or got != stated:
                    report.fail(f"{name} {e1} {e2}", f"{stated} (generic {oracle})", got)
    return report


def _intro_stated(e1: MonoidEndo, e2: MonoidEndo) -> MonoidEndo:
    k = e1.k * e2.k
    if isinstance(e1, Alpha) and isinstance(e2, Alpha):
        return Alpha(k, e2.p + e2.k * e1.p)
    if isinstance(e1, Alpha):
        return Beta(k, e2.p + e2.k * e1.p)
    return Beta(k, e2.k * e1.p)


@_timed
def suite_intro_products(k_max: int = 15, compose_fn: Callable = compose) -> VerificationReport:
    """Products of the injective endomorphisms alpha and beta."""
    _require("k_max", k_max, 2)
    report = VerificationReport("intro", {"k_max": k_max})
    grid = injective_grid(k_max)
    for e1 in grid:
        for e2 in grid:
            got = compose_fn(e1, e2)
            oracle = compose_generic(e1, e2)
            stated = _intro_stated(e1, e2)
            report.checked += 1
            if got != oracle or got != stated:
                report.fail(f"{e1} {e2}", f"{stated} (generic {oracle})", got)
    return report


class _Witnesses:
    """Green's relations on a grid of non-injective endomorphisms, by search.

    Factors range over gamma/delta with multiplier ``<= factor_bound``, zero,
    and the adjoined identity (represented by taking the element itself).
    """

    def __init__(self, grid: list[MonoidEndo], factor_bound: int, compose_fn: Callable = compose):
        factors = non_injective_grid(factor_bound)
        self.grid = grid
        self.right = {e: {e} | {compose_fn(e, x) for x in factors} for e in grid}
        self.left = {e: {e} | {compose_fn(x, e) for x in factors} for e in grid}
        self.ideal = {}
        for e in grid:
            two_sided = set(self.left[e])
            for l in self.left[e]:
                two_sided.update(compose_fn(l, y) for y in factors)
            self.ideal[e] = two_sided

    def related(self, e1: MonoidEndo, e2: MonoidEndo, relation: str) -> bool:
        if relation == "R":
            return e1 in self.right[e2] and e2 in self.right[e1]
        if relation == "L":
            return e1 in self.left[e2] and e2 in self.left[e1]
        if relation == "H":
            return self.related(e1, e2, "R") and self.related(e1, e2, "L")
        if relation == "D":
            return any(self.related(e1, c, "L") and self.related(c, e2, "R") for c in self.grid)
        if relation == "J":
            return e1 in self.ideal[e2] and e2 in self.ideal[e1]
        raise ValueError(relation)


@_timed
def suite_thm_2_11(k_max: int = 12, green_fn: Callable = green_endo) -> VerificationReport:
    """Closed-form Green's relations against ideal-membership witness search."""
    _require("k_max", k_max, 2)
    factor_bound = k_max * k_max
    report = VerificationReport(
        "thm2.11",
        {
            "k_max": k_max,
            "factor_bound": factor_bound,
            # zero's singleton classes are checked in the same grid
            "includes_zero": True,
        },
    )
    grid = non_injective_grid(k_max)
    wit = _Witnesses(grid, factor_bound)
    for rel in GREEN_RELATIONS:
        for e1 in grid:
            for e2 in grid:
                closed = green_fn(e1, e2, rel)
                searched = wit.related(e1, e2, rel)
                report.checked += 1
                if closed != searched:
                    report.fail(f"{rel}({e1},{e2})", searched, closed)
    for e1 in grid:
        for e2 in grid:
            report.checked += 1
            if green_fn(e1, e2, "H") != (e1 == e2):
                report.fail(f"H({e1},{e2}) is equality", e1 == e2, green_fn(e1, e2, "H"))
            if wit.related(e1, e2, "D") != wit.related(e1, e2, "J"):
                report.fail(f"D=J at ({e1},{e2})", wit.related(e1, e2, "D"), wit.related(e1, e2, "J"))
            if ZERO_ENDO in (e1, e2) and e1 != e2:
                for rel in GREEN_RELATIONS:
                    if green_fn(e1, e2, rel):
                        report.fail(f"{rel}({e1},{e2}) zero class", False, True)
    return report


@_timed
def suite_prop_2_10(k_max: int = 20, iso_fn: Callable = iso_to_lz2xN, compose_fn: Callable = compose) -> VerificationReport:
    """The map gamma_k -> (c,k), delta_k -> (d,k) is a bijective homomorphism."""
    _require("k_max", k_max, 2)
    report = VerificationReport("prop2.10", {"k_max": k_max})
    grid = non_injective_grid(k_max, with_zero=False)
    images = {e: iso_fn(e) for e in grid}
    target = {(t, k) for t in ("c", "d") for k in range(1, k_max + 1)}
    if len(set(images.values())) != len(grid):
        report.fail("injectivity", len(grid), len(set(images.values())))
    if set(images.values()) != target:
        report.fail("image", sorted(target), sorted(set(images.values())))
    for e1 in grid:
        for e2 in grid:
            lhs = iso_fn(compose_fn(e1, e2))
            rhs = lz2xN_multiply(images[e1], images[e2])
            report.checked += 1
            if lhs != rhs:
                report.fail(f"{e1} {e2}", rhs, lhs)
    return report


@_timed
def suite_idempotents(k_max: int = 30, compose_fn: Callable = compose) -> VerificationReport:
    """Only gamma_1 and delta_1 square to themselves."""
    _require("k_max", k_max, 1)
    report = VerificationReport("idempotents", {"k_max": k_max})
    expected = {Gamma(1), Delta(1)}
    for e in non_injective_grid(k_max, with_zero=False):
        report.checked += 1
        idem = compose_fn(e, e) == e
        if idem != (e in expected):
            report.fail(e, e in expected, idem)
    return report


ORDER_CHAIN = (Triple(1, 1, T0), Triple(0, 0, T1), Triple(0, 0, T0))


@_timed
def suite_lemmas(window: int = 10, k_max: int = 10, apply_fn: Callable = apply) -> VerificationReport:
    """Desk-scale corollaries about non-injective endomorphisms and the order chain.

    * every non-injective endomorphism lands in the ``[0)`` layer
    * a collision inside one layer forces the annihilating endomorphism
    * ``(1,1,[0)) <= (0,0,[1)) <= (0,0,[0))`` and every endomorphism keeps it a chain
    """
    _require("window", window, 2)
    _require("k_max", k_max, 1)
    report = VerificationReport("lemmas", {"window": window, "k_max": k_max})
    elems = list(window_elements(window))
    for e in non_injective_grid(k_max):
        for x in elems:
            report.checked += 1
            y = apply_fn(e, x)
            if y.f != T0:
                report.fail(f"{e} on {x}", "[0) layer", y)
    for e in all_endos(k_max):
        seen: dict = {}
        for x in elems:
            report.checked += 1
            key = (apply_fn(e, x), x.f)
            if key in seen and not isinstance(e, ZeroEndo):
                report.fail(f"{e} collapses {seen[key]} and {x}", "annihilating", e)
            seen.setdefault(key, x)
    for s, t in zip(ORDER_CHAIN, ORDER_CHAIN[1:]):
        report.checked += 1
        if not natural_leq(s, t):
            report.fail(f"{s} <= {t}", True, False)
    for e in all_endos(k_max):
        chain = [apply_fn(e, x) for x in ORDER_CHAIN]
        for s, t in zip(chain, chain[1:]):
            report.checked += 1
            if not natural_leq(s, t):
                report.fail(f"{e} image of chain {s} <= {t}", True, False)
    return report


@_timed
def suite_order_preservation(window: int = 8, k_max: int = 6, apply_fn: Callable = apply) -> VerificationReport:
    """``x <= y`` implies ``(x)e <= (y)e`` for every endomorphism with ``k <= k_max``."""
    _require("window", window, 1)
    _require("k_max", k_max, 1)
    report = VerificationReport("order", {"window": window, "k_max": k_max})
    elems = list(window_elements(window))
    below = [(x, y) for x in elems for y in elems if natural_leq(x, y)]
    report.params["comparable_pairs"] = len(below)
    for e in all_endos(k_max):
        for x, y in below:
            report.checked += 1
            ex, ey = apply_fn(e, x), apply_fn(e, y)
            if not natural_leq(ex, ey):
                report.fail(f"{e} on {x} <= {y}", True, f"{ex} not <= {ey}")
    return report


# name -> (suite, {cli flag: parameter name})
SUITES: dict[str, tuple[Callable[..., VerificationReport], dict[str, str]]] = {
    "assoc": (suite_associativity, {"window": "window"}),
    "prop2.6": (suite_prop_2_6, {"window": "window", "kmax": "k_max"}),
    "thm2.8": (suite_thm_2_8, {"window": "window", "kmax": "entry_bound"}),
    "thm2.9": (suite_thm_2_9, {"kmax": "k_max"}),
    "intro": (suite_intro_products, {"kmax": "k_max"}),
    "thm2.11": (suite_thm_2_11, {"kmax": "k_max"}),
    "prop2.10": (suite_prop_2_10, {"kmax": "k_max"}),
    "idempotents": (suite_idempotents, {"kmax": "k_max"}),
    "lemmas": (suite_lemmas, {"window": "window", "kmax": "k_max"}),
    "order": (suite_order_preservation, {"window": "window", "kmax": "k_max"}),
}


def run_suite(name: str, window: int | None = None, kmax: int | None = None) -> VerificationReport:
    try:
        fn, flags = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}") from None
    kwargs = {}
    for flag, value in (("window", window), ("kmax", kmax)):
        if value is not None and flag in flags:
            kwargs[flags[flag]] = value
    return fn(**kwargs)


def iter_suites(window: int | None = None, kmax: int | None = None) -> Iterator[VerificationReport]:
    for name in SUITES:
        yield run_suite(name, window, kmax)
