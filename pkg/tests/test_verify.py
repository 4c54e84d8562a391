"""Each suite passes on the real operations and fails on one documented mutant."""

import pytest

from bicyclic_ext.endo import (
    T0,
    T1,
    Alpha,
    Delta,
    Gamma,
    apply,
    classify,
    compose,
    green_endo,
    iso_to_lz2xN,
)
from bicyclic_ext.omega import shift_intersect
from bicyclic_ext.semigroup import Triple, _make, multiply
from bicyclic_ext.verify import (
    SUITES,
    VerificationReport,
    run_suite,
    suite_associativity,
    suite_idempotents,
    suite_intro_products,
    suite_lemmas,
    suite_order_preservation,
    suite_prop_2_10,
    suite_prop_2_6,
    suite_thm_2_11,
    suite_thm_2_8,
    suite_thm_2_9,
)


# mutants ---------------------------------------------------------------

def mul_wrong_side(a, b):
    # second branch intersects on the wrong factor
    i1, j1, f1 = a
    i2, j2, f2 = b
    if j1 <= i2:
        return multiply(a, b)
    return _make(i1, j1 - i2 + j2, shift_intersect(f1, i2 - j1, f2))


def delta_one_sided_shift(e, x):
    # the +1 kept on i but dropped on j
    if isinstance(e, Delta) and x.f == T1:
        return Triple(e.k * (x.i + 1), e.k * x.j, T0)
    return apply(e, x)


def classify_delta_as_gamma(images, window):
    e = classify(images, window)
    return Gamma(e.k) if isinstance(e, Delta) else e


def compose_delta_gamma_to_gamma(e1, e2):
    if isinstance(e1, Delta) and isinstance(e2, Gamma):
        return Gamma(e1.k * e2.k)
    return compose(e1, e2)


def compose_alpha_swapped(e1, e2):
    if isinstance(e1, Alpha) and isinstance(e2, Alpha):
        return Alpha(e1.k * e2.k, (e1.p + e1.k * e2.p) % (e1.k * e2.k))
    return compose(e1, e2)


def green_r_ignores_tag(e1, e2, relation):
    if relation == "R" and not isinstance(e1, type(e2)) and hasattr(e1, "k") and hasattr(e2, "k"):
        return e1.k == e2.k
    return green_endo(e1, e2, relation)


def iso_all_c(e):
    return ("c", iso_to_lz2xN(e)[1])


def compose_gamma_idempotent(e1, e2):
    if isinstance(e1, Gamma) and isinstance(e2, Gamma):
        return e1
    return compose(e1, e2)


def gamma_keeps_layer(e, x):
    if isinstance(e, Gamma) and x.f == T1:
        return Triple(e.k * x.i, e.k * x.j, T1)
    return apply(e, x)


def delta_double_shift(e, x):
    if isinstance(e, Delta) and x.f == T1:
        return Triple(e.k * (x.i + 2), e.k * (x.j + 2), T0)
    return apply(e, x)


CASES = [
    ("assoc", lambda **kw: suite_associativity(window=3, **kw), {"mul": mul_wrong_side}),
    ("prop2.6", lambda **kw: suite_prop_2_6(k_max=3, window=4, **kw), {"apply_fn": delta_one_sided_shift}),
    ("thm2.8", lambda **kw: suite_thm_2_8(entry_bound=3, window=3, **kw), {"classify_fn": classify_delta_as_gamma}),
    ("thm2.9", lambda **kw: suite_thm_2_9(k_max=4, **kw), {"compose_fn": compose_delta_gamma_to_gamma}),
    ("intro", lambda **kw: suite_intro_products(k_max=4, **kw), {"compose_fn": compose_alpha_swapped}),
    ("thm2.11", lambda **kw: suite_thm_2_11(k_max=3, **kw), {"green_fn": green_r_ignores_tag}),
    ("prop2.10", lambda **kw: suite_prop_2_10(k_max=4, **kw), {"iso_fn": iso_all_c}),
    ("idempotents", lambda **kw: suite_idempotents(k_max=4, **kw), {"compose_fn": compose_gamma_idempotent}),
    ("lemmas", lambda **kw: suite_lemmas(window=3, k_max=3, **kw), {"apply_fn": gamma_keeps_layer}),
    ("order", lambda **kw: suite_order_preservation(window=3, k_max=3, **kw), {"apply_fn": delta_double_shift}),
]


def test_every_suite_has_a_mutant():
    assert sorted(name for name, _, _ in CASES) == sorted(SUITES)


@pytest.mark.parametrize("name,suite,mutant", CASES, ids=[c[0] for c in CASES])
def test_suite_passes(name, suite, mutant):
    report = suite()
    assert report.passed, report.to_text()
    assert report.checked > 0


@pytest.mark.parametrize("name,suite,mutant", CASES, ids=[c[0] for c in CASES])
def test_suite_catches_mutant(name, suite, mutant):
    report = suite(**mutant)
    assert not report.passed


def test_counts():
    assert suite_associativity(window=1).checked == 8 ** 3
    assert suite_associativity(window=2).passed
    assert suite_prop_2_6(k_max=1, window=1).passed
    assert suite_thm_2_9(k_max=30).checked == 4 * 30 ** 2
    assert suite_prop_2_10(k_max=20).checked == (2 * 20) ** 2


def test_generator_image_tags_small():
    report = suite_thm_2_8(entry_bound=3, window=3)
    assert report.params["tags"] == {"Alpha": 6, "Beta": 3, "Delta": 3, "Gamma": 3, "Zero": 1}


def test_green_suite_metadata():
    report = suite_thm_2_11(k_max=3)
    assert report.params["includes_zero"] is True
    assert report.params["factor_bound"] == 9


def strip_time(d):
    return {k: v for k, v in d.items() if k != "elapsed_ms"}


@pytest.mark.parametrize("name", ["assoc", "thm2.9", "lemmas"])
def test_deterministic(name):
    a = run_suite(name, window=3, kmax=4).to_dict()
    b = run_suite(name, window=3, kmax=4).to_dict()
    assert strip_time(a) == strip_time(b)


def test_mutant_report_deterministic():
    a = suite_thm_2_9(k_max=5, compose_fn=compose_delta_gamma_to_gamma).to_dict()
    b = suite_thm_2_9(k_max=5, compose_fn=compose_delta_gamma_to_gamma).to_dict()
    assert strip_time(a) == strip_time(b)


def test_truncation():
    report = VerificationReport("demo", {"n": 1})
    for n in reversed(range(15)):
        report.fail(f"case {n:02d}", "x", "y")
    d = report.to_dict()
    assert len(d["counterexamples"]) == 10
    assert d["counterexample_count"] == 15
    assert d["counterexamples"][0]["inputs"] == "case 00"
    assert set(d) >= {"suite", "params", "checked", "counterexamples", "elapsed_ms"}
    text = report.to_text()
    assert "FAIL" in text and "5 more" in text


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")


def test_parameter_guards():
    with pytest.raises(ValueError):
        suite_associativity(window=0)
    with pytest.raises(ValueError):
        suite_thm_2_8(entry_bound=1)
