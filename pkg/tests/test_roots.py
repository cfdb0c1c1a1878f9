from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apsums.classical import bernoulli_number, bernoulli_poly, euler_poly
from apsums.errors import DomainError, HypothesisError
from apsums.poly import Poly, poly_eval, squarefree_decompose
from apsums.roots import (
    GOLDEN_QUADRATIC,
    admissible_bernoulli_factor,
    analyze_roots,
    as_poly_in_x2_minus_x,
    check_lemma3,
    check_lemma4,
    check_lemma5_rational,
    check_lemma6,
    default_bernoulli_shifts,
)

X2_MINUS_X = Poly((0, -1, 1))
B6_SHIFTED = bernoulli_poly(6) - bernoulli_number(6)


def test_b6_shift_factorization():
    # x^2 (x-1)^2 (x^2 - x - 1/2), expanded by hand
    expected = X2_MINUS_X**2 * Poly((F(-1, 2), -1, 1))
    assert B6_SHIFTED == expected
    assert squarefree_decompose(B6_SHIFTED).expand() == expected


def test_analyze_visible_square():
    rep = analyze_roots(X2_MINUS_X**2)
    assert (rep.distinct_roots, rep.odd_multiplicity_roots, rep.simple_roots) == (2, 0, 0)
    assert rep.multiple_factor == X2_MINUS_X


def test_analyze_b6_shift():
    rep = analyze_roots(B6_SHIFTED)
    assert (rep.distinct_roots, rep.odd_multiplicity_roots, rep.simple_roots) == (4, 2, 2)


def test_analyze_squarefree():
    p = bernoulli_poly(9)
    rep = analyze_roots(p)
    assert rep.distinct_roots == rep.odd_multiplicity_roots == rep.simple_roots == 9
    assert rep.multiple_factor is None


def test_analyze_rejects_constants():
    with pytest.raises(DomainError):
        analyze_roots(Poly.constant(3))
    with pytest.raises(DomainError):
        analyze_roots(Poly())


def test_coprime_counts():
    # x^1 (x-1)^2 (x-2)^3 (x-3)^6
    p = Poly((0, 1)) * Poly((-1, 1)) ** 2 * Poly((-2, 1)) ** 3 * Poly((-3, 1)) ** 6
    rep = analyze_roots(p, primes=(2, 3, 5))
    assert rep.coprime_counts == {2: 2, 3: 2, 5: 4}
    assert rep.odd_multiplicity_roots == 2
    assert rep.simple_roots == 1


factor_lists = st.lists(
    st.tuples(st.fractions(min_value=-5, max_value=5, max_denominator=4), st.integers(1, 6)),
    min_size=1,
    max_size=5,
    unique_by=lambda t: t[0],
)


@settings(max_examples=50)
@given(factor_lists, st.sampled_from([2, 3, 5, 7]))
def test_report_invariants(factors, ell):
    p = Poly.constant(1)
    for r, m in factors:
        p = p * Poly((-r, 1)) ** m
    rep = analyze_roots(p, primes=(ell,))
    assert rep.simple_roots <= rep.odd_multiplicity_roots <= rep.distinct_roots
    assert rep.distinct_roots == len(factors)
    # parts split by gcd(mult, ell) partition the distinct roots
    divisible = sum(d for m, d in rep.multiplicities.items() if m % ell == 0)
    assert rep.coprime_counts[ell] + divisible == rep.distinct_roots
    assert rep.odd_multiplicity_roots == sum(1 for _, m in factors if m % 2)


# -- Bernoulli multiple factors -------------------------------------------------


def test_lemma3_examples():
    rows = {r.k: r for r in check_lemma3(12)}
    for k in (1, 3, 12):
        assert rows[k].passed and rows[k].multiple_factor is None


def test_lemma3_odd_k_squarefree_to_40():
    for r in check_lemma3(40):
        assert r.passed
        if r.k % 2:
            assert r.multiple_factor is None


def test_lemma3_rejects_bad_kmax():
    with pytest.raises(HypothesisError):
        check_lemma3(0)


def test_x2_minus_x_expansion():
    q = Poly((-3, -1, 1))  # x^2 - x - 3
    assert as_poly_in_x2_minus_x(q * Poly((-1, -1, 1))) == Poly((3, -4, 1))
    assert as_poly_in_x2_minus_x(Poly((0, 1))) is None


@pytest.mark.parametrize(
    "m, ok",
    [
        (Poly((-1, -1, 1)), True),  # beta = 1
        (Poly((-3, -1, 1)) * Poly((-5, -1, 1)), True),  # beta = 3, 5
        (Poly((-2, -1, 1)), False),  # beta even
        (Poly((1, -1, 1)), False),  # beta negative
        (Poly((F(-1, 2), -1, 1)), False),  # beta not an integer
        (Poly((-1, 1, 1)), False),  # x^2 + x - 1, wrong shape
        (Poly((-1, 1)), False),  # odd degree
    ],
)
def test_admissible_bernoulli_factor(m, ok):
    assert admissible_bernoulli_factor(m) is ok


# -- Euler multiple factors -------------------------------------------------------


def test_lemma6_examples():
    rows = {r.k: r for r in check_lemma6(40)}
    assert rows[5].passed and rows[5].multiple_factor == GOLDEN_QUADRATIC
    assert rows[6].passed and rows[6].multiple_factor is None
    assert rows[1].passed and rows[1].multiple_factor is None
    for k, r in rows.items():
        assert r.passed
        if k % 2 == 0:
            assert r.multiple_factor is None


# -- shifted Bernoulli / Euler ----------------------------------------------------


def test_lemma4_examples():
    (r,) = check_lemma4(5, [0])
    assert r.counts["odd"] == 5 and r.passed
    (r,) = check_lemma4(3, [0])
    assert r.counts["odd"] == 3 and r.passed
    shift = -poly_eval(bernoulli_poly(7), F(1, 3))
    (r,) = check_lemma4(7, [shift])
    assert r.passed


def test_lemma4_shift_forces_rational_root():
    shift = -poly_eval(bernoulli_poly(7), F(1, 3))
    assert poly_eval(bernoulli_poly(7) + shift, F(1, 3)) == 0


@pytest.mark.parametrize("k", [-1, 2, 4, 6])
def test_lemma4_hypothesis_range(k):
    with pytest.raises(HypothesisError):
        check_lemma4(k)


def test_lemma4_exclusion_witnesses():
    assert analyze_roots(bernoulli_poly(4) + F(1, 30)).odd_multiplicity_roots == 0
    assert analyze_roots(B6_SHIFTED).odd_multiplicity_roots == 2


def test_default_shift_set_contents():
    shifts = default_bernoulli_shifts(8)
    for s in (0, F(1, 2), F(-1, 2), 1, -1, F(1, 3), F(-1, 3)):
        assert s in shifts
    assert -poly_eval(bernoulli_poly(8), F(1, 4)) in shifts
    assert len(shifts) == len(set(shifts))


def test_lemma5_examples():
    (r,) = check_lemma5_rational(7, [0])
    assert r.passed and r.counts["simple"] >= 3
    (r,) = check_lemma5_rational(8, [F(1, 2)])
    assert r.passed
    (r,) = check_lemma5_rational(7, [-poly_eval(euler_poly(7), 0)])
    assert r.passed


def test_lemma5_hypothesis_range():
    with pytest.raises(HypothesisError):
        check_lemma5_rational(6)


def test_lemma_record_json():
    (r,) = check_lemma4(5, [F(1, 2)])
    js = r.to_json()
    assert js["s"] == "1/2" and js["verdict"] == "PASS" and js["k"] == 5
    assert "multiple_factor" not in js
    js6 = check_lemma6(5)[-1].to_json()
    assert js6["multiple_factor"] == "x^2 - x - 1"
