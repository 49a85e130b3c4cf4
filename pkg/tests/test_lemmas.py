import random

import pytest

from src.models.monomial import PolynomialRing
from src.operation.lemmas import (
    check_last_factor_lemma,
    check_n_plus_one_lemma,
    check_x1d_lemma,
    check_xn_u1_lemma,
    random_monomial,
    run_lemma_suite,
)

R3 = PolynomialRing(3)


def test_x1d_lemma_not_applicable_to_non_standard_product():
    outcome = check_x1d_lemma([R3.pure_power(1, 2), R3.pure_power(2, 2)])
    assert not outcome.applicable


def test_x1d_lemma_on_standard_product():
    outcome = check_x1d_lemma([R3.monomial((1, 0, 1)), R3.monomial((0, 2, 0))])
    assert outcome.applicable
    assert outcome.holds


def test_shift_lemmas_need_x1():
    factors = [R3.monomial((0, 1, 1)), R3.monomial((0, 0, 2))]
    assert not check_xn_u1_lemma(factors).applicable
    assert not check_last_factor_lemma(factors).applicable


def test_shift_lemmas_small_case():
    # x1^2 x2 x3 · x3 = x1 · (x1 x3)(x2 x3)
    factors = [R3.monomial((1, 1, 0)), R3.monomial((1, 0, 1))]
    assert check_xn_u1_lemma(factors).holds
    assert check_last_factor_lemma(factors).holds


def test_n_plus_one_lemma_filters_hypothesis():
    # ν_1(x1^2) > 1: гипотеза не выполнена
    outcome = check_n_plus_one_lemma([R3.pure_power(1, 2)], R3.pure_power(3, 2))
    assert not outcome.applicable


def test_n_plus_one_lemma_applicable_case():
    outcome = check_n_plus_one_lemma([R3.monomial((1, 1, 0))], R3.monomial((0, 1, 1)))
    assert outcome.applicable
    assert outcome.holds


def test_random_monomial_respects_bounds():
    rng = random.Random(7)
    for _ in range(50):
        m = random_monomial(rng, R3, 3, low=2)
        assert m.degree == 3
        assert m.nu(1) == 0


def test_lemma_suite_small():
    # Act
    results = run_lemma_suite(cases=150, seed=1)

    # Assert
    assert len(results) == 4
    for r in results:
        assert r.ok, (r.lemma, r.violations[:3])
        assert r.applicable > 0


def test_lemma_suite_is_deterministic():
    a = run_lemma_suite(cases=30, seed=5)
    b = run_lemma_suite(cases=30, seed=5)
    assert [(r.lemma, r.applicable, r.attempts) for r in a] == [(r.lemma, r.applicable, r.attempts) for r in b]


@pytest.mark.slow
def test_lemma_suite_full():
    results = run_lemma_suite(cases=1000, seed=0)
    assert all(r.ok and r.applicable == 1000 for r in results)
