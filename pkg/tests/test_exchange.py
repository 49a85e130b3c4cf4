import pytest

from src.models.errors import ValidationError
from src.models.monomial import PolynomialRing
from src.models.orders import LEX, REVLEX_DEC
from src.models.toric import T_DEGREVLEX
from src.operation.exchange import check_l_exchange, check_sigma_exchange
from src.operation.lexsegments import (
    all_lexsegment_pairs,
    build_lexsegment,
    classify,
    final_lexsegment,
    initial_lexsegment,
)
from src.models.lexsegment import Verdict

R4 = PolynomialRing(4)


def test_l_exchange_counterexample_on_final_segment():
    # Arrange
    u1, v1 = R4.monomial((0, 3, 0, 0)), R4.monomial((1, 0, 1, 1))
    gens = final_lexsegment(v1).generators

    # Act
    report = check_l_exchange(gens, 2)

    # Assert
    assert not report.satisfied
    assert any(viol.u_factors == (u1, u1) and viol.v_factors == (v1, v1) for viol in report.violations)
    assert report.counterexample is report.violations[0]
    assert report.to_json()["satisfied"] is False


def test_l_exchange_trace_of_counterexample():
    u1, v1 = R4.monomial((0, 3, 0, 0)), R4.monomial((1, 0, 1, 1))
    report = check_l_exchange(final_lexsegment(v1).generators, 2)
    viol = next(v for v in report.violations if v.u_factors == (u1, u1))
    # единственные кандидаты: q = 1, j = 2 в каждом сомножителе
    assert set(viol.trace) == {(1, 1, 2), (2, 1, 2)}


def test_l_exchange_on_all_monomials():
    ring = PolynomialRing(3)
    report = check_l_exchange(ring.monomials_of_degree(2), 2)
    assert report.satisfied
    assert report.pairs_checked > 0


@pytest.mark.parametrize("exps", [(0, 1, 1), (1, 0, 1), (0, 0, 2)])
def test_l_exchange_on_initial_segments(exps):
    ring = PolynomialRing(3)
    assert check_l_exchange(initial_lexsegment(ring.monomial(exps)).generators, 2).satisfied


def test_l_exchange_with_alternative_term_order():
    ring = PolynomialRing(3)
    assert check_l_exchange(ring.monomials_of_degree(2), 2, T_DEGREVLEX).satisfied


def test_sigma_exchange_singleton_is_vacuous():
    ring = PolynomialRing(2)
    report = check_sigma_exchange([ring.monomial((1, 1))], REVLEX_DEC, 2)
    assert report.satisfied
    assert report.pairs_checked == 0


def test_sigma_exchange_counterexample_segment():
    assert check_sigma_exchange(final_lexsegment(R4.monomial((1, 0, 1, 1))).generators, REVLEX_DEC, 2).satisfied


def test_sigma_exchange_non_completely_instance():
    ideal = build_lexsegment(R4.monomial((1, 0, 1, 1)), R4.monomial((0, 1, 0, 2)))
    assert check_sigma_exchange(ideal.generators, REVLEX_DEC, 2).satisfied


@pytest.mark.parametrize("n, d", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_sigma_exchange_on_all_final_segments(n, d):
    ring = PolynomialRing(n)
    for v in ring.monomials_of_degree(d):
        report = check_sigma_exchange(final_lexsegment(v).generators, REVLEX_DEC, 2)
        assert report.satisfied, v


def test_l_exchange_implies_lex_sigma_exchange():
    ring = PolynomialRing(3)
    for u, v in all_lexsegment_pairs(ring, 2):
        gens = build_lexsegment(u, v).generators
        if check_l_exchange(gens, 2).satisfied:
            assert check_sigma_exchange(gens, LEX, 2).satisfied, (u, v)


def test_exchange_input_errors():
    ring = PolynomialRing(3)
    with pytest.raises(ValidationError):
        check_l_exchange([], 2)
    with pytest.raises(ValidationError):
        check_sigma_exchange([ring.variable(1), ring.monomial((1, 1, 0))], LEX, 2)
    with pytest.raises(ValidationError):
        check_l_exchange([ring.variable(1)], 0)


def test_max_violations_stops_early():
    report = check_l_exchange(final_lexsegment(R4.monomial((1, 0, 1, 1))).generators, 2, max_violations=1)
    assert len(report.violations) == 1


@pytest.mark.slow
def test_sigma_exchange_full_grid():
    for n in range(2, 5):
        ring = PolynomialRing(n)
        for d in range(2, 4):
            for v in ring.monomials_of_degree(d):
                assert check_sigma_exchange(final_lexsegment(v).generators, REVLEX_DEC, 2).satisfied
            for u, v in all_lexsegment_pairs(ring, d):
                ideal = build_lexsegment(u, v)
                if classify(ideal).verdict == Verdict.NON_COMPLETELY:
                    assert check_sigma_exchange(ideal.generators, REVLEX_DEC, 2).satisfied
