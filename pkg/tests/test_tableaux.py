import pytest
from hypothesis import given, settings, strategies as st

from src.models.errors import DimensionError, ValidationError
from src.models.monomial import PolynomialRing, product
from src.models.tableau import SupportMultiset, Tableau
from src.operation.lexsegments import build_lexsegment
from src.operation.tableaux import (
    all_tableaux,
    brute_force_standard_tableau,
    is_standard,
    is_standard_pair,
    segment_closure_check,
    standard_representation,
    standard_tableau_from_support,
)

WORKED_ROWS = ((1, 6, 7), (1, 6, 8), (2, 5, 6), (3, 4, 4), (3, 4, 5))


def test_is_standard_pair_examples():
    assert is_standard_pair((3, 4, 4), (3, 4, 5))
    assert is_standard_pair((1, 2), (1, 2))
    assert not is_standard_pair((2, 2), (1, 3))
    # (1,3),(2,2): i=1, b_2 = 2 <= a_2 = 3
    assert is_standard_pair((1, 3), (2, 2))


def test_is_standard_pair_rejects_malformed_rows():
    with pytest.raises(ValidationError):
        is_standard_pair((2, 1), (1, 2))
    with pytest.raises(ValidationError):
        is_standard_pair((1, 2), (1, 2, 3))


def test_worked_tableau_is_standard():
    assert is_standard(Tableau(WORKED_ROWS, 8))
    assert is_standard(Tableau(((2, 3, 3),), 3))


def test_tableau_row_order_enforced():
    with pytest.raises(ValidationError):
        Tableau(((2, 2), (1, 3)), 3)


def test_standard_tableau_worked_example():
    # Arrange
    support = SupportMultiset((1, 1, 2, 3, 3, 4, 4, 4, 5, 5, 6, 6, 6, 7, 8))

    # Act
    tableau = standard_tableau_from_support(support, 5, 3, 8)

    # Assert
    assert tableau.rows == WORKED_ROWS


def test_standard_tableau_equal_rows():
    tableau = standard_tableau_from_support(SupportMultiset((1, 1, 2, 2)), 2, 2)
    assert tableau.rows == ((1, 2), (1, 2))


def test_standard_tableau_single_row():
    tableau = standard_tableau_from_support(SupportMultiset((3, 1, 2)), 1, 3)
    assert tableau.rows == ((1, 2, 3),)


def test_standard_tableau_cardinality_mismatch():
    with pytest.raises(ValidationError):
        standard_tableau_from_support(SupportMultiset((1, 2, 3)), 2, 2)


def test_standard_representation_examples():
    r2, r3 = PolynomialRing(2), PolynomialRing(3)
    assert standard_representation([r2.pure_power(1, 2), r2.pure_power(2, 2)]) == [r2.monomial((1, 1))] * 2
    assert standard_representation([r3.monomial((0, 2, 0)), r3.monomial((1, 0, 1))]) == [
        r3.monomial((1, 0, 1)), r3.monomial((0, 2, 0))]
    single = r3.monomial((1, 1, 0))
    assert standard_representation([single]) == [single]


def test_standard_representation_mixed_degrees():
    r3 = PolynomialRing(3)
    with pytest.raises(DimensionError):
        standard_representation([r3.variable(1), r3.monomial((1, 1, 0))])


@st.composite
def supports(draw):
    n = draw(st.integers(1, 5))
    d = draw(st.integers(1, 3))
    N = draw(st.integers(1, 3))
    values = draw(st.lists(st.integers(1, n), min_size=N * d, max_size=N * d))
    return SupportMultiset(tuple(values)), N, d, n


@given(supports())
@settings(max_examples=150, deadline=None)
def test_standard_tableau_is_unique_and_lex_minimal(case):
    # Arrange
    support, N, d, n = case

    # Act
    tableau = standard_tableau_from_support(support, N, d, n)
    standard = [t for t in all_tableaux(support, N, d, n) if is_standard(t)]

    # Assert: ровно одна стандартная таблица, и её T-моном минимален
    assert standard == [tableau]
    assert brute_force_standard_tableau(support, N, d, n) == tableau
    assert tableau.support() == support


@given(supports())
@settings(max_examples=100, deadline=None)
def test_rows_multiply_back_to_support(case):
    support, N, d, n = case
    ring = PolynomialRing(n)
    tableau = standard_tableau_from_support(support, N, d, n)
    assert product(tableau.row_monomials(ring)).indices() == support.values


def test_segment_closure_on_lexsegment():
    # Arrange
    ring = PolynomialRing(4)
    ideal = build_lexsegment(ring.monomial((1, 0, 1, 1)), ring.monomial((0, 1, 0, 2)))
    gens = ideal.generators

    # Act / Assert: все тройки образующих
    for i, a in enumerate(gens):
        assert segment_closure_check([a], ideal)
        for j, b in enumerate(gens[i:], start=i):
            for c in gens[j:]:
                assert segment_closure_check([a, b, c], ideal)
