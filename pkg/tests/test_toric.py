import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from src.models.errors import DimensionError, KernelError, ValidationError
from src.models.monomial import PolynomialRing
from src.models.toric import T_DEGREVLEX, T_LEX, MixedMonomial, ProductOrder, ToricBinomial, TVariable
from src.operation.lexsegments import build_lexsegment
from src.operation.tableaux import standard_representation
from src.operation.toric import (
    count_irreducible,
    is_in_kernel,
    lexsegment_algebra_gb,
    normal_form,
    quadratic_kernel_pairs,
    require_kernel,
    standard_t_monomials,
    veronese_gb,
)


def _t(*rows):
    return tuple(TVariable(r) for r in rows)


def test_veronese_gb_two_variables():
    # Act
    gb = veronese_gb(PolynomialRing(2), 2)

    # Assert
    assert len(gb) == 1
    assert gb[0].lhs.tpart == _t((1, 1), (2, 2))
    assert gb[0].rhs.tpart == _t((1, 2), (1, 2))


def test_veronese_gb_one_variable_is_empty():
    assert veronese_gb(PolynomialRing(1), 3) == []


def test_veronese_gb_requires_degree_two():
    with pytest.raises(ValidationError):
        veronese_gb(PolynomialRing(3), 1)


@pytest.mark.parametrize("n, d", [(3, 2), (3, 3), (4, 2)])
def test_veronese_gb_matches_kernel_search(n, d):
    ring = PolynomialRing(n)
    gb = veronese_gb(ring, d)
    assert len(gb) == quadratic_kernel_pairs(ring, d)
    assert all(is_in_kernel(b) for b in gb)


def test_lexsegment_algebra_gb_full_and_singleton():
    ring = PolynomialRing(3)
    full = build_lexsegment(ring.pure_power(1, 2), ring.pure_power(3, 2))
    assert lexsegment_algebra_gb(full) == veronese_gb(ring, 2)
    u = ring.monomial((1, 1, 0))
    assert lexsegment_algebra_gb(build_lexsegment(u, u)) == []


def test_lexsegment_algebra_gb_is_in_kernel():
    ring = PolynomialRing(4)
    ideal = build_lexsegment(ring.monomial((1, 0, 1, 1)), ring.monomial((0, 1, 0, 2)))
    gb = lexsegment_algebra_gb(ideal)
    assert gb
    for b in gb:
        image, N = b.lhs.image()
        assert image.degree == 6 and N == 2
        assert b.in_kernel()
        assert all(t.monomial(ring) in ideal for t in b.lhs.tpart + b.rhs.tpart)


def test_normal_form_examples():
    gb = veronese_gb(PolynomialRing(2), 2)
    assert normal_form(_t((1, 1), (2, 2)), gb) == _t((1, 2), (1, 2))
    assert normal_form(_t((1, 2), (1, 2)), gb) == _t((1, 2), (1, 2))


@st.composite
def products(draw):
    n = draw(st.integers(1, 5))
    d = draw(st.integers(2, 3))
    N = draw(st.integers(1, 3))
    ring = PolynomialRing(n)
    rows = draw(st.lists(st.lists(st.integers(1, n), min_size=d, max_size=d), min_size=N, max_size=N))
    return ring, d, [ring.from_indices(sorted(r)) for r in rows]


@given(products())
@settings(max_examples=200, deadline=None)
def test_normal_form_agrees_with_tableau_route(case):
    # Arrange
    ring, d, factors = case
    gb = veronese_gb(ring, d)

    # Act
    rewritten = normal_form([TVariable.of(f) for f in factors], gb)
    tableau = standard_representation(factors)

    # Assert
    assert [t.row for t in rewritten] == [m.indices() for m in tableau]


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("d", [2, 3])
@pytest.mark.parametrize("N", [1, 2, 3])
def test_veronese_dimension(n, d, N):
    ring = PolynomialRing(n)
    gb = veronese_gb(ring, d)
    assert count_irreducible(gb, ring, d, N) == comb(N * d + n - 1, n - 1)


@pytest.mark.slow
@pytest.mark.parametrize("d", [2, 3])
@pytest.mark.parametrize("N", [1, 2, 3])
def test_veronese_dimension_four_variables(d, N):
    ring = PolynomialRing(4)
    assert count_irreducible(veronese_gb(ring, d), ring, d, N) == comb(N * d + 3, 3)


def test_standard_t_monomials_one_per_fiber():
    # Arrange
    ring = PolynomialRing(2)
    gens = ring.monomials_of_degree(2)

    # Act
    standard = standard_t_monomials(gens, 2)

    # Assert
    assert len(standard) == 5
    assert standard[2] == (ring.monomial((1, 1)), ring.monomial((1, 1)))


def test_standard_t_monomials_degrevlex_agrees_in_degree_two():
    ring = PolynomialRing(3)
    gens = ring.monomials_of_degree(2)
    assert len(standard_t_monomials(gens, 2, T_DEGREVLEX)) == len(standard_t_monomials(gens, 2, T_LEX))


def test_mixed_monomial_arithmetic():
    # Arrange
    ring = PolynomialRing(3)
    a = MixedMonomial(ring.variable(1), _t((1, 2)))
    b = MixedMonomial(ring.variable(2), _t((1, 2), (2, 3)))

    # Act
    lcm = a.lcm(b)

    # Assert
    assert lcm.bidegree == (2, 2)
    assert a.divides(lcm) and b.divides(lcm)
    assert (lcm // a) * a == lcm
    assert not a.coprime(b)
    assert a.image() == (ring.monomial((2, 1, 0)), 1)


def test_mixed_monomial_rejects_mixed_t_degrees():
    ring = PolynomialRing(3)
    with pytest.raises(DimensionError):
        MixedMonomial(ring.one(), _t((1,), (1, 2)))


def test_require_kernel():
    ring = PolynomialRing(2)
    bad = ToricBinomial(MixedMonomial(ring.one(), _t((1, 1))), MixedMonomial(ring.one(), _t((1, 2))))
    assert not is_in_kernel(bad)
    with pytest.raises(KernelError):
        require_kernel([bad])


def test_binomial_json_schema():
    ring = PolynomialRing(3)
    order = ProductOrder()
    b = ToricBinomial.oriented(
        MixedMonomial(ring.variable(2), _t((1, 3))),
        MixedMonomial(ring.variable(3), _t((1, 2))),
        order,
    )
    data = b.to_json()
    assert set(data) == {"xlead", "tlead", "xtail", "ttail", "bidegree"}
    assert data["xlead"] == "0,0,1"
    assert data["bidegree"] == [1, 1]


@pytest.mark.slow
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("d", [2, 3])
@pytest.mark.parametrize("N", [1, 2, 3])
def test_normal_form_agrees_with_tableau_route_on_grid(n, d, N):
    # Arrange
    rng = random.Random(n * 100 + d * 10 + N)
    ring = PolynomialRing(n)
    gb = veronese_gb(ring, d)

    for _ in range(1000):
        factors = [ring.from_indices(sorted(rng.randint(1, n) for _ in range(d))) for _ in range(N)]

        # Act
        rewritten = normal_form([TVariable.of(f) for f in factors], gb)

        # Assert
        assert [t.row for t in rewritten] == [m.indices() for m in standard_representation(factors)], factors
