import pytest

from src.models.errors import DimensionError, ValidationError
from src.models.monomial import PolynomialRing
from src.parsers.vectors import parse_exponents, parse_integers, parse_monomial, parse_rows, parse_support


def test_parse_integers():
    assert parse_integers("1, 0,2") == (1, 0, 2)


@pytest.mark.parametrize("text", ["", "1,,2", "1,a", "1.5"])
def test_parse_integers_rejects(text):
    with pytest.raises(ValidationError):
        parse_integers(text)


def test_parse_exponents_checks_shape():
    assert parse_exponents("1,0,1,1", 4, 3) == (1, 0, 1, 1)
    with pytest.raises(DimensionError):
        parse_exponents("1,0,1", 4)
    with pytest.raises(DimensionError):
        parse_exponents("1,0,1,1", 4, 2)
    with pytest.raises(ValidationError):
        parse_exponents("1,-1,2")


def test_parse_monomial():
    ring = PolynomialRing(3)
    assert parse_monomial(ring, "0,2,1", 3) == ring.monomial((0, 2, 1))


def test_parse_support_and_rows():
    assert parse_rows("1,3;2,2") == [(1, 3), (2, 2)]
    with pytest.raises(ValidationError):
        parse_rows("1,3;2")
    with pytest.raises(ValidationError):
        parse_support("0,1")
    assert len(parse_support("1,1,2").values) == 3
