from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Tuple

from src.models.errors import DimensionError, ValidationError
from src.models.monomial import Monomial


class MonomialOrderKind(Enum):
    LEX = "lex"
    REVLEX_DEC = "revlex-dec"
    SUCC = "succ"


def _check_ring(a: Monomial, b: Monomial):
    if a.ring != b.ring:
        raise DimensionError(f"Мономы из разных колец: n={a.ring.n} и n={b.ring.n}")


def _check_degree(a: Monomial, b: Monomial):
    _check_ring(a, b)
    if a.degree != b.degree:
        raise DimensionError(f"Степени не совпадают: {a.degree} и {b.degree}")


def _sign(x: Tuple, y: Tuple) -> int:
    return (x > y) - (x < y)


def lex_key(m: Monomial) -> Tuple[int, ...]:
    return m.exponents


def sigma_key(m: Monomial) -> Tuple:
    # Сначала степень, затем показатели с конца: больший показатель
    # у последней различающейся переменной делает моном σ-большим.
    return (m.degree, tuple(reversed(m.exponents)))


def succ_key(m: Monomial) -> Tuple:
    return (-m.exponents[0], m.exponents)


def cmp_lex(a: Monomial, b: Monomial) -> int:
    """
    Лексикографическое сравнение при x_1 > x_2 > ... > x_n.

    :return: 1, если a >_lex b; -1, если a <_lex b; 0 при равенстве.
    :raises DimensionError: Если различаются n или степени.
    """
    _check_degree(a, b)
    return _sign(lex_key(a), lex_key(b))


def cmp_sigma(a: Monomial, b: Monomial) -> int:
    """
    Убывающий revlex-порядок <_σ: сначала степень, затем при равной степени
    a <_σ b, если на последнем различающемся индексе s показатель у a меньше.
    В частности x_n >_σ x_{n-1} >_σ ... >_σ x_1.
    """
    _check_ring(a, b)
    return _sign(sigma_key(a), sigma_key(b))


def cmp_succ(a: Monomial, b: Monomial) -> int:
    """
    Порядок ≻: a ≻ b, если ν_1(a) < ν_1(b), либо ν_1 равны и a >_lex b.
    """
    _check_degree(a, b)
    return _sign(succ_key(a), succ_key(b))


_COMPARATORS = {
    MonomialOrderKind.LEX: (cmp_lex, lex_key),
    MonomialOrderKind.REVLEX_DEC: (cmp_sigma, sigma_key),
    MonomialOrderKind.SUCC: (cmp_succ, succ_key),
}


@dataclass(frozen=True)
class MonomialOrder:
    '''
    Один из трёх мономиальных порядков: Lex, RevLexDecreasingSigma, Succ.
    '''
    kind: MonomialOrderKind

    @classmethod
    def from_name(cls, name: str) -> 'MonomialOrder':
        """
        Порядок по имени CLI: 'lex', 'revlex-dec' или 'succ'.

        :raises ValidationError: Для неизвестного имени.
        """
        for kind in MonomialOrderKind:
            if kind.value == name:
                return cls(kind)
        raise ValidationError(f"Неизвестный порядок '{name}'")

    @property
    def name(self) -> str:
        return self.kind.value

    def compare(self, a: Monomial, b: Monomial) -> int:
        return _COMPARATORS[self.kind][0](a, b)

    def sort_key(self, m: Monomial):
        return _COMPARATORS[self.kind][1](m)

    def sorted_desc(self, monomials: Iterable[Monomial]) -> List[Monomial]:
        """Сортировка по убыванию (наибольший первым)."""
        return sorted(monomials, key=self.sort_key, reverse=True)

    def maximum(self, monomials: Iterable[Monomial]) -> Monomial:
        return max(monomials, key=self.sort_key)

    def minimum(self, monomials: Iterable[Monomial]) -> Monomial:
        return min(monomials, key=self.sort_key)


LEX = MonomialOrder(MonomialOrderKind.LEX)
REVLEX_DEC = MonomialOrder(MonomialOrderKind.REVLEX_DEC)
SUCC = MonomialOrder(MonomialOrderKind.SUCC)
