from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from src.models.errors import (
    DimensionError,
    ExponentOverflowError,
    UndefinedError,
    ValidationError,
)

# Граница показателя: при N·d порядка десятков её не достичь,
# но переполнение должно падать явно, а не молча.
EXPONENT_LIMIT = 2 ** 31 - 1


@dataclass(frozen=True)
class PolynomialRing:
    '''
    Контекст S = K[x_1, ..., x_n]: фиксирует число переменных n.
    Все мономы одного вычисления создаются одним кольцом; смешивать кольца нельзя.
    '''
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise DimensionError(f"Число переменных должно быть положительным, получено {self.n}")

    def monomial(self, exponents: Sequence[int]) -> 'Monomial':
        """
        Создаёт моном по вектору показателей.

        :param exponents: Последовательность из n неотрицательных целых.
        :return: Объект Monomial.
        :raises DimensionError: Если длина вектора не равна n.
        """
        return Monomial(self, tuple(int(e) for e in exponents))

    def one(self) -> 'Monomial':
        return Monomial(self, (0,) * self.n)

    def variable(self, i: int) -> 'Monomial':
        """
        Возвращает переменную x_i (нумерация с 1).
        """
        if not 1 <= i <= self.n:
            raise DimensionError(f"Индекс переменной {i} вне диапазона 1..{self.n}")
        exps = [0] * self.n
        exps[i - 1] = 1
        return Monomial(self, tuple(exps))

    def pure_power(self, i: int, d: int) -> 'Monomial':
        """x_i^d."""
        if not 1 <= i <= self.n:
            raise DimensionError(f"Индекс переменной {i} вне диапазона 1..{self.n}")
        exps = [0] * self.n
        exps[i - 1] = d
        return Monomial(self, tuple(exps))

    def from_indices(self, indices: Iterable[int]) -> 'Monomial':
        """
        Моном x_{a_1}···x_{a_d} по строке индексов (каждый индекс от 1 до n).
        """
        exps = [0] * self.n
        for i in indices:
            if not 1 <= i <= self.n:
                raise ValidationError(f"Индекс {i} вне диапазона 1..{self.n}")
            exps[i - 1] += 1
        return Monomial(self, tuple(exps))

    def monomials_of_degree(self, d: int) -> List['Monomial']:
        """
        Перечисляет M_d в лексикографически убывающем порядке.

        Строки индексов из combinations_with_replacement идут по возрастанию
        как кортежи, а это ровно убывание соответствующих мономов в >_lex.

        :param d: Степень.
        :return: Список мономов от x_1^d до x_n^d.
        """
        if d < 0:
            raise DimensionError(f"Степень должна быть неотрицательной, получено {d}")
        return [self.from_indices(row) for row in combinations_with_replacement(range(1, self.n + 1), d)]


@dataclass(frozen=True)
class Monomial:
    '''
    Неизменяемый моном x^a: вектор показателей длины n и кэшированная степень.
    '''
    ring: PolynomialRing
    exponents: Tuple[int, ...]
    degree: int = field(init=False, compare=False)

    def __post_init__(self):
        if len(self.exponents) != self.ring.n:
            raise DimensionError(
                f"Длина вектора показателей {len(self.exponents)} не совпадает с n={self.ring.n}")
        if any(e < 0 for e in self.exponents):
            raise ValidationError(f"Отрицательный показатель в {self.exponents}")
        if any(e > EXPONENT_LIMIT for e in self.exponents):
            raise ExponentOverflowError(f"Показатель превышает {EXPONENT_LIMIT}")
        object.__setattr__(self, "degree", sum(self.exponents))

    # --- проверки совместимости ---

    def _same_ring(self, other: 'Monomial'):
        if self.ring != other.ring:
            raise DimensionError(f"Мономы из разных колец: n={self.ring.n} и n={other.ring.n}")

    # --- арифметика ---

    def __mul__(self, other: 'Monomial') -> 'Monomial':
        self._same_ring(other)
        exps = tuple(a + b for a, b in zip(self.exponents, other.exponents))
        if any(e > EXPONENT_LIMIT for e in exps):
            raise ExponentOverflowError(f"Переполнение показателя при умножении {self} на {other}")
        return Monomial(self.ring, exps)

    def divides(self, other: 'Monomial') -> bool:
        self._same_ring(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __floordiv__(self, other: 'Monomial') -> 'Monomial':
        """
        Точное деление self / other.

        :raises ValidationError: Если other не делит self.
        """
        if not other.divides(self):
            raise ValidationError(f"{other} не делит {self}")
        return Monomial(self.ring, tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: 'Monomial') -> 'Monomial':
        self._same_ring(other)
        return Monomial(self.ring, tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: 'Monomial') -> 'Monomial':
        self._same_ring(other)
        return Monomial(self.ring, tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def colon(self, other: 'Monomial') -> 'Monomial':
        """self / gcd(self, other): образующая идеала (self) : other."""
        self._same_ring(other)
        return Monomial(self.ring, tuple(max(a - b, 0) for a, b in zip(self.exponents, other.exponents)))

    def exchange(self, q: int, j: int) -> 'Monomial':
        """
        x_q · self / x_j.

        :raises ValidationError: Если x_j не делит self.
        """
        if self.nu(j) == 0:
            raise ValidationError(f"x_{j} не делит {self}")
        exps = list(self.exponents)
        exps[j - 1] -= 1
        exps[q - 1] += 1
        return Monomial(self.ring, tuple(exps))

    # --- статистики ---

    def nu(self, i: int) -> int:
        """Показатель ν_i переменной x_i."""
        return self.exponents[i - 1]

    def support(self) -> FrozenSet[int]:
        return frozenset(i + 1 for i, e in enumerate(self.exponents) if e > 0)

    def max_index(self) -> int:
        if self.degree == 0:
            raise UndefinedError("max не определён для монома степени 0")
        return max(self.support())

    def min_index(self) -> int:
        if self.degree == 0:
            raise UndefinedError("min не определён для монома степени 0")
        return min(self.support())

    def is_variable(self) -> bool:
        return self.degree == 1

    def indices(self) -> Tuple[int, ...]:
        """Строка индексов a_1 <= ... <= a_d, для которой self = x_{a_1}···x_{a_d}."""
        row: List[int] = []
        for i, e in enumerate(self.exponents, start=1):
            row.extend([i] * e)
        return tuple(row)

    # --- текстовые формы ---

    def text(self) -> str:
        """Каноническая форма для CLI и JSON: '1,0,1,1'."""
        return ",".join(str(e) for e in self.exponents)

    def pretty(self) -> str:
        if self.degree == 0:
            return "1"
        parts = []
        for i, e in enumerate(self.exponents, start=1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return self.pretty()


@dataclass(frozen=True)
class MonomialStats:
    supp: FrozenSet[int]
    max: int
    min: int
    nu: Tuple[int, ...]


def stats(m: Monomial) -> MonomialStats:
    """
    Статистики монома: supp, max, min и вектор ν.

    :param m: Моном положительной степени.
    :raises UndefinedError: Для монома степени 0.
    """
    return MonomialStats(m.support(), m.max_index(), m.min_index(), m.exponents)


def product(factors: Sequence[Monomial]) -> Monomial:
    """Произведение непустого списка мономов."""
    if not factors:
        raise ValidationError("Пустое произведение не определено")
    result = factors[0]
    for f in factors[1:]:
        result = result * f
    return result
