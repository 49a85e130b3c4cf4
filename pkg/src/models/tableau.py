from collections import Counter
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from src.models.errors import ValidationError
from src.models.monomial import Monomial, PolynomialRing

Row = Tuple[int, ...]


def validate_row(row: Sequence[int], n: int) -> Row:
    """
    Проверяет строку таблицы: индексы от 1 до n, слабое возрастание.

    :raises ValidationError: Для некорректной строки.
    """
    row = tuple(int(a) for a in row)
    if not row:
        raise ValidationError("Пустая строка таблицы")
    if any(not 1 <= a <= n for a in row):
        raise ValidationError(f"Строка {row} содержит индекс вне 1..{n}")
    if any(x > y for x, y in zip(row, row[1:])):
        raise ValidationError(f"Строка {row} не является слабо возрастающей")
    return row


@dataclass(frozen=True)
class Tableau:
    '''
    Таблица N×d с элементами из {1..n}: строки слабо возрастают,
    а мономы строк не возрастают в >_lex сверху вниз (равные строки допустимы,
    как в стандартном мономе (T_{x1x2})^2).
    '''
    rows: Tuple[Row, ...]
    n: int

    def __post_init__(self):
        if not self.rows:
            raise ValidationError("Таблица должна содержать хотя бы одну строку")
        checked = tuple(validate_row(r, self.n) for r in self.rows)
        d = len(checked[0])
        if any(len(r) != d for r in checked):
            raise ValidationError("Строки таблицы имеют разную длину")
        # x_a >=_lex x_b равносильно a <= b как кортежей
        for upper, lower in zip(checked, checked[1:]):
            if upper > lower:
                raise ValidationError(f"Нарушен порядок строк: {upper} выше {lower}")
        object.__setattr__(self, "rows", checked)

    @property
    def N(self) -> int:
        return len(self.rows)

    @property
    def d(self) -> int:
        return len(self.rows[0])

    def support(self) -> 'SupportMultiset':
        return SupportMultiset(tuple(sorted(a for row in self.rows for a in row)))

    def row_monomials(self, ring: PolynomialRing) -> List[Monomial]:
        return [ring.from_indices(row) for row in self.rows]

    def render(self) -> str:
        width = len(str(self.n))
        return "\n".join(" ".join(str(a).rjust(width) for a in row) for row in self.rows)


@dataclass(frozen=True)
class SupportMultiset:
    '''
    Носитель supp(A): мультимножество индексов с кратностями, хранится отсортированным.
    '''
    values: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(sorted(int(a) for a in self.values)))
        if any(a < 1 for a in self.values):
            raise ValidationError(f"Индексы носителя должны быть >= 1: {self.values}")

    @classmethod
    def of_monomial(cls, m: Monomial) -> 'SupportMultiset':
        return cls(m.indices())

    def __len__(self) -> int:
        return len(self.values)

    def counts(self) -> Counter:
        return Counter(self.values)
