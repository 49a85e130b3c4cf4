"""
Разбор векторов показателей и носителей из командной строки.
Формат только числовой: "1,0,1,1" (символьная запись x1*x3*x4 не принимается).
"""
from typing import List, Optional, Tuple

from src.models.errors import DimensionError, ValidationError
from src.models.monomial import Monomial, PolynomialRing
from src.models.tableau import Row, SupportMultiset


def parse_integers(text: str) -> Tuple[int, ...]:
    """
    '1, 0,2' -> (1, 0, 2).

    :raises ValidationError: Для пустой строки или нечисловых элементов.
    """
    items = [item.strip() for item in text.split(",")]
    if not text.strip() or any(not item for item in items):
        raise ValidationError(f"Пустой элемент в векторе '{text}'")
    try:
        return tuple(int(item) for item in items)
    except ValueError as e:
        raise ValidationError(f"Вектор '{text}' содержит не целое число") from e


def parse_exponents(text: str, n: Optional[int] = None, d: Optional[int] = None) -> Tuple[int, ...]:
    """
    Вектор показателей с проверкой длины n и степени d.

    :raises DimensionError: Если длина или степень не совпадают.
    """
    exps = parse_integers(text)
    if any(e < 0 for e in exps):
        raise ValidationError(f"Отрицательный показатель в '{text}'")
    if n is not None and len(exps) != n:
        raise DimensionError(f"Вектор '{text}' имеет длину {len(exps)}, ожидалось n={n}")
    if d is not None and sum(exps) != d:
        raise DimensionError(f"Моном '{text}' имеет степень {sum(exps)}, ожидалось d={d}")
    return exps


def parse_monomial(ring: PolynomialRing, text: str, d: Optional[int] = None) -> Monomial:
    return ring.monomial(parse_exponents(text, ring.n, d))


def parse_support(text: str) -> SupportMultiset:
    """'1,1,2,2' -> носитель {1,1,2,2}."""
    values = parse_integers(text)
    if any(a < 1 for a in values):
        raise ValidationError(f"Индексы носителя должны быть >= 1: '{text}'")
    return SupportMultiset(values)


def parse_rows(text: str) -> List[Row]:
    """'1,3;2,2' -> [(1, 3), (2, 2)]."""
    rows = [parse_integers(chunk) for chunk in text.split(";")]
    if len({len(r) for r in rows}) != 1:
        raise ValidationError(f"Строки таблицы '{text}' имеют разную длину")
    return rows
