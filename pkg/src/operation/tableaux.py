import logging
from collections import Counter
from itertools import combinations_with_replacement
from typing import Iterator, List, Optional, Sequence

from src.models.errors import DimensionError, ValidationError
from src.models.lexsegment import LexSegmentIdeal
from src.models.monomial import Monomial, product
from src.models.tableau import Row, SupportMultiset, Tableau, validate_row

logger = logging.getLogger(__name__)


def is_standard_pair(a: Sequence[int], b: Sequence[int], n: Optional[int] = None) -> bool:
    """
    Критерий стандартности квадратичного монома T_a T_b (a выше b).

    T_a T_b стандартен, если a = b, или существует i: a_1=b_1, ..., a_{i-1}=b_{i-1},
    a_i < b_i и (при i < d) b_{i+1} <= ... <= b_d <= a_{i+1} <= ... <= a_d.

    :param a: Верхняя строка.
    :param b: Нижняя строка.
    :param n: Число переменных для проверки диапазона (по умолчанию max элемента).
    :raises ValidationError: Для некорректных строк или разной длины.
    """
    bound = n if n is not None else max(max(a, default=1), max(b, default=1))
    a = validate_row(a, bound)
    b = validate_row(b, bound)
    if len(a) != len(b):
        raise ValidationError(f"Строки разной длины: {a} и {b}")
    if a == b:
        return True
    d = len(a)
    i = next(k for k in range(d) if a[k] != b[k])
    if a[i] > b[i]:
        return False
    if i == d - 1:
        return True
    # строки слабо возрастают, поэтому достаточно b_d <= a_{i+1}
    return b[d - 1] <= a[i + 1]


def is_standard(tableau: Tableau) -> bool:
    """
    Таблица стандартна, если стандартен каждый квадратичный моном T_{a(i)}T_{a(j)}, i < j.
    """
    rows = tableau.rows
    return all(is_standard_pair(rows[i], rows[j], tableau.n)
               for i in range(len(rows)) for j in range(i + 1, len(rows)))


def _fill(values: Sequence[int], N: int, d: int) -> List[List[int]]:
    # Первый столбец: N наименьших значений. Блоки равных значений первого
    # столбца обрабатываются снизу вверх, каждый берёт наименьшие из оставшихся
    # значений и рекурсивно заполняет свою подтаблицу шириной d-1.
    if d == 0:
        return [[] for _ in range(N)]
    column = list(values[:N])
    rest = list(values[N:])
    blocks = []
    start = 0
    for k in range(1, N + 1):
        if k == N or column[k] != column[start]:
            blocks.append((start, k))
            start = k
    rows: List[List[int]] = [[] for _ in range(N)]
    pointer = 0
    for begin, end in reversed(blocks):
        size = end - begin
        chunk = rest[pointer:pointer + size * (d - 1)]
        pointer += size * (d - 1)
        sub = _fill(chunk, size, d - 1)
        for r in range(size):
            rows[begin + r] = [column[begin + r]] + sub[r]
    return rows


def _all_tableaux(remaining: Counter, N: int, d: int, previous: Row) -> Iterator[List[Row]]:
    if N == 0:
        yield []
        return
    values = sorted(v for v, c in remaining.items() if c > 0)
    for row in combinations_with_replacement(values, d):
        if row < previous:
            continue
        need = Counter(row)
        if any(remaining[v] < c for v, c in need.items()):
            continue
        remaining.subtract(need)
        for tail in _all_tableaux(remaining, N - 1, d, row):
            yield [row] + tail
        remaining.update(need)


def all_tableaux(support: SupportMultiset, N: int, d: int, n: int) -> List[Tableau]:
    """Все таблицы N×d с данным носителем (перебор)."""
    _check_cardinality(support, N, d)
    return [Tableau(tuple(rows), n) for rows in _all_tableaux(support.counts(), N, d, ())]


def brute_force_standard_tableau(support: SupportMultiset, N: int, d: int, n: int) -> Tableau:
    """
    Стандартная таблица полным перебором: у неё T-моном лексикографически минимален.

    В лексикографическом порядке на T меньшим оказывается моном, у которого в первой
    различающейся строке кортеж индексов больше.
    """
    candidates = all_tableaux(support, N, d, n)
    return max(candidates, key=lambda t: t.rows)


def _check_cardinality(support: SupportMultiset, N: int, d: int):
    if N < 1 or d < 1:
        raise ValidationError(f"Требуется N >= 1 и d >= 1, получено N={N}, d={d}")
    if len(support) != N * d:
        raise ValidationError(f"|носитель| = {len(support)}, а N·d = {N * d}")


def standard_tableau_from_support(support: SupportMultiset, N: int, d: int, n: Optional[int] = None) -> Tableau:
    """
    Единственная стандартная таблица N×d с носителем support.

    :param support: Мультимножество из N·d индексов.
    :param N: Число строк.
    :param d: Длина строки.
    :param n: Число переменных (по умолчанию наибольший индекс носителя).
    :return: Стандартная Tableau.
    :raises ValidationError: Если |support| != N·d.
    """
    _check_cardinality(support, N, d)
    n = n if n is not None else max(support.values)
    tableau = Tableau(tuple(tuple(r) for r in _fill(support.values, N, d)), n)
    if is_standard(tableau) and tableau.support() == support:
        return tableau
    logger.warning("Построение по блокам дало нестандартную таблицу для носителя %s; перебор",
                   support.values)
    return brute_force_standard_tableau(support, N, d, n)


def _check_factors(factors: Sequence[Monomial]):
    if not factors:
        raise ValidationError("Произведение из нуля сомножителей не рассматривается")
    ring, d = factors[0].ring, factors[0].degree
    for f in factors:
        if f.ring != ring:
            raise DimensionError("Сомножители из разных колец")
        if f.degree != d:
            raise DimensionError(f"Сомножители разных степеней: {d} и {f.degree}")


def tableau_of(factors: Sequence[Monomial]) -> Tableau:
    """Таблица произведения w_1···w_N: строки равны индексам сомножителей по убыванию."""
    _check_factors(factors)
    rows = sorted(f.indices() for f in factors)
    return Tableau(tuple(rows), factors[0].ring.n)


def is_standard_product(factors: Sequence[Monomial]) -> bool:
    return is_standard(tableau_of(factors))


def standard_representation(factors: Sequence[Monomial]) -> List[Monomial]:
    """
    Стандартное представление произведения w_1···w_N.

    :param factors: N мономов одной степени d.
    :return: N мономов w'_1 >=_lex ... >=_lex w'_N со стандартным произведением.
    :raises DimensionError: Для сомножителей разных степеней.
    """
    _check_factors(factors)
    ring, d = factors[0].ring, factors[0].degree
    support = SupportMultiset.of_monomial(product(factors))
    tableau = standard_tableau_from_support(support, len(factors), d, ring.n)
    return tableau.row_monomials(ring)


def segment_closure_check(factors: Sequence[Monomial], ideal: LexSegmentIdeal) -> bool:
    """
    Лежат ли все сомножители стандартного представления снова в L(u,v).
    """
    return all(w in ideal for w in standard_representation(factors))
