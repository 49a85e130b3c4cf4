import logging
from collections import defaultdict
from itertools import combinations, combinations_with_replacement
from typing import Dict, Iterable, List, Sequence, Tuple

from src.models.errors import KernelError, ValidationError
from src.models.lexsegment import LexSegmentIdeal
from src.models.monomial import Monomial, PolynomialRing
from src.models.orders import LEX
from src.models.tableau import Row, SupportMultiset
from src.models.toric import (
    MixedMonomial,
    T_LEX,
    TermOrder,
    ToricBinomial,
    TVariable,
)
from src.operation.tableaux import standard_tableau_from_support

logger = logging.getLogger(__name__)


def _quadratic_gb(ring: PolynomialRing, rows: Sequence[Row], d: int) -> List[ToricBinomial]:
    # T_q T_r - T_a T_b для каждого нестандартного квадратичного монома
    one = ring.one()
    result = []
    for q, r in combinations_with_replacement(sorted(rows), 2):
        support = SupportMultiset(q + r)
        std = standard_tableau_from_support(support, 2, d, ring.n).rows
        if std == (q, r):
            continue
        lead = MixedMonomial(one, (TVariable(q), TVariable(r)))
        tail = MixedMonomial(one, (TVariable(std[0]), TVariable(std[1])))
        result.append(ToricBinomial(lead, tail))
    return result


def veronese_gb(ring: PolynomialRing, d: int) -> List[ToricBinomial]:
    """
    Квадратичный базис Грёбнера идеала представления V_{n,d} относительно <_lex на T.

    :param ring: Кольцо с n >= 1 переменными.
    :param d: Степень, d >= 2.
    :return: Бином T_q T_r - T_a T_b для каждой нестандартной пары с тем же носителем.
    """
    if d < 2:
        raise ValidationError(f"Базис Веронезе строится при d >= 2, получено d={d}")
    rows = [m.indices() for m in ring.monomials_of_degree(d)]
    gb = _quadratic_gb(ring, rows, d)
    logger.debug("veronese_gb(n=%d, d=%d): %d биномов", ring.n, d, len(gb))
    return gb


def lexsegment_algebra_gb(ideal: LexSegmentIdeal) -> List[ToricBinomial]:
    """
    Базис G' идеала представления K[L(u,v)]: биномы veronese_gb, у которых x_q, x_r ∈ L(u,v).
    Тогда x_a, x_b ∈ L(u,v) автоматически.
    """
    rows = [g.indices() for g in ideal.generators]
    return _quadratic_gb(ideal.ring, rows, ideal.d)


def _rewrite_table(gb: Iterable[ToricBinomial]) -> Dict[Tuple[Row, Row], Tuple[Row, Row]]:
    table = {}
    for b in gb:
        if b.bidegree != (0, 2) or b.rhs.bidegree != (0, 2):
            continue
        lead = tuple(t.row for t in b.lhs.tpart)
        tail = tuple(t.row for t in b.rhs.tpart)
        table[lead] = tail
    return table


def normal_form(tpart: Sequence[TVariable], gb: Iterable[ToricBinomial]) -> Tuple[TVariable, ...]:
    """
    Переписывает нестандартные квадратичные подпары T-монома, пока это возможно.

    Каждое переписывание строго уменьшает моном в <_lex, поэтому процесс конечен.

    :param tpart: Мультимножество переменных T.
    :param gb: Выход veronese_gb или lexsegment_algebra_gb.
    :return: Стандартный моном того же носителя (строки по убыванию T).
    """
    table = _rewrite_table(gb)
    rows = sorted(t.row for t in tpart)
    changed = True
    while changed:
        changed = False
        for i, j in combinations(range(len(rows)), 2):
            tail = table.get((rows[i], rows[j]))
            if tail is None:
                continue
            rows[i], rows[j] = tail
            rows.sort()
            changed = True
            break
    return tuple(TVariable(r) for r in rows)


def standard_t_monomials(generators: Sequence[Monomial], N: int,
                         term_order: TermOrder = T_LEX) -> List[Tuple[Monomial, ...]]:
    """
    Стандартные мономы степени N торического идеала K[B] относительно term_order.

    В каждом слое (T-мономы с одинаковым образом) ровно один стандартный моном:
    наименьший в порядке. Сомножители возвращаются по убыванию в >_lex.

    :param generators: Множество B одной степени.
    :param N: Степень по T.
    :param term_order: Порядок на K[T].
    """
    if N < 1:
        raise ValidationError(f"Степень по T должна быть положительной, получено {N}")
    gens = LEX.sorted_desc(set(generators))
    fibers: Dict[Tuple[int, ...], Tuple[Monomial, ...]] = {}
    keys: Dict[Tuple[int, ...], object] = {}
    for combo in combinations_with_replacement(gens, N):
        image = combo[0]
        for f in combo[1:]:
            image = image * f
        key = term_order.sort_key(TVariable.of(f) for f in combo)
        current = keys.get(image.exponents)
        if current is None or key < current:
            keys[image.exponents] = key
            fibers[image.exponents] = combo
    return [fibers[e] for e in sorted(fibers, reverse=True)]


def count_irreducible(gb: Iterable[ToricBinomial], ring: PolynomialRing, d: int, N: int) -> int:
    """
    Число T-мономов степени N от всех T_a (a ∈ M_d), не делящихся ни на один старший член gb.
    """
    leads = set(_rewrite_table(gb))
    rows = [m.indices() for m in ring.monomials_of_degree(d)]
    count = 0
    for combo in combinations_with_replacement(rows, N):
        if not any((combo[i], combo[j]) in leads for i, j in combinations(range(N), 2)):
            count += 1
    return count


def quadratic_kernel_pairs(ring: PolynomialRing, d: int) -> int:
    """
    Перебором: число нестандартных квадратичных T-мономов, то есть
    (число пар T_aT_b) минус (число различных образов x_a x_b).
    """
    images = defaultdict(int)
    for a, b in combinations_with_replacement(ring.monomials_of_degree(d), 2):
        images[(a * b).exponents] += 1
    return sum(c - 1 for c in images.values())


def is_in_kernel(binomial: ToricBinomial) -> bool:
    return binomial.in_kernel()


def require_kernel(binomials: Iterable[ToricBinomial]):
    """
    :raises KernelError: Если какой-либо бином не лежит в ядре.
    """
    for b in binomials:
        if not b.in_kernel():
            raise KernelError(f"Бином {b!r} не лежит в ядре отображения представления")
