import logging
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Dict, Iterable, List, Optional, Set, Tuple

from src.models.errors import (
    DimensionError,
    OrderError,
    PreconditionError,
    UndefinedError,
    ValidationError,
)
from src.models.lexsegment import LexSegmentIdeal, ResolutionClass, Verdict
from src.models.monomial import Monomial, PolynomialRing
from src.models.orders import LEX, MonomialOrder

logger = logging.getLogger(__name__)

Exps = Tuple[int, ...]


@lru_cache(maxsize=256)
def _lex_table(n: int, d: int) -> Tuple[Tuple[Exps, ...], Dict[Exps, int]]:
    # M_d в виде векторов показателей, лексикографически по убыванию, и позиции в нём
    rows = []
    for idx in combinations_with_replacement(range(n), d):
        exps = [0] * n
        for i in idx:
            exps[i] += 1
        rows.append(tuple(exps))
    return tuple(rows), {e: k for k, e in enumerate(rows)}


def _segment_exps(n: int, d: int, top: Exps, bottom: Exps) -> Tuple[Exps, ...]:
    rows, pos = _lex_table(n, d)
    return rows[pos[top]:pos[bottom] + 1]


def _shadow_exps(gens: Iterable[Exps], n: int) -> Set[Exps]:
    result = set()
    for e in gens:
        for i in range(n):
            lst = list(e)
            lst[i] += 1
            result.add(tuple(lst))
    return result


def _is_segment_exps(gens: Set[Exps], n: int, d: int) -> bool:
    _, pos = _lex_table(n, d)
    # в таблице позиции растут при убывании монома
    top = min(gens, key=pos.__getitem__)
    bottom = max(gens, key=pos.__getitem__)
    return pos[bottom] - pos[top] + 1 == len(gens)


def _equigenerated(gens: Iterable[Monomial]) -> Tuple[PolynomialRing, int, List[Monomial]]:
    items = list(gens)
    if not items:
        raise ValidationError("Пустое множество мономов")
    ring, d = items[0].ring, items[0].degree
    for g in items:
        if g.ring != ring:
            raise DimensionError("Мономы из разных колец")
        if g.degree != d:
            raise DimensionError(f"Разные степени в наборе: {d} и {g.degree}")
    return ring, d, items


def build_lexsegment(u: Monomial, v: Monomial) -> LexSegmentIdeal:
    """
    Строит L(u,v) = {w ∈ M_d : u >=_lex w >=_lex v}.

    :param u: Верхний конец.
    :param v: Нижний конец той же степени.
    :return: LexSegmentIdeal с образующими по убыванию.
    :raises DimensionError: Если степени или n различаются.
    :raises OrderError: Если u <_lex v.
    """
    if LEX.compare(u, v) < 0:
        raise OrderError(f"u={u} меньше v={v} в лексикографическом порядке")
    ring, d = u.ring, u.degree
    gens = tuple(ring.monomial(e) for e in _segment_exps(ring.n, d, u.exponents, v.exponents))
    return LexSegmentIdeal(ring, d, u, v, gens)


def final_lexsegment(v: Monomial) -> LexSegmentIdeal:
    """L^f(v) = L(v, x_n^d)."""
    return build_lexsegment(v, v.ring.pure_power(v.ring.n, v.degree))


def initial_lexsegment(v: Monomial) -> LexSegmentIdeal:
    """L^i(v) = L(x_1^d, v)."""
    return build_lexsegment(v.ring.pure_power(1, v.degree), v)


def shadow(gens: Iterable[Monomial]) -> Set[Monomial]:
    """
    Тень множества: {x_i·w : w ∈ gens, 1 <= i <= n}.

    :raises DimensionError: Для мономов разных степеней.
    """
    ring, _, items = _equigenerated(gens)
    return {ring.monomial(e) for e in _shadow_exps((g.exponents for g in items), ring.n)}


def is_lexsegment_set(gens: Iterable[Monomial]) -> bool:
    """
    True, если множество совпадает с L(max_lex, min_lex).

    :raises ValidationError: Для пустого множества.
    """
    ring, d, items = _equigenerated(gens)
    return _is_segment_exps({g.exponents for g in items}, ring.n, d)


def completeness_depth(gens: Iterable[Monomial], iterations: int) -> int:
    """
    Сколько последовательных теней (не более iterations) являются лексегментами.
    """
    if iterations < 1:
        raise ValidationError(f"Число итераций должно быть положительным, получено {iterations}")
    ring, d, items = _equigenerated(gens)
    current = {g.exponents for g in items}
    for k in range(1, iterations + 1):
        current = _shadow_exps(current, ring.n)
        if not _is_segment_exps(current, ring.n, d + k):
            logger.debug("Тень %d не является лексегментом (%d мономов)", k, len(current))
            return k - 1
    return iterations


def default_iterations(ideal: LexSegmentIdeal) -> int:
    return ideal.n * ideal.d


def is_completely_lexsegment(ideal: LexSegmentIdeal, iterations: Optional[int] = None) -> bool:
    """
    Проверяет, что первые iterations теней являются лексегментными множествами.
    По умолчанию iterations = n·d; ответ означает «вполне до k теней».
    """
    k = iterations if iterations is not None else default_iterations(ideal)
    return completeness_depth(ideal.generators, k) == k


def lex_predecessor(v: Monomial) -> Monomial:
    """
    Наибольший моном степени d, строго меньший v в >_lex.

    :raises UndefinedError: Если v = x_n^d.
    """
    ring = v.ring
    rows, pos = _lex_table(ring.n, v.degree)
    k = pos[v.exponents]
    if k + 1 >= len(rows):
        raise UndefinedError(f"У {v} нет лексикографического предшественника")
    return ring.monomial(rows[k + 1])


def _case_one(ideal: LexSegmentIdeal) -> Optional[int]:
    # (i): u = x_1^a x_2^{d-a}, v = x_1^a x_n^{d-a}, 0 < a <= d
    ring, d = ideal.ring, ideal.d
    a = ideal.a(1)
    if a == 0:
        return None
    if a < d and ring.n < 2:
        return None
    u_shape = ring.pure_power(1, a) * ring.pure_power(min(2, ring.n), d - a)
    v_shape = ring.pure_power(1, a) * ring.pure_power(ring.n, d - a)
    if ideal.u == u_shape and ideal.v == v_shape:
        return a
    return None


def _non_completely_l(ideal: LexSegmentIdeal) -> Optional[int]:
    # u = x_1 x_{l+1}^{a_{l+1}}···x_n^{a_n}, v = x_l x_n^{d-1}, 2 <= l <= n-1
    n, d = ideal.n, ideal.d
    row = ideal.v.indices()
    l = row[0]
    if not 2 <= l <= n - 1:
        return None
    if any(i != n for i in row[1:]):
        return None
    if ideal.a(1) != 1:
        return None
    if any(ideal.a(i) != 0 for i in range(2, l + 1)):
        return None
    return l


def classify(ideal: LexSegmentIdeal, iterations: Optional[int] = None) -> ResolutionClass:
    """
    Классифицирует наличие линейной резольвенты по численным критериям.

    Сначала проверяется полнота (через тени), затем применяется ровно одна теорема:
    условия (i)-(iii) для вполне лексегментных идеалов или форма
    u = x_1 x_{l+1}^{a_{l+1}}···x_n^{a_n}, v = x_l x_n^{d-1} иначе.

    :param ideal: Лексегментный идеал с ν_1(u) > 0.
    :param iterations: Бюджет проверки теней, по умолчанию n·d.
    :return: ResolutionClass.
    :raises PreconditionError: Если x_1 не делит u.
    """
    if ideal.a(1) == 0:
        raise PreconditionError(f"Теоремы предполагают ν_1(u) > 0, а u={ideal.u}")
    k = iterations if iterations is not None else default_iterations(ideal)
    depth = completeness_depth(ideal.generators, k)
    completely = depth == k

    if completely:
        a = _case_one(ideal)
        if a is not None:
            return ResolutionClass(Verdict.COMPLETELY_CASE_I, True, k, depth, a=a)
        a1, b1 = ideal.a(1), ideal.b(1)
        if b1 < a1 - 1:
            return ResolutionClass(Verdict.COMPLETELY_CASE_II, True, k, depth)
        if b1 == a1 - 1:
            ring = ideal.ring
            if ideal.v == ring.pure_power(ring.n, ideal.d):
                # у x_n^d нет предшественника: условие выполнено тривиально
                return ResolutionClass(Verdict.COMPLETELY_CASE_III, True, k, depth)
            w = lex_predecessor(ideal.v)
            shifted = (ring.variable(1) * w) // ring.variable(w.max_index())
            if LEX.compare(shifted, ideal.u) <= 0:
                return ResolutionClass(Verdict.COMPLETELY_CASE_III, True, k, depth, w=w)
        return ResolutionClass(Verdict.NO_LINEAR_RESOLUTION, True, k, depth)

    if ideal.b(1) > 0:
        logger.info("x_1 делит v=%s, идеал не вполне лексегментный: случай не классифицирован", ideal.v)
        return ResolutionClass(Verdict.UNCLASSIFIED, False, k, depth)
    l = _non_completely_l(ideal)
    if l is not None:
        return ResolutionClass(Verdict.NON_COMPLETELY, False, k, depth, l=l)
    return ResolutionClass(Verdict.NO_LINEAR_RESOLUTION, False, k, depth)


def all_lexsegment_pairs(ring: PolynomialRing, d: int) -> List[Tuple[Monomial, Monomial]]:
    """
    Все пары (u, v) с u >=_lex v и ν_1(u) > 0 в каноническом порядке перечисления.
    """
    mons = ring.monomials_of_degree(d)
    pairs = []
    for i, u in enumerate(mons):
        if u.nu(1) == 0:
            continue
        for v in mons[i:]:
            pairs.append((u, v))
    return pairs


def initial_sigma_segment(u: Monomial, sigma: MonomialOrder) -> List[Monomial]:
    """
    L^i_σ(u) = {w ∈ M_d : w >_σ u} в лексикографически убывающем порядке.

    :raises ValidationError: Если u σ-наибольший и множество пусто.
    """
    result = [w for w in u.ring.monomials_of_degree(u.degree) if sigma.compare(w, u) > 0]
    if not result:
        raise ValidationError(f"{u} наибольший в порядке {sigma.name}, сегмент пуст")
    return result
