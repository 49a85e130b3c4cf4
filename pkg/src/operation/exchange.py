import logging
from itertools import combinations
from typing import Callable, Iterable, List, Optional, Sequence, Set, Tuple

from src.models.errors import ValidationError
from src.models.monomial import Monomial, product
from src.models.orders import LEX, MonomialOrder
from src.models.toric import T_LEX, ExchangeReport, ExchangeViolation, TermOrder
from src.operation.toric import standard_t_monomials

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]


def _prepare(generators: Iterable[Monomial], bound: int):
    gens = list(set(generators))
    if not gens:
        raise ValidationError("Пустое множество образующих")
    if bound < 1:
        raise ValidationError(f"Граница степени должна быть положительной, получено {bound}")
    degrees = {g.degree for g in gens}
    if len(degrees) != 1:
        raise ValidationError(f"Образующие разных степеней: {sorted(degrees)}")
    return gens, {g.exponents for g in gens}


def _standard_pairs(gens: Sequence[Monomial], bound: int, term_order: TermOrder):
    # все упорядоченные пары стандартных мономов одной степени N <= bound
    for N in range(1, bound + 1):
        standard = [(f, product(f)) for f in standard_t_monomials(gens, N, term_order)]
        for (uf, up), (vf, vp) in combinations(standard, 2):
            yield uf, up, vf, vp
            yield vf, vp, uf, up


def _find_exchange(u_factors: Sequence[Monomial], qs: Iterable[int],
                   allowed_j: Callable[[int, int], bool], members: Set[Tuple[int, ...]]):
    # ищет (δ, q, j): j ∈ supp(u_δ), allowed_j(q, j), x_q u_δ / x_j ∈ B
    trace: List[Triple] = []
    qs = list(qs)
    for delta, u in enumerate(u_factors, start=1):
        for j in sorted(u.support()):
            for q in qs:
                if q == j or not allowed_j(q, j):
                    continue
                trace.append((delta, q, j))
                if u.exchange(q, j).exponents in members:
                    return (delta, q, j), trace
    return None, trace


def _report(violations: List[ExchangeViolation], checked: int, label: str) -> ExchangeReport:
    if violations:
        first = violations[0]
        logger.info("%s нарушено: %s против %s (всего нарушений %d)", label,
                    first.u_factors, first.v_factors, len(violations))
    return ExchangeReport(not violations, checked, tuple(violations))


def check_l_exchange(generators: Iterable[Monomial], bound: int,
                     term_order: TermOrder = T_LEX,
                     max_violations: Optional[int] = None) -> ExchangeReport:
    """
    Свойство ℓ-обмена для B на стандартных мономах T-степени <= bound.

    Для стандартных T_{u_1}···T_{u_N}, T_{v_1}···T_{v_N} с равными ν_i при i < q и
    ν_q(u) < ν_q(v) ищутся δ и q < j <= n, j ∈ supp(u_δ), x_q u_δ / x_j ∈ B.

    :param generators: Множество B одной степени.
    :param bound: Наибольшая степень N.
    :param term_order: Порядок на K[T], задающий стандартные мономы.
    :param max_violations: Сколько нарушений собрать (None означает все).
    """
    gens, members = _prepare(generators, bound)
    violations: List[ExchangeViolation] = []
    checked = 0
    for uf, up, vf, vp in _standard_pairs(gens, bound, term_order):
        if LEX.compare(up, vp) >= 0:
            continue
        checked += 1
        q = next(i for i in range(1, up.ring.n + 1) if up.nu(i) != vp.nu(i))
        found, trace = _find_exchange(uf, [q], lambda q_, j: j > q_, members)
        if found is None:
            violations.append(ExchangeViolation(tuple(uf), tuple(vf), tuple(trace)))
            if max_violations is not None and len(violations) >= max_violations:
                break
    return _report(violations, checked, "ℓ-обмен")


def check_sigma_exchange(generators: Iterable[Monomial], sigma: MonomialOrder, bound: int,
                         term_order: TermOrder = T_LEX,
                         max_violations: Optional[int] = None) -> ExchangeReport:
    """
    Свойство σ-обмена для B на стандартных мономах T-степени <= bound.

    Для стандартных пар с u_1···u_N <_σ v_1···v_N ищутся δ, q ∈ supp(v_1···v_N) и
    j ∈ supp(u_δ) с ν_q(u) < ν_q(v), x_j <_σ x_q и x_q u_δ / x_j ∈ B.
    """
    gens, members = _prepare(generators, bound)
    ring = gens[0].ring
    # ранги переменных в σ: чем больше ранг, тем больше переменная
    variables = [ring.variable(i) for i in range(1, ring.n + 1)]
    order = sigma.sorted_desc(variables)
    rank = {v.min_index(): len(order) - k for k, v in enumerate(order)}
    violations: List[ExchangeViolation] = []
    checked = 0
    for uf, up, vf, vp in _standard_pairs(gens, bound, term_order):
        if sigma.compare(up, vp) >= 0:
            continue
        checked += 1
        qs = [q for q in sorted(vp.support()) if up.nu(q) < vp.nu(q)]
        found, trace = _find_exchange(uf, qs, lambda q, j: rank[j] < rank[q], members)
        if found is None:
            violations.append(ExchangeViolation(tuple(uf), tuple(vf), tuple(trace)))
            if max_violations is not None and len(violations) >= max_violations:
                break
    return _report(violations, checked, f"σ-обмен ({sigma.name})")
