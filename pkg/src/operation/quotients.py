import logging
from itertools import combinations_with_replacement
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from src.models.errors import DimensionError, PreconditionError, ValidationError
from src.models.lexsegment import LexSegmentIdeal, Verdict
from src.models.monomial import Monomial
from src.models.orders import LEX, MonomialOrder
from src.models.quotients import (
    EquivalenceRecord,
    OrderedGenerators,
    OrderSearchResult,
    PowerSuiteReport,
    QuotientCertificate,
    SearchStatus,
    Witness,
)
from src.operation.exchange import check_sigma_exchange
from src.operation.lexsegments import build_lexsegment, classify
from src.operation.tableaux import standard_representation

logger = logging.getLogger(__name__)

DEFAULT_SEARCH_LIMIT = 7

Exps = Tuple[int, ...]


def _check_generators(generators: Iterable[Monomial], N: int) -> List[Monomial]:
    gens = LEX.sorted_desc(set(generators))
    if not gens:
        raise ValidationError("Пустое множество образующих")
    if N < 1:
        raise ValidationError(f"Степень идеала должна быть положительной, получено N={N}")
    degrees = {g.degree for g in gens}
    if len(degrees) != 1:
        raise DimensionError(f"Образующие разных степеней: {sorted(degrees)}")
    return gens


def power_generators(generators: Iterable[Monomial], N: int) -> List[Monomial]:
    """
    G(I^N): различные произведения N образующих (с повторениями).
    Мономы одной степени не делят друг друга, так что множество минимально.

    :param generators: Образующие одной степени d.
    :param N: Степень, N >= 1.
    :return: Мономы степени N·d по убыванию в >_lex.
    :raises ValidationError: Для пустого B или N < 1.
    """
    gens = _check_generators(generators, N)
    products = {}
    for combo in combinations_with_replacement(gens, N):
        m = combo[0]
        for f in combo[1:]:
            m = m * f
        products[m.exponents] = m
    result = [products[e] for e in sorted(products, reverse=True)]
    logger.debug("power_generators: |B|=%d, N=%d, |G(I^N)|=%d", len(gens), N, len(result))
    if logger.isEnabledFor(logging.DEBUG):
        _check_minimal(result)
    return result


def _check_minimal(gens: Sequence[Monomial]):
    # попарная неделимость образующих G(I^N)
    for a in gens:
        for b in gens:
            if a is not b and a.divides(b):
                raise DimensionError(f"Образующая {a} делит {b}: множество не минимально")


def power_generators_step(previous: Iterable[Monomial], generators: Iterable[Monomial]) -> List[Monomial]:
    """G(I^{N+1}) как различные произведения G(I^N) на B."""
    gens = _check_generators(generators, 1)
    products = {}
    for p in previous:
        for g in gens:
            m = p * g
            products[m.exponents] = m
    return [products[e] for e in sorted(products, reverse=True)]


def factored_power_generators(generators: Iterable[Monomial], N: int) -> Dict[Monomial, Tuple[Monomial, ...]]:
    """Каждая образующая I^N вместе с её стандартным представлением."""
    gens = _check_generators(generators, N)
    result = {}
    for combo in combinations_with_replacement(gens, N):
        factors = tuple(standard_representation(list(combo)))
        m = factors[0]
        for f in factors[1:]:
            m = m * f
        result.setdefault(m, factors)
    return result


def _colon(a: Exps, b: Exps) -> Exps:
    return tuple(max(x - y, 0) for x, y in zip(a, b))


def _variable_index(e: Exps) -> Optional[int]:
    # номер q, если e задаёт переменную x_q
    if sum(e) != 1:
        return None
    return e.index(1) + 1


def _quotient_variables(earlier: Sequence[Exps], w: Exps) -> Dict[int, int]:
    # q -> наименьшая позиция k (с 1), для которой w_k : w = x_q
    found: Dict[int, int] = {}
    for k, wk in enumerate(earlier, start=1):
        q = _variable_index(_colon(wk, w))
        if q is not None and q not in found:
            found[q] = k
    return found


def has_linear_quotients(og: OrderedGenerators) -> QuotientCertificate:
    """
    Проверка линейных частных в порядке og.

    Для каждого i и каждого j < i ищется k < i с w_k : w_i = x_q и x_q | w_j : w_i.
    Из нескольких подходящих k выбирается наименьший.

    :param og: Упорядоченные образующие.
    :return: Сертификат со свидетелями или с первой парой (i, j) без свидетеля.
    """
    exps = [g.exponents for g in og.gens]
    witnesses: List[Witness] = []
    for i in range(1, len(exps)):
        w = exps[i]
        variables = _quotient_variables(exps[:i], w)
        for j in range(i):
            colon = _colon(exps[j], w)
            candidates = [(k, q) for q, k in variables.items() if colon[q - 1] > 0]
            if not candidates:
                logger.debug("Нет свидетеля для пары i=%d, j=%d в порядке %s", i + 1, j + 1, og.order.name)
                return QuotientCertificate(False, tuple(witnesses), (i + 1, j + 1))
            k, q = min(candidates)
            witnesses.append(Witness(i + 1, j + 1, k, q))
    return QuotientCertificate(True, tuple(witnesses))


def revalidate_certificate(og: OrderedGenerators, cert: QuotientCertificate) -> bool:
    """
    Независимая перепроверка свидетелей через gcd мономов.
    Для сертификата с ok=True каждая пара j < i должна иметь свидетеля.
    """
    gens = og.gens
    seen: Set[Tuple[int, int]] = set()
    for wit in cert.witnesses:
        if not (1 <= wit.j < wit.i <= len(gens) and 1 <= wit.k < wit.i):
            return False
        wi = gens[wit.i - 1]
        quotient = gens[wit.k - 1] // gens[wit.k - 1].gcd(wi)
        if not quotient.is_variable() or quotient.nu(wit.q) != 1:
            return False
        if (gens[wit.j - 1] // gens[wit.j - 1].gcd(wi)).nu(wit.q) == 0:
            return False
        seen.add((wit.i, wit.j))
    if cert.ok:
        r = len(gens)
        return len(seen) == r * (r - 1) // 2
    return True


def certify_order(generators: Iterable[Monomial], order: MonomialOrder) -> QuotientCertificate:
    return has_linear_quotients(OrderedGenerators.of(generators, order))


def prescribed_power_generators(ideal: LexSegmentIdeal, N: int,
                                iterations: Optional[int] = None) -> OrderedGenerators:
    """
    G(I^N) в предписанном классификацией порядке:
    ≻-убывающем во вполне-случаях и σ-убывающем в невполне-случае.

    :raises PreconditionError: Если классификация не положительна.
    """
    cls = classify(ideal, iterations)
    order = cls.prescribed_order()
    if order is None:
        raise PreconditionError(f"L({ideal.u}, {ideal.v}) классифицирован как {cls.label()}")
    return OrderedGenerators.of(power_generators(ideal.generators, N), order)


def verify_power_linear_quotients(ideal: LexSegmentIdeal, N: int,
                                  iterations: Optional[int] = None) -> QuotientCertificate:
    return has_linear_quotients(prescribed_power_generators(ideal, N, iterations))


def exhaustive_order_search(generators: Iterable[Monomial],
                            limit: int = DEFAULT_SEARCH_LIMIT) -> OrderSearchResult:
    """
    Ищет порядок образующих с линейными частными.

    Условие на позиции i зависит только от множества предыдущих образующих,
    поэтому перебор идёт по подмножествам (2^r состояний), а не по r! перестановкам.

    :param generators: Образующие одной степени.
    :param limit: Наибольшее число образующих для перебора.
    :return: FOUND с порядком, REFUTED или NOT_REFUTED (образующих больше limit).
    """
    gens = _check_generators(generators, 1)
    r = len(gens)
    if r > limit:
        logger.info("Перебор порядков пропущен: %d образующих > %d", r, limit)
        return OrderSearchResult(SearchStatus.NOT_REFUTED)
    exps = [g.exponents for g in gens]

    def admissible(mask: int, t: int) -> bool:
        earlier = [exps[k] for k in range(r) if mask >> k & 1]
        variables = _quotient_variables(earlier, exps[t])
        return all(any(_colon(e, exps[t])[q - 1] > 0 for q in variables) for e in earlier)

    parent: Dict[int, Tuple[int, int]] = {0: (-1, -1)}
    frontier = [0]
    for _ in range(r):
        nxt = []
        for mask in frontier:
            for t in range(r):
                if mask >> t & 1:
                    continue
                grown = mask | 1 << t
                if grown in parent or not admissible(mask, t):
                    continue
                parent[grown] = (mask, t)
                nxt.append(grown)
        frontier = nxt
    full = (1 << r) - 1
    if full not in parent:
        return OrderSearchResult(SearchStatus.REFUTED)
    order: List[Monomial] = []
    mask = full
    while mask:
        mask, t = parent[mask]
        order.append(gens[t])
    return OrderSearchResult(SearchStatus.FOUND, tuple(reversed(order)))


def exchange_implies_power_quotients_suite(generators: Iterable[Monomial], sigma: MonomialOrder,
                                           N_max: int, exchange_bound: int = 2,
                                           check_exchange: bool = True) -> PowerSuiteReport:
    """
    Для B со свойством σ-обмена проверяет линейные частные B^N, N = 1..N_max,
    в σ-убывающем порядке.

    :raises PreconditionError: Если check_exchange и B не удовлетворяет σ-обмену.
    """
    gens = _check_generators(generators, N_max)
    if check_exchange:
        report = check_sigma_exchange(gens, sigma, exchange_bound)
        if not report.satisfied:
            raise PreconditionError(f"B не удовлетворяет σ-обмену ({sigma.name}) при N <= {exchange_bound}")
    certificates = {}
    power = gens
    for N in range(1, N_max + 1):
        if N > 1:
            power = power_generators_step(power, gens)
        certificates[N] = certify_order(power, sigma)
        if not certificates[N].ok:
            logger.error("B^%d не имеет линейных частных в порядке %s", N, sigma.name)
            break
    return PowerSuiteReport(certificates)


def master_equivalence_record(u: Monomial, v: Monomial, N_max: int,
                              limit: int = DEFAULT_SEARCH_LIMIT,
                              iterations: Optional[int] = None) -> EquivalenceRecord:
    """
    Сверка для одной пары (u, v): положительная классификация ⇔ линейные частные
    степеней N = 1..N_max в предписанном порядке; для отрицательной классификации
    ни один порядок образующих I не даёт линейных частных.
    """
    ideal = build_lexsegment(u, v)
    cls = classify(ideal, iterations)
    if cls.verdict == Verdict.UNCLASSIFIED:
        return EquivalenceRecord(cls, len(ideal), {}, None, None)

    if cls.positive:
        status = {}
        power = list(ideal.generators)
        for N in range(1, N_max + 1):
            if N > 1:
                power = power_generators_step(power, ideal.generators)
            status[N] = certify_order(power, cls.prescribed_order()).ok
        consistent = all(status.values())
        if not consistent:
            logger.error("Расхождение: L(%s, %s) имеет вид %s, но степени без линейных частных %s",
                         u, v, cls.label(), status)
        return EquivalenceRecord(cls, len(ideal), status, None, consistent)

    search = exhaustive_order_search(ideal.generators, limit)
    consistent = None
    if search.status != SearchStatus.NOT_REFUTED:
        consistent = search.status == SearchStatus.REFUTED
        if not consistent:
            logger.error("Расхождение: L(%s, %s) имеет вид %s, но найден порядок %s",
                         u, v, cls.label(), search.order)
    return EquivalenceRecord(cls, len(ideal), {}, search.status, consistent)
