import logging
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from src.models.errors import ReductionBudgetError
from src.models.lexsegment import LexSegmentIdeal
from src.models.orders import MonomialOrder, REVLEX_DEC
from src.models.toric import (
    ExchangeReport,
    MixedMonomial,
    ProductOrder,
    T_LEX,
    ToricBinomial,
    TVariable,
)
from src.operation.exchange import check_sigma_exchange
from src.operation.toric import lexsegment_algebra_gb, require_kernel

logger = logging.getLogger(__name__)

DEFAULT_STEP_BUDGET = 10 ** 6


@dataclass(frozen=True)
class ReesBasis:
    '''
    Базис идеала P_{R(I)}: слоевые соотношения бистепени (0,2)
    и линейные соотношения x_i T_u - x_j T_v бистепени (1,1).
    '''
    order: ProductOrder
    fiber: Tuple[ToricBinomial, ...]
    linear: Tuple[ToricBinomial, ...]
    exchange: Optional[ExchangeReport] = None

    @property
    def binomials(self) -> Tuple[ToricBinomial, ...]:
        return self.fiber + self.linear

    @property
    def warning(self) -> bool:
        """Проверка σ-обмена запрашивалась и не прошла."""
        return self.exchange is not None and not self.exchange.satisfied


def linear_relations(ideal: LexSegmentIdeal, sigma: MonomialOrder) -> List[ToricBinomial]:
    """
    Биномы x_i T_u - x_j T_v, где x_i >_σ x_j, x_j есть σ-наименьшая переменная
    с x_i u / x_j ∈ B, и v = x_i u / x_j. Перебираются все тройки (u, i, j).
    """
    ring = ideal.ring
    members = set(ideal.generators)
    variables = [ring.variable(i) for i in range(1, ring.n + 1)]
    order = ProductOrder(sigma, T_LEX)
    seen = {}
    for u in ideal.generators:
        for xi in variables:
            i = xi.min_index()
            candidates = []
            for j in sorted(u.support()):
                if j == i or sigma.compare(xi, variables[j - 1]) <= 0:
                    continue
                v = u.exchange(i, j)
                if v in members:
                    candidates.append((variables[j - 1], v))
            if not candidates:
                continue
            xj, v = min(candidates, key=lambda c: sigma.sort_key(c[0]))
            binomial = ToricBinomial.oriented(
                MixedMonomial(xi, (TVariable.of(u),)),
                MixedMonomial(xj, (TVariable.of(v),)),
                order,
            )
            seen[binomial] = None
    return list(seen)


def rees_gb(ideal: LexSegmentIdeal, sigma: MonomialOrder = REVLEX_DEC,
            check_exchange: bool = False, exchange_bound: int = 2) -> ReesBasis:
    """
    Базис Грёбнера идеала Риса: G' вместе с линейными соотношениями.

    :param ideal: Лексегментный идеал, B = G(I).
    :param sigma: Порядок на S (x-части сравниваются первыми).
    :param check_exchange: Проверить σ-обмен для B; при нарушении базис всё равно
        возвращается, но с флагом warning.
    :param exchange_bound: Граница T-степени для проверки обмена.
    """
    exchange = None
    if check_exchange:
        exchange = check_sigma_exchange(ideal.generators, sigma, exchange_bound)
        if not exchange.satisfied:
            logger.warning("B = L(%s, %s) не удовлетворяет σ-обмену (%s); базис может быть неполным",
                           ideal.u, ideal.v, sigma.name)
    fiber = tuple(lexsegment_algebra_gb(ideal))
    linear = tuple(linear_relations(ideal, sigma))
    logger.debug("rees_gb: %d слоевых и %d линейных соотношений", len(fiber), len(linear))
    return ReesBasis(ProductOrder(sigma, T_LEX), fiber, linear, exchange)


class _Reducer:
    # Старшие члены проиндексированы по переменным T, которые в них входят.

    def __init__(self, gb: Sequence[ToricBinomial], budget: int):
        self.gb = list(gb)
        self.budget = budget
        self.buckets: Dict[TVariable, List[ToricBinomial]] = defaultdict(list)
        self.free: List[ToricBinomial] = []
        for b in self.gb:
            if b.lhs.tpart:
                self.buckets[b.lhs.tpart[0]].append(b)
            else:
                self.free.append(b)

    def divisor(self, m: MixedMonomial) -> Optional[ToricBinomial]:
        for b in self.free:
            if b.lhs.divides(m):
                return b
        for t in dict.fromkeys(m.tpart):
            for b in self.buckets.get(t, ()):
                if b.lhs.divides(m):
                    return b
        return None

    def normal_form(self, m: MixedMonomial) -> MixedMonomial:
        steps = 0
        while True:
            b = self.divisor(m)
            if b is None:
                return m
            steps += 1
            if steps > self.budget:
                raise ReductionBudgetError(f"Редукция {m!r} превысила {self.budget} шагов")
            m = (m // b.lhs) * b.rhs


def s_pair(f: ToricBinomial, g: ToricBinomial) -> Tuple[MixedMonomial, MixedMonomial]:
    """
    S(f, g) для f = A - B, g = C - D: (L/C)·D - (L/A)·B, где L = lcm(A, C).
    """
    lcm = f.lhs.lcm(g.lhs)
    return (lcm // g.lhs) * g.rhs, (lcm // f.lhs) * f.rhs


def verify_groebner(gb: Iterable[ToricBinomial], order: ProductOrder,
                    step_budget: int = DEFAULT_STEP_BUDGET) -> bool:
    """
    Критерий Бухбергера: каждая S-пара редуцируется к нулю по gb.

    Бином m1 - m2 редуцируется к нулю ровно тогда, когда нормальные формы
    m1 и m2 совпадают. Пары со взаимно простыми старшими членами пропускаются.

    :param gb: Биномы ядра.
    :param order: Порядок <_σ^#.
    :param step_budget: Бюджет шагов на одну S-пару.
    :raises KernelError: Если какой-либо бином не лежит в ядре.
    :raises ReductionBudgetError: Если бюджет исчерпан.
    """
    basis = [ToricBinomial.oriented(b.lhs, b.rhs, order) for b in gb]
    require_kernel(basis)
    reducer = _Reducer(basis, step_budget)
    for f, g in combinations(basis, 2):
        if f.lhs.coprime(g.lhs):
            continue
        m1, m2 = s_pair(f, g)
        if reducer.normal_form(m1) != reducer.normal_form(m2):
            logger.info("S-пара (%r, %r) не редуцируется к нулю", f, g)
            return False
    return True


def is_reduced(gb: Iterable[ToricBinomial], order: ProductOrder) -> bool:
    """
    Взаимная редуцированность: ни один старший член не делит другой,
    и ни один младший член не делится на старший.
    """
    basis = [ToricBinomial.oriented(b.lhs, b.rhs, order) for b in gb]
    for i, f in enumerate(basis):
        for k, g in enumerate(basis):
            if i != k and g.lhs.divides(f.lhs):
                return False
            if g.lhs.divides(f.rhs):
                return False
    return True


def koszul_certificate(gb: Iterable[ToricBinomial]) -> bool:
    """Все элементы квадратичны: бистепень (0,2) или (1,1)."""
    return all(b.bidegree in ((0, 2), (1, 1)) for b in gb)


def fiber_type_split(gb: Iterable[ToricBinomial]):
    """
    Разбивает базис на слоевые соотношения (x-степень 0), линейные (1,1) и прочие.
    """
    fiber, linear, other = [], [], []
    for b in gb:
        if b.bidegree[0] == 0:
            fiber.append(b)
        elif b.bidegree == (1, 1):
            linear.append(b)
        else:
            other.append(b)
    return fiber, linear, other


def is_fiber_type(gb: Iterable[ToricBinomial]) -> bool:
    return not fiber_type_split(gb)[2]
