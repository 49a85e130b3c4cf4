"""
Проверки четырёх лемм о стандартных произведениях на случайных данных.

Каждая проверка получает уже подготовленные сомножители, сама отфильтровывает
случаи, где гипотеза леммы не выполнена, и возвращает LemmaOutcome.
"""
import logging
import random
from dataclasses import dataclass
from typing import Dict, List, Sequence

from src.models.monomial import Monomial, PolynomialRing, product
from src.models.orders import LEX
from src.operation.tableaux import is_standard_product, standard_representation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LemmaOutcome:
    applicable: bool
    holds: bool
    detail: str = ""


NOT_APPLICABLE = LemmaOutcome(False, True, "гипотеза не выполнена")


def _lex_ge(a: Monomial, b: Monomial) -> bool:
    return LEX.compare(a, b) >= 0


def check_x1d_lemma(factors: Sequence[Monomial]) -> LemmaOutcome:
    """
    Если w_1···w_N стандартно и w'_1···w'_{N+1} есть стандартное представление
    x_1^d·w_1···w_N, то w'_1 >=_lex w_1.
    """
    if not is_standard_product(factors):
        return NOT_APPLICABLE
    ring, d = factors[0].ring, factors[0].degree
    w = sorted(factors, key=LEX.sort_key, reverse=True)
    extended = standard_representation([ring.pure_power(1, d)] + list(w))
    return LemmaOutcome(True, _lex_ge(extended[0], w[0]), f"w'_1={extended[0]}, w_1={w[0]}")


def _shift_by_xn_over_x1(factors: Sequence[Monomial]):
    # x_n·u_1···u_N = x_1·w_1···w_N, где w есть стандартное представление x_n·U/x_1
    ring = factors[0].ring
    u = standard_representation(factors)
    total = product(u)
    if ring.n < 2 or total.nu(1) == 0:
        return None
    shifted = (total * ring.variable(ring.n)) // ring.variable(1)
    w = standard_representation(_split(shifted, len(u), factors[0].degree))
    return u, w


def _split(m: Monomial, N: int, d: int) -> List[Monomial]:
    # любое разбиение строки индексов на N кусков длины d
    row = m.indices()
    return [m.ring.from_indices(row[k * d:(k + 1) * d]) for k in range(N)]


def check_xn_u1_lemma(factors: Sequence[Monomial]) -> LemmaOutcome:
    """
    Если u_1···u_N и w_1···w_N стандартны и u_1···u_N·x_n = x_1·w_1···w_N,
    то u_1 >=_lex w_1.
    """
    pair = _shift_by_xn_over_x1(factors)
    if pair is None:
        return NOT_APPLICABLE
    u, w = pair
    return LemmaOutcome(True, _lex_ge(u[0], w[0]), f"u_1={u[0]}, w_1={w[0]}")


def check_last_factor_lemma(factors: Sequence[Monomial]) -> LemmaOutcome:
    """
    Если x_n·u_1···u_N = x_1·w_1···w_N и оба произведения стандартны,
    то u_N >=_lex w_N.
    """
    pair = _shift_by_xn_over_x1(factors)
    if pair is None:
        return NOT_APPLICABLE
    u, w = pair
    return LemmaOutcome(True, _lex_ge(u[-1], w[-1]), f"u_N={u[-1]}, w_N={w[-1]}")


def check_n_plus_one_lemma(factors: Sequence[Monomial], last: Monomial) -> LemmaOutcome:
    """
    Пусть u_1 >= ... >= u_N >= u_{N+1}, ν_1(u_i) <= 1 при i <= N, u_1···u_N стандартно
    и max supp(u_1···u_N) <= min supp(u_{N+1}). Тогда для стандартного представления
    v_1···v_{N+1} произведения u_1···u_{N+1} выполнено v_{N+1} <=_lex u_N.
    """
    u = sorted(factors, key=LEX.sort_key, reverse=True)
    if not is_standard_product(u):
        return NOT_APPLICABLE
    if any(f.nu(1) > 1 for f in u):
        return NOT_APPLICABLE
    if not _lex_ge(u[-1], last):
        return NOT_APPLICABLE
    if product(u).max_index() > last.min_index():
        return NOT_APPLICABLE
    v = standard_representation(u + [last])
    return LemmaOutcome(True, _lex_ge(u[-1], v[-1]), f"v_(N+1)={v[-1]}, u_N={u[-1]}")


def random_monomial(rng: random.Random, ring: PolynomialRing, d: int, low: int = 1) -> Monomial:
    """Случайный моном степени d от переменных x_low..x_n."""
    return ring.from_indices(sorted(rng.randint(low, ring.n) for _ in range(d)))


@dataclass(frozen=True)
class LemmaSuiteResult:
    lemma: str
    applicable: int
    violations: List[str]
    attempts: int

    @property
    def ok(self) -> bool:
        return not self.violations


def _draw_shape(rng: random.Random, max_n: int, max_d: int, max_N: int):
    ring = PolynomialRing(rng.randint(2, max_n))
    return ring, rng.randint(2, max_d), rng.randint(1, max_N)


def _case_standard(rng, max_n, max_d, max_N):
    ring, d, N = _draw_shape(rng, max_n, max_d, max_N)
    return (standard_representation([random_monomial(rng, ring, d) for _ in range(N)]),)


def _case_shift(rng, max_n, max_d, max_N):
    ring, d, N = _draw_shape(rng, max_n, max_d, max_N)
    factors = [random_monomial(rng, ring, d) for _ in range(N)]
    # гарантируем делимость на x_1
    factors[0] = ring.from_indices(sorted((1,) + factors[0].indices()[1:]))
    return (factors,)


def _case_n_plus_one(rng, max_n, max_d, max_N):
    ring, d, N = _draw_shape(rng, max_n, max_d, max_N)
    factors = []
    for _ in range(N):
        m = random_monomial(rng, ring, d, low=2)
        if rng.random() < 0.5:
            m = ring.from_indices(sorted((1,) + m.indices()[1:]))
        factors.append(m)
    u = standard_representation(factors)
    top = product(u).max_index()
    return u, random_monomial(rng, ring, d, low=top)


LEMMAS: Dict[str, tuple] = {
    "x1^d": (check_x1d_lemma, _case_standard),
    "x_n*u_1": (check_xn_u1_lemma, _case_shift),
    "N+1": (check_n_plus_one_lemma, _case_n_plus_one),
    "u_N>=w_N": (check_last_factor_lemma, _case_shift),
}


def run_lemma_suite(cases: int, seed: int, max_n: int = 5, max_d: int = 3,
                    max_N: int = 3) -> List[LemmaSuiteResult]:
    """
    Прогоняет каждую лемму, пока не наберётся cases применимых случаев
    (или 20·cases попыток).

    :param cases: Требуемое число применимых случаев на лемму.
    :param seed: Зерно генератора.
    :return: Список результатов по леммам.
    """
    results = []
    for name, (check, draw) in LEMMAS.items():
        rng = random.Random(f"{seed}:{name}")
        applicable, attempts, violations = 0, 0, []
        while applicable < cases and attempts < 20 * cases:
            attempts += 1
            outcome = check(*draw(rng, max_n, max_d, max_N))
            if not outcome.applicable:
                continue
            applicable += 1
            if not outcome.holds:
                violations.append(outcome.detail)
        logger.debug("Лемма %s: %d применимых из %d попыток", name, applicable, attempts)
        results.append(LemmaSuiteResult(name, applicable, violations, attempts))
    return results
