"""
Эталонные примеры, воспроизводимые подкомандой paper-examples.
"""
import logging
from dataclasses import dataclass
from typing import Callable, List, Tuple

from src.models.monomial import PolynomialRing
from src.models.tableau import SupportMultiset
from src.operation.exchange import check_l_exchange
from src.operation.lexsegments import build_lexsegment, classify, final_lexsegment
from src.operation.tableaux import standard_tableau_from_support

logger = logging.getLogger(__name__)

TABLEAU_ROWS = ((1, 6, 7), (1, 6, 8), (2, 5, 6), (3, 4, 4), (3, 4, 5))


@dataclass(frozen=True)
class ExampleResult:
    name: str
    expected: str
    actual: str

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def to_json(self):
        return {"name": self.name, "expected": self.expected, "actual": self.actual, "ok": self.ok}


def tableau_example() -> ExampleResult:
    support = SupportMultiset(tuple(a for row in TABLEAU_ROWS for a in row))
    tableau = standard_tableau_from_support(support, 5, 3, 8)
    return ExampleResult("standard-tableau", repr(TABLEAU_ROWS), repr(tableau.rows))


def l_exchange_example() -> ExampleResult:
    # L^f(x1x3x4) при n=4: пара (T_{x2^3})^2, (T_{x1x3x4})^2 нарушает ℓ-обмен
    ring = PolynomialRing(4)
    u, v = ring.monomial((0, 3, 0, 0)), ring.monomial((1, 0, 1, 1))
    report = check_l_exchange(final_lexsegment(v).generators, 2)
    found = any(
        set(viol.u_factors) == {u} and set(viol.v_factors) == {v}
        for viol in report.violations
    )
    actual = "violated" if not report.satisfied and found else "not reproduced"
    return ExampleResult("l-exchange-counterexample", "violated", actual)


def non_completely_example() -> ExampleResult:
    ring = PolynomialRing(4)
    ideal = build_lexsegment(ring.monomial((1, 0, 1, 1)), ring.monomial((0, 1, 0, 2)))
    return ExampleResult("non-completely-classification", "NonCompletely(l=2)", classify(ideal).label())


EXAMPLES: Tuple[Callable[[], ExampleResult], ...] = (
    tableau_example,
    l_exchange_example,
    non_completely_example,
)


def run_reference_examples() -> List[ExampleResult]:
    results = []
    for example in EXAMPLES:
        result = example()
        if not result.ok:
            logger.error("Пример %s: ожидалось %s, получено %s", result.name, result.expected, result.actual)
        results.append(result)
    return results
