import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from src.models.lexsegment import Verdict
from src.models.monomial import PolynomialRing
from src.models.settings import Settings
from src.operation.lexsegments import all_lexsegment_pairs, build_lexsegment
from src.operation.quotients import master_equivalence_record
from src.operation.rees import koszul_certificate, rees_gb, verify_groebner

logger = logging.getLogger(__name__)

Task = Tuple[int, int, str, str]


@dataclass(frozen=True)
class ReesSummary:
    gb_size: int
    quadratic: bool
    verified: bool


@dataclass(frozen=True)
class SweepRecord:
    '''
    Одна запись прогона: вход (n, d, u, v), вердикт, статус линейных частных
    по N и, для невполне-случая, сводка по базису Грёбнера алгебры Риса.
    '''
    n: int
    d: int
    u: str
    v: str
    verdict: str
    label: str
    completeness_iters: int
    complete_up_to: int
    generators: int
    power_status: Dict[str, bool] = field(default_factory=dict)
    search: Optional[str] = None
    consistent: Optional[bool] = None
    rees: Optional[ReesSummary] = None
    elapsed: float = 0.0

    @property
    def failed(self) -> bool:
        if self.consistent is False:
            return True
        return self.rees is not None and not (self.rees.quadratic and self.rees.verified)

    def to_json(self) -> Dict:
        return asdict(self)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_json(cls, data: Dict) -> 'SweepRecord':
        data = dict(data)
        if data.get("rees") is not None:
            data["rees"] = ReesSummary(**data["rees"])
        return cls(**data)


def sweep_tasks(n_max: int, d_max: int) -> List[Task]:
    """Все пары (u, v) при 2 <= n <= n_max, 2 <= d <= d_max в каноническом порядке."""
    tasks = []
    for n in range(2, n_max + 1):
        ring = PolynomialRing(n)
        for d in range(2, d_max + 1):
            for u, v in all_lexsegment_pairs(ring, d):
                tasks.append((n, d, u.text(), v.text()))
    return tasks


def evaluate(task: Task, N_max: int, settings: Settings = Settings(), with_rees: bool = True) -> SweepRecord:
    """Вычисляет запись для одной пары (u, v)."""
    n, d, u_text, v_text = task
    started = time.perf_counter()
    ring = PolynomialRing(n)
    u = ring.monomial([int(e) for e in u_text.split(",")])
    v = ring.monomial([int(e) for e in v_text.split(",")])
    record = master_equivalence_record(u, v, N_max, settings.exhaustive_order_limit,
                                       settings.shadow_iterations)
    cls = record.classification
    rees = None
    if with_rees and cls.verdict == Verdict.NON_COMPLETELY:
        basis = rees_gb(build_lexsegment(u, v))
        rees = ReesSummary(
            gb_size=len(basis.binomials),
            quadratic=koszul_certificate(basis.binomials),
            verified=verify_groebner(basis.binomials, basis.order, settings.reduction_step_budget),
        )
    return SweepRecord(
        n=n, d=d, u=u_text, v=v_text,
        verdict=cls.verdict.value,
        label=cls.label(),
        completeness_iters=cls.iterations,
        complete_up_to=cls.complete_up_to,
        generators=record.generators,
        power_status={str(N): ok for N, ok in sorted(record.power_status.items())},
        search=record.search.value if record.search else None,
        consistent=record.consistent,
        rees=rees,
        elapsed=round(time.perf_counter() - started, 6),
    )


def _evaluate_packed(args) -> SweepRecord:
    return evaluate(*args)


def run_sweep(n_max: int, d_max: int, N_max: int, settings: Settings = Settings(),
              with_rees: bool = True) -> List[SweepRecord]:
    """
    Прогон по всем парам. При settings.workers > 1 записи считаются в пуле процессов,
    но возвращаются в каноническом порядке входа.
    """
    tasks = sweep_tasks(n_max, d_max)
    packed = [(t, N_max, settings, with_rees) for t in tasks]
    logger.info("Прогон: %d пар, N <= %d, процессов %d", len(tasks), N_max, settings.workers)
    if settings.workers > 1:
        with ProcessPoolExecutor(max_workers=settings.workers) as pool:
            records = list(pool.map(_evaluate_packed, packed))
    else:
        records = [_evaluate_packed(p) for p in packed]
    failures = sum(r.failed for r in records)
    if failures:
        logger.error("Прогон: %d расхождений", failures)
    return records


def dump_records(records: Sequence[SweepRecord], path: str):
    """
    Сохраняет записи в файл в формате JSON.
    """
    with open(path, "w", encoding="utf-8") as file:
        json.dump([r.to_json() for r in records], file, ensure_ascii=False, indent=4, sort_keys=True)


def load_records(path: str) -> List[SweepRecord]:
    with open(path, "r", encoding="utf-8") as file:
        return [SweepRecord.from_json(item) for item in json.load(file)]
