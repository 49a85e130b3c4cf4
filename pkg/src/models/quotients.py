from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, Optional, Tuple

from src.models.errors import DimensionError, ValidationError
from src.models.lexsegment import ResolutionClass
from src.models.monomial import Monomial
from src.models.orders import MonomialOrder


@dataclass(frozen=True)
class OrderedGenerators:
    '''
    Минимальные образующие w_1 > ... > w_r одной степени,
    строго убывающие в порядке order.
    '''
    gens: Tuple[Monomial, ...]
    order: MonomialOrder

    def __post_init__(self):
        if not self.gens:
            raise ValidationError("Пустой список образующих")
        degrees = {g.degree for g in self.gens}
        if len(degrees) != 1:
            raise DimensionError(f"Образующие разных степеней: {sorted(degrees)}")
        for a, b in zip(self.gens, self.gens[1:]):
            if self.order.compare(a, b) <= 0:
                raise ValidationError(f"{a} и {b} не убывают строго в порядке {self.order.name}")

    @classmethod
    def of(cls, gens: Iterable[Monomial], order: MonomialOrder) -> 'OrderedGenerators':
        """Удаляет повторы и сортирует по убыванию в order."""
        return cls(tuple(order.sorted_desc(set(gens))), order)

    def __len__(self) -> int:
        return len(self.gens)


@dataclass(frozen=True)
class Witness:
    '''
    Свидетель для пары j < i (позиции с 1): w_k : w_i = x_q и x_q делит w_j : w_i.
    '''
    i: int
    j: int
    k: int
    q: int

    def to_json(self) -> Dict:
        return {"i": self.i, "j": self.j, "k": self.k, "q": self.q}


@dataclass(frozen=True)
class QuotientCertificate:
    ok: bool
    witnesses: Tuple[Witness, ...] = ()
    failure: Optional[Tuple[int, int]] = None

    def to_json(self) -> Dict:
        return {
            "ok": self.ok,
            "witnesses": len(self.witnesses),
            "failure": list(self.failure) if self.failure else None,
        }


class SearchStatus(Enum):
    FOUND = "found"
    REFUTED = "refuted"
    # образующих больше предела перебора
    NOT_REFUTED = "not-refuted"


@dataclass(frozen=True)
class OrderSearchResult:
    status: SearchStatus
    order: Optional[Tuple[Monomial, ...]] = None


@dataclass(frozen=True)
class PowerSuiteReport:
    '''
    Итог проверки линейных частных степеней B^N при N = 1..N_max
    в σ-убывающем порядке.
    '''
    certificates: Dict[int, QuotientCertificate] = field(default_factory=dict)

    @property
    def first_failure(self) -> Optional[int]:
        for N in sorted(self.certificates):
            if not self.certificates[N].ok:
                return N
        return None

    @property
    def ok(self) -> bool:
        return self.first_failure is None


@dataclass(frozen=True)
class EquivalenceRecord:
    '''
    Сверка классификации с линейными частными для одной пары (u, v).
    consistent = None, если сверка не проводилась (случай не классифицирован
    или перебор порядков не по силам).
    '''
    classification: ResolutionClass
    generators: int
    power_status: Dict[int, bool]
    search: Optional[SearchStatus]
    consistent: Optional[bool]
