from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, Tuple

from src.models.errors import DimensionError, ValidationError
from src.models.monomial import Monomial, PolynomialRing
from src.models.orders import MonomialOrder, REVLEX_DEC
from src.models.tableau import Row


@dataclass(frozen=True, order=False)
class TVariable:
    '''
    Переменная T_a, a = (a_1 <= ... <= a_d). T_a > T_b тогда и только тогда,
    когда x_a >_lex x_b, то есть a < b как кортежи.
    '''
    row: Row

    @classmethod
    def of(cls, m: Monomial) -> 'TVariable':
        return cls(m.indices())

    def monomial(self, ring: PolynomialRing) -> Monomial:
        return ring.from_indices(self.row)

    def __repr__(self) -> str:
        return "T" + "".join(str(a) for a in self.row)


def _sorted_t(tpart: Iterable[TVariable]) -> Tuple[TVariable, ...]:
    # по убыванию переменных T, то есть по возрастанию строк
    return tuple(sorted(tpart, key=lambda t: t.row))


@dataclass(frozen=True)
class MixedMonomial:
    '''
    Моном кольца S[T]: x-часть и мультимножество переменных T.
    Бистепень (deg xpart, |tpart|).
    '''
    xpart: Monomial
    tpart: Tuple[TVariable, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "tpart", _sorted_t(self.tpart))
        d = None
        for t in self.tpart:
            if any(a > self.xpart.ring.n for a in t.row):
                raise DimensionError(f"{t} содержит индекс больше n={self.xpart.ring.n}")
            if d is not None and len(t.row) != d:
                raise DimensionError("Переменные T разной степени")
            d = len(t.row)

    @property
    def ring(self) -> PolynomialRing:
        return self.xpart.ring

    @property
    def bidegree(self) -> Tuple[int, int]:
        return (self.xpart.degree, len(self.tpart))

    def t_counts(self) -> Counter:
        return Counter(self.tpart)

    def image(self) -> Tuple[Monomial, int]:
        """φ(x^m T_{u_1}···T_{u_N}) = x^m u_1···u_N · t^N."""
        result = self.xpart
        for t in self.tpart:
            result = result * t.monomial(self.ring)
        return result, len(self.tpart)

    def divides(self, other: 'MixedMonomial') -> bool:
        if not self.xpart.divides(other.xpart):
            return False
        mine, theirs = self.t_counts(), other.t_counts()
        return all(theirs[t] >= c for t, c in mine.items())

    def __mul__(self, other: 'MixedMonomial') -> 'MixedMonomial':
        return MixedMonomial(self.xpart * other.xpart, self.tpart + other.tpart)

    def __floordiv__(self, other: 'MixedMonomial') -> 'MixedMonomial':
        if not other.divides(self):
            raise ValidationError(f"{other} не делит {self}")
        rest = self.t_counts()
        rest.subtract(other.t_counts())
        return MixedMonomial(self.xpart // other.xpart, tuple(rest.elements()))

    def lcm(self, other: 'MixedMonomial') -> 'MixedMonomial':
        counts = self.t_counts() | other.t_counts()
        return MixedMonomial(self.xpart.lcm(other.xpart), tuple(counts.elements()))

    def coprime(self, other: 'MixedMonomial') -> bool:
        if self.xpart.gcd(other.xpart).degree:
            return False
        return not (self.t_counts() & other.t_counts())

    def rows(self) -> List[List[int]]:
        return [list(t.row) for t in self.tpart]

    def __repr__(self) -> str:
        parts = [] if self.xpart.degree == 0 else [self.xpart.pretty()]
        parts += [repr(t) for t in self.tpart]
        return "*".join(parts) if parts else "1"


class TermOrderKind(Enum):
    LEX = "lex"
    DEGREVLEX = "degrevlex"


@dataclass(frozen=True)
class TermOrder:
    '''
    Мономиальный порядок на K[T] при T_a > T_b ⇔ x_a >_lex x_b.
    LEX используется по умолчанию, DEGREVLEX как альтернатива.
    '''
    kind: TermOrderKind = TermOrderKind.LEX

    @classmethod
    def from_name(cls, name: str) -> 'TermOrder':
        for kind in TermOrderKind:
            if kind.value == name:
                return cls(kind)
        raise ValidationError(f"Неизвестный порядок на T: '{name}'")

    @property
    def name(self) -> str:
        return self.kind.value

    def sort_key(self, tpart: Iterable[TVariable]):
        rows = [t.row for t in tpart]
        if self.kind == TermOrderKind.LEX:
            # в первой различающейся позиции выигрывает меньшая строка,
            # а собственный префикс меньше
            return tuple(tuple(-a for a in r) for r in sorted(rows))
        desc = sorted(rows, reverse=True)
        return (len(desc), tuple(tuple(-a for a in r) for r in desc))

    def compare(self, a: Iterable[TVariable], b: Iterable[TVariable]) -> int:
        ka, kb = self.sort_key(a), self.sort_key(b)
        return (ka > kb) - (ka < kb)


T_LEX = TermOrder(TermOrderKind.LEX)
T_DEGREVLEX = TermOrder(TermOrderKind.DEGREVLEX)


@dataclass(frozen=True)
class ProductOrder:
    '''
    Произведение порядков <_σ^#: сначала x-части по σ, при равенстве T-части по <^#.
    '''
    sigma: MonomialOrder = REVLEX_DEC
    term: TermOrder = T_LEX

    def sort_key(self, m: MixedMonomial):
        return (self.sigma.sort_key(m.xpart), self.term.sort_key(m.tpart))

    def compare(self, a: MixedMonomial, b: MixedMonomial) -> int:
        ka, kb = self.sort_key(a), self.sort_key(b)
        return (ka > kb) - (ka < kb)


@dataclass(frozen=True)
class ToricBinomial:
    '''
    Бином lhs - rhs ядра отображения T_u ↦ u·t, x_i ↦ x_i.
    lhs: старший член в активном порядке.
    '''
    lhs: MixedMonomial
    rhs: MixedMonomial

    @classmethod
    def oriented(cls, a: MixedMonomial, b: MixedMonomial, order: ProductOrder) -> 'ToricBinomial':
        """Бином со старшим членом слева."""
        if order.compare(a, b) >= 0:
            return cls(a, b)
        return cls(b, a)

    @property
    def bidegree(self) -> Tuple[int, int]:
        return self.lhs.bidegree

    def in_kernel(self) -> bool:
        return self.lhs.image() == self.rhs.image()

    def to_json(self) -> Dict:
        return {
            "xlead": self.lhs.xpart.text(),
            "tlead": self.lhs.rows(),
            "xtail": self.rhs.xpart.text(),
            "ttail": self.rhs.rows(),
            "bidegree": list(self.bidegree),
        }

    def __repr__(self) -> str:
        return f"{self.lhs!r} - {self.rhs!r}"


@dataclass(frozen=True)
class ExchangeViolation:
    '''
    Пара стандартных мономов T_{u_1}···T_{u_N}, T_{v_1}···T_{v_N}, для которой
    обмен не найден, и перебранные тройки (δ, q, j).
    '''
    u_factors: Tuple[Monomial, ...]
    v_factors: Tuple[Monomial, ...]
    trace: Tuple[Tuple[int, int, int], ...] = ()

    def to_json(self) -> Dict:
        return {
            "u": [m.text() for m in self.u_factors],
            "v": [m.text() for m in self.v_factors],
            "trace": [list(t) for t in self.trace],
        }


@dataclass(frozen=True)
class ExchangeReport:
    satisfied: bool
    pairs_checked: int
    violations: Tuple[ExchangeViolation, ...] = field(default=())

    @property
    def counterexample(self) -> Optional[ExchangeViolation]:
        return self.violations[0] if self.violations else None

    def to_json(self) -> Dict:
        return {
            "satisfied": self.satisfied,
            "pairs_checked": self.pairs_checked,
            "counterexample": self.counterexample.to_json() if self.counterexample else None,
            "violations": len(self.violations),
        }

