from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from src.models.monomial import Monomial, PolynomialRing
from src.models.orders import LEX, REVLEX_DEC, SUCC, MonomialOrder


@dataclass(frozen=True)
class LexSegmentIdeal:
    '''
    Лексегментный идеал (L(u,v)): концы u >=_lex v степени d и перечисленные
    образующие в лексикографически убывающем порядке.
    '''
    ring: PolynomialRing
    d: int
    u: Monomial
    v: Monomial
    generators: Tuple[Monomial, ...]

    @property
    def n(self) -> int:
        return self.ring.n

    def a(self, i: int) -> int:
        """a_i = ν_i(u)."""
        return self.u.nu(i)

    def b(self, i: int) -> int:
        """b_i = ν_i(v)."""
        return self.v.nu(i)

    def __contains__(self, w: Monomial) -> bool:
        return (w.ring == self.ring and w.degree == self.d
                and LEX.compare(self.u, w) >= 0 and LEX.compare(w, self.v) >= 0)

    def __len__(self) -> int:
        return len(self.generators)


class Verdict(Enum):
    COMPLETELY_CASE_I = "CompletelyCaseI"
    COMPLETELY_CASE_II = "CompletelyCaseII"
    COMPLETELY_CASE_III = "CompletelyCaseIII"
    NON_COMPLETELY = "NonCompletely"
    NO_LINEAR_RESOLUTION = "NoLinearResolution"
    # x_1 | v и идеал не вполне лексегментный: ни одна теорема не покрывает
    UNCLASSIFIED = "Unclassified"


@dataclass(frozen=True)
class ResolutionClass:
    '''
    Результат классификации: вердикт, признак полноты и свидетели
    (a в случае (i), w в случае (iii), l в невполне-случае).
    '''
    verdict: Verdict
    completely: bool
    iterations: int
    complete_up_to: int
    a: Optional[int] = None
    w: Optional[Monomial] = None
    l: Optional[int] = None

    @property
    def positive(self) -> bool:
        """Есть ли линейная резольвента по классификации."""
        return self.verdict not in (Verdict.NO_LINEAR_RESOLUTION, Verdict.UNCLASSIFIED)

    def prescribed_order(self) -> Optional[MonomialOrder]:
        """
        Порядок, относительно которого степени идеала имеют линейные частные:
        ≻ во вполне-случае и убывающий revlex σ в невполне-случае.
        """
        if not self.positive:
            return None
        if self.verdict == Verdict.NON_COMPLETELY:
            return REVLEX_DEC
        return SUCC

    def label(self) -> str:
        if self.verdict == Verdict.NON_COMPLETELY:
            return f"NonCompletely(l={self.l})"
        if self.verdict == Verdict.COMPLETELY_CASE_I:
            return f"CompletelyCaseI(a={self.a})"
        return self.verdict.value
