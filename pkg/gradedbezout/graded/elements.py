"""Elements of a free module with exact rational coefficients."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction

from gradedbezout.errors import ZeroElementError
from gradedbezout.graded.ranking import Exponent, ModuleTerm, Ranking

Coefficient = Fraction | int | str


class ModuleElement:
    """Finite map from terms to non-zero rational coefficients.

    Instances are treated as immutable; arithmetic returns new elements.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[ModuleTerm, Coefficient] | None = None):
        cleaned: dict[ModuleTerm, Fraction] = {}
        for term, coef in (terms or {}).items():
            value = Fraction(coef)
            if value:
                cleaned[term] = value
        self.terms = cleaned

    @classmethod
    def from_terms(
        cls, items: Iterable[tuple[Iterable[int], int, Coefficient]]
    ) -> ModuleElement:
        """Build from ``(exponent, component, coefficient)`` triples.

        Repeated terms are summed.
        """
        acc: dict[ModuleTerm, Fraction] = {}
        for exponent, component, coef in items:
            term = ModuleTerm(tuple(exponent), component)
            acc[term] = acc.get(term, Fraction(0)) + Fraction(coef)
        return cls(acc)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_homogeneous(self) -> bool:
        return len({t.order for t in self.terms}) <= 1

    @property
    def degree(self) -> int:
        """Largest term order (-1 for zero)."""
        return max((t.order for t in self.terms), default=-1)

    def order_in(self, component: int) -> int | None:
        """``ord_{f_j}``: largest order of a term in component ``j``, None if absent."""
        orders = [t.order for t in self.terms if t.component == component]
        return max(orders) if orders else None

    def mul(self, theta: Exponent, coef: Coefficient = 1) -> ModuleElement:
        """``coef * x^theta * self``."""
        c = Fraction(coef)
        return ModuleElement({t.mul(theta): c * v for t, v in self.terms.items()})

    def scale(self, coef: Coefficient) -> ModuleElement:
        c = Fraction(coef)
        return ModuleElement({t: c * v for t, v in self.terms.items()})

    def __add__(self, other: ModuleElement) -> ModuleElement:
        acc = dict(self.terms)
        for t, v in other.terms.items():
            acc[t] = acc.get(t, Fraction(0)) + v
        return ModuleElement(acc)

    def __sub__(self, other: ModuleElement) -> ModuleElement:
        return self + other.scale(-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self, ranking: Ranking) -> list[tuple[ModuleTerm, Fraction]]:
        """Terms from highest to lowest."""
        return sorted(
            self.terms.items(), key=lambda tv: ranking.key(tv[0]), reverse=True
        )

    def to_json(self, ranking: Ranking) -> dict:
        return {
            "terms": [
                {"exp": list(t.exponent), "comp": t.component, "coef": str(v)}
                for t, v in self.sorted_terms(ranking)
            ]
        }

    def __repr__(self) -> str:
        body = " + ".join(f"{v}*{t}" for t, v in self.terms.items()) or "0"
        return f"ModuleElement({body})"


def leader(g: ModuleElement, r: Ranking) -> ModuleTerm:
    """The highest term of ``g`` under ``r``.

    Raises:
        ZeroElementError: If ``g`` is zero.
    """
    if g.is_zero:
        raise ZeroElementError("The zero element has no leader")
    return max(g.terms, key=r.key)


def monic(g: ModuleElement, r: Ranking) -> ModuleElement:
    """``g`` divided by its leading coefficient."""
    return g.scale(1 / g.terms[leader(g, r)])
