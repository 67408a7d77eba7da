"""Terms of a free module and the standard ranking on them.

A term is ``x_1^{i_1} ... x_m^{i_m} f_j``. The standard ranking compares
order first, then the component index, then the exponents lexicographically
with ``x_1 > x_2 > ... > x_m``. It is orderly and compatible with
multiplication by monomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class ModuleTerm:
    """The term ``x^exponent f_component`` (components are numbered from 1)."""

    exponent: Exponent
    component: int = 1

    @property
    def order(self) -> int:
        return sum(self.exponent)

    def mul(self, theta: Exponent) -> ModuleTerm:
        """Multiply by the monomial ``x^theta``."""
        return ModuleTerm(
            tuple(a + b for a, b in zip(self.exponent, theta, strict=True)),
            self.component,
        )

    def divides(self, other: ModuleTerm) -> bool:
        """True when ``other = theta * self`` for some monomial ``theta``."""
        return self.component == other.component and all(
            a <= b for a, b in zip(self.exponent, other.exponent, strict=True)
        )

    def quotient(self, other: ModuleTerm) -> Exponent:
        """The monomial ``theta`` with ``theta * other = self``."""
        return tuple(
            a - b for a, b in zip(self.exponent, other.exponent, strict=True)
        )

    def lcm(self, other: ModuleTerm) -> ModuleTerm | None:
        """Least common multiple; None for terms in different components."""
        if self.component != other.component:
            return None
        return ModuleTerm(
            tuple(
                max(a, b)
                for a, b in zip(self.exponent, other.exponent, strict=True)
            ),
            self.component,
        )

    def is_coprime(self, other: ModuleTerm) -> bool:
        """True when the monomial parts share no variable."""
        return all(
            min(a, b) == 0 for a, b in zip(self.exponent, other.exponent, strict=True)
        )

    def __str__(self) -> str:
        factors = [
            f"x{k}" if a == 1 else f"x{k}^{a}"
            for k, a in enumerate(self.exponent, 1)
            if a
        ]
        return "*".join([*factors, f"f{self.component}"])


class RankingKind(str, Enum):
    """Supported rankings."""

    STANDARD = "standard"


@dataclass(frozen=True)
class Ranking:
    """Ranking on the terms of a free module of rank ``n`` over ``m`` variables."""

    m: int
    n: int = 1
    kind: RankingKind = RankingKind.STANDARD

    def key(self, t: ModuleTerm) -> tuple:
        """Sort key realising the ranking: smaller key means lower term."""
        return (t.order, t.component, t.exponent)


def compare(t1: ModuleTerm, t2: ModuleTerm, r: Ranking) -> int:
    """Compare two terms.

    Returns:
        -1, 0 or 1 as ``t1`` is lower than, equal to, or higher than ``t2``.
    """
    k1, k2 = r.key(t1), r.key(t2)
    return (k1 > k2) - (k1 < k2)
