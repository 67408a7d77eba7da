"""Exact arithmetic for numerical polynomials in the binomial basis.

A numerical polynomial ``v(s)`` of degree ``d`` is stored by its standard
coefficients ``(a_d, ..., a_0)``::

    v(s) = a_d * C(s+d, d) + ... + a_1 * C(s+1, 1) + a_0

Integer standard coefficients are exactly the integer-valued polynomials, so
every operation here stays in arbitrary-precision integers.

Example:
    ```python
    p = NumericalPolynomial((2, -1))  # 2s + 1
    evaluate(p, 3)  # 7
    delta1(p)  # NumericalPolynomial((2,))
    ```
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import sympy as sp

from gradedbezout.errors import NonIntegralCoefficientsError

S = sp.Symbol("s")


def binom(x: int, k: int) -> int:
    """Generalized binomial coefficient C(x, k) = x(x-1)...(x-k+1)/k!.

    Supports negative ``x`` through C(x, k) = (-1)^k C(k - x - 1, k).

    Args:
        x: Upper argument, any integer.
        k: Lower argument, non-negative.

    Returns:
        The exact value of the degree-k polynomial C(x, k) at ``x``.

    Raises:
        ValueError: If ``k`` is negative.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if x >= 0:
        return math.comb(x, k)
    return (-1) ** k * math.comb(k - x - 1, k)


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    coeffs = tuple(coeffs)
    start = 0
    while start < len(coeffs) and coeffs[start] == 0:
        start += 1
    return coeffs[start:]


@dataclass(frozen=True)
class NumericalPolynomial:
    """Integer-valued univariate polynomial in the binomial basis.

    Attributes:
        standard_coeffs: ``(a_d, ..., a_0)``, leading coefficient first. The
            zero polynomial is the empty tuple. Leading zeros are trimmed on
            construction so equality is structural.
    """

    standard_coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = self.standard_coeffs
        if any(not isinstance(a, int) or isinstance(a, bool) for a in coeffs):
            raise TypeError("standard coefficients must be integers")
        object.__setattr__(self, "standard_coeffs", _trim(coeffs))

    @classmethod
    def constant(cls, c: int) -> NumericalPolynomial:
        """The constant polynomial ``c``."""
        return cls((c,))

    @classmethod
    def binomial(cls, d: int) -> NumericalPolynomial:
        """The basis polynomial C(s+d, d)."""
        return cls((1,) + (0,) * d)

    @property
    def is_zero(self) -> bool:
        return not self.standard_coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.standard_coeffs) - 1

    @property
    def leading(self) -> int:
        """Leading standard coefficient ``a_d`` (0 for the zero polynomial)."""
        return self.standard_coeffs[0] if self.standard_coeffs else 0

    def coefficient(self, i: int) -> int:
        """Standard coefficient ``a_i`` (0 outside the stored range)."""
        if i < 0 or i > self.degree:
            return 0
        return self.standard_coeffs[self.degree - i]

    def __call__(self, s: int) -> int:
        return evaluate(self, s)

    def __add__(self, other: NumericalPolynomial) -> NumericalPolynomial:
        return add(self, other)

    def __sub__(self, other: NumericalPolynomial) -> NumericalPolynomial:
        return sub(self, other)

    def __neg__(self) -> NumericalPolynomial:
        return NumericalPolynomial(tuple(-a for a in self.standard_coeffs))

    def scale(self, c: int) -> NumericalPolynomial:
        """Multiply every standard coefficient by the integer ``c``."""
        return NumericalPolynomial(tuple(c * a for a in self.standard_coeffs))

    def to_json(self) -> dict[str, list[int]]:
        return {"standard_coeffs": list(self.standard_coeffs)}

    def __str__(self) -> str:
        return to_binomial_str(self)

    @cached_property
    def expanded(self) -> sp.Poly:
        """Ordinary-coefficient form over the rationals."""
        expr = sum(
            (
                sp.Integer(a) * sp.expand_func(sp.binomial(S + i, i))
                for i, a in zip(
                    range(self.degree, -1, -1), self.standard_coeffs, strict=True
                )
            ),
            sp.Integer(0),
        )
        return sp.Poly(sp.expand(expr), S, domain=sp.QQ)


def evaluate(p: NumericalPolynomial, s: int) -> int:
    """Value of ``p`` at the integer ``s``: the sum of a_i * C(s+i, i)."""
    d = p.degree
    return sum(
        a * binom(s + d - idx, d - idx) for idx, a in enumerate(p.standard_coeffs)
    )


def _aligned(
    p: NumericalPolynomial, q: NumericalPolynomial
) -> tuple[list[int], list[int]]:
    width = max(len(p.standard_coeffs), len(q.standard_coeffs))
    pad_p = [0] * (width - len(p.standard_coeffs)) + list(p.standard_coeffs)
    pad_q = [0] * (width - len(q.standard_coeffs)) + list(q.standard_coeffs)
    return pad_p, pad_q


def add(p: NumericalPolynomial, q: NumericalPolynomial) -> NumericalPolynomial:
    """Coefficientwise sum in the shared basis."""
    pad_p, pad_q = _aligned(p, q)
    return NumericalPolynomial(tuple(a + b for a, b in zip(pad_p, pad_q, strict=True)))


def sub(p: NumericalPolynomial, q: NumericalPolynomial) -> NumericalPolynomial:
    """Coefficientwise difference in the shared basis."""
    pad_p, pad_q = _aligned(p, q)
    return NumericalPolynomial(tuple(a - b for a, b in zip(pad_p, pad_q, strict=True)))


def shift(p: NumericalPolynomial, j: int) -> NumericalPolynomial:
    """The polynomial ``s -> p(s + j)``.

    Computed by interpolating the ``deg p + 1`` shifted values, which keeps the
    basis conversion in one place (``from_values``).
    """
    if p.degree <= 0 or j == 0:
        return p
    return from_values([evaluate(p, s + j) for s in range(p.degree + 1)])


def delta1(p: NumericalPolynomial) -> NumericalPolynomial:
    """Backward difference ``p(s) - p(s-1)``.

    Since C(s+i, i) - C(s+i-1, i) = C(s+i-1, i-1), the operator drops ``a_0``.
    """
    return NumericalPolynomial(p.standard_coeffs[:-1])


def from_values(values: Sequence[int | Fraction]) -> NumericalPolynomial:
    """Interpolate the values taken at ``s = 0, 1, ..., d``.

    The Newton forward coefficients ``c_j = (forward difference)^j p(0)`` give
    ``p(s) = sum c_j C(s, j)``; the standard coefficients are then recovered
    from ``a_k = (delta1^k p)(-1) = sum_{j>=k} c_j C(-1-k, j-k)``.

    Args:
        values: ``d + 1`` values of an integer-valued polynomial.

    Returns:
        The unique numerical polynomial of degree at most ``d`` through them.

    Raises:
        NonIntegralCoefficientsError: If the interpolant is not integer-valued.
    """
    row = [Fraction(v) for v in values]
    newton: list[Fraction] = []
    while row:
        newton.append(row[0])
        row = [b - a for a, b in zip(row, row[1:], strict=False)]

    d = len(newton) - 1
    coeffs: list[int] = []
    for k in range(d, -1, -1):
        a_k = sum(
            (newton[j] * binom(-1 - k, j - k) for j in range(k, d + 1)), Fraction(0)
        )
        if a_k.denominator != 1:
            raise NonIntegralCoefficientsError(
                f"Values {list(values)} do not define an integer-valued polynomial"
            )
        coeffs.append(int(a_k))
    return NumericalPolynomial(tuple(coeffs))


def to_binomial_str(p: NumericalPolynomial) -> str:
    """Render as ``a_d*C(s+d,d) + ... + a_0``."""
    if p.is_zero:
        return "0"
    parts = []
    for idx, a in enumerate(p.standard_coeffs):
        i = p.degree - idx
        if a == 0:
            continue
        term = str(abs(a)) if i == 0 else f"{abs(a)}*C(s+{i},{i})"
        sign = "-" if a < 0 else "+"
        parts.append((sign, term))
    first_sign, first_term = parts[0]
    text = ("-" if first_sign == "-" else "") + first_term
    for sign, term in parts[1:]:
        text += f" {sign} {term}"
    return text


def to_expanded_str(p: NumericalPolynomial) -> str:
    """Render with ordinary coefficients, e.g. ``s**2/2 + 3*s/2 + 1``."""
    return str(p.expanded.as_expr())
