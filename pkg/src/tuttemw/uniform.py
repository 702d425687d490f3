"""Closed-form Tutte polynomial of the uniform matroid U(n, r).

For 0 < r < n the polynomial is

    sum_{i=1..r}   C(n-i-1, n-r-1) x^i  +  sum_{j=1..n-r} C(n-j-1, r-1) y^j,

with the degenerate cases T = x^n at full rank and T = y^n at rank zero.
Point evaluation runs Horner-style over each sum with incrementally
updated coefficients, never materializing the polynomial.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidParametersError
from .exact import BivariatePoly, Rational, binomial


@dataclass(frozen=True)
class UniformMatroid:
    """Uniform matroid on n elements whose bases are all r-subsets."""

    n: int
    r: int

    def __post_init__(self) -> None:
        if not (0 <= self.r <= self.n):
            raise InvalidParametersError(
                f"uniform matroid needs 0 <= r <= n, got n={self.n}, r={self.r}"
            )

    def dual(self) -> "UniformMatroid":
        return UniformMatroid(self.n, self.n - self.r)


def tutte_polynomial(m: UniformMatroid) -> BivariatePoly:
    """Full coefficient map of the Tutte polynomial of U(n, r)."""
    n, r = m.n, m.r
    if r == n:
        return BivariatePoly.monomial(n, 0)
    if r == 0:
        return BivariatePoly.monomial(0, n)
    coeffs: dict[tuple[int, int], int] = {}
    for i in range(1, r + 1):
        coeffs[(i, 0)] = binomial(n - i - 1, n - r - 1)
    for j in range(1, n - r + 1):
        coeffs[(0, j)] = binomial(n - j - 1, r - 1)
    return BivariatePoly(coeffs)


def _x_side_sum(n: int, r: int, x: Fraction) -> Fraction:
    """sum_{i=1..r} C(n-i-1, n-r-1) x^i for 0 < r < n, exactly.

    Horner over descending i; the coefficient for the next lower index
    follows by one exact multiply-divide step.
    """
    acc = Fraction(0)
    c = 1  # C(n-r-1, n-r-1), the i = r coefficient
    for i in range(r, 0, -1):
        acc = acc * x + c
        if i > 1:
            c = c * (n - i) // (r - i + 1)
    return acc * x


def tutte_eval(m: UniformMatroid, x: Rational, y: Rational) -> Fraction:
    """Exact value of the Tutte polynomial of U(n, r) at a rational point."""
    n, r = m.n, m.r
    x = Fraction(x)
    y = Fraction(y)
    if r == n:
        return x ** n
    if r == 0:
        return y ** n
    # The y sum equals the x sum of the dual matroid U(n, n-r).
    return _x_side_sum(n, r, x) + _x_side_sum(n, n - r, y)


def eval_x_axis(m: UniformMatroid, x: Rational) -> Fraction:
    """Exact T(x, 0): the x-side sum alone (0 for rank zero on n > 0)."""
    n, r = m.n, m.r
    x = Fraction(x)
    if r == n:
        return x ** n
    if r == 0:
        return Fraction(1) if n == 0 else Fraction(0)
    return _x_side_sum(n, r, x)


def dominant_index(m: UniformMatroid, x: Rational | float) -> int:
    """Index i in [1, r] maximizing the x-side term C(n-i-1, n-r-1) x^i.

    Uses ceil((x*r - (n-1)) / (x - 1)) clamped into the summation range;
    the unclamped value can leave it on either side.
    """
    n, r = m.n, m.r
    if not 0 < r < n:
        raise InvalidParametersError(f"need 0 < r < n, got n={n}, r={r}")
    if x <= 1:
        raise ValueError(f"dominant index is defined for x > 1, got x={x}")
    raw = math.ceil((x * r - (n - 1)) / (x - 1))
    return min(max(raw, 1), r)
