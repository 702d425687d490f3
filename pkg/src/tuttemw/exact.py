"""Exact integer and rational arithmetic plus sparse bivariate polynomials.

Integers are plain Python ints, rationals are ``fractions.Fraction``; both
are arbitrary precision, so every evaluation in the package is exact.
Floats appear only in the reporting helpers at the bottom of this module.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Mapping

LN2 = math.log(2.0)
_LN10 = math.log(10.0)

Rational = Fraction | int


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), with value 0 for k < 0 or k > n.

    The out-of-range convention keeps summation formulas total over
    uniform index bounds.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


class BivariatePoly:
    """Sparse polynomial in two variables with exact integer coefficients.

    Coefficients are keyed by (x-exponent, y-exponent); zero coefficients
    are never stored, so equality is plain map equality. Instances are
    treated as immutable: every operation returns a new polynomial.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None):
        clean: dict[tuple[int, int], int] = {}
        if coeffs:
            for (i, j), c in coeffs.items():
                if i < 0 or j < 0:
                    raise ValueError(f"exponents must be non-negative, got ({i}, {j})")
                if c:
                    clean[(i, j)] = int(c)
        self._coeffs = clean

    @classmethod
    def zero(cls) -> "BivariatePoly":
        return cls()

    @classmethod
    def one(cls) -> "BivariatePoly":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, i: int, j: int, coeff: int = 1) -> "BivariatePoly":
        return cls({(i, j): coeff})

    def coefficient(self, i: int, j: int) -> int:
        return self._coeffs.get((i, j), 0)

    def terms(self) -> Iterator[tuple[int, int, int]]:
        """Yield (x-exponent, y-exponent, coefficient) in graded order."""
        for (i, j) in sorted(self._coeffs, key=lambda e: (e[0] + e[1], e[0], e[1])):
            yield i, j, self._coeffs[(i, j)]

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: "BivariatePoly") -> "BivariatePoly":
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        out = dict(self._coeffs)
        for key, c in other._coeffs.items():
            out[key] = out.get(key, 0) + c
        return BivariatePoly(out)

    def __neg__(self) -> "BivariatePoly":
        return BivariatePoly({key: -c for key, c in self._coeffs.items()})

    def __sub__(self, other: "BivariatePoly") -> "BivariatePoly":
        return self + (-other)

    def __mul__(self, other: "BivariatePoly | int") -> "BivariatePoly":
        if isinstance(other, int):
            return BivariatePoly({key: c * other for key, c in self._coeffs.items()})
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._coeffs.items():
            for (i2, j2), c2 in other._coeffs.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BivariatePoly(out)

    def __rmul__(self, other: int) -> "BivariatePoly":
        return self.__mul__(other)

    def __pow__(self, exponent: int) -> "BivariatePoly":
        if exponent < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = BivariatePoly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def evaluate(self, x: Rational, y: Rational) -> Fraction:
        """Exact substitution at a rational point."""
        x = Fraction(x)
        y = Fraction(y)
        xpow: dict[int, Fraction] = {}
        ypow: dict[int, Fraction] = {}

        def power(base: Fraction, e: int, cache: dict[int, Fraction]) -> Fraction:
            if e not in cache:
                cache[e] = base ** e
            return cache[e]

        total = Fraction(0)
        for (i, j), c in self._coeffs.items():
            total += c * power(x, i, xpow) * power(y, j, ypow)
        return total

    def __repr__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for i, j, c in self.terms():
            factors = []
            if c != 1 or (i == 0 and j == 0):
                factors.append(str(c))
            if i:
                factors.append("x" if i == 1 else f"x^{i}")
            if j:
                factors.append("y" if j == 1 else f"y^{j}")
            parts.append("*".join(factors))
        return " + ".join(parts)


def log_rational(q: Rational) -> float:
    """Natural logarithm of a positive rational of any magnitude.

    Splits each side into bit-length times ln 2 plus the log of a 53-bit
    mantissa, so operands far beyond double range never get converted to
    float.
    """
    q = Fraction(q)
    if q <= 0:
        raise ValueError("log_rational needs a positive argument")
    return _log_int(q.numerator) - _log_int(q.denominator)


def _log_int(n: int) -> float:
    shift = n.bit_length() - 53
    if shift <= 0:
        return math.log(n)
    return math.log(n >> shift) + shift * LN2


def rational_to_float(q: Rational) -> float:
    """Round an exact rational to the nearest double, saturating to +-inf."""
    q = Fraction(q)
    try:
        return q.numerator / q.denominator
    except OverflowError:
        return math.inf if q > 0 else -math.inf


def approx_decimal(q: Rational, digits: int = 12) -> str:
    """Decimal approximation of a rational, usable at any magnitude."""
    q = Fraction(q)
    if q == 0:
        return "0"
    f = rational_to_float(q)
    if math.isfinite(f) and f != 0.0:
        return f"{f:.{digits}g}"
    sign = "-" if q < 0 else ""
    log10 = log_rational(abs(q)) / _LN10
    exp10 = math.floor(log10)
    mantissa = 10.0 ** (log10 - exp10)
    return f"{sign}{mantissa:.{digits - 1}f}e{exp10:+d}"
