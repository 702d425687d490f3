"""Tutte evaluations of k-thickened uniform matroids and Merino-Welsh reports.

The k-thickening replaces each element with k parallel copies. Its Tutte
polynomial follows from the base matroid's via the substitution

    T_thick(x, y) = s^r * T(( s - 1 + x) / s, y^k),   s = 1 + y + ... + y^(k-1),

which specializes at k = 2 to

    T_thick(x, 0) = T(x, 0)
    T_thick(0, x) = (x+1)^r * T(x / (x+1), x^2)
    T_thick(1, 1) = 2^r * T(1, 1).
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import uniform
from .errors import DegenerateDenominatorError, InvalidParametersError
from .exact import Rational, binomial, rational_to_float
from .uniform import UniformMatroid


@dataclass(frozen=True)
class ThickenedUniform:
    """U(n, r) with every element replaced by k parallel copies."""

    base: UniformMatroid
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise InvalidParametersError(f"thickening multiplicity must be >= 1, got k={self.k}")

    @property
    def n_elements(self) -> int:
        return self.k * self.base.n

    @property
    def rank(self) -> int:
        # Parallel copies never raise the rank.
        return self.base.r


class Axis(Enum):
    X_AXIS = "x-axis"
    Y_AXIS = "y-axis"
    DIAGONAL_11 = "diagonal-11"


def thickened_eval(t: ThickenedUniform, x: Rational, y: Rational) -> Fraction:
    """Exact Tutte value of the k-thickening at a rational point."""
    x = Fraction(x)
    y = Fraction(y)
    s = Fraction(1)
    for _ in range(t.k - 1):
        s = s * y + 1
    if s == 0:
        raise DegenerateDenominatorError(
            f"thickening substitution degenerates at y={y} with k={t.k}"
        )
    return s ** t.rank * uniform.tutte_eval(t.base, (s - 1 + x) / s, y ** t.k)


def thickened_eval_axis(t: ThickenedUniform, x: Rational, axis: Axis) -> Fraction:
    """Evaluate on one of the three special lines.

    k = 2 takes the specialized closed forms; other multiplicities route
    through the general substitution.
    """
    x = Fraction(x)
    n, r = t.base.n, t.base.r
    if t.k == 2:
        if axis is Axis.X_AXIS:
            return uniform.eval_x_axis(t.base, x)
        if axis is Axis.Y_AXIS:
            if x == -1:
                raise DegenerateDenominatorError("2-thickening y-axis form degenerates at x=-1")
            return (x + 1) ** r * uniform.tutte_eval(t.base, x / (x + 1), x * x)
        return Fraction(2) ** r * binomial(n, r)
    if axis is Axis.X_AXIS:
        return thickened_eval(t, x, 0)
    if axis is Axis.Y_AXIS:
        return thickened_eval(t, 0, x)
    return thickened_eval(t, 1, 1)


@dataclass(frozen=True)
class MWReport:
    """The three Merino-Welsh evaluations of one matroid and their verdicts.

    status_mult / status_add / status_max record whether the
    multiplicative, additive, and maximum inequalities hold at the report
    point. For non-negative values the implications mult => add => max are
    forced (AM-GM, then max >= mean), and construction re-checks them.
    """

    x: Fraction
    t_x0: Fraction
    t_0x: Fraction
    t_11: Fraction
    ratio_mult: Fraction
    ratio_mult_real: float
    status_mult: bool
    status_add: bool
    status_max: bool

    def __post_init__(self) -> None:
        if self.status_mult:
            assert self.status_add, "multiplicative holds but additive fails"
        if self.status_add:
            assert self.status_max, "additive holds but maximum fails"


def _build_report(x: Fraction, t_x0: Fraction, t_0x: Fraction, t_11: Fraction) -> MWReport:
    ratio = t_x0 * t_0x / t_11 ** 2
    return MWReport(
        x=x,
        t_x0=t_x0,
        t_0x=t_0x,
        t_11=t_11,
        ratio_mult=ratio,
        ratio_mult_real=rational_to_float(ratio),
        status_mult=t_x0 * t_0x >= t_11 ** 2,
        status_add=t_x0 + t_0x >= 2 * t_11,
        status_max=max(t_x0, t_0x) >= t_11,
    )


def _check_report_preconditions(t: ThickenedUniform, x: Fraction) -> None:
    if x < 0:
        raise InvalidParametersError(f"report point must satisfy x >= 0, got x={x}")
    # 0 < r < n rules out loops and coloops for every multiplicity.
    if not 0 < t.base.r < t.base.n:
        raise InvalidParametersError(
            f"matroid U({t.base.n},{t.base.r}) thickened {t.k}x has loops or coloops"
        )


def mw_report(t: ThickenedUniform, x: Rational) -> MWReport:
    """Exact evaluations at (x,0), (0,x), (1,1) and the inequality verdicts."""
    x = Fraction(x)
    _check_report_preconditions(t, x)
    n, r = t.base.n, t.base.r
    t_x0 = thickened_eval(t, x, 0)
    t_0x = thickened_eval(t, 0, x)
    t_11 = Fraction(t.k) ** r * binomial(n, r)
    return _build_report(x, t_x0, t_0x, t_11)


def direct_sum_dual_report(t: ThickenedUniform, x: Rational) -> MWReport:
    """Report for M (+) M*, the direct sum of the matroid with its dual.

    The Tutte polynomial of a direct sum multiplies and dualizing swaps
    the arguments, so T_N(a, b) = T_M(a, b) * T_M(b, a); the maximum
    inequality for N is exactly the multiplicative inequality for M.
    """
    x = Fraction(x)
    _check_report_preconditions(t, x)
    a = thickened_eval(t, x, 0)
    b = thickened_eval(t, 0, x)
    d = Fraction(t.k) ** t.base.r * binomial(t.base.n, t.base.r)
    return _build_report(x, a * b, a * b, d * d)
