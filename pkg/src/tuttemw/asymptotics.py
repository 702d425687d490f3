"""Real-valued asymptotics: growth rates, the counterexample exponent, and
the threshold point.

For rank density alpha = r/n the per-element log growth of T(x, 0) is the
binary entropy below x = 1/alpha and ln x + (alpha-1) ln(x-1) above it.
The 2-thickened family U(n, 2n/3) twice-thickened beats the multiplicative
Merino-Welsh inequality whenever

    lambda(x, alpha) = ln( 2^(2 alpha) / (alpha^(2 alpha) (1-alpha)^(2(1-alpha))) * (x-1)/x^3 )

is positive; the density 2/3 maximizes the first factor at 9, and the
positivity threshold in x is the largest root of x^3 - 9(x - 1).
"""
from __future__ import annotations

import math
from fractions import Fraction

from .errors import InvalidParametersError
from .exact import LN2, Rational, log_rational
from .thickening import ThickenedUniform, mw_report
from .uniform import UniformMatroid


def entropy(alpha: float) -> float:
    """Binary entropy in nats, extended by continuity to 0 at the endpoints."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"entropy needs alpha in [0, 1], got {alpha}")
    if alpha == 0.0 or alpha == 1.0:
        return 0.0
    return -alpha * math.log(alpha) - (1.0 - alpha) * math.log(1.0 - alpha)


def growth_rate_x_axis(x: float, alpha: float) -> float:
    """Per-element log growth of T(x, 0) along rank density alpha, for x > 1.

    Below x = 1/alpha the largest binomial term wins and the rate is the
    entropy; above it the rate follows the dominating-index estimate. The
    branches agree at the crossover.
    """
    if x <= 1.0:
        raise ValueError(f"growth rate is defined for x > 1, got x={x}")
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"need alpha in (0, 1), got {alpha}")
    if x < 1.0 / alpha:
        return entropy(alpha)
    return math.log(x) + (alpha - 1.0) * math.log(x - 1.0)


def log_density_factor(alpha: float) -> float:
    """ln of 2^(2a) / (a^(2a) (1-a)^(2(1-a))) = 2a ln 2 + 2 H(a)."""
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"need alpha in (0, 1), got {alpha}")
    return 2.0 * alpha * LN2 + 2.0 * entropy(alpha)


def mw_exponent(x: float, alpha: float) -> float:
    """Rate lambda(x, alpha) of T(1,1)^2 / (T(x,0) T(0,x)) for the 2-thickened family.

    Positive means the squared basis count eventually wins, i.e. the
    multiplicative inequality fails for large n at density alpha.
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"need alpha in (0, 1), got {alpha}")
    if x * alpha < 1.0 or x * x * (1.0 - alpha) < 1.0:
        raise ValueError(
            f"exponent formula needs x >= 1/alpha and x^2 >= 1/(1-alpha), got x={x}, alpha={alpha}"
        )
    return log_density_factor(alpha) + math.log(x - 1.0) - 3.0 * math.log(x)


def optimal_alpha() -> tuple[float, float]:
    """Numerically maximize the density factor over (0, 1).

    Golden-section narrows the bracket; a slope-sign bisection then pins
    the flat maximum beyond what value comparisons can resolve. Returns
    (argmax, maximum value); the known answer is (2/3, 9).
    """
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    lo, hi = 1e-9, 1.0 - 1e-9
    c = hi - invphi * (hi - lo)
    d = lo + invphi * (hi - lo)
    fc, fd = log_density_factor(c), log_density_factor(d)
    while hi - lo > 1e-12:
        if fc > fd:
            hi, d, fd = d, c, fc
            c = hi - invphi * (hi - lo)
            fc = log_density_factor(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + invphi * (hi - lo)
            fd = log_density_factor(d)

    # Slope of log_density_factor: 2 ln(2(1-a)/a), monotone decreasing.
    slope = lambda a: 2.0 * math.log(2.0 * (1.0 - a) / a)
    s_lo, s_hi = max(lo - 1e-6, 1e-9), min(hi + 1e-6, 1.0 - 1e-9)
    for _ in range(120):
        mid = 0.5 * (s_lo + s_hi)
        if slope(mid) > 0.0:
            s_lo = mid
        else:
            s_hi = mid
    argmax = 0.5 * (s_lo + s_hi)
    return argmax, math.exp(log_density_factor(argmax))


def threshold_x0(tol: float) -> float:
    """Largest root of x^3 - 9(x - 1) by bisection on [2, 3], within tol.

    The bracket is sound: the polynomial is -1 at x=2 and +9 at x=3, and
    its other real roots lie below 2.
    """
    if tol <= 0.0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    poly = lambda t: t * t * t - 9.0 * (t - 1.0)
    lo, hi = 2.0, 3.0
    for _ in range(200):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if poly(mid) <= 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def empirical_exponent(n: int, x: Rational) -> float:
    """Measured per-element rate at density 2/3: (1/n) ln of the exact ratio
    T(1,1)^2 / (T(x,0) T(0,x)) for the 2-thickening of U(n, 2n/3).

    The three evaluations are exact big rationals; only the final
    logarithm rounds.
    """
    if n < 9 or n % 3:
        raise InvalidParametersError(f"n must be divisible by 3 and >= 9, got {n}")
    x = Fraction(x)
    if x < Fraction(3, 2) or x * x < 3:
        raise ValueError(
            f"rate formula at density 2/3 needs x >= 3/2 and x^2 >= 3, got x={x}"
        )
    report = mw_report(ThickenedUniform(UniformMatroid(n, 2 * n // 3), 2), x)
    return log_rational(1 / report.ratio_mult) / n
