"""Thickened evaluations against explicit thickened rank oracles, and the
Merino-Welsh report machinery."""
import random
from fractions import Fraction

import pytest

from tuttemw import (
    Axis,
    DegenerateDenominatorError,
    InvalidParametersError,
    ThickenedUniform,
    UniformMatroid,
    direct_sum_dual_report,
    mw_report,
    subset_expansion_tutte,
    thicken_matroid,
    thickened_eval,
    thickened_eval_axis,
    tutte_eval,
    uniform_oracle,
)

GRID = [
    (Fraction(2), Fraction(0)),
    (Fraction(0), Fraction(2)),
    (Fraction(1), Fraction(1)),
    (Fraction(3), Fraction(3)),
    (Fraction(1, 2), Fraction(2, 3)),
    (Fraction(5, 2), Fraction(1, 3)),
]


def test_thickening_multiplicity_validated():
    with pytest.raises(InvalidParametersError):
        ThickenedUniform(UniformMatroid(3, 2), 0)
    t = ThickenedUniform(UniformMatroid(3, 2), 2)
    assert t.n_elements == 6 and t.rank == 2


def test_eval_reproduces_headline_values():
    t = ThickenedUniform(UniformMatroid(33, 22), 2)
    assert thickened_eval(t, 0, 2) == 64127582356390782814
    assert thickened_eval(t, 2, 0) == 8374746166
    assert thickened_eval(t, 1, 1) == 811751838842880
    # same number through the explicit substitution, assembled by hand
    assert Fraction(3) ** 22 * tutte_eval(UniformMatroid(33, 22), Fraction(2, 3), 4) == 64127582356390782814


def test_one_thickening_is_identity():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(1, 12)
        r = rng.randint(0, n)
        x = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        y = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        t = ThickenedUniform(UniformMatroid(n, r), 1)
        assert thickened_eval(t, x, y) == tutte_eval(UniformMatroid(n, r), x, y)


def test_eval_cross_checked_against_explicit_oracle():
    t = ThickenedUniform(UniformMatroid(4, 2), 2)
    assert thickened_eval(t, 1, 1) == 24
    oracle = subset_expansion_tutte(thicken_matroid(uniform_oracle(4, 2), 2))
    assert oracle.evaluate(1, 1) == 24


def test_degenerate_denominator_raises():
    t = ThickenedUniform(UniformMatroid(3, 2), 2)
    with pytest.raises(DegenerateDenominatorError):
        thickened_eval(t, 1, -1)
    # k = 3 keeps s = 1 - 1 + 1 = 1 at y = -1, no degeneracy
    t3 = ThickenedUniform(UniformMatroid(3, 2), 3)
    oracle = subset_expansion_tutte(thicken_matroid(uniform_oracle(3, 2), 3))
    assert thickened_eval(t3, 1, -1) == oracle.evaluate(1, -1)


def test_eval_matches_oracle_on_grid():
    # exhaustive on small products, plus two larger spot checks; the
    # explicit expansion caps the reachable sizes
    cases = [
        (n, r, k)
        for k in (1, 2, 3)
        for n in range(2, 9)
        for r in range(1, n)
        if n * k <= 14
    ]
    cases += [(8, 5, 2), (6, 3, 3)]
    for n, r, k in cases:
        poly = subset_expansion_tutte(thicken_matroid(uniform_oracle(n, r), k))
        t = ThickenedUniform(UniformMatroid(n, r), k)
        for x, y in GRID:
            assert poly.evaluate(x, y) == thickened_eval(t, x, y), (n, r, k, x, y)


def test_axis_evaluation_examples():
    t = ThickenedUniform(UniformMatroid(33, 22), 2)
    assert thickened_eval_axis(t, 2, Axis.X_AXIS) == 8374746166
    assert thickened_eval_axis(t, 2, Axis.DIAGONAL_11) == 811751838842880
    small = ThickenedUniform(UniformMatroid(3, 2), 2)
    oracle = subset_expansion_tutte(thicken_matroid(uniform_oracle(3, 2), 2))
    assert oracle.evaluate(0, 2) == 46
    assert thickened_eval_axis(small, 2, Axis.Y_AXIS) == 46


def test_axis_degenerate_point():
    with pytest.raises(DegenerateDenominatorError):
        thickened_eval_axis(ThickenedUniform(UniformMatroid(3, 2), 2), -1, Axis.Y_AXIS)


def test_axis_agrees_with_general_eval():
    for k in (1, 2, 3):
        for n, r in ((4, 2), (5, 3), (6, 2)):
            t = ThickenedUniform(UniformMatroid(n, r), k)
            for x in (Fraction(0), Fraction(2), Fraction(7, 2)):
                assert thickened_eval_axis(t, x, Axis.X_AXIS) == thickened_eval(t, x, 0)
                assert thickened_eval_axis(t, x, Axis.Y_AXIS) == thickened_eval(t, 0, x)
            assert thickened_eval_axis(t, Fraction(1), Axis.DIAGONAL_11) == thickened_eval(t, 1, 1)


def test_report_headline_counterexample():
    rep = mw_report(ThickenedUniform(UniformMatroid(33, 22), 2), 2)
    assert not rep.status_mult
    assert abs(rep.ratio_mult_real - 0.815) < 1e-3
    # the maximum version still holds there: 6.4e19 >= 8.1e14
    assert rep.status_max
    assert rep.status_add


def test_report_small_instance_holds():
    rep = mw_report(ThickenedUniform(UniformMatroid(4, 2), 1), 2)
    assert (rep.t_x0, rep.t_0x, rep.t_11) == (8, 8, 6)
    assert rep.status_mult  # 64 >= 36


def test_report_preconditions():
    with pytest.raises(InvalidParametersError):
        mw_report(ThickenedUniform(UniformMatroid(4, 2), 1), -1)
    with pytest.raises(InvalidParametersError):
        mw_report(ThickenedUniform(UniformMatroid(4, 4), 2), 2)  # coloop-style rank
    with pytest.raises(InvalidParametersError):
        mw_report(ThickenedUniform(UniformMatroid(4, 0), 2), 2)  # loops


def test_jackson_direction_at_three():
    for n in range(2, 31):
        for r in range(1, n):
            for k in (1, 2):
                rep = mw_report(ThickenedUniform(UniformMatroid(n, r), k), 3)
                assert rep.status_mult, (n, r, k)


def test_counterexample_family_all_violate():
    for n in range(33, 100, 3):
        rep = mw_report(ThickenedUniform(UniformMatroid(n, 2 * n // 3), 2), 2)
        assert not rep.status_mult, n


def test_implication_chain_on_generated_reports():
    rng = random.Random(13)
    for _ in range(120):
        n = rng.randint(2, 24)
        r = rng.randint(1, n - 1)
        k = rng.randint(1, 3)
        x = Fraction(rng.randint(0, 8), rng.randint(1, 3))
        rep = mw_report(ThickenedUniform(UniformMatroid(n, r), k), x)
        if rep.status_mult:
            assert rep.status_add
        if rep.status_add:
            assert rep.status_max


def test_direct_sum_dual_report_examples():
    rep = direct_sum_dual_report(ThickenedUniform(UniformMatroid(33, 22), 2), 2)
    assert not rep.status_max  # the product form moves the violation to max
    assert rep.t_x0 == rep.t_0x == 8374746166 * 64127582356390782814
    assert rep.t_11 == 811751838842880 ** 2

    rep = direct_sum_dual_report(ThickenedUniform(UniformMatroid(2, 1), 1), 2)
    assert rep.status_max  # T(2,0) = T(0,2) = T(1,1) = 2 for a two-element circuit

    rep = direct_sum_dual_report(ThickenedUniform(UniformMatroid(4, 2), 1), 2)
    assert rep.t_11 == 36 and rep.t_x0 == 64
    assert rep.status_max


def test_direct_sum_dual_max_mirrors_mult():
    rng = random.Random(23)
    for _ in range(60):
        n = rng.randint(2, 40)
        r = rng.randint(1, n - 1)
        k = rng.randint(1, 2)
        t = ThickenedUniform(UniformMatroid(n, r), k)
        assert direct_sum_dual_report(t, 2).status_max == mw_report(t, 2).status_mult
