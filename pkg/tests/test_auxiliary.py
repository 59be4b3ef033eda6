"""Auxiliary-function values, limits, identities, and the derivative bridge."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import shaferbounds as sb
from shaferbounds.auxiliary import bracket_value, in_bracket_pole_band
from shaferbounds.constants import SQRT2


class TestP:
    def test_endpoints(self):
        assert sb.p_fn(0.0) == 0.0
        # -sqrt(2) to within 1 ulp
        assert abs(sb.p_fn(1.0) + SQRT2) <= math.ulp(SQRT2)

    def test_values(self):
        assert sb.p_fn(0.5) == pytest.approx(-0.06935035412101476, rel=1e-14)
        assert sb.p_fn(0.3) == pytest.approx(-0.013980161640160804, rel=1e-14)

    def test_negative_and_decreasing(self, small_grid):
        p = np.array([sb.p_fn(float(x)) for x in small_grid.points()[::20]])
        assert np.all(p < 0.0)
        assert np.all(np.diff(p) < 0.0)

    def test_domain(self):
        with pytest.raises(sb.DomainError):
            sb.p_fn(-0.1)
        with pytest.raises(sb.DomainError):
            sb.p_fn(1.1)

    @given(st.floats(min_value=0.01, max_value=0.99))
    def test_matches_naive_form(self, x):
        naive = 2.0 * (math.sqrt(1 - x) - math.sqrt(1 + x)) + x * (
            math.sqrt(1 - x) + math.sqrt(1 + x)
        )
        assert sb.p_fn(x) == pytest.approx(naive, rel=1e-8)


class TestG:
    def test_value(self):
        assert sb.g_fn(0.5) == pytest.approx(-1.9318516525781366, rel=1e-13)
        assert sb.g_fn(0.3) == pytest.approx(-1.9768354516332136, rel=1e-13)

    def test_limits(self):
        assert abs(sb.g_fn(1e-4) + 2.0) < 1e-3
        assert abs(sb.g_fn(1.0 - 1e-8) + SQRT2) < 1e-3

    def test_increasing_with_range(self, small_grid):
        g = np.array([sb.g_fn(float(x)) for x in small_grid.points()[::20]])
        assert np.all(np.diff(g) >= 0.0)
        assert np.all(g >= -2.0)
        assert np.all(g <= -SQRT2 + 1e-12)

    @given(st.floats(min_value=1e-6, max_value=1.0 - 1e-10))
    def test_quotient_reduces_to_root_sum(self, x):
        # exact algebra: the displayed quotient equals -(sqrt(1+x)+sqrt(1-x));
        # the quotient's conditioning degrades like 1/sqrt(1-x) toward 1
        closed = -(math.sqrt(1.0 + x) + math.sqrt(1.0 - x))
        assert sb.g_fn(x) == pytest.approx(closed, rel=1e-9)

    def test_domain(self):
        for x in (0.0, 1.0, -0.2):
            with pytest.raises(sb.DomainError):
                sb.g_fn(x)


class TestH:
    def test_vanishes_at_zero(self):
        for alpha in (0.0, 4.0, 10.0):
            assert abs(sb.h_fn(1e-6, alpha)) < 1e-5

    def test_near_one_value(self):
        assert sb.h_fn(1.0 - 1e-10, 4.0) == pytest.approx(0.014989400167895114, abs=1e-9)

    def test_spot_values(self):
        assert sb.h_fn(0.5, 4.0) == pytest.approx(5.5338708620859864e-05, rel=1e-9)
        assert sb.h_fn(0.5, 0.0) == pytest.approx(-0.023598775598298875, rel=1e-12)

    def test_signs(self, small_grid):
        # same slack policy as the verify layer: strictness up to 1e-12,
        # since h passes through values below rounding noise near x = 0
        xs = small_grid.points()[::20]
        assert all(sb.h_fn(float(x), 4.0) >= -1e-12 for x in xs)
        assert all(sb.h_fn(float(x), 0.0) <= 1e-12 for x in xs)
        assert all(sb.h_fn(float(x), -5.0) >= -1e-12 for x in xs)
        bulk = xs[xs >= 0.01]
        assert all(sb.h_fn(float(x), 4.0) > 0.0 for x in bulk)
        assert all(sb.h_fn(float(x), 0.0) < 0.0 for x in bulk)
        assert all(sb.h_fn(float(x), -5.0) > 0.0 for x in bulk)

    def test_pole(self):
        # s(0.96) = sqrt(1.96) + sqrt(0.04) = 1.6 exactly, so the bracket
        # -2.5*s + 4 vanishes exactly at x = 0.96
        with pytest.raises(sb.PoleError):
            sb.h_fn(0.96, -2.5)

    def test_alpha_minus_two_is_not_a_pole(self):
        # bracket -> 0+ as x -> 0 at alpha = -2, but den/bracket = -1/2 exactly
        value = sb.h_fn(1e-8, -2.0)
        assert value == pytest.approx(-2e-8, rel=1e-6)

    def test_domain(self):
        with pytest.raises(sb.DomainError):
            sb.h_fn(1.0, 4.0)


class TestHLimit:
    def test_values(self):
        assert sb.h_limit_at_one(4.0) == pytest.approx(0.014990110832008331, abs=1e-15)
        assert sb.h_limit_at_one(0.0) == pytest.approx(1.0 - math.pi / 2.0, abs=1e-15)
        assert sb.h_limit_at_one(10.0) == pytest.approx(0.20872246399356098, abs=1e-14)

    def test_root_is_alpha_star(self):
        assert abs(sb.h_limit_at_one(sb.alpha_star())) <= 1e-15

    def test_pole(self):
        with pytest.raises(sb.PoleError):
            sb.h_limit_at_one(-2.0 * SQRT2)

    @pytest.mark.parametrize("alpha", [-5.0, 0.0, 2.0, 4.0, 10.0])
    def test_matches_h_near_one(self, alpha):
        assert abs(sb.h_fn(1.0 - 1e-10, alpha) - sb.h_limit_at_one(alpha)) <= 1e-4


class TestBigF:
    def test_vanishes_at_zero(self):
        assert abs(sb.big_f_fn(1e-6, 4.0)) < 1e-12

    def test_spot_value(self):
        # F(x; 0) = 4*(x - arcsin x)
        assert sb.big_f_fn(0.5, 0.0) == pytest.approx(
            4.0 * (0.5 - math.asin(0.5)), rel=1e-13
        )

    @pytest.mark.parametrize("alpha", [-5.0, -2.5, -1.0, 0.0])
    def test_negative_for_nonpositive_alpha(self, alpha, small_grid):
        xs = small_grid.points()[::20]
        assert all(sb.big_f_fn(float(x), alpha) <= 0.0 for x in xs)

    @pytest.mark.parametrize("alpha", [-5.0, -1.0, 0.0, 2.0, 4.0, 10.0])
    def test_identity_with_h(self, alpha, small_grid):
        # F = (alpha*s + 4) * h wherever h is defined
        for x in small_grid.points()[::40]:
            x = float(x)
            lhs = sb.big_f_fn(x, alpha)
            rhs = bracket_value(x, alpha) * sb.h_fn(x, alpha)
            assert abs(lhs - rhs) <= 1e-10 * (1.0 + abs(lhs))

    def test_defined_in_pole_band(self):
        assert math.isfinite(sb.big_f_fn(0.96, -2.5))


class TestDiscriminants:
    def test_roots(self):
        first, second = sb.discriminants(4.0)
        assert first == 0.0
        assert second == pytest.approx(8.0 - 4.0 * SQRT2, rel=1e-15)
        first, second = sb.discriminants(-2.0)
        assert first == 0.0
        assert second == pytest.approx(2.0 * SQRT2 - 4.0, rel=1e-15)
        _, second = sb.discriminants(sb.h_regime_root())
        assert abs(second) < 1e-13
        first, _ = sb.discriminants(sb.h_regime_root())
        assert first < 0.0


class TestPoleBand:
    def test_membership(self):
        assert in_bracket_pole_band(-2.5)
        assert not in_bracket_pole_band(-2.0)
        assert not in_bracket_pole_band(-2.0 * SQRT2)
        assert not in_bracket_pole_band(0.0)


class TestSignBridge:
    @pytest.mark.parametrize("alpha", [-5.0, -2.0, 0.0, 2.0, 3.7, 3.8, 4.0, 10.0])
    def test_slope_sign_matches_h_times_bracket(self, alpha):
        # d/dx f = (positive) * sign(bracket) * h; skip |h| <= 1e-8
        for x in np.linspace(0.05, 0.95, 19):
            x = float(x)
            h = sb.h_fn(x, alpha)
            if abs(h) <= 1e-8:
                continue
            slope = sb.family_slope_estimate(x, alpha)
            expected = math.copysign(1.0, h) * math.copysign(1.0, bracket_value(x, alpha))
            assert math.copysign(1.0, slope) == expected

    def test_step_domain(self):
        with pytest.raises(sb.DomainError):
            sb.family_slope_estimate(1e-8, 4.0)


class TestAuxValue:
    def test_conditioning_floor(self):
        av = sb.aux_value(lambda t: sb.g_fn(t), 0.5)
        assert av.value == sb.g_fn(0.5)
        assert av.conditioning >= 1.0

    def test_zero_value_is_infinitely_conditioned(self):
        av = sb.aux_value(lambda t: t - 0.5, 0.5)
        assert av.conditioning == math.inf


@settings(max_examples=200, deadline=None)
@given(
    x=st.floats(min_value=1e-6, max_value=1.0 - 1e-9),
    alpha=st.floats(min_value=-10.0, max_value=10.0),
)
def test_h_f_consistency_property(x, alpha):
    if in_bracket_pole_band(alpha):
        lhs = sb.big_f_fn(x, alpha)
        assert math.isfinite(lhs)
        return
    lhs = sb.big_f_fn(x, alpha)
    rhs = bracket_value(x, alpha) * sb.h_fn(x, alpha)
    assert abs(lhs - rhs) <= 1e-10 * (1.0 + abs(lhs))
