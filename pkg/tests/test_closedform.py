"""Tests for the analytic Gaussian and number-state results.

Test organization:
- TestDigamma: integer digamma and log-factorial helpers
- TestGaussianClosed: Husimi-level closed forms and their identities
- TestSOrderedGaussian: s-ordered closed forms and the ordering bound
- TestFockClosed: number-state entropy and complexity
- TestEnergyConstraint: optimal Gaussian states at fixed mean photon number
"""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import digamma

from cvcomplexity.core.closedform import (
    EULER_GAMMA,
    HARMONIC_SUM_LIMIT,
    digamma_int,
    fock_closed,
    gaussian_closed,
    gaussian_complexity_at_energy,
    gaussian_moments,
    gaussian_ordering_bound,
    log_factorial,
    optimal_gaussian_at_energy,
    s_gaussian_closed,
    search_gaussian_extrema,
)
from cvcomplexity.core.errors import BadParameter, OrderingNotAdmissible
from cvcomplexity.core.states import mean_photon

nbars = st.floats(min_value=0.0, max_value=10.0, allow_nan=False)
squeezings = st.floats(min_value=0.0, max_value=3.0, allow_nan=False)
orderings = st.floats(min_value=-5.0, max_value=1.0, allow_nan=False)


# =============================================================================
# TestDigamma
# =============================================================================


class TestDigamma:
    """Tests for digamma_int and log_factorial."""

    def test_psi_one_is_minus_gamma(self):
        assert digamma_int(1) == -EULER_GAMMA

    @pytest.mark.parametrize("n", [2, 3, 10, 250, HARMONIC_SUM_LIMIT + 5])
    def test_matches_scipy(self, n):
        """Harmonic sum and scipy branch agree with scipy's digamma."""
        assert digamma_int(n) == pytest.approx(float(digamma(n)), rel=1e-13)

    def test_rejects_non_positive(self):
        with pytest.raises(BadParameter):
            digamma_int(0)

    def test_log_factorial(self):
        assert log_factorial(5) == pytest.approx(math.log(120.0))


# =============================================================================
# TestGaussianClosed
# =============================================================================


class TestGaussianClosed:
    """Tests for gaussian_closed and gaussian_moments."""

    def test_vacuum(self):
        """The vacuum has S = 1, I = 1 and C = 1."""
        assert gaussian_closed(0.0, 0.0) == pytest.approx((1.0, 1.0, 1.0))

    @pytest.mark.parametrize("nbar", [0.1, 1.0, 7.5])
    def test_thermal(self, nbar):
        """Thermal states: S = 1 + ln(nbar+1), I = 1/(nbar+1), C = 1."""
        entropy, fisher, c = gaussian_closed(nbar, 0.0)
        assert entropy == pytest.approx(1.0 + math.log1p(nbar))
        assert fisher == pytest.approx(1.0 / (nbar + 1.0))
        assert c == pytest.approx(1.0)

    @pytest.mark.parametrize("r", [0.25, 1.0, 2.5])
    def test_squeezed_vacuum(self, r):
        """Squeezed vacuum is pure (I = 1) with C = cosh r."""
        entropy, fisher, c = gaussian_closed(0.0, r)
        assert fisher == pytest.approx(1.0)
        assert entropy == pytest.approx(1.0 + math.log(math.cosh(r)))
        assert c == pytest.approx(math.cosh(r))

    @pytest.mark.parametrize("r", [0.3, 1.0])
    def test_high_temperature_limit(self, r):
        """At large nbar the complexity approaches cosh 2r."""
        _, _, c = gaussian_closed(1e6, r)
        assert c == pytest.approx(math.cosh(2.0 * r), rel=1e-4)

    def test_complexity_is_product(self):
        """C = e^{S-1} I."""
        entropy, fisher, c = gaussian_closed(0.7, 0.4)
        assert c == pytest.approx(math.exp(entropy - 1.0) * fisher)

    @given(nbar=nbars, r=squeezings, s=orderings)
    @settings(max_examples=200, deadline=None)
    def test_discriminant_identity(self, nbar, r, s):
        """A_s^2 - 4 B^2 = 4 Delta_s for every ordering."""
        m = gaussian_moments(nbar, r, s)
        lhs = m.a * m.a - 4.0 * m.b * m.b
        assert lhs == pytest.approx(4.0 * m.delta, rel=1e-9, abs=1e-9 * m.a * m.a)

    @given(nbar=nbars, r=squeezings)
    @settings(max_examples=100, deadline=None)
    def test_complexity_at_least_one(self, nbar, r):
        """Gaussian complexity never drops below its thermal value."""
        _, _, c = gaussian_closed(nbar, r)
        assert c >= 1.0 - 1e-12

    @pytest.mark.parametrize("nbar, r", [(-0.1, 0.0), (0.0, -1.0)])
    def test_rejects_negative(self, nbar, r):
        with pytest.raises(BadParameter):
            gaussian_closed(nbar, r)


# =============================================================================
# TestSOrderedGaussian
# =============================================================================


class TestSOrderedGaussian:
    """Tests for s_gaussian_closed and gaussian_ordering_bound."""

    @pytest.mark.parametrize("nbar, r", [(0.0, 0.0), (0.4, 0.9), (3.0, 0.2)])
    def test_husimi_order_reduces(self, nbar, r):
        """s = -1 reproduces the Husimi closed form."""
        assert s_gaussian_closed(nbar, r, -1.0) == pytest.approx(gaussian_closed(nbar, r))

    @pytest.mark.parametrize("s", [-10.0, -2.0, 0.0, 0.5])
    def test_thermal_complexity_is_one(self, s):
        """Thermal states keep C_s = 1 at every admissible ordering."""
        _, _, c = s_gaussian_closed(2.0, 0.0, s)
        assert c == pytest.approx(1.0)

    def test_wigner_of_thermal(self):
        """At s = 0 a thermal state has I_0 = 1/(nbar + 1/2)."""
        _, fisher, _ = s_gaussian_closed(1.5, 0.0, 0.0)
        assert fisher == pytest.approx(0.5)

    def test_bound(self):
        assert gaussian_ordering_bound(0.5, 0.5) == pytest.approx(2.0 * math.exp(-1.0))

    def test_beyond_bound(self):
        """Squeezing pushes the bound below s = 0."""
        bound = gaussian_ordering_bound(0.0, 1.0)
        s_gaussian_closed(0.0, 1.0, bound - 1e-6)
        with pytest.raises(OrderingNotAdmissible):
            s_gaussian_closed(0.0, 1.0, bound)
        with pytest.raises(OrderingNotAdmissible):
            s_gaussian_closed(0.0, 1.0, 0.0)

    @given(nbar=nbars, r=squeezings, s=st.floats(min_value=-5.0, max_value=-1.0))
    @settings(max_examples=100, deadline=None)
    def test_smoothing_keeps_delta_positive(self, nbar, r, s):
        """Orderings at or below Husimi always give a proper Gaussian."""
        assert gaussian_moments(nbar, r, s).delta > 0.0


# =============================================================================
# TestFockClosed
# =============================================================================


class TestFockClosed:
    """Tests for fock_closed()."""

    def test_vacuum(self):
        assert fock_closed(0) == pytest.approx((1.0, 1.0))

    def test_single_photon(self):
        """C(|1>) = e^gamma."""
        entropy, c = fock_closed(1)
        assert c == pytest.approx(math.exp(EULER_GAMMA))
        assert entropy == pytest.approx(1.0 + EULER_GAMMA)

    @pytest.mark.parametrize("k", range(0, 11))
    def test_matches_direct_formula(self, k):
        """C = k! e^{k - k psi(k+1)}."""
        expected = math.factorial(k) * math.exp(k - k * float(digamma(k + 1)))
        assert fock_closed(k)[1] == pytest.approx(expected, rel=1e-12)

    def test_grows_with_k(self):
        values = [fock_closed(k)[1] for k in range(8)]
        assert values == sorted(values)

    def test_large_k_is_finite(self):
        entropy, c = fock_closed(5000)
        assert math.isfinite(entropy) and math.isfinite(c)

    def test_rejects_negative(self):
        with pytest.raises(BadParameter):
            fock_closed(-1)


# =============================================================================
# TestEnergyConstraint
# =============================================================================


class TestEnergyConstraint:
    """Tests for the energy-constrained Gaussian optimum."""

    @pytest.mark.parametrize("energy", [0.0, 0.5, 1.0, 3.0])
    def test_optimum_is_squeezed_vacuum(self, energy):
        """The most complex Gaussian at energy E is squeezed vacuum with C = sqrt(E+1)."""
        spec, c_max, c_min = optimal_gaussian_at_energy(energy)
        assert mean_photon(spec) == pytest.approx(energy)
        assert gaussian_closed(spec.nbar, spec.r)[2] == pytest.approx(c_max)
        assert c_max == pytest.approx(math.sqrt(energy + 1.0))
        assert c_min == 1.0

    def test_fixed_nbar_curve(self):
        """The largest complexity at fixed nbar goes from sqrt(E+1) to 1."""
        energy = 2.0
        assert gaussian_complexity_at_energy(energy, 0.0) == pytest.approx(math.sqrt(3.0))
        assert gaussian_complexity_at_energy(energy, energy) == pytest.approx(1.0)
        values = [gaussian_complexity_at_energy(energy, n) for n in (0.0, 0.5, 1.0, 2.0)]
        assert values == sorted(values, reverse=True)

    def test_fixed_nbar_curve_matches_closed_form(self):
        energy, nbar = 3.0, 0.5
        r = math.asinh(math.sqrt((energy - nbar) / (2.0 * nbar + 1.0)))
        expected = gaussian_closed(nbar, r)[2]
        assert gaussian_complexity_at_energy(energy, nbar) == pytest.approx(expected)

    @pytest.mark.parametrize("energy", [0.5, 1.0, 3.0])
    def test_search_finds_extrema(self, energy):
        """Grid search reproduces the analytic maximum and minimum."""
        extrema = search_gaussian_extrema(energy)
        assert extrema.maximum.complexity == pytest.approx(math.sqrt(energy + 1.0), rel=1e-9)
        assert extrema.maximum.nbar == pytest.approx(0.0, abs=1e-9)
        assert extrema.maximum.xi_abs == pytest.approx(0.0, abs=1e-9)
        assert extrema.maximum.r == pytest.approx(math.asinh(math.sqrt(energy)), rel=1e-9)
        assert extrema.minimum.complexity == pytest.approx(1.0, abs=1e-12)
        assert extrema.evaluations > 0

    def test_rejects_bad_input(self):
        with pytest.raises(BadParameter):
            optimal_gaussian_at_energy(-1.0)
        with pytest.raises(BadParameter):
            gaussian_complexity_at_energy(1.0, 2.0)
        with pytest.raises(BadParameter):
            search_gaussian_extrema(1.0, points=1)
