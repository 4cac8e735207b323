import math

import numpy as np
import pytest
from conftest import zero_mode_residual

from susy_fisheye.do_core import DoParams, superpotential_w, u_minus
from susy_fisheye.isospectral import (
    IsoFamily,
    SuperpotentialPair,
    beta_of_rho,
    i0_closed_half,
    i0_closed_one,
    i0_quadrature,
    radial_factor_bosonic,
    superpotential_general,
    u_bosonic_family,
    v_general,
)
from susy_fisheye.numerics import derivative

# frozen reference values at rho = 1, l = 0, kappa = 1 (I0 = 1 - pi/4)
I0_ONE = 1.0 - math.pi / 4.0
# for kappa = 1/2, l = 0 the symbolic antiderivative sec^2 b + 4 ln cos b - cos^2 b
# gives I0(rho=1) = 3/2 - 2 ln 2; adaptive quadrature reproduces it below
I0_HALF = 1.5 - 2.0 * math.log(2.0)


class TestBeta:
    def test_symmetry_point(self):
        assert beta_of_rho(1.0, 1.0) == pytest.approx(math.pi / 4, abs=1e-15)
        assert beta_of_rho(1.0, 0.5) == pytest.approx(math.pi / 4, abs=1e-15)

    def test_value(self):
        assert beta_of_rho(math.sqrt(3.0), 1.0) == pytest.approx(math.pi / 3, abs=1e-14)

    def test_range_and_domain(self):
        g = np.logspace(-6, 6, 50)
        b = np.asarray(beta_of_rho(g, 1.0))
        assert np.all((b > 0) & (b < math.pi / 2 + 1e-15))
        with pytest.raises(ValueError):
            beta_of_rho(0.0, 1.0)


class TestQuadrature:
    def test_empty_integral(self):
        assert i0_quadrature(1e-10, 0, 1.0) == pytest.approx(0.0, abs=1e-20)

    def test_kappa_one_value(self):
        # analytic antiderivative: rho - arctan rho
        assert i0_quadrature(1.0, 0, 1.0, tol=1e-12) == pytest.approx(I0_ONE, abs=1e-11)

    def test_kappa_half_value(self):
        assert i0_quadrature(1.0, 0, 0.5, tol=1e-12) == pytest.approx(I0_HALF, abs=1e-11)

    def test_non_decreasing(self):
        vals = [i0_quadrature(r, 1, 1.0) for r in (0.2, 0.5, 1.0, 3.0, 10.0)]
        assert all(b > a for a, b in zip(vals, vals[1:]))


class TestClosedForms:
    def test_zero_at_beta_zero(self):
        for l in range(4):
            assert i0_closed_half(0.0, l) == pytest.approx(0.0, abs=1e-13)
            assert i0_closed_one(0.0, l) == pytest.approx(0.0, abs=1e-15)

    def test_l0_kappa_one_is_tan_minus_beta(self):
        b = 0.9
        assert i0_closed_one(b, 0) == pytest.approx(math.tan(b) - b, abs=1e-14)

    def test_half_at_pi_quarter_matches_quadrature(self):
        got = i0_closed_half(math.pi / 4, 0)
        assert got == pytest.approx(I0_HALF, abs=1e-12)
        assert got == pytest.approx(i0_quadrature(1.0, 0, 0.5, tol=1e-12), abs=1e-10)

    def test_half_l1_matches_quadrature(self):
        beta = 1.2
        rho = math.tan(beta) ** 2
        assert i0_closed_half(beta, 1) == pytest.approx(
            i0_quadrature(rho, 1, 0.5, tol=1e-12), abs=1e-9
        )

    def test_one_l2_matches_quadrature(self):
        beta = 1.0
        rho = math.tan(beta)
        assert i0_closed_one(beta, 2) == pytest.approx(
            i0_quadrature(rho, 2, 1.0, tol=1e-12), abs=1e-10
        )

    @pytest.mark.parametrize("l", range(6))
    def test_oracle_equivalence_grid(self, l):
        rhos = np.logspace(math.log10(0.01), math.log10(50.0), 50)
        for r in rhos:
            r = float(r)
            assert i0_closed_one(beta_of_rho(r, 1.0), l) == pytest.approx(
                i0_quadrature(r, l, 1.0, tol=1e-12), abs=1e-9
            )
            assert i0_closed_half(beta_of_rho(r, 0.5), l) == pytest.approx(
                i0_quadrature(r, l, 0.5, tol=1e-12), abs=1e-9
            )

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            i0_closed_one(-0.1, 0)
        with pytest.raises(ValueError):
            i0_closed_half(math.pi / 2, 0)


class TestIsoFamily:
    def test_closed_form_selected_for_physical_kappas(self):
        for kappa in (0.5, 1.0):
            fam = IsoFamily(DoParams.nodeless(kappa, 1, 1.0))
            r = 1.7
            assert fam.i0(r) == pytest.approx(
                i0_quadrature(r, 1, kappa, tol=1e-12), abs=1e-10
            )

    def test_quadrature_fallback_for_other_kappa(self):
        fam = IsoFamily(DoParams.nodeless(2.0, 2, 1.0))
        r = 1.3
        assert fam.i0(r) == pytest.approx(i0_quadrature(r, 2, 2.0), abs=1e-9)

    def test_i0_vanishes_at_origin_and_grows(self):
        fam = IsoFamily(DoParams.nodeless(1.0, 1, 1.0))
        g = np.linspace(0.05, 6.0, 40)
        vals = np.asarray(fam.i0(g))
        assert vals[0] < 1e-4
        assert np.all(np.diff(vals) > 0)


class TestGeneralRiccatiSolution:
    def test_value_at_unit_radius(self):
        fam = IsoFamily(DoParams.nodeless(1.0, 0, 1.0))
        assert v_general(1.0, fam) == pytest.approx(2.0 * (1.0 + I0_ONE), rel=1e-12)

    def test_large_lambda_dominance(self):
        fam = IsoFamily(DoParams.nodeless(1.0, 1, 1e9))
        r = 0.8
        f2 = (r**2 / (1 + r**2) ** 1.5) ** 2
        assert v_general(r, fam) == pytest.approx(1e9 / f2, rel=1e-8)

    def test_positive_everywhere(self):
        fam = IsoFamily(DoParams.nodeless(0.5, 1, 0.5))
        g = np.linspace(0.05, 10.0, 50)
        assert np.all(np.asarray(v_general(g, fam)) > 0)

    def test_ode_residual_pointwise(self):
        fam = IsoFamily(DoParams.nodeless(1.0, 1, 10.0))
        r = 0.5
        dv = derivative(lambda s: v_general(s, fam), r, h0=0.25 * r)
        res = -dv + 2.0 * superpotential_w(r, 1, 1.0) * v_general(r, fam) + 1.0
        assert abs(res) < 1e-6

    @pytest.mark.parametrize("kappa", [0.5, 1.0])
    @pytest.mark.parametrize("l", [0, 1, 2])
    @pytest.mark.parametrize("lam", [0.5, 1.0, 10.0])
    def test_riccati_relative_residual(self, kappa, l, lam):
        # scale-aware form of the defining equation -V' + 2 W V = -1: the
        # absolute residual is dominated by float64 representation noise
        # where V' reaches 1e9, so it is normalized by max(1, |V'|) here
        fam = IsoFamily(DoParams.nodeless(kappa, l, lam))
        for r in np.linspace(0.1, 10.0, 15):
            r = float(r)
            dv = derivative(lambda s: v_general(s, fam), r, h0=0.25 * r)
            res = -dv + 2.0 * superpotential_w(r, l, kappa) * v_general(r, fam) + 1.0
            assert abs(res) / max(1.0, abs(dv)) < 1e-9


class TestGeneralSuperpotential:
    def test_large_lambda_collapse(self):
        fam = IsoFamily(DoParams.nodeless(1.0, 1, 1e9))
        for r in (0.3, 1.0, 4.0):
            assert abs(
                superpotential_general(r, fam) - superpotential_w(r, 1, 1.0)
            ) < 1e-8

    def test_frozen_value(self):
        fam = IsoFamily(DoParams.nodeless(1.0, 0, 1.0))
        expected = -0.5 + 0.5 / (1.0 + I0_ONE)  # W + f^2/(I0 + lam)
        assert expected == pytest.approx(-0.088342463404645, abs=1e-14)
        assert superpotential_general(1.0, fam) == pytest.approx(expected, rel=1e-12)

    @pytest.mark.parametrize("kappa", [0.5, 1.0])
    def test_algebraic_identity_with_v(self, kappa):
        fam = IsoFamily(DoParams.nodeless(kappa, 2, 0.7))
        pair = SuperpotentialPair(fam)
        for r in (0.2, 1.1, 5.0):
            lhs = pair.general(r)
            rhs = 1.0 / v_general(r, fam) + pair.particular(r)
            assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-12)

    @pytest.mark.parametrize("kappa", [0.5, 1.0])
    @pytest.mark.parametrize("l", [0, 1, 2])
    @pytest.mark.parametrize("lam", [0.5, 1.0, 10.0])
    def test_shared_fermionic_partner(self, kappa, l, lam):
        fam = IsoFamily(DoParams.nodeless(kappa, l, lam))
        for r in np.linspace(0.1, 10.0, 15):
            r = float(r)
            dwg = derivative(lambda s: superpotential_general(s, fam), r, h0=0.25 * r)
            dw = derivative(lambda s: superpotential_w(s, l, kappa), r, h0=0.25 * r)
            up_general = dwg + superpotential_general(r, fam) ** 2
            up_particular = dw + superpotential_w(r, l, kappa) ** 2
            assert abs(up_general - up_particular) < 1e-6


class TestBosonicFamily:
    def test_large_lambda_recovers_original(self):
        fam = IsoFamily(DoParams.nodeless(1.0, 0, 1e9))
        for r in (0.2, 1.0, 3.0):
            assert abs(u_bosonic_family(r, fam) - u_minus(r, 0, 1.0)) < 1e-8

    def test_frozen_regression_value(self):
        # assembled from independently verified components:
        # -3/4 - 4 f f'/(2 - pi/4) + 2 f^4/(2 - pi/4)^2 at rho = 1
        fam = IsoFamily(DoParams.nodeless(1.0, 0, 1.0))
        f, df = 2**-0.5, 2**-1.5
        expected = -0.75 - 4 * f * df / (1 + I0_ONE) + 2 * f**4 / (1 + I0_ONE) ** 2
        assert expected == pytest.approx(-1.234391218319198, abs=1e-14)
        assert u_bosonic_family(1.0, fam) == pytest.approx(expected, rel=1e-13)

    def test_centrifugal_dominates_at_origin(self):
        fam = IsoFamily(DoParams.nodeless(1.0, 2, 1.0))
        r = 1e-3
        assert u_bosonic_family(r, fam) == pytest.approx(6.0 / r**2, rel=1e-5)

    def test_lambda_monotone_recovery(self):
        grid = np.linspace(0.1, 5.0, 200)
        gaps = []
        for lam in (1.0, 10.0, 100.0, 1000.0):
            fam = IsoFamily(DoParams.nodeless(1.0, 1, lam))
            gaps.append(
                float(
                    np.max(
                        np.abs(
                            np.asarray(u_bosonic_family(grid, fam))
                            - np.asarray(u_minus(grid, 1, 1.0))
                        )
                    )
                )
            )
        assert all(b < a for a, b in zip(gaps, gaps[1:]))


class TestDampedRadialFactor:
    def test_pure_damping_limit(self):
        lam = 1e9
        fam = IsoFamily(DoParams.nodeless(1.0, 1, lam))
        for r in (0.4, 1.0, 2.5):
            f = r**2 / (1 + r**2) ** 1.5
            assert radial_factor_bosonic(r, fam) == pytest.approx(f / lam, rel=1e-8)

    def test_frozen_value(self):
        fam = IsoFamily(DoParams.nodeless(1.0, 0, 1.0))
        expected = (2**-0.5) / (1.0 + I0_ONE)
        assert expected == pytest.approx(0.582171671306249, abs=1e-14)
        assert radial_factor_bosonic(1.0, fam) == pytest.approx(expected, rel=1e-13)

    def test_positive_and_nodeless(self):
        fam = IsoFamily(DoParams.nodeless(0.5, 1, 0.3))
        g = np.linspace(0.05, 20.0, 80)
        assert np.all(np.asarray(radial_factor_bosonic(g, fam)) > 0)

    @pytest.mark.parametrize("l", [0, 1, 2])
    @pytest.mark.parametrize("lam", [1.0, 10.0])
    def test_numerov_zero_mode(self, l, lam):
        assert zero_mode_residual(l, 1.0, lam) < 1e-5
