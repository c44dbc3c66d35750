"""Tests for the finite-difference eigenvalue oracle."""

import numpy as np
import pytest

from models import BackgroundParams, QuantumNumbers, RadialGrid
from oracle.eigensolver import (
    EigenReport,
    default_grid,
    discretize,
    lowest_eigenvalues,
    rayleigh_quotient,
    verify_spectrum,
)
from radial.wavefunction import radial_eigenfunction
from spectrum.levels import analytic_beta
from utils.errors import DomainError, InputError

BOX = RadialGrid(rho_inf=6.0, n_interior=7999)


def _dense(op):
    return np.diag(op.diagonal) + np.diag(op.off_diagonal, 1) + np.diag(op.off_diagonal, -1)


class TestDiscretize:

    def test_liouville_stencil(self):
        grid = RadialGrid(rho_inf=6.0, n_interior=199)
        op = discretize(0.25, 1.0, 0.5, grid, scheme="liouville")
        rho = grid.nodes
        nu2 = (0.25 / 0.5) ** 2
        np.testing.assert_allclose(op.diagonal, 2 / grid.h ** 2 + (nu2 - 0.25) / rho ** 2 + rho ** 2, rtol=1e-15)
        np.testing.assert_array_equal(op.off_diagonal, np.full(198, -1 / grid.h ** 2))

    def test_liouville_zero_zeta_potential(self):
        grid = RadialGrid(rho_inf=6.0, n_interior=199)
        op = discretize(0.0, 2.0, 1.0, grid, scheme="liouville")
        potential = op.diagonal - 2 / grid.h ** 2
        np.testing.assert_allclose(potential, -0.25 / grid.nodes ** 2 + 4.0 * grid.nodes ** 2, rtol=1e-12, atol=1e-9)

    @pytest.mark.parametrize("scheme", ["regularized", "liouville"])
    def test_symmetric(self, scheme):
        op = discretize(1.3, 0.7, 0.8, RadialGrid(rho_inf=8.0, n_interior=150), scheme=scheme)
        dense = _dense(op)
        np.testing.assert_array_equal(dense, dense.T)
        vector = np.random.default_rng(3).standard_normal(op.size)
        np.testing.assert_allclose(op.apply(vector), dense @ vector, rtol=1e-12)

    def test_regularized_includes_origin(self):
        op = discretize(0.0, 1.0, 1.0, RadialGrid(rho_inf=6.0, n_interior=199))
        assert op.size == 200
        assert op.nodes[0] == 0.0
        assert np.all(np.isfinite(op.diagonal))

    def test_bad_arguments(self):
        with pytest.raises(DomainError):
            discretize(0.0, 0.0, 1.0, BOX)
        with pytest.raises(InputError):
            discretize(0.0, 1.0, 1.0, BOX, scheme="spectral")


class TestLowestEigenvalues:
    """Sturm bisection on the tridiagonal operator."""

    def test_zero_zeta_ground(self):
        beta = lowest_eigenvalues(discretize(0.0, 1.0, 1.0, BOX), 1)[0]
        assert beta == pytest.approx(2.0, rel=1e-4)

    def test_cone_levels(self):
        beta = lowest_eigenvalues(discretize(0.25, 1.0, 0.5, BOX), 2)
        np.testing.assert_allclose(beta, [3.0, 7.0], rtol=1e-4)

    def test_liouville_cone_levels(self):
        # nu = 1/2 removes the inverse-square term, so the plain stencil is second order
        beta = lowest_eigenvalues(discretize(0.25, 1.0, 0.5, BOX, scheme="liouville"), 2)
        np.testing.assert_allclose(beta, [3.0, 7.0], rtol=1e-4)

    def test_strictly_increasing(self):
        beta = lowest_eigenvalues(discretize(1.5, 1.0, 0.8, BOX), 10)
        assert np.all(np.diff(beta) > 0)

    def test_deterministic(self):
        op = discretize(0.75, 1.0, 0.5, BOX)
        np.testing.assert_array_equal(lowest_eigenvalues(op, 4), lowest_eigenvalues(op, 4))

    def test_count_out_of_range(self):
        op = discretize(0.0, 1.0, 1.0, RadialGrid(rho_inf=6.0, n_interior=100))
        with pytest.raises(InputError):
            lowest_eigenvalues(op, op.size + 1)
        with pytest.raises(InputError):
            lowest_eigenvalues(op, 0)

    @pytest.mark.parametrize("zeta,eta", [(0.0, 1.0), (0.25, 0.5), (1.0, 1.0)])
    def test_second_order_convergence(self, zeta, eta):
        exact = analytic_beta(0, zeta, 1.0, eta)

        def error(n_interior):
            op = discretize(zeta, 1.0, eta, RadialGrid(rho_inf=6.0, n_interior=n_interior))
            return abs(lowest_eigenvalues(op, 1)[0] - exact)

        assert error(399) / error(799) == pytest.approx(4.0, rel=0.15)


class TestRayleighQuotient:

    @pytest.mark.parametrize("scheme", ["regularized", "liouville"])
    def test_variational_bound(self, scheme, unit_delta):
        bg = BackgroundParams(eta=0.5, omega=1.0)
        p = unit_delta(bg)
        op = discretize(0.25, 1.0, 0.5, BOX, scheme=scheme)
        xi = radial_eigenfunction(QuantumNumbers(n=0, l=0, s=1), p, bg, op.nodes)
        quotient = rayleigh_quotient(op, op.embed(xi))
        beta0 = lowest_eigenvalues(op, 1)[0]
        assert quotient >= beta0 - 1e-9
        assert quotient == pytest.approx(3.0, rel=1e-3)


class TestEigenReport:

    def test_relative_error(self):
        report = EigenReport(n=0, l=0, s=1, eta=1.0, delta=1.0, beta_analytic=2.0, beta_numeric=2.0002,
                             grid_n=7999, rho_inf=6.0, tolerance=1e-4)
        assert report.rel_error == pytest.approx(1e-4)
        row = report.to_dict()
        for key in ("n", "l", "s", "eta", "delta", "beta_analytic", "beta_numeric", "rel_error", "grid_n", "rho_inf"):
            assert key in row


class TestVerifySpectrum:

    def test_small_sweep(self, unit_delta):
        bg = BackgroundParams(eta=0.5, omega=1.0)
        states = [QuantumNumbers(n=n, l=l, s=s) for n in range(2) for l in (-1, 0, 1) for s in (1, -1)]
        reports = verify_spectrum(unit_delta(bg), bg, states, grid=default_grid(1.0, points=4001))
        assert len(reports) == len(states)
        assert [(r.n, r.l, r.s) for r in reports] == sorted((r.n, r.l, r.s) for r in reports)
        assert all(r.passed for r in reports)

    def test_zero_tolerance_flags_everything(self, unit_delta):
        bg = BackgroundParams(eta=1.0, omega=1.0)
        states = [QuantumNumbers(n=n, l=0, s=1) for n in range(3)]
        reports = verify_spectrum(unit_delta(bg), bg, states, tol=0.0, grid=default_grid(1.0, points=2001))
        assert not any(r.passed for r in reports)

    def test_empty_set(self, unit_delta, flat_bg):
        assert verify_spectrum(unit_delta(flat_bg), flat_bg, []) == []

    def test_no_rotation(self, weak_particle):
        with pytest.raises(DomainError):
            verify_spectrum(weak_particle, BackgroundParams(eta=1.0, omega=0.0), [QuantumNumbers(0, 0, 1)])

    @pytest.mark.slow
    @pytest.mark.parametrize("eta", [0.5, 0.8, 1.0])
    def test_full_sweep(self, eta, unit_delta):
        bg = BackgroundParams(eta=eta, omega=1.0)
        states = [QuantumNumbers(n=n, l=l, s=s) for n in range(5) for l in range(-2, 3) for s in (1, -1)]
        reports = verify_spectrum(unit_delta(bg), bg, states)
        assert reports[0].grid_n == 7999
        assert max(r.rel_error for r in reports) <= 1e-4
