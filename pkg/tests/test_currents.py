"""Tests for the bilinear current and its Gordon decomposition."""

import numpy as np
import pytest
from scipy.integrate import simpson

from models import BackgroundParams, QuantumNumbers, RadialGrid
from spectrum.levels import coupling_delta
from spinor.builder import MARGIN, build_spinor
from spinor.currents import bilinear_current, gordon_currents, gordon_identity_deviation, to_coordinate
from spinor.gamma import GAMMA

GROUND_UP = QuantumNumbers(n=0, l=0, s=1)


def _table(qn, p, bg, n_interior=4000):
    grid = RadialGrid.for_delta(coupling_delta(p, bg), points=n_interior + 2)
    return build_spinor(qn, p, bg, grid)


class TestBilinearCurrent:

    def test_zero_spinor(self, weak_particle, flat_bg):
        table = _table(GROUND_UP, weak_particle, flat_bg, 500)
        zero = table.with_components(np.zeros_like(table.components))
        np.testing.assert_array_equal(bilinear_current(zero, flat_bg), np.zeros((len(table.rho), 4)))

    @pytest.mark.parametrize("n,l,s", [(0, 0, 1), (1, -2, -1), (2, 1, 1)])
    def test_density_positive_and_no_axial_flow(self, n, l, s, weak_particle, cone_bg):
        current = bilinear_current(_table(QuantumNumbers(n=n, l=l, s=s), weak_particle, cone_bg, 1000), cone_bg)
        assert np.all(current[:, 0] > 0)
        np.testing.assert_array_equal(current[:, 3], np.zeros(len(current)))

    def test_charge_normalization(self, weak_particle, cone_bg):
        table = _table(QuantumNumbers(n=1, l=0, s=-1), weak_particle, cone_bg)
        density = bilinear_current(table, cone_bg)[:, 0]
        rho = np.concatenate(([0.0], table.rho, [table.grid.rho_inf]))
        values = np.concatenate(([0.0], cone_bg.eta * table.rho * density, [0.0]))
        assert simpson(values, x=rho) == pytest.approx(1.0, abs=1e-6)

    def test_static_frame_is_identity(self):
        bg = BackgroundParams(eta=1.0, omega=0.0)
        rho = np.linspace(0.1, 2.0, 5)
        local = np.arange(20, dtype=float).reshape(5, 4)
        coordinate = to_coordinate(local, bg, rho)
        np.testing.assert_allclose(coordinate[:, [0, 1, 3]], local[:, [0, 1, 3]])
        np.testing.assert_allclose(coordinate[:, 2], local[:, 2] / rho)


class TestGordonCurrents:
    """Convection, spin and dipole-coupling parts against the direct bilinear."""

    def test_zero_spinor(self, weak_particle, flat_bg):
        table = _table(GROUND_UP, weak_particle, flat_bg, 500)
        zero = table.with_components(np.zeros_like(table.components))
        currents = gordon_currents(zero, weak_particle, flat_bg)
        for part in (currents.total, currents.convection, currents.spin, currents.coupling):
            np.testing.assert_array_equal(part, np.zeros_like(part))

    @pytest.mark.parametrize("eta", [1.0, 0.5])
    @pytest.mark.parametrize("n,s", [(0, 1), (0, -1), (1, 1), (1, -1)])
    def test_identity_low_states(self, n, s, eta, weak_particle):
        bg = BackgroundParams(eta=eta, omega=1.0)
        table = _table(QuantumNumbers(n=n, l=0, s=s), weak_particle, bg)
        currents = gordon_currents(table, weak_particle, bg)
        assert len(currents.rho) == len(table.rho) - 2 * MARGIN
        assert gordon_identity_deviation(table, currents, bg) <= 1e-3

    @pytest.mark.parametrize("n,l,s", [(1, 1, 1), (0, -1, -1), (2, 0, -1)])
    def test_identity_excited_states(self, n, l, s, weak_particle, cone_bg):
        table = _table(QuantumNumbers(n=n, l=l, s=s), weak_particle, cone_bg)
        currents = gordon_currents(table, weak_particle, cone_bg)
        assert gordon_identity_deviation(table, currents, cone_bg) <= 1e-3

    def test_identity_improves_with_resolution(self, weak_particle, cone_bg):
        qn = QuantumNumbers(n=1, l=0, s=1)
        deviations = []
        for n_interior in (1000, 2001):
            table = _table(qn, weak_particle, cone_bg, n_interior)
            deviations.append(gordon_identity_deviation(table, gordon_currents(table, weak_particle, cone_bg), cone_bg))
        assert deviations[1] < deviations[0]

    def test_columns(self, weak_particle, flat_bg):
        table = _table(GROUND_UP, weak_particle, flat_bg, 300)
        columns = gordon_currents(table, weak_particle, flat_bg).columns()
        assert "total_phi" in columns
        assert "magnetization_z" in columns
        assert len(columns) == 1 + 4 * 4 + 2 * 3


def _divergence(rho: np.ndarray, values: np.ndarray) -> np.ndarray:
    """(1/rho) d(rho f)/drho by central differences."""
    return np.gradient(rho * values, rho, edge_order=2) / rho


class TestSpinDensities:
    """Spin part against the magnetization and polarization densities."""

    def test_polarization_uses_gamma0_gamma_i(self, weak_particle, cone_bg):
        table = _table(QuantumNumbers(n=1, l=0, s=1), weak_particle, cone_bg, 1000)
        currents = gordon_currents(table, weak_particle, cone_bg)
        psi = table.components[MARGIN:-MARGIN]
        psibar = psi.conj() @ GAMMA.beta
        for i, gamma in enumerate(GAMMA.gamma[1:]):
            expected = (0.5j / weak_particle.m) * np.einsum("ni,ij,nj->n", psibar, GAMMA.beta @ gamma, psi)
            np.testing.assert_allclose(currents.polarization[:, i], expected.real, rtol=1e-12, atol=1e-300)
        assert np.max(np.abs(currents.polarization[:, 0])) > 0

    @pytest.mark.parametrize("n,l,s", [(0, 0, 1), (1, 0, -1), (1, 2, 1)])
    def test_spin_part_from_densities(self, n, l, s, weak_particle, cone_bg):
        table = _table(QuantumNumbers(n=n, l=l, s=s), weak_particle, cone_bg)
        currents = gordon_currents(table, weak_particle, cone_bg)
        rho = currents.rho
        local = np.zeros((len(rho), 4))
        local[:, 0] = _divergence(rho, currents.polarization[:, 0])
        local[:, 2] = -_divergence(rho, currents.magnetization[:, 2])
        local[:, 3] = _divergence(rho, currents.magnetization[:, 1])
        expected = to_coordinate(local, cone_bg, rho)
        inner = slice(10, -10)
        for c in range(4):
            scale = max(float(np.max(np.abs(currents.spin[inner, c]))), 1e-300)
            gap = float(np.max(np.abs(currents.spin[inner, c] - expected[inner, c])))
            assert gap <= 1e-3 * scale
        # J^t carries +div P
        np.testing.assert_allclose(currents.spin[inner, 0], local[inner, 0],
                                   atol=1e-3 * np.max(np.abs(local[inner, 0])))
