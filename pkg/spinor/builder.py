"""
Positive-energy four-spinors of the bound states and their Dirac-equation residual.

The stationary state is psi = exp(-iEt) exp(ij phi) C (large, small) with the
large component xi_s in the sigma^3 = s slot of the upper pair and the small
component in the sigma^3 = -s slot of the lower pair:

    chi_s = -i [xi' + xi/(2 rho) - delta rho xi - s j xi/(eta rho)] / (E + m + omega j - s d E0)
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy.integrate import simpson

from models import BackgroundParams, ParticleParams, QuantumNumbers, RadialGrid
from radial.kummer import kummer_derivative
from radial.wavefunction import envelope_peak, radial_envelope, radial_eigenfunction
from spectrum.levels import coupling_delta, dirac_energy_level, effective_angular_momentum
from spinor.gamma import GAMMA
from utils.errors import ConstructionError, NoBoundStateError, NotSupportedError
from utils.logger import get_logger

logger = get_logger("spinor")

# Nodes dropped at each end wherever a radial derivative is involved
MARGIN = 2
_ZERO_COEFFICIENT = 1e-14


@dataclass(frozen=True)
class SpinorTable:
    """
    Four complex components per interior node.

    `powers` holds the leading exponent p_c of each component near the axis;
    psi_c / rho**p_c is a smooth even function of rho, which is what the
    central differences act on.
    """
    qn: QuantumNumbers
    grid: RadialGrid
    eta: float
    rho: np.ndarray
    components: np.ndarray  # shape (N, 4)
    energy: float
    prefactor: float
    powers: Tuple[float, float, float, float]

    def with_components(self, components: np.ndarray) -> "SpinorTable":
        """Same table with replaced samples (used to perturb the residual)."""
        return SpinorTable(self.qn, self.grid, self.eta, self.rho, np.asarray(components, dtype=complex),
                           self.energy, self.prefactor, self.powers)

    def radial_derivative(self) -> np.ndarray:
        """d psi / d rho by central differences on the regular factors."""
        rho = self.rho[:, None]
        powers = np.asarray(self.powers)[None, :]
        regular = self.components / rho ** powers
        d_regular = np.gradient(regular, self.grid.h, axis=0, edge_order=2)
        return powers * rho ** (powers - 1) * regular + rho ** powers * d_regular

    def norm(self) -> float:
        """Integral of psi^dagger psi eta rho drho over the closed grid (zero padded ends)."""
        density = np.sum(np.abs(self.components) ** 2, axis=1)
        return _closed_integral(self.eta * self.rho * density, self.rho, self.grid)

    def columns(self) -> dict:
        out = {"rho": self.rho}
        for c in range(4):
            out[f"re_psi{c + 1}"] = self.components[:, c].real
            out[f"im_psi{c + 1}"] = self.components[:, c].imag
        return out


def _closed_integral(values: np.ndarray, rho: np.ndarray, grid: RadialGrid) -> float:
    x = np.concatenate(([0.0], rho, [grid.rho_inf]))
    y = np.concatenate(([0.0], values, [0.0]))
    return float(simpson(y, x=x))


def _small_component(
    qn: QuantumNumbers,
    p: ParticleParams,
    bg: BackgroundParams,
    rho: np.ndarray,
    large: np.ndarray,
    energy: float,
    log_scale: float,
) -> Tuple[np.ndarray, float]:
    zeta = effective_angular_momentum(qn.l, qn.s, bg.eta)
    nu = abs(zeta) / bg.eta
    delta = coupling_delta(p, bg)

    denominator = energy + p.m + bg.omega * qn.j - qn.s * p.coupling
    if denominator <= 0:
        raise ConstructionError(
            f"E + m + omega j - s d E0 = {denominator:.6g} <= 0; state is outside the positive-energy regime"
        )

    coefficient = (abs(zeta) - qn.s * zeta) / bg.eta
    mu = delta * rho ** 2
    # derivative of the Kummer factor: (-n/b) M(-n + 1, b + 1, mu), zero for n = 0
    envelope = radial_envelope(nu, mu, log_scale)
    kummer_term = 2 * delta * rho * envelope * kummer_derivative(-qn.n, nu + 1, mu)
    bracket = large * (coefficient / rho - 2 * delta * rho) + kummer_term

    power = nu - 1 if abs(coefficient) > _ZERO_COEFFICIENT else nu + 1
    return -1j * bracket / denominator, power


def build_spinor(
    qn: QuantumNumbers,
    p: ParticleParams,
    bg: BackgroundParams,
    grid: RadialGrid,
    energy: Optional[float] = None,
) -> SpinorTable:
    """
    Assemble the normalized positive-energy spinor on the grid interior.

    Args:
        qn: Quantum numbers (k = 0)
        p: Particle parameters
        bg: Background parameters (omega > 0)
        grid: Radial grid
        energy: Energy entering the small component (defaults to dirac_energy_level)

    Returns:
        SpinorTable with C real and positive

    Raises:
        ConstructionError: if E + m + omega j - s d E0 <= 0
    """
    if qn.k != 0:
        raise NotSupportedError(f"bound states need k = 0, got k = {qn.k}")
    if bg.omega == 0:
        raise NoBoundStateError("no bound states without rotation (omega = 0)")
    if energy is None:
        energy = dirac_energy_level(qn, p, bg)

    rho = grid.nodes
    nu = abs(effective_angular_momentum(qn.l, qn.s, bg.eta)) / bg.eta
    # samples relative to the envelope peak; C below absorbs the scale
    log_scale = envelope_peak(nu)
    large = radial_eigenfunction(qn, p, bg, rho, log_scale)
    small, small_power = _small_component(qn, p, bg, rho, large, energy, log_scale)

    components = np.zeros((len(rho), 4), dtype=complex)
    powers = [0.0, 0.0, 0.0, 0.0]
    upper, lower = (0, 3) if qn.s == 1 else (1, 2)
    components[:, upper] = large
    components[:, lower] = small
    powers[upper] = nu
    powers[lower] = small_power

    density = np.sum(np.abs(components) ** 2, axis=1)
    total = _closed_integral(bg.eta * rho * density, rho, grid)
    constant = 1.0 / np.sqrt(total)
    if components[0, upper].real < 0:
        constant = -constant

    logger.debug(f"Spinor (n={qn.n}, l={qn.l}, s={qn.s}) at E = {energy:.10g}, C = {constant:.6g}")
    return SpinorTable(
        qn=qn,
        grid=grid,
        eta=bg.eta,
        rho=rho,
        components=components * constant,
        energy=float(energy),
        prefactor=float(abs(constant) * np.exp(-log_scale)),
        powers=tuple(powers),
    )


def hamiltonian_apply(table: SpinorTable, p: ParticleParams, bg: BackgroundParams) -> np.ndarray:
    """
    Radial Hamiltonian with d/dt -> -iE, d/dphi -> ij, d/dz -> 0:

        H = m beta - omega j - i alpha^1 (d/drho + 1/(2 rho)) + (j/(eta rho)) alpha^2
            - i delta rho beta alpha^1 + d E0 beta Sigma^3
    """
    rho = table.rho[:, None]
    psi = table.components
    dpsi = table.radial_derivative()
    j = table.qn.j
    delta = coupling_delta(p, bg)
    g = GAMMA

    def act(matrix: np.ndarray, values: np.ndarray) -> np.ndarray:
        return values @ matrix.T

    out = p.m * act(g.beta, psi) - bg.omega * j * psi
    out += -1j * act(g.alpha[0], dpsi + psi / (2 * rho))
    out += (j / (bg.eta * rho)) * act(g.alpha[1], psi)
    out += -1j * delta * rho * act(g.beta @ g.alpha[0], psi)
    out += p.coupling * act(g.beta @ g.sigma[2], psi)
    return out


def dirac_residual(table: SpinorTable, p: ParticleParams, bg: BackgroundParams) -> float:
    """
    L2 norm of H psi - E psi over eta rho drho, margins excluded.

    Args:
        table: Spinor samples
        p: Particle parameters
        bg: Background parameters

    Returns:
        Residual norm (zero for the zero spinor)
    """
    residual = hamiltonian_apply(table, p, bg) - table.energy * table.components
    inner = slice(MARGIN, -MARGIN)
    rho = table.rho[inner]
    density = np.sum(np.abs(residual[inner]) ** 2, axis=1)
    return float(np.sqrt(simpson(table.eta * rho * density, x=rho)))
