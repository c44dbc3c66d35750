"""
Metric and Fermi-Walker tetrad of the rotating frame in the cosmic string spacetime.

Coordinates are ordered (t, rho, phi, z); tetrad indices (0, 1, 2, 3).
"""

import math
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

import numpy as np

from models import BackgroundParams
from utils.errors import DomainError, SingularityError
from utils.logger import get_logger

logger = get_logger("geometry")

# Local Minkowski metric eta_ab, signature (-, +, +, +)
MINKOWSKI = np.diag([-1.0, 1.0, 1.0, 1.0])

# Radii (as fractions of the light-cylinder radius) at which Cartan identities are sampled
CARTAN_SAMPLES = (0.1, 0.35, 0.6, 0.85)
CARTAN_TOLERANCE = 1e-12


@dataclass(frozen=True)
class MetricComponents:
    """Independent components of the rotating-frame metric."""
    g_tt: float
    g_tphi: float
    g_rhorho: float
    g_phiphi: float
    g_zz: float

    def as_matrix(self) -> np.ndarray:
        g = np.zeros((4, 4))
        g[0, 0] = self.g_tt
        g[0, 2] = g[2, 0] = self.g_tphi
        g[1, 1] = self.g_rhorho
        g[2, 2] = self.g_phiphi
        g[3, 3] = self.g_zz
        return g


@dataclass(frozen=True)
class Tetrad:
    """Tetrad e^a_mu (rows a, columns mu) and its inverse e^mu_a (rows mu, columns a)."""
    components: np.ndarray
    inverse: np.ndarray


@dataclass(frozen=True)
class ConnectionComponents:
    """Non-null connection 1-form components omega_mu^1_2 (the 2_1 ones are their negatives)."""
    t12: float
    phi12: float


@dataclass
class CartanReport:
    """Residuals of d(theta^a) + omega^a_b ^ theta^b per 2-form coefficient."""
    residuals: Dict[str, float] = field(default_factory=dict)
    tolerance: float = CARTAN_TOLERANCE

    @property
    def passed(self) -> bool:
        return all(abs(r) <= self.tolerance for r in self.residuals.values())

    def failures(self) -> Dict[str, float]:
        return {k: r for k, r in self.residuals.items() if abs(r) > self.tolerance}


def metric_components(bg: BackgroundParams, rho: float) -> MetricComponents:
    """
    Line element of the cosmic string seen from the rotating frame.

    Args:
        bg: Background parameters
        rho: Radial coordinate (>= 0)

    Returns:
        The five independent metric components
    """
    if rho < 0:
        raise DomainError(f"rho must be >= 0, got {rho}")
    eta, omega = bg.eta, bg.omega
    eta2rho2 = eta * eta * rho * rho
    return MetricComponents(
        g_tt=-(1.0 - omega * omega * eta2rho2),
        g_tphi=omega * eta2rho2,
        g_rhorho=1.0,
        g_phiphi=eta2rho2,
        g_zz=1.0,
    )


def tetrad_at(bg: BackgroundParams, rho: float) -> Tetrad:
    """
    Fermi-Walker tetrad theta^0 = dt, theta^1 = drho,
    theta^2 = eta*omega*rho dt + eta*rho dphi, theta^3 = dz.

    Raises:
        SingularityError: at rho = 0 where the inverse does not exist
    """
    if rho < 0:
        raise DomainError(f"rho must be >= 0, got {rho}")
    if rho == 0:
        raise SingularityError("inverse tetrad is singular on the string axis (rho = 0)")

    eta, omega = bg.eta, bg.omega
    e = np.eye(4)
    e[2, 0] = eta * omega * rho
    e[2, 2] = eta * rho

    inv = np.eye(4)
    inv[2, 0] = -omega
    inv[2, 2] = 1.0 / (eta * rho)
    return Tetrad(components=e, inverse=inv)


def reconstruct_metric(tetrad: Tetrad) -> np.ndarray:
    """g_mu_nu = e^a_mu e^b_nu eta_ab."""
    e = tetrad.components
    return e.T @ MINKOWSKI @ e


def connection_one_form(bg: BackgroundParams) -> ConnectionComponents:
    """Torsion-free connection of the tetrad: omega_t^1_2 = -omega*eta, omega_phi^1_2 = -eta."""
    return ConnectionComponents(t12=-bg.omega * bg.eta, phi12=-bg.eta)


def _wedge(alpha: np.ndarray, beta: np.ndarray) -> np.ndarray:
    return np.outer(alpha, beta) - np.outer(beta, alpha)


def _exterior_derivative(bg: BackgroundParams) -> np.ndarray:
    """d(theta^a) as antisymmetric coefficient matrices; only theta^2 depends on rho."""
    dtheta = np.zeros((4, 4, 4))
    # d/drho of theta^2 components (eta*omega, 0, eta, 0)
    drho_theta2 = np.array([bg.eta * bg.omega, 0.0, bg.eta, 0.0])
    drho = np.array([0.0, 1.0, 0.0, 0.0])
    dtheta[2] = _wedge(drho, drho_theta2)
    return dtheta


def cartan_check(
    bg: BackgroundParams,
    connection: Optional[ConnectionComponents] = None,
) -> CartanReport:
    """
    Check the first structure equation for the hard-coded connection.

    Args:
        bg: Background parameters
        connection: Connection to test (defaults to connection_one_form(bg))

    Returns:
        CartanReport with one residual per (a, mu, nu, sample radius)
    """
    conn = connection or connection_one_form(bg)

    # omega^a_b as 1-forms
    omega_form = np.zeros((4, 4, 4))
    omega_form[1, 2] = np.array([conn.t12, 0.0, conn.phi12, 0.0])
    omega_form[2, 1] = -omega_form[1, 2]

    rho_max = physical_radius(bg)
    scale = rho_max if math.isfinite(rho_max) else 1.0
    dtheta = _exterior_derivative(bg)

    report = CartanReport()
    labels = "t", "rho", "phi", "z"
    for fraction in CARTAN_SAMPLES:
        rho = fraction * scale
        theta = tetrad_at(bg, rho).components
        for a in range(4):
            two_form = dtheta[a].copy()
            for b in range(4):
                two_form += _wedge(omega_form[a, b], theta[b])
            for mu in range(4):
                for nu in range(mu + 1, 4):
                    key = f"a={a} {labels[mu]}^{labels[nu]} rho={rho:.6g}"
                    report.residuals[key] = float(two_form[mu, nu])

    if not report.passed:
        logger.warning(f"Cartan check failed for {len(report.failures())} coefficients")
    return report


def physical_radius(bg: BackgroundParams) -> float:
    """Light-cylinder radius 1/(omega*eta); math.inf in the static frame."""
    if bg.omega == 0:
        return math.inf
    return 1.0 / (bg.omega * bg.eta)
