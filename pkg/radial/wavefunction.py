"""
Radial bound-state eigenfunctions and their normalization on a uniform grid.
"""

import math
from dataclasses import dataclass
from typing import Dict, Union

import numpy as np
from scipy.integrate import simpson

from models import BackgroundParams, ParticleParams, QuantumNumbers, RadialGrid
from radial.kummer import KummerArgs, kummer_m
from spectrum.levels import coupling_delta, effective_angular_momentum
from utils.errors import DomainError, NoBoundStateError, NotSupportedError, TruncationError
from utils.logger import get_logger

logger = get_logger("radial")

# Smallest accepted delta * rho_inf**2
MIN_GAUSSIAN_SPAN = 30.0
TAIL_WARNING = 0.5


@dataclass(frozen=True)
class WavefunctionTable:
    """Normalized samples of xi_s on the closed grid 0, h, ..., rho_inf."""
    qn: QuantumNumbers
    grid: RadialGrid
    eta: float
    rho: np.ndarray
    values: np.ndarray
    normalization: float
    log_normalization: float
    tail_mass: float
    rho_max: float

    @property
    def probability_density(self) -> np.ndarray:
        """eta * rho * |xi|^2"""
        return self.eta * self.rho * self.values ** 2

    def columns(self) -> Dict[str, np.ndarray]:
        return {"rho": self.rho, "xi": self.values, "probability_density": self.probability_density}

    def summary(self) -> Dict[str, float]:
        return {
            "n": self.qn.n,
            "l": self.qn.l,
            "s": self.qn.s,
            "normalization": self.normalization,
            "log_normalization": self.log_normalization,
            "tail_mass": self.tail_mass,
            "rho_max": self.rho_max,
        }


def _order(qn: QuantumNumbers, bg: BackgroundParams) -> float:
    """nu = |zeta_s|/eta"""
    return abs(effective_angular_momentum(qn.l, qn.s, bg.eta)) / bg.eta


def state_extent(qn: QuantumNumbers, bg: BackgroundParams) -> float:
    """Mean of delta rho^2 over |xi|^2, about 2n + nu + 1."""
    return 2 * qn.n + _order(qn, bg) + 1


def envelope_peak(nu: float) -> float:
    """log of the largest value of mu^(nu/2) exp(-mu/2), reached at mu = nu."""
    if nu == 0:
        return 0.0
    return 0.5 * nu * (math.log(nu) - 1.0)


def radial_envelope(nu: float, mu: np.ndarray, log_scale: float = 0.0) -> np.ndarray:
    """
    mu^(nu/2) exp(-mu/2 - log_scale), evaluated in log space.

    With mu = delta rho^2 this is delta^(nu/2) rho^nu exp(-delta rho^2/2), which
    overflows term by term once nu reaches a few hundred.
    """
    mu = np.asarray(mu, dtype=float)
    if nu == 0:
        return np.exp(-mu / 2 - log_scale)
    with np.errstate(divide="ignore"):
        log_mu = np.log(mu)
    return np.exp(0.5 * nu * log_mu - mu / 2 - log_scale)


def radial_eigenfunction(
    qn: QuantumNumbers,
    p: ParticleParams,
    bg: BackgroundParams,
    rho: Union[float, np.ndarray],
    log_scale: float = 0.0,
) -> Union[float, np.ndarray]:
    """
    Unnormalized radial eigenfunction.

    xi_s = delta^(nu/2) exp(-delta rho^2/2) rho^nu M(-n, nu + 1, delta rho^2),  nu = |zeta_s|/eta

    Args:
        qn: Quantum numbers (k = 0)
        p: Particle parameters
        bg: Background parameters (omega > 0)
        rho: Radius or array of radii (>= 0)
        log_scale: Values are multiplied by exp(-log_scale)
    """
    if qn.k != 0:
        raise NotSupportedError(f"bound states need k = 0, got k = {qn.k}")
    if bg.omega == 0:
        raise NoBoundStateError("no bound states without rotation (omega = 0)")
    r = np.asarray(rho, dtype=float)
    if np.any(r < 0):
        raise DomainError("rho must be >= 0")

    nu = _order(qn, bg)
    delta = coupling_delta(p, bg)
    mu = delta * r * r
    values = radial_envelope(nu, mu, log_scale) * kummer_m(KummerArgs(-qn.n, nu + 1, mu))
    if np.ndim(values) == 0:
        return float(values)
    return values


def integrate_radial(values: np.ndarray, rho: np.ndarray, eta: float) -> float:
    """Composite Simpson estimate of the integral of |f|^2 eta rho drho."""
    return float(simpson(eta * rho * np.abs(values) ** 2, x=rho))


def _tail_integral(qn, p, bg, rho, values, rho_max: float, log_scale: float) -> float:
    if rho_max >= rho[-1]:
        return 0.0
    beyond = rho > rho_max
    x = np.concatenate(([rho_max], rho[beyond]))
    y = np.concatenate(([radial_eigenfunction(qn, p, bg, rho_max, log_scale)], values[beyond]))
    if len(x) < 2:
        return 0.0
    return integrate_radial(y, x, bg.eta)


def normalize(
    qn: QuantumNumbers,
    p: ParticleParams,
    bg: BackgroundParams,
    grid: RadialGrid,
) -> WavefunctionTable:
    """
    Normalize xi_s over the conical measure eta rho drho on (0, rho_inf).

    Args:
        qn: Quantum numbers
        p: Particle parameters
        bg: Background parameters
        grid: Radial grid with delta * rho_inf**2 >= 30 and past the state extent

    Returns:
        WavefunctionTable with tail_mass = probability beyond 1/(omega eta).
        Samples are computed relative to the envelope peak, so `normalization`
        underflows to 0 for very large nu; `log_normalization` stays finite.

    Raises:
        TruncationError: if the grid ends before the Gaussian has decayed or
            before the state extent 2n + nu + 1 (in units of delta rho^2)
    """
    delta = coupling_delta(p, bg)
    span = delta * grid.rho_inf ** 2
    if span < MIN_GAUSSIAN_SPAN:
        raise TruncationError(
            f"delta * rho_inf^2 = {span:.4g} < {MIN_GAUSSIAN_SPAN:g}; extend the grid"
        )
    extent = state_extent(qn, bg)
    if extent > span:
        raise TruncationError(
            f"state (n={qn.n}, l={qn.l}, s={qn.s}) extends to delta rho^2 ~ {extent:.4g}, "
            f"past delta * rho_inf^2 = {span:.4g}; raise RHO_INF_SIGMA"
        )

    rho = grid.closed_nodes
    log_scale = envelope_peak(_order(qn, bg))
    raw = radial_eigenfunction(qn, p, bg, rho, log_scale)
    total = integrate_radial(raw, rho, bg.eta)
    constant = 1.0 / np.sqrt(total)
    log_constant = float(np.log(constant)) - log_scale

    rho_max = 1.0 / (bg.omega * bg.eta)
    tail = _tail_integral(qn, p, bg, rho, raw, rho_max, log_scale) / total
    if tail > TAIL_WARNING:
        logger.warning(
            f"State (n={qn.n}, l={qn.l}, s={qn.s}): {tail:.3f} of the probability "
            f"lies beyond rho_max = {rho_max:.4g}"
        )
    logger.debug(f"Normalized (n={qn.n}, l={qn.l}, s={qn.s}) with log C = {log_constant:.6g}")

    return WavefunctionTable(
        qn=qn,
        grid=grid,
        eta=bg.eta,
        rho=rho,
        values=raw * constant,
        normalization=math.exp(log_constant),
        log_normalization=log_constant,
        tail_mass=float(tail),
        rho_max=rho_max,
    )
