"""
Closed-form bound-state algebra for the dipole in the rotating cosmic string frame.
"""

import math
from dataclasses import dataclass
from typing import Dict, Optional

from models import BackgroundParams, ParticleParams, QuantumNumbers
from utils.errors import DomainError, InputError, NoBoundStateError, NotSupportedError
from utils.logger import get_logger

logger = get_logger("spectrum")

# Default bound on dE0/(omega*eta)
WEAK_FIELD_THRESHOLD = 0.01


@dataclass(frozen=True)
class WeakFieldCheck:
    ratio: float
    threshold: float

    @property
    def passed(self) -> bool:
        return self.ratio <= self.threshold


@dataclass(frozen=True)
class SpectrumResult:
    """One bound state with its closed-form parameters."""
    qn: QuantumNumbers
    zeta: float
    delta: float
    energy: float
    beta: float
    energy_nr: float
    energy_dirac: float
    weak_field_ratio: float
    rotation_shift: float = 0.0  # omega * (l + 1/2)

    @property
    def landau_part(self) -> float:
        """Energy with the rotation shift -omega*(l + 1/2) removed."""
        return self.energy + self.rotation_shift

    def to_dict(self) -> Dict[str, float]:
        return {
            "n": self.qn.n,
            "l": self.qn.l,
            "s": self.qn.s,
            "j": self.qn.j,
            "zeta": self.zeta,
            "delta": self.delta,
            "energy": self.energy,
            "beta": self.beta,
            "energy_nr": self.energy_nr,
            "energy_dirac": self.energy_dirac,
            "weak_field_ratio": self.weak_field_ratio,
            "landau_part": self.landau_part,
        }


def _check_spin(s: int) -> None:
    if s not in (1, -1):
        raise InputError(f"s must be +1 or -1, got {s}")


def _require_bound(qn: QuantumNumbers, bg: BackgroundParams) -> None:
    if qn.k != 0:
        raise NotSupportedError(f"bound states need k = 0, got k = {qn.k}")
    if bg.omega == 0:
        raise NoBoundStateError("no bound states without rotation (omega = 0)")


def effective_angular_momentum(l: int, s: int, eta: float) -> float:
    """
    zeta_s = l + (1 - s)/2 + s(1 - eta)/2

    Args:
        l: Orbital quantum number
        s: Spin polarization +1 or -1
        eta: Deficit parameter

    Returns:
        Effective angular momentum
    """
    _check_spin(s)
    if eta <= 0:
        raise DomainError(f"eta must be positive, got {eta}")
    return l + (1 - s) / 2 + s * (1.0 - eta) / 2


def coupling_delta(p: ParticleParams, bg: BackgroundParams) -> float:
    """delta = d*E0*omega*eta"""
    return p.d * p.e0 * bg.omega * bg.eta


def _level_factor(qn: QuantumNumbers, zeta: float, eta: float) -> float:
    """n + |zeta|/(2 eta) + s zeta/(2 eta) + 1"""
    return qn.n + abs(zeta) / (2 * eta) + qn.s * zeta / (2 * eta) + 1.0


def beta_parameter(E: float, qn: QuantumNumbers, p: ParticleParams, bg: BackgroundParams) -> float:
    """
    beta_s = [E + omega(l + 1/2)]^2 - [m + s d E0]^2 - 2 s delta zeta_s/eta - 2 delta
    """
    if qn.k != 0:
        raise NotSupportedError(f"bound states need k = 0, got k = {qn.k}")
    zeta = effective_angular_momentum(qn.l, qn.s, bg.eta)
    delta = coupling_delta(p, bg)
    shifted = E + bg.omega * qn.j
    return (shifted ** 2 - (p.m + qn.s * p.coupling) ** 2
            - 2 * qn.s * delta * zeta / bg.eta - 2 * delta)


def dirac_beta_parameter(E: float, qn: QuantumNumbers, p: ParticleParams, bg: BackgroundParams) -> float:
    """
    Separation constant of the second-order equation obtained from the
    coupled first-order radial equations.

    beta_s = [E + omega(l + 1/2) - s d E0]^2 - m^2 - 2 s delta zeta_s/eta - 2 delta
    """
    if qn.k != 0:
        raise NotSupportedError(f"bound states need k = 0, got k = {qn.k}")
    zeta = effective_angular_momentum(qn.l, qn.s, bg.eta)
    delta = coupling_delta(p, bg)
    shifted = E + bg.omega * qn.j - qn.s * p.coupling
    return shifted ** 2 - p.m ** 2 - 2 * qn.s * delta * zeta / bg.eta - 2 * delta


def energy_level(qn: QuantumNumbers, p: ParticleParams, bg: BackgroundParams) -> float:
    """
    Positive-branch relativistic energy of a bound state.

    E = sqrt((m + s d E0)^2 + 4 delta (n + |zeta|/2eta + s zeta/2eta + 1)) - omega(l + 1/2)

    Raises:
        NoBoundStateError: if omega = 0
        NotSupportedError: if k != 0
    """
    _require_bound(qn, bg)
    zeta = effective_angular_momentum(qn.l, qn.s, bg.eta)
    delta = coupling_delta(p, bg)
    radicand = (p.m + qn.s * p.coupling) ** 2 + 4 * delta * _level_factor(qn, zeta, bg.eta)
    return math.sqrt(radicand) - bg.omega * qn.j


def dirac_energy_level(qn: QuantumNumbers, p: ParticleParams, bg: BackgroundParams) -> float:
    """
    Energy for which the four-spinor solves the first-order Dirac equation.

    E = s d E0 - omega(l + 1/2) + sqrt(m^2 + 4 delta (n + |zeta|/2eta + s zeta/2eta + 1))

    Agrees with energy_level to first order in d*E0.
    """
    _require_bound(qn, bg)
    zeta = effective_angular_momentum(qn.l, qn.s, bg.eta)
    delta = coupling_delta(p, bg)
    radicand = p.m ** 2 + 4 * delta * _level_factor(qn, zeta, bg.eta)
    return qn.s * p.coupling - bg.omega * qn.j + math.sqrt(radicand)


def minkowski_energy_level(qn: QuantumNumbers, p: ParticleParams, omega: float) -> float:
    """
    Flat-space (eta = 1) levels written directly with zeta_+ = l and zeta_- = l + 1.
    """
    if omega <= 0:
        raise NoBoundStateError("no bound states without rotation (omega = 0)")
    zeta = qn.l if qn.s == 1 else qn.l + 1
    factor = qn.n + (abs(zeta) + qn.s * zeta) / 2 + 1
    coupling = p.d * p.e0
    return math.sqrt((p.m + qn.s * coupling) ** 2 + 4 * coupling * omega * factor) - omega * qn.j


def analytic_beta(n: int, zeta: float, delta: float, eta: float) -> float:
    """
    Eigenvalue fixed by termination of the Kummer series.

    Args:
        n: Radial quantum number
        zeta: Effective angular momentum
        delta: Oscillator parameter (> 0)
        eta: Deficit parameter

    Returns:
        beta = 4 delta (n + |zeta|/(2 eta) + 1/2)
    """
    if int(n) != n or n < 0:
        raise InputError(f"n must be a non-negative integer, got {n}")
    if delta <= 0:
        raise DomainError(f"delta must be positive, got {delta}")
    return 4.0 * delta * (n + abs(zeta) / (2 * eta) + 0.5)


def nonrelativistic_energy(qn: QuantumNumbers, p: ParticleParams, bg: BackgroundParams) -> float:
    """First-order expansion of energy_level in d*E0/m."""
    _require_bound(qn, bg)
    zeta = effective_angular_momentum(qn.l, qn.s, bg.eta)
    delta = coupling_delta(p, bg)
    return (p.m + (2 * delta / p.m) * _level_factor(qn, zeta, bg.eta)
            + qn.s * p.coupling - bg.omega * qn.j)


def cyclotron_frequency(p: ParticleParams, bg: BackgroundParams) -> float:
    """omega_c = 2 d E0 omega eta / m"""
    return 2.0 * coupling_delta(p, bg) / p.m


def check_weak_field(
    p: ParticleParams,
    bg: BackgroundParams,
    threshold: float = WEAK_FIELD_THRESHOLD,
) -> WeakFieldCheck:
    """
    Compare dE0/(omega*eta) against `threshold`.

    Raises:
        NoBoundStateError: if omega = 0
    """
    if bg.omega == 0:
        raise NoBoundStateError("weak-field ratio is undefined for omega = 0")
    ratio = p.coupling / (bg.omega * bg.eta)
    check = WeakFieldCheck(ratio=ratio, threshold=threshold)
    if not check.passed:
        logger.warning(f"Weak-field condition violated: dE0/(omega*eta) = {ratio:.4g} > {threshold:g}")
    return check


def spectrum_result(
    qn: QuantumNumbers,
    p: ParticleParams,
    bg: BackgroundParams,
    weak_field: Optional[WeakFieldCheck] = None,
) -> SpectrumResult:
    """Evaluate every closed-form quantity of one state."""
    energy = energy_level(qn, p, bg)
    ratio = weak_field.ratio if weak_field else p.coupling / (bg.omega * bg.eta)
    return SpectrumResult(
        qn=qn,
        zeta=effective_angular_momentum(qn.l, qn.s, bg.eta),
        delta=coupling_delta(p, bg),
        energy=energy,
        beta=beta_parameter(energy, qn, p, bg),
        energy_nr=nonrelativistic_energy(qn, p, bg),
        energy_dirac=dirac_energy_level(qn, p, bg),
        weak_field_ratio=ratio,
        rotation_shift=bg.omega * qn.j,
    )
