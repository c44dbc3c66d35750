"""
Electromagnetic fields seen in the rotating frame and the effective dipole coupling.

E, B and the effective potential are carried in physical (orthonormal)
cylindrical components (rho, phi, z); coordinate components appear only
inside transform_field_tensor.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from geometry.frame import Tetrad, tetrad_at
from models import BackgroundParams, FieldFrame, FieldTriple, RadialGrid
from utils.errors import ContractError, DomainError, InputError
from utils.logger import get_logger

logger = get_logger("fields")

# Levi-Civita symbol on spatial indices 1..3 (stored 0..2)
LEVI_CIVITA = np.zeros((3, 3, 3))
for _i, _j, _k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
    LEVI_CIVITA[_i, _j, _k] = 1.0
    LEVI_CIVITA[_j, _i, _k] = -1.0


@dataclass(frozen=True)
class EffectivePotential:
    """Effective 4-potential (A_t, A_rho, A_phi, A_z) in physical components."""
    a_t: float
    a_rho: float
    a_phi: float
    a_z: float


@dataclass(frozen=True)
class EffectiveFieldReport:
    """Closed-form effective field and its finite-difference curl check."""
    closed_form: float
    rho: np.ndarray
    numerical: np.ndarray

    @property
    def max_deviation(self) -> float:
        return float(np.max(np.abs(self.numerical - self.closed_form)))


def field_tensor(fields: FieldTriple) -> np.ndarray:
    """F^{ab} with F^{0i} = -E^i and F^{ij} = -eps^{ijk} B_k."""
    E = np.asarray(fields.E)
    B = np.asarray(fields.B)
    F = np.zeros((4, 4))
    F[0, 1:] = -E
    F[1:, 0] = E
    F[1:, 1:] = -np.einsum("ijk,k->ij", LEVI_CIVITA, B)
    return F


def transform_field_tensor(tetrad: Tetrad, local: FieldTriple) -> np.ndarray:
    """
    Carry a rest-frame field tensor to coordinate components.

    F^{mu nu} = e^mu_a e^nu_b F^{ab}

    Raises:
        ContractError: if `local` is not tagged as a rest-frame field
    """
    if local.frame is not FieldFrame.LOCAL_REST:
        raise ContractError(
            f"transform_field_tensor expects local-rest-frame fields, got {local.frame.value}"
        )
    e_inv = tetrad.inverse
    return e_inv @ field_tensor(local) @ e_inv.T


def physical_fields(F: np.ndarray, bg: BackgroundParams, rho: float) -> FieldTriple:
    """
    Project coordinate F^{mu nu} onto the static orthonormal triad (rho, phi, z).

    Scale factors are (1, 1, eta*rho, 1) for (t, rho, phi, z).
    """
    scale = np.array([1.0, 1.0, bg.eta * rho, 1.0])
    F_hat = F * np.outer(scale, scale)
    E = -F_hat[0, 1:]
    B = -0.5 * np.einsum("ijk,ij->k", LEVI_CIVITA, F_hat[1:, 1:])
    return FieldTriple(E=tuple(E), B=tuple(B), frame=FieldFrame.COORDINATE)


def induced_fields(bg: BackgroundParams, e0: float, rho: float) -> FieldTriple:
    """
    Fields in the rotating frame for a uniform rest-frame E0 along z.

    Returns:
        E = (0, 0, E0), B = (-omega*eta*E0*rho, 0, 0)
    """
    if rho < 0:
        raise DomainError(f"rho must be >= 0, got {rho}")
    b_rho = -bg.omega * bg.eta * e0 * rho
    return FieldTriple(E=(0.0, 0.0, e0), B=(b_rho + 0.0, 0.0, 0.0), frame=FieldFrame.COORDINATE)


def induced_fields_from_tetrad(bg: BackgroundParams, e0: float, rho: float) -> FieldTriple:
    """Same fields as induced_fields, obtained through the tetrad transformation."""
    local = FieldTriple(E=(0.0, 0.0, e0), B=(0.0, 0.0, 0.0), frame=FieldFrame.LOCAL_REST)
    F = transform_field_tensor(tetrad_at(bg, rho), local)
    return physical_fields(F, bg, rho)


def effective_potential(s: int, d: float, fields: FieldTriple) -> EffectivePotential:
    """
    Effective potential of a dipole s*d along z: A_t = s d E_z, A = s d (z x B).

    Args:
        s: Spin polarization +1 or -1
        d: Dipole moment
        fields: Physical-component fields
    """
    if s not in (1, -1):
        raise InputError(f"s must be +1 or -1, got {s}")
    b_rho, b_phi, _ = fields.B
    # z x rho_hat = phi_hat, z x phi_hat = -rho_hat
    return EffectivePotential(
        a_t=s * d * fields.E[2],
        a_rho=-s * d * b_phi + 0.0,
        a_phi=s * d * b_rho + 0.0,
        a_z=0.0,
    )


def effective_magnetic_field(
    bg: BackgroundParams,
    e0: float,
    grid: Optional[RadialGrid] = None,
) -> EffectiveFieldReport:
    """
    Effective magnetic field curl(n x B) along z, without the dipole factor.

    The numerical value is the flat cylindrical curl (1/rho) d/drho (rho (n x B)_phi)
    evaluated by central differences on the grid interior.

    Args:
        bg: Background parameters
        e0: Rest-frame field strength
        grid: Radial grid (defaults to 1001 nodes on (0, 1))
    """
    closed = -2.0 * bg.omega * bg.eta * e0
    grid = grid or RadialGrid(rho_inf=1.0, n_interior=999)

    rho = grid.nodes
    a_phi = np.array([induced_fields(bg, e0, r).B[0] for r in rho])
    flux = np.gradient(rho * a_phi, grid.h)
    numerical = flux[1:-1] / rho[1:-1]

    report = EffectiveFieldReport(closed_form=closed + 0.0, rho=rho[1:-1], numerical=numerical)
    logger.debug(f"B_eff = {closed:.6g}, curl deviation {report.max_deviation:.3g}")
    return report
