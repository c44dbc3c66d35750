"""
Probability current of a bound-state spinor and its Gordon decomposition.

Local-frame parts (a = 0..3) follow from m psi = gamma^a p_a psi - V psi with
p = (E + omega j, i(d/drho + 1/(2 rho)), -j/(eta rho), 0) and
V = -i delta rho alpha^1 + d E0 Sigma^3:

    convection^a = (1/2m) g^ab [psibar p_b psi + c.c.]
    spin^a       = (1/2m) (1/rho) d/drho (rho psibar sigma^{a1} psi)
    coupling^a   = -(1/2m) psibar {gamma^a, V} psi

With M^i = (1/2m) psibar Sigma^i psi and P^i = (i/2m) psibar gamma^0 gamma^i psi
= (i/2m) psibar alpha^i psi the spin part reads spin^0 = div P,
spin^2 = -(1/rho) d(rho M^3)/drho and spin^3 = (1/rho) d(rho M^2)/drho.
Every part is carried to coordinate components with the inverse tetrad, so
J^phi picks up omega div P and -M^3/(eta rho^2).
"""

from dataclasses import dataclass
from typing import Dict

import numpy as np

from geometry.frame import tetrad_at
from models import BackgroundParams, ParticleParams
from spectrum.levels import coupling_delta
from spinor.builder import MARGIN, SpinorTable
from spinor.gamma import GAMMA
from utils.logger import get_logger

logger = get_logger("currents")

COORDINATE_LABELS = ("t", "rho", "phi", "z")


@dataclass(frozen=True)
class GordonCurrents:
    """Gordon parts in coordinate components on the margin-trimmed nodes."""
    rho: np.ndarray
    total: np.ndarray        # (N, 4)
    convection: np.ndarray   # (N, 4)
    spin: np.ndarray         # (N, 4)
    coupling: np.ndarray     # (N, 4)
    magnetization: np.ndarray  # (N, 3) physical components
    polarization: np.ndarray   # (N, 3) physical components

    def max_deviation(self, reference: np.ndarray) -> float:
        """Largest |total - reference| relative to the largest |reference|."""
        scale = max(float(np.max(np.abs(reference))), 1e-300)
        return float(np.max(np.abs(self.total - reference))) / scale

    def columns(self) -> Dict[str, np.ndarray]:
        out = {"rho": self.rho}
        for name in ("total", "convection", "spin", "coupling"):
            values = getattr(self, name)
            for c, label in enumerate(COORDINATE_LABELS):
                out[f"{name}_{label}"] = values[:, c]
        for c, label in enumerate(("rho", "phi", "z")):
            out[f"magnetization_{label}"] = self.magnetization[:, c]
            out[f"polarization_{label}"] = self.polarization[:, c]
        return out


def _bar(psi: np.ndarray) -> np.ndarray:
    """Rows of psi^dagger gamma^0."""
    return psi.conj() @ GAMMA.beta


def _sandwich(left: np.ndarray, matrix: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Per-node left . matrix . right"""
    return np.einsum("ni,ij,nj->n", left, matrix, right)


def to_coordinate(local: np.ndarray, bg: BackgroundParams, rho: np.ndarray) -> np.ndarray:
    """V^mu = e^mu_a V^a at every node."""
    inverse = np.stack([tetrad_at(bg, r).inverse for r in rho])
    return np.einsum("nma,na->nm", inverse, local)


def bilinear_current(table: SpinorTable, bg: BackgroundParams) -> np.ndarray:
    """
    psibar gamma^mu psi in coordinate components, one row per interior node.

    Returns:
        Real array of shape (N, 4)
    """
    psi = table.components
    psibar = _bar(psi)
    local = np.stack([_sandwich(psibar, g, psi) for g in GAMMA.gamma], axis=1)
    return to_coordinate(local.real, bg, table.rho)


def assemble_current(convection: np.ndarray, spin: np.ndarray, coupling: np.ndarray) -> np.ndarray:
    return convection + spin + coupling


def gordon_currents(table: SpinorTable, p: ParticleParams, bg: BackgroundParams) -> GordonCurrents:
    """
    Gordon decomposition of the bound-state current.

    Args:
        table: Spinor satisfying the Dirac equation at table.energy
        p: Particle parameters
        bg: Background parameters

    Returns:
        GordonCurrents on the nodes left after dropping the derivative margins
    """
    g = GAMMA
    m = p.m
    rho = table.rho
    psi = table.components
    dpsi = table.radial_derivative()
    psibar = _bar(psi)
    dpsibar = _bar(dpsi)
    identity = np.eye(4)
    j = table.qn.j

    scalar = _sandwich(psibar, identity, psi).real
    convection = np.zeros((len(rho), 4))
    convection[:, 0] = (table.energy + bg.omega * j) * scalar / m
    convection[:, 1] = _sandwich(psibar, identity, dpsi).imag / m
    convection[:, 2] = j * scalar / (m * bg.eta * rho)

    def density(matrix: np.ndarray) -> np.ndarray:
        return _sandwich(psibar, matrix, psi)

    def radial_flux(matrix: np.ndarray) -> np.ndarray:
        """(1/rho) d/drho (rho psibar A psi) from psi and its derivative."""
        d_density = _sandwich(dpsibar, matrix, psi) + _sandwich(psibar, matrix, dpsi)
        return density(matrix) / rho + d_density

    spin = np.zeros((len(rho), 4))
    for a in (0, 2, 3):
        spin[:, a] = (radial_flux(g.sigma_ab(a, 1)) / (2 * m)).real

    delta = coupling_delta(p, bg)
    potential = -1j * delta * rho[:, None, None] * g.alpha[0] + p.coupling * g.sigma[2]
    coupling = np.zeros((len(rho), 4))
    for a, gamma in enumerate(g.gamma):
        anti = np.einsum("ij,njk->nik", gamma, potential) + np.einsum("nij,jk->nik", potential, gamma)
        coupling[:, a] = -(np.einsum("ni,nij,nj->n", psibar, anti, psi) / (2 * m)).real

    magnetization = np.stack([density(s).real / (2 * m) for s in g.sigma], axis=1)
    polarization = np.stack([(0.5j / m) * density(a) for a in g.alpha], axis=1).real

    inner = slice(MARGIN, -MARGIN)
    rho_in = rho[inner]
    parts = {
        name: to_coordinate(values[inner], bg, rho_in)
        for name, values in (("convection", convection), ("spin", spin), ("coupling", coupling))
    }
    currents = GordonCurrents(
        rho=rho_in,
        total=assemble_current(parts["convection"], parts["spin"], parts["coupling"]),
        convection=parts["convection"],
        spin=parts["spin"],
        coupling=parts["coupling"],
        magnetization=magnetization[inner],
        polarization=polarization[inner],
    )
    logger.debug(f"Gordon parts assembled on {len(rho_in)} nodes")
    return currents


def gordon_identity_deviation(table: SpinorTable, currents: GordonCurrents, bg: BackgroundParams) -> float:
    """Relative gap between the assembled total and psibar gamma^mu psi on the same nodes."""
    reference = bilinear_current(table, bg)[MARGIN:-MARGIN]
    return currents.max_deviation(reference)
