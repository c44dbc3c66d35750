"""
Dirac matrices in the Dirac representation.

The Clifford algebra uses {gamma^a, gamma^b} = 2 CLIFFORD_METRIC^{ab} with
CLIFFORD_METRIC = diag(+1, -1, -1, -1); the geometry module's metric
signature is the opposite one.
"""

from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

CLIFFORD_METRIC = np.diag([1.0, -1.0, -1.0, -1.0])

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
_I2 = np.eye(2, dtype=complex)
_Z2 = np.zeros((2, 2), dtype=complex)


def _block(a: np.ndarray, b: np.ndarray, c: np.ndarray, d: np.ndarray) -> np.ndarray:
    return np.block([[a, b], [c, d]])


@dataclass(frozen=True)
class GammaConstants:
    beta: np.ndarray = field(default_factory=lambda: _block(_I2, _Z2, _Z2, -_I2))
    alpha: Tuple[np.ndarray, ...] = field(
        default_factory=lambda: tuple(_block(_Z2, s, s, _Z2) for s in PAULI)
    )
    sigma: Tuple[np.ndarray, ...] = field(
        default_factory=lambda: tuple(_block(s, _Z2, _Z2, s) for s in PAULI)
    )
    gamma5: np.ndarray = field(default_factory=lambda: _block(_Z2, _I2, _I2, _Z2))
    metric: np.ndarray = field(default_factory=lambda: CLIFFORD_METRIC.copy())

    @property
    def gamma(self) -> Tuple[np.ndarray, ...]:
        """gamma^0 = beta, gamma^i = beta alpha^i"""
        return (self.beta,) + tuple(self.beta @ a for a in self.alpha)

    def sigma_ab(self, a: int, b: int) -> np.ndarray:
        """(i/2)[gamma^a, gamma^b]"""
        g = self.gamma
        return 0.5j * (g[a] @ g[b] - g[b] @ g[a])


GAMMA = GammaConstants()
