"""
Data models shared by the geometry, spectrum, radial, oracle and spinor modules.

Units are natural (hbar = c = 1). All values are immutable.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Tuple

import numpy as np

from utils.errors import DomainError, InputError

# Smallest interior node count accepted by RadialGrid
MIN_GRID_NODES = 100


class FieldFrame(Enum):
    """Frame in which field components were produced."""
    LOCAL_REST = "local_rest"    # observer's rest frame (tetrad indices)
    COORDINATE = "coordinate"    # physical components in the rotating coordinates


@dataclass(frozen=True)
class BackgroundParams:
    """Rotating frame in the cosmic string spacetime."""
    eta: float
    omega: float
    # eta > 1 is only meaningful for the disclination (anti-cone) analogy
    allow_disclination: bool = False

    def __post_init__(self):
        if not math.isfinite(self.eta) or self.eta <= 0:
            raise DomainError(f"eta must be positive, got {self.eta}")
        if self.eta > 1 and not self.allow_disclination:
            raise DomainError(
                f"eta must lie in (0, 1], got {self.eta} "
                "(set allow_disclination for eta > 1)"
            )
        if not math.isfinite(self.omega) or self.omega < 0:
            raise DomainError(f"omega must be >= 0, got {self.omega}")

    def with_eta(self, eta: float) -> "BackgroundParams":
        """Same frame with a different deficit parameter."""
        return BackgroundParams(eta=eta, omega=self.omega,
                                allow_disclination=self.allow_disclination)


@dataclass(frozen=True)
class ParticleParams:
    """Neutral particle with a permanent electric dipole moment."""
    m: float
    d: float
    e0: float

    def __post_init__(self):
        for name in ("m", "d", "e0"):
            value = getattr(self, name)
            if not math.isfinite(value) or value <= 0:
                raise DomainError(f"{name} must be positive, got {value}")

    @property
    def coupling(self) -> float:
        """Dipole energy d * E0."""
        return self.d * self.e0


@dataclass(frozen=True)
class QuantumNumbers:
    """Labels of a bound state: radial n, orbital l, spin s, wavenumber k."""
    n: int
    l: int
    s: int
    k: float = 0.0

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 0:
            raise InputError(f"n must be a non-negative integer, got {self.n}")
        if int(self.l) != self.l:
            raise InputError(f"l must be an integer, got {self.l}")
        if self.s not in (1, -1):
            raise InputError(f"s must be +1 or -1, got {self.s}")

    @property
    def j(self) -> float:
        """Eigenvalue of J_z, l + 1/2."""
        return self.l + 0.5

    @property
    def sort_key(self) -> Tuple[int, int, int]:
        return (self.n, self.l, self.s)


@dataclass(frozen=True)
class FieldTriple:
    """Electric and magnetic field 3-vectors in physical components."""
    E: Tuple[float, float, float]
    B: Tuple[float, float, float]
    frame: FieldFrame = FieldFrame.COORDINATE

    def __post_init__(self):
        if len(self.E) != 3 or len(self.B) != 3:
            raise InputError("E and B must be 3-vectors")
        object.__setattr__(self, "E", tuple(float(x) for x in self.E))
        object.__setattr__(self, "B", tuple(float(x) for x in self.B))


@dataclass(frozen=True)
class RadialGrid:
    """
    Uniform radial grid on (0, rho_inf).

    Interior nodes are rho_i = i*h for i = 1..N with h = rho_inf/(N + 1);
    the closed grid adds rho = 0 and rho = rho_inf.
    """
    rho_inf: float
    n_interior: int
    h: float = field(init=False)

    def __post_init__(self):
        if not math.isfinite(self.rho_inf) or self.rho_inf <= 0:
            raise DomainError(f"rho_inf must be positive, got {self.rho_inf}")
        if int(self.n_interior) != self.n_interior or self.n_interior < MIN_GRID_NODES:
            raise InputError(
                f"n_interior must be an integer >= {MIN_GRID_NODES}, got {self.n_interior}"
            )
        object.__setattr__(self, "h", self.rho_inf / (self.n_interior + 1))

    @classmethod
    def for_delta(cls, delta: float, sigma: float = 36.0, points: int = 8001) -> "RadialGrid":
        """
        Grid with delta * rho_inf**2 = sigma and `points` closed nodes.

        Args:
            delta: Oscillator parameter d*E0*omega*eta
            sigma: Target value of delta * rho_inf**2
            points: Number of nodes including both end points
        """
        if delta <= 0:
            raise DomainError(f"delta must be positive, got {delta}")
        return cls(rho_inf=math.sqrt(sigma / delta), n_interior=points - 2)

    @classmethod
    def physical(cls, bg: BackgroundParams, n_interior: int) -> "RadialGrid":
        """Grid ending at the light-cylinder radius 1/(omega*eta)."""
        if bg.omega <= 0:
            raise DomainError("physical grid needs omega > 0")
        return cls(rho_inf=1.0 / (bg.omega * bg.eta), n_interior=n_interior)

    @property
    def nodes(self) -> np.ndarray:
        """Interior nodes h, 2h, ..., N*h."""
        return self.h * np.arange(1, self.n_interior + 1, dtype=float)

    @property
    def closed_nodes(self) -> np.ndarray:
        """Nodes 0, h, ..., rho_inf."""
        return self.h * np.arange(0, self.n_interior + 2, dtype=float)

    def metadata(self) -> dict:
        return {"grid_n": int(self.n_interior), "rho_inf": float(self.rho_inf), "h": float(self.h)}
