"""
Finite-difference eigensolver for the radial oscillator problem

    xi'' + xi'/rho - (nu^2/rho^2) xi - delta^2 rho^2 xi + beta xi = 0,   nu = |zeta|/eta

used as an independent check of the closed-form beta eigenvalues.

Two symmetric tridiagonal discretizations are available:

* ``liouville``: u = xi*sqrt(rho) gives -u'' + [(nu^2 - 1/4)/rho^2 + delta^2 rho^2] u = beta u,
  central differences on the interior nodes.
* ``regularized``: xi = rho^nu w gives -(rho^(2nu+1) w')' + delta^2 rho^(2nu+3) w = beta rho^(2nu+1) w,
  a vertex-centred finite-volume stencil on nodes 0..N with exact cell weights,
  symmetrized by v = sqrt(W) w. Second order for every nu.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional

import numpy as np
from scipy.linalg import eigvalsh_tridiagonal

from models import BackgroundParams, ParticleParams, QuantumNumbers, RadialGrid
from spectrum.levels import analytic_beta, coupling_delta, effective_angular_momentum
from utils.errors import DomainError, InputError, OracleError
from utils.logger import get_logger

logger = get_logger("oracle")

SCHEMES = ("regularized", "liouville")
DEFAULT_SCHEME = "regularized"

# delta * rho_inf**2 for the default oracle grid; high states need more room than the wavefunctions do
ORACLE_SIGMA = 100.0
ORACLE_POINTS = 8001
BRACKET_TOL = 1e-10
MAX_WORKERS = 4


@dataclass(frozen=True)
class TridiagonalOperator:
    """Symmetric tridiagonal matrix plus the nodes its unknowns live on."""
    diagonal: np.ndarray
    off_diagonal: np.ndarray
    nodes: np.ndarray
    scheme: str
    nu: float
    # sqrt of the cell weights for the regularized scheme, ones otherwise
    weight: np.ndarray

    def __post_init__(self):
        if len(self.off_diagonal) != len(self.diagonal) - 1:
            raise InputError("off_diagonal must have one entry fewer than diagonal")
        if not np.all(np.isfinite(self.diagonal)):
            raise OracleError("diagonal has non-finite entries")

    @property
    def size(self) -> int:
        return len(self.diagonal)

    def apply(self, vector: np.ndarray) -> np.ndarray:
        """Matrix-vector product."""
        out = self.diagonal * vector
        out[:-1] += self.off_diagonal * vector[1:]
        out[1:] += self.off_diagonal * vector[:-1]
        return out

    def embed(self, xi: np.ndarray) -> np.ndarray:
        """
        Map samples of xi at self.nodes to this operator's unknowns.

        The regularized unknown at rho = 0 is taken from its neighbour
        (w is even in rho).
        """
        xi = np.asarray(xi, dtype=float)
        if self.scheme == "liouville":
            return xi * np.sqrt(self.nodes)
        w = np.empty_like(xi)
        w[1:] = xi[1:] / self.nodes[1:] ** self.nu
        w[0] = w[1]
        return self.weight * w


@dataclass(frozen=True)
class EigenReport:
    """Closed-form against numerical beta for one state."""
    n: int
    l: int
    s: int
    eta: float
    delta: float
    beta_analytic: float
    beta_numeric: float
    grid_n: int
    rho_inf: float
    tolerance: float
    scheme: str = DEFAULT_SCHEME

    @property
    def rel_error(self) -> float:
        return abs(self.beta_numeric - self.beta_analytic) / max(abs(self.beta_analytic), 1e-300)

    @property
    def passed(self) -> bool:
        return self.rel_error <= self.tolerance

    def to_dict(self) -> Dict[str, float]:
        return {
            "n": self.n,
            "l": self.l,
            "s": self.s,
            "eta": self.eta,
            "delta": self.delta,
            "beta_analytic": self.beta_analytic,
            "beta_numeric": self.beta_numeric,
            "rel_error": self.rel_error,
            "grid_n": self.grid_n,
            "rho_inf": self.rho_inf,
            "scheme": self.scheme,
            "passed": self.passed,
        }


def _liouville(nu: float, delta: float, grid: RadialGrid) -> TridiagonalOperator:
    rho = grid.nodes
    h2 = grid.h ** 2
    diagonal = 2.0 / h2 + (nu * nu - 0.25) / rho ** 2 + delta ** 2 * rho ** 2
    off = np.full(grid.n_interior - 1, -1.0 / h2)
    return TridiagonalOperator(diagonal, off, rho, "liouville", nu, np.ones_like(rho))


def _log_cell_integral(power: float, lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    """log of the integral of t^power over [lo, hi] (power > -1, hi > lo >= 0)."""
    q = power + 1.0
    with np.errstate(divide="ignore"):
        ratio = np.where(lo > 0, np.exp(q * (np.log(np.where(lo > 0, lo, 1.0)) - np.log(hi))), 0.0)
    return q * np.log(hi) + np.log1p(-ratio) - np.log(q)


def _regularized(nu: float, delta: float, grid: RadialGrid) -> TridiagonalOperator:
    # unknowns on nodes 0..N in units t = rho/h; w vanishes at rho_inf
    count = grid.n_interior + 1
    t = np.arange(count, dtype=float)
    lo = np.maximum(t - 0.5, 0.0)
    hi = t + 0.5
    p = 2.0 * nu + 1.0

    log_w = _log_cell_integral(p, lo, hi)
    log_v = _log_cell_integral(p + 2.0, lo, hi)
    log_flux = p * np.log(hi)  # interface coefficient at t + 1/2

    h2 = grid.h ** 2
    right = np.exp(log_flux - log_w)
    left = np.zeros(count)
    left[1:] = np.exp(log_flux[:-1] - log_w[1:])
    diagonal = (left + right) / h2 + delta ** 2 * h2 * np.exp(log_v - log_w)
    off = -np.exp(log_flux[:-1] - 0.5 * (log_w[:-1] + log_w[1:])) / h2

    # sqrt(W) up to the common factor h^(p+1), which cancels in every quotient
    weight = np.exp(0.5 * (log_w - log_w.max()))
    return TridiagonalOperator(diagonal, off, grid.h * t, "regularized", nu, weight)


def discretize(
    zeta: float,
    delta: float,
    eta: float,
    grid: RadialGrid,
    scheme: str = DEFAULT_SCHEME,
) -> TridiagonalOperator:
    """
    Discretize the radial operator with Dirichlet conditions at rho_inf.

    Args:
        zeta: Effective angular momentum
        delta: Oscillator parameter (> 0)
        eta: Deficit parameter
        grid: Uniform radial grid
        scheme: ``regularized`` (default) or ``liouville``

    Returns:
        Symmetric tridiagonal operator whose eigenvalues approximate beta
    """
    if delta <= 0:
        raise DomainError(f"delta must be positive, got {delta}")
    if eta <= 0:
        raise DomainError(f"eta must be positive, got {eta}")
    if scheme not in SCHEMES:
        raise InputError(f"unknown scheme {scheme!r}, expected one of {SCHEMES}")
    nu = abs(zeta) / eta
    if scheme == "liouville":
        return _liouville(nu, delta, grid)
    return _regularized(nu, delta, grid)


def lowest_eigenvalues(op: TridiagonalOperator, count: int) -> np.ndarray:
    """
    The `count` smallest eigenvalues by Sturm-sequence bisection.

    Raises:
        InputError: if count exceeds the matrix size
        OracleError: if bisection returns an inconsistent spectrum
    """
    if count < 1 or count > op.size:
        raise InputError(f"count must lie in 1..{op.size}, got {count}")
    values = eigvalsh_tridiagonal(
        op.diagonal,
        op.off_diagonal,
        select="i",
        select_range=(0, count - 1),
        lapack_driver="stebz",
        tol=BRACKET_TOL,
    )
    if len(values) != count or not np.all(np.isfinite(values)):
        raise OracleError(f"bisection returned {len(values)} values for {count} requested")
    if count > 1 and not np.all(np.diff(values) > 0):
        raise OracleError("eigenvalues are not strictly increasing")
    return values


def rayleigh_quotient(op: TridiagonalOperator, vector: np.ndarray) -> float:
    """v.Av / v.v"""
    vector = np.asarray(vector, dtype=float)
    return float(vector @ op.apply(vector) / (vector @ vector))


def default_grid(delta: float, points: int = ORACLE_POINTS) -> RadialGrid:
    return RadialGrid.for_delta(delta, sigma=ORACLE_SIGMA, points=points)


def verify_spectrum(
    p: ParticleParams,
    bg: BackgroundParams,
    qn_set: Iterable[QuantumNumbers],
    tol: float = 1e-4,
    grid: Optional[RadialGrid] = None,
    scheme: str = DEFAULT_SCHEME,
) -> List[EigenReport]:
    """
    Compare numerical and closed-form beta for every state in `qn_set`.

    States sharing |zeta| share one operator; operators are solved in a
    thread pool and the reports come back sorted by (n, l, s).

    Args:
        p: Particle parameters
        bg: Background parameters (omega > 0)
        qn_set: States to check
        tol: Relative tolerance for the pass flag
        grid: Radial grid (defaults to delta * rho_inf^2 = 100, 8001 points)
        scheme: Discretization scheme

    Returns:
        One EigenReport per state
    """
    delta = coupling_delta(p, bg)
    if delta <= 0:
        raise DomainError("oracle needs delta > 0 (omega > 0)")
    grid = grid or default_grid(delta)
    states = sorted(set(qn_set), key=lambda qn: qn.sort_key)
    if not states:
        return []

    # one problem per distinct |zeta|, solved for as many levels as its largest n needs
    problems: Dict[float, int] = {}
    zetas = {}
    for qn in states:
        zeta = effective_angular_momentum(qn.l, qn.s, bg.eta)
        key = round(abs(zeta), 12)
        zetas[qn] = (zeta, key)
        problems[key] = max(problems.get(key, 0), qn.n + 1)

    def solve(key: float) -> np.ndarray:
        op = discretize(key, delta, bg.eta, grid, scheme)
        return lowest_eigenvalues(op, problems[key])

    keys = sorted(problems)
    with ThreadPoolExecutor(max_workers=MAX_WORKERS) as executor:
        solved = dict(zip(keys, executor.map(solve, keys)))

    reports = []
    for qn in states:
        zeta, key = zetas[qn]
        report = EigenReport(
            n=qn.n, l=qn.l, s=qn.s,
            eta=bg.eta,
            delta=delta,
            beta_analytic=analytic_beta(qn.n, zeta, delta, bg.eta),
            beta_numeric=float(solved[key][qn.n]),
            grid_n=grid.n_interior,
            rho_inf=grid.rho_inf,
            tolerance=tol,
            scheme=scheme,
        )
        if not report.passed:
            logger.warning(
                f"Oracle mismatch (n={qn.n}, l={qn.l}, s={qn.s}): rel error {report.rel_error:.3g} > {tol:g}"
            )
        reports.append(report)

    failed = sum(not r.passed for r in reports)
    logger.info(f"Oracle checked {len(reports)} states on {len(keys)} operators, {failed} above tolerance")
    return reports
