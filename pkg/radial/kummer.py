"""
Kummer confluent hypergeometric function M(a, b, x) by power series.
"""

from dataclasses import dataclass
from typing import Union

import numpy as np

from utils.errors import AccuracyError, DomainError, InputError, PoleError

ArrayLike = Union[float, np.ndarray]

# Series stops once every term is below this fraction of the partial sum
SERIES_RTOL = 1e-16
MAX_TERMS = 10_000


@dataclass(frozen=True)
class KummerArgs:
    """Arguments of M(a, b, x); x may be a scalar or an array of samples."""
    a: float
    b: float
    x: ArrayLike

    def __post_init__(self):
        if self.b <= 0 and float(self.b).is_integer():
            raise PoleError(f"M(a, b, x) has a pole at b = {self.b}")
        if np.any(np.asarray(self.x) < 0):
            raise DomainError("Kummer argument x must be >= 0")

    @property
    def terminates(self) -> bool:
        """True when a = -n and the series is a degree-n polynomial."""
        return self.a <= 0 and float(self.a).is_integer()

    @property
    def degree(self) -> int:
        if not self.terminates:
            raise InputError(f"series for a = {self.a} does not terminate")
        return int(-self.a)


def _polynomial(a: float, b: float, x: np.ndarray, degree: int) -> np.ndarray:
    total = np.ones_like(x)
    term = np.ones_like(x)
    for k in range(degree):
        term = term * ((a + k) / (b + k)) * x / (k + 1)
        total = total + term
    return total


def _series(a: float, b: float, x: np.ndarray) -> np.ndarray:
    total = np.ones_like(x)
    term = np.ones_like(x)
    for k in range(MAX_TERMS):
        term = term * ((a + k) / (b + k)) * x / (k + 1)
        total = total + term
        if np.all(np.abs(term) <= SERIES_RTOL * np.abs(total)):
            return total
    raise AccuracyError(f"Kummer series M({a}, {b}, x) did not converge in {MAX_TERMS} terms")


def kummer_m(args: KummerArgs, terminate: bool = True) -> ArrayLike:
    """
    Evaluate M(a, b, x) = sum_k (a)_k / (b)_k x^k / k!.

    Args:
        args: Validated arguments
        terminate: Use the exact polynomial when a = -n (otherwise the
            capped series is summed until its terms vanish)

    Returns:
        Value with the shape of args.x

    Raises:
        AccuracyError: if the series hits its iteration cap
    """
    x = np.asarray(args.x, dtype=float)
    if terminate and args.terminates:
        values = _polynomial(args.a, args.b, x, args.degree)
    else:
        values = _series(args.a, args.b, x)
    if values.ndim == 0:
        return float(values)
    return values


def kummer_derivative(a: float, b: float, x: ArrayLike) -> ArrayLike:
    """dM(a, b, x)/dx = (a/b) M(a + 1, b + 1, x)"""
    if a == 0:
        return np.zeros_like(np.asarray(x, dtype=float)) if np.ndim(x) else 0.0
    return (a / b) * kummer_m(KummerArgs(a + 1, b + 1, x))
