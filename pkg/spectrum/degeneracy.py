"""
Landau level tables and the degeneracy broken by the conical geometry.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple

from models import BackgroundParams, ParticleParams, QuantumNumbers
from spectrum.levels import SpectrumResult, check_weak_field, spectrum_result
from utils.errors import InputError
from utils.logger import get_logger

logger = get_logger("spectrum")

# Absolute tolerance for coinciding closed-form energies
DEGENERACY_TOLERANCE = 1e-12


@dataclass(frozen=True)
class DegeneracyGroup:
    """States whose Landau parts coincide at eta = 1."""
    members: Tuple[Tuple[int, int, int], ...]  # (n, l, s)
    landau_part_flat: float
    splitting: float  # max - min of the Landau parts at the requested eta

    def to_dict(self) -> dict:
        return {
            "members": [list(m) for m in self.members],
            "landau_part_eta1": self.landau_part_flat,
            "splitting": self.splitting,
        }


@dataclass
class LandauTable:
    """Sorted spectrum plus the degeneracy report."""
    eta: float
    entries: List[SpectrumResult] = field(default_factory=list)
    groups: List[DegeneracyGroup] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.entries)

    def rows(self) -> List[Dict[str, float]]:
        return [entry.to_dict() for entry in self.entries]


def _group(values: Iterable[Tuple[Tuple[int, int, int], float]]) -> List[List[Tuple[Tuple[int, int, int], float]]]:
    """Chain entries sorted by value whose neighbours differ by at most the tolerance."""
    ordered = sorted(values, key=lambda item: (item[1], item[0]))
    groups: List[List[Tuple[Tuple[int, int, int], float]]] = []
    for item in ordered:
        if groups and abs(item[1] - groups[-1][-1][1]) <= DEGENERACY_TOLERANCE:
            groups[-1].append(item)
        else:
            groups.append([item])
    return [g for g in groups if len(g) > 1]


def _states(n_max: int, l_range: Sequence[int], spins: Sequence[int]) -> List[QuantumNumbers]:
    states = [QuantumNumbers(n=n, l=l, s=s) for n in range(n_max + 1) for l in l_range for s in spins]
    return sorted(states, key=lambda qn: qn.sort_key)


def landau_table(
    p: ParticleParams,
    bg: BackgroundParams,
    n_max: int,
    l_range: Sequence[int],
    both_s: bool = True,
    spin: int = 1,
) -> LandauTable:
    """
    Tabulate bound states and report the eta = 1 degeneracies.

    Groups are formed on the Landau part E + omega(l + 1/2) of the flat
    (eta = 1) table; each group's splitting is re-evaluated at bg.eta.

    Args:
        p: Particle parameters
        bg: Background parameters (omega > 0)
        n_max: Largest radial quantum number
        l_range: Orbital quantum numbers to include
        both_s: Include both spin polarizations
        spin: Polarization used when both_s is False

    Returns:
        LandauTable sorted by (n, l, s)
    """
    if int(n_max) != n_max or n_max < 0:
        raise InputError(f"n_max must be a non-negative integer, got {n_max}")
    spins = (1, -1) if both_s else (spin,)
    states = _states(n_max, list(l_range), spins)
    table = LandauTable(eta=bg.eta)
    if not states:
        return table

    weak = check_weak_field(p, bg)
    table.entries = [spectrum_result(qn, p, bg, weak) for qn in states]

    flat_bg = bg.with_eta(1.0)
    flat = [spectrum_result(qn, p, flat_bg) for qn in states]
    at_eta = {entry.qn.sort_key: entry.landau_part for entry in table.entries}

    for members in _group((entry.qn.sort_key, entry.landau_part) for entry in flat):
        keys = tuple(sorted(key for key, _ in members))
        parts = [at_eta[key] for key in keys]
        table.groups.append(DegeneracyGroup(
            members=keys,
            landau_part_flat=members[0][1],
            splitting=max(parts) - min(parts),
        ))

    logger.info(f"Landau table: {len(table)} states, {len(table.groups)} degenerate groups at eta=1")
    return table
