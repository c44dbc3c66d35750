"""
currents: spinor tables and Gordon decomposition of every configured state.
"""

import numpy as np

from commands.base import BaseCommand, CommandResult
from config import check_background, require_bound_states
from models import QuantumNumbers
from spectrum.levels import coupling_delta
from spinor.builder import build_spinor, dirac_residual
from spinor.currents import gordon_currents, gordon_identity_deviation

# Largest relative Gordon-identity gap accepted under --strict
GORDON_TOLERANCE = 1e-3


def _keyed(qn: QuantumNumbers, columns: dict) -> dict:
    size = len(columns["rho"])
    return {"n": np.full(size, qn.n), "l": np.full(size, qn.l), "s": np.full(size, qn.s), **columns}


def _stack(parts: list) -> dict:
    keys = list(parts[0]) if parts else []
    return {key: np.concatenate([part[key] for part in parts]) for key in keys}


class CurrentsCommand(BaseCommand):
    name = "currents"

    def run(self) -> CommandResult:
        cfg = self.config
        require_bound_states(cfg)
        bg = check_background(cfg)
        p = cfg.particle()
        grid = cfg.grid(coupling_delta(p, bg))

        parts = []
        spinors = []
        states = []
        for n in range(cfg.n_max + 1):
            for l in cfg.l_range():
                for s in cfg.spins():
                    qn = QuantumNumbers(n=n, l=l, s=s)
                    table = build_spinor(qn, p, bg, grid)
                    currents = gordon_currents(table, p, bg)
                    deviation = gordon_identity_deviation(table, currents, bg)
                    parts.append(_keyed(qn, currents.columns()))
                    spinors.append(_keyed(qn, table.columns()))
                    states.append({
                        "n": n, "l": l, "s": s,
                        "energy": table.energy,
                        "prefactor": table.prefactor,
                        "gordon_max_deviation": deviation,
                        "dirac_residual": dirac_residual(table, p, bg),
                    })

        self.write_table(_stack(parts))
        self.write_table(_stack(spinors), stem="spinor")
        worst = max((state["gordon_max_deviation"] for state in states), default=0.0)
        self.write_report({"states": states, "gordon_max_deviation": worst}, grid.metadata())

        self.result.summary = f"{len(states)} states, worst Gordon-identity gap {worst:.3g}"
        self.fail_if_strict(worst > GORDON_TOLERANCE, f"Gordon identity gap {worst:.3g} exceeds {GORDON_TOLERANCE:g}")
        return self.result
