"""
wavefunction: normalized radial tables with tail-mass diagnostics.
"""

import numpy as np

from commands.base import BaseCommand, CommandResult
from config import check_background, require_bound_states
from models import QuantumNumbers
from radial.wavefunction import normalize
from spectrum.levels import check_weak_field, coupling_delta


class WavefunctionCommand(BaseCommand):
    name = "wavefunction"

    def run(self) -> CommandResult:
        cfg = self.config
        require_bound_states(cfg)
        bg = check_background(cfg)
        p = cfg.particle()
        grid = cfg.grid(coupling_delta(p, bg))
        weak = check_weak_field(p, bg, cfg.weak_field_threshold)

        columns = {"n": [], "l": [], "s": [], "rho": [], "xi": [], "probability_density": []}
        summaries = []
        for n in range(cfg.n_max + 1):
            for l in cfg.l_range():
                for s in cfg.spins():
                    table = normalize(QuantumNumbers(n=n, l=l, s=s), p, bg, grid)
                    size = len(table.rho)
                    columns["n"].append(np.full(size, n))
                    columns["l"].append(np.full(size, l))
                    columns["s"].append(np.full(size, s))
                    for key, values in table.columns().items():
                        columns[key].append(values)
                    summaries.append(table.summary())

        self.write_table({key: np.concatenate(parts) for key, parts in columns.items()})
        self.write_report({
            "states": summaries,
            "weak_field": {"ratio": weak.ratio, "threshold": weak.threshold, "passed": weak.passed},
        }, grid.metadata())

        self.result.summary = f"{len(summaries)} normalized states on {grid.n_interior + 2} nodes"
        self.fail_if_strict(not weak.passed, "weak-field condition not satisfied")
        return self.result
