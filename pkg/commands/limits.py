"""
limits: flat-space and nonrelativistic specializations of every configured state.
"""

from commands.base import BaseCommand, CommandResult
from config import check_background, require_bound_states
from models import QuantumNumbers, RadialGrid
from oracle.eigensolver import discretize, lowest_eigenvalues
from spectrum.levels import (
    analytic_beta,
    check_weak_field,
    coupling_delta,
    cyclotron_frequency,
    dirac_energy_level,
    effective_angular_momentum,
    energy_level,
    minkowski_energy_level,
    nonrelativistic_energy,
)


class LimitsCommand(BaseCommand):
    name = "limits"

    def run(self) -> CommandResult:
        cfg = self.config
        require_bound_states(cfg)
        bg = check_background(cfg)
        p = cfg.particle()
        flat = bg.with_eta(1.0)
        weak = check_weak_field(p, bg, cfg.weak_field_threshold)

        states = []
        for n in range(cfg.n_max + 1):
            for l in cfg.l_range():
                for s in cfg.spins():
                    qn = QuantumNumbers(n=n, l=l, s=s)
                    energy = energy_level(qn, p, bg)
                    energy_nr = nonrelativistic_energy(qn, p, bg)
                    flat_energy = energy_level(qn, p, flat)
                    states.append({
                        "n": n, "l": l, "s": s,
                        "energy": energy,
                        "energy_dirac": dirac_energy_level(qn, p, bg),
                        "energy_dirac_gap": dirac_energy_level(qn, p, bg) - energy,
                        "energy_nr": energy_nr,
                        "nr_remainder": energy - energy_nr,
                        "energy_eta1": flat_energy,
                        "minkowski_mismatch": flat_energy - minkowski_energy_level(qn, p, bg.omega),
                    })

        self.write_report({
            "states": states,
            "cyclotron_frequency": cyclotron_frequency(p, bg),
            "weak_field": {"ratio": weak.ratio, "threshold": weak.threshold, "passed": weak.passed},
            "physical_domain": self._walled_ground_states(p, bg),
        })

        mismatch = max(abs(state["minkowski_mismatch"]) for state in states)
        self.result.summary = f"{len(states)} states, eta=1 specialization mismatch {mismatch:.3g}"
        self.fail_if_strict(not weak.passed, "weak-field condition not satisfied")
        return self.result

    def _walled_ground_states(self, p, bg):
        """Ground beta with a Dirichlet wall at 1/(omega eta), for comparison only."""
        delta = coupling_delta(p, bg)
        grid = RadialGrid.physical(bg, self.config.grid_points - 2)
        rows = []
        for l in self.config.l_range():
            for s in self.config.spins():
                zeta = effective_angular_momentum(l, s, bg.eta)
                walled = lowest_eigenvalues(discretize(zeta, delta, bg.eta, grid), 1)[0]
                rows.append({
                    "l": l, "s": s,
                    "beta_analytic": analytic_beta(0, zeta, delta, bg.eta),
                    "beta_walled": float(walled),
                    "rho_max": grid.rho_inf,
                })
        return rows
