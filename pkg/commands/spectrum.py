"""
spectrum: level table with the degeneracy report.
"""

from commands.base import BaseCommand, CommandResult
from config import check_background, require_bound_states
from spectrum.degeneracy import landau_table
from spectrum.levels import check_weak_field


class SpectrumCommand(BaseCommand):
    name = "spectrum"

    def run(self) -> CommandResult:
        cfg = self.config
        require_bound_states(cfg)
        bg = check_background(cfg)
        p = cfg.particle()

        weak = check_weak_field(p, bg, cfg.weak_field_threshold)
        spins = cfg.spins()
        table = landau_table(p, bg, cfg.n_max, cfg.l_range(), both_s=len(spins) == 2, spin=spins[0])

        self.write_table(table.rows())
        self.write_report({
            "weak_field": {"ratio": weak.ratio, "threshold": weak.threshold, "passed": weak.passed},
            "degeneracy": [group.to_dict() for group in table.groups],
            "states": len(table),
        })

        self.result.summary = f"{len(table)} levels, {len(table.groups)} degenerate groups at eta=1"
        self.fail_if_strict(not weak.passed, "weak-field condition not satisfied")
        return self.result
