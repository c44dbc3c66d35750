"""
verify: numerical eigenvalues against the closed-form beta for every configured state.
"""

from commands.base import EXIT_FAILED, BaseCommand, CommandResult
from config import check_background, require_bound_states
from models import QuantumNumbers
from oracle.eigensolver import default_grid, verify_spectrum
from spectrum.levels import coupling_delta


class VerifyCommand(BaseCommand):
    name = "verify"

    def run(self) -> CommandResult:
        cfg = self.config
        require_bound_states(cfg)
        bg = check_background(cfg)
        p = cfg.particle()

        states = [
            QuantumNumbers(n=n, l=l, s=s)
            for n in range(cfg.n_max + 1)
            for l in cfg.l_range()
            for s in cfg.spins()
        ]
        grid = default_grid(coupling_delta(p, bg), points=cfg.grid_points)
        reports = verify_spectrum(p, bg, states, tol=cfg.tolerance, grid=grid)

        failed = [r for r in reports if not r.passed]
        worst = max((r.rel_error for r in reports), default=0.0)
        self.write_report({
            "entries": [r.to_dict() for r in reports],
            "all_passed": not failed,
            "max_rel_error": worst,
            "tolerance": cfg.tolerance,
        }, grid.metadata())

        self.result.summary = f"{len(reports) - len(failed)}/{len(reports)} states within {cfg.tolerance:g}"
        if failed:
            self.logger.error(f"{len(failed)} states exceed the oracle tolerance")
            self.result.exit_code = EXIT_FAILED
        return self.result
