"""
fields: induced fields, effective potential and effective magnetic field versus rho.
"""

import math

import numpy as np

from commands.base import BaseCommand, CommandResult
from config import check_background
from geometry.fields import effective_magnetic_field, effective_potential, induced_fields
from geometry.frame import cartan_check, physical_radius
from models import RadialGrid

# Radial extent used when the frame does not rotate
STATIC_EXTENT = 1.0


class FieldsCommand(BaseCommand):
    name = "fields"

    def run(self) -> CommandResult:
        cfg = self.config
        bg = check_background(cfg)
        rho_max = physical_radius(bg)
        extent = rho_max if math.isfinite(rho_max) else STATIC_EXTENT
        grid = RadialGrid(rho_inf=extent, n_interior=cfg.grid_points - 2)

        report = effective_magnetic_field(bg, cfg.e0, grid)
        s = cfg.spins()[0]
        rows = []
        for rho, numeric in zip(report.rho, report.numerical):
            fields = induced_fields(bg, cfg.e0, rho)
            potential = effective_potential(s, cfg.dipole, fields)
            rows.append({
                "rho": rho,
                "E_z": fields.E[2],
                "B_rho": fields.B[0],
                "A_t": potential.a_t,
                "A_rho": potential.a_rho,
                "A_phi": potential.a_phi,
                "A_z": potential.a_z,
                "B_eff": report.closed_form,
                "B_eff_numeric": numeric,
            })
        self.write_table(rows)

        cartan = cartan_check(bg)
        self.write_report({
            "b_eff": report.closed_form,
            "b_eff_max_deviation": report.max_deviation,
            "cartan_passed": cartan.passed,
            "physical_radius": rho_max if math.isfinite(rho_max) else None,
            "spin": s,
        }, grid.metadata())

        self.result.summary = (
            f"B_eff = {report.closed_form:.10g}, curl deviation {report.max_deviation:.3g}, "
            f"Cartan check {'passed' if cartan.passed else 'FAILED'}"
        )
        if not cartan.passed or not np.isfinite(report.max_deviation):
            self.fail_if_strict(True, "field geometry checks failed")
        return self.result
