"""
Landau levels of a neutral dipole in a rotating frame around a cosmic string.

Usage:
    python main.py spectrum --config run.cfg
    python main.py verify --config run.cfg --n-max 4
    python main.py fields --eta 0.5 --omega 2 --mass 1 --dipole 0.01 --e0 1
"""

import sys
from typing import Any, Dict, Optional

import click

from commands.registry import COMMANDS, get_command
from commands.base import EXIT_BAD_INPUT, EXIT_FAILED
from config import VERSION, parse_config
from utils.errors import ConfigError, InputError, LandauError, OracleError
from utils.logger import get_logger, setup_logger

HELP = {
    "fields": "Induced fields, effective potential and B_eff versus rho.",
    "spectrum": "Relativistic level table and degeneracy report.",
    "verify": "Check closed-form eigenvalues against the finite-difference oracle.",
    "wavefunction": "Normalized radial eigenfunctions with tail-mass diagnostics.",
    "currents": "Spinors and the Gordon decomposition of their currents.",
    "limits": "Flat-space and nonrelativistic specializations.",
}

CONFIG_OPTIONS = (
    click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None,
                 help="key=value configuration file"),
    click.option("--eta", type=float, default=None, help="Deficit parameter in (0, 1]"),
    click.option("--omega", type=float, default=None, help="Angular velocity of the frame"),
    click.option("--mass", type=float, default=None, help="Rest mass"),
    click.option("--dipole", type=float, default=None, help="Electric dipole moment"),
    click.option("--e0", type=float, default=None, help="Rest-frame electric field"),
    click.option("--n-max", type=int, default=None, help="Largest radial quantum number"),
    click.option("--l-min", type=int, default=None, help="Smallest orbital quantum number"),
    click.option("--l-max", type=int, default=None, help="Largest orbital quantum number"),
    click.option("--spin", type=click.Choice(["+1", "-1", "both"]), default=None, help="Spin polarization"),
    click.option("--grid-points", type=int, default=None, help="Radial nodes including both ends"),
    click.option("--rho-inf-sigma", type=float, default=None, help="Target delta * rho_inf^2"),
    click.option("--weak-field-threshold", type=float, default=None, help="Bound on dE0/(omega eta)"),
    click.option("--tolerance", type=float, default=None, help="Oracle relative tolerance"),
    click.option("--strict/--no-strict", default=None, help="Fail on diagnostic violations"),
    click.option("--allow-disclination/--no-allow-disclination", default=None, help="Admit eta > 1"),
    click.option("--output-dir", type=click.Path(file_okay=False), default=None, help="Artifact directory"),
    click.option("--log-level", type=str, default=None, help="DEBUG, INFO, WARNING or ERROR"),
    click.option("--log-file", type=click.Path(dir_okay=False), default=None, help="Optional log file"),
)


def config_options(func):
    for option in reversed(CONFIG_OPTIONS):
        func = option(func)
    return func


def execute(name: str, config_path: Optional[str], overrides: Dict[str, Any]) -> int:
    """
    Parse configuration, run one command and map errors to exit codes.

    Returns:
        0 on success, 1 on verification failure, 2 on bad input
    """
    try:
        cfg = parse_config(config_path, overrides)
    except ConfigError as e:
        click.echo(f"Config error: {e}", err=True)
        return EXIT_BAD_INPUT

    setup_logger(level=cfg.log_level, log_file=cfg.log_file)
    logger = get_logger("main")

    try:
        result = get_command(name)(cfg).run()
    except InputError as e:
        click.echo(f"Error: {e}", err=True)
        return EXIT_BAD_INPUT
    except OracleError as e:
        logger.error(f"Oracle failure: {e}")
        return EXIT_FAILED
    except LandauError as e:
        click.echo(f"Error: {e}", err=True)
        return EXIT_BAD_INPUT

    click.echo(result.summary)
    for path in result.artifacts:
        click.echo(f"  {path}")
    return result.exit_code


@click.group()
@click.version_option(version=VERSION, prog_name="landau")
def cli():
    """Relativistic Landau levels of a neutral dipole in a rotating cosmic string frame."""


def _register(name: str) -> None:
    @cli.command(name=name, help=HELP[name])
    @config_options
    def command(config_path: Optional[str], **overrides: Any) -> None:
        sys.exit(execute(name, config_path, overrides))


for _name in COMMANDS:
    _register(_name)


if __name__ == "__main__":
    cli()
