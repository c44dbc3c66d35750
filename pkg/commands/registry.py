"""
Registry of CLI commands by name.
"""

from typing import Dict, Type

from commands.base import BaseCommand
from commands.currents import CurrentsCommand
from commands.fields import FieldsCommand
from commands.limits import LimitsCommand
from commands.spectrum import SpectrumCommand
from commands.verify import VerifyCommand
from commands.wavefunction import WavefunctionCommand

COMMANDS: Dict[str, Type[BaseCommand]] = {
    cls.name: cls
    for cls in (FieldsCommand, SpectrumCommand, VerifyCommand, WavefunctionCommand, CurrentsCommand, LimitsCommand)
}


def get_command(name: str) -> Type[BaseCommand]:
    """Look up a command class by its CLI name."""
    try:
        return COMMANDS[name]
    except KeyError:
        raise ValueError(f"unknown command {name!r}; expected one of {sorted(COMMANDS)}") from None
