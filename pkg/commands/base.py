"""
Base class for CLI commands.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional

from config import VERSION, RunConfig
from utils.artifacts import provenance, write_csv, write_json
from utils.logger import get_logger

# Exit codes
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_BAD_INPUT = 2


@dataclass
class CommandResult:
    """Outcome of one command run."""
    exit_code: int = EXIT_OK
    artifacts: List[Path] = field(default_factory=list)
    summary: str = ""


class BaseCommand(ABC):
    """Abstract base class for commands."""

    name: str = ""

    def __init__(self, config: RunConfig):
        """
        Initialize command.

        Args:
            config: Validated run configuration
        """
        self.config = config
        self.output_dir = Path(config.output_dir)
        self.logger = get_logger(f"commands.{self.name}")
        self.result = CommandResult()

    @abstractmethod
    def run(self) -> CommandResult:
        """
        Run the computation and write artifacts.

        Returns:
            CommandResult with exit code and written paths
        """
        pass

    def provenance(self, grid: Optional[Mapping[str, Any]] = None) -> Dict[str, Any]:
        return provenance(VERSION, self.name, self.config.echo(), grid)

    def write_table(self, data, stem: Optional[str] = None) -> Path:
        path = write_csv(self.output_dir / f"{stem or self.name}.csv", data)
        self.result.artifacts.append(path)
        return path

    def write_report(self, payload: Dict[str, Any], grid: Optional[Mapping[str, Any]] = None) -> Path:
        payload = dict(payload)
        payload["provenance"] = self.provenance(grid)
        path = write_json(self.output_dir / f"{self.name}.json", payload)
        self.result.artifacts.append(path)
        return path

    def fail_if_strict(self, failed: bool, reason: str) -> None:
        """Turn a diagnostic failure into exit code 1 under --strict."""
        if failed:
            self.logger.warning(reason)
            if self.config.strict:
                self.result.exit_code = EXIT_FAILED
