"""
CSV and JSON writers for command outputs.

Files carry no timestamps, so identical inputs give byte-identical artifacts.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Union

import numpy as np
import pandas as pd

from utils.logger import get_logger

logger = get_logger("artifacts")

CSV_FLOAT_FORMAT = "%.17g"


def _to_builtin(value: Any) -> Any:
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, Path):
        return str(value)
    raise TypeError(f"{type(value).__name__} is not JSON serializable")


def provenance(
    version: str,
    command: str,
    config: Mapping[str, Any],
    grid: Optional[Mapping[str, Any]] = None,
) -> Dict[str, Any]:
    """Provenance block attached to every JSON artifact."""
    block: Dict[str, Any] = {"version": version, "command": command, "config": dict(config)}
    if grid is not None:
        block.update({"grid_n": grid["grid_n"], "rho_inf": grid["rho_inf"], "h": grid["h"]})
    return block


def write_csv(
    path: Union[str, Path],
    data: Union[Mapping[str, Sequence], List[Mapping[str, Any]]],
) -> Path:
    """
    Write a table with 17 significant digits.

    Args:
        path: Output file
        data: Column mapping or list of row mappings

    Returns:
        Path written
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame = pd.DataFrame(data)
    frame.to_csv(path, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
    logger.info(f"Wrote {len(frame)} rows to {path}")
    return path


def write_json(path: Union[str, Path], payload: Mapping[str, Any]) -> Path:
    """Write sorted, indented JSON."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    text = json.dumps(payload, indent=2, sort_keys=True, default=_to_builtin)
    path.write_text(text + "\n", encoding="utf-8")
    logger.info(f"Wrote {path}")
    return path
