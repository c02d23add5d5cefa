"""
Export of experiment results: JSON for aggregates, CSV for per-path and matrix data.

Every JSON document carries ``schema_version``. Keys are sorted and non
finite floats are written as null, so identical results give identical
bytes.
"""

import json
import logging
import math
from pathlib import Path
from typing import Any, Dict, Union

import numpy as np
import pandas as pd

from cojump.experiments.types import BiasSummary, ClassificationResult, NormalizedBiasStats, SweepResult

# Configure logger
logger = logging.getLogger("cojump.experiments.export")

SCHEMA_VERSION = "1.0"

PathLike = Union[str, Path]


def _clean(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(key): _clean(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_clean(item) for item in value]
    if isinstance(value, (np.floating, float)):
        value = float(value)
        return value if math.isfinite(value) else None
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    return value


def dumps(payload: Dict[str, Any]) -> str:
    """Serialize a payload deterministically."""
    document = {"schema_version": SCHEMA_VERSION, **payload}
    return json.dumps(_clean(document), indent=2, sort_keys=True, allow_nan=False)


def write_json(payload: Dict[str, Any], destination: PathLike) -> Path:
    """Write a JSON document with the schema version."""
    destination = Path(destination)
    destination.parent.mkdir(parents=True, exist_ok=True)
    destination.write_text(dumps(payload) + "\n", encoding="utf-8")
    logger.debug(f"Wrote {destination}")
    return destination


def write_summary(summary: BiasSummary, summary_path: PathLike, records_path: PathLike) -> None:
    """Write the aggregate summary as JSON and the per-path records as CSV."""
    write_json(summary.to_dict(), summary_path)
    records_path = Path(records_path)
    records_path.parent.mkdir(parents=True, exist_ok=True)
    summary.records_frame().to_csv(records_path, index=False, float_format="%.17g")


def write_normalized_stats(stats: NormalizedBiasStats, json_path: PathLike, qq_path: PathLike) -> None:
    """Write normalized bias statistics as JSON and their quantile pairs as CSV."""
    write_json(stats.to_dict(), json_path)
    frame = pd.DataFrame({
        "level": stats.quantile_levels,
        "empirical": stats.empirical_quantiles,
        "normal": stats.normal_quantiles,
    })
    qq_path = Path(qq_path)
    qq_path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(qq_path, index=False, float_format="%.17g")


def write_sweep(result: SweepResult, matrix_path: PathLike, json_path: PathLike) -> None:
    """Write the (c, beta) matrix as CSV and its metadata as JSON."""
    matrix_path = Path(matrix_path)
    matrix_path.parent.mkdir(parents=True, exist_ok=True)
    result.to_frame().to_csv(matrix_path, float_format="%.17g")
    write_json({
        "kind": result.kind.value,
        "n_paths": result.n_paths,
        "c_values": list(result.grid.c_values),
        "beta_values": list(result.grid.beta_values),
        "matrix": result.matrix.tolist(),
        "unthresholded_bias": result.unthresholded_bias,
    }, json_path)


def write_classification(result: ClassificationResult, destination: PathLike) -> Path:
    """Write misclassification rates as JSON."""
    return write_json(result.to_dict(), destination)
