"""Interval fuzzy best-worst criteria weights."""

import json
import os
from typing import Any, Optional, Sequence, Union

from . import _core
from ._core import (
    CompositionError,
    DomainError,
    SolverError,
    UndefinedIndexError,
    ValidationError,
    alpha_cut,
    approximate_quotient,
    ci_lower_bound,
    exact_quotient_membership,
    gmir,
)

Document = Union[dict, str, os.PathLike]

__all__ = [
    "CompositionError",
    "DomainError",
    "SolverError",
    "UndefinedIndexError",
    "ValidationError",
    "alpha_cut",
    "approximate_quotient",
    "ci_lower_bound",
    "ci_table",
    "consistency",
    "exact_quotient_membership",
    "gmir",
    "run_cli",
    "scale",
    "solve",
]


def _text(document: Document) -> str:
    if isinstance(document, dict):
        return json.dumps(document)
    with open(document, encoding="utf-8") as fh:
        return fh.read()


def solve(
    document: Document,
    m: Optional[int] = None,
    grid: Optional[Sequence[float]] = None,
    seed: int = 42,
    tol: float = 5e-4,
) -> dict:
    """Solve a system or hierarchy (dict or path to JSON). Same result as `alphabwm solve --format json`."""
    return json.loads(_core.solve_json(_text(document), m, list(grid) if grid is not None else None, seed, tol))


def consistency(document: Document, grid_points: int = 17, threshold: float = 0.1) -> dict:
    return json.loads(_core.consistency_json(_text(document), grid_points, threshold))


def ci_table() -> list:
    return json.loads(_core.ci_table_json())


def scale() -> list:
    return json.loads(_core.scale_json())


def run_cli(*args: Any) -> tuple:
    """Run the command-line tool in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
