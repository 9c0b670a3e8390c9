"""
JSON problem and report files.

Problem file::

    {"dim": 2, "t": 0.5, "weights": [0.5, 0.5],
     "matrices": [[[1, 0], [0, 1]], [[4, 0], [0, 9]]]}

``t`` may be omitted for means that do not use it.  Report files carry
``tool_version``, the echoed suite ``config``, one record per check and an
overall ``verdict``.  Floats are written with 17 significant digits so that
every value re-parses to the identical double.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .checks import CheckReport, SuiteConfig
from .errors import DimensionError, DomainError, PwmeanError
from .means import MeanProblem

__all__ = [
    "ProblemFile",
    "ProblemFormatError",
    "ReportFile",
    "dumps",
    "format_float",
    "parse_problem",
    "parse_report",
]

RENORMALIZE_TOL = 1e-9


class ProblemFormatError(PwmeanError, ValueError):
    """The file is not valid JSON or a field has the wrong type."""


def format_float(x: float) -> str:
    x = float(x)
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    return format(x, ".17g")


def _emit(obj, indent: int, level: int) -> str:
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_emit(v, indent, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(v, (int, float, np.number)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(_emit(v, indent, level + 1) for v in obj) + "]"
        items = [pad + _emit(v, indent, level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj, indent: int = 2) -> str:
    """Deterministic JSON text with round-trip exact floats."""
    return _emit(obj, indent, 0) + "\n"


def _loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemFormatError(f"invalid JSON: {exc}") from exc


def _number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ProblemFormatError(f"{where}: expected a number, got {value!r}")
    return float(value)


def _require(data: dict, key: str):
    if key not in data:
        raise ProblemFormatError(f"missing field {key!r}")
    return data[key]


@dataclass(eq=False)
class ProblemFile:
    dim: int
    weights: np.ndarray
    matrices: list[np.ndarray]
    t: float | None = None

    def to_problem(self, t: float | None = None) -> MeanProblem:
        t = self.t if t is None else t
        if t is None:
            raise DomainError("this mean needs the parameter t")
        return MeanProblem(tuple(self.matrices), self.weights, t)

    def to_dict(self) -> dict:
        d = {"dim": self.dim}
        if self.t is not None:
            d["t"] = self.t
        d["weights"] = [float(w) for w in self.weights]
        d["matrices"] = [A.tolist() for A in self.matrices]
        return d

    def dumps(self) -> str:
        return dumps(self.to_dict())

    def equals(self, other: "ProblemFile") -> bool:
        return (
            self.dim == other.dim
            and self.t == other.t
            and np.array_equal(self.weights, other.weights)
            and len(self.matrices) == len(other.matrices)
            and all(np.array_equal(a, b) for a, b in zip(self.matrices, other.matrices))
        )


def parse_problem(text: str) -> ProblemFile:
    """Parse and validate a problem file.

    Raises :class:`ProblemFormatError` for malformed content and
    :class:`DimensionError` / :class:`DomainError` (or the SPD validation
    errors) for well-formed files describing an invalid problem.
    """
    data = _loads(text)
    if not isinstance(data, dict):
        raise ProblemFormatError("top level must be a JSON object")
    dim = _require(data, "dim")
    if isinstance(dim, bool) or not isinstance(dim, int):
        raise ProblemFormatError(f"dim: expected an integer, got {dim!r}")
    if dim < 1:
        raise DimensionError(f"dim must be positive, got {dim}")
    t = data.get("t")
    if t is not None:
        t = _number(t, "t")
    raw_w = _require(data, "weights")
    if not isinstance(raw_w, list):
        raise ProblemFormatError("weights: expected an array")
    weights = np.array([_number(w, f"weights[{i}]") for i, w in enumerate(raw_w)])
    raw_m = _require(data, "matrices")
    if not isinstance(raw_m, list):
        raise ProblemFormatError("matrices: expected an array")
    matrices = []
    for j, M in enumerate(raw_m):
        if not isinstance(M, list) or not all(isinstance(row, list) for row in M):
            raise ProblemFormatError(f"matrices[{j}]: expected an array of rows")
        rows = [[_number(x, f"matrices[{j}][{r}][{c}]") for c, x in enumerate(row)]
                for r, row in enumerate(M)]
        if len(rows) != dim or any(len(row) != dim for row in rows):
            raise DimensionError(f"matrices[{j}] is not {dim}x{dim}")
        matrices.append(np.array(rows, dtype=float).reshape(dim, dim))
    if not matrices:
        raise DimensionError("matrices must be non-empty")
    if weights.size != len(matrices):
        raise DimensionError(f"{weights.size} weights for {len(matrices)} matrices")
    if np.any(weights <= 0):
        raise DomainError("weights must be positive")
    total = weights.sum()
    if abs(total - 1) > RENORMALIZE_TOL:
        raise DomainError(f"weights sum to {total!r}; expected 1")
    if abs(total - 1) > 1e-12:
        weights = weights / total
    problem = ProblemFile(dim, weights, matrices, t)
    # validates symmetry, definiteness and t
    MeanProblem(tuple(matrices), weights, 0.5 if t is None else t)
    return problem


@dataclass
class ReportFile:
    config: dict
    checks: list[CheckReport]
    verdict: str
    tool_version: str = __version__
    extra: dict = field(default_factory=dict)

    @classmethod
    def build(cls, cfg: SuiteConfig, reports: list[CheckReport], extra: dict | None = None):
        verdict = "pass" if reports and all(r.ok for r in reports) else "fail"
        return cls(cfg.to_dict(), reports, verdict, __version__, dict(extra or {}))

    def to_dict(self) -> dict:
        return {
            "tool_version": self.tool_version,
            "config": self.config,
            "extra": self.extra,
            "checks": [r.to_dict() for r in self.checks],
            "verdict": self.verdict,
        }

    def dumps(self) -> str:
        return dumps(self.to_dict())


def parse_report(text: str) -> ReportFile:
    data = _loads(text)
    try:
        return ReportFile(
            config=data["config"],
            checks=[CheckReport.from_dict(r) for r in data["checks"]],
            verdict=data["verdict"],
            tool_version=data["tool_version"],
            extra=data.get("extra", {}),
        )
    except (KeyError, TypeError) as exc:
        raise ProblemFormatError(f"malformed report: {exc}") from exc
