"""
Verification reports and the case recorder used by the suites.
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import pandas as pd

from config import settings

logger = logging.getLogger(__name__)


@dataclass
class CaseFailure:
    case: str
    inputs: Dict[str, Any]
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {"case": self.case, "inputs": self.inputs, "detail": self.detail}


@dataclass
class VerificationReport:
    """Outcome of one suite: failures empty iff the suite passed."""

    suite: str
    cases: int = 0
    failures: List[CaseFailure] = field(default_factory=list)
    max_residual: float = 0.0
    wall_time: Optional[float] = None
    case_counts: Dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "schema": settings.SCHEMA_VERSION,
            "suite": self.suite,
            "cases": self.cases,
            "passed": self.passed,
            "max_residual": self.max_residual,
            "failures": [f.to_dict() for f in self.failures],
            "case_counts": dict(sorted(self.case_counts.items())),
        }
        if include_timing and self.wall_time is not None:
            data["wall_time"] = self.wall_time
        return data


class CaseRecorder:
    """
    Collect case outcomes for a suite.

    Use as a context manager to time the run.
    """

    def __init__(self, suite: str):
        self.report = VerificationReport(suite)
        self._started = 0.0

    def __enter__(self) -> "CaseRecorder":
        self._started = time.perf_counter()
        logger.info("Running suite %s", self.report.suite)
        return self

    def __exit__(self, *exc_info: Any) -> None:
        self.report.wall_time = time.perf_counter() - self._started
        logger.info(
            "Suite %s: %d cases, %d failures", self.report.suite, self.report.cases, len(self.report.failures)
        )

    def check(self, case: str, passed: bool, inputs: Optional[Dict[str, Any]] = None, detail: str = "") -> bool:
        self.report.cases += 1
        self.report.case_counts[case] = self.report.case_counts.get(case, 0) + 1
        if not passed:
            failure = CaseFailure(case, {k: _jsonable(v) for k, v in (inputs or {}).items()}, detail)
            logger.warning("Case %s failed: %s %s", case, failure.inputs, detail)
            self.report.failures.append(failure)
        return passed

    def residual(self, case: str, value: float, tol: float, inputs: Optional[Dict[str, Any]] = None) -> bool:
        """Record a numeric case that passes when value <= tol."""
        self.report.max_residual = max(self.report.max_residual, float(value))
        return self.check(case, value <= tol, inputs, f"residual {value:.3e} > tol {tol:.1e}")


def _jsonable(value: Any) -> Any:
    if isinstance(value, (int, float, str, bool)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


def reports_frame(reports: List[VerificationReport]) -> pd.DataFrame:
    """One row per suite, for text and CSV output."""
    return pd.DataFrame(
        [
            {
                "suite": r.suite,
                "cases": r.cases,
                "failures": len(r.failures),
                "max_residual": r.max_residual,
                "passed": r.passed,
            }
            for r in reports
        ],
        columns=["suite", "cases", "failures", "max_residual", "passed"],
    )
