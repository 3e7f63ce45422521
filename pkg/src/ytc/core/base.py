"""Base classes for the verification suite.

Every cross-check the suite runs is a `BaseCheck` subclass. A check walks its own
range of instances, records each comparison in a `Tally`, and comes back as a
`CheckResult`. A capacity error ends that check early but never the whole suite.

Classes:
    VerifyBounds: Ranges shared by all checks
    Tally: Running pass/fail counter handed to a check
    CheckResult: Outcome of one check
    VerifyReport: Ordered results of a suite run
    BaseCheck: Abstract base class for checks

Example:
    ```python
    from ytc.core.base import BaseCheck, Tally, VerifyBounds

    class EvenCheck(BaseCheck):
        name = "even"

        def _run(self, bounds: VerifyBounds, tally: Tally) -> None:
            for n in range(bounds.max_n + 1):
                tally.record(2 * n % 2 == 0, n=n)
    ```
"""

import time
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional

import structlog
from pydantic import BaseModel, Field, computed_field

from ..exceptions import CapacityError
from .logging import LogContext

logger = structlog.get_logger()


class VerifyBounds(BaseModel):
    """Inclusive ranges for the verification suite.

    Attributes:
        max_n: Largest path length n
        max_n_t1: Largest n for t = 1, where the dual complexes grow fastest
        max_t: Largest path parameter t
        max_k: Largest squarefree power k
        max_cells: Largest number of cells of a Young diagram
    """

    max_n: int = Field(default=10, ge=1, description="Largest n")
    max_n_t1: int = Field(default=10, ge=1, description="Largest n when t = 1")
    max_t: int = Field(default=3, ge=1, description="Largest t")
    max_k: int = Field(default=3, ge=1, description="Largest k")
    max_cells: int = Field(default=10, ge=1, description="Largest diagram size")


class Tally:
    """Counts compared cases and keeps the first counterexample."""

    def __init__(self) -> None:
        self.cases = 0
        self.failures = 0
        self.first_counterexample: Optional[Dict[str, Any]] = None

    def record(self, ok: bool, **case: Any) -> bool:
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.first_counterexample is None:
                self.first_counterexample = case
        return ok


class CheckResult(BaseModel):
    """Outcome of a single check.

    Attributes:
        name: Check name
        passed: No failures and no capacity error
        cases: Number of compared instances
        failures: Number of mismatches
        first_counterexample: Parameters of the first mismatch
        capacity_error: Message of the capacity error that stopped the check
        seconds: Wall time, only filled in when timings are requested
    """

    name: str
    passed: bool
    cases: int = 0
    failures: int = 0
    first_counterexample: Optional[Dict[str, Any]] = None
    capacity_error: Optional[str] = None
    seconds: Optional[float] = None


class BaseCheck(ABC):
    """Abstract base class for a verification check.

    Subclasses set `name` and implement `_run`, which records every comparison it
    makes in the tally it is given.
    """

    name: str = ""

    def __init__(self) -> None:
        self.logger = logger.bind(check=self.name)

    @abstractmethod
    def _run(self, bounds: VerifyBounds, tally: Tally) -> None:
        """Compare every instance within ``bounds``.

        Args:
            bounds: Ranges to sweep
            tally: Recorder for the outcome of each comparison

        Raises:
            CapacityError: If an instance exceeds a configured cap
        """
        pass

    def run(self, bounds: VerifyBounds, timings: bool = False) -> CheckResult:
        """Run the check, converting a capacity error into a failed result.

        Args:
            bounds: Ranges to sweep
            timings: Whether to report wall time

        Returns:
            The check outcome
        """
        tally = Tally()
        capacity_error: Optional[str] = None
        start = time.perf_counter()
        with LogContext(self.logger, check=self.name):
            try:
                self._run(bounds, tally)
            except CapacityError as e:
                capacity_error = str(e)
                self.logger.warning("check stopped at capacity", error=capacity_error)
        elapsed = time.perf_counter() - start
        passed = tally.failures == 0 and capacity_error is None
        self.logger.info(
            "check finished",
            passed=passed,
            cases=tally.cases,
            failures=tally.failures,
            seconds=round(elapsed, 3),
        )
        return CheckResult(
            name=self.name,
            passed=passed,
            cases=tally.cases,
            failures=tally.failures,
            first_counterexample=tally.first_counterexample,
            capacity_error=capacity_error,
            seconds=round(elapsed, 3) if timings else None,
        )


class VerifyReport(BaseModel):
    """All check results in suite order."""

    checks: List[CheckResult] = Field(default_factory=list)

    @computed_field  # type: ignore[misc]
    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)
