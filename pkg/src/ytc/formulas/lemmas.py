"""Exhaustive evaluation of the inequalities satisfied by χ_t(n, k)."""

from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import structlog
from pydantic import BaseModel, Field

from .chi import chi

logger = structlog.get_logger()

Case = Dict[str, int]


class ChiBounds(BaseModel):
    """Inclusive upper bounds for the sweep; n starts at 0, k and t at 1."""

    max_n: int = Field(default=60, ge=0)
    max_k: int = Field(default=5, ge=1)
    max_t: int = Field(default=4, ge=1)


@dataclass
class LemmaReport:
    lemma: str
    bounds: ChiBounds
    cases: int = 0
    counterexample: Optional[Case] = field(default=None)

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def _x(n: int, k: int, t: int) -> int:
    return chi(n, k, t).value


def _shift(b: ChiBounds) -> Iterator[Case]:
    for t in range(1, b.max_t + 1):
        for k in range(1, b.max_k + 1):
            for n in range(0, b.max_n + 1):
                for i in range(1, k + 1):
                    if n - i * t >= 0:
                        yield {"n": n, "k": k, "t": t, "i": i}


def _shift_holds(c: Case) -> bool:
    n, k, t, i = c["n"], c["k"], c["t"], c["i"]
    return _x(n - i * t, k + 1 - i, t) <= _x(n, k + 1, t)


def _monotone(b: ChiBounds) -> Iterator[Case]:
    for t in range(1, b.max_t + 1):
        for k in range(1, b.max_k + 1):
            for n in range(1, b.max_n + 1):
                yield {"n": n, "k": k, "t": t}


def _monotone_holds(c: Case) -> bool:
    n, k, t = c["n"], c["k"], c["t"]
    if _x(n - 1, k, t) > _x(n, k, t):
        return False
    if n > k * t:
        if _x(n - t, k, t) >= _x(n, k, t):
            return False
        if _x(n - t - 1, k, t) > _x(n, k, t) - 2:
            return False
    return True


def _power_step(b: ChiBounds) -> Iterator[Case]:
    for t in range(2, b.max_t + 1):
        for k in range(1, b.max_k + 1):
            for n in range((k + 1) * t, b.max_n + 1):
                yield {"n": n, "k": k, "t": t}


def _power_step_holds(c: Case) -> bool:
    n, k, t = c["n"], c["k"], c["t"]
    return _x(n - t - 1, k, t) <= _x(n, k + 1, t) - 1


def _split(b: ChiBounds) -> Iterator[Case]:
    for t in range(2, b.max_t + 1):
        for k in range(1, b.max_k + 1):
            for n in range(k * t, b.max_n + 1):
                for i in range(1, n - k * t + 1):
                    yield {"n": n, "k": k, "t": t, "i": i}


def _split_holds(c: Case) -> bool:
    n, k, t, i = c["n"], c["k"], c["t"], c["i"]
    return _x(n - i, k, t) + _x(i - 1, 1, t) <= _x(n, k, t)


def _split_full_range(b: ChiBounds) -> Iterator[Case]:
    for t in range(2, b.max_t + 1):
        for k in range(1, b.max_k + 1):
            for n in range(k * t, b.max_n + 1):
                for i in range(0, n + 1):
                    yield {"n": n, "k": k, "t": t, "i": i}


def _split_full_range_holds(c: Case) -> bool:
    n, k, t, i = c["n"], c["k"], c["t"], c["i"]
    tail = _x(i - 1, 1, t) if i else 0
    return _x(n - i, k, t) + tail <= _x(n, k, t)


Lemma = Tuple[Callable[[ChiBounds], Iterator[Case]], Callable[[Case], bool]]

LEMMAS: Dict[str, Lemma] = {
    "shift": (_shift, _shift_holds),
    "monotone": (_monotone, _monotone_holds),
    "power-step": (_power_step, _power_step_holds),
    "split": (_split, _split_holds),
}

# Fails at t=2, k=2, n=4, i=4; reported only on request.
FULL_RANGE_LEMMAS: Dict[str, Lemma] = {
    "split-full-range": (_split_full_range, _split_full_range_holds),
}


def chi_lemma_checks(
    bounds: Optional[ChiBounds] = None, full_range: bool = False
) -> List[LemmaReport]:
    """Evaluate every χ inequality on the whole range and report the first failure of each.

    * shift: ``χ(n - it, k + 1 - i) ≤ χ(n, k + 1)`` for ``1 ≤ i ≤ k``
    * monotone: ``χ(n - 1, k) ≤ χ(n, k)``, and for ``n > kt`` also
      ``χ(n - t, k) < χ(n, k)`` and ``χ(n - t - 1, k) ≤ χ(n, k) - 2``
    * power-step: ``χ(n - t - 1, k) ≤ χ(n, k + 1) - 1`` for ``t ≥ 2``, ``n ≥ (k + 1)t``
    * split: ``χ(n - i, k) + χ(i - 1, 1) ≤ χ(n, k)`` for ``t ≥ 2``, ``1 ≤ i ≤ n - kt``

    With ``full_range`` a fifth report, ``split-full-range``, sweeps the split inequality
    over ``0 ≤ i ≤ n`` (reading ``χ(-1, 1)`` as 0). It carries the counterexample
    ``t=2, k=2, n=4, i=4``, where the left side is 2 and the right side 1.
    """
    bounds = bounds or ChiBounds()
    reports = []
    lemmas = {**LEMMAS, **FULL_RANGE_LEMMAS} if full_range else LEMMAS
    for name, (cases, holds) in lemmas.items():
        report = LemmaReport(name, bounds)
        for case in cases(bounds):
            report.cases += 1
            if not holds(case):
                report.counterexample = case
                logger.warning("chi lemma counterexample", lemma=name, **case)
                break
        reports.append(report)
    return reports
