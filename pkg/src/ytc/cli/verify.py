"""The verification suite: every check in a fixed order, optionally across worker processes."""

import asyncio
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence

import structlog

from ..core.base import CheckResult, VerifyBounds, VerifyReport
from ..core.config import Config, configure, get_config
from ..core.logging import setup_logging
from .checks import CHECKS

logger = structlog.get_logger()


def run_check(name: str, bounds: VerifyBounds, timings: bool = False) -> CheckResult:
    """Run the check registered under ``name``."""
    return CHECKS[name]().run(bounds, timings=timings)


def _init_worker(config: Config) -> None:
    configure(config)
    setup_logging(config.logging.level, config.logging.json_logs)


async def _run_parallel(
    names: Sequence[str], bounds: VerifyBounds, timings: bool, workers: int
) -> List[CheckResult]:
    loop = asyncio.get_running_loop()
    config = get_config()
    with ProcessPoolExecutor(
        max_workers=workers, initializer=_init_worker, initargs=(config,)
    ) as pool:
        futures = [loop.run_in_executor(pool, run_check, name, bounds, timings) for name in names]
        return list(await asyncio.gather(*futures))


def verify_suite(
    bounds: Optional[VerifyBounds] = None,
    workers: int = 1,
    timings: bool = False,
    only: Optional[Sequence[str]] = None,
) -> VerifyReport:
    """Run the checks and assemble the report in registry order.

    Args:
        bounds: Ranges to sweep
        workers: Number of worker processes; 1 runs everything in this process
        timings: Whether results carry wall times
        only: Restrict to these check names

    Returns:
        Report with one result per check

    Raises:
        KeyError: If ``only`` names an unknown check
    """
    bounds = bounds or VerifyBounds()
    names = list(CHECKS) if only is None else [CHECKS[name].name for name in only]
    logger.info("verify suite", checks=len(names), workers=workers, **bounds.model_dump())
    if workers > 1 and len(names) > 1:
        results = asyncio.run(_run_parallel(names, bounds, timings, workers))
    else:
        results = [run_check(name, bounds, timings) for name in names]
    return VerifyReport(checks=results)
