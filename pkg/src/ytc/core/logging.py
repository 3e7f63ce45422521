"""structlog setup for ytc.

Every diagnostic goes to stderr; stdout belongs to command results. Long sweeps log
progress at DEBUG, cap hits and field discrepancies at WARNING.
"""

import logging
import sys
from typing import Any, Callable, Dict, List, MutableMapping, Optional, Tuple

import structlog

from ..__version__ import __version__

Processor = Callable[[Any, str, MutableMapping[str, Any]], Any]


def _is_face(value: Any) -> bool:
    return isinstance(value, tuple) and all(isinstance(v, int) for v in value)


def _face_text(face: Tuple[int, ...]) -> str:
    return "{" + ",".join(map(str, face)) + "}"


def _render_faces(_: Any, __: str, event_dict: MutableMapping[str, Any]) -> Any:
    """Show faces and facet lists in set notation on the console."""
    for key, value in event_dict.items():
        if _is_face(value):
            event_dict[key] = _face_text(value)
        elif isinstance(value, (list, tuple)) and value and all(_is_face(v) for v in value):
            event_dict[key] = " ".join(_face_text(v) for v in value)
    return event_dict


def _add_version(_: Any, __: str, event_dict: MutableMapping[str, Any]) -> Any:
    event_dict.setdefault("ytc", __version__)
    return event_dict


def setup_logging(log_level: str = "WARNING", json_logs: bool = False) -> None:
    """Configure structured logging for the library and the CLI.

    Args:
        log_level: stdlib level name
        json_logs: Emit one JSON object per line instead of console output
    """
    level = getattr(logging, log_level.upper())
    logging.basicConfig(format="%(message)s", stream=sys.stderr, level=level, force=True)

    processors: List[Processor] = [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.filter_by_level,
        structlog.stdlib.add_logger_name,
        structlog.stdlib.add_log_level,
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.format_exc_info,
        _add_version,
    ]
    if level <= logging.DEBUG:
        processors.append(
            structlog.processors.CallsiteParameterAdder(
                parameters=[
                    structlog.processors.CallsiteParameter.MODULE,
                    structlog.processors.CallsiteParameter.FUNC_NAME,
                ]
            )
        )

    if json_logs:
        processors.append(structlog.processors.JSONRenderer(sort_keys=True))
    else:
        processors.append(_render_faces)
        processors.append(structlog.dev.ConsoleRenderer(colors=sys.stderr.isatty()))

    structlog.configure(
        processors=processors,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=False,
    )


def get_logger(name: Optional[str] = None) -> Any:
    """Return a logger, named ``ytc`` unless told otherwise."""
    return structlog.get_logger(name or "ytc")


class LogContext:
    """Bind key-value pairs to every event logged inside the block.

    Example:
        ```python
        with LogContext(logger, check="pd-oracle"):
            logger.info("case", n=12)  # carries check="pd-oracle"
        ```
    """

    def __init__(self, logger: Any, **context: Any) -> None:
        self.logger = logger
        self.context: Dict[str, Any] = context
        self._tokens: Optional[Dict[str, Any]] = None

    def __enter__(self) -> "LogContext":
        self._tokens = structlog.contextvars.bind_contextvars(**self.context)
        return self

    def __exit__(self, exc_type: Any, exc_val: Any, exc_tb: Any) -> None:
        if self._tokens:
            structlog.contextvars.reset_contextvars(**self._tokens)
            self._tokens = None
