"""The ``ytc`` command line and its verification suite."""

from .main import build_parser, main, run
from .verify import run_check, verify_suite

__all__ = ["build_parser", "main", "run", "run_check", "verify_suite"]
