"""Tests for package imports and basic functionality."""


class TestImports:
    """Test that all major components can be imported."""

    def test_main_imports(self):
        """Test main package imports."""
        from ytc import Config, dual_homotopy, get_logger, setup_logging, young_complex

        assert Config is not None
        assert young_complex is not None
        assert dual_homotopy is not None
        assert setup_logging is not None
        assert get_logger is not None

    def test_subpackage_imports(self):
        """Test that every subpackage exposes its public names."""
        import ytc.complexes
        import ytc.decomp
        import ytc.formulas
        import ytc.homology
        import ytc.homotopy
        import ytc.pathideal
        import ytc.young

        for module in (
            ytc.complexes,
            ytc.decomp,
            ytc.formulas,
            ytc.homology,
            ytc.homotopy,
            ytc.pathideal,
            ytc.young,
        ):
            for name in module.__all__:
                assert getattr(module, name) is not None

    def test_exception_imports(self):
        """Test exception class imports."""
        from ytc import (
            CapacityError,
            DomainError,
            InternalError,
            PartitionParseError,
            PreconditionError,
            YTCError,
        )

        # Test inheritance
        assert issubclass(DomainError, YTCError)
        assert issubclass(PreconditionError, DomainError)
        assert issubclass(PartitionParseError, DomainError)
        assert issubclass(CapacityError, YTCError)
        assert issubclass(InternalError, YTCError)
        assert not issubclass(CapacityError, DomainError)

    def test_version_import(self):
        """Test version import."""
        from ytc import __version__

        assert isinstance(__version__, str)
        assert len(__version__) > 0


class TestBasicFunctionality:
    """Test basic functionality without external dependencies."""

    def test_logging_setup(self):
        """Test logging setup in both renderers."""
        from ytc import get_logger, setup_logging

        setup_logging(log_level="DEBUG", json_logs=False)
        assert get_logger("test_logger") is not None

        setup_logging(log_level="INFO", json_logs=True)
        assert get_logger("json_test") is not None

    def test_log_context(self):
        """Test that context variables are bound and released."""
        import structlog

        from ytc.core.logging import LogContext, get_logger

        with LogContext(get_logger(), check="demo"):
            assert structlog.contextvars.get_contextvars()["check"] == "demo"
        assert "check" not in structlog.contextvars.get_contextvars()

    def test_faces_rendered_in_set_notation(self, capsys):
        """Test that console logs show faces as sets."""
        from ytc.core.logging import get_logger, setup_logging

        setup_logging(log_level="WARNING")
        get_logger().warning("shedding failed", face=(1, 2), facets=[(1, 3), (2, 4)])
        err = capsys.readouterr().err
        assert "face={1,2}" in err
        assert "{1,3} {2,4}" in err
