"""
Tests for config logger module.
Path: config/tests/test_logger.py
"""

from unittest.mock import MagicMock, patch

from config.logger import InterceptHandler, add_run_log, logger, run_id_ctx, setup_library_logging


class TestInterceptHandler:
    """Test the InterceptHandler class."""

    def test_intercept_handler_emit_success(self):
        """Known level names are forwarded by name."""
        handler = InterceptHandler()

        record = MagicMock()
        record.levelname = "INFO"
        record.levelno = 20
        record.exc_info = None
        record.getMessage.return_value = "Test message"

        with patch("config.logger.logger") as mock_logger:
            mock_level = MagicMock()
            mock_level.name = "INFO"
            mock_logger.level.return_value = mock_level

            handler.emit(record)

            mock_logger.level.assert_called_once_with("INFO")
            mock_logger.opt.assert_called_once_with(depth=6, exception=None)
            mock_logger.opt.return_value.log.assert_called_once_with("INFO", "Test message")

    def test_intercept_handler_emit_value_error(self):
        """Unknown level names fall back to the numeric level."""
        handler = InterceptHandler()

        record = MagicMock()
        record.levelname = "INVALID_LEVEL"
        record.levelno = 25
        record.exc_info = None
        record.getMessage.return_value = "Test message"

        with patch("config.logger.logger") as mock_logger:
            mock_logger.level.side_effect = ValueError("Invalid level")

            handler.emit(record)

            mock_logger.opt.return_value.log.assert_called_once_with(25, "Test message")


class TestSetupLibraryLogging:
    """Test the setup_library_logging function."""

    @patch("config.logger.logging")
    def test_setup_library_logging(self, mock_logging):
        mock_logging.root.handlers = []
        mock_logging.basicConfig = MagicMock()
        mock_logger_instance = MagicMock()
        mock_logging.getLogger = MagicMock(return_value=mock_logger_instance)

        setup_library_logging()

        call_args = mock_logging.basicConfig.call_args
        assert call_args[1]["level"] == 0
        assert isinstance(call_args[1]["handlers"][0], InterceptHandler)
        mock_logging.captureWarnings.assert_called_once_with(True)
        requested = [c.args[0] for c in mock_logging.getLogger.call_args_list]
        assert {"py.warnings", "scipy", "numpy"} <= set(requested)
        assert mock_logger_instance.propagate is False


class TestRunLog:
    def test_run_log_carries_run_id(self, tmp_path):
        token = run_id_ctx.set("abc123")
        sink = add_run_log(tmp_path)
        try:
            logger.bind(edges=3).info("tree.built")
        finally:
            logger.remove(sink)
            run_id_ctx.reset(token)

        text = (tmp_path / "run.log").read_text(encoding="utf-8")
        assert "tree.built" in text
        assert "run_id=abc123" in text
        assert "'edges': 3" in text

    def test_default_run_id(self, tmp_path):
        sink = add_run_log(tmp_path)
        try:
            logger.info("outside.command")
        finally:
            logger.remove(sink)
        assert "run_id=-" in (tmp_path / "run.log").read_text(encoding="utf-8")
