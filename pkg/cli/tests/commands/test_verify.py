"""
Tests for the `verify` command.
Path: cli/tests/commands/test_verify.py
"""
import pytest
import yaml

from cli.management import call_command
from errors import EXIT_OK, EXIT_TOLERANCE

pytestmark = [pytest.mark.cli, pytest.mark.slow]

CHECKS = {
    "residuals",
    "certificate",
    "control_balance",
    "roundtrip",
    "playback_all",
    "operator",
    "apriori",
    "superposition",
    "backends",
    "uniqueness",
}


def read_verify(out_dir):
    return yaml.safe_load((out_dir / "verify.yaml").read_text(encoding="utf-8"))


class TestVerifyCommand:
    def test_canonical_instance_passes(self, canonical_path, out_dir):
        assert call_command("verify", "--config", canonical_path, "--out", out_dir) == EXIT_OK
        result = read_verify(out_dir)
        assert result["passed"] is True
        assert result["failed"] == []
        assert set(result["checks"]) == CHECKS
        assert result["checks"]["operator"]["defect_decreasing"] is True

    def test_corrupted_coefficients_fail(self, write_config, canonical_config, out_dir):
        payload = {**canonical_config, "verify": {**canonical_config["verify"], "corrupt_c2": 0.1}}
        assert call_command("verify", "--config", write_config(payload), "--out", out_dir) == EXIT_TOLERANCE
        result = read_verify(out_dir)
        assert result["passed"] is False
        assert "certificate" in result["failed"]
        manifest = yaml.safe_load((out_dir / "manifest.yaml").read_text(encoding="utf-8"))
        assert manifest["exit_code"] == EXIT_TOLERANCE

    def test_operator_checks_skipped_above_limit(self, write_config, canonical_config, out_dir):
        payload = {**canonical_config, "verify": {**canonical_config["verify"], "operator_node_limit": 10}}
        call_command("verify", "--config", write_config(payload), "--out", out_dir)
        assert read_verify(out_dir)["checks"]["operator"]["skipped"] is True
