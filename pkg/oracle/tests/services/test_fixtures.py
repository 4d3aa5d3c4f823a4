"""
Tests for oracle/services/fixtures.py.
Path: oracle/tests/services/test_fixtures.py
"""
import pytest
import yaml

from errors import AppError, E
from oracle.services import (
    fixture_deviation,
    fixture_payload,
    load_fixture,
    qp_ladder,
    sample_values,
    write_fixture,
)


@pytest.fixture
def ladder(canonical_tree, canonical_data):
    return qp_ladder(canonical_tree, canonical_data, [16, 32])


class TestFixturePayload:
    def test_payload_fields(self, ladder):
        payload = fixture_payload(ladder, "abc", seed=7)
        assert payload["instance_hash"] == "abc"
        assert payload["seed"] == 7
        assert payload["meshes"] == [16, 32]
        assert payload["extrapolated_energy"] == ladder.extrapolated
        assert len(payload["samples"]) == 3 * 3

    def test_samples_survive_a_write(self, ladder, tmp_path):
        path = write_fixture(tmp_path / "fixture.yaml", fixture_payload(ladder, "abc"))
        values = sample_values(load_fixture(path))
        assert values[0] == pytest.approx(1.0)
        assert values.size == 9


class TestLoadFixture:
    def test_matching_hash(self, ladder, tmp_path):
        path = write_fixture(tmp_path / "fixture.yaml", fixture_payload(ladder, "abc"))
        payload = load_fixture(path, instance_hash="abc")
        assert payload["extrapolated_energy"] == pytest.approx(ladder.extrapolated)

    def test_mismatched_hash(self, ladder, tmp_path):
        path = write_fixture(tmp_path / "fixture.yaml", fixture_payload(ladder, "abc"))
        with pytest.raises(AppError) as exc_info:
            load_fixture(path, instance_hash="other")
        assert exc_info.value.code == E.FIXTURE__INSTANCE_MISMATCH
        assert exc_info.value.details == {"expected": "other", "found": "abc"}

    def test_missing_file(self, tmp_path):
        with pytest.raises(AppError) as exc_info:
            load_fixture(tmp_path / "absent.yaml")
        assert exc_info.value.code == E.CONFIG__FILE_NOT_FOUND

    def test_not_a_fixture(self, tmp_path):
        path = tmp_path / "other.yaml"
        path.write_text(yaml.safe_dump({"J": 1.0}), encoding="utf-8")
        with pytest.raises(AppError) as exc_info:
            load_fixture(path)
        assert exc_info.value.code == E.CONFIG__INVALID


class TestFixtureDeviation:
    def test_absolute_below_one(self):
        assert fixture_deviation({"extrapolated_energy": 0.5}, 0.5 + 1e-7) == pytest.approx(1e-7)

    def test_relative_above_one(self):
        assert fixture_deviation({"extrapolated_energy": 100.0}, 101.0) == pytest.approx(1e-2)
