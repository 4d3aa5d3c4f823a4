"""Tests for the CSV/XLSX/YAML writers.
Path: utils/tests/test_export.py
"""

import numpy as np
import yaml
from openpyxl import load_workbook

from utils.export import format_cell, read_yaml, split_complex, to_plain, write_csv, write_table, write_yaml


class TestFormatCell:
    """`format_cell` renders values so that a re-read recovers them exactly."""

    def test_none_is_empty(self):
        assert format_cell(None) == ""

    def test_booleans_are_lowercase(self):
        assert format_cell(True) == "true"
        assert format_cell(np.bool_(False)) == "false"

    def test_numpy_integers(self):
        assert format_cell(np.int64(7)) == "7"

    def test_floats_round_trip(self):
        value = 0.1 + 0.2
        assert float(format_cell(value)) == value
        assert float(format_cell(np.float64(np.pi))) == np.pi

    def test_strings_pass_through(self):
        assert format_cell("leaf") == "leaf"


class TestSplitComplex:
    def test_parts(self):
        assert split_complex("y", 1 + 2j) == {"y_re": 1.0, "y_im": 2.0}

    def test_real_input(self):
        assert split_complex("u", 3.0) == {"u_re": 3.0, "u_im": 0.0}


class TestWriteCsv:
    def test_dict_rows_follow_headers(self, tmp_path):
        path = write_csv(tmp_path / "t.csv", ["a", "b"], [{"b": 2, "a": 1}, {"a": 3}])
        assert path.read_text(encoding="utf-8") == "a,b\n1,2\n3,\n"

    def test_sequence_rows(self, tmp_path):
        path = write_csv(tmp_path / "t.csv", ["a", "b"], [(1, 0.5)])
        assert path.read_text(encoding="utf-8").splitlines()[1] == "1,0.5"

    def test_creates_parent_directories(self, tmp_path):
        path = write_csv(tmp_path / "nested" / "t.csv", ["a"], [])
        assert path.is_file()

    def test_identical_input_gives_identical_bytes(self, tmp_path):
        rows = [{"a": np.float64(1 / 3)}]
        first = write_csv(tmp_path / "1.csv", ["a"], rows).read_bytes()
        second = write_csv(tmp_path / "2.csv", ["a"], rows).read_bytes()
        assert first == second


class TestWriteTable:
    def test_csv_suffix(self, tmp_path):
        assert write_table(tmp_path / "t.xlsx", ["a"], [], "csv").suffix == ".csv"

    def test_xlsx_keeps_numbers_numeric(self, tmp_path):
        path = write_table(tmp_path / "t.csv", ["edge", "y_re"], [{"edge": np.int64(2), "y_re": np.float64(0.25)}], "xlsx")
        assert path.suffix == ".xlsx"
        sheet = load_workbook(path).active
        assert [c.value for c in sheet[1]] == ["edge", "y_re"]
        assert [c.value for c in sheet[2]] == [2, 0.25]


class TestYaml:
    def test_to_plain_converts_numpy_and_complex(self):
        plain = to_plain({"z": 1 - 1j, "a": np.arange(2), "ok": np.bool_(True), 3: (np.float64(0.5),)})
        assert plain == {"z": [1.0, -1.0], "a": [0, 1], "ok": True, "3": [0.5]}

    def test_write_keeps_key_order(self, tmp_path):
        path = write_yaml(tmp_path / "r.yaml", {"passed": True, "J": 0.5, "edges": 3})
        assert list(yaml.safe_load(path.read_text(encoding="utf-8"))) == ["passed", "J", "edges"]

    def test_read_back(self, tmp_path):
        path = write_yaml(tmp_path / "r.yaml", {"y": 2j})
        assert read_yaml(path) == {"y": [0.0, 2.0]}
