"""
Tests for bvp/schemas/_data.py.
Path: bvp/tests/schemas/test_data.py
"""
import numpy as np
import pytest
from pydantic import ValidationError

from bvp.schemas import BoundaryData
from errors import AppError, E
from process_model.tests.factories import BoundaryDataFactory, PerLeafSpecFactory


class TestBoundaryData:
    def test_exactly_one_target_kind(self):
        with pytest.raises(ValidationError):
            BoundaryData(phi0=1.0)
        with pytest.raises(ValidationError):
            BoundaryData(phi0=1.0, phi1=0.0, psi=(1.0,))

    def test_from_spec_with_per_leaf_targets(self):
        data = BoundaryData.from_spec(PerLeafSpecFactory())
        assert not data.is_uniform
        assert data.sup_target == pytest.approx(abs(-1.0 + 0.5j))

    def test_leaf_targets_broadcast_uniform_value(self, canonical_tree):
        np.testing.assert_array_equal(BoundaryDataFactory(phi1=2.0).leaf_targets(canonical_tree), [2.0, 2.0])

    def test_leaf_target_count_mismatch(self, canonical_tree):
        with pytest.raises(AppError) as exc_info:
            BoundaryDataFactory(phi1=None, psi=(1.0, 2.0, 3.0)).leaf_targets(canonical_tree)
        assert exc_info.value.code == E.BVP__TARGET_COUNT_MISMATCH
        assert exc_info.value.details == {"targets": 3, "leaves": 2}

    def test_scale(self, canonical_tree):
        # (1 + sup|b|)·(|φ₀| + sup|target|) = 3·(1 + 0.5)
        assert BoundaryDataFactory(phi1=0.5).scale(canonical_tree) == pytest.approx(4.5)

    def test_scaled_and_zero(self):
        data = BoundaryDataFactory(phi0=2.0, phi1=3.0)
        assert data.scaled(0.0, 1.0) == BoundaryData(phi0=0.0, phi1=3.0)
        assert data.scaled(0.0, 0.0).is_zero()
        assert not data.is_zero()
