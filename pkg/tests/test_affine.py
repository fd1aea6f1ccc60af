import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from bingspace import affine
from bingspace.errors import DimensionError, ValidationError


def test_identity_matrix_returns_y():
    rng = np.random.default_rng(0)
    for d in (1, 2, 5):
        x, y = rng.normal(size=(2, d))
        assert_array_equal(affine.affine_act(np.eye(d), x, y), y)


def test_diagonal_pair_is_fixed():
    rng = np.random.default_rng(1)
    for _ in range(50):
        A = affine.random_gl(rng, 3)
        x = rng.normal(size=3)
        assert_allclose(affine.affine_act(A, x, x), x, atol=1e-12)


def test_hand_computed():
    assert_array_equal(affine.affine_act(2 * np.eye(2), [1, 0], [0, 1]), [-1, 2])


def test_rejects_bad_input():
    with pytest.raises(DimensionError):
        affine.affine_act(np.eye(2), [0, 0, 0], [0, 0])
    with pytest.raises(ValidationError):
        affine.affine_act(np.zeros((2, 2)), [0, 0], [0, 0])
    with pytest.raises(ValidationError):
        affine.affine_act(np.eye(2), [np.nan, 0], [0, 0])


class TestInduced:
    def test_at_origin_is_matrix_vector(self):
        rng = np.random.default_rng(2)
        act0 = affine.induced_action_at(np.zeros(3))
        for _ in range(20):
            A, y = affine.random_gl(rng, 3), rng.normal(size=3)
            assert_allclose(act0(A, y), A @ y, atol=1e-14)

    def test_expansion(self):
        rng = np.random.default_rng(3)
        a = rng.normal(size=2)
        act = affine.induced_action_at(a)
        for _ in range(20):
            A, y = affine.random_gl(rng, 2), rng.normal(size=2)
            assert_allclose(act(A, y), a + A @ (y - a), atol=1e-12)
            assert_allclose(act(np.eye(2), y), y)

    def test_axioms(self):
        assert affine.check_induced_axioms(np.array([0.3, -0.7]), samples=500).ok


class TestReports:
    @pytest.mark.parametrize("d", [2, 3, 8])
    def test_action_axioms(self, d):
        report = affine.check_action_axioms(1000, d, seed=42, tol=1e-9)
        assert report.ok and report.checks == 2000
        assert report.max_residual <= 1e-9

    def test_zero_tolerance_negative_control(self):
        report = affine.check_action_axioms(1000, 3, seed=42, tol=0.0)
        assert not report.ok
        assert all(f["check"] == "composition" for f in report.failures)

    def test_report_json_and_determinism(self):
        a = affine.check_action_axioms(100, 2, seed=7).to_json()
        b = affine.check_action_axioms(100, 2, seed=7).to_json()
        assert a == b
        assert set(a) == {"checks", "failures", "max_residual", "seed", "tol"}

    def test_translation_equivariance(self):
        assert affine.check_translation_equivariance(np.array([0.4, -1.2]), 1000, tol=1e-9).ok
        zero = affine.check_translation_equivariance(np.zeros(3), 200, tol=1e-9)
        assert zero.ok and zero.max_residual == 0.0

    def test_singleton(self):
        report = affine.check_singleton_invariance(1000, 3, tol=1e-12)
        assert report.ok


class TestUnionDemo:
    def test_one_dimensional(self):
        out = affine.demo_union_not_invariant([0.0], [1.0])
        assert out["found"]
        assert out["witnesses"][0]["point"] == [2.0]

    def test_two_dimensional(self):
        out = affine.demo_union_not_invariant([0.0, 0.0], [1.0, 0.0])
        points = [w["point"] for w in out["witnesses"]]
        assert [2.0, 0.0] in points
        assert [0.0, 1.0] in points

    def test_always_finds_witness(self):
        rng = np.random.default_rng(5)
        for d in (1, 2, 4):
            for _ in range(20):
                x, y = rng.normal(size=(2, d))
                out = affine.demo_union_not_invariant(x, y)
                assert out["found"]
                for w in out["witnesses"]:
                    p = np.array(w["point"])
                    assert_allclose(p, affine.affine_act(w["matrix"], x, y))
                    assert min(np.abs(p - x).max(), np.abs(p - y).max()) > 1e-9

    def test_equal_points_rejected(self):
        with pytest.raises(ValidationError):
            affine.demo_union_not_invariant([1.0, 2.0], [1.0, 2.0])
