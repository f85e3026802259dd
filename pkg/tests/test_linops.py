import math

import numpy as np
import numpy.testing as npt
import pytest

from gramax import (
    DimensionError,
    NumericOverflowError,
    controllability_gramian,
    expm,
    gramian_H,
    lipschitz_L,
    numerical_rank,
)
from oracles import simpson_gramians, simpson_lipschitz


def test_expm_zero_is_identity():
    npt.assert_array_equal(expm(np.zeros((3, 3))), np.eye(3))


def test_expm_diagonal():
    d = np.array([-1.0, 0.5, 2.0])
    npt.assert_allclose(expm(np.diag(d)), np.diag(np.exp(d)), rtol=1e-14)


def test_expm_nilpotent_exact_series():
    N = np.array([[0.0, 2.0], [0.0, 0.0]])
    npt.assert_allclose(expm(N), np.array([[1.0, 2.0], [0.0, 1.0]]), rtol=0, atol=1e-15)


def test_expm_matches_eigendecomposition_for_symmetric():
    rng = np.random.default_rng(11)
    for n in (2, 5, 9, 14):
        S = rng.standard_normal((n, n))
        S = 0.5 * (S + S.T)
        w, V = np.linalg.eigh(S)
        ref = (V * np.exp(w)) @ V.T
        npt.assert_allclose(expm(S), ref, rtol=1e-10, atol=1e-12)


def test_expm_rejects_non_square():
    with pytest.raises(DimensionError):
        expm(np.zeros((2, 3)))


@pytest.mark.filterwarnings("ignore:overflow")
def test_expm_overflow_names_norm():
    with pytest.raises(NumericOverflowError, match="norm"):
        expm(np.array([[1e4]]))


def test_gramian_H_integrator_at_zero_dynamics():
    npt.assert_allclose(gramian_H(np.zeros((1, 1)), 10.0), [[-10.0]], rtol=1e-13)


def test_gramian_H_scalar_unstable():
    expected = -math.expm1(2.0) / 2.0
    npt.assert_allclose(gramian_H(np.array([[1.0]]), 1.0), [[expected]], rtol=1e-13)


def test_gramian_H_symmetric_negative_definite():
    rng = np.random.default_rng(4)
    for n in (2, 6, 12):
        A = rng.standard_normal((n, n)) / math.sqrt(n)
        H = gramian_H(A, 1.5)
        npt.assert_array_equal(H, H.T)
        assert np.linalg.eigvalsh(H).max() < 0


def test_gramian_H_matches_quadrature():
    rng = np.random.default_rng(21)
    A = rng.standard_normal((8, 8)) / math.sqrt(8)
    H = gramian_H(A, 2.0)
    Hq, _ = simpson_gramians(A, 2.0, panels=4000)
    rel = np.linalg.norm(H - Hq) / np.linalg.norm(Hq)
    assert rel <= 1e-8


def test_gramian_H_rejects_bad_horizon():
    with pytest.raises(ValueError):
        gramian_H(np.zeros((2, 2)), 0.0)
    with pytest.raises(ValueError):
        gramian_H(np.zeros((2, 2)), -1.0)


def test_lipschitz_is_minus_twice_trace():
    rng = np.random.default_rng(5)
    A = rng.standard_normal((6, 6)) / math.sqrt(6)
    H = gramian_H(A, 1.0)
    assert lipschitz_L(H) == -2.0 * np.trace(H)


def test_lipschitz_scalar_values():
    npt.assert_allclose(lipschitz_L(gramian_H(np.zeros((1, 1)), 10.0)), 20.0, rtol=1e-13)
    npt.assert_allclose(
        lipschitz_L(gramian_H(np.array([[1.0]]), 1.0)), math.expm1(2.0), rtol=1e-13
    )


def test_lipschitz_matches_quadrature():
    rng = np.random.default_rng(6)
    A = rng.standard_normal((5, 5)) / math.sqrt(5)
    L = lipschitz_L(gramian_H(A, 1.7))
    Lq = simpson_lipschitz(A, 1.7, panels=4000)
    npt.assert_allclose(L, Lq, rtol=1e-9)


def test_lipschitz_rejects_nonnegative_trace():
    with pytest.raises(ValueError):
        lipschitz_L(np.array([[1.0]]))


def test_controllability_gramian_zero_B():
    C = controllability_gramian(np.zeros((3, 3)), np.zeros((3, 2)), 1.0)
    npt.assert_array_equal(C, np.zeros((3, 3)))


def test_controllability_gramian_scalar():
    C = controllability_gramian(np.zeros((1, 1)), np.ones((1, 1)), 10.0)
    npt.assert_allclose(C, [[10.0]], rtol=1e-13)


def test_controllability_gramian_matches_quadrature():
    rng = np.random.default_rng(31)
    A = rng.standard_normal((6, 6)) / math.sqrt(6)
    B = rng.standard_normal((6, 2))
    C = controllability_gramian(A, B, 1.5)
    _, Cq = simpson_gramians(A, 1.5, B=B, panels=4000)
    rel = np.linalg.norm(C - Cq) / np.linalg.norm(Cq)
    assert rel <= 1e-8


def test_controllability_gramian_psd_and_trace_identity():
    rng = np.random.default_rng(32)
    for seed in range(4):
        n = int(rng.integers(2, 9))
        m = int(rng.integers(1, 4))
        A = rng.standard_normal((n, n)) / math.sqrt(n)
        B = rng.standard_normal((n, m))
        C = controllability_gramian(A, B, 1.2)
        w = np.linalg.eigvalsh(C)
        assert w.min() >= -1e-10 * max(1.0, w.max())
        H = gramian_H(A, 1.2)
        npt.assert_allclose(np.trace(C), -np.trace(B @ B.T @ H), rtol=1e-10)


def test_controllability_gramian_shape_mismatch():
    with pytest.raises(DimensionError):
        controllability_gramian(np.zeros((3, 3)), np.zeros((2, 1)), 1.0)


def test_numerical_rank_thresholding():
    M = np.diag([1.0, 1e-15, 0.0])
    assert numerical_rank(M, rel_tol=1e-9) == 1
    assert numerical_rank(np.zeros((4, 4))) == 0
    assert numerical_rank(np.eye(5)) == 5


def test_numerical_rank_rel_tol_domain():
    with pytest.raises(ValueError):
        numerical_rank(np.eye(2), rel_tol=0.0)
    with pytest.raises(ValueError):
        numerical_rank(np.eye(2), rel_tol=1.0)
