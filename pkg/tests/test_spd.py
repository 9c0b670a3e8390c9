import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from pwmean.errors import (
    DimensionError,
    DomainError,
    NotPositiveDefiniteError,
    NumericError,
    SingularTransformError,
    SymmetryError,
)
from pwmean.spd import (
    RandomSpdSpec,
    as_spd,
    as_symmetric,
    congruence,
    frobenius_norm,
    is_spd,
    loewner_compare,
    make_rng,
    mat_exp,
    mat_log,
    mat_power,
    operator_norm,
    random_orthogonal,
    random_spd,
    random_spd_from,
    sym_eig,
)

SLACK = 1e-9
A2 = np.array([[2.0, 1.0], [1.0, 2.0]])

seeds = st.integers(0, 2**32 - 1)
dims = st.integers(1, 6)


def _spd(seed, m, cond=100.0):
    return oracles.random_spd(np.random.default_rng(seed), m, cond)


# --- validation ------------------------------------------------------------


def test_symmetry_tolerance_is_relative():
    A = np.array([[1e6, 1.0], [1.0 + 1e-7, 1e6]])
    as_symmetric(A)  # 1e-7 <= 1e-12 * 1e6
    with pytest.raises(SymmetryError):
        as_symmetric(np.array([[1.0, 1.0], [1.0 + 1e-10, 1.0]]))


def test_validation_errors():
    with pytest.raises(DimensionError):
        as_spd(np.ones((2, 3)))
    with pytest.raises(NumericError):
        as_spd(np.array([[np.nan, 0], [0, 1.0]]))
    with pytest.raises(NotPositiveDefiniteError):
        as_spd(np.diag([1.0, -1.0]))
    with pytest.raises(NotPositiveDefiniteError):
        as_spd(np.diag([1.0, 1e-13]))
    assert is_spd(np.diag([1.0, 1e-11]))
    assert not is_spd(np.array([[1.0, 2.0], [0.0, 1.0]]))


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        as_spd(np.diag([1.0, 0.0]))


# --- eigendecomposition ----------------------------------------------------


def test_sym_eig_examples():
    w, Q = sym_eig(np.diag([3.0, 1.0]))
    np.testing.assert_array_equal(w, [3.0, 1.0])
    np.testing.assert_allclose(np.abs(Q), np.eye(2))
    np.testing.assert_array_equal(sym_eig(np.eye(4)).eigenvalues, np.ones(4))
    w, Q = sym_eig(A2)
    np.testing.assert_allclose(w, [3.0, 1.0], rtol=1e-15)
    s = 1 / np.sqrt(2)
    np.testing.assert_allclose(np.abs(Q), [[s, s], [s, s]], rtol=1e-14)
    np.testing.assert_allclose(Q[:, 0] * np.sign(Q[0, 0]), [s, s], rtol=1e-14)
    np.testing.assert_allclose(Q[:, 1] * np.sign(Q[0, 1]), [s, -s], rtol=1e-14)


@given(seeds, dims)
def test_sym_eig_invariants(seed, m):
    A = _spd(seed, m)
    w, Q = sym_eig(A)
    assert np.all(np.diff(w) <= 0)
    assert np.linalg.norm((Q * w) @ Q.T - A) <= 1e-10 * np.linalg.norm(A)
    assert np.linalg.norm(Q.T @ Q - np.eye(m)) <= 1e-12 * m


def test_sym_eig_rejects_nonsymmetric():
    with pytest.raises(SymmetryError):
        sym_eig(np.array([[1.0, 2.0], [0.0, 1.0]]))


# --- matrix functions ------------------------------------------------------


def test_mat_power_examples():
    np.testing.assert_allclose(mat_power(np.diag([4.0, 9.0]), 0.5), np.diag([2.0, 3.0]), rtol=1e-15)
    np.testing.assert_array_equal(mat_power(A2, 0), np.eye(2))
    np.testing.assert_allclose(mat_power(A2, -1), [[2 / 3, -1 / 3], [-1 / 3, 2 / 3]], rtol=1e-14)
    with pytest.raises(NotPositiveDefiniteError):
        mat_power(np.diag([1.0, -2.0]), 0.5)


def test_log_exp_examples():
    np.testing.assert_array_equal(mat_log(np.eye(3)), np.zeros((3, 3)))
    np.testing.assert_allclose(mat_log(np.diag([np.e, np.e**2])), np.diag([1.0, 2.0]), rtol=1e-15)
    np.testing.assert_allclose(mat_exp(mat_log(A2)), A2, rtol=1e-10)
    with pytest.raises(NumericError):
        mat_exp(np.diag([1000.0, 0.0]))


@given(seeds, dims, st.floats(-2.5, 2.5))
def test_matrix_functions_match_reference(seed, m, r):
    A = _spd(seed, m)
    assert oracles.rel(mat_power(A, r), oracles.power(A, r)) <= 1e-10
    assert oracles.rel(mat_log(A), oracles.logm(A)) <= 1e-10
    S = oracles.logm(A)
    assert oracles.rel(mat_exp(S), oracles.expm(S)) <= 1e-10


@given(seeds, dims, st.floats(0.05, 3.0) | st.floats(-3.0, -0.05))
def test_round_trips(seed, m, r):
    A = _spd(seed, m)
    assert oracles.rel(mat_exp(mat_log(A)), A) <= 1e-9
    assert oracles.rel(mat_power(mat_power(A, r), 1 / r), A) <= 1e-9


# --- congruence and Loewner order ------------------------------------------


def test_congruence_examples():
    A = _spd(1, 3)
    np.testing.assert_array_equal(congruence(np.eye(3), A), A)
    np.testing.assert_array_equal(congruence(2 * np.eye(2), np.eye(2)), 4 * np.eye(2))
    np.testing.assert_array_equal(
        congruence(np.array([[1.0, 1.0], [0.0, 1.0]]), np.eye(2)), [[2.0, 1.0], [1.0, 1.0]]
    )
    with pytest.raises(SingularTransformError):
        congruence(np.array([[1.0, 1.0], [1.0, 1.0]]), np.eye(2))
    with pytest.raises(DimensionError):
        congruence(np.eye(3), np.eye(2))


def test_loewner_examples():
    v = loewner_compare(np.diag([1.0, 2.0]), np.diag([2.0, 3.0]))
    assert v.leq and not v.geq and v.margin == pytest.approx(1.0)
    A = _spd(2, 3)
    v = loewner_compare(A, A)
    assert v.leq and v.geq and v.margin == 0.0
    v = loewner_compare(np.diag([1.0, 3.0]), np.diag([2.0, 2.0]))
    assert v.incomparable
    assert v.margin == pytest.approx(-1.0) and v.reverse_margin == pytest.approx(-1.0)


def test_loewner_slack_is_scaled():
    A = np.diag([1.0, 0.0])
    B = np.diag([1.0 - 1e-10, 0.0])
    assert not loewner_compare(A, B).leq
    assert loewner_compare(A, B, slack=1e-9).leq
    with pytest.raises(DomainError):
        loewner_compare(A, B, slack=-1.0)


def test_norm_examples():
    assert operator_norm(np.diag([3.0, 1.0])) == pytest.approx(3.0)
    assert frobenius_norm(np.eye(3)) == pytest.approx(np.sqrt(3))
    assert operator_norm(A2) == pytest.approx(3.0)


def _contraction(seed, m, inverse):
    rng = np.random.default_rng(seed)
    X = rng.standard_normal((m, m)) + 0.5 * np.eye(m)
    s = np.linalg.svd(X, compute_uv=False)
    # scale so that ||X|| <= 1, or ||X^{-1}|| <= 1
    return X / s[0] if not inverse else X / s[-1]


@given(seeds, st.integers(1, 5), st.floats(0.0, 1.0))
def test_jensen_contraction(seed, m, r):
    # (X^T A X)^r >= X^T A^r X for ||X|| <= 1
    A = _spd(seed, m)
    X = _contraction(seed + 1, m, inverse=False)
    lhs = mat_power(X.T @ A @ X, r)
    rhs = X.T @ mat_power(A, r) @ X
    assert loewner_compare(lhs, rhs, slack=SLACK).geq


@given(seeds, st.integers(1, 5), st.floats(0.0, 1.0))
def test_jensen_inverse_contraction(seed, m, r):
    # (X^T A X)^r <= X^T A^r X for ||X^{-1}|| <= 1
    A = _spd(seed, m)
    X = _contraction(seed + 1, m, inverse=True)
    lhs = mat_power(X.T @ A @ X, r)
    rhs = X.T @ mat_power(A, r) @ X
    assert loewner_compare(lhs, rhs, slack=SLACK).leq


@given(seeds, st.integers(1, 5), st.floats(0.0, 1.0))
def test_power_is_operator_monotone(seed, m, r):
    rng = np.random.default_rng(seed)
    A = oracles.random_spd(rng, m)
    B = A + oracles.random_spd(rng, m, 10.0) * rng.uniform(0.0, 1.0)
    assert loewner_compare(mat_power(A, r), mat_power(B, r), slack=SLACK).leq


# --- random instances ------------------------------------------------------


def test_random_spd_examples():
    for seed in range(5):
        a = random_spd(RandomSpdSpec(1, 100.0, seed))
        assert a.shape == (1, 1) and 1.0 <= a[0, 0] <= 100.0
    spec = RandomSpdSpec(4, 100.0, 7)
    np.testing.assert_array_equal(random_spd(spec), random_spd(spec))
    assert 1.0 <= np.linalg.cond(random_spd(spec)) <= 105.0


def test_random_spd_spec_validation():
    with pytest.raises(DomainError):
        RandomSpdSpec(0)
    with pytest.raises(DomainError):
        RandomSpdSpec(2, 0.5)
    with pytest.raises(DomainError):
        RandomSpdSpec(2, 10.0, -1)


@given(seeds, dims, st.floats(1.0, 1e4))
def test_random_spd_condition_bound(seed, m, bound):
    A = random_spd_from(make_rng(seed), m, bound)
    assert is_spd(A)
    w = np.linalg.eigvalsh(A)
    assert w[0] >= 1 - 1e-9 and w[-1] <= bound * (1 + 1e-9)


def test_make_rng_streams():
    a = make_rng(42, "det", 3).standard_normal(4)
    np.testing.assert_array_equal(a, make_rng(42, "det", 3).standard_normal(4))
    assert not np.array_equal(a, make_rng(42, "det", 4).standard_normal(4))
    assert not np.array_equal(a, make_rng(42, "norm", 3).standard_normal(4))
    assert isinstance(make_rng(0).bit_generator, np.random.Philox)
    with pytest.raises(DomainError):
        make_rng(1, -3)


def test_random_orthogonal():
    Q = random_orthogonal(make_rng(5), 6)
    np.testing.assert_allclose(Q.T @ Q, np.eye(6), atol=1e-14)
