"""
Dense symmetric linear algebra on the cone of positive definite matrices.

Matrices are plain ``numpy.ndarray`` objects of dtype float64.  Every
eigendecomposition is preceded by symmetrization ``(A + A.T) / 2`` so that
round-off drift never leaks into the spectrum.

Random instances are drawn from numpy's counter-based Philox generator keyed
by a :class:`numpy.random.SeedSequence`; see :func:`make_rng`.
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (
    DimensionError,
    DomainError,
    NotPositiveDefiniteError,
    NumericError,
    SingularTransformError,
    SymmetryError,
)

SYMMETRY_TOL = 1e-12
PD_THRESHOLD = 1e-12
MAX_TRANSFORM_COND = 1e12

__all__ = [
    "EigenDecomposition",
    "LoewnerVerdict",
    "RandomSpdSpec",
    "as_spd",
    "as_symmetric",
    "congruence",
    "frobenius_norm",
    "is_spd",
    "loewner_compare",
    "make_rng",
    "mat_exp",
    "mat_log",
    "mat_power",
    "operator_norm",
    "random_orthogonal",
    "random_spd",
    "random_spd_from",
    "sym_eig",
]


class EigenDecomposition(NamedTuple):
    """Eigenvalues in decreasing order and matching orthonormal columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _square(A, name: str = "A") -> np.ndarray:
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionError(f"{name} must be a square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise NumericError(f"{name} has non-finite entries")
    return A


def as_symmetric(A, name: str = "A") -> np.ndarray:
    """Validate that `A` is symmetric and return its symmetrized copy.

    Raises
    ------
    SymmetryError
        If ``|A[i, j] - A[j, i]| > 1e-12 * max(1, max|A|)`` for some pair.
    """
    A = _square(A, name)
    scale = max(1.0, float(np.max(np.abs(A)))) if A.size else 1.0
    if A.size and np.max(np.abs(A - A.T)) > SYMMETRY_TOL * scale:
        raise SymmetryError(f"{name} is not symmetric")
    return (A + A.T) / 2


def _sym(A: np.ndarray) -> np.ndarray:
    return (A + A.T) / 2


def _eigh(A: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # ascending order, no validation
    try:
        return np.linalg.eigh(_sym(A))
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise NumericError(f"eigensolver did not converge: {exc}") from exc


def _spd_eigh(A: np.ndarray, name: str = "A") -> tuple[np.ndarray, np.ndarray]:
    w, Q = _eigh(A)
    if not (w[-1] > 0 and w[0] > PD_THRESHOLD * w[-1]):
        raise NotPositiveDefiniteError(
            f"{name} is not positive definite (eigenvalue range [{w[0]:.3g}, {w[-1]:.3g}])"
        )
    return w, Q


def _from_eig(w: np.ndarray, Q: np.ndarray) -> np.ndarray:
    return _sym((Q * w) @ Q.T)


def is_spd(A) -> bool:
    """Return True when `A` is symmetric and passes the definiteness threshold."""
    try:
        as_spd(A)
    except (SymmetryError, NotPositiveDefiniteError, DimensionError, NumericError):
        return False
    return True


def as_spd(A, name: str = "A") -> np.ndarray:
    """Validate `A` as a symmetric positive definite matrix.

    Positive definiteness means ``lambda_min > 1e-12 * lambda_max``.
    """
    A = as_symmetric(A, name)
    _spd_eigh(A, name)
    return A


def sym_eig(A) -> EigenDecomposition:
    """Eigendecomposition of a symmetric matrix, eigenvalues decreasing."""
    w, Q = _eigh(as_symmetric(A))
    return EigenDecomposition(w[::-1].copy(), Q[:, ::-1].copy())


def mat_power(A, r: float) -> np.ndarray:
    """Real power ``A**r`` of a positive definite matrix through its spectrum."""
    w, Q = _spd_eigh(as_symmetric(A))
    if r == 0:
        return np.eye(len(w))
    return _from_eig(w**r, Q)


def mat_log(A) -> np.ndarray:
    """Principal logarithm of a positive definite matrix (a symmetric matrix)."""
    w, Q = _spd_eigh(as_symmetric(A))
    return _from_eig(np.log(w), Q)


def mat_exp(S) -> np.ndarray:
    """Exponential of a symmetric matrix (a positive definite matrix)."""
    w, Q = _eigh(as_symmetric(S, "S"))
    with np.errstate(over="raise"):
        try:
            ew = np.exp(w)
        except FloatingPointError as exc:
            raise NumericError("matrix exponential overflows") from exc
    return _from_eig(ew, Q)


def congruence(M, A) -> np.ndarray:
    """Return the symmetrized congruence ``M @ A @ M.T``.

    Raises
    ------
    SingularTransformError
        If the 2-norm condition number of `M` exceeds 1e12.
    """
    M = _square(M, "M")
    A = as_symmetric(A)
    if M.shape != A.shape:
        raise DimensionError(f"shape mismatch {M.shape} vs {A.shape}")
    if not np.isfinite(cond := np.linalg.cond(M)) or cond > MAX_TRANSFORM_COND:
        raise SingularTransformError(f"transform is singular (condition {cond:.3g})")
    return _sym(M @ A @ M.T)


@dataclass(frozen=True)
class LoewnerVerdict:
    """Outcome of comparing two symmetric matrices in the Loewner order.

    ``margin`` is ``lambda_min(B - A)`` and ``reverse_margin`` is
    ``lambda_min(A - B)``; ``scale`` is the ``max(1, ||B - A||_F)`` factor
    applied to the slack.
    """

    leq: bool
    geq: bool
    margin: float
    reverse_margin: float
    scale: float

    @property
    def incomparable(self) -> bool:
        return not (self.leq or self.geq)

    @property
    def normalized_margin(self) -> float:
        """``margin / scale``; ``leq`` holds iff this is at least ``-slack``."""
        return self.margin / self.scale


def loewner_compare(A, B, slack: float = 0.0) -> LoewnerVerdict:
    """Compare `A` and `B` in the Loewner order.

    ``leq`` (``A <= B``) holds iff ``lambda_min(B - A) >= -slack * max(1, ||B - A||_F)``,
    and ``geq`` symmetrically.
    """
    if slack < 0:
        raise DomainError("slack must be non-negative")
    A = _square(A, "A")
    B = _square(B, "B")
    if A.shape != B.shape:
        raise DimensionError(f"shape mismatch {A.shape} vs {B.shape}")
    D = as_symmetric(B - A, "B - A")
    w = np.linalg.eigvalsh(D)
    scale = max(1.0, float(np.linalg.norm(D)))
    lo, hi = float(w[0]), float(w[-1])
    return LoewnerVerdict(
        leq=lo >= -slack * scale,
        geq=-hi >= -slack * scale,
        margin=lo,
        reverse_margin=-hi,
        scale=scale,
    )


def operator_norm(A) -> float:
    """Spectral norm (largest singular value; ``max |lambda_i|`` if symmetric)."""
    return float(np.linalg.norm(np.asarray(A, dtype=float), 2))


def frobenius_norm(A) -> float:
    return float(np.linalg.norm(np.asarray(A, dtype=float)))


# --- random instances ------------------------------------------------------


def _key(part) -> int:
    if isinstance(part, str):
        return zlib.crc32(part.encode())
    part = int(part)
    if part < 0:
        raise DomainError("RNG keys must be non-negative")
    return part


def make_rng(seed: int, *keys: int | str) -> np.random.Generator:
    """Philox generator for the stream identified by ``(seed, *keys)``.

    String keys are folded to integers with CRC-32, so a stream such as
    ``make_rng(42, "det", 7)`` is stable across runs and platforms.
    """
    entropy = [_key(seed)] + [_key(k) for k in keys]
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(entropy)))


def random_orthogonal(rng: np.random.Generator, m: int) -> np.ndarray:
    """Haar-distributed orthogonal matrix (QR with sign correction)."""
    Z = rng.standard_normal((m, m))
    Q, R = np.linalg.qr(Z)
    return Q * np.where(np.diag(R) < 0, -1.0, 1.0)


def random_spd_from(
    rng: np.random.Generator, dim: int, condition_bound: float = 100.0
) -> np.ndarray:
    """SPD matrix with log-uniform eigenvalues in ``[1, condition_bound]``."""
    if dim < 1:
        raise DomainError("dim must be positive")
    if not condition_bound >= 1:
        raise DomainError("condition bound must be >= 1")
    eigenvalues = np.exp(rng.uniform(0.0, np.log(condition_bound), dim))
    Q = random_orthogonal(rng, dim)
    return _from_eig(eigenvalues, Q)


@dataclass(frozen=True)
class RandomSpdSpec:
    dim: int
    condition_bound: float = 100.0
    seed: int = 0

    def __post_init__(self):
        if self.dim < 1:
            raise DomainError("dim must be positive")
        if not self.condition_bound >= 1:
            raise DomainError("condition bound must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise DomainError("seed must be a 64-bit unsigned integer")


def random_spd(spec: RandomSpdSpec) -> np.ndarray:
    """Deterministic SPD matrix for `spec`; identical specs give identical bits."""
    return random_spd_from(make_rng(spec.seed), spec.dim, spec.condition_bound)
