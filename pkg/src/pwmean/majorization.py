"""
Compound matrices and (weak) log-majorization of spectra.

Index sets are 0-based: the rows and columns of ``compound_matrix(A, k)``
are the increasing ``k``-tuples of ``range(m)`` in lexicographic order, as
produced by :func:`itertools.combinations`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import DimensionError, DomainError
from .spd import _spd_eigh, as_symmetric

__all__ = [
    "MajorizationVerdict",
    "compound_indices",
    "compound_matrix",
    "log_majorizes",
    "spectrum",
]

_ADJUGATE_MAX_COND = 1e8


def compound_indices(m: int, k: int) -> list[tuple[int, ...]]:
    """Lexicographically ordered increasing ``k``-subsets of ``range(m)``."""
    if not 1 <= k <= m:
        raise DomainError(f"k must lie in [1, {m}], got {k}")
    return list(combinations(range(m), k))


def compound_matrix(A, k: int) -> np.ndarray:
    """``k``-th compound (antisymmetric tensor power) of a square matrix.

    Entry ``(alpha, beta)`` is the minor ``det A[alpha | beta]``.  Minors are
    evaluated by LU with partial pivoting; ``k = 1`` and ``k = m`` return
    ``A`` and ``[[det A]]`` directly, and ``k = m - 1`` is read off the
    adjugate when ``A`` is well conditioned.
    """
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {A.shape}")
    m = A.shape[0]
    idx = np.array(compound_indices(m, k))
    if k == 1:
        return A.copy()
    if k == m:
        return np.array([[np.linalg.det(A)]])
    if k == m - 1 and np.linalg.cond(A) < _ADJUGATE_MAX_COND:
        # The j-th index set omits m-1-j; minor(i, j) = (-1)^(i+j) adj(A)[j, i].
        adj = np.linalg.det(A) * np.linalg.inv(A)
        omitted = np.arange(m - 1, -1, -1)
        sign = (-1.0) ** (omitted[:, None] + omitted[None, :])
        return sign * adj.T[np.ix_(omitted, omitted)]
    sub = A[idx[:, None, :, None], idx[None, :, None, :]]
    return np.linalg.det(sub)


def spectrum(A) -> np.ndarray:
    """Eigenvalues of an SPD matrix in decreasing order."""
    w, _ = _spd_eigh(as_symmetric(A))
    return w[::-1].copy()


@dataclass(frozen=True)
class MajorizationVerdict:
    """Result of testing ``x`` against ``y`` in (weak) log-majorization.

    ``margins[k-1] = sum_{i<=k} log y_i - sum_{i<=k} log x_i`` for the
    decreasing rearrangements; ``determinant_gap`` is
    ``prod x / prod y - 1``.
    """

    holds: bool
    margins: np.ndarray
    determinant_gap: float
    mode: str

    @property
    def worst_margin(self) -> float:
        return float(self.margins.min())


def log_majorizes(x, y, mode: str = "strict", rel_slack: float = 1e-9) -> MajorizationVerdict:
    """Test whether ``x`` is (weakly) log-majorized by ``y``.

    The weak relation requires ``prod_{i<=k} x_i <= (1 + rel_slack) prod_{i<=k} y_i``
    for every ``k``; ``mode="strict"`` additionally requires the full
    products to agree to ``rel_slack``.  Products are accumulated as sums of
    logarithms.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.ndim != 1 or x.shape != y.shape:
        raise DimensionError(f"length mismatch {x.shape} vs {y.shape}")
    if np.any(x <= 0) or np.any(y <= 0):
        raise DomainError("log-majorization needs positive entries")
    if mode not in ("weak", "strict"):
        raise DomainError(f"mode must be 'weak' or 'strict', got {mode!r}")
    lx = np.cumsum(np.log(np.sort(x)[::-1]))
    ly = np.cumsum(np.log(np.sort(y)[::-1]))
    margins = ly - lx
    gap = float(np.expm1(-margins[-1]))
    holds = bool(np.all(margins >= -np.log1p(rel_slack)))
    if mode == "strict":
        holds = holds and abs(gap) <= rel_slack
    return MajorizationVerdict(holds, margins, gap, mode)

