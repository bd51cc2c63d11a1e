"""Dense complex matrix helpers.

Matrices are plain ``numpy`` arrays of dtype ``complex128`` with shape
``(n, n)``. Nothing here mutates its arguments.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "DimensionError",
    "as_cmatrix",
    "identity",
    "mat_mul",
    "dagger",
    "unitary_error",
    "mat_exp_series",
    "max_abs_diff",
]


class DimensionError(ValueError):
    """Raised when matrix shapes are incompatible or not square."""


def as_cmatrix(data) -> np.ndarray:
    """Return ``data`` as a validated square complex128 array (always a copy)."""
    m = np.array(data, dtype=np.complex128, copy=True)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise DimensionError(f"expected a non-empty square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def identity(n: int) -> np.ndarray:
    if n < 1:
        raise DimensionError(f"dimension must be positive, got {n}")
    return np.eye(n, dtype=np.complex128)


def _check_same(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise DimensionError(f"dimension mismatch: {a.shape} vs {b.shape}")


def mat_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    _check_same(a, b)
    return a @ b


def dagger(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.conj(np.asarray(a, dtype=np.complex128)).T.copy()


def unitary_error(u: np.ndarray) -> float:
    """Largest absolute entry of ``U^dagger U - I``; zero iff ``u`` is exactly unitary."""
    u = np.asarray(u, dtype=np.complex128)
    n = u.shape[0]
    return float(np.max(np.abs(dagger(u) @ u - np.eye(n))))


def mat_exp_series(x: np.ndarray, terms: int = 64) -> np.ndarray:
    """Partial Taylor sum ``sum_{k=0}^{terms} X^k / k!``.

    No scaling and squaring is applied; this is meant as a slow, transparent
    reference for inputs of moderate norm (a few multiples of pi), where 64
    terms are plenty.
    """
    if terms < 1:
        raise ValueError(f"terms must be >= 1, got {terms}")
    x = np.asarray(x, dtype=np.complex128)
    n = x.shape[0]
    total = np.eye(n, dtype=np.complex128)
    term = np.eye(n, dtype=np.complex128)
    for k in range(1, terms + 1):
        term = term @ x / k
        total = total + term
    return total


def max_abs_diff(a: np.ndarray, b: np.ndarray) -> float:
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    _check_same(a, b)
    return float(np.max(np.abs(a - b)))
