"""Named qudit gates: clock, shift, their products, Walsh-Hadamard and K.

Index conventions are 0-based throughout. ``sigma = exp(2 pi i / n)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

__all__ = [
    "GateKind",
    "GateId",
    "primitive_root",
    "sigma1",
    "sigma3",
    "pauli_power",
    "walsh",
    "walsh_dagger",
    "k_matrix",
    "gate_matrix",
]


class GateKind(str, Enum):
    SIGMA1 = "sigma1"
    SIGMA3 = "sigma3"
    PAULI = "pauli"
    WALSH = "walsh"
    K = "k"


@dataclass(frozen=True)
class GateId:
    """A named target gate at dimension ``n``.

    ``a`` and ``b`` are the shift and clock exponents and only matter for
    ``GateKind.PAULI``.
    """

    kind: GateKind
    n: int
    a: int = 0
    b: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", GateKind(self.kind))
        _check_dim(self.n)
        if not (0 <= self.a < self.n and 0 <= self.b < self.n):
            raise ValueError(f"exponents must lie in [0, {self.n - 1}], got a={self.a}, b={self.b}")

    @property
    def name(self) -> str:
        if self.kind is GateKind.PAULI:
            return f"pauli({self.a},{self.b})"
        return self.kind.value


def _check_dim(n: int) -> None:
    if int(n) != n or n < 2:
        raise ValueError(f"qudit dimension must be an integer >= 2, got {n!r}")


def _root_table(n: int) -> np.ndarray:
    """``sigma^k`` for ``k = 0..n-1``.

    Quarter turns are exact and ``sigma^(n-k) == conj(sigma^k)`` holds
    bit for bit.
    """
    out = np.empty(n, dtype=np.complex128)
    exact = {0: 1.0 + 0j, 1: 1j, 2: -1.0 + 0j, 3: -1j}
    for k in range(n // 2 + 1):
        if (4 * k) % n == 0:
            out[k] = exact[4 * k // n]
        else:
            out[k] = cmath.exp(2j * math.pi * k / n)
        out[(n - k) % n] = out[k].conjugate() if k else out[0]
    return out


def primitive_root(n: int) -> complex:
    _check_dim(n)
    return complex(_root_table(n)[1])


def _powers(n: int, exponents: np.ndarray) -> np.ndarray:
    return _root_table(n)[np.asarray(exponents) % n]


def sigma1(n: int) -> np.ndarray:
    """Cyclic shift: ``e_k -> e_{k+1 mod n}``."""
    _check_dim(n)
    return np.roll(np.eye(n, dtype=np.complex128), 1, axis=0)


def sigma3(n: int) -> np.ndarray:
    """Clock matrix ``diag(1, sigma, ..., sigma^(n-1))``."""
    _check_dim(n)
    return np.diag(_powers(n, np.arange(n)))


def pauli_power(n: int, a: int, b: int) -> np.ndarray:
    """``Sigma1^a Sigma3^b`` with no extra phase."""
    _check_dim(n)
    if not (0 <= a < n and 0 <= b < n):
        raise ValueError(f"exponents must lie in [0, {n - 1}], got a={a}, b={b}")
    shift = np.roll(np.eye(n, dtype=np.complex128), a, axis=0)
    return shift @ np.diag(_powers(n, b * np.arange(n)))


def walsh(n: int) -> np.ndarray:
    """Generalized Walsh-Hadamard matrix, ``W[a, b] = sigma^(-ab) / sqrt(n)``.

    With this orientation ``W Sigma3 W^dagger = Sigma1`` and ``W^2 = K``.
    """
    _check_dim(n)
    k = np.arange(n)
    return _powers(n, -np.outer(k, k)) / math.sqrt(n)


def walsh_dagger(n: int) -> np.ndarray:
    """DFT coefficient matrix ``sigma^(ab) / sqrt(n)``; the adjoint of :func:`walsh`."""
    _check_dim(n)
    return np.conj(walsh(n)).T.copy()


def k_matrix(n: int) -> np.ndarray:
    """Permutation fixing ``e_0`` and reversing ``e_1 .. e_{n-1}``."""
    _check_dim(n)
    m = np.zeros((n, n), dtype=np.complex128)
    m[0, 0] = 1.0
    for i in range(1, n):
        m[i, n - i] = 1.0
    return m


def gate_matrix(gate: GateId) -> np.ndarray:
    """Direct constructor for ``gate``."""
    if gate.kind is GateKind.SIGMA1:
        return sigma1(gate.n)
    if gate.kind is GateKind.SIGMA3:
        return sigma3(gate.n)
    if gate.kind is GateKind.PAULI:
        return pauli_power(gate.n, gate.a, gate.b)
    if gate.kind is GateKind.WALSH:
        return walsh(gate.n)
    return k_matrix(gate.n)
