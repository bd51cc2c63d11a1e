"""Phase and block modules, and ordered products of them.

A unitary ``U`` of size ``n`` is written as the ordered product

    U = A0 . A2 . A3 ... An

where ``A0 = diag(exp(i theta_1), ..., exp(i theta_n))`` and each ``Aj``
(``2 <= j <= n``) rotates coordinate ``j`` into the unit vector ``z~``
spanning coordinates ``1..j-1`` by an angle ``beta``:

    Aj = [[ I - (1 - cos b)|z~><z~|,  sin b |z~>,  0 ],
          [ -sin b <z~|,              cos b,       0 ],
          [ 0,                        0,           I ]]

``Aj`` is exactly ``expm(Xj)`` for the skew-Hermitian generator ``Xj`` with
``|z>`` in column ``j`` and ``-<z|`` in row ``j``, when ``beta = |z|`` and
``z~ = z / |z|``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence, Union

import numpy as np

from .matrix import DimensionError, identity

__all__ = [
    "UNIT_TOL",
    "PhaseModule",
    "BlockModule",
    "Module",
    "FactorSequence",
    "make_phase_module",
    "make_block_module",
    "skew_block_generator",
    "exp_skew_block",
    "compose_sequence",
    "EulerAngles",
    "euler_u2",
    "euler_product",
]

UNIT_TOL = 1e-12


def _check_index(n: int, j: int) -> None:
    if not 2 <= j <= n:
        raise ValueError(f"block index j must satisfy 2 <= j <= n, got j={j}, n={n}")


@dataclass(frozen=True)
class PhaseModule:
    """Diagonal phase module ``diag(exp(i theta_k))``."""

    thetas: tuple[float, ...]

    def __post_init__(self):
        thetas = tuple(float(t) for t in self.thetas)
        if not thetas:
            raise ValueError("phase module needs at least one angle")
        if not all(math.isfinite(t) for t in thetas):
            raise ValueError("phase angles must be finite")
        object.__setattr__(self, "thetas", thetas)

    @property
    def n(self) -> int:
        return len(self.thetas)

    def matrix(self) -> np.ndarray:
        return make_phase_module(self.thetas)


@dataclass(frozen=True)
class BlockModule:
    """Block module ``Aj(z~; beta)`` embedded in dimension ``n``."""

    n: int
    j: int
    z_tilde: tuple[complex, ...]
    beta: float

    def __post_init__(self):
        _check_index(self.n, self.j)
        z = tuple(complex(v) for v in self.z_tilde)
        if len(z) != self.j - 1:
            raise ValueError(f"z_tilde must have j-1={self.j - 1} entries, got {len(z)}")
        if not all(math.isfinite(v.real) and math.isfinite(v.imag) for v in z):
            raise ValueError("z_tilde entries must be finite")
        norm = math.sqrt(sum(abs(v) ** 2 for v in z))
        if abs(norm - 1.0) > UNIT_TOL:
            raise ValueError(f"z_tilde must be a unit vector, |z_tilde| = {norm!r}")
        if not math.isfinite(self.beta):
            raise ValueError("beta must be finite")
        object.__setattr__(self, "z_tilde", z)
        object.__setattr__(self, "beta", float(self.beta))

    def matrix(self) -> np.ndarray:
        return make_block_module(self.n, self.j, self.z_tilde, self.beta)

    def inverse(self) -> "BlockModule":
        return BlockModule(self.n, self.j, self.z_tilde, -self.beta)


Module = Union[PhaseModule, BlockModule]


@dataclass(frozen=True)
class FactorSequence:
    """Ordered modules of a common dimension; the leftmost factor comes first."""

    n: int
    factors: tuple[Module, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.n < 1:
            raise DimensionError(f"dimension must be positive, got {self.n}")
        factors = tuple(self.factors)
        for f in factors:
            if f.n != self.n:
                raise DimensionError(f"factor of dimension {f.n} in a sequence of dimension {self.n}")
        object.__setattr__(self, "factors", factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __add__(self, other: "FactorSequence") -> "FactorSequence":
        if not isinstance(other, FactorSequence):
            return NotImplemented
        if other.n != self.n:
            raise DimensionError(f"cannot concatenate sequences of dimension {self.n} and {other.n}")
        return FactorSequence(self.n, self.factors + other.factors)


def make_phase_module(thetas: Sequence[float]) -> np.ndarray:
    thetas = np.asarray(thetas, dtype=float)
    if thetas.ndim != 1 or thetas.size == 0:
        raise ValueError("thetas must be a non-empty list of angles")
    if not np.all(np.isfinite(thetas)):
        raise ValueError("phase angles must be finite")
    return np.diag(np.exp(1j * thetas))


def make_block_module(n: int, j: int, z_tilde: Sequence[complex], beta: float) -> np.ndarray:
    """Build ``Aj(z~; beta)`` as an ``n x n`` matrix.

    Raises:
        ValueError: if ``j`` is outside ``[2, n]`` or ``z_tilde`` is not a
            unit vector of length ``j - 1`` (tolerance ``UNIT_TOL``).
    """
    _check_index(n, j)
    z = np.asarray(z_tilde, dtype=np.complex128).reshape(-1)
    if z.size != j - 1:
        raise ValueError(f"z_tilde must have j-1={j - 1} entries, got {z.size}")
    norm = float(np.linalg.norm(z))
    if abs(norm - 1.0) > UNIT_TOL:
        raise ValueError(f"z_tilde must be a unit vector, |z_tilde| = {norm!r}")
    c, s = math.cos(beta), math.sin(beta)
    m = identity(n)
    m[: j - 1, : j - 1] -= (1.0 - c) * np.outer(z, z.conj())
    m[: j - 1, j - 1] = s * z
    m[j - 1, : j - 1] = -s * z.conj()
    m[j - 1, j - 1] = c
    return m


def skew_block_generator(n: int, j: int, z: Sequence[complex]) -> np.ndarray:
    """The skew-Hermitian ``Xj``: ``|z>`` in column ``j`` above the diagonal, ``-<z|`` in row ``j``."""
    _check_index(n, j)
    z = np.asarray(z, dtype=np.complex128).reshape(-1)
    if z.size != j - 1:
        raise ValueError(f"z must have j-1={j - 1} entries, got {z.size}")
    x = np.zeros((n, n), dtype=np.complex128)
    x[: j - 1, j - 1] = z
    x[j - 1, : j - 1] = -z.conj()
    return x


def exp_skew_block(n: int, j: int, z: Sequence[complex]) -> np.ndarray:
    """Closed-form ``expm(Xj)``; ``beta = |z|`` and ``z~ = z / |z|``.

    ``z = 0`` gives the identity (the direction is irrelevant there).
    """
    _check_index(n, j)
    z = np.asarray(z, dtype=np.complex128).reshape(-1)
    if z.size != j - 1:
        raise ValueError(f"z must have j-1={j - 1} entries, got {z.size}")
    peak = float(np.max(np.abs(z))) if z.size else 0.0
    if peak == 0.0:
        return identity(n)
    # Exact power-of-two rescale so the norm neither underflows nor overflows.
    e = int(np.frexp(peak)[1])
    w = np.ldexp(z.real, -e) + 1j * np.ldexp(z.imag, -e)
    wn = float(np.linalg.norm(w))
    return make_block_module(n, j, w / wn, math.ldexp(wn, e))


def compose_sequence(seq: FactorSequence) -> np.ndarray:
    """Left-to-right product of the factors; the empty sequence gives the identity."""
    out = identity(seq.n)
    for f in seq.factors:
        if f.n != seq.n:
            raise DimensionError(f"factor of dimension {f.n} in a sequence of dimension {seq.n}")
        out = out @ f.matrix()
    return out


class EulerAngles(NamedTuple):
    """``diag(e^{i phi_left1}, e^{i phi_left2}) . R(rot) . diag(e^{-i phi_right}, e^{i phi_right})``."""

    phi_left1: float
    phi_left2: float
    rot: float
    phi_right: float


def euler_u2(theta1: float, theta2: float, z: complex) -> tuple[np.ndarray, EulerAngles]:
    """Two-dimensional case of the module product, ``A0(theta1, theta2) . exp(X2(z))``.

    Returns the 2x2 unitary together with its Euler-angle form. ``arg(0)`` is
    taken as 0.
    """
    z = complex(z)
    r = abs(z)
    alpha = math.atan2(z.imag, z.real) if r != 0.0 else 0.0
    u = make_phase_module([theta1, theta2]) @ exp_skew_block(2, 2, [z])
    angles = EulerAngles(theta1 + alpha / 2, theta2 - alpha / 2, r, alpha / 2)
    return u, angles


def euler_product(angles: EulerAngles) -> np.ndarray:
    c, s = math.cos(angles.rot), math.sin(angles.rot)
    left = make_phase_module([angles.phi_left1, angles.phi_left2])
    rot = np.array([[c, s], [-s, c]], dtype=np.complex128)
    right = make_phase_module([-angles.phi_right, angles.phi_right])
    return left @ rot @ right
