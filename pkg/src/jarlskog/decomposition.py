"""Factor a unitary into one phase module followed by blocks ``A2 .. An``.

For ``U = D A2 ... An`` every ``Aj`` with ``j < n`` leaves coordinate ``n``
alone, so the last row of ``U`` is ``exp(i theta_n) (-sin b <z~|, cos b)``.
Reading ``theta_n``, ``b`` and ``z~`` off that row and right-multiplying by
``An^-1`` leaves a block-diagonal matrix; the leading ``(n-1) x (n-1)`` block
is factored the same way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .matrix import as_cmatrix, max_abs_diff, unitary_error
from .modules import BlockModule, FactorSequence, PhaseModule, compose_sequence

__all__ = [
    "UNITARY_TOL",
    "DEGENERATE_TOL",
    "NotUnitaryError",
    "DecompositionResult",
    "decompose",
    "roundtrip_error",
    "haar_unitary",
]

UNITARY_TOL = 1e-10
DEGENERATE_TOL = 1e-12


class NotUnitaryError(ValueError):
    def __init__(self, error: float):
        super().__init__(f"input is not unitary: max |U^dagger U - I| = {error:.3e} > {UNITARY_TOL:g}")
        self.error = error


@dataclass(frozen=True)
class DecompositionResult:
    sequence: FactorSequence
    residual: float


def _peel(row: np.ndarray) -> tuple[float, float, np.ndarray]:
    """Return ``(theta, beta, z_tilde)`` for a unit-norm last row."""
    corner = row[-1]
    off = row[:-1]
    off_norm = float(np.linalg.norm(off))
    mag = abs(corner)
    m = row.size
    if off_norm <= DEGENERATE_TOL:
        z = np.zeros(m - 1, dtype=np.complex128)
        z[0] = 1.0
        return float(np.angle(corner)), 0.0, z
    if mag <= DEGENERATE_TOL:
        theta = 0.0
        beta = math.pi / 2
    else:
        theta = float(np.angle(corner))
        # atan2 stays accurate near both ends, unlike arccos(|corner|).
        beta = math.atan2(off_norm, mag)
    z = -np.exp(1j * theta) * np.conj(off) / off_norm
    return theta, beta, z


def decompose(u: np.ndarray) -> DecompositionResult:
    """Factor ``u`` as ``A0(thetas) A2 A3 ... An``.

    Every block angle lies in ``[0, pi/2]`` and every phase in ``(-pi, pi]``.
    The factorization is not unique (any ``z~`` works when ``beta = 0``), so
    only the composed matrix is guaranteed to reproduce ``u``.

    Raises:
        NotUnitaryError: if ``unitary_error(u) > UNITARY_TOL``.
    """
    u = as_cmatrix(u)
    err = unitary_error(u)
    if err > UNITARY_TOL:
        raise NotUnitaryError(err)
    n = u.shape[0]
    work = u.copy()
    thetas = np.zeros(n)
    blocks: list[BlockModule] = []
    for m in range(n, 1, -1):
        theta, beta, z = _peel(work[m - 1, :m])
        thetas[m - 1] = theta
        block = BlockModule(m, m, tuple(z), beta)
        work = work[:m, :m] @ block.inverse().matrix()
        blocks.append(BlockModule(n, m, block.z_tilde, beta))
        work = work[: m - 1, : m - 1]
    thetas[0] = float(np.angle(work[0, 0]))
    seq = FactorSequence(n, (PhaseModule(tuple(thetas)),) + tuple(reversed(blocks)))
    residual = max_abs_diff(compose_sequence(seq), u)
    return DecompositionResult(seq, residual)


def roundtrip_error(u: np.ndarray) -> float:
    result = decompose(u)
    return max_abs_diff(compose_sequence(result.sequence), as_cmatrix(u))


def haar_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random ``U(n)`` element.

    Columns of a complex Gaussian matrix are orthonormalized by Gram-Schmidt
    with one reorthogonalization pass; the implied triangular factor has a
    positive diagonal, which is what makes the result Haar distributed.
    """
    g = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2)
    q = np.zeros((n, n), dtype=np.complex128)
    for k in range(n):
        v = g[:, k].copy()
        for _ in range(2):
            v -= q[:, :k] @ (q[:, :k].conj().T @ v)
        q[:, k] = v / np.linalg.norm(v)
    return q
