"""Module-product recipes for the named qudit gates.

Every recipe is a flat :class:`FactorSequence` of primitive phase and block
modules. Composite permutation factors (``S``, ``S1``, ``S2`` in the Walsh
constructions) are stored expanded, and adjacent phase modules are left
unmerged so the order matches the published products term by term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .gates import GateId, GateKind, gate_matrix
from .matrix import max_abs_diff, unitary_error
from .modules import BlockModule, FactorSequence, PhaseModule, compose_sequence

__all__ = [
    "VERIFY_TOL",
    "UnsupportedDimensionError",
    "Recipe",
    "RecipeCheck",
    "recipe_sigma3",
    "recipe_sigma1",
    "recipe_pauli",
    "recipe_k",
    "recipe_walsh",
    "recipe_for",
    "verify_recipe",
    "Walsh5Constants",
    "walsh5_constants",
    "PrintedFactor",
    "printed_walsh_factors",
    "diagnose_walsh",
]

VERIFY_TOL = 1e-11

_PI = math.pi
_HALF_PI = math.pi / 2


class UnsupportedDimensionError(ValueError):
    """No recipe is known for the requested gate at this dimension."""


@dataclass(frozen=True)
class Recipe:
    """A factor sequence that synthesizes ``target``.

    ``provenance`` names the product the sequence spells out, e.g.
    ``"A0 A3 A2 A0'"``; ``module_count`` counts primitive modules.
    """

    target: GateId
    sequence: FactorSequence
    provenance: str

    @property
    def module_count(self) -> int:
        return len(self.sequence)

    def matrix(self) -> np.ndarray:
        return compose_sequence(self.sequence)


class RecipeCheck(NamedTuple):
    error: float
    passed: bool


def _check_dim(n: int) -> None:
    if int(n) != n or n < 2:
        raise ValueError(f"qudit dimension must be an integer >= 2, got {n!r}")


def _unit(length: int, pos: int) -> tuple[complex, ...]:
    v = [0j] * length
    v[pos] = 1.0 + 0j
    return tuple(v)


def _clock_phase(n: int) -> PhaseModule:
    return PhaseModule(tuple(2 * _PI * k / n for k in range(n)))


def recipe_sigma3(n: int) -> Recipe:
    _check_dim(n)
    seq = FactorSequence(n, (_clock_phase(n),))
    return Recipe(GateId(GateKind.SIGMA3, n), seq, "A0(0, 2pi/n, ..., 2(n-1)pi/n)")


def _shift_factors(n: int) -> tuple:
    phase = PhaseModule((0.0,) + (_PI,) * (n - 1))
    blocks = tuple(BlockModule(n, j, _unit(j - 1, j - 2), _HALF_PI) for j in range(2, n + 1))
    return (phase,) + blocks


def recipe_sigma1(n: int) -> Recipe:
    """``A0(0, pi, ..., pi) A2 A3 ... An`` with ``Aj = Aj((0, ..., 0, 1); pi/2)``."""
    _check_dim(n)
    seq = FactorSequence(n, _shift_factors(n))
    return Recipe(GateId(GateKind.SIGMA1, n), seq, "A0(0, pi, ..., pi) A2 A3 ... An")


def recipe_pauli(n: int, a: int, b: int) -> Recipe:
    """``Sigma1^a Sigma3^b`` as ``a`` shift recipes followed by ``b`` clock recipes."""
    target = GateId(GateKind.PAULI, n, a, b)
    factors = _shift_factors(n) * a + (_clock_phase(n),) * b
    return Recipe(target, FactorSequence(n, factors), f"(A0 A2 ... An)^{a} A0(clock)^{b}")


def recipe_k(n: int) -> Recipe:
    """Reversal matrix ``K`` from one phase module and ``ceil(n/2) - 1`` swaps.

    For ``n = 2k`` the phase has ``k + 1`` zeros, for ``n = 2k - 1`` it has
    ``k``; the remaining angles are ``pi``. Each following ``Aj`` (``j`` from
    the first non-zero position to ``n``) carries a unit vector at 1-based
    position ``n + 2 - j`` and ``beta = pi/2``. ``n = 2`` needs no modules.
    """
    _check_dim(n)
    target = GateId(GateKind.K, n)
    if n == 2:
        return Recipe(target, FactorSequence(2), "identity")
    zeros = n // 2 + 1 if n % 2 == 0 else (n + 1) // 2
    phase = PhaseModule((0.0,) * zeros + (_PI,) * (n - zeros))
    blocks = tuple(
        BlockModule(n, j, _unit(j - 1, n + 1 - j), _HALF_PI) for j in range(zeros + 1, n + 1)
    )
    prov = f"A0 A{zeros + 1} ... A{n}"
    return Recipe(target, FactorSequence(n, (phase,) + blocks), prov)


class Walsh5Constants(NamedTuple):
    """Radical constants of the five-level Walsh-Hadamard construction.

    ``beta_hat`` is the complex constant ``conj(alpha) + t a alpha``; it is
    unrelated to the rotation angles of the block modules.
    """

    a: float
    alpha: complex
    u: float
    s: float
    t: float
    beta_hat: complex
    v: float
    cos_theta4: float
    cos_theta3: float


def walsh5_constants() -> Walsh5Constants:
    r5 = math.sqrt(5.0)
    a = math.sin(2 * _PI / 5)
    alpha = complex(math.sqrt(10 - 2 * r5) / 4, r5 / 2)
    u = math.sqrt(4 + math.cos(2 * _PI / 5) ** 2)
    boost = 1 + math.sin(2 * _PI / 5) / r5
    s = 2 * (35 + r5) / 305 * boost
    t = 2 * (7 * r5 + 1) / 61 * boost
    beta_hat = alpha.conjugate() + t * a * alpha
    v = math.sqrt(5 - (a + t * a * a) ** 2)
    return Walsh5Constants(
        a=a,
        alpha=alpha,
        u=u,
        s=s,
        t=t,
        beta_hat=beta_hat,
        v=v,
        cos_theta4=-a / r5,
        cos_theta3=-(a + t * a * a) / r5,
    )


def _walsh3() -> tuple[tuple, str]:
    r2 = 1 / math.sqrt(2)
    factors = (
        PhaseModule((0.0, 2 * _PI / 3, 4 * _PI / 3)),
        BlockModule(3, 3, (r2, r2), math.acos(1 / math.sqrt(3))),
        BlockModule(3, 2, (complex(math.cos(-_HALF_PI), math.sin(-_HALF_PI)),), _PI / 4),
        PhaseModule((-_PI / 12, 7 * _PI / 12, 0.0)),
    )
    return factors, "A0 A3 A2 A0'"


def _walsh4() -> tuple[tuple, str]:
    r2 = 1 / math.sqrt(2)
    r3 = 1 / math.sqrt(3)
    swap = (
        PhaseModule((0.0, 0.0, _PI, 0.0)),
        BlockModule(4, 3, (0.0, 1.0), _HALF_PI),
    )
    factors = (
        (PhaseModule(tuple(2 * _PI * k / 4 for k in range(4))),
         BlockModule(4, 4, (r3, r3, r3), _PI / 3))
        + swap
        + (BlockModule(4, 3, (r2, r2), math.acos(-1 / 3)),
           BlockModule(4, 2, (complex(math.cos(_HALF_PI), math.sin(_HALF_PI)),), _PI / 4),
           PhaseModule((_PI / 4, 5 * _PI / 4, 0.0, 0.0)))
        + swap
    )
    return factors, "A0 A4 S A3 A2 A0' S"


def _walsh5() -> tuple[tuple, str]:
    c = walsh5_constants()
    bh = c.beta_hat
    s1 = (
        PhaseModule((0.0, _PI, _PI, 0.0, 0.0)),
        BlockModule(5, 2, (1.0,), _HALF_PI),
        BlockModule(5, 3, (0.0, 1.0), _HALF_PI),
    )
    s2 = (
        PhaseModule((0.0, 0.0, _PI, 0.0, 0.0)),
        BlockModule(5, 3, (1.0, 0.0), _HALF_PI),
    )
    factors = (
        (PhaseModule(tuple(2 * _PI * k / 5 for k in range(5))),
         BlockModule(5, 5, (0.5, 0.5, 0.5, 0.5), math.acos(1 / math.sqrt(5))),
         BlockModule(5, 4, (c.a / c.u, c.alpha / c.u, -c.alpha.conjugate() / c.u),
                     math.acos(c.cos_theta4)))
        + s1
        + (BlockModule(5, 3, (-bh / c.v, bh.conjugate() / c.v), math.acos(c.cos_theta3)),)
        + s2
        + (PhaseModule((9 * _PI / 10, 13 * _PI / 10, -3 * _PI / 10, _PI / 10, 0.0)),)
    )
    return factors, "A0 A5 A4 S1 A3 S2 A0'"


_WALSH_BUILDERS = {3: _walsh3, 4: _walsh4, 5: _walsh5}


def recipe_walsh(n: int) -> Recipe:
    """Walsh-Hadamard recipe; only ``n`` in ``{3, 4, 5}`` has a known product.

    Raises:
        UnsupportedDimensionError: for any other ``n``.
    """
    if n not in _WALSH_BUILDERS:
        raise UnsupportedDimensionError(
            f"unsupported dimension n={n} (Walsh-Hadamard recipes exist for n=3,4,5 only)"
        )
    factors, prov = _WALSH_BUILDERS[n]()
    return Recipe(GateId(GateKind.WALSH, n), FactorSequence(n, factors), prov)


def recipe_for(gate: GateId) -> Recipe:
    if gate.kind is GateKind.SIGMA1:
        return recipe_sigma1(gate.n)
    if gate.kind is GateKind.SIGMA3:
        return recipe_sigma3(gate.n)
    if gate.kind is GateKind.PAULI:
        return recipe_pauli(gate.n, gate.a, gate.b)
    if gate.kind is GateKind.K:
        return recipe_k(gate.n)
    return recipe_walsh(gate.n)


def verify_recipe(recipe: Recipe, tol: float = VERIFY_TOL) -> RecipeCheck:
    """Compare the composed recipe against the gate's direct constructor."""
    err = max_abs_diff(recipe.matrix(), gate_matrix(recipe.target))
    return RecipeCheck(err, err <= tol)


class PrintedFactor(NamedTuple):
    """A factor group of a Walsh recipe and the matrix it is supposed to equal.

    ``start:stop`` indexes the recipe's flat sequence.
    """

    label: str
    start: int
    stop: int
    expected: np.ndarray


def _perm(n: int, ones: list[tuple[int, int]]) -> np.ndarray:
    m = np.zeros((n, n), dtype=np.complex128)
    for i, j in ones:
        m[i, j] = 1.0
    return m


def _embed(block: np.ndarray, n: int) -> np.ndarray:
    m = np.eye(n, dtype=np.complex128)
    k = block.shape[0]
    m[:k, :k] = block
    return m


def printed_walsh_factors(n: int) -> list[PrintedFactor]:
    """Entry-by-entry forms of each factor group of :func:`recipe_walsh`.

    These are assembled from closed-form entries (radicals, the constants
    ``s`` and ``t``) rather than from angles, so they serve as an
    independent reference for each stage of the product.
    """
    if n == 3:
        r3 = math.sqrt(3)
        p, m = (r3 + 1) / 2, (r3 - 1) / 2
        a3 = np.array([[p, -m, 1], [-m, p, 1], [-1, -1, 1]]) / r3
        h = 1 / math.sqrt(2)
        a2 = np.array([[h, -1j * h], [-1j * h, h]])
        c12 = (math.sqrt(6) + math.sqrt(2)) / 4
        s12 = (math.sqrt(6) - math.sqrt(2)) / 4
        # exp(7 i pi/12) = i exp(i pi/12)
        a0p = np.diag([complex(c12, -s12), 1j * complex(c12, s12), 1.0])
        sig = complex(-0.5, r3 / 2)
        return [
            PrintedFactor("A0", 0, 1, np.diag([1.0, sig, sig.conjugate()])),
            PrintedFactor("A3", 1, 2, _embed(a3, 3)),
            PrintedFactor("A2", 2, 3, _embed(a2, 3)),
            PrintedFactor("A0'", 3, 4, a0p),
        ]
    if n == 4:
        a4 = np.array(
            [[5 / 6, -1 / 6, -1 / 6, 1 / 2],
             [-1 / 6, 5 / 6, -1 / 6, 1 / 2],
             [-1 / 6, -1 / 6, 5 / 6, 1 / 2],
             [-1 / 2, -1 / 2, -1 / 2, 1 / 2]]
        )
        a3 = np.array([[1, -2, 2], [-2, 1, 2], [-2, -2, -1]]) / 3
        h = 1 / math.sqrt(2)
        a2 = np.array([[h, 1j * h], [1j * h, h]])
        w = (1 + 1j) * h
        swap = _perm(4, [(0, 0), (1, 2), (2, 1), (3, 3)])
        return [
            PrintedFactor("A0", 0, 1, np.diag([1, 1j, -1, -1j]).astype(complex)),
            PrintedFactor("A4", 1, 2, a4.astype(complex)),
            PrintedFactor("S", 2, 4, swap),
            PrintedFactor("A3", 4, 5, _embed(a3, 4)),
            PrintedFactor("A2", 5, 6, _embed(a2, 4)),
            PrintedFactor("A0'", 6, 7, np.diag([w, -w, 1, 1])),
            PrintedFactor("S", 7, 9, swap),
        ]
    if n == 5:
        c = walsh5_constants()
        r5 = math.sqrt(5)
        a, al, s = c.a, c.alpha, c.s
        alc = al.conjugate()
        p = (3 * r5 + 1) / 4
        q = -(r5 - 1) / 4
        a5 = np.full((5, 5), q, dtype=complex)
        np.fill_diagonal(a5, p)
        a5[:4, 4] = 1.0
        a5[4, :] = -1.0
        a5[4, 4] = 1.0
        a5 /= r5
        a4 = np.array(
            [[1 - s * a * a, -s * a * alc, s * a * al, a / r5],
             [-s * a * al, 1 - s * abs(al) ** 2, s * al * al, al / r5],
             [s * a * alc, s * alc * alc, 1 - s * abs(al) ** 2, -alc / r5],
             [-a / r5, -alc / r5, al / r5, -a / r5]]
        )
        bh = c.beta_hat
        bhc = bh.conjugate()
        e = a + c.t * a * a
        d = r5 * (r5 - e)
        a3 = np.array(
            [[1 - abs(bh) ** 2 / d, bh * bh / d, -bh / r5],
             [bhc * bhc / d, 1 - abs(bh) ** 2 / d, bhc / r5],
             [bhc / r5, -bh / r5, -e / r5]]
        )
        sig = complex((r5 - 1) / 4, math.sqrt(10 + 2 * r5) / 4)
        a0p = np.diag([np.exp(1j * x) for x in (9 * _PI / 10, 13 * _PI / 10, -3 * _PI / 10, _PI / 10)] + [1.0])
        return [
            PrintedFactor("A0", 0, 1, np.diag([sig**k for k in range(5)])),
            PrintedFactor("A5", 1, 2, a5),
            PrintedFactor("A4", 2, 3, _embed(a4, 5)),
            PrintedFactor("S1", 3, 6, _perm(5, [(0, 2), (1, 0), (2, 1), (3, 3), (4, 4)])),
            PrintedFactor("A3", 6, 7, _embed(a3, 5)),
            PrintedFactor("S2", 7, 9, _perm(5, [(0, 2), (1, 1), (2, 0), (3, 3), (4, 4)])),
            PrintedFactor("A0'", 9, 10, a0p),
        ]
    raise UnsupportedDimensionError(f"no Walsh-Hadamard recipe for n={n}")


def diagnose_walsh(n: int, tol: float = 1e-10) -> str | None:
    """Name the first factor group of ``recipe_walsh(n)`` that disagrees with its entry form.

    Each group is also checked for unitarity. Returns ``None`` if every group
    matches.
    """
    seq = recipe_walsh(n).sequence
    for pf in printed_walsh_factors(n):
        part = compose_sequence(FactorSequence(n, seq.factors[pf.start:pf.stop]))
        err = max_abs_diff(part, pf.expected)
        if err > tol or unitary_error(part) > tol:
            return f"{pf.label} (factors {pf.start}..{pf.stop - 1}): max deviation {err:.3e}"
    return None
