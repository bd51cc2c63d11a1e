"""Module parametrization of unitary matrices and qudit gate synthesis."""

from .decomposition import DecompositionResult, NotUnitaryError, decompose, haar_unitary, roundtrip_error
from .gates import (
    GateId,
    GateKind,
    gate_matrix,
    k_matrix,
    pauli_power,
    primitive_root,
    sigma1,
    sigma3,
    walsh,
    walsh_dagger,
)
from .matrix import dagger, mat_exp_series, mat_mul, max_abs_diff, unitary_error
from .modules import (
    BlockModule,
    EulerAngles,
    FactorSequence,
    PhaseModule,
    compose_sequence,
    euler_product,
    euler_u2,
    exp_skew_block,
    make_block_module,
    make_phase_module,
    skew_block_generator,
)
from .synthesis import (
    Recipe,
    UnsupportedDimensionError,
    recipe_for,
    recipe_k,
    recipe_pauli,
    recipe_sigma1,
    recipe_sigma3,
    recipe_walsh,
    verify_recipe,
)

__version__ = "0.1.0"
