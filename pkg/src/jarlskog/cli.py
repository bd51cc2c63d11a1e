"""Command-line interface.

Subcommands::

    jarlskog gen --gate walsh --n 3 --out w3.json
    jarlskog recipe walsh --n 4 --out f.json
    jarlskog compose f.json [g.json ...] --out m.json
    jarlskog decompose m.json --out f.json
    jarlskog verify a.json b.json [--tol 1e-11]

Exit codes: 0 success, 1 check failed, 2 usage or parse error,
3 unsupported dimension, 4 non-unitary input. Data goes to files, messages
to stderr.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

import numpy as np

from .decomposition import NotUnitaryError, decompose
from .formats import (
    FormatError,
    read_json,
    matrix_from_dict,
    recipe_to_dict,
    sequence_from_dict,
    write_json,
    write_matrix,
    write_sequence,
)
from .gates import GateId, GateKind, gate_matrix
from .matrix import DimensionError, max_abs_diff, unitary_error
from .modules import FactorSequence, compose_sequence
from .synthesis import VERIFY_TOL, UnsupportedDimensionError, diagnose_walsh, recipe_for, verify_recipe

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3
EXIT_NOT_UNITARY = 4

DECOMPOSE_TOL = 1e-9
GATE_NAMES = [k.value for k in GateKind]


class UsageError(Exception):
    pass


def _err(msg: str) -> None:
    print(f"jarlskog: {msg}", file=sys.stderr)


def _g17(x: float) -> str:
    return format(x, ".17g")


def _gate(args) -> GateId:
    name = args.gate_opt or args.gate
    if name is None:
        raise UsageError("a gate name is required (--gate)")
    if name not in GATE_NAMES:
        raise UsageError(f"unknown gate {name!r}; choose from {', '.join(GATE_NAMES)}")
    try:
        return GateId(GateKind(name), args.n, args.a, args.b)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _load_matrix(path: str) -> np.ndarray:
    """Read a matrix file, or compose a factor file."""
    doc = read_json(path)
    if isinstance(doc, dict) and "factors" in doc:
        return compose_sequence(sequence_from_dict(doc))
    return matrix_from_dict(doc)


def cmd_gen(args) -> int:
    gate = _gate(args)
    write_matrix(args.out, gate_matrix(gate))
    return EXIT_OK


def cmd_recipe(args) -> int:
    gate = _gate(args)
    try:
        recipe = recipe_for(gate)
    except UnsupportedDimensionError as exc:
        _err(str(exc))
        return EXIT_UNSUPPORTED
    check = verify_recipe(recipe, args.tol)
    if args.out:
        write_json(args.out, recipe_to_dict(recipe))
    print(f"module_count {recipe.module_count}", file=sys.stderr)
    print(f"verify_error {_g17(check.error)}", file=sys.stderr)
    if not check.passed:
        where = diagnose_walsh(gate.n) if gate.kind is GateKind.WALSH else None
        _err(f"recipe does not reproduce {gate.name}" + (f"; first failing factor: {where}" if where else ""))
        return EXIT_FAILED
    return EXIT_OK


def cmd_compose(args) -> int:
    seqs = [sequence_from_dict(read_json(p)) for p in args.factors]
    n = seqs[0].n
    total = FactorSequence(n)
    for s in seqs:
        if s.n != n:
            raise UsageError(f"factor files mix dimensions {n} and {s.n}")
        total = total + s
    m = compose_sequence(total)
    write_matrix(args.out, m)
    print(f"unitary_error {_g17(unitary_error(m))}", file=sys.stderr)
    return EXIT_OK


def cmd_decompose(args) -> int:
    u = _load_matrix(args.matrix)
    try:
        result = decompose(u)
    except NotUnitaryError as exc:
        _err(f"{exc} (measured unitary_error {_g17(exc.error)})")
        return EXIT_NOT_UNITARY
    write_sequence(args.out, result.sequence, residual=result.residual)
    print(f"residual {_g17(result.residual)}", file=sys.stderr)
    return EXIT_OK if result.residual <= DECOMPOSE_TOL else EXIT_FAILED


def cmd_verify(args) -> int:
    a = _load_matrix(args.a)
    b = _load_matrix(args.b)
    if a.shape != b.shape:
        raise UsageError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    diff = max_abs_diff(a, b)
    print(f"max_abs_diff {_g17(diff)}", file=sys.stderr)
    return EXIT_OK if diff <= args.tol else EXIT_FAILED


def _add_gate_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("gate", nargs="?", help=f"one of {', '.join(GATE_NAMES)}")
    p.add_argument("--gate", dest="gate_opt", help="same as the positional gate name")
    p.add_argument("--n", type=int, required=True, help="qudit dimension")
    p.add_argument("--a", type=int, default=0, help="shift exponent (pauli only)")
    p.add_argument("--b", type=int, default=0, help="clock exponent (pauli only)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jarlskog", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a gate matrix")
    _add_gate_args(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("recipe", help="write the module recipe for a gate")
    _add_gate_args(p)
    p.add_argument("--out")
    p.add_argument("--tol", type=float, default=VERIFY_TOL)
    p.set_defaults(func=cmd_recipe)

    p = sub.add_parser("compose", help="multiply factor files left to right")
    p.add_argument("factors", nargs="+")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("decompose", help="factor a unitary matrix into modules")
    p.add_argument("matrix")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="compare two matrix or factor files")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--tol", type=float, default=VERIFY_TOL)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FormatError, DimensionError) as exc:
        _err(str(exc))
        return EXIT_USAGE
    except (OSError, ValueError) as exc:
        _err(str(exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
