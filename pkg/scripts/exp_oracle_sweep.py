"""Closed-form block exponential against the truncated Taylor series, binned by |z|."""

import argparse

import numpy as np

from jarlskog.matrix import mat_exp_series, max_abs_diff
from jarlskog.modules import exp_skew_block, skew_block_generator


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=2000)
    parser.add_argument("--terms", type=int, default=64)
    parser.add_argument("--max-norm", type=float, default=np.pi)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    edges = np.linspace(0, args.max_norm, 5)
    worst = np.zeros(len(edges) - 1)
    for _ in range(args.samples):
        n = int(rng.integers(2, 9))
        j = int(rng.integers(2, n + 1))
        z = rng.standard_normal(j - 1) + 1j * rng.standard_normal(j - 1)
        r = rng.uniform(0, args.max_norm)
        z *= r / np.linalg.norm(z)
        err = max_abs_diff(exp_skew_block(n, j, z), mat_exp_series(skew_block_generator(n, j, z), args.terms))
        b = min(np.searchsorted(edges, r, side="right") - 1, len(worst) - 1)
        worst[b] = max(worst[b], err)
    for lo, hi, w in zip(edges[:-1], edges[1:], worst):
        print(f"|z| in [{lo:.2f}, {hi:.2f}): max err {w:.2e}")


if __name__ == "__main__":
    main()
