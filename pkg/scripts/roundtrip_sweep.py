"""Decompose Haar-random unitaries and report round-trip residuals per dimension."""

import argparse
import time

import numpy as np

from jarlskog.decomposition import haar_unitary, roundtrip_error


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=16)
    parser.add_argument("--samples", type=int, default=100)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    print(f"{'n':>3}{'median':>12}{'max':>12}{'sec':>8}")
    for n in range(2, args.max_n + 1):
        start = time.perf_counter()
        errs = [roundtrip_error(haar_unitary(n, rng)) for _ in range(args.samples)]
        print(f"{n:>3}{np.median(errs):>12.2e}{max(errs):>12.2e}{time.perf_counter() - start:>8.2f}")


if __name__ == "__main__":
    main()
