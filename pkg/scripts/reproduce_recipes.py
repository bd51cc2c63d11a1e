"""Compose every recipe and report module counts and errors against the direct constructors."""

import argparse

from jarlskog.synthesis import (
    diagnose_walsh,
    recipe_k,
    recipe_sigma1,
    recipe_sigma3,
    recipe_walsh,
    verify_recipe,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=16)
    args = parser.parse_args()

    print(f"{'gate':<8}{'n':>4}{'modules':>9}{'error':>12}  product")
    for n in (3, 4, 5):
        r = recipe_walsh(n)
        check = verify_recipe(r)
        print(f"{'walsh':<8}{n:>4}{r.module_count:>9}{check.error:>12.2e}  {r.provenance}")
        where = diagnose_walsh(n)
        if where:
            print(f"    first failing factor group: {where}")
    for build in (recipe_sigma3, recipe_sigma1, recipe_k):
        for n in range(2, args.max_n + 1):
            r = build(n)
            check = verify_recipe(r)
            print(f"{r.target.name:<8}{n:>4}{r.module_count:>9}{check.error:>12.2e}  {r.provenance}")


if __name__ == "__main__":
    main()
