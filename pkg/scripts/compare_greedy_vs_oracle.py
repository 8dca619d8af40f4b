"""Compare the exact engine and plus-first greedy branching against the oracle.

For each parameter set, random sequences are scanned once by the oracle up to
k_max; every k in 0..k_max is then checked against both fast variants.
"""

import argparse
import time

from kerrlc.klc import k_error_lc
from kerrlc.oracle import brute_force_klc
from kerrlc.params import validate_params
from kerrlc.sequence import random_sequence

# (p, n, q), sequence count, k_max
DEFAULT_GRID = [
    ((3, 1, 5), 200, 6),
    ((5, 1, 3), 100, 3),
    ((3, 2, 5), 50, 2),
    ((7, 1, 3), 60, 3),
    ((3, 1, 11), 40, 3),
    ((5, 1, 7), 30, 2),
]


def run(grid, seed0, jobs, show):
    for pnq, count, k_max in grid:
        params = validate_params(*pnq)
        start = time.perf_counter()
        exact_bad = greedy_bad = cases = 0
        for seed in range(seed0, seed0 + count):
            s = random_sequence(params, seed)
            oracle = brute_force_klc(s, k_max, parallelism=jobs, max_spot=1)
            for k in range(k_max + 1):
                truth = min(oracle.per_weight[: k + 1])
                exact = k_error_lc(s, k)[0]
                greedy = k_error_lc(s, k, greedy=True)[0]
                cases += 1
                exact_bad += exact != truth
                if greedy != truth:
                    greedy_bad += 1
                    if greedy_bad <= show:
                        print(f"  greedy miss {params} seed={seed} k={k}: greedy {greedy}, true {truth}")
        print(
            f"{params}: {cases} cases, exact mismatches {exact_bad}, "
            f"greedy mismatches {greedy_bad} ({time.perf_counter() - start:.1f} s)"
        )


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--show", type=int, default=2, help="greedy misses to print per set")
    ap.add_argument("--quick", action="store_true", help="first three sets, 20 sequences each")
    args = ap.parse_args()
    grid = [(pnq, 20, k) for pnq, _, k in DEFAULT_GRID[:3]] if args.quick else DEFAULT_GRID
    run(grid, args.seed, args.jobs, args.show)


if __name__ == "__main__":
    main()
