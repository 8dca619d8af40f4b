"""Average k-error linear complexity profile of random sequences.

Prints one row per k with the mean and minimum over the sampled sequences,
normalised by the period.
"""

import argparse

import numpy as np

from kerrlc.klc import k_error_lc
from kerrlc.params import validate_params
from kerrlc.sequence import random_sequence


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=5)
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--q", type=int, default=3)
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--max-k", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    params = validate_params(args.p, args.n, args.q)
    values = np.array(
        [
            [k_error_lc(random_sequence(params, args.seed + i), k)[0] for k in range(args.max_k + 1)]
            for i in range(args.samples)
        ]
    )
    print(f"# {params} N={params.N} samples={args.samples}")
    print("k\tmean\tmin\tmean/N")
    for k, column in enumerate(values.T):
        print(f"{k}\t{column.mean():.2f}\t{column.min()}\t{column.mean() / params.N:.3f}")


if __name__ == "__main__":
    main()
