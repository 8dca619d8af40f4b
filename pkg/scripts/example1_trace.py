"""Print the level-by-level trace for the bundled period-50 ternary example."""

import argparse
import json
from pathlib import Path

from kerrlc.klc import k_error_lc
from kerrlc.sequence import parse_sequence

DATA = Path(__file__).resolve().parents[1] / "tests" / "data" / "example1.txt"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=5)
    ap.add_argument("--tables", action="store_true", help="also dump every cost table")
    args = ap.parse_args()

    s = parse_sequence(DATA.read_text())
    value, trace = k_error_lc(s, args.k)
    print(json.dumps(trace.to_dict(s.params), indent=2))
    if args.tables:
        for depth, table in enumerate(trace.tables):
            print(f"\ntable after {depth} level(s), l={table.l}")
            for i in range(table.l):
                print(f"  position {i}:")
                for h0 in range(table.q):
                    print("   ", " ".join(f"{v:3d}" for v in table.entries[i, h0]))
    print(f"\n{args.k}-error linear complexity: {value}")


if __name__ == "__main__":
    main()
