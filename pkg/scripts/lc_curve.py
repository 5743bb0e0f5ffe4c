"""Link count against complexity for every (or a sample of) undirected graph of one order.

Writes ``l<TAB>C`` points to stdout and a per-l min/max summary to stderr.

    python scripts/lc_curve.py --order 6 > lc6.tsv
    python scripts/lc_curve.py --order 8 --sample 200 > lc8.tsv
"""

import argparse
import sys
from collections import defaultdict

from netcomplexity.enumeration import enumerate_complexities


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--order", type=int, default=6)
    ap.add_argument("--sample", type=int)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    lo, hi = defaultdict(lambda: float("inf")), defaultdict(lambda: float("-inf"))
    for _, l, c in enumerate_complexities(args.order, args.sample, args.seed):
        print(f"{l}\t{c!r}")
        lo[l], hi[l] = min(lo[l], c), max(hi[l], c)
    for l in sorted(lo):
        print(f"l={l:3d}  min={lo[l]:8.3f}  max={hi[l]:8.3f}", file=sys.stderr)


if __name__ == "__main__":
    main()
