"""Compare conventions for the weighted-complexity integrand on generated networks.

The library integrates over thresholds of weights normalised to sum to one,
adding the lightest links first.  This script also evaluates normalising by
the largest weight, and adding the heaviest links first, to show how much the
reported numbers depend on that choice.

    python scripts/weighting_variants.py --m 1 --seeds 3 --samples 100
"""

import argparse
import math
import statistics

from netcomplexity.automorphism import AutTracker, log2_factorial, log2_int
from netcomplexity.complexity import prefix_bits
from netcomplexity.generators import preferential_attachment
from netcomplexity.neutral import replica_seed, shuffle_links

VARIANTS = {
    "sum/lightest-first": ("sum", False),
    "max/lightest-first": ("max", False),
    "max/heaviest-first": ("max", True),
    "sum/heaviest-first": ("sum", True),
}


def integral(net, scale, heaviest_first):
    links = net.links()
    total = sum(w for *_, w in links) if scale == "sum" else max(w for *_, w in links)
    links = sorted(((u, v, w / total) for u, v, w in links), key=lambda x: x[2], reverse=heaviest_first)
    n, L = net.n, net.slot_count
    prefix, log2_nfact = prefix_bits(n, L), log2_factorial(n)
    tracker, binom = AutTracker(n, net.directed), 1

    def current():
        return prefix + log2_int(binom) - (log2_nfact - tracker.log2_order())

    # piecewise-constant integrand on [0, 1]; the partial network between two
    # consecutive weights holds the links already added
    acc, edge = 0.0, (1.0 if heaviest_first else 0.0)
    for l, (u, v, w) in enumerate(links):
        acc += abs(w - edge) * current()
        binom = binom * (L - l) // (l + 1)
        tracker.add_link(u, v)
        edge = w
    acc += (edge if heaviest_first else 1.0 - edge) * current()
    return acc


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--m", type=int, default=1)
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--samples", type=int, default=100)
    args = ap.parse_args()

    print("variant\tseed\tC\texp<lnC>\tsurplus\tsigma")
    for name, (scale, heavy) in VARIANTS.items():
        for seed in range(args.seeds):
            net = preferential_attachment(100, args.m, directed=True, weights="uniform01", seed=seed)
            c = integral(net, scale, heavy)
            lns = [math.log(integral(shuffle_links(net, replica_seed(seed, k)), scale, heavy)) for k in range(args.samples)]
            mu, sd = statistics.mean(lns), statistics.pstdev(lns)
            sigma = abs(math.log(c) - mu) / sd if sd else math.inf
            print(f"{name}\t{seed}\t{c:.1f}\t{math.exp(mu):.1f}\t{c - math.exp(mu):.1f}\t{sigma:.2f}", flush=True)


if __name__ == "__main__":
    main()
