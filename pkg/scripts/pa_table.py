"""Table-style rows for preferential-attachment networks against their shuffled ensembles.

    python scripts/pa_table.py --m 1 --seeds 10 --samples 1000
"""

import argparse
import time

from netcomplexity.generators import preferential_attachment
from netcomplexity.neutral import ensemble_stats, significance


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=100)
    ap.add_argument("--m", type=int, default=1)
    ap.add_argument("--seeds", type=int, default=10)
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--seed-clique", action="store_true")
    ap.add_argument("--duplicates", choices=["resample", "merge"], default="resample")
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    print("seed\tnodes\tlinks\tC\texp<lnC>\tsurplus\tsigma\tseconds")
    for seed in range(args.seeds):
        t0 = time.perf_counter()
        net = preferential_attachment(
            args.n, args.m, directed=True, weights="uniform01", seed=seed,
            seed_clique=args.seed_clique, duplicates=args.duplicates,
        )
        stats = ensemble_stats(net, args.samples, seed, weighted=True, workers=args.workers)
        sig = significance(net, stats, weighted=True)
        print(
            f"{seed}\t{net.n}\t{net.n_links}\t{sig.c_real:.1f}\t{stats.geometric_mean_c:.1f}"
            f"\t{sig.surplus:.1f}\t{sig.sigma:.2f}\t{time.perf_counter() - t0:.0f}",
            flush=True,
        )


if __name__ == "__main__":
    main()
