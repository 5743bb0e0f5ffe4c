"""Link-shuffled null ensembles and the significance of a complexity value.

A replica keeps the node count, the link count and the exact multiset of
weights, but reattaches every link to a uniformly random free slot.  The
ensemble is summarised on the log scale: the geometric mean of the replica
complexities and the spread of ``ln C``.
"""

from __future__ import annotations

import math
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .complexity import complexity, weighted_complexity
from .network import Network, NetworkError, draw_slots

MASK64 = (1 << 64) - 1


def mix64(x: int) -> int:
    """One SplitMix64 step: add the golden-ratio increment, then the
    variant-13 multiply/xor-shift finaliser, modulo 2**64."""
    z = (x + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def replica_seed(seed: int, k: int) -> int:
    return mix64((seed ^ k) & MASK64)


def shuffle_links(net: Network, rng_seed: int) -> Network:
    """Reattach every link of ``net`` to a random unoccupied slot.

    All links are placed against an initially empty slot set; collisions
    are resampled.  Weights travel with the links in canonical link order.
    """
    if net.n_links == 0:
        raise NetworkError("cannot shuffle a network without links")
    rng = np.random.default_rng(rng_seed)
    links = net.links()
    slots = draw_slots(rng, net.n, net.directed, net.allow_self_loops, net.slot_count, len(links))
    out = Network(net.n, net.directed, net.allow_self_loops)
    for (u, v), (_, _, w) in zip(slots, links):
        out.add_link(u, v, w)
    return out


def is_weighted(net: Network) -> bool:
    """A network counts as weighted unless every weight is exactly 1."""
    return not net.is_unit_weighted()


def score(net: Network, weighted: bool, ceil: bool = False) -> float:
    return weighted_complexity(net, ceil) if weighted else complexity(net, ceil).total_bits


@dataclass(frozen=True)
class EnsembleStats:
    samples: int
    ln_c_values: list[float] = field(repr=False)
    mean_ln_c: float
    std_ln_c: float
    geometric_mean_c: float


@dataclass(frozen=True)
class SignificanceReport:
    c_real: float
    surplus: float
    sigma: float


class EnsembleError(RuntimeError):
    """A replica failed; ``partial`` holds the ln C values completed before it."""

    def __init__(self, message: str, partial: list[float]):
        super().__init__(message)
        self.partial = partial


def _replica(args) -> float:
    net, seed, k, weighted, ceil = args
    return math.log(score(shuffle_links(net, replica_seed(seed, k)), weighted, ceil))


def summarize(ln_values: list[float]) -> EnsembleStats:
    """Mean and population standard deviation of ``ln C``.

    ``statistics`` works in exact rationals here, so the result does not
    depend on the order of the values and identical replicas give a
    standard deviation of exactly zero.
    """
    mean = statistics.mean(ln_values)
    std = statistics.pstdev(ln_values, mu=mean)
    return EnsembleStats(len(ln_values), list(ln_values), mean, std, math.exp(mean))


def ensemble_stats(
    net: Network,
    samples: int = 100,
    seed: int = 0,
    weighted: bool | None = None,
    ceil: bool = False,
    workers: int = 1,
) -> EnsembleStats:
    """Score ``samples`` shuffled replicas of ``net``.

    Replica ``k`` uses the seed ``replica_seed(seed, k)``.  ``weighted=None``
    picks the weighted measure unless all weights are 1.
    """
    if samples < 2:
        raise ValueError("an ensemble needs at least 2 samples")
    if weighted is None:
        weighted = is_weighted(net)
    jobs = [(net, seed, k, weighted, ceil) for k in range(samples)]
    values: list[float] = []
    try:
        if workers > 1:
            with ProcessPoolExecutor(workers) as pool:
                for value in pool.map(_replica, jobs, chunksize=max(1, samples // (4 * workers))):
                    values.append(value)
        else:
            for job in jobs:
                values.append(_replica(job))
    except Exception as exc:
        raise EnsembleError(f"replica {len(values)} of {samples} failed: {exc}", values) from exc
    return summarize(values)


def significance(
    net: Network,
    stats: EnsembleStats,
    weighted: bool | None = None,
    ceil: bool = False,
    c_real: float | None = None,
) -> SignificanceReport:
    """Complexity surplus over the ensemble's geometric mean, and its
    distance from the ensemble in standard deviations of ``ln C``."""
    if c_real is None:
        if weighted is None:
            weighted = is_weighted(net)
        c_real = score(net, weighted, ceil)
    surplus = c_real - stats.geometric_mean_c
    if stats.std_ln_c == 0:
        sigma = math.inf
    else:
        sigma = abs(math.log(c_real) - stats.mean_ln_c) / stats.std_ln_c
    return SignificanceReport(c_real, surplus, sigma)


def normal_weight_null(n: int, l: int, seed: int, scale: float = 1.0) -> Network:
    """Random digraph on ``l`` distinct node pairs with normal weights.

    Each weight is drawn from N(0, scale); a negative draw reverses the
    link and the stored weight is its absolute value.
    """
    rng = np.random.default_rng(seed)
    pairs = draw_slots(rng, n, False, False, n * (n - 1) // 2, l)
    draws = rng.normal(0.0, scale, size=l)
    out = Network(n, directed=True)
    for (u, v), w in zip(pairs, draws):
        while w == 0.0:
            w = rng.normal(0.0, scale)
        if w > 0:
            out.add_link(u, v, w)
        else:
            out.add_link(v, u, -w)
    return out
