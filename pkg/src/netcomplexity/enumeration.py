"""Complexity over whole families of small undirected graphs.

A linklist of order ``n`` is identified by its rank: bit ``i`` of the rank
is set when the ``i``-th canonical slot holds a link.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .complexity import complexity
from .network import Network, slot_count

EXHAUSTIVE_MAX_ORDER = 6


def network_from_rank(n: int, rank: int) -> Network:
    net = Network(n)
    for i, (u, v) in enumerate(Network(n).slots()):
        if rank >> i & 1:
            net.add_link(u, v)
    return net


def rank_of(net: Network) -> int:
    index = {s: i for i, s in enumerate(net.slots())}
    return sum(1 << index[p] for p in net.pairs())


def complement_rank(n: int, rank: int) -> int:
    return rank ^ ((1 << slot_count(n, False, False)) - 1)


def enumerate_complexities(
    n: int, sample: int | None = None, seed: int = 0, ceil: bool = False
) -> Iterator[tuple[int, int, float]]:
    """Yield ``(rank, l, C)`` for undirected graphs on ``n`` nodes.

    Without ``sample`` every linklist is visited in rank order, which is only
    allowed up to ``EXHAUSTIVE_MAX_ORDER``.  With ``sample=k``, for each link
    count ``l`` from 0 to ``L`` a total of ``k`` linklists are drawn uniformly
    (with replacement across draws) and visited in draw order.
    """
    L = slot_count(n, False, False)
    if sample is None:
        if n > EXHAUSTIVE_MAX_ORDER:
            raise ValueError(f"exhaustive enumeration is limited to order {EXHAUSTIVE_MAX_ORDER}; pass a sample size")
        for rank in range(1 << L):
            net = network_from_rank(n, rank)
            yield rank, net.n_links, complexity(net, ceil).total_bits
        return
    if sample < 1:
        raise ValueError("sample size must be positive")
    rng = np.random.default_rng(seed)
    for l in range(L + 1):
        for _ in range(sample):
            chosen = rng.choice(L, size=l, replace=False).tolist()
            rank = sum(1 << i for i in chosen)
            yield rank, l, complexity(network_from_rank(n, rank), ceil).total_bits
