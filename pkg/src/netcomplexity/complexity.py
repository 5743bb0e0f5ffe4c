"""Information-content complexity of networks.

``C = prefix + log2(Omega) - log2(omega)`` where the prefix encodes node and
link counts, ``Omega = binom(L, l)`` counts linklists with ``l`` of ``L``
slots filled, and ``omega = n! / |Aut|`` counts the labellings of the same
unlabelled graph.  All logarithms of factorials and binomials are taken of
exact integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import groupby
from typing import Iterator

import numpy as np

from .automorphism import AutTracker, aut_order, log2_factorial, log2_int
from .network import Network, NetworkError


@dataclass(frozen=True)
class ComplexityReport:
    nodes: int
    links: int
    slots: int
    prefix_bits: int
    log2_omega_linklists: float
    log2_renumberings: float
    total_bits: float
    ceil_variant: bool = False
    labelled_variant: bool = False


@dataclass(frozen=True)
class MAResult:
    mutual_information: float
    entropy: float
    ma: float


def ceil_log2(x: int) -> int:
    """Exact ``ceil(log2 x)``, taken as 0 for ``x <= 1``."""
    return 0 if x <= 1 else (x - 1).bit_length()


def prefix_bits(n: int, slots: int) -> int:
    if n < 1:
        raise ValueError("node count must be positive")
    return 2 * ceil_log2(n) + ceil_log2(slots) + 1


def log2_binomial(L: int, l: int) -> float:
    if not 0 <= l <= L:
        raise ValueError(f"need 0 <= l <= L, got l={l}, L={L}")
    return log2_int(math.comb(L, l))


def complexity(net: Network, ceil: bool = False, budget: int | None = None) -> ComplexityReport:
    """Complexity of the link structure of ``net``; weights are ignored."""
    n, L, l = net.n, net.slot_count, net.n_links
    prefix = prefix_bits(n, L)
    omega = math.comb(L, l)
    payload = float(ceil_log2(omega)) if ceil else log2_int(omega)
    renumberings = log2_int(math.factorial(n) // aut_order(net, budget).order)
    return ComplexityReport(
        nodes=n,
        links=l,
        slots=L,
        prefix_bits=prefix,
        log2_omega_linklists=payload,
        log2_renumberings=renumberings,
        total_bits=prefix + payload - renumberings,
        ceil_variant=ceil,
    )


def labelled_complexity(net: Network) -> ComplexityReport:
    """Labelled-node variant: no renumbering discount, ceiled payload.

    The slot count follows the network's own policy, so a directed network
    with self-loops allowed gives ``L = n**2``.
    """
    n, L, l = net.n, net.slot_count, net.n_links
    prefix = prefix_bits(n, L)
    payload = ceil_log2(math.comb(L, l))
    return ComplexityReport(
        nodes=n,
        links=l,
        slots=L,
        prefix_bits=prefix,
        log2_omega_linklists=float(payload),
        log2_renumberings=0.0,
        total_bits=float(prefix + payload),
        ceil_variant=True,
        labelled_variant=True,
    )


def partial_complexities(
    net: Network, ceil: bool = False, budget: int | None = None
) -> Iterator[tuple[float, float, float]]:
    """Steps of the weighted-complexity integrand.

    Yields ``(start, stop, C)``: on ``[start, stop)`` the integrand is the
    complexity of the network holding the links of normalised weight
    ``<= start``.  Links of equal weight enter together; the node set never
    changes, so isolated nodes still count towards the automorphism group.
    """
    if net.n_links == 0:
        raise NetworkError("weighted complexity needs at least one link")
    norm = net.normalized()
    n, L = net.n, net.slot_count
    prefix = prefix_bits(n, L)
    log2_nfact = log2_factorial(n)
    tracker = AutTracker(n, net.directed, budget)
    binom = 1
    l = 0

    def current() -> float:
        payload = float(ceil_log2(binom)) if ceil else log2_int(binom)
        return prefix + payload - (log2_nfact - tracker.log2_order())

    ordered = sorted(norm.links(), key=lambda link: link[2])
    start = 0.0
    for w, group in groupby(ordered, key=lambda link: link[2]):
        yield start, w, current()
        for u, v, _ in group:
            binom = binom * (L - l) // (l + 1)
            l += 1
            tracker.add_link(u, v)
        start = w
    yield start, 1.0, current()


def weighted_complexity(net: Network, ceil: bool = False, budget: int | None = None) -> float:
    """Integral over ``w`` in [0, 1] of the complexity of the partial network
    of links lighter than ``w``, with weights normalised to sum to one."""
    return math.fsum(
        (stop - start) * c for start, stop, c in partial_complexities(net, ceil, budget) if stop > start
    )


def medium_articulation(net: Network, base: float = 2.0) -> MAResult:
    """Medium articulation of the normalised flow matrix.

    With ``r_i`` the row sums and ``c_j`` the column sums,
    ``I = sum w_ij log(w_ij / (r_i c_j))`` and ``H = -sum w_ij log w_ij``;
    the measure is ``I * (H - I)``.  Undirected links fill both matrix
    entries.  ``base`` is the logarithm base (2 gives square bits).
    """
    if net.n_links == 0:
        raise NetworkError("medium articulation needs at least one link")
    src, dst, wts = [], [], []
    for u, v, w in net.links():
        src.append(u)
        dst.append(v)
        wts.append(w)
        if not net.directed and u != v:
            src.append(v)
            dst.append(u)
            wts.append(w)
    i = np.asarray(src)
    j = np.asarray(dst)
    w = np.asarray(wts, dtype=float)
    w /= w.sum()
    row = np.bincount(i, weights=w, minlength=net.n)
    col = np.bincount(j, weights=w, minlength=net.n)
    scale = 1.0 / math.log(base)
    mutual = float(np.sum(w * np.log(w / (row[i] * col[j])))) * scale
    entropy = float(-np.sum(w * np.log(w))) * scale
    return MAResult(mutual, entropy, mutual * (entropy - mutual))
