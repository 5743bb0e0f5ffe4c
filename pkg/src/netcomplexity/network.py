"""Network data model shared by every measure in the package.

Nodes are dense 0-based integers.  Links carry a positive weight; undirected
links are stored once, as ``(min, max)``.  Parallel links never exist.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator

import numpy as np

DENSE_FRACTION = 0.9


class NetworkError(ValueError):
    """Raised when a network operation would break a structural invariant."""


def slot_count(n: int, directed: bool, allow_self_loops: bool) -> int:
    """Maximum number of links a network of this kind can hold."""
    if directed:
        return n * n if allow_self_loops else n * (n - 1)
    return n * (n + 1) // 2 if allow_self_loops else n * (n - 1) // 2


def _tri_row(r: int, n: int, diag: bool) -> int:
    # largest u with start(u) <= r, where row u holds n - u (diag) or n - u - 1 slots
    def start(u: int) -> int:
        return u * (2 * n - u + (1 if diag else -1)) // 2

    b = 2 * n + (1 if diag else -1)
    u = int((b - math.sqrt(max(b * b - 8 * r, 0))) / 2)
    u = min(max(u, 0), n - 1)
    while u > 0 and start(u) > r:
        u -= 1
    while u + 1 < n and start(u + 1) <= r:
        u += 1
    return u


def decode_slot(r: int, n: int, directed: bool, allow_self_loops: bool) -> tuple[int, int]:
    """Map a slot rank in ``[0, L)`` to its ``(source, target)`` pair, in the
    same row-major order as :meth:`Network.slots`."""
    if directed:
        if allow_self_loops:
            return divmod(r, n)
        u, j = divmod(r, n - 1)
        return u, j + (j >= u)
    u = _tri_row(r, n, allow_self_loops)
    offset = r - u * (2 * n - u + (1 if allow_self_loops else -1)) // 2
    return u, u + offset + (0 if allow_self_loops else 1)


def draw_slots(rng: np.random.Generator, n: int, directed: bool, loops: bool, L: int, l: int) -> list[tuple[int, int]]:
    """Ranks of ``l`` distinct uniformly random slots, decoded to pairs.

    Sparse draws resample on collision; beyond ``DENSE_FRACTION`` of the slots
    an exact sample without replacement is taken instead.
    """
    if l > L:
        raise NetworkError(f"{l} links do not fit in {L} slots")
    if l > DENSE_FRACTION * L:
        ranks = rng.choice(L, size=l, replace=False).tolist()
    else:
        taken: set[int] = set()
        ranks = []
        for _ in range(l):
            r = int(rng.integers(L))
            while r in taken:
                r = int(rng.integers(L))
            taken.add(r)
            ranks.append(r)
    return [decode_slot(r, n, directed, loops) for r in ranks]


class Network:
    """A simple (di)graph with positive link weights.

    The building API mutates in place and returns ``self`` so calls chain;
    the analysis functions never mutate their argument.
    """

    __slots__ = ("n", "directed", "allow_self_loops", "_links")

    def __init__(self, n: int, directed: bool = False, allow_self_loops: bool = False):
        if n < 1:
            raise NetworkError(f"node count must be positive, got {n}")
        self.n = int(n)
        self.directed = bool(directed)
        self.allow_self_loops = bool(allow_self_loops)
        self._links: dict[tuple[int, int], float] = {}

    # -- construction -----------------------------------------------------

    def _key(self, u: int, v: int) -> tuple[int, int]:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise NetworkError(f"node index out of range: ({u}, {v}) with n={self.n}")
        if not self.directed and u > v:
            return v, u
        return u, v

    def add_link(self, u: int, v: int, w: float = 1.0) -> "Network":
        key = self._key(u, v)
        if u == v and not self.allow_self_loops:
            raise NetworkError(f"self-loop on node {u} not allowed")
        if not w > 0:
            raise NetworkError(f"link weight must be positive, got {w}")
        if key in self._links:
            raise NetworkError(f"duplicate link {key}")
        self._links[key] = float(w)
        return self

    def add_links(self, links: Iterable[tuple]) -> "Network":
        for link in links:
            self.add_link(*link)
        return self

    def copy(self) -> "Network":
        out = Network(self.n, self.directed, self.allow_self_loops)
        out._links = dict(self._links)
        return out

    def _like(self) -> "Network":
        return Network(self.n, self.directed, self.allow_self_loops)

    # -- queries ----------------------------------------------------------

    @property
    def slot_count(self) -> int:
        return slot_count(self.n, self.directed, self.allow_self_loops)

    @property
    def n_links(self) -> int:
        return len(self._links)

    def __len__(self) -> int:
        return len(self._links)

    def has_link(self, u: int, v: int) -> bool:
        return self._key(u, v) in self._links

    def weight(self, u: int, v: int) -> float:
        return self._links[self._key(u, v)]

    def links(self) -> list[tuple[int, int, float]]:
        """Links as ``(source, target, weight)`` sorted by endpoints."""
        return [(u, v, w) for (u, v), w in sorted(self._links.items())]

    def pairs(self) -> Iterator[tuple[int, int]]:
        return iter(self._links)

    def weights(self) -> list[float]:
        return list(self._links.values())

    def is_unit_weighted(self) -> bool:
        return all(w == 1.0 for w in self._links.values())

    def self_loops(self) -> list[int]:
        return sorted(u for u, v in self._links if u == v)

    def slots(self) -> Iterator[tuple[int, int]]:
        """Every admissible ``(source, target)`` slot in canonical order."""
        n = self.n
        for u in range(n):
            if self.directed:
                for v in range(n):
                    if u != v or self.allow_self_loops:
                        yield u, v
            else:
                for v in range(u if self.allow_self_loops else u + 1, n):
                    yield u, v

    def structure(self) -> frozenset[tuple[int, int]]:
        return frozenset(self._links)

    def same_structure(self, other: "Network") -> bool:
        return (
            self.n == other.n
            and self.directed == other.directed
            and self.allow_self_loops == other.allow_self_loops
            and self.structure() == other.structure()
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Network):
            return NotImplemented
        return self.same_structure(other) and self._links == other._links

    __hash__ = None  # mutable during building

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        loops = ", self-loops" if self.allow_self_loops else ""
        return f"Network(n={self.n}, {kind}{loops}, links={len(self._links)})"

    # -- derived networks -------------------------------------------------

    def complement(self) -> "Network":
        """Unit-weight network holding exactly the free slots of ``self``."""
        out = self._like()
        out._links = {s: 1.0 for s in self.slots() if s not in self._links}
        return out

    def threshold(self, t: float) -> "Network":
        """Keep only the links of weight ``<= t``; the node set is unchanged."""
        out = self._like()
        out._links = {k: w for k, w in self._links.items() if w <= t}
        return out

    def normalized(self) -> "Network":
        """Copy with weights rescaled to sum to one."""
        if not self._links:
            raise NetworkError("cannot normalise the weights of a network with no links")
        total = sum(self._links.values())
        out = self._like()
        out._links = {k: w / total for k, w in self._links.items()}
        return out

    def unit_weighted(self) -> "Network":
        out = self._like()
        out._links = dict.fromkeys(self._links, 1.0)
        return out

    def relabeled(self, perm: list[int]) -> "Network":
        """Image of the network under the node map ``i -> perm[i]``."""
        out = self._like()
        for (u, v), w in self._links.items():
            out.add_link(perm[u], perm[v], w)
        return out


def new_network(n: int, directed: bool = False, allow_self_loops: bool = False) -> Network:
    return Network(n, directed, allow_self_loops)


def add_link(net: Network, u: int, v: int, w: float = 1.0) -> Network:
    return net.add_link(u, v, w)


def complement(net: Network) -> Network:
    return net.complement()


def threshold_subnetwork(net: Network, t: float) -> Network:
    return net.threshold(t)


def normalize_weights(net: Network) -> Network:
    return net.normalized()


def from_links(
    n: int,
    links: Iterable[tuple],
    directed: bool = False,
    allow_self_loops: bool = False,
) -> Network:
    """Build a network from ``(u, v)`` or ``(u, v, w)`` tuples."""
    return Network(n, directed, allow_self_loops).add_links(links)
