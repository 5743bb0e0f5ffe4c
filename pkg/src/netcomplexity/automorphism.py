"""Exact automorphism group orders.

The order is assembled in three layers, each exact:

1. Weakly connected components.  ``|Aut(G)|`` is the product, over
   isomorphism classes of components, of ``|Aut(C)|**m * m!``.
2. Tree peeling.  Pendant trees are folded into canonical rooted codes
   (AHU style, with link direction and self-loop marks), so trees are
   solved outright and cyclic components shrink to a vertex-coloured 2-core.
3. Individualization-refinement on the core: label-invariant counting
   refinement, a first path to a discrete leaf, and an orbit-stabilizer
   tower whose generators are found by searching sibling subtrees for a
   leaf equivalent to the first one.

Dense graphs are complemented first; the complement has the same group.
Self-loops are treated as a vertex colour.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .network import Network


class ResourceError(RuntimeError):
    """A computation hit an explicit resource limit."""


class SearchBudgetExceeded(ResourceError):
    pass


@dataclass(frozen=True)
class AutResult:
    order: int
    generators_found: int
    nodes_searched: int

    @property
    def log2_order(self) -> float:
        return log2_int(self.order)


def log2_int(x: int) -> float:
    """log2 of a positive integer of any size.

    CPython's ``math.log2`` scales big ints by their bit length before taking
    the float logarithm, so the result is accurate to a few ulps.
    """
    if x <= 0:
        raise ValueError("log2 of a non-positive integer")
    return math.log2(x)


@lru_cache(maxsize=None)
def log2_factorial(m: int) -> float:
    return log2_int(math.factorial(m))


# ---------------------------------------------------------------------------
# coloured digraph used internally


class _Digraph:
    """Vertex-coloured simple digraph on ``0..k-1`` without loop arcs."""

    __slots__ = ("k", "colour", "succ", "pred", "succ_l", "pred_l", "narcs", "symmetric")

    def __init__(self, colour: list[int], succ: list[set[int]], symmetric: bool):
        k = len(colour)
        self.k = k
        self.colour = colour
        self.succ = succ
        self.symmetric = symmetric
        if symmetric:
            self.pred = succ
        else:
            pred: list[set[int]] = [set() for _ in range(k)]
            for u in range(k):
                for v in succ[u]:
                    pred[v].add(u)
            self.pred = pred
        self.succ_l = [list(s) for s in succ]
        self.pred_l = self.succ_l if symmetric else [list(s) for s in self.pred]
        self.narcs = sum(len(s) for s in succ)

    @classmethod
    def from_network(cls, net: Network) -> "_Digraph":
        n = net.n
        colour = [0] * n
        succ: list[set[int]] = [set() for _ in range(n)]
        for u, v in net.pairs():
            if u == v:
                colour[u] = 1
            else:
                succ[u].add(v)
                if not net.directed:
                    succ[v].add(u)
        return cls(colour, succ, not net.directed)

    def complement(self) -> "_Digraph":
        k = self.k
        every = set(range(k))
        succ = [every - self.succ[u] - {u} for u in range(k)]
        return _Digraph(list(self.colour), succ, self.symmetric)

    def induced(self, verts: list[int]) -> "_Digraph":
        index = {v: i for i, v in enumerate(verts)}
        succ = [{index[w] for w in self.succ[v] if w in index} for v in verts]
        return _Digraph([self.colour[v] for v in verts], succ, self.symmetric)

    def components(self) -> list[list[int]]:
        seen = [False] * self.k
        comps = []
        for s in range(self.k):
            if seen[s]:
                continue
            seen[s] = True
            stack = [s]
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in itertools.chain(self.succ_l[v], self.pred_l[v]):
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_dense(self) -> bool:
        return 2 * self.narcs > self.k * (self.k - 1)


# ---------------------------------------------------------------------------
# partition refinement


class _State:
    __slots__ = ("lab", "cellof", "size", "ncells", "trace")

    def __init__(self, lab, cellof, size, ncells, trace):
        self.lab = lab
        self.cellof = cellof
        self.size = size
        self.ncells = ncells
        self.trace = trace

    @property
    def invariant(self):
        return self.ncells, self.trace

    def first_nonsingleton(self) -> int:
        pos = 0
        size = self.size
        k = len(self.lab)
        while pos < k:
            if size[pos] > 1:
                return pos
            pos += size[pos]
        return -1


def _refine(g: _Digraph, lab, cellof, size, queue: list[int], ncells: int, trace: list):
    """Counting refinement; every decision depends only on cell positions
    and neighbour counts, so the outcome is isomorphism-equivariant."""
    k = g.k
    inq = set(queue)
    pred_l, succ_l = g.pred_l, g.succ_l
    sym = g.symmetric
    stride = k + 1
    qi = 0
    while qi < len(queue) and ncells < k:
        s = queue[qi]
        qi += 1
        inq.discard(s)
        cnt: dict[int, int] = {}
        get = cnt.get
        for y in lab[s : s + size[s]]:
            for x in pred_l[y]:
                cnt[x] = get(x, 0) + 1
            if not sym:
                for x in succ_l[y]:
                    cnt[x] = get(x, 0) + stride
        touched: dict[int, list[int]] = {}
        for x in cnt:
            c = cellof[x]
            if size[c] > 1:
                touched.setdefault(c, []).append(x)
        for c in sorted(touched):
            z = size[c]
            tv = touched[c]
            groups: dict[int, list[int]] = {}
            for x in tv:
                groups.setdefault(cnt[x], []).append(x)
            if len(tv) < z:
                tvs = set(tv)
                groups[0] = [x for x in lab[c : c + z] if x not in tvs]
            if len(groups) == 1:
                continue
            keys = sorted(groups)
            pos = c
            starts = []
            for key in keys:
                grp = groups[key]
                start = pos
                starts.append(start)
                size[start] = len(grp)
                for x in grp:
                    lab[pos] = x
                    cellof[x] = start
                    pos += 1
            ncells += len(keys) - 1
            trace.append((s, c, tuple(keys), tuple(len(groups[key]) for key in keys)))
            if c in inq:
                add = starts[1:]
            else:
                big = max(starts, key=lambda p: (size[p], -p))
                add = [p for p in starts if p != big]
            for p in add:
                if p not in inq:
                    inq.add(p)
                    queue.append(p)
    return ncells


def _root_state(g: _Digraph) -> _State:
    k = g.k
    order = sorted(range(k), key=lambda v: g.colour[v])
    lab = order
    cellof = [0] * k
    size = [0] * k
    queue = []
    head = []
    pos = 0
    for colour, grp in itertools.groupby(order, key=lambda v: g.colour[v]):
        members = list(grp)
        queue.append(pos)
        head.append((colour, len(members)))
        size[pos] = len(members)
        for v in members:
            cellof[v] = pos
        pos += len(members)
    trace: list = [tuple(head), g.narcs]
    ncells = _refine(g, lab, cellof, size, queue, len(queue), trace)
    return _State(lab, cellof, size, ncells, tuple(trace))


def _individualize(g: _Digraph, st: _State, v: int) -> _State:
    lab = st.lab[:]
    cellof = st.cellof[:]
    size = st.size[:]
    c = cellof[v]
    z = size[c]
    i = lab.index(v, c, c + z)
    lab[c], lab[i] = lab[i], lab[c]
    size[c] = 1
    size[c + 1] = z - 1
    for x in lab[c + 1 : c + z]:
        cellof[x] = c + 1
    trace: list = [c]
    ncells = _refine(g, lab, cellof, size, [c], st.ncells + 1, trace)
    return _State(lab, cellof, size, ncells, tuple(trace))


class _FirstPath:
    """Leftmost root-to-leaf path: at each level the first non-singleton
    cell is the target and its lowest-index vertex is individualized."""

    __slots__ = ("g", "states", "targets", "chosen", "leaf")

    def __init__(self, g: _Digraph):
        self.g = g
        st = _root_state(g)
        self.states = [st]
        self.targets = []
        self.chosen = []
        while True:
            c = st.first_nonsingleton()
            if c < 0:
                break
            v = min(st.lab[c : c + st.size[c]])
            self.targets.append(c)
            self.chosen.append(v)
            st = _individualize(g, st, v)
            self.states.append(st)
        self.leaf = st.lab

    @property
    def depth(self) -> int:
        return len(self.targets)

    @property
    def root_invariant(self):
        return self.states[0].invariant


class _Solver:
    """Holds the code tables and component registry for one run."""

    def __init__(self, budget: int | None = None):
        self.budget = budget
        self.nodes = 0
        self.generators = 0
        self._codes: dict[tuple, int] = {}
        self._code_aut: dict[int, int] = {}
        self._registry: dict[tuple, list[tuple[_FirstPath, int]]] = {}

    # -- helpers -----------------------------------------------------------

    def _intern(self, key: tuple) -> int:
        code = self._codes.get(key)
        if code is None:
            code = self._codes[key] = len(self._codes) + 2
        return code

    def _tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise SearchBudgetExceeded(f"automorphism search exceeded {self.budget} nodes")

    # -- public entry points -------------------------------------------------

    def order(self, g: _Digraph) -> int:
        if g.k > 1 and g.is_dense():
            g = g.complement()
        counts: Counter = Counter()
        auts: dict = {}
        for comp in g.components():
            key, aut = self.component_class(g.induced(comp) if len(comp) < g.k else g)
            counts[key] += 1
            auts[key] = aut
        total = 1
        for key, m in counts.items():
            total *= auts[key] ** m * math.factorial(m)
        return total

    def component_class(self, g: _Digraph) -> tuple[tuple, int]:
        """Isomorphism-class key and group order of a weakly connected graph."""
        k = g.k
        if k == 1:
            return ("v", g.colour[0]), 1
        succ = g.succ
        nb = [set(g.succ_l[v]) | set(g.pred_l[v]) for v in range(k)] if not g.symmetric else succ
        deg = [len(s) for s in nb]
        n_edges = sum(deg) // 2
        tree = n_edges == k - 1
        removed = [False] * k
        children: list[list[tuple[int, int]]] = [[] for _ in range(k)]
        code = [0] * k
        layer = [v for v in range(k) if deg[v] == 1]
        remaining = k
        code_aut = self._code_aut
        while layer and (not tree or remaining > 2):
            for v in layer:
                code[v] = self._rooted(g.colour[v], children[v])
                removed[v] = True
            nxt = []
            for v in layer:
                for p in nb[v]:
                    if not removed[p]:
                        break
                et = (1 if v in succ[p] else 0) | (2 if p in succ[v] else 0)
                children[p].append((et, code[v]))
                deg[p] -= 1
                if deg[p] == 1:
                    nxt.append(p)
            remaining -= len(layer)
            layer = nxt
        rest = [v for v in range(k) if not removed[v]]
        if tree:
            if len(rest) == 1:
                c = self._rooted(g.colour[rest[0]], children[rest[0]])
                return ("t1", c), code_aut[c]
            a, b = rest
            ca = self._rooted(g.colour[a], children[a])
            cb = self._rooted(g.colour[b], children[b])
            e_ab = (1 if b in succ[a] else 0) | (2 if a in succ[b] else 0)
            e_ba = ((e_ab & 1) << 1) | (e_ab >> 1)
            aut = code_aut[ca] * code_aut[cb]
            if ca == cb and e_ab == e_ba:
                aut *= 2
            return ("t2", min((ca, e_ab, cb), (cb, e_ba, ca))), aut
        hanging = 1
        colours = []
        for v in rest:
            ch = children[v]
            if ch:
                c = self._rooted(g.colour[v], ch)
                hanging *= code_aut[c]
                colours.append(self._intern(("core", c)))
            else:
                colours.append(g.colour[v])
        core = g.induced(rest) if len(rest) < k else g
        if core.colour is not colours:
            core = _Digraph(colours, core.succ, core.symmetric)
        key, aut = self._core_class(core)
        return key, aut * hanging

    def _rooted(self, colour: int, children: list[tuple[int, int]]) -> int:
        children.sort()
        c = self._intern((colour, tuple(children)))
        if c not in self._code_aut:
            aut = 1
            for (_, cc), grp in itertools.groupby(children):
                m = len(list(grp))
                aut *= self._code_aut[cc] ** m * math.factorial(m)
            self._code_aut[c] = aut
        return c

    def _core_class(self, core: _Digraph) -> tuple[tuple, int]:
        dense = core.is_dense()
        h = core.complement() if dense else core
        path = _FirstPath(h)
        rkey = (dense, h.k, h.narcs, tuple(sorted(h.colour)), path.root_invariant)
        reps = self._registry.setdefault(rkey, [])
        for idx, (rep, aut) in enumerate(reps):
            if self._match(rep, h, path.states[0], 0) is not None:
                return ("c", rkey, idx), aut
        aut = self.order(h) if dense else self._tower(path)
        reps.append((path, aut))
        return ("c", rkey, len(reps) - 1), aut

    # -- individualization-refinement search -------------------------------

    def _tower(self, path: _FirstPath) -> int:
        g = path.g
        parent = list(range(g.k))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        order = 1
        for d in range(path.depth - 1, -1, -1):
            st = path.states[d]
            c = path.targets[d]
            cell = sorted(st.lab[c : c + st.size[c]])
            v = path.chosen[d]
            failed: set[int] = set()
            for w in cell:
                if w == v:
                    continue
                rw = find(w)
                if rw == find(v) or rw in failed:
                    continue
                gamma = self._match(path, g, _individualize(g, st, w), d + 1)
                if gamma is None:
                    failed.add(rw)
                    continue
                self.generators += 1
                for x in range(g.k):
                    a, b = find(x), find(gamma[x])
                    if a != b:
                        parent[a] = b
                failed = {find(x) for x in failed}
            rv = find(v)
            order *= sum(1 for x in cell if find(x) == rv)
        return order

    def _match(self, ref: _FirstPath, x: _Digraph, st: _State, depth: int):
        """Search the subtree of ``st`` in ``x`` for a leaf equivalent to the
        leaf of ``ref``; return the isomorphism ref -> x as a list, or None."""
        self._tick()
        if st.invariant != ref.states[depth].invariant:
            return None
        if depth == ref.depth:
            return self._leaf_map(ref, x, st.lab)
        c = ref.targets[depth]
        for u in st.lab[c : c + st.size[c]]:
            gamma = self._match(ref, x, _individualize(x, st, u), depth + 1)
            if gamma is not None:
                return gamma
        return None

    @staticmethod
    def _leaf_map(ref: _FirstPath, x: _Digraph, xlab: list[int]):
        g = ref.g
        gamma = [0] * g.k
        for a, b in zip(ref.leaf, xlab):
            if g.colour[a] != x.colour[b]:
                return None
            gamma[a] = b
        xs = x.succ
        for a in range(g.k):
            image = xs[gamma[a]]
            for b in g.succ_l[a]:
                if gamma[b] not in image:
                    return None
        return gamma


# ---------------------------------------------------------------------------
# public API


def aut_order(net: Network, budget: int | None = None) -> AutResult:
    """Exact order of the automorphism group of ``net`` (weights ignored).

    ``budget`` caps the number of search-tree nodes; exceeding it raises
    :class:`SearchBudgetExceeded` rather than returning a partial answer.
    """
    solver = _Solver(budget)
    order = solver.order(_Digraph.from_network(net))
    return AutResult(order, solver.generators, solver.nodes)


def search_aut_order(net: Network, budget: int | None = None) -> AutResult:
    """Group order from the individualization-refinement tower alone,
    without component splitting, tree peeling or complementing."""
    solver = _Solver(budget)
    order = solver._tower(_FirstPath(_Digraph.from_network(net)))
    return AutResult(order, solver.generators, solver.nodes)


BRUTEFORCE_MAX_N = 10


def aut_order_bruteforce(net: Network) -> AutResult:
    """Count automorphisms by enumerating node permutations.

    Permutations are built one node at a time and abandoned as soon as an
    assigned pair breaks adjacency, which keeps ``n = 10`` tractable without
    changing what is counted.
    """
    n = net.n
    if n > BRUTEFORCE_MAX_N:
        raise ValueError(f"brute force limited to n <= {BRUTEFORCE_MAX_N}, got {n}")
    adj = [[False] * n for _ in range(n)]
    for u, v in net.pairs():
        adj[u][v] = True
        if not net.directed:
            adj[v][u] = True
    image = [0] * n
    used = [False] * n
    count = 0
    explored = 0

    def extend(i: int) -> None:
        nonlocal count, explored
        explored += 1
        if i == n:
            count += 1
            return
        for p in range(n):
            if used[p] or adj[i][i] != adj[p][p]:
                continue
            if all(adj[i][j] == adj[p][image[j]] and adj[j][i] == adj[image[j]][p] for j in range(i)):
                used[p] = True
                image[i] = p
                extend(i + 1)
                used[p] = False

    extend(0)
    return AutResult(count, 0, explored)


def renumbering_count(net: Network, budget: int | None = None) -> int:
    """Distinct labellings of ``net``: ``n! / |Aut|``, exact."""
    return math.factorial(net.n) // aut_order(net, budget).order


def renumbering_count_log2(net: Network, budget: int | None = None) -> float:
    return log2_int(renumbering_count(net, budget))


class AutTracker:
    """Maintains ``log2 |Aut|`` of a graph on fixed nodes as links are added.

    Only the component touched by a new link is re-solved; isomorphism
    classes of components are tracked with multiplicities.
    """

    def __init__(self, n: int, directed: bool, budget: int | None = None):
        self.n = n
        self.directed = directed
        self.solver = _Solver(budget)
        self.colour = [0] * n
        self.succ: list[set[int]] = [set() for _ in range(n)]
        self.pred: list[set[int]] = self.succ if not directed else [set() for _ in range(n)]
        self.comp = list(range(n))
        self.members: dict[int, list[int]] = {i: [i] for i in range(n)}
        iso = ("v", 0)
        self.key = dict.fromkeys(range(n), iso)
        self.counts: Counter = Counter({iso: n})
        self.auts: dict = {iso: 1}

    def add_link(self, u: int, v: int) -> None:
        if u == v:
            self.colour[u] = 1
            root = self.comp[u]
        else:
            self.succ[u].add(v)
            if self.directed:
                self.pred[v].add(u)
            else:
                self.succ[v].add(u)
            root = self._union(self.comp[u], self.comp[v])
        self._resolve(root)

    def _union(self, a: int, b: int) -> int:
        if a == b:
            return a
        if len(self.members[a]) < len(self.members[b]):
            a, b = b, a
        self._drop(b)
        for x in self.members[b]:
            self.comp[x] = a
        self.members[a].extend(self.members.pop(b))
        return a

    def _drop(self, root: int) -> None:
        key = self.key.pop(root)
        self.counts[key] -= 1
        if not self.counts[key]:
            del self.counts[key]

    def _resolve(self, root: int) -> None:
        self._drop(root)
        verts = sorted(self.members[root])
        index = {x: i for i, x in enumerate(verts)}
        succ = [{index[y] for y in self.succ[x]} for x in verts]
        g = _Digraph([self.colour[x] for x in verts], succ, not self.directed)
        key, aut = self.solver.component_class(g)
        self.key[root] = key
        self.counts[key] += 1
        self.auts[key] = aut

    def order(self) -> int:
        total = 1
        for key, m in self.counts.items():
            total *= self.auts[key] ** m * math.factorial(m)
        return total

    def log2_order(self) -> float:
        return math.fsum(
            m * log2_int(self.auts[key]) + log2_factorial(m) for key, m in self.counts.items()
        )
