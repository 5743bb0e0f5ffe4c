"""Random network models: fixed-size Erdos-Renyi and preferential attachment."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .network import Network, NetworkError, draw_slots, slot_count

WeightModel = Literal["unit", "uniform01", "normal_mean0"]
WEIGHT_MODELS = ("unit", "uniform01", "normal_mean0")


def draw_weights(rng: np.random.Generator, model: str, size: int) -> list[float]:
    """Positive link weights.  ``uniform01`` lies in (0, 1); ``normal_mean0``
    gives the magnitudes of standard normal draws."""
    if model == "unit":
        return [1.0] * size
    if model == "uniform01":
        draw = rng.random
    elif model == "normal_mean0":
        def draw():
            return abs(rng.normal())
    else:
        raise ValueError(f"unknown weight model {model!r}")
    out = []
    for _ in range(size):
        w = draw()
        while w == 0.0:
            w = draw()
        out.append(float(w))
    return out


def erdos_renyi(
    n: int,
    l: int,
    directed: bool = False,
    weights: WeightModel = "unit",
    seed: int = 0,
) -> Network:
    """G(n, l): exactly ``l`` distinct slots chosen uniformly, no self-loops."""
    L = slot_count(n, directed, False)
    if not 0 <= l <= L:
        raise NetworkError(f"{l} links do not fit in {L} slots")
    rng = np.random.default_rng(seed)
    net = Network(n, directed)
    pairs = draw_slots(rng, n, directed, False, L, l)
    for (u, v), w in zip(pairs, draw_weights(rng, weights, l)):
        net.add_link(u, v, w)
    return net


def preferential_attachment(
    n: int,
    m: int,
    directed: bool = True,
    weights: WeightModel = "uniform01",
    seed: int = 0,
    seed_nodes: int | None = None,
    seed_clique: bool = False,
    duplicates: Literal["resample", "merge"] = "resample",
) -> Network:
    """Grow a network by attaching each new node to ``m`` existing nodes.

    Targets are drawn with probability proportional to total degree + 1, so
    isolated seed nodes can be reached.  Links point from the new node to
    its targets.  Growth starts from ``seed_nodes`` nodes (default ``m``),
    optionally joined into a clique.  With ``duplicates="resample"`` every new
    node gets ``min(m, existing)`` distinct targets; with ``"merge"`` the
    ``m`` draws are made with replacement and repeats collapse into one link.
    """
    if m < 1 or n <= m:
        raise NetworkError(f"need 1 <= m < n, got m={m}, n={n}")
    if duplicates not in ("resample", "merge"):
        raise ValueError(f"unknown duplicate policy {duplicates!r}")
    start = m if seed_nodes is None else seed_nodes
    if not 1 <= start <= n:
        raise NetworkError(f"seed node count {start} out of range")
    rng = np.random.default_rng(seed)
    net = Network(n, directed)
    degree = np.zeros(n)
    if seed_clique:
        for u in range(start):
            for v in range(u):
                net.add_link(u, v, draw_weights(rng, weights, 1)[0])
                degree[u] += 1
                degree[v] += 1
    for t in range(start, n):
        p = degree[:t] + 1.0
        p /= p.sum()
        if duplicates == "resample":
            targets = rng.choice(t, size=min(m, t), replace=False, p=p)
        else:
            targets = np.unique(rng.choice(t, size=m, replace=True, p=p))
        for v in targets.tolist():
            net.add_link(t, v, draw_weights(rng, weights, 1)[0])
            degree[t] += 1
            degree[v] += 1
    return net


@dataclass(frozen=True)
class GeneratorSpec:
    model: Literal["erdos_renyi", "preferential_attachment"]
    n: int
    l_or_m: int
    directed: bool = False
    weight_model: WeightModel = "unit"
    seed: int = 0

    def build(self) -> Network:
        if self.model == "erdos_renyi":
            return erdos_renyi(self.n, self.l_or_m, self.directed, self.weight_model, self.seed)
        if self.model == "preferential_attachment":
            return preferential_attachment(
                self.n, self.l_or_m, self.directed, self.weight_model, self.seed
            )
        raise ValueError(f"unknown model {self.model!r}")
