import itertools
import random

import pytest
from hypothesis import strategies as st

from netcomplexity.network import Network


def random_network(rng: random.Random, n: int, density: float, directed=False, loops=False, weighted=False):
    net = Network(n, directed, loops)
    for u, v in list(net.slots()):
        if rng.random() < density:
            net.add_link(u, v, rng.uniform(0.01, 1.0) if weighted else 1.0)
    return net


@st.composite
def networks(draw, min_n=1, max_n=7, directed=None, loops=None, weighted=False, min_links=0):
    n = draw(st.integers(min_n, max_n))
    directed = draw(st.booleans()) if directed is None else directed
    loops = draw(st.booleans()) if loops is None else loops
    net = Network(n, directed, loops)
    slots = list(net.slots())
    mask = draw(st.lists(st.booleans(), min_size=len(slots), max_size=len(slots)))
    chosen = [s for s, keep in zip(slots, mask) if keep]
    if len(chosen) < min_links:
        chosen = slots[: max(min_links, len(chosen))]
    weight = st.floats(0.001, 100.0, allow_nan=False) if weighted else st.just(1.0)
    for u, v in chosen:
        net.add_link(u, v, draw(weight))
    return net


def all_undirected(n):
    slots = list(Network(n).slots())
    for mask in itertools.product((0, 1), repeat=len(slots)):
        yield Network(n).add_links(s for s, b in zip(slots, mask) if b)


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "skipped"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion" in nodeid and rep.when in ("call", "setup"):
                if rep.when == "setup" and outcome == "passed":
                    continue
                name = nodeid.split("::")[-1]
                lines.append((name, outcome.upper()))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, outcome in sorted(lines, key=lambda x: int(x[0].split("_")[2])):
            terminalreporter.write_line(f"{outcome:8s} {name}")
