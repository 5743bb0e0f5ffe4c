"""Acceptance gate: one test per criterion, each at its stated tolerance."""

import math
import os
import random
import time
from collections import Counter
from pathlib import Path

import pytest

from netcomplexity.automorphism import aut_order, aut_order_bruteforce
from netcomplexity.complexity import complexity, medium_articulation, prefix_bits, weighted_complexity
from netcomplexity.enumeration import complement_rank, enumerate_complexities
from netcomplexity.generators import preferential_attachment
from netcomplexity.io import Report, parse_pajek, write_report
from netcomplexity.network import Network, slot_count
from netcomplexity.neutral import ensemble_stats, shuffle_links, significance

from conftest import all_undirected, random_network

NARRAGANSETT = Path(os.environ.get("NARRAGANSETT_NET", Path(__file__).parent / "data" / "narragansett.net"))


def test_criterion_1_automorphism_oracle():
    start = time.perf_counter()
    for net in all_undirected(5):
        assert aut_order(net).order == aut_order_bruteforce(net).order
    rng = random.Random(2024)
    for _ in range(1000):
        n = rng.randint(1, 7)
        net = random_network(rng, n, rng.random(), directed=True, loops=rng.random() < 0.3)
        assert aut_order(net).order == aut_order_bruteforce(net).order
    assert time.perf_counter() - start < 60


def test_criterion_2_prefix_anchor():
    assert prefix_bits(8, slot_count(8, False, False)) == 12


def test_criterion_3_endpoint_minima_and_complement_symmetry():
    start = time.perf_counter()
    points = list(enumerate_complexities(6))
    values = [c for _, _, c in points]
    for rank, l, c in points:
        assert abs(c - values[complement_rank(6, rank)]) < 1e-9
    lowest = min(values)
    minimal_l = {l for _, l, c in points if c - lowest < 1e-9}
    # a single link (or a single missing link) ties with the endpoints: its
    # renumbering count equals the number of linklists, binom(L, 1)
    assert {0, 15} <= minimal_l
    assert minimal_l == {0, 1, 14, 15}
    by_l = sorted((l, c) for _, l, c in points)
    mirrored = sorted((15 - l, c) for _, l, c in points)
    assert all(a[0] == b[0] and abs(a[1] - b[1]) < 1e-9 for a, b in zip(by_l, mirrored))
    assert time.perf_counter() - start < 300


def test_criterion_4_isomorphism_invariance():
    rng = random.Random(4)
    for _ in range(500):
        n = rng.randint(1, 64)
        net = random_network(rng, n, rng.random() ** 2, directed=rng.random() < 0.5)
        base = complexity(net).total_bits
        for _ in range(5):
            perm = list(range(n))
            rng.shuffle(perm)
            assert abs(complexity(net.relabeled(perm)).total_bits - base) < 1e-9


def test_criterion_5_uniform_weight_decomposition():
    rng = random.Random(5)
    done = 0
    while done < 200:
        n = rng.randint(2, 30)
        directed = rng.random() < 0.5
        weight = rng.choice([1.0, 0.37, 12.5])
        net = random_network(rng, n, rng.random(), directed=directed)
        if net.n_links == 0:
            continue
        net = Network(n, directed).add_links((u, v, weight) for u, v, _ in net.links())
        l = net.n_links
        expected = complexity(Network(n, directed)).total_bits / l + (1 - 1 / l) * complexity(net).total_bits
        assert abs(weighted_complexity(net) - expected) < 1e-9
        done += 1


def pa1_trial(seed):
    net = preferential_attachment(100, 1, directed=True, weights="uniform01", seed=seed)
    stats = ensemble_stats(net, samples=1000, seed=seed)
    sig = significance(net, stats, weighted=True)
    ok = abs(sig.c_real - 98.9) <= 0.1 * 98.9 and 1.0 <= sig.sigma <= 4.0 and sig.surplus > 0
    return ok, sig


@pytest.mark.slow
def test_criterion_6_pa1_reproduction():
    start = time.perf_counter()
    results = []
    for seed in range(10):
        ok, sig = pa1_trial(seed)
        results.append(ok)
        print(f"seed {seed}: C={sig.c_real:.1f} surplus={sig.surplus:.1f} sigma={sig.sigma:.2f} {'pass' if ok else 'fail'}")
    assert time.perf_counter() - start < 900
    assert sum(results) >= 8


def test_criterion_7_zero_variance_sentinel():
    full = Network(7, directed=True).complement()
    stats = ensemble_stats(full, samples=20, seed=7)
    assert stats.std_ln_c == 0
    sig = significance(full, stats)
    text = write_report(Report().update(sig).update(stats), "json")
    assert b'"sigma": "inf"' in text


def test_criterion_8_medium_articulation():
    single = Network(3, directed=True).add_link(0, 2, 1.0)
    assert abs(medium_articulation(single).ma) < 1e-12
    uniform = Network(5, True, True).complement()
    assert abs(medium_articulation(uniform).ma) < 1e-12
    rng = random.Random(8)
    checked = 0
    while checked < 1000:
        net = random_network(rng, rng.randint(2, 12), rng.random(), directed=True, weighted=True)
        if net.n_links == 0:
            continue
        res = medium_articulation(net)
        assert abs(res.ma - res.mutual_information * (res.entropy - res.mutual_information)) < 1e-9
        checked += 1


@pytest.mark.slow
def test_criterion_9_narragansett():
    if not NARRAGANSETT.exists():
        pytest.skip(f"dataset not found at {NARRAGANSETT}; set NARRAGANSETT_NET")
    net, _ = parse_pajek(NARRAGANSETT.read_bytes())
    c = weighted_complexity(net)
    assert abs(c - 58.2) <= 0.5
    sig = significance(net, ensemble_stats(net, samples=1000, seed=0), weighted=True, c_real=c)
    assert abs(sig.sigma - 11.0) <= 2.0


def test_criterion_10_shuffle_conservation():
    rng = random.Random(10)
    inputs = []
    while len(inputs) < 50:
        directed, loops = rng.random() < 0.5, rng.random() < 0.3
        net = random_network(rng, rng.randint(2, 25), rng.random(), directed, loops, weighted=rng.random() < 0.7)
        if net.n_links:
            inputs.append(net)
    for k in range(10_000):
        net = inputs[k % len(inputs)]
        out = shuffle_links(net, rng.getrandbits(64))
        assert (out.n, out.n_links, out.directed, out.allow_self_loops) == (net.n, net.n_links, net.directed, net.allow_self_loops)
        assert Counter(out.weights()) == Counter(net.weights())
        assert len(set(out.pairs())) == out.n_links
        assert out.allow_self_loops or not out.self_loops()
