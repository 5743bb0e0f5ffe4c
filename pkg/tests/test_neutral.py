import math
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from netcomplexity.complexity import weighted_complexity
from netcomplexity.network import Network, NetworkError, from_links
from netcomplexity.neutral import (
    EnsembleStats,
    ensemble_stats,
    mix64,
    normal_weight_null,
    replica_seed,
    shuffle_links,
    significance,
    summarize,
)

from conftest import networks


def test_mix64_reference_values():
    # first outputs of the reference SplitMix64 generator seeded with 0
    assert mix64(0) == 0xE220A8397B1DCDAF
    assert mix64(0x9E3779B97F4A7C15) == 0x6E789E6AA1B965F4
    assert replica_seed(5, 5) == mix64(0)


@given(networks(min_n=2, weighted=True, min_links=1), st.integers(0, 2**64 - 1))
@settings(max_examples=200, deadline=None)
def test_shuffle_conserves(net, seed):
    out = shuffle_links(net, seed)
    assert (out.n, out.n_links, out.directed, out.allow_self_loops) == (net.n, net.n_links, net.directed, net.allow_self_loops)
    assert Counter(out.weights()) == Counter(net.weights())
    assert len(set(out.pairs())) == out.n_links
    if not out.allow_self_loops:
        assert not out.self_loops()
    assert out == shuffle_links(net, seed)


def test_shuffle_complete_is_forced():
    full = Network(5, directed=True).complement()
    assert shuffle_links(full, 99).same_structure(full)


def test_shuffle_empty_rejected():
    with pytest.raises(NetworkError):
        shuffle_links(Network(3), 0)


def test_complete_digraph_zero_variance():
    full = Network(6, directed=True).complement()
    stats = ensemble_stats(full, samples=5, seed=1)
    assert stats.std_ln_c == 0
    sig = significance(full, stats)
    assert sig.surplus == 0 and sig.sigma == math.inf


def test_identical_replicas_statistics():
    stats = summarize([math.log(7.5)] * 2)
    assert stats.std_ln_c == 0 and stats.mean_ln_c == math.log(7.5)


def test_ensemble_deterministic_and_parallel_identical():
    net = from_links(12, [(i, (3 * i + 1) % 12, 1 + i) for i in range(12)], directed=True)
    a = ensemble_stats(net, samples=12, seed=0xBEEF)
    assert a == ensemble_stats(net, samples=12, seed=0xBEEF)
    assert a == ensemble_stats(net, samples=12, seed=0xBEEF, workers=2)
    assert a.samples == len(a.ln_c_values) == 12
    assert a.geometric_mean_c == pytest.approx(math.exp(a.mean_ln_c))


def test_ensemble_needs_two_samples():
    with pytest.raises(ValueError):
        ensemble_stats(from_links(3, [(0, 1)]), samples=1)


def test_significance_at_geometric_mean():
    stats = EnsembleStats(3, [1.0, 2.0, 3.0], 2.0, 0.5, math.exp(2.0))
    sig = significance(Network(2), stats, c_real=math.exp(2.0))
    assert sig.surplus == 0.0 and sig.sigma == 0.0
    sig = significance(Network(2), EnsembleStats(2, [2.0, 2.0], 2.0, 0.0, math.exp(2.0)), c_real=5.0)
    assert sig.sigma == math.inf


def test_normal_null_counts_and_direction():
    assert normal_weight_null(5, 0, 1).n_links == 0
    net = normal_weight_null(35, 219, seed=3)
    assert net.directed and net.n_links == 219
    assert all(w > 0 for w in net.weights())
    pairs = {frozenset(p) for p in net.pairs()}
    assert len(pairs) == 219


def test_normal_null_orientation_follows_sign():
    # seed audit: find a seed whose draws are all positive for a 3-link network
    import numpy as np

    from netcomplexity.network import draw_slots

    for seed in range(200):
        rng = np.random.default_rng(seed)
        draw_slots(rng, 6, False, False, 15, 3)
        if (rng.normal(size=3) > 0).all():
            break
    net = normal_weight_null(6, 3, seed)
    assert all(u < v for u, v in net.pairs())


def test_normal_null_scale_invariance():
    a = weighted_complexity(normal_weight_null(20, 60, seed=8, scale=1.0))
    b = weighted_complexity(normal_weight_null(20, 60, seed=8, scale=7.3))
    assert a == pytest.approx(b, abs=1e-9)
