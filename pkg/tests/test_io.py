import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from netcomplexity.io import (
    InteractionMatrix,
    LabelTable,
    ParseError,
    Report,
    matrix_to_foodweb,
    parse_edgelist,
    parse_interaction_matrix,
    parse_pajek,
    read_report_tsv,
    write_edgelist,
    write_pajek,
    write_report,
)
from netcomplexity.neutral import EnsembleStats, SignificanceReport

from conftest import networks


def test_pajek_basic():
    net, labels = parse_pajek(b'*Vertices 2\n1 "a"\n2 "b"\n*Arcs\n1 2 0.5\n')
    assert net.directed and net.links() == [(0, 1, 0.5)]
    assert labels.labels == ["a", "b"]


def test_pajek_edges_and_defaults():
    net, labels = parse_pajek(b"% comment\n*vertices 3\n*EDGES\n2 1\n3 2 2.5\n")
    assert not net.directed
    assert net.links() == [(0, 1, 1.0), (1, 2, 2.5)]
    assert labels.labels == ["1", "2", "3"]


def test_pajek_self_loop_enables_policy():
    net, _ = parse_pajek(b"*Vertices 2\n*Arcs\n1 1 1\n1 2 1\n")
    assert net.allow_self_loops and net.slot_count == 4


def test_pajek_mixed_sections_give_both_arcs():
    net, _ = parse_pajek(b"*Vertices 3\n*Arcs\n1 2\n*Edges\n2 3\n")
    assert net.directed and sorted(net.pairs()) == [(0, 1), (1, 2), (2, 1)]


@pytest.mark.parametrize(
    "text,line",
    [
        (b"*Vertices 2\n*Arcs\n1 2\n1 2\n", 4),
        (b"*Vertices 2\n*Arcs\n1 3\n", 3),
        (b"*Vertices 2\n*Arcs\n1 2 -1\n", 3),
        (b"*Vertices 2\n*Arcs\n1 2 0\n", 3),
        (b"*Vertices x\n", 1),
        (b"*Vertices 2\n*Matrix\n0 1\n1 0\n", 2),
        (b"*Arcs\n1 2\n", 1),
        (b"1 2\n", 1),
    ],
)
def test_pajek_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_pajek(text)
    assert info.value.line == line


def test_edgelist_examples():
    net, labels = parse_edgelist(b"a b\nb c\n", directed=False)
    assert net.links() == [(0, 1, 1.0), (1, 2, 1.0)] and labels.labels == ["a", "b", "c"]
    with pytest.raises(ParseError):
        parse_edgelist(b"", directed=False)
    with pytest.raises(ParseError):
        parse_edgelist(b"# only a comment\n", directed=False)
    net, _ = parse_edgelist(b"a b 2\n", directed=False)
    assert net.normalized().weights() == [1.0]


def test_edgelist_errors():
    with pytest.raises(ParseError) as info:
        parse_edgelist(b"a b\nb a\n", directed=False)
    assert info.value.line == 2
    with pytest.raises(ParseError):
        parse_edgelist(b"a b -2\n", directed=True)
    with pytest.raises(ParseError):
        parse_edgelist(b"a b 1 2\n", directed=True)


@given(networks(max_n=8, weighted=True))
@settings(max_examples=200)
def test_edgelist_round_trip(net):
    back, _ = parse_edgelist(write_edgelist(net), net.directed)
    if net.allow_self_loops and not net.self_loops():
        back = type(net)(back.n, back.directed, True).add_links(back.links())
    assert back == net


@given(networks(max_n=8, weighted=True))
@settings(max_examples=100)
def test_pajek_round_trip(net):
    back, labels = parse_pajek(write_pajek(net))
    assert back.n == net.n and labels.labels == [str(i) for i in range(net.n)]
    if net.directed or not net.n_links:
        assert sorted(back.links()) == sorted(net.links())
    else:
        assert back.links() == net.links()


def test_label_table_bijective():
    table = LabelTable(["x", "y"])
    assert table.index == {"x": 0, "y": 1} and table[1] == "y"
    with pytest.raises(ValueError):
        table.add("x")


def foodweb(b01, b10):
    return matrix_to_foodweb(InteractionMatrix(np.array([[9.0, b01], [b10, -9.0]])))


def test_foodweb_examples():
    assert foodweb(0.3, 0.5).links() == [(0, 1, 0.3), (1, 0, 0.5)]
    assert foodweb(0.4, -0.1).links() == [(1, 0, 0.5)]
    assert foodweb(-0.2, -0.3).links() == [(0, 1, 0.3), (1, 0, 0.2)]
    assert foodweb(0.0, 0.0).n_links == 0


def test_foodweb_single_nonzero_entries():
    assert foodweb(0.0, 0.7).links() == [(0, 1, 0.7)]
    assert foodweb(0.7, 0.0).links() == [(1, 0, 0.7)]
    assert foodweb(-0.7, 0.0).links() == [(0, 1, 0.7)]
    assert foodweb(0.0, -0.7).links() == [(1, 0, 0.7)]


matrices = st.integers(2, 6).flatmap(
    lambda n: st.lists(st.sampled_from([-1.5, -0.2, 0.0, 0.3, 2.0]), min_size=n * n, max_size=n * n).map(
        lambda xs: np.array(xs).reshape(n, n)
    )
)


@given(matrices)
def test_foodweb_properties(beta):
    net = matrix_to_foodweb(InteractionMatrix(beta))
    assert all(w > 0 for w in net.weights())
    for i in range(net.n):
        for j in range(i + 1, net.n):
            count = net.has_link(i, j) + net.has_link(j, i)
            if beta[i, j] * beta[j, i] < 0:
                assert count == 1
    flipped = matrix_to_foodweb(InteractionMatrix(beta.T))
    assert sorted((v, u, w) for u, v, w in net.links()) == flipped.links()


def test_interaction_matrix_validation():
    with pytest.raises(ValueError):
        InteractionMatrix(np.zeros((2, 3)))
    with pytest.raises(ValueError):
        InteractionMatrix(np.array([[0, np.inf], [0, 0]]))
    m = parse_interaction_matrix(b"0 0.4\n-0.1 0\n")
    assert matrix_to_foodweb(m).links() == [(1, 0, 0.5)]
    with pytest.raises(ParseError):
        parse_interaction_matrix(b"0 1\n2\n")


def full_report(sigma=2.5, surplus=13.5):
    stats = EnsembleStats(3, [4.4, 4.5, 4.6], 4.5, 0.08, math.exp(4.5))
    sig = SignificanceReport(100.0, surplus, sigma)
    return Report().update(nodes=100, links=99).update(sig).update(stats)


def test_report_sigma_infinity_and_zero_surplus():
    report = full_report(sigma=math.inf, surplus=0.0)
    assert b'"sigma": "inf"' in write_report(report, "json")
    row = read_report_tsv(write_report(report, "tsv"))
    assert row["sigma"] == math.inf and row["surplus"] == 0.0


def test_report_tsv_round_trip():
    report = full_report()
    row = read_report_tsv(write_report(report, "tsv"))
    for key, value in report.ordered().items():
        assert row[key] == value
    assert list(row)[:6] == ["nodes", "links", "complexity", "geometric_mean_c", "surplus", "sigma"]


def test_report_unknown_format():
    with pytest.raises(ValueError):
        write_report(full_report(), "xml")
