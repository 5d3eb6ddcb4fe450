import io
import os

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qrcc.graph import (DENSE_PAIR_LIMIT, GeneratorSpec, GraphFormatError, _pair_from_linear, from_edges,
                        generate, induced_edge_count, load_edge_list, load_kcluster, validate)
from oracles import naive_induced_edges


def lines(*rows):
    return io.StringIO("\n".join(rows) + "\n")


def test_load_triangle():
    g = load_edge_list(lines("0 1", "1 2", "0 2"))
    validate(g)
    assert (g.n, g.m) == (3, 3)
    assert induced_edge_count(g, [0, 1, 2]) == 3


def test_load_drops_self_loop():
    g = load_edge_list(lines("# c", "5 5", "2 7"))
    assert (g.n, g.m) == (2, 1)
    assert g.stats.self_loops == 1
    assert g.stats.header is None


def test_load_relabels_by_first_appearance():
    g = load_edge_list(lines("% comment", "100 7", "7 42", "42 100", "7 100"))
    assert list(g.labels) == [100, 7, 42]
    assert g.m == 3
    assert g.stats.duplicates == 1
    assert g.original_label(2) == 42


def test_header_accepted_when_count_matches():
    g = load_edge_list(lines("4 2", "0 1", "2 3"))
    assert g.stats.header == (4, 2)
    assert (g.n, g.m) == (4, 2)


def test_header_like_line_kept_as_edge_otherwise():
    g = load_edge_list(lines("3 9", "0 1", "1 2"))
    assert g.stats.header is None
    assert g.m == 3


def test_both_directions_merge():
    g = load_edge_list(lines("0 1", "1 0", "1 2", "2 1"))
    assert g.m == 2 and g.stats.duplicates == 2


def test_malformed_token_reports_line():
    with pytest.raises(GraphFormatError, match="line 3"):
        load_edge_list(lines("0 1", "# x", "1 b"))


def test_negative_and_short_lines():
    with pytest.raises(GraphFormatError):
        load_edge_list(lines("0 -1"))
    with pytest.raises(GraphFormatError, match="line 2"):
        load_edge_list(lines("0 1", "3"))


def test_empty_input():
    with pytest.raises(GraphFormatError):
        load_edge_list(lines("# only comments", ""))


def test_weights_ignored_with_warning():
    with pytest.warns(UserWarning, match="weights"):
        g = load_edge_list(lines("0 1 3.5", "1 2 1"))
    assert g.m == 2


def test_kcluster_lower_triangle():
    # 4 vertices, strictly lower triangle rows: (1,0) (2,0) (2,1) (3,0) (3,1) (3,2)
    text = lines("4 50", "1", "1 1", "0 0 1")
    g = load_kcluster(text)
    validate(g)
    assert g.m == 4
    assert sorted(map(tuple, g.edges().tolist())) == [(0, 1), (0, 2), (1, 2), (2, 3)]


def test_kcluster_full_matrix_and_errors():
    full = lines("3 66", "0 1 0", "1 0 1", "0 1 0")
    g = load_kcluster(full)
    assert g.m == 2
    with pytest.raises(GraphFormatError):
        load_kcluster(lines("3 66", "0 1"))
    with pytest.warns(UserWarning):
        load_kcluster(lines("3 66", "5", "0 2"))


@pytest.mark.skipif(not os.environ.get("QRCC_CA_GRQC"), reason="set QRCC_CA_GRQC to a local CA-GrQc.txt")
def test_snap_ca_grqc_counts():
    with open(os.environ["QRCC_CA_GRQC"]) as fh:
        g = load_edge_list(fh)
    assert (g.n, g.m) == (5242, 14496)


def test_complete_graph_at_p_one():
    g = generate(GeneratorSpec("erdos_renyi", 100, 1.0, seed=123))
    validate(g)
    assert g.m == 4950


def test_planted_clique_present():
    g = generate(GeneratorSpec("planted", 512, 0.25, 20, seed=7))
    validate(g)
    assert len(g.planted) == 20
    assert induced_edge_count(g, g.planted) == 190


def test_er_edge_count_within_four_sigma():
    n, p = 1024, 0.5
    g = generate(GeneratorSpec("erdos_renyi", n, p, seed=11))
    pairs = n * (n - 1) // 2
    mean, sd = p * pairs, np.sqrt(pairs * p * (1 - p))
    assert mean == 261888
    assert abs(g.m - mean) <= 4 * sd


def test_geometric_skipping_path():
    n, p = DENSE_PAIR_LIMIT + 500, 0.001
    g = generate(GeneratorSpec("erdos_renyi", n, p, seed=3))
    validate(g)
    pairs = n * (n - 1) // 2
    assert abs(g.m - p * pairs) <= 4 * np.sqrt(pairs * p * (1 - p))
    assert g.n == n


def test_pair_from_linear_matches_row_major_order():
    for n in (2, 3, 7, 20):
        i, j = np.triu_indices(n, 1)
        li, lj = _pair_from_linear(np.arange(len(i)), n)
        assert np.array_equal(i, li) and np.array_equal(j, lj)


def test_generation_is_reproducible():
    spec = GeneratorSpec("planted", 300, 0.1, 12, seed=99)
    a, b = generate(spec), generate(spec)
    assert np.array_equal(a.indices, b.indices) and np.array_equal(a.indptr, b.indptr)
    assert a.planted == b.planted
    c = generate(GeneratorSpec("planted", 300, 0.1, 12, seed=100))
    assert a.m != c.m or not np.array_equal(a.edges(), c.edges())


@pytest.mark.parametrize("kw", [dict(n=1), dict(p=0.0), dict(p=1.5), dict(kind="planted", planted_k=2),
                                dict(kind="planted", planted_k=None), dict(kind="ring")])
def test_generator_spec_rejects(kw):
    base = dict(kind="erdos_renyi", n=10, p=0.5, planted_k=None, seed=0)
    base.update(kw)
    with pytest.raises(ValueError):
        GeneratorSpec(**base)


def test_induced_edge_count_whole_graph_and_errors(triangle):
    g = generate(GeneratorSpec("erdos_renyi", 60, 0.2, seed=5))
    assert induced_edge_count(g, range(g.n)) == g.m
    assert induced_edge_count(triangle, []) == 0
    with pytest.raises(IndexError):
        induced_edge_count(triangle, [0, 3])


@settings(max_examples=40, deadline=None)
@given(n=st.integers(2, 30), p=st.floats(0.05, 1.0), seed=st.integers(0, 2**32 - 1), data=st.data())
def test_induced_edge_count_matches_double_loop(n, p, seed, data):
    g = generate(GeneratorSpec("erdos_renyi", n, p, seed=seed))
    validate(g)
    S = data.draw(st.lists(st.integers(0, n - 1), unique=True, max_size=n))
    assert induced_edge_count(g, S) == naive_induced_edges(g, S)


def test_validate_catches_asymmetry():
    g = from_edges(3, [(0, 1)])
    bad = type(g)(np.array([0, 1, 1, 1]), np.array([1]))
    with pytest.raises(AssertionError):
        validate(bad)


def test_graph_arrays_are_read_only(triangle):
    with pytest.raises(ValueError):
        triangle.indices[0] = 2
