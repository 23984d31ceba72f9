"""Graph validation, enumeration order, counting and JSON round-trips."""

from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tricat.bigraph import (
    BasisOutOfRange,
    BipartiteGraph,
    DuplicateEdge,
    EdgeViolatesBipartition,
    GraphError,
    admissible_edges,
    all_graphs,
    count_all,
    count_with_basis,
    graph_from_json_dict,
    graph_to_json_dict,
    graphs_with_basis,
    make_graph,
)


def subsets(items):
    """Independent oracle: every subset of a sequence, via combinations."""
    for r in range(len(items) + 1):
        yield from combinations(items, r)


class TestMakeGraph:
    def test_seven_vertex_example(self):
        g = make_graph(7, 5, {(1, 7), (2, 6), (3, 7), (4, 6), (5, 7)})
        assert g.n == 7 and g.k == 5
        assert g.edges == ((1, 7), (2, 6), (3, 7), (4, 6), (5, 7))

    def test_empty_basis_forces_empty_edges(self):
        assert make_graph(3, 0, set()) == BipartiteGraph(3, 0, ())
        with pytest.raises(EdgeViolatesBipartition):
            make_graph(3, 0, {(1, 2)})

    def test_source_outside_basis_rejected(self):
        with pytest.raises(EdgeViolatesBipartition):
            make_graph(3, 1, {(2, 3)})

    def test_target_inside_basis_rejected(self):
        with pytest.raises(EdgeViolatesBipartition):
            make_graph(3, 2, {(1, 2)})

    def test_basis_out_of_range(self):
        with pytest.raises(BasisOutOfRange):
            make_graph(3, 4, set())
        with pytest.raises(BasisOutOfRange):
            make_graph(3, -1, set())
        with pytest.raises(BasisOutOfRange):
            make_graph(-1, -1, set())

    def test_duplicate_edge(self):
        with pytest.raises(DuplicateEdge):
            make_graph(3, 1, [(1, 2), (1, 2)])

    def test_non_integer_rejected(self):
        with pytest.raises(EdgeViolatesBipartition):
            make_graph(3, 1, [(1.0, 2)])
        with pytest.raises(BasisOutOfRange):
            make_graph("3", 1, [])

    def test_canonical_edge_order(self):
        g = make_graph(4, 2, [(2, 3), (1, 4), (1, 3)])
        assert g.edges == ((1, 3), (1, 4), (2, 3))

    def test_equality_is_structural(self):
        a = make_graph(3, 1, [(1, 2)])
        b = make_graph(3, 1, [(1, 2)])
        assert a == b and hash(a) == hash(b)
        assert a != make_graph(3, 1, [(1, 3)])


class TestEnumeration:
    def test_hom_2_5_matches_subset_oracle(self):
        grid = [(i, j) for i in (1, 2) for j in (3, 4, 5)]
        expected = {tuple(sorted(s)) for s in subsets(grid)}
        got = graphs_with_basis(2, 5)
        assert len(got) == len(expected) == 64
        assert {g.edges for g in got} == expected

    def test_full_basis_is_single_edge_free_graph(self):
        for n in range(6):
            assert graphs_with_basis(n, n) == [BipartiteGraph(n, n, ())]

    def test_basis_larger_than_n_is_empty(self):
        assert graphs_with_basis(5, 2) == []

    def test_binary_counter_order(self):
        # low bit = first grid edge (1,2), next bit = (1,3)
        assert graphs_with_basis(1, 3) == [
            BipartiteGraph(3, 1, ()),
            BipartiteGraph(3, 1, ((1, 2),)),
            BipartiteGraph(3, 1, ((1, 3),)),
            BipartiteGraph(3, 1, ((1, 2), (1, 3))),
        ]

    def test_grid_is_lexicographic(self):
        assert admissible_edges(2, 4) == [(1, 3), (1, 4), (2, 3), (2, 4)]

    def test_all_graphs_small_counts(self):
        assert len(all_graphs(3)) == 10
        assert len(all_graphs(4)) == 34
        assert all_graphs(0) == [BipartiteGraph(0, 0, ())]

    def test_all_graphs_distinct_valid_and_counted(self):
        for n in range(8):
            graphs = all_graphs(n)
            assert len(set(graphs)) == len(graphs) == count_all(n)
            for g in graphs:
                assert make_graph(g.n, g.k, g.edges) == g

    def test_extreme_bases_have_no_edges(self):
        for n in range(1, 6):
            (lo,) = graphs_with_basis(0, n)
            (hi,) = graphs_with_basis(n, n)
            assert lo.edges == () and hi.edges == ()

    def test_negative_arguments_rejected(self):
        with pytest.raises(ValueError):
            graphs_with_basis(-1, 3)
        with pytest.raises(ValueError):
            all_graphs(-2)


class TestCounts:
    def test_count_all_small(self):
        assert count_all(0) == 1
        assert count_all(3) == 10
        assert count_all(7) == 10370

    def test_count_all_matches_enumeration(self):
        for n in range(8):
            assert count_all(n) == len(all_graphs(n))

    def test_hom_counts_match_enumeration(self):
        for n in range(8):
            for k in range(n + 2):
                assert count_with_basis(k, n) == len(graphs_with_basis(k, n))

    def test_hom_count_edges_of_triangle(self):
        assert count_with_basis(2, 5) == 64
        assert count_with_basis(4, 4) == 1
        assert count_with_basis(5, 2) == 0

    def test_counts_are_exact_big_integers(self):
        # 2^(8*8) overflows 64-bit words; exactness must survive
        assert count_with_basis(8, 16) == 2 ** 64
        assert count_all(16) % 2 == 0 and count_all(16) > 2 ** 64


class TestJson:
    def test_round_trip(self):
        g = make_graph(7, 5, [(1, 7), (2, 6), (3, 7), (4, 6), (5, 7)])
        data = graph_to_json_dict(g)
        assert data == {"n": 7, "k": 5,
                        "edges": [[1, 7], [2, 6], [3, 7], [4, 6], [5, 7]]}
        assert graph_from_json_dict(data) == g

    def test_rejects_malformed(self):
        with pytest.raises(GraphError):
            graph_from_json_dict([1, 2])
        with pytest.raises(GraphError):
            graph_from_json_dict({"n": 3, "k": 1})
        with pytest.raises(GraphError):
            graph_from_json_dict({"n": 3, "k": 1, "edges": [[1, 2, 3]]})
        with pytest.raises(GraphError):
            graph_from_json_dict({"n": 3, "k": 1, "edges": [[2, 3]]})


@st.composite
def graph_parts(draw):
    n = draw(st.integers(min_value=0, max_value=6))
    k = draw(st.integers(min_value=0, max_value=n))
    grid = admissible_edges(k, n)
    edges = draw(st.lists(st.sampled_from(grid), unique=True)) if grid else []
    return n, k, edges


@given(graph_parts())
def test_make_graph_round_trips(parts):
    n, k, edges = parts
    g = make_graph(n, k, edges)
    assert make_graph(g.n, g.k, g.edges) == g
    assert list(g.edges) == sorted(set(edges))


@given(graph_parts(), st.randoms())
def test_edge_order_is_irrelevant(parts, rng):
    n, k, edges = parts
    shuffled = list(edges)
    rng.shuffle(shuffled)
    assert make_graph(n, k, shuffled) == make_graph(n, k, edges)
