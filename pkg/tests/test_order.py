"""Order axioms, Hasse diagrams, extremes and lattice diagnostics."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tricat.bigraph import BipartiteGraph, all_graphs, graphs_with_basis, make_graph
from tricat.order import (
    HasseDiagram,
    MismatchedVertexCount,
    Poset,
    TooLarge,
    build_poset,
    leq,
)


def chain_poset(labels):
    rel = [[a <= b for b in range(len(labels))] for a in range(len(labels))]
    return Poset(labels, rel)


def antichain_poset(labels):
    rel = [[a == b for b in range(len(labels))] for a in range(len(labels))]
    return Poset(labels, rel)


class TestLeq:
    def test_comparable_pair(self):
        u = make_graph(3, 1, [(1, 3)])
        v = make_graph(3, 2, [(1, 3)])
        # both filters evaluate to {(1, 3)}
        assert leq(u, v) and not leq(v, u)

    def test_incomparable_pair(self):
        u = make_graph(3, 1, [(1, 2)])
        v = make_graph(3, 2, [(1, 3)])
        # left filter is empty, right filter is {(1, 3)}
        assert not leq(u, v) and not leq(v, u)

    def test_reflexive(self):
        for g in all_graphs(3):
            assert leq(g, g)

    def test_mismatched_vertex_count(self):
        with pytest.raises(MismatchedVertexCount):
            leq(make_graph(3, 1, []), make_graph(4, 1, []))

    def test_larger_basis_never_below(self):
        assert not leq(make_graph(3, 2, []), make_graph(3, 1, []))


class TestOrderAxiomsExhaustive:
    """Reflexivity, antisymmetry and transitivity on every small ground set."""

    @pytest.mark.parametrize("n", range(5))
    def test_axioms(self, n):
        els = all_graphs(n)
        rel = {(a, b): leq(u, v) for a, u in enumerate(els) for b, v in enumerate(els)}
        m = len(els)
        for a in range(m):
            assert rel[a, a]
        for a in range(m):
            for b in range(m):
                if a != b and rel[a, b]:
                    assert not rel[b, a], (els[a], els[b])
        for a in range(m):
            for b in range(m):
                if not rel[a, b]:
                    continue
                for c in range(m):
                    if rel[b, c]:
                        assert rel[a, c], (els[a], els[b], els[c])

    @pytest.mark.parametrize("n", range(6))
    def test_equal_basis_pairs_incomparable(self, n):
        for k in range(n + 1):
            level = graphs_with_basis(k, n)
            for x, u in enumerate(level):
                for v in level[x + 1:]:
                    assert not leq(u, v) and not leq(v, u)

    @pytest.mark.parametrize("n", range(5))
    def test_strict_comparability_grows_basis(self, n):
        for u in all_graphs(n):
            for v in all_graphs(n):
                if u != v and leq(u, v):
                    assert u.k < v.k


class TestPoset:
    def test_build_poset_sizes(self):
        assert len(build_poset(0)) == 1
        assert len(build_poset(3)) == 10
        assert len(build_poset(4)) == 34

    def test_guard(self):
        with pytest.raises(TooLarge):
            build_poset(3, guard=5)
        with pytest.raises(TooLarge):
            build_poset(9)

    def test_axiom_checker_rejects_bad_matrices(self):
        with pytest.raises(ValueError):
            Poset("ab", [[False, False], [False, True]])  # not reflexive
        with pytest.raises(ValueError):
            Poset("ab", [[True, True], [True, True]])  # not antisymmetric
        with pytest.raises(ValueError):
            Poset("abc", [[True, True, False],
                          [False, True, True],
                          [False, False, True]])  # not transitive

    def test_elements_must_be_distinct(self):
        with pytest.raises(ValueError):
            Poset("aa", [[True, False], [False, True]])

    def test_le_by_element(self):
        p = build_poset(2)
        assert p.le(BipartiteGraph(2, 0, ()), BipartiteGraph(2, 2, ()))
        assert not p.le(BipartiteGraph(2, 2, ()), BipartiteGraph(2, 0, ()))


class TestHasse:
    def test_chain_reduces_to_two_covers(self):
        assert chain_poset("abc").hasse().covers == ((0, 1), (1, 2))

    def test_antichain_has_no_covers(self):
        assert antichain_poset("abc").hasse().covers == ()

    @pytest.mark.parametrize("n", range(5))
    def test_closure_round_trip(self, n):
        p = build_poset(n)
        assert p.hasse().closure() == p.relation

    def test_closure_of_handmade_diagram(self):
        d = HasseDiagram(("x", "y", "z"), ((0, 1), (1, 2)))
        assert d.closure() == (
            (True, True, True),
            (False, True, True),
            (False, False, True),
        )

    def test_covers_skip_no_levels_in_small_graph_orders(self):
        # observed property: covers connect adjacent basis sizes for n <= 4
        for n in range(5):
            p = build_poset(n)
            for a, b in p.hasse().covers:
                assert p.elements[b].k == p.elements[a].k + 1


class TestExtremes:
    @pytest.mark.parametrize("n", range(6))
    def test_bottom_and_top_are_edge_free(self, n):
        p = build_poset(n)
        assert p.bottom() == BipartiteGraph(n, 0, ())
        assert p.top() == BipartiteGraph(n, n, ())

    def test_antichain_has_no_extremes(self):
        p = antichain_poset("ab")
        assert p.bottom() is None and p.top() is None


class TestMeetJoin:
    def test_meet_idempotent(self):
        p = build_poset(3)
        for g in p.elements:
            assert p.meet(g, g) == g and p.join(g, g) == g

    def test_meet_with_bottom(self):
        p = build_poset(3)
        bottom = p.bottom()
        for g in p.elements:
            assert p.meet(bottom, g) == bottom
            assert p.join(bottom, g) == g

    def test_some_pair_lacks_meet_and_some_pair_lacks_join(self):
        p = build_poset(3)
        missing_meet = [(a, b) for a in p.elements for b in p.elements
                        if p.meet(a, b) is None]
        missing_join = [(a, b) for a in p.elements for b in p.elements
                        if p.join(a, b) is None]
        assert missing_meet and missing_join
        # frozen witnesses, found by the exhaustive scan above
        assert p.meet(BipartiteGraph(3, 2, ()),
                      BipartiteGraph(3, 2, ((2, 3),))) is None
        assert p.join(BipartiteGraph(3, 1, ()),
                      BipartiteGraph(3, 1, ((1, 2),))) is None


class TestIsLattice:
    def test_graph_order_on_three_vertices_is_not_a_lattice(self):
        ok, witness = build_poset(3).is_lattice()
        assert not ok
        assert witness == (BipartiteGraph(3, 1, ()),
                           BipartiteGraph(3, 1, ((1, 2),)))

    def test_witness_pair_really_lacks_a_bound(self):
        p = build_poset(3)
        _, (u, v) = p.is_lattice()
        assert p.meet(u, v) is None or p.join(u, v) is None

    def test_chain_is_a_lattice(self):
        assert chain_poset("abcd").is_lattice() == (True, None)

    def test_singleton_is_a_lattice(self):
        assert build_poset(0).is_lattice() == (True, None)

    def test_two_element_antichain_is_not(self):
        ok, witness = antichain_poset("ab").is_lattice()
        assert not ok and witness == ("a", "b")


@given(st.integers(min_value=0, max_value=4))
def test_relation_matrix_matches_leq(n):
    p = build_poset(n)
    for a, u in enumerate(p.elements):
        for b, v in enumerate(p.elements):
            assert p.relation[a][b] == leq(u, v)
