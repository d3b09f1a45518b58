"""Enumeration: counts against independent oracles and fixtures,
structural cross-checks against networkx, class filters, random graphs."""

from __future__ import annotations

import networkx as nx
import pytest

from lap1.canon import canonical_form
from lap1.enumeration import (
    GraphClass,
    filter_class,
    free_trees,
    random_connected_graph,
    trees_in_class_T,
    unicyclic_graphs,
    unicyclic_in_class_G,
)
from lap1.graphs import Graph, in_class_G
from fixtures import FREE_TREE_COUNTS, UNICYCLIC_COUNTS
from oracles import (
    ahu_code,
    count_free_trees,
    count_unicyclic,
    prufer_tree_classes,
)


class TestTreeEnumeration:
    def test_counts_match_fixture(self):
        for n in range(1, 11):
            assert sum(1 for _ in free_trees(n)) == FREE_TREE_COUNTS[n]

    def test_counts_match_otter_formula(self):
        for n in range(1, 13):
            assert count_free_trees(n) == FREE_TREE_COUNTS[n]

    def test_examples(self):
        assert sum(1 for _ in free_trees(4)) == 2
        assert sum(1 for _ in free_trees(7)) == 11
        assert list(free_trees(1))[0] == Graph(1)

    def test_no_duplicate_forms_and_all_trees(self):
        for n in range(1, 10):
            forms = [canonical_form(t) for t in free_trees(n)]
            assert len(set(forms)) == len(forms)
            assert all(t.is_tree() for t in free_trees(n))

    def test_emitted_in_canonical_string_order(self):
        for n in (6, 8):
            forms = [canonical_form(t) for t in free_trees(n)]
            assert forms == sorted(forms)

    def test_structural_match_with_networkx(self):
        for n in range(2, 11):
            ours = {canonical_form(t) for t in free_trees(n)}
            theirs = set()
            for nxt in nx.nonisomorphic_trees(n):
                edges = [tuple(e) for e in nxt.edges()]
                theirs.add(canonical_form(Graph(n, edges)))
            assert ours == theirs

    def test_structural_match_with_prufer_oracle(self):
        for n in range(3, 8):
            ours = {ahu_code(n, t.sorted_edges()) for t in free_trees(n)}
            assert ours == prufer_tree_classes(n)

    def test_range_validation(self):
        with pytest.raises(ValueError):
            list(free_trees(0))
        with pytest.raises(ValueError):
            list(free_trees(17))


class TestUnicyclicEnumeration:
    def test_counts_match_fixture(self):
        for n in range(3, 11):
            assert sum(1 for _ in unicyclic_graphs(n)) == UNICYCLIC_COUNTS[n]

    def test_counts_match_dihedral_formula(self):
        for n in range(3, 13):
            assert count_unicyclic(n) == UNICYCLIC_COUNTS[n]

    def test_examples(self):
        assert sum(1 for _ in unicyclic_graphs(3)) == 1
        assert sum(1 for _ in unicyclic_graphs(5)) == 5
        assert sum(1 for _ in unicyclic_graphs(6)) == 13

    def test_all_unicyclic_no_duplicates(self):
        for n in range(3, 9):
            graphs = list(unicyclic_graphs(n))
            forms = [canonical_form(g) for g in graphs]
            assert len(set(forms)) == len(forms)
            assert all(g.is_unicyclic() for g in graphs)

    def test_structural_match_with_atlas(self):
        # the graph atlas holds every graph on up to 7 vertices exactly once
        from networkx.generators.atlas import graph_atlas_g

        atlas = graph_atlas_g()
        for n in range(3, 8):
            theirs = set()
            for ag in atlas:
                if ag.number_of_nodes() != n or ag.number_of_edges() != n:
                    continue
                if not nx.is_connected(ag):
                    continue
                relabeled = nx.convert_node_labels_to_integers(ag)
                theirs.add(canonical_form(Graph(n, list(relabeled.edges()))))
            ours = {canonical_form(g) for g in unicyclic_graphs(n)}
            assert ours == theirs

    def test_range_validation(self):
        with pytest.raises(ValueError):
            list(unicyclic_graphs(2))
        with pytest.raises(ValueError):
            list(unicyclic_graphs(15))


class TestFilters:
    def test_class_T_census_six_to_nine(self):
        sizes = {n: len(trees_in_class_T(n)) for n in range(6, 10)}
        assert sizes == {6: 1, 7: 1, 8: 2, 9: 3}
        assert sum(sizes.values()) == 7  # the seven small reduced no-P3 trees

    def test_unique_member_at_six(self):
        members = trees_in_class_T(6)
        from lap1.graphs import spider

        assert len(members) == 1
        assert canonical_form(members[0]) == canonical_form(spider([2, 2, 1]))

    def test_filtered_graphs_satisfy_predicates(self):
        for t in trees_in_class_T(8):
            assert in_class_G(t) and t.is_tree()
        for g in unicyclic_in_class_G(9):
            assert in_class_G(g) and g.is_unicyclic()

    def test_filter_is_subset_and_order_stable(self):
        all8 = [canonical_form(t) for t in free_trees(8)]
        sub = [canonical_form(t) for t in trees_in_class_T(8)]
        assert [f for f in all8 if f in set(sub)] == sub

    def test_unknown_filter_rejected(self):
        with pytest.raises(ValueError):
            GraphClass("tree", frozenset({"sparkly"}))
        with pytest.raises(ValueError):
            GraphClass("heptagonal")

    def test_any_connected_base(self):
        cls = GraphClass("any-connected")
        graphs = [Graph(3, [(0, 1)]), Graph(3, [(0, 1), (1, 2)])]
        assert [g.edge_count for g in filter_class(graphs, cls)] == [2]


class TestRandomGraphs:
    def test_deterministic(self):
        a = random_connected_graph(8, "1/4", seed=1)
        b = random_connected_graph(8, "1/4", seed=1)
        assert a == b

    def test_connected_and_sized(self):
        for seed in range(30):
            g = random_connected_graph(10, "1/5", seed=seed)
            assert g.n == 10 and g.is_connected()

    def test_seed_changes_graph(self):
        outs = {random_connected_graph(9, "1/3", seed=s) for s in range(10)}
        assert len(outs) > 1

    def test_validation(self):
        with pytest.raises(ValueError):
            random_connected_graph(0, "1/2", seed=0)
        with pytest.raises(ValueError):
            random_connected_graph(5, "7/5", seed=0)
