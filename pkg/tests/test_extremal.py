"""Extremal generators against the enumeration oracle."""

from __future__ import annotations

import pytest

from lap1.canon import canonical_form
from lap1.extremal import (
    ExtremalSpec,
    extremal_tree,
    extremal_unicyclic,
    find_extremal_by_enumeration,
    tree_gadget_vertices,
)
from lap1.graphs import in_class_G, spider
from lap1.linalg import laplacian_multiplicity_one as m1


class TestExtremalTree:
    def test_base_case_is_unique_class_member(self):
        t = extremal_tree(6)
        assert canonical_form(t) == canonical_form(spider([2, 2, 1]))
        assert m1(t) == 0

    def test_attains_bound(self):
        for n in (6, 10, 14, 18, 22):
            t = extremal_tree(n)
            assert t.n == n and t.is_tree() and in_class_G(t)
            assert 4 * m1(t) == n - 6

    def test_matches_enumeration(self):
        for n in (6, 10):
            hits = find_extremal_by_enumeration(n, "tree")
            assert len(hits) == 1
            assert canonical_form(hits[0]) == canonical_form(extremal_tree(n))

    def test_non_integer_bound_has_no_extremal(self):
        assert find_extremal_by_enumeration(8, "tree") == []

    def test_gadget_peeling_recursion(self):
        for n in (10, 14, 18):
            t = extremal_tree(n)
            peeled, _ = t.delete_vertices(tree_gadget_vertices(n))
            assert m1(t) == 1 + m1(peeled)
            assert canonical_form(peeled) == canonical_form(extremal_tree(n - 4))

    def test_validation(self):
        for bad in (5, 8, 12, 2):
            with pytest.raises(ValueError):
                extremal_tree(bad)


class TestExtremalUnicyclic:
    def test_sun_at_twelve(self):
        g = extremal_unicyclic(12)
        assert g.n == 12 and g.is_unicyclic() and in_class_G(g)
        assert m1(g) == 3

    def test_attains_bound(self):
        for n in (12, 16, 20):
            g = extremal_unicyclic(n)
            assert 4 * m1(g) == n and in_class_G(g)

    def test_matches_enumeration_at_twelve(self):
        hits = find_extremal_by_enumeration(12, "unicyclic")
        assert len(hits) == 1
        assert canonical_form(hits[0]) == canonical_form(extremal_unicyclic(12))

    def test_validation(self):
        for bad in (10, 14, 8, 9):
            with pytest.raises(ValueError):
                extremal_unicyclic(bad)


class TestSpec:
    def test_spec_k(self):
        assert ExtremalSpec("tree", 14).k == 2
        assert ExtremalSpec("unicyclic", 16).k == 4
        with pytest.raises(ValueError):
            ExtremalSpec("grid", 12)

    def test_find_extremal_validates_family(self):
        with pytest.raises(ValueError):
            find_extremal_by_enumeration(8, "grid")
