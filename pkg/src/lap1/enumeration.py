"""Isomorph-free generation of trees and unicyclic graphs, class filters,
and seeded random connected graphs.

Trees come from canonical augmentation: each tree of order n-1 is grown
by one leaf per vertex orbit, and a child survives only when the added
leaf lies in the canonical leaf orbit of the child.  This emits exactly
one representative per isomorphism class with no global dedupe.

Unicyclic graphs are every tree representative plus one non-edge,
deduplicated by canonical form (simple and exact at these sizes).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .canon import canonical_form, tree_marked_code
from .graph6 import parse_graph6
from .graphs import Graph, find_pendant_paths, is_reduced

MAX_TREE_N = 16
MAX_UNICYCLIC_N = 14

FILTER_REDUCED = "reduced"
FILTER_NO_PENDANT_P3 = "no-pendant-P3"
KNOWN_FILTERS = frozenset({FILTER_REDUCED, FILTER_NO_PENDANT_P3})


@dataclass(frozen=True)
class GraphClass:
    """A base family plus structural filters."""

    base: str  # "tree" | "unicyclic" | "any-connected"
    filters: frozenset[str] = frozenset()

    def __post_init__(self) -> None:
        if self.base not in ("tree", "unicyclic", "any-connected"):
            raise ValueError(f"unknown base class {self.base!r}")
        unknown = set(self.filters) - KNOWN_FILTERS
        if unknown:
            raise ValueError(f"unknown filters {sorted(unknown)}")

    def matches(self, g: Graph) -> bool:
        if self.base == "tree" and not g.is_tree():
            return False
        if self.base == "unicyclic" and not g.is_unicyclic():
            return False
        if self.base == "any-connected" and not g.is_connected():
            return False
        if FILTER_REDUCED in self.filters and not is_reduced(g):
            return False
        if FILTER_NO_PENDANT_P3 in self.filters and find_pendant_paths(g, 3):
            return False
        return True


CLASS_T = GraphClass("tree", frozenset({FILTER_REDUCED, FILTER_NO_PENDANT_P3}))
CLASS_G_UNICYCLIC = GraphClass(
    "unicyclic", frozenset({FILTER_REDUCED, FILTER_NO_PENDANT_P3})
)


@lru_cache(maxsize=None)
def _tree_level(n: int) -> tuple[str, ...]:
    """Canonical graph6 strings of all free trees of order n, sorted."""
    if n == 1:
        return (canonical_form(Graph(1)),)
    out = []
    for parent_g6 in _tree_level(n - 1):
        parent = parse_graph6(parent_g6)
        seen_orbits = set()
        for v in range(parent.n):
            orbit = tree_marked_code(parent, v)
            if orbit in seen_orbits:
                continue
            seen_orbits.add(orbit)
            child = Graph._unchecked(
                parent.n + 1, set(parent.edges) | {(v, parent.n)}
            )
            added = parent.n
            leaves = [w for w in range(child.n) if child.degree(w) == 1]
            keys = {w: tree_marked_code(child, w) for w in leaves}
            if keys[added] == min(keys.values()):
                out.append(canonical_form(child))
    return tuple(sorted(out))


def free_trees(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of trees on n vertices,
    in canonical-string order."""
    if not 1 <= n <= MAX_TREE_N:
        raise ValueError(f"tree enumeration supports 1 <= n <= {MAX_TREE_N}")
    for g6 in _tree_level(n):
        yield parse_graph6(g6)


@lru_cache(maxsize=None)
def _unicyclic_level(n: int) -> tuple[str, ...]:
    seen = set()
    for tree_g6 in _tree_level(n):
        tree = parse_graph6(tree_g6)
        for u in range(n):
            for v in range(u + 1, n):
                if tree.has_edge(u, v):
                    continue
                seen.add(canonical_form(tree.add_edge(u, v)))
    return tuple(sorted(seen))


def unicyclic_graphs(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs with
    exactly n edges on n vertices, in canonical-string order."""
    if not 3 <= n <= MAX_UNICYCLIC_N:
        raise ValueError(
            f"unicyclic enumeration supports 3 <= n <= {MAX_UNICYCLIC_N}"
        )
    for g6 in _unicyclic_level(n):
        yield parse_graph6(g6)


def filter_class(stream: Iterable[Graph], c: GraphClass) -> Iterator[Graph]:
    """Graphs of the stream satisfying all class predicates, order-stable."""
    return (g for g in stream if c.matches(g))


def trees_in_class_T(n: int) -> list[Graph]:
    return list(filter_class(free_trees(n), CLASS_T))


def unicyclic_in_class_G(n: int) -> list[Graph]:
    return list(filter_class(unicyclic_graphs(n), CLASS_G_UNICYCLIC))


def random_connected_graph(
    n: int, edge_prob: Fraction | float | str, seed: int
) -> Graph:
    """Seeded G(n, p) conditioned to be connected by deterministically
    bridging components.  Identical inputs give identical graphs."""
    if n < 1:
        raise ValueError("need at least one vertex")
    p = Fraction(edge_prob)
    if not 0 < p < 1:
        raise ValueError("edge probability must be strictly between 0 and 1")
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.randrange(p.denominator) < p.numerator
    ]
    g = Graph(n, edges)
    comps = g.components()
    while len(comps) > 1:
        a = rng.choice(comps[0])
        b = rng.choice(comps[1])
        g = g.add_edge(a, b)
        comps = g.components()
    return g
