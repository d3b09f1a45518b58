"""Exact canonical forms: equal strings iff isomorphic.

Each connected component is canonically labeled by an algorithm suited to
its shape, then components are ordered by their canonical keys:

* trees and forests: AHU subtree codes rooted at the tree center(s);
* unicyclic components: rotation/reflection-minimal word of AHU codes of
  the trees hanging off the unique cycle;
* everything else: degree refinement with individualization, branching
  only on one representative per twin class, minimizing the adjacency
  bitstring over the explored labelings.

All three are complete invariants, so the dispatch (which is itself
isomorphism-invariant) preserves the equal-iff-isomorphic contract.
Intended for n <= 16; larger inputs work but may be slow.
"""

from __future__ import annotations

from typing import Sequence

from .graph6 import to_graph6
from .graphs import Graph

Code = tuple  # nested (mark, (child codes...)) tuples


def _rooted_code(
    g: Graph,
    root: int,
    blocked: frozenset[int] = frozenset(),
    mark: int | None = None,
) -> tuple[dict[int, Code], dict[int, int | None]]:
    """AHU codes of the tree reachable from root without entering blocked
    vertices.  Returns (code per vertex, parent per vertex)."""
    parent: dict[int, int | None] = {root: None}
    order = [root]
    for v in order:
        for w in g.neighbors(v):
            if w not in parent and w not in blocked:
                parent[w] = v
                order.append(w)
    code: dict[int, Code] = {}
    for v in reversed(order):
        kids = sorted(code[w] for w in g.neighbors(v) if parent.get(w) == v)
        code[v] = (1 if v == mark else 0, tuple(kids))
    return code, parent


def _code_dfs(g: Graph, root: int, parent: dict, code: dict) -> list[int]:
    """Preorder walk visiting children in ascending code order."""
    out = []
    stack = [root]
    while stack:
        v = stack.pop()
        out.append(v)
        kids = sorted(
            (w for w in g.neighbors(v) if parent.get(w) == v),
            key=lambda w: code[w],
        )
        stack.extend(reversed(kids))
    return out


def _tree_centers(g: Graph, comp: Sequence[int]) -> list[int]:
    n = len(comp)
    if n <= 2:
        return sorted(comp)
    deg = {v: g.degree(v) for v in comp}
    leaves = [v for v in comp if deg[v] == 1]
    removed = 0
    while n - removed > 2:
        nxt = []
        for v in leaves:
            deg[v] = 0
            for w in g.neighbors(v):
                if deg[w] > 0:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        removed += len(leaves)
        leaves = nxt
    return sorted(leaves)


def _tree_component_order(g: Graph, comp: Sequence[int]) -> list[int]:
    centers = _tree_centers(g, comp)
    if len(centers) == 1:
        c = centers[0]
        code, parent = _rooted_code(g, c)
        return _code_dfs(g, c, parent, code)
    c1, c2 = centers
    code1, par1 = _rooted_code(g, c1, frozenset([c2]))
    code2, par2 = _rooted_code(g, c2, frozenset([c1]))
    halves = [(code1[c1], c1, par1, code1), (code2[c2], c2, par2, code2)]
    halves.sort(key=lambda h: h[0])
    out = []
    for _, root, parent, code in halves:
        out.extend(_code_dfs(g, root, parent, code))
    return out


def tree_marked_code(g: Graph, v: int) -> Code:
    """Automorphism-orbit key for a vertex of a tree: two vertices get
    equal keys iff an automorphism maps one to the other."""
    comp = list(range(g.n))
    centers = _tree_centers(g, comp)
    if len(centers) == 1:
        c = centers[0]
        code, _ = _rooted_code(g, c, mark=v)
        return code[c]
    c1, c2 = centers
    code1, _ = _rooted_code(g, c1, frozenset([c2]), mark=v)
    code2, _ = _rooted_code(g, c2, frozenset([c1]), mark=v)
    return tuple(sorted([code1[c1], code2[c2]]))


def _unicyclic_component_order(g: Graph, comp: Sequence[int]) -> list[int]:
    # The 2-core of a unicyclic component is its unique cycle.
    deg = {v: g.degree(v) for v in comp}
    leaves = [v for v in comp if deg[v] == 1]
    while leaves:
        nxt = []
        for v in leaves:
            deg[v] = 0
            for w in g.neighbors(v):
                if deg[w] > 0:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        leaves = nxt
    coreset = {v for v in comp if deg[v] > 0}
    start = min(coreset)
    cyc = []
    prev, cur = None, start
    while True:
        cyc.append(cur)
        step = min(w for w in g.neighbors(cur) if w in coreset and w != prev)
        if step == start:
            break
        prev, cur = cur, step
    length = len(cyc)

    hang_code: dict[int, Code] = {}
    hang_parent: dict[int, int | None] = {}
    for c in cyc:
        code, parent = _rooted_code(g, c, frozenset(coreset - {c}))
        hang_code.update(code)
        hang_parent.update(parent)

    best = None
    best_walk = None
    for direction in (1, -1):
        for s in range(length):
            walk = [cyc[(s + direction * i) % length] for i in range(length)]
            cand = tuple(hang_code[v] for v in walk)
            if best is None or cand < best:
                best, best_walk = cand, walk
    out = []
    for c in best_walk:
        out.extend(_code_dfs(g, c, hang_parent, hang_code))
    return out


def _general_component_order(g: Graph, comp: Sequence[int]) -> list[int]:
    idx = {v: i for i, v in enumerate(comp)}
    k = len(comp)
    masks = [0] * k
    for v in comp:
        m = 0
        for w in g.neighbors(v):
            m |= 1 << idx[w]
        masks[idx[v]] = m

    def refine(cells: list[list[int]]) -> list[list[int]]:
        changed = True
        while changed:
            changed = False
            cellmasks = []
            for c in cells:
                cm = 0
                for v in c:
                    cm |= 1 << v
                cellmasks.append(cm)
            out = []
            for c in cells:
                if len(c) == 1:
                    out.append(c)
                    continue
                groups: dict[tuple, list[int]] = {}
                for v in c:
                    sig = tuple(
                        bin(masks[v] & cm).count("1") for cm in cellmasks
                    )
                    groups.setdefault(sig, []).append(v)
                if len(groups) > 1:
                    changed = True
                for sig in sorted(groups):
                    out.append(groups[sig])
            cells = out
        return cells

    def bits_key(order: list[int]) -> int:
        key = 0
        for j in range(1, k):
            mo = masks[order[j]]
            for i in range(j):
                key = (key << 1) | ((mo >> order[i]) & 1)
        return key

    best: list = [None, None]  # key, order

    def rec(cells: list[list[int]]) -> None:
        cells = refine(cells)
        target = next((ci for ci, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            kk = bits_key(order)
            if best[0] is None or kk < best[0]:
                best[0], best[1] = kk, order
            return
        cell = cells[target]
        # Branch once per twin class: swapping twins is an automorphism,
        # so pruned branches cannot change the minimum.
        classes: list[list[int]] = []
        for v in cell:
            for cls in classes:
                u = cls[0]
                if masks[u] == masks[v] or (
                    masks[u] | (1 << u)
                ) == (masks[v] | (1 << v)):
                    cls.append(v)
                    break
            else:
                classes.append([v])
        for cls in classes:
            v = cls[0]
            rest = [w for w in cell if w != v]
            rec(cells[:target] + [[v], rest] + cells[target + 1 :])

    rec([list(range(k))])
    return [comp[i] for i in best[1]]


def canonical_labeling(g: Graph) -> list[int]:
    """Old vertices listed in canonical order (position = new label)."""
    keyed = []
    for comp in g.components():
        compset = set(comp)
        m = sum(1 for u, v in g.edges if u in compset) if compset else 0
        if len(comp) == 1:
            order = list(comp)
        elif m == len(comp) - 1:
            order = _tree_component_order(g, comp)
        elif m == len(comp):
            order = _unicyclic_component_order(g, comp)
        else:
            order = _general_component_order(g, comp)
        pos = {v: i for i, v in enumerate(order)}
        local_edges = sorted(
            (min(pos[u], pos[v]), max(pos[u], pos[v]))
            for u, v in g.edges
            if u in compset
        )
        keyed.append(((len(comp), tuple(local_edges)), order))
    keyed.sort(key=lambda t: t[0])
    return [v for _, order in keyed for v in order]


def canonical_graph(g: Graph) -> Graph:
    order = canonical_labeling(g)
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    return g.relabel(perm)


def canonical_form(g: Graph) -> str:
    """Canonical graph6 string of a relabeled representative."""
    return to_graph6(canonical_graph(g))
