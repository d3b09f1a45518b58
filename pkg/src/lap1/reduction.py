"""Multiplicity-preserving and multiplicity-shifting graph reductions,
with audited traces, plus the fast multiplicity pipeline.

Rules and their effect on the multiplicity of the Laplacian eigenvalue 1:

* PendantCluster     delete surplus pendants until p = q; shift +(p - q)
* ReductionOperation remove a pendant and its neighbor, hang a fresh P_2
                     on every other former neighbor; preserving for
                     neighbor degree >= 3
* DeletePendantP3    drop a pendant P_3 from a tree; preserving
* EdgeSplit          detach an edge at a quasi-pendant and reconnect it
                     through a fresh P_2; preserving
* ContractInternalP5 shrink an internal P_5 of a tree to an edge;
                     preserving
* ContractLineP4     contract an internal P_4 to a vertex; preserves the
                     adjacency multiplicity of -1
* terminal rules     StarLikeZero / DoubleStarLikeZero (multiplicity 0),
                     CycleClosedForm (2 if 6 | n else 0),
                     ExactRankFallback (exact rank computation)
"""

from __future__ import annotations

from dataclasses import dataclass

from .canon import canonical_form
from .graph6 import to_graph6
from .graphs import (
    Graph,
    PathLocation,
    PENDANT_PATH,
    INTERNAL_PATH,
    find_pendant_paths,
    is_double_star_like,
    is_star_like,
    pendant_profile,
)
from .linalg import laplacian_multiplicity_one

PENDANT_CLUSTER = "PendantCluster"
REDUCTION_OPERATION = "ReductionOperation"
DELETE_PENDANT_P3 = "DeletePendantP3"
EDGE_SPLIT = "EdgeSplit"
CONTRACT_INTERNAL_P5 = "ContractInternalP5"
CONTRACT_LINE_P4 = "ContractLineP4"
STAR_LIKE_ZERO = "StarLikeZero"
DOUBLE_STAR_LIKE_ZERO = "DoubleStarLikeZero"
CYCLE_CLOSED_FORM = "CycleClosedForm"
EXACT_RANK_FALLBACK = "ExactRankFallback"

RULES = frozenset(
    {
        PENDANT_CLUSTER,
        REDUCTION_OPERATION,
        DELETE_PENDANT_P3,
        EDGE_SPLIT,
        CONTRACT_INTERNAL_P5,
        CONTRACT_LINE_P4,
        STAR_LIKE_ZERO,
        DOUBLE_STAR_LIKE_ZERO,
        CYCLE_CLOSED_FORM,
        EXACT_RANK_FALLBACK,
    }
)

TERMINAL_RULES = frozenset(
    {STAR_LIKE_ZERO, DOUBLE_STAR_LIKE_ZERO, CYCLE_CLOSED_FORM, EXACT_RANK_FALLBACK}
)


@dataclass(frozen=True)
class ReductionStep:
    rule: str
    before: str  # canonical form
    after: str   # canonical form
    offset: int

    def to_json(self) -> dict:
        return {
            "rule": self.rule,
            "before_g6": self.before,
            "after_g6": self.after,
            "offset": self.offset,
        }


@dataclass(frozen=True)
class ReductionTrace:
    input_g6: str
    steps: tuple[ReductionStep, ...]
    total: int

    def to_json(self) -> dict:
        return {
            "input_g6": self.input_g6,
            "steps": [s.to_json() for s in self.steps],
            "total": self.total,
        }


# -- individual operations ------------------------------------------------

def reduced_graph(g: Graph) -> tuple[Graph, int]:
    """Delete pendants until every quasi-pendant keeps exactly one (the
    lowest-indexed).  Returns the reduced graph and the offset p - q."""
    prof = pendant_profile(g)
    drop = []
    by_owner: dict[int, list[int]] = {}
    for pend in prof.pendants:
        by_owner.setdefault(prof.pendant_owner[pend], []).append(pend)
    for owner, pends in by_owner.items():
        drop.extend(sorted(pends)[1:])
    reduced, _ = g.delete_vertices(drop)
    return reduced, prof.p - prof.q


def reduction_operation(g: Graph, u: int, v: int) -> Graph:
    """Remove pendant u and its neighbor v, then join each remaining
    former neighbor of v to an endpoint of a fresh 2-vertex path.

    Survivors keep their relative order starting at 0; the fresh path for
    the i-th former neighbor (ascending) occupies the next two indices,
    inner endpoint first.  Preserves the multiplicity of 1 when the
    degree of v is at least 3; for degree 2 the result is isomorphic to
    the input.
    """
    if not (0 <= u < g.n) or g.degree(u) != 1:
        raise ValueError(f"vertex {u} is not a pendant vertex")
    if not g.has_edge(u, v):
        raise ValueError(f"vertices {u} and {v} are not adjacent")
    others = sorted(w for w in g.neighbors(v) if w != u)
    h, remap = g.delete_vertices([u, v])
    edges = list(h.edges)
    nxt = h.n
    for w in others:
        inner = nxt
        outer = nxt + 1
        edges.append((remap[w], inner) if remap[w] < inner else (inner, remap[w]))
        edges.append((inner, outer))
        nxt += 2
    return Graph(nxt, edges)


def final_reduction_graph(g: Graph) -> Graph:
    """Apply the reduction operation until no quasi-pendant vertex has
    degree greater than 2.  Each application removes one such vertex and
    creates only degree-2 quasi-pendants, so this terminates within q(g)
    steps."""
    cur = g
    while True:
        prof = pendant_profile(cur)
        target = next(
            (v for v in prof.quasi_pendants if cur.degree(v) > 2), None
        )
        if target is None:
            return cur
        u = min(w for w in cur.neighbors(target) if cur.degree(w) == 1)
        cur = reduction_operation(cur, u, target)


def _check_pendant_p3(g: Graph, path: PathLocation) -> None:
    if path.kind != PENDANT_PATH or len(path.vertices) != 3:
        raise ValueError("path is not a pendant P_3")
    if path not in find_pendant_paths(g, 3):
        raise ValueError(f"{path.vertices} is not a pendant P_3 of this graph")


def delete_pendant_P3(t: Graph, path: PathLocation) -> Graph:
    """Delete a pendant P_3 from a tree; the multiplicity of 1 is
    unchanged."""
    if not t.is_tree():
        raise ValueError("pendant P_3 deletion is stated for trees only")
    _check_pendant_p3(t, path)
    result, _ = t.delete_vertices(path.vertices)
    return result


def edge_split(g: Graph, u: int, v: int, w: int) -> Graph:
    """Detach the edge v-w and reconnect w through a fresh path P_2.

    Requires pendant u adjacent to v, degree of v at least 3, and w
    another neighbor of v.  The result has two extra vertices (y = n
    joined to w, x = n + 1 joined to y) and the same multiplicity of 1.
    """
    if not (0 <= u < g.n) or g.degree(u) != 1:
        raise ValueError(f"vertex {u} is not a pendant vertex")
    if not g.has_edge(u, v):
        raise ValueError(f"vertices {u} and {v} are not adjacent")
    if g.degree(v) < 3:
        raise ValueError(f"vertex {v} must have degree at least 3")
    if w == u or not g.has_edge(v, w):
        raise ValueError(f"vertex {w} is not another neighbor of {v}")
    y, x = g.n, g.n + 1
    edges = list((g.remove_edge(v, w)).edges)
    edges.extend([(w, y), (y, x)])
    return Graph(g.n + 2, edges)


def _check_internal(g: Graph, path: PathLocation, k: int) -> None:
    vs = path.vertices
    if path.kind != INTERNAL_PATH or len(vs) != k:
        raise ValueError(f"path is not an internal P_{k}")
    if len(set(vs)) != k:
        raise ValueError("path vertices repeat")
    for a, b in zip(vs, vs[1:]):
        if not g.has_edge(a, b):
            raise ValueError(f"vertices {a} and {b} are not adjacent")
    for mid in vs[1:-1]:
        if g.degree(mid) != 2:
            raise ValueError(f"interior vertex {mid} has degree != 2")
    if set(g.neighbors(vs[0])) & set(g.neighbors(vs[-1])):
        raise ValueError("path endpoints share a neighbor")


def contract_line_P4(g: Graph, path: PathLocation) -> Graph:
    """Contract an internal P_4 to a single vertex; the adjacency
    multiplicity of -1 is unchanged.  The new vertex takes the highest
    index of the result."""
    _check_internal(g, path, 4)
    u1, _, _, u4 = path.vertices
    if g.has_edge(u1, u4):
        raise ValueError("endpoints are adjacent; contraction would self-loop")
    outside = (set(g.neighbors(u1)) | set(g.neighbors(u4))) - set(path.vertices)
    h, remap = g.delete_vertices(path.vertices)
    merged = h.n
    edges = list(h.edges) + [(remap[x], merged) for x in sorted(outside)]
    return Graph(h.n + 1, edges)


def contract_tree_P5(t: Graph, path: PathLocation) -> Graph:
    """Delete the three interior vertices of an internal P_5 of a tree and
    join its endpoints; the multiplicity of 1 is unchanged."""
    if not t.is_tree():
        raise ValueError("P_5 contraction is stated for trees only")
    _check_internal(t, path, 5)
    u1, u2, u3, u4, u5 = path.vertices
    h, remap = t.delete_vertices([u2, u3, u4])
    return h.add_edge(remap[u1], remap[u5])


# -- fast pipeline ---------------------------------------------------------

def _tree_component_pendant_p3(g: Graph) -> PathLocation | None:
    """Lexicographically smallest pendant P_3 lying in a tree component."""
    comps = g.components()
    comp_of = {}
    for ci, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = ci
    tree_comp = set()
    for ci, comp in enumerate(comps):
        compset = set(comp)
        m = sum(1 for a, b in g.edges if a in compset)
        if m == len(comp) - 1:
            tree_comp.add(ci)
    for path in find_pendant_paths(g, 3):
        if comp_of[path.vertices[0]] in tree_comp:
            return path
    return None


def _is_bare_cycle(g: Graph) -> bool:
    return g.n >= 3 and g.is_connected() and all(g.degree(v) == 2 for v in range(g.n))


def cycle_multiplicity_one(n: int) -> int:
    """Closed form for cycles: the Laplacian eigenvalues of C_n are
    2 - 2cos(2 pi j / n), which hit 1 exactly at j = n/6 and j = 5n/6."""
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return 2 if n % 6 == 0 else 0


def multiplicity_fast(g: Graph) -> tuple[int, ReductionTrace]:
    """Multiplicity of 1 via the reduction pipeline, with a replayable
    trace.  Rule order is fixed: pendant clustering, then pendant-P_3
    deletion on tree components, then terminal rules per component."""
    steps: list[ReductionStep] = []
    cur = g
    cur_form = canonical_form(cur)
    total = 0
    while True:
        prof = pendant_profile(cur)
        if prof.p > prof.q:
            nxt, off = reduced_graph(cur)
            nxt_form = canonical_form(nxt)
            steps.append(ReductionStep(PENDANT_CLUSTER, cur_form, nxt_form, off))
            total += off
            cur, cur_form = nxt, nxt_form
            continue
        path = _tree_component_pendant_p3(cur)
        if path is not None:
            nxt, _ = cur.delete_vertices(path.vertices)
            nxt_form = canonical_form(nxt)
            steps.append(ReductionStep(DELETE_PENDANT_P3, cur_form, nxt_form, 0))
            cur, cur_form = nxt, nxt_form
            continue
        break
    for comp in cur.components():
        sub, _ = cur.induced_subgraph(comp)
        form = canonical_form(sub)
        if is_star_like(sub):
            rule, residual = STAR_LIKE_ZERO, 0
        elif is_double_star_like(sub):
            rule, residual = DOUBLE_STAR_LIKE_ZERO, 0
        elif _is_bare_cycle(sub):
            rule, residual = CYCLE_CLOSED_FORM, cycle_multiplicity_one(sub.n)
        else:
            rule, residual = EXACT_RANK_FALLBACK, laplacian_multiplicity_one(sub)
        steps.append(ReductionStep(rule, form, form, residual))
        total += residual
    return total, ReductionTrace(to_graph6(g), tuple(steps), total)
