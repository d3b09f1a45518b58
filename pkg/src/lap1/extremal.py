"""Constructors for the equality-attaining families of the two bounds.

The source figures for these families are not recoverable, so the shapes
were reconstructed from exhaustive sweeps and are re-verified against the
exact engine every time an instance is built:

* extremal tree (order n = 4k + 6, multiplicity k): a caterpillar with
  spine P_{3k+5} and one pendant on every third spine vertex starting at
  the third.  Unique in its class at n = 6, 10, 14 by enumeration.
* extremal unicyclic (order n = 4k, multiplicity k): the sun C_{3k} with
  one pendant on every third cycle vertex.  Unique at n = 12.
"""

from __future__ import annotations

from dataclasses import dataclass

from .enumeration import trees_in_class_T, unicyclic_in_class_G
from .graphs import Graph, in_class_G
from .linalg import laplacian_multiplicity_one

FAMILIES = ("tree", "unicyclic")


@dataclass(frozen=True)
class ExtremalSpec:
    """Validated order/family pair; k is the attained multiplicity."""

    family: str
    n: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "tree":
            if self.n % 4 != 2 or self.n < 6:
                raise ValueError(
                    f"extremal trees need n = 2 (mod 4), n >= 6; got {self.n}"
                )
        else:
            if self.n % 4 != 0 or self.n < 12:
                raise ValueError(
                    f"extremal unicyclic graphs need n = 0 (mod 4), n >= 12;"
                    f" got {self.n}"
                )

    @property
    def k(self) -> int:
        return (self.n - 6) // 4 if self.family == "tree" else self.n // 4


def _verified(g: Graph, expected_m: int) -> Graph:
    if not in_class_G(g):
        raise RuntimeError("constructed extremal graph left its class")
    actual = laplacian_multiplicity_one(g)
    if actual != expected_m:
        raise RuntimeError(
            f"constructed extremal graph has multiplicity {actual},"
            f" expected {expected_m}"
        )
    return g


def extremal_tree(n: int) -> Graph:
    """The unique tree of its class attaining multiplicity (n - 6) / 4.

    Spine vertices are 0..3k+4 in path order; pendant j (vertex 3k+5+j)
    hangs on spine vertex 3j+2.  The first gadget is vertices
    {0, 1, 2, 3k+5}: deleting it leaves the extremal tree of order n-4.
    """
    spec = ExtremalSpec("tree", n)
    k = spec.k
    spine = 3 * k + 5
    edges = [(i, i + 1) for i in range(spine - 1)]
    edges += [(3 * j + 2, spine + j) for j in range(k + 1)]
    return _verified(Graph(n, edges), k)


def tree_gadget_vertices(n: int) -> tuple[int, ...]:
    """The designated 4-vertex gadget of extremal_tree(n): deleting it
    drops the multiplicity by exactly 1 (empty for n = 6)."""
    spec = ExtremalSpec("tree", n)
    if spec.k == 0:
        return ()
    return (0, 1, 2, 3 * spec.k + 5)


def extremal_unicyclic(n: int) -> Graph:
    """The sun: cycle C_{3k} (vertices 0..3k-1 in cycle order) with
    pendant 3k+j on cycle vertex 3j; attains multiplicity n / 4."""
    spec = ExtremalSpec("unicyclic", n)
    k = spec.k
    edges = [(i, (i + 1) % (3 * k)) for i in range(3 * k)]
    edges += [(3 * j, 3 * k + j) for j in range(k)]
    return _verified(Graph(n, edges), k)


def find_extremal_by_enumeration(n: int, family: str) -> list[Graph]:
    """All members of the class attaining the theorem's bound exactly,
    one per isomorphism class.  Empty whenever the bound is not an
    integer."""
    if family == "tree":
        members = trees_in_class_T(n)
        return [t for t in members if 4 * laplacian_multiplicity_one(t) == n - 6]
    if family == "unicyclic":
        members = unicyclic_in_class_G(n)
        return [g for g in members if 4 * laplacian_multiplicity_one(g) == n]
    raise ValueError(f"unknown family {family!r}")
