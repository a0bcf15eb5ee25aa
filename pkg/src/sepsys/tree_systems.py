"""Vertex-separating tree systems.

Two constructions for trees, one hanging everything off a centroid and
one indexing leaves in post-order and separating same-depth vertices by
the bitwise OR of the leaf labels below them.  General graphs reuse the
second on a BFS tree grown from a center.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from sepsys.constructions.common import checked
from sepsys.errors import BadParams, EmptySet, IntervalsOverlap, WrongOrder
from sepsys.graph_core.graph import Graph, bfs_distances, build_graph
from sepsys.graph_core.trees import center_radius, centroid, children_lists, require_tree, rooted_parents
from sepsys.separation.bounds import clog2
from sepsys.separation.system import Certificate, SystemElement, make_certificate


# -- bitwise machinery -------------------------------------------------------


def b_fold(values: Iterable[int]) -> int:
    """Bitwise OR of a non-empty collection."""
    vals = list(values)
    if not vals:
        raise EmptySet("bitwise OR of an empty set")
    out = 0
    for v in vals:
        out |= v
    return out


def c_transform(values: Iterable[int]) -> set[int]:
    """Complement every element in ``k`` bits, ``k`` the bit length of the maximum."""
    vals = set(values)
    if not vals:
        raise EmptySet("complement of an empty set")
    full = (1 << max(vals).bit_length()) - 1
    return {full - x for x in vals}


@dataclass(frozen=True)
class LabelInterval:
    lo: int
    hi: int

    def __post_init__(self) -> None:
        if not 0 <= self.lo <= self.hi:
            raise BadParams(f"need 0 <= lo <= hi, got [{self.lo}, {self.hi}]")

    def __contains__(self, x: int) -> bool:
        return self.lo <= x <= self.hi


def interval_or(lo: int, hi: int) -> int:
    """OR of all integers in ``[lo, hi]``: the common prefix, then all ones."""
    return hi | ((1 << (lo ^ hi).bit_length()) - 1)


class Witness(enum.Enum):
    B_DIFFERS = "b"
    C_DIFFERS = "c"


def bitor_witness(first: LabelInterval, second: LabelInterval) -> Witness:
    """Which of the two OR comparisons tells disjoint intervals apart.

    Complements are taken in the common width ``k`` of the larger maximum.
    ``B_DIFFERS`` wins when both comparisons differ.

    Raises:
        IntervalsOverlap: the intervals share an integer.
        WrongOrder: ``second`` lies left of ``first``.
    """
    if first.hi >= second.lo and second.hi >= first.lo:
        raise IntervalsOverlap(f"[{first.lo}, {first.hi}] meets [{second.lo}, {second.hi}]")
    if second.hi < first.lo:
        raise WrongOrder("the first interval must lie left of the second")
    if interval_or(first.lo, first.hi) != interval_or(second.lo, second.hi):
        return Witness.B_DIFFERS
    full = (1 << second.hi.bit_length()) - 1
    c1 = interval_or(full - first.hi, full - first.lo)
    c2 = interval_or(full - second.hi, full - second.lo)
    if c1 != c2:
        return Witness.C_DIFFERS
    raise AssertionError(f"no witness for {first} and {second}")


# -- helpers ----------------------------------------------------------------


def _subtree(vertices: Iterable[int], parent: list[int]) -> SystemElement:
    """Rooted subtree on a parent-closed vertex set (the top vertex has its parent outside)."""
    vs = set(vertices)
    return SystemElement.tree(vs, [(v, parent[v]) for v in vs if parent[v] in vs])


def _prepare_tree(t: Graph) -> None:
    require_tree(t)
    if t.n < 2:
        raise BadParams("a tree system needs at least 2 vertices")


# -- centroid construction ---------------------------------------------------


@dataclass(frozen=True)
class CentroidPlan:
    """``components[j]`` lists one component of ``T - v_star`` in BFS order from its root."""

    v_star: int
    components: tuple[tuple[int, ...], ...]
    label_bits: int
    parent: tuple[int, ...]

    @property
    def roots(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.components)

    @property
    def comp_labels(self) -> tuple[str, ...]:
        """Binary label of each component, least significant bit first."""
        return tuple(
            "".join(str(j >> b & 1) for b in range(self.label_bits))
            for j in range(len(self.components))
        )

    def bit_tree(self, bit: int) -> set[int]:
        verts = {self.v_star}
        for label, comp in enumerate(self.components):
            if label >> bit & 1:
                verts.update(comp)
        return verts

    @property
    def merged_path_trees(self) -> tuple[frozenset[int], ...]:
        """Index ``j``: ``v_star`` plus the root path of the ``j``-th vertex of every component."""
        out = []
        for j in range(max(len(c) for c in self.components)):
            verts = {self.v_star}
            for comp in self.components:
                if j < len(comp):
                    v = comp[j]
                    while v != self.v_star:
                        verts.add(v)
                        v = self.parent[v]
            out.append(frozenset(verts))
        return tuple(out)


def centroid_plan(t: Graph) -> CentroidPlan:
    _prepare_tree(t)
    v_star = centroid(t)
    parent, order = rooted_parents(t, v_star)
    comps: dict[int, list[int]] = {}
    top = {}
    for v in order[1:]:
        top[v] = v if parent[v] == v_star else top[parent[v]]
        comps.setdefault(top[v], []).append(v)
    components = tuple(tuple(comps[r]) for r in sorted(comps))
    return CentroidPlan(v_star, components, clog2(len(components)), tuple(parent))


def centroid_tree_system(t: Graph) -> Certificate:
    """Separate a tree with subtrees through a centroid ``v*``.

    Components of ``T - v*`` get binary labels (sorted by root), and one
    tree per label bit spans ``v*`` plus the components with that bit set.
    Inside each component the ``j``-th vertex in BFS order gets its root
    path; those paths are merged across components through ``v*``.  Two
    vertices of one component are then apart because neither lies on the
    other's root path unless it is an ancestor, which cannot hold both ways.
    """
    plan = centroid_plan(t)
    parent = list(plan.parent)
    v_star = plan.v_star
    elems = [_subtree(plan.bit_tree(bit), parent) for bit in range(plan.label_bits)]
    elems += [_subtree(verts, parent) for verts in plan.merged_path_trees]
    elems.append(SystemElement.tree([v_star], []))
    bound = t.n // 2 + clog2(t.n) + 1
    return checked(make_certificate(t, "tree", elems, "centroid-tree", [t.n], bound))


# -- radius construction -----------------------------------------------------


@dataclass(frozen=True)
class RadiusPlan:
    """Rooted view of a tree with post-order leaf labels.

    ``leaf_span[u]`` is the label interval of the leaves below ``u``; the
    root is never a leaf.
    """

    root: int
    radius: int
    parent: tuple[int, ...]
    depth: tuple[int, ...]
    leaves: tuple[int, ...]
    leaf_span: tuple[LabelInterval, ...]

    @property
    def label_bits(self) -> int:
        return clog2(len(self.leaves))

    @property
    def leaf_order(self) -> dict[int, int]:
        """Leaf vertex to its post-order label."""
        return {v: lab for lab, v in enumerate(self.leaves)}

    @property
    def subtree_intervals(self) -> tuple[LabelInterval, ...]:
        return self.leaf_span

    @property
    def level_trees(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(self.level_vertices(i)) for i in range(self.radius + 1))

    @property
    def delta_sets(self) -> dict[tuple[int, int], frozenset[int]]:
        return {(j, i): frozenset(self.delta(j, i)) for i in range(self.label_bits) for j in (0, 1)}

    @property
    def gamma_trees(self) -> dict[tuple[int, int], frozenset[int]]:
        return {(j, i): frozenset(self.gamma_vertices(j, i)) for i in range(self.label_bits) for j in (0, 1)}

    def level_vertices(self, i: int) -> list[int]:
        return [v for v, d in enumerate(self.depth) if d <= i]

    def delta(self, j: int, i: int) -> list[int]:
        """Leaves whose label has bit ``i`` equal to ``j``."""
        return [v for lab, v in enumerate(self.leaves) if (lab >> i & 1) == j]

    def gamma_vertices(self, j: int, i: int) -> set[int]:
        """Smallest rooted subtree containing the leaves of :meth:`delta`."""
        out: set[int] = set()
        for v in self.delta(j, i):
            while v >= 0 and v not in out:
                out.add(v)
                v = self.parent[v]
        return out


def radius_plan(t: Graph, root: int | None = None) -> RadiusPlan:
    _prepare_tree(t)
    if root is None:
        root, _ = center_radius(t)
    parent, order = rooted_parents(t, root)
    kids = children_lists(t, parent)
    depth = [0] * t.n
    for v in order[1:]:
        depth[v] = depth[parent[v]] + 1
    leaves: list[int] = []
    lo = [0] * t.n
    hi = [0] * t.n
    # iterative post-order, children in increasing index order
    stack = [(root, False)]
    while stack:
        v, done = stack.pop()
        if done:
            if kids[v]:
                lo[v], hi[v] = lo[kids[v][0]], hi[kids[v][-1]]
            else:
                lo[v] = hi[v] = len(leaves)
                leaves.append(v)
            continue
        stack.append((v, True))
        stack.extend((w, False) for w in reversed(kids[v]))
    spans = tuple(LabelInterval(lo[v], hi[v]) for v in range(t.n))
    return RadiusPlan(root, max(depth), tuple(parent), tuple(depth), tuple(leaves), spans)


def _radius_elements(plan: RadiusPlan) -> list[SystemElement]:
    parent = list(plan.parent)
    elems = [_subtree(plan.level_vertices(i), parent) for i in range(plan.radius + 1)]
    for i in range(plan.label_bits):
        for j in (1, 0):
            elems.append(_subtree(plan.gamma_vertices(j, i), parent))
    return elems


def radius_tree_system(t: Graph, root: int | None = None) -> Certificate:
    """Level trees around a center plus two trees per bit of the post-order leaf labels.

    Vertices at different depths are split by the level trees.  Two
    vertices at the same depth have disjoint leaf intervals below them, and
    the OR of one interval or of its complement differs from the other's.
    """
    plan = radius_plan(t, root)
    elems = _radius_elements(plan)
    bound = plan.radius + 2 * clog2(t.n) + 1
    params = [t.n] if root is None else [t.n, root]
    return checked(make_certificate(t, "tree", elems, "radius-tree", params, bound))


def bfs_tree(g: Graph, root: int) -> Graph:
    """BFS tree from ``root``; each vertex hangs off its smallest-index neighbour one level up."""
    dist = bfs_distances(g, root)
    edges = []
    for v in range(g.n):
        if v != root:
            up = min(w for w in g.adj[v] if dist[w] == dist[v] - 1)
            edges.append((up, v))
    return build_graph(g.n, edges)


def graph_tree_system(g: Graph) -> Certificate:
    """Radius construction on a BFS tree from a center of ``g``; elements are subtrees of ``g``."""
    if g.n < 2:
        raise BadParams("a tree system needs at least 2 vertices")
    c, r = center_radius(g)
    plan = radius_plan(bfs_tree(g, c), c)
    bound = r + 2 * clog2(g.n) + 1
    return checked(make_certificate(g, "tree", _radius_elements(plan), "graph-tree", [g.n], bound))
