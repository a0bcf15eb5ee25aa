"""Generators for the graph families used throughout the package."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from sepsys.errors import BadParams
from sepsys.graph_core.graph import Graph, build_graph
from sepsys.graph_core.grid import GridCoords


def _need(params: Sequence[int], count: int, tag: str) -> list[int]:
    if len(params) != count:
        raise BadParams(f"{tag} takes {count} parameter(s), got {list(params)}")
    return [int(p) for p in params]


def path_graph(n: int) -> Graph:
    if n < 1:
        raise BadParams("path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)], "path", (n,))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadParams("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)], "cycle", (n,))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise BadParams("complete graph needs n >= 1")
    return build_graph(n, combinations(range(n), 2), "complete", (n,))


def biclique_graph(m: int, n: int) -> Graph:
    """``K_{m,n}``: side L is ``0..m-1``, side R is ``m..m+n-1``."""
    if m < 1 or n < 1:
        raise BadParams("biclique needs m, n >= 1")
    edges = [(a, m + b) for a in range(m) for b in range(n)]
    meta = {"left": tuple(range(m)), "right": tuple(range(m, m + n))}
    return build_graph(m + n, edges, "biclique", (m, n), meta)


def grid_graph(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise BadParams("grid needs m, n >= 1")
    gc = GridCoords(m, n)
    edges = []
    for x in range(m):
        for y in range(n):
            if x + 1 < m:
                edges.append((gc.vertex(x, y), gc.vertex(x + 1, y)))
            if y + 1 < n:
                edges.append((gc.vertex(x, y), gc.vertex(x, y + 1)))
    return build_graph(m * n, edges, "grid", (m, n), {"coords": gc})


def hypercube_graph(d: int) -> Graph:
    if d < 1:
        raise BadParams("hypercube needs d >= 1")
    n = 1 << d
    edges = [(x, x | (1 << i)) for x in range(n) for i in range(d) if not x >> i & 1]
    return build_graph(n, edges, "hypercube", (d,))


def fan_graph(n: int) -> Graph:
    """Fan ``F_n``: apex 0 joined to every vertex of the path ``1..n-1``."""
    if n < 3:
        raise BadParams("fan needs n >= 3")
    edges = [(0, i) for i in range(1, n)] + [(i, i + 1) for i in range(1, n - 1)]
    return build_graph(n, edges, "fan", (n,), {"apex": 0, "rim": tuple(range(1, n))})


def star_graph(n: int) -> Graph:
    """``K_{1,n-1}`` with hub 0."""
    if n < 2:
        raise BadParams("star needs n >= 2")
    return build_graph(n, [(0, i) for i in range(1, n)], "star", (n,), {"hub": 0})


def binary_tree_graph(levels: int) -> Graph:
    """Complete binary tree with ``levels`` levels in heap order (root 0)."""
    if levels < 1:
        raise BadParams("binary tree needs at least one level")
    n = (1 << levels) - 1
    edges = [((v - 1) // 2, v) for v in range(1, n)]
    return build_graph(n, edges, "binary_tree", (levels,), {"root": 0})


@dataclass(frozen=True)
class TightTreeSpec:
    """The tree ``T_h`` together with its construction bookkeeping.

    ``leaf_label`` maps each leaf of the underlying complete binary tree to
    its left-to-right position.  ``subdivision_marks`` holds the vertices
    added by the three augmentation stages (level <= h-2 subdivisions,
    alternate subdivisions above the last internal level, pendant leaves).
    ``pendant_of`` maps each pendant vertex to the labelled leaf it hangs off.
    """

    h: int
    graph: Graph
    leaf_label: dict[int, int]
    subdivision_marks: tuple[frozenset[int], frozenset[int], frozenset[int]]
    root: int
    pendant_of: dict[int, int]
    binary_vertices: int

    @property
    def label_leaf(self) -> dict[int, int]:
        return {lab: v for v, lab in self.leaf_label.items()}


def gen_tight_tree(h: int) -> TightTreeSpec:
    """Build ``T_h`` on ``3 * 2**(h-1) - 3`` vertices.

    Levels are numbered from 1 at the root.  Vertices ``0..2**h - 2`` are
    the complete binary tree in heap order, so leaves appear left to right.
    """
    if h < 4:
        raise BadParams("tight tree needs h >= 4")
    nb = (1 << h) - 1
    first_leaf = (1 << (h - 1)) - 1
    level = [0] * nb
    for v in range(nb):
        level[v] = (v + 1).bit_length()
    edges: set[tuple[int, int]] = {((v - 1) // 2, v) for v in range(1, nb)}
    nxt = nb

    def subdivide(u: int, v: int) -> int:
        nonlocal nxt
        edges.remove((u, v))
        w = nxt
        nxt += 1
        edges.add((u, w))
        edges.add((v, w))
        return w

    stage1 = []
    for v in range(1, nb):
        if level[v] <= h - 2:
            stage1.append(subdivide((v - 1) // 2, v))
    stage2 = []
    # children at level h-1 in left-to-right (heap) order; every second one
    lvl_start = (1 << (h - 2)) - 1
    for k, v in enumerate(range(lvl_start, 2 * lvl_start + 1)):
        if k % 2 == 1:
            stage2.append(subdivide((v - 1) // 2, v))
    stage3 = []
    pendant_of = {}
    n_leaves = 1 << (h - 1)
    for lab in range(n_leaves):
        if lab % 4 == 2:
            leaf = first_leaf + lab + 1
            w = nxt
            nxt += 1
            edges.add((leaf, w))
            stage3.append(w)
            pendant_of[w] = leaf
    g = build_graph(nxt, sorted(edges), "tight_tree", (h,), {"root": 0})
    leaf_label = {first_leaf + i: i for i in range(n_leaves)}
    return TightTreeSpec(
        h,
        g,
        leaf_label,
        (frozenset(stage1), frozenset(stage2), frozenset(stage3)),
        0,
        pendant_of,
        nb,
    )


def gen_family(tag: str, params: Sequence[int]) -> Graph:
    """Dispatch on a family tag.  Outerplanar graphs live in :mod:`outerplanar`."""
    tag = tag.replace("-", "_")
    if tag == "path":
        return path_graph(*_need(params, 1, tag))
    if tag == "cycle":
        return cycle_graph(*_need(params, 1, tag))
    if tag == "complete":
        return complete_graph(*_need(params, 1, tag))
    if tag == "biclique":
        return biclique_graph(*_need(params, 2, tag))
    if tag == "grid":
        return grid_graph(*_need(params, 2, tag))
    if tag == "hypercube":
        return hypercube_graph(*_need(params, 1, tag))
    if tag == "fan":
        return fan_graph(*_need(params, 1, tag))
    if tag == "star":
        return star_graph(*_need(params, 1, tag))
    if tag == "binary_tree":
        return binary_tree_graph(*_need(params, 1, tag))
    if tag == "tight_tree":
        return gen_tight_tree(*_need(params, 1, tag)).graph
    raise BadParams(f"unknown or seed-dependent family {tag!r}")
