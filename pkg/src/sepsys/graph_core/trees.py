"""Tree algorithms: rooting, centroid, center, degree profiles, free-tree enumeration."""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from sepsys.errors import BadParams, NotATree
from sepsys.graph_core.graph import Graph, bfs_distances, build_graph

MAX_ENUM_N = 12


def require_tree(t: Graph) -> None:
    if not t.is_tree():
        raise NotATree(f"{t!r} has {t.m} edges, a tree on {t.n} vertices has {t.n - 1}")


def rooted_parents(t: Graph, root: int) -> tuple[list[int], list[int]]:
    """Parent array (root maps to -1) and BFS order from ``root``.

    Children are discovered in increasing vertex order.
    """
    parent = [-2] * t.n
    parent[root] = -1
    order = [root]
    i = 0
    while i < len(order):
        u = order[i]
        i += 1
        for w in sorted(t.adj[u]):
            if parent[w] == -2:
                parent[w] = u
                order.append(w)
    return parent, order


def children_lists(t: Graph, parent: list[int]) -> list[list[int]]:
    kids: list[list[int]] = [[] for _ in range(t.n)]
    for v in range(t.n):
        if parent[v] >= 0:
            kids[parent[v]].append(v)
    for k in kids:
        k.sort()
    return kids


def subtree_sizes(parent: list[int], order: list[int]) -> list[int]:
    size = [1] * len(parent)
    for v in reversed(order):
        if parent[v] >= 0:
            size[parent[v]] += size[v]
    return size


def centroid(t: Graph) -> int:
    """Smallest-index vertex whose removal leaves components of size <= n/2."""
    require_tree(t)
    parent, order = rooted_parents(t, 0)
    size = subtree_sizes(parent, order)
    for v in range(t.n):
        biggest = t.n - size[v]
        for w in t.adj[v]:
            if w != parent[v]:
                biggest = max(biggest, size[w])
        if 2 * biggest <= t.n:
            return v
    raise AssertionError("every tree has a centroid")


def eccentricities(g: Graph) -> list[int]:
    if g.is_tree():
        a = max(range(g.n), key=bfs_distances(g, 0).__getitem__)
        da = bfs_distances(g, a)
        b = max(range(g.n), key=da.__getitem__)
        db = bfs_distances(g, b)
        return [max(x, y) for x, y in zip(da, db)]
    rows, cols = zip(*g.edges)
    mat = csr_matrix((np.ones(g.m), (rows, cols)), shape=(g.n, g.n))
    dist = shortest_path(mat, directed=False, unweighted=True)
    return [int(x) for x in dist.max(axis=1)]


def center_radius(g: Graph) -> tuple[int, int]:
    """Vertex of minimum eccentricity (smallest index on ties) and the radius."""
    if g.n == 1:
        return 0, 0
    ecc = eccentricities(g)
    r = min(ecc)
    return ecc.index(r), r


@dataclass(frozen=True)
class DegreeProfile:
    a1: int
    a2: int
    a3plus: int
    good_edges: int
    bare_paths: int

    @property
    def n(self) -> int:
        return self.a1 + self.a2 + self.a3plus


def _count_bare_paths(t: Graph, deg: list[int]) -> int:
    # Each maximal run of degree-2 vertices whose two outside neighbours both
    # have degree >= 3 is one special bare path.
    seen = [False] * t.n
    count = 0
    for s in range(t.n):
        if deg[s] != 2 or seen[s]:
            continue
        seen[s] = True
        stack, ends = [s], []
        while stack:
            u = stack.pop()
            for w in t.adj[u]:
                if deg[w] == 2:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
                else:
                    ends.append(w)
        if len(ends) == 2 and all(deg[e] >= 3 for e in ends):
            count += 1
    return count


def degree_profile(g: Graph) -> DegreeProfile:
    deg = g.degrees()
    a1 = sum(1 for d in deg if d == 1)
    a2 = sum(1 for d in deg if d == 2)
    good = sum(
        1
        for u, v in g.edges
        if (deg[u] == 2 and deg[v] <= 2) or (deg[v] == 2 and deg[u] <= 2)
    )
    bare = _count_bare_paths(g, deg) if g.is_tree() else 0
    return DegreeProfile(a1, a2, g.n - a1 - a2, good, bare)


# -- free trees -------------------------------------------------------------


def tree_centers(t: Graph) -> list[int]:
    if t.n <= 2:
        return list(range(t.n))
    deg = t.degrees()
    layer = [v for v in range(t.n) if deg[v] == 1]
    remaining = t.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in t.adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_code(t: Graph, root: int) -> str:
    parent, order = rooted_parents(t, root)
    code: dict[int, str] = {}
    for v in reversed(order):
        kids = sorted(code.pop(w) for w in t.adj[v] if w != parent[v])
        code[v] = "(" + "".join(kids) + ")"
    return code[root]


def canonical_form(t: Graph) -> str:
    """Isomorphism-invariant string of a free tree (AHU code at the center)."""
    require_tree(t)
    return min(_rooted_code(t, c) for c in tree_centers(t))


def tree_from_code(code: str) -> Graph:
    edges = []
    stack: list[int] = []
    nxt = 0
    for ch in code:
        if ch == "(":
            if stack:
                edges.append((stack[-1], nxt))
            stack.append(nxt)
            nxt += 1
        else:
            stack.pop()
    return build_graph(nxt, edges)


def enumerate_trees(n: int) -> list[Graph]:
    """One representative per isomorphism class of free trees on ``n`` vertices.

    Trees are grown leaf by leaf and deduplicated by canonical form; output is
    sorted by canonical form, and each representative is the canonical tree
    decoded with vertex 0 at a center.
    """
    if not 1 <= n <= MAX_ENUM_N:
        raise BadParams(f"tree enumeration supports 1 <= n <= {MAX_ENUM_N}, got {n}")
    codes = {"()"}
    for size in range(2, n + 1):
        grown = set()
        for code in codes:
            base = tree_from_code(code)
            for v in range(base.n):
                t = build_graph(size, list(base.edges) + [(v, size - 1)])
                grown.add(canonical_form(t))
        codes = grown
    return [tree_from_code(c) for c in sorted(codes)]


def gen_random_tree(n: int, seed: int = 0) -> Graph:
    """Uniformly random labelled tree on ``n`` vertices, decoded from a random Pruefer sequence."""
    if n < 1:
        raise BadParams("a tree needs at least one vertex")
    if n == 1:
        return build_graph(1, [], "tree", (n,), {"seed": seed})
    rng = random.Random(seed)
    code = [rng.randrange(n) for _ in range(n - 2)]
    remaining = [1] * n
    for v in code:
        remaining[v] += 1
    leaves = [v for v in range(n) if remaining[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        remaining[v] -= 1
        if remaining[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return build_graph(n, edges, "tree", (n,), {"seed": seed})
