"""Maximal outerplanar graphs: random generation, outer-cycle recovery, inner dual."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from sepsys.errors import BadParams, NotMaximalOuterplanar
from sepsys.graph_core.graph import Graph, build_graph

Triangle = tuple[int, int, int]


@dataclass(frozen=True)
class OuterplanarEmbedding:
    """Outer Hamiltonian cycle, chords and triangular faces of a triangulated polygon.

    ``outer_cycle`` is normalised to start at vertex 0 and to continue with
    the smaller of its two cycle neighbours.
    """

    outer_cycle: tuple[int, ...]
    chords: frozenset[tuple[int, int]]
    triangles: tuple[Triangle, ...]

    @property
    def n(self) -> int:
        return len(self.outer_cycle)

    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.outer_cycle)}


def _normalise_cycle(cycle: list[int]) -> tuple[int, ...]:
    i = cycle.index(min(cycle))
    rot = cycle[i:] + cycle[:i]
    if len(rot) > 2 and rot[-1] < rot[1]:
        rot = [rot[0]] + rot[1:][::-1]
    return tuple(rot)


def _embedding(cycle: list[int], triangles: list[Triangle], g: Graph) -> OuterplanarEmbedding:
    n = len(cycle)
    ring = {(min(cycle[i], cycle[(i + 1) % n]), max(cycle[i], cycle[(i + 1) % n])) for i in range(n)}
    chords = frozenset(e for e in g.edges if e not in ring)
    tris = tuple(sorted(tuple(sorted(t)) for t in triangles))
    return OuterplanarEmbedding(_normalise_cycle(cycle), chords, tris)


def _random_dyck(k: int, rng: random.Random) -> list[int]:
    # Cycle lemma: a uniform arrangement of k up-steps and k+1 down-steps has
    # exactly one rotation whose proper prefixes stay non-negative.
    steps = [1] * k + [-1] * (k + 1)
    rng.shuffle(steps)
    height, low, low_at = 0, 0, 0
    for i, s in enumerate(steps):
        height += s
        if height < low:
            low, low_at = height, i + 1
    rotated = steps[low_at:] + steps[:low_at]
    return rotated[:-1]


def gen_random_maximal_outerplanar(n: int, seed: int = 0) -> tuple[Graph, OuterplanarEmbedding]:
    """Uniformly random triangulation of the convex ``n``-gon ``0, 1, ..., n-1``.

    A uniform Dyck word of semilength ``n - 2`` encodes a uniform binary tree,
    which in turn fixes the apex of the triangle on each polygon edge.
    """
    if n < 4:
        raise BadParams("maximal outerplanar generator needs n >= 4")
    rng = random.Random(seed)
    word = _random_dyck(n - 2, rng)
    match = [0] * len(word)
    opened: list[int] = []
    for i, s in enumerate(word):
        if s == 1:
            opened.append(i)
        else:
            match[opened.pop()] = i
    triangles: list[Triangle] = []
    # (word start, polygon i, polygon j): triangulate vertices i..j with base (i, j)
    todo = [(0, 0, n - 1)]
    while todo:
        w, i, j = todo.pop()
        if j - i < 2:
            continue
        close = match[w]
        left_size = (close - w - 1) // 2
        k = i + 1 + left_size
        triangles.append((i, k, j))
        todo.append((w + 1, i, k))
        todo.append((close + 1, k, j))
    edges = {(i, (i + 1) % n) for i in range(n)}
    for a, b, c in triangles:
        edges.update({(a, b), (b, c), (a, c)})
    g = build_graph(n, sorted({(min(e), max(e)) for e in edges}), "outerplanar", (n, seed))
    return g, _embedding(list(range(n)), triangles, g)


def outer_cycle(g: Graph) -> OuterplanarEmbedding:
    """Recover the outer cycle of a maximal outerplanar graph by ear removal.

    Raises:
        NotMaximalOuterplanar: ``g`` is not a triangulated polygon on >= 4 vertices.
    """
    n = g.n
    if n < 4 or g.m != 2 * n - 3:
        raise NotMaximalOuterplanar(f"need n >= 4 and 2n-3 edges, got n={n}, m={g.m}")
    adj = [set(a) for a in g.adj]
    alive = n
    queue = deque(v for v in range(n) if len(adj[v]) == 2)
    ears: list[tuple[int, int, int]] = []
    removed = [False] * n
    while alive > 3:
        if not queue:
            raise NotMaximalOuterplanar("no removable ear left")
        v = queue.popleft()
        if removed[v] or len(adj[v]) != 2:
            continue
        x, y = sorted(adj[v])
        if y not in adj[x]:
            raise NotMaximalOuterplanar(f"neighbours of degree-2 vertex {v} are not adjacent")
        removed[v] = True
        alive -= 1
        ears.append((v, x, y))
        for w in (x, y):
            adj[w].discard(v)
            if len(adj[w]) == 2:
                queue.append(w)
    rest = [v for v in range(n) if not removed[v]]
    a, b, c = rest
    if not (b in adj[a] and c in adj[a] and c in adj[b]):
        raise NotMaximalOuterplanar("ear removal did not end in a triangle")
    triangles: list[Triangle] = [(a, b, c)]
    # doubly linked cycle for O(1) insertion between consecutive vertices
    nxt = {a: b, b: c, c: a}
    prv = {b: a, c: b, a: c}
    for v, x, y in reversed(ears):
        if nxt[x] == y:
            nxt[x], prv[v], nxt[v], prv[y] = v, x, y, v
        elif nxt[y] == x:
            nxt[y], prv[v], nxt[v], prv[x] = v, y, x, v
        else:
            raise NotMaximalOuterplanar(f"ear {v} attaches to a chord, not an outer edge")
        triangles.append((v, x, y))
    cycle = [0]
    while len(cycle) < n:
        cycle.append(nxt[cycle[-1]])
    if len(triangles) != n - 2:
        raise NotMaximalOuterplanar("triangle count mismatch")
    return _embedding(cycle, triangles, g)


@dataclass(frozen=True)
class InnerDual:
    """Dual tree of the triangular faces; ``face_of[i]`` is the triangle of dual vertex ``i``."""

    dual_tree: Graph
    face_of: tuple[Triangle, ...]
    leaf_count: int

    def is_path(self) -> bool:
        return max(self.dual_tree.degrees(), default=0) <= 2

    def path_order(self) -> list[int]:
        """Dual vertices from one end to the other (requires a path dual)."""
        t = self.dual_tree
        if t.n == 1:
            return [0]
        start = min(v for v in range(t.n) if t.degree(v) == 1)
        order, prev = [start], -1
        while len(order) < t.n:
            cur = order[-1]
            step = next(w for w in t.adj[cur] if w != prev)
            prev = cur
            order.append(step)
        return order


def inner_dual(emb: OuterplanarEmbedding) -> InnerDual:
    tris = emb.triangles
    by_edge: dict[tuple[int, int], list[int]] = {}
    for i, (a, b, c) in enumerate(tris):
        for e in ((a, b), (a, c), (b, c)):
            by_edge.setdefault(e, []).append(i)
    dual_edges = [tuple(ts) for ts in by_edge.values() if len(ts) == 2]
    dual = build_graph(len(tris), dual_edges)
    leaves = sum(1 for d in dual.degrees() if d == 1) if dual.n > 1 else 1
    return InnerDual(dual, tris, leaves)
