"""Exact minimum separating path/tree systems on small graphs.

The search works on vertex sets: two paths (or subtrees) with the same
vertex set separate exactly the same pairs, so each realisable vertex set
is kept once, represented by its lexicographically least realisation.
Candidates are tried in a fixed canonical order, and iterative deepening
from the counting floor returns the least optimal selection in that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from sepsys.errors import BadParams, Impossible, OracleTimeout, TooLarge
from sepsys.graph_core.graph import Graph
from sepsys.separation.bounds import clog2
from sepsys.separation.system import Certificate, SeparatingSystem, SystemElement

Kind = Literal["path", "tree"]

MAX_PATH_N = 12
MAX_TREE_N = 10
MAX_POOL = 400_000
DEFAULT_BUDGET = 50_000_000


@dataclass(frozen=True)
class CandidatePool:
    kind: Kind
    members: tuple[SystemElement, ...]
    masks: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class OracleResult:
    optimum: int
    witness: SeparatingSystem
    nodes_explored: int
    proved_optimal: bool

    def certificate(self, g: Graph) -> Certificate:
        line = (
            ("construction", "exact"),
            ("params", self.witness.kind),
            ("optimal", "true" if self.proved_optimal else "false"),
            ("nodes", str(self.nodes_explored)),
        )
        return Certificate(g, self.witness, None, (line,))


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _adjmasks(g: Graph) -> list[int]:
    return [sum(1 << w for w in g.adj[v]) for v in range(g.n)]


def _check_cap(g: Graph, kind: str) -> None:
    cap = MAX_PATH_N if kind == "path" else MAX_TREE_N
    if kind not in ("path", "tree"):
        raise BadParams(f"kind must be 'path' or 'tree', got {kind!r}")
    if g.n > cap:
        raise TooLarge(f"{kind} oracle is capped at n <= {cap}, got n = {g.n}")


# -- explicit pools ---------------------------------------------------------


def enumerate_paths(g: Graph) -> CandidatePool:
    """Every simple path once (the reversal with the smaller first vertex), sorted by (length, sequence)."""
    _check_cap(g, "path")
    adj = [sorted(a) for a in g.adj]
    found: list[tuple[int, ...]] = []

    def extend(seq: list[int], used: int) -> None:
        if len(found) > MAX_POOL:
            raise TooLarge(f"more than {MAX_POOL} simple paths")
        if len(seq) == 1 or seq[0] < seq[-1]:
            found.append(tuple(seq))
        for w in adj[seq[-1]]:
            if not used >> w & 1:
                seq.append(w)
                extend(seq, used | 1 << w)
                seq.pop()

    for s in range(g.n):
        extend([s], 1 << s)
    found.sort(key=lambda p: (len(p), p))
    members = tuple(SystemElement.path(p) for p in found)
    return CandidatePool("path", members, tuple(el.mask() for el in members))


def _spanning_trees(vertices: list[int], edges: list[tuple[int, int]], limit: int):
    # Include/exclude recursion over the sorted edge list with union-find on copies.
    need = len(vertices) - 1
    out: list[tuple[tuple[int, int], ...]] = []

    def find(parent: dict[int, int], x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(i: int, chosen: list[tuple[int, int]], parent: dict[int, int]) -> None:
        if len(out) > limit:
            raise TooLarge(f"more than {MAX_POOL} subtrees")
        if len(chosen) == need:
            out.append(tuple(chosen))
            return
        if len(edges) - i < need - len(chosen):
            return
        u, v = edges[i]
        ru, rv = find(parent, u), find(parent, v)
        if ru != rv:
            nxt = dict(parent)
            nxt[ru] = rv
            chosen.append((u, v))
            rec(i + 1, chosen, nxt)
            chosen.pop()
        rec(i + 1, chosen, parent)

    rec(0, [], {v: v for v in vertices})
    return out


def enumerate_subtrees(g: Graph) -> CandidatePool:
    """Every subtree (vertex set + acyclic connected edge set), sorted by (size, vertices, edges)."""
    _check_cap(g, "tree")
    members: list[SystemElement] = []
    for mask in _connected_sets(g):
        verts = _bits(mask)
        edges = [(u, v) for u, v in g.edges if mask >> u & 1 and mask >> v & 1]
        for tree in _spanning_trees(verts, edges, MAX_POOL - len(members)):
            members.append(SystemElement.tree(verts, tree))
    members.sort(key=lambda el: (len(el.vertices), el.vertices, el.edges))
    return CandidatePool("tree", tuple(members), tuple(el.mask() for el in members))


# -- vertex-set pools for the search ------------------------------------------


def _connected_sets(g: Graph) -> list[int]:
    adjm = _adjmasks(g)
    out = []
    for mask in range(1, 1 << g.n):
        low = mask & -mask
        reach, frontier = low, low
        while frontier:
            grow = 0
            for v in _bits(frontier):
                grow |= adjm[v]
            frontier = grow & mask & ~reach
            reach |= frontier
        if reach == mask:
            out.append(mask)
    return out


def _path_sets(g: Graph) -> dict[int, tuple[int, ...]]:
    """Vertex sets spanned by a path, each with its lexicographically least path."""
    n = g.n
    adjm = _adjmasks(g)
    # ends[S]: vertices at which some Hamiltonian path of G[S] ends (and, by reversal, starts)
    ends = [0] * (1 << n)
    for v in range(n):
        ends[1 << v] = 1 << v
    for mask in range(1, 1 << n):
        if mask & (mask - 1) == 0:
            continue
        acc = 0
        for v in _bits(mask):
            if ends[mask ^ (1 << v)] & adjm[v]:
                acc |= 1 << v
        ends[mask] = acc
    out = {}
    for mask in range(1, 1 << n):
        if not ends[mask]:
            continue
        seq = []
        rest, allowed = mask, ends[mask]
        while rest:
            v = (allowed & -allowed).bit_length() - 1
            seq.append(v)
            rest ^= 1 << v
            if rest:
                allowed = ends[rest] & adjm[v]
        out[mask] = tuple(seq)
    return out


def _kruskal(g: Graph, mask: int) -> SystemElement:
    verts = _bits(mask)
    parent = {v: v for v in verts}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = []
    for u, v in g.edges:
        if mask >> u & 1 and mask >> v & 1:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                chosen.append((u, v))
    return SystemElement.tree(verts, chosen)


def search_pool(g: Graph, kind: Kind, allow_trivial: bool = True) -> list[tuple[int, SystemElement]]:
    """Distinct candidate vertex sets with representatives, in canonical order."""
    _check_cap(g, kind)
    if kind == "path":
        items = [(m, SystemElement.path(seq)) for m, seq in _path_sets(g).items()]
        items.sort(key=lambda it: (len(it[1].vertices), it[1].vertices))
    else:
        items = [(m, _kruskal(g, m)) for m in _connected_sets(g)]
        items.sort(key=lambda it: (len(it[1].vertices), it[1].vertices))
    if not allow_trivial:
        items = [it for it in items if it[0] & (it[0] - 1)]
    return items


# -- search -----------------------------------------------------------------


class _Search:
    def __init__(self, masks: list[int], budget: int):
        self.masks = masks
        self.budget = budget
        self.nodes = 0

    def run(self, classes: list[int], depth: int) -> list[int] | None:
        return self._dfs(classes, 0, depth)

    def _dfs(self, classes: list[int], start: int, left: int) -> list[int] | None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise OracleTimeout(f"node budget {self.budget} exhausted")
        if not classes:
            return []
        if left == 0:
            return None
        cap = 1 << left
        for c in classes:
            if c.bit_count() > cap:
                return None
        masks = self.masks
        # Every open class still needs a later element that splits it, so the
        # next pick cannot come after the last splitter of any class.
        limit = len(masks) - 1
        for c in classes:
            j = limit
            while j >= start:
                part = masks[j] & c
                if part and part != c:
                    break
                j -= 1
            if j < start:
                return None
            limit = j
        for i in range(start, limit + 1):
            m = masks[i]
            refined = []
            split = False
            for c in classes:
                part = m & c
                if part and part != c:
                    split = True
                    rest = c ^ part
                    if part & (part - 1):
                        refined.append(part)
                    if rest & (rest - 1):
                        refined.append(rest)
                else:
                    refined.append(c)
            if not split:
                continue
            found = self._dfs(refined, i + 1, left - 1)
            if found is not None:
                return [i] + found
        return None


def min_separating_system(
    g: Graph,
    kind: Kind = "path",
    *,
    allow_trivial: bool = True,
    require_cover: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> OracleResult:
    """Smallest separating system by iterative deepening over candidate vertex sets.

    With ``require_cover`` a phantom vertex that no element contains joins the
    ground set, so every real vertex must receive a non-empty signature.

    Raises:
        TooLarge: graph exceeds the oracle cap for ``kind``.
        OracleTimeout: more than ``budget`` search nodes were expanded.
        Impossible: the candidates cannot separate the vertices (``K_2`` without trivial paths).
    """
    pool = search_pool(g, kind, allow_trivial)
    masks = [m for m, _ in pool]
    universe = (1 << g.n) - 1
    if require_cover:
        universe |= 1 << g.n
    size = universe.bit_count()
    start = clog2(size) if size > 1 else 0
    search = _Search(masks, budget)
    initial = [universe] if size > 1 else []
    for depth in range(start, len(masks) + 1):
        picked = search.run(initial, depth)
        if picked is not None:
            elems = tuple(pool[i][1] for i in picked)
            witness = SeparatingSystem(kind, elems, {"construction": "exact"})
            return OracleResult(depth, witness, search.nodes, True)
    raise Impossible("no separating system exists with the allowed candidates")


def exact_f(g: Graph, kind: Kind = "path") -> int:
    return min_separating_system(g, kind).optimum
