"""Immutable undirected simple graphs on vertices ``0..n-1``."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from sepsys.errors import Disconnected, MalformedEdge, ParseError, SelfLoop

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "biclique",
    "grid",
    "hypercube",
    "fan",
    "star",
    "binary_tree",
    "tight_tree",
    "tree",
    "outerplanar",
    "custom",
)


@dataclass(frozen=True, eq=False)
class Graph:
    """A connected simple graph.

    ``edges`` holds each edge once as ``(u, v)`` with ``u < v``, sorted.
    ``family``/``params`` record how the graph was generated and ``meta``
    carries family-specific data (grid side lengths, apex id, ...).
    Construct through :func:`build_graph`, which validates the input.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    family: str = "custom"
    params: tuple[int, ...] = ()
    meta: Mapping[str, object] = field(default_factory=dict)
    adj: tuple[frozenset[int], ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in nbrs))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adj[u]

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def is_tree(self) -> bool:
        return self.m == self.n - 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        tag = self.family if not self.params else f"{self.family}{list(self.params)}"
        return f"Graph(n={self.n}, m={self.m}, {tag})"

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..k-1`` plus the old ids in order."""
        old = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old)}
        edges = [
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        ]
        return build_graph(len(old), edges), old


def _normalise(n: int, edges: Iterable[Sequence[int]]) -> list[tuple[int, int]]:
    seen: set[tuple[int, int]] = set()
    out = []
    for e in edges:
        if len(e) != 2:
            raise MalformedEdge(f"edge {e!r} is not a pair")
        u, v = int(e[0]), int(e[1])
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise MalformedEdge(f"edge ({u}, {v}) out of range for n={n}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise MalformedEdge(f"duplicate edge {key}")
        seen.add(key)
        out.append(key)
    out.sort()
    return out


def _is_connected(n: int, edges: list[tuple[int, int]]) -> bool:
    if n <= 1:
        return True
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for w in nbrs[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == n


def build_graph(
    n: int,
    edges: Iterable[Sequence[int]],
    family: str = "custom",
    params: Sequence[int] = (),
    meta: Mapping[str, object] | None = None,
) -> Graph:
    """Validate ``edges`` and return a connected :class:`Graph` on ``n`` vertices.

    Raises:
        MalformedEdge: an edge is out of range, not a pair, or repeated.
        SelfLoop: an edge joins a vertex to itself.
        Disconnected: the resulting graph is not connected.
    """
    if n < 1:
        raise MalformedEdge("a graph needs at least one vertex")
    norm = _normalise(n, edges)
    if not _is_connected(n, norm):
        raise Disconnected(f"graph on {n} vertices with {len(norm)} edges is disconnected")
    return Graph(n, tuple(norm), family, tuple(params), dict(meta or {}))


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_path_in(g: Graph, seq: Sequence[int]) -> bool:
    if not seq or len(set(seq)) != len(seq):
        return False
    if any(not (0 <= v < g.n) for v in seq):
        return False
    return all(seq[i + 1] in g.adj[seq[i]] for i in range(len(seq) - 1))


# -- text format ------------------------------------------------------------


def graph_to_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def _int_token(tok: str, lineno: int) -> int:
    if not tok.isdigit() or (len(tok) > 1 and tok[0] == "0"):
        raise ParseError(f"expected a non-negative integer, got {tok!r}", lineno)
    return int(tok)


def graph_from_text(text: str) -> Graph:
    """Parse the ``n m`` / ``u v`` edge-list format (strict)."""
    if not text.endswith("\n"):
        raise ParseError("missing trailing newline")
    lines = text[:-1].split("\n")
    head = lines[0].split(" ")
    if len(head) != 2:
        raise ParseError("header must be 'n m'", 1)
    n, m = (_int_token(t, 1) for t in head)
    if len(lines) != m + 1:
        raise ParseError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for i, line in enumerate(lines[1:], start=2):
        toks = line.split(" ")
        if len(toks) != 2:
            raise ParseError("edge line must be 'u v'", i)
        u, v = (_int_token(t, i) for t in toks)
        if not u < v < n:
            raise ParseError(f"edge must satisfy u < v < n, got {u} {v}", i)
        if edges and (u, v) <= edges[-1]:
            raise ParseError("edges must be in ascending lexicographic order", i)
        edges.append((u, v))
    try:
        return build_graph(n, edges)
    except (MalformedEdge, Disconnected) as exc:
        raise ParseError(str(exc)) from exc
