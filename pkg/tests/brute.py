"""Slow reference implementations used only by the tests.

Nothing here imports the verifier, the oracle or the constructions; the
helpers work from networkx graphs and plain vertex sets.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

import networkx as nx


def to_nx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def separates_pairwise(n: int, sets: Sequence[Iterable[int]]) -> bool:
    """Definition check: every pair of vertices is split by some set."""
    members = [frozenset(s) for s in sets]
    for u in range(n):
        for v in range(u + 1, n):
            if not any((u in s) != (v in s) for s in members):
                return False
    return True


def unseparated_pairs(n: int, sets: Sequence[Iterable[int]]) -> list[tuple[int, int]]:
    members = [frozenset(s) for s in sets]
    return [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if not any((u in s) != (v in s) for s in members)
    ]


def is_simple_path(h: nx.Graph, seq: Sequence[int]) -> bool:
    if not seq or len(set(seq)) != len(seq) or any(v not in h for v in seq):
        return False
    return all(h.has_edge(a, b) for a, b in zip(seq, seq[1:]))


def is_subtree(h: nx.Graph, vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> bool:
    vs = list(vertices)
    es = list(edges)
    if not vs or any(v not in h for v in vs) or len(set(vs)) != len(vs):
        return False
    if any(not h.has_edge(u, v) or u not in vs or v not in vs for u, v in es):
        return False
    sub = nx.Graph()
    sub.add_nodes_from(vs)
    sub.add_edges_from(es)
    return sub.number_of_edges() == len(es) and nx.is_tree(sub)


def all_paths(h: nx.Graph) -> set[tuple[int, ...]]:
    """Every simple path, as the lexicographically smaller of its two directions."""
    out = {(v,) for v in h}
    nodes = sorted(h)
    for i, s in enumerate(nodes):
        for t in nodes[i + 1 :]:
            for p in nx.all_simple_paths(h, s, t):
                out.add(min(tuple(p), tuple(reversed(p))))
    return out


def all_subtrees(h: nx.Graph) -> set[tuple[frozenset, frozenset]]:
    """Every subtree as (vertex set, edge set), from all edge subsets plus singletons."""
    out = {(frozenset([v]), frozenset()) for v in h}
    edges = [tuple(sorted(e)) for e in h.edges]
    for size in range(1, len(edges) + 1):
        for chosen in combinations(edges, size):
            sub = nx.Graph(list(chosen))
            if sub.number_of_nodes() == size + 1 and nx.is_connected(sub):
                out.add((frozenset(sub.nodes), frozenset(chosen)))
    return out


def brute_min(n: int, candidates: Sequence[frozenset]) -> int:
    """Smallest number of candidate sets that separate ``0..n-1`` (tiny inputs only)."""
    pool = sorted(set(candidates), key=sorted)
    for k in range(len(pool) + 1):
        for pick in combinations(pool, k):
            if separates_pairwise(n, pick):
                return k
    raise ValueError("candidates cannot separate the vertices")


def interval_or_direct(lo: int, hi: int) -> int:
    out = 0
    for x in range(lo, hi + 1):
        out |= x
    return out
