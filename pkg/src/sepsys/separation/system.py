"""Separating systems, certificates and the verifier."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import chain
from typing import Iterable, Literal, Sequence

import numpy as np

from sepsys.errors import ElementNotInGraph
from sepsys.graph_core.graph import Graph, is_path_in

Kind = Literal["path", "tree"]
MetaLine = tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class SystemElement:
    """A path (ordered vertex sequence) or a subtree (sorted vertices + edges)."""

    kind: Kind
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...] = ()

    @classmethod
    def path(cls, seq: Iterable[int]) -> "SystemElement":
        vals = tuple(seq)
        if not set(map(type, vals)) <= {int}:
            vals = tuple(map(int, vals))
        return cls("path", vals)

    @classmethod
    def tree(cls, vertices: Iterable[int], edges: Iterable[Sequence[int]]) -> "SystemElement":
        es = sorted({(min(u, v), max(u, v)) for u, v in edges})
        return cls("tree", tuple(sorted(set(vertices))), tuple(es))

    @classmethod
    def tree_from_path(cls, seq: Sequence[int]) -> "SystemElement":
        return cls.tree(seq, zip(seq, seq[1:]))

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def is_trivial(self) -> bool:
        return len(self.vertices) == 1

    @property
    def endpoints(self) -> tuple[int, int]:
        """Path endpoints; a trivial path lists its vertex twice."""
        return self.vertices[0], self.vertices[-1]

    def key(self) -> tuple:
        """Identity used for distinctness: reversal-free sequence or vertex set."""
        if self.kind == "path":
            rev = self.vertices[::-1]
            return ("path", min(self.vertices, rev))
        return ("tree", self.vertices)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def mask(self) -> int:
        out = 0
        for v in self.vertices:
            out |= 1 << v
        return out

    def is_valid_in(self, g: Graph) -> bool:
        if self.kind == "path":
            return is_path_in(g, self.vertices)
        vs = self.vertices
        if not vs or len(set(vs)) != len(vs) or any(not 0 <= v < g.n for v in vs):
            return False
        if len(self.edges) != len(vs) - 1:
            return False
        inside = set(vs)
        root = {v: v for v in vs}

        def find(x: int) -> int:
            while root[x] != x:
                root[x] = root[root[x]]
                x = root[x]
            return x

        for u, v in self.edges:
            if u not in inside or v not in inside or not g.has_edge(u, v):
                return False
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            root[ru] = rv
        return True


@dataclass(frozen=True)
class SeparatingSystem:
    kind: Kind
    elements: tuple[SystemElement, ...]
    provenance: dict[str, str] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


@dataclass(frozen=True)
class Certificate:
    """Graph + system + optional claimed size bound; the verifier's input.

    ``meta`` keeps the ``META`` lines in file order so that a read/write
    round trip is byte-identical.
    """

    graph: Graph
    system: SeparatingSystem
    claimed_bound: int | None = None
    meta: tuple[MetaLine, ...] = ()

    @property
    def size(self) -> int:
        return len(self.system)

    def meta_value(self, key: str) -> str | None:
        for line in self.meta:
            for k, v in line:
                if k == key:
                    return v
        return None


def make_certificate(
    g: Graph,
    kind: Kind,
    elements: Iterable[SystemElement],
    construction: str,
    params: Sequence[int] | str,
    claimed: int | None = None,
) -> Certificate:
    """Bundle a construction's output; duplicate elements are dropped."""
    seen: set[tuple] = set()
    unique = []
    for el in elements:
        if el.key() not in seen:
            seen.add(el.key())
            unique.append(el)
    ptxt = params if isinstance(params, str) else ",".join(str(p) for p in params)
    prov = {"construction": construction, "params": ptxt or "-"}
    line: list[tuple[str, str]] = list(prov.items())
    if claimed is not None:
        line.append(("claimed", str(claimed)))
    system = SeparatingSystem(kind, tuple(unique), prov)
    return Certificate(g, system, claimed, (tuple(line),))


@dataclass
class VerificationReport:
    valid: bool
    bad_elements: list[int]
    unseparated: list[tuple[int, int]]
    covered: bool
    distinct_ok: bool
    unseparated_count: int = 0
    duplicate_pairs: list[tuple[int, int]] = field(default_factory=list)
    uncovered: list[int] = field(default_factory=list)

    def summary(self) -> str:
        if self.valid:
            return "valid"
        parts = []
        if self.bad_elements:
            parts.append(f"{len(self.bad_elements)} bad element(s)")
        if self.unseparated_count:
            parts.append(f"{self.unseparated_count} unseparated pair(s)")
        if not self.covered:
            parts.append(f"{len(self.uncovered)} uncovered vertex(es)")
        if not self.distinct_ok:
            parts.append(f"{len(self.duplicate_pairs)} duplicate element pair(s)")
        return "invalid: " + ", ".join(parts)


def signatures(g: Graph, system: SeparatingSystem | Sequence[SystemElement]) -> list[int]:
    """Per-vertex membership bit vectors: bit ``i`` of ``sig[v]`` is set iff ``v`` lies in element ``i``.

    Raises:
        ElementNotInGraph: some element is not a path/subtree of ``g``.
    """
    sig = [0] * g.n
    for i, el in enumerate(system):
        if not el.is_valid_in(g):
            raise ElementNotInGraph(f"element {i} is not a {el.kind} of the graph")
        bit = 1 << i
        for v in el.vertices:
            sig[v] |= bit
    return sig


def signature_strings(sig: Sequence[int], k: int) -> list[str]:
    """Render signatures with element 0 as the leftmost character."""
    return ["".join("1" if s >> i & 1 else "0" for i in range(k)) for s in sig]


@dataclass
class _Incidence:
    """All element memberships flattened: ``flat[j]`` lies in element ``owner[j]``."""

    flat: np.ndarray
    owner: np.ndarray
    lengths: np.ndarray

    @classmethod
    def of(cls, elements: Sequence[SystemElement]) -> "_Incidence":
        k = len(elements)
        lengths = np.fromiter(map(len, elements), np.int64, k)
        flat = np.fromiter(
            chain.from_iterable(el.vertices for el in elements), np.int64, int(lengths.sum())
        )
        return cls(flat, np.repeat(np.arange(k), lengths), lengths)


def _path_flags(g: Graph, inc: _Incidence, is_path: np.ndarray) -> np.ndarray:
    """Validity of every element read as a path (entries for non-paths are meaningless)."""
    k = len(inc.lengths)
    flat, owner, n = inc.flat, inc.owner, g.n
    ok = inc.lengths > 0
    if len(flat) == 0:
        return ok
    if flat.min() < 0 or flat.max() >= n:
        outside = (flat < 0) | (flat >= n)
        ok &= np.bincount(owner[outside], minlength=k) == 0
        flat = np.where(outside, 0, flat)
    # repeated vertex inside one element
    keyed = np.sort(owner * n + flat)
    rep = np.flatnonzero(keyed[1:] == keyed[:-1])
    if len(rep):
        ok[np.unique(keyed[rep] // n)] = False
    # consecutive vertices of a path must be adjacent
    step = np.ones(len(flat) - 1, dtype=bool)
    ends = np.cumsum(inc.lengths)[:-1] - 1
    step[ends[(ends >= 0) & (ends < len(step))]] = False
    step &= is_path[owner[:-1]]
    pos = np.flatnonzero(step)
    a, b = flat[pos], flat[pos + 1]
    keys = np.minimum(a, b) * n + np.maximum(a, b)
    if g.m:
        edge_keys = np.fromiter((u * n + v for u, v in g.edges), np.int64, g.m)
        at = np.minimum(np.searchsorted(edge_keys, keys), g.m - 1)
        missing = pos[edge_keys[at] != keys]
    else:
        missing = pos
    if len(missing):
        ok[np.unique(owner[missing])] = False
    return ok


def _signature_classes(n: int, flat: np.ndarray, owner: np.ndarray, k: int) -> tuple[list[list[int]], np.ndarray]:
    """Vertices grouped by exact signature, plus per-vertex membership counts.

    Two random weight sums per vertex split vertices cheaply (equal
    signatures always get equal sums, as the additions happen in the same
    order); only vertices with coinciding sums are compared exactly.
    """
    count = np.bincount(flat, minlength=n)
    rng = np.random.default_rng(0x5EB5)
    w1, w2 = rng.random(k), rng.random(k)
    h1 = np.bincount(flat, weights=w1[owner], minlength=n)
    h2 = np.bincount(flat, weights=w2[owner], minlength=n)
    order = np.lexsort((h2, h1, count))
    sc, s1, s2 = count[order], h1[order], h2[order]
    cut = np.flatnonzero((sc[1:] != sc[:-1]) | (s1[1:] != s1[:-1]) | (s2[1:] != s2[:-1])) + 1
    starts = np.concatenate(([0], cut))
    sizes = np.diff(np.concatenate((starts, [n])))
    multi = np.flatnonzero(sizes > 1)
    if len(multi) == 0:
        return [], count
    groups = [order[starts[j] : starts[j] + sizes[j]] for j in multi]
    need = np.zeros(n, dtype=bool)
    need[np.concatenate(groups)] = True
    hit = need[flat]
    members: dict[int, list[int]] = {}
    for v, i in zip(flat[hit].tolist(), owner[hit].tolist()):
        members.setdefault(v, []).append(i)
    classes = []
    for grp in groups:
        exact: dict[tuple[int, ...], list[int]] = {}
        for v in sorted(grp.tolist()):
            exact.setdefault(tuple(sorted(members.get(v, ()))), []).append(v)
        classes += [vs for vs in exact.values() if len(vs) > 1]
    return classes, count


def verify(
    cert: Certificate,
    *,
    allow_trivial: bool = True,
    require_cover: bool = False,
    require_distinct: bool = True,
    max_pairs: int = 10_000,
) -> VerificationReport:
    """Check that every element is a genuine path/subtree and all signatures differ.

    Problems are collected in the report instead of raised.  At most
    ``max_pairs`` unseparated pairs are listed; ``unseparated_count`` has the total.
    """
    g, system = cert.graph, cert.system
    elements = system.elements
    k = len(elements)
    inc = _Incidence.of(elements)
    is_path = np.fromiter((el.kind == "path" for el in elements), bool, k)
    flags = _path_flags(g, inc, is_path)
    for i, el in enumerate(elements):
        if el.kind == "tree":
            flags[i] = el.is_valid_in(g)
    bad = []
    for i, el in enumerate(elements):
        ok = flags[i] and el.kind == system.kind
        if ok and not allow_trivial and el.is_trivial:
            ok = False
        if not ok:
            bad.append(i)
    flat, owner = inc.flat, inc.owner
    if bad:
        good = np.ones(k, dtype=bool)
        good[bad] = False
        keep = good[owner]
        flat, owner = flat[keep], owner[keep]

    classes, count = _signature_classes(g.n, flat, owner, k)
    pairs: list[tuple[int, int]] = []
    total = 0
    for members in classes:
        c = len(members)
        total += c * (c - 1) // 2
        for a in range(c):
            if len(pairs) >= max_pairs:
                break
            for b in range(a + 1, c):
                if len(pairs) >= max_pairs:
                    break
                pairs.append((members[a], members[b]))
    pairs.sort()

    uncovered = np.flatnonzero(count == 0).tolist()
    first_of: dict[tuple, int] = {}
    dups = []
    for i, el in enumerate(elements):
        key = el.key()
        if key in first_of:
            dups.append((first_of[key], i))
        else:
            first_of[key] = i

    covered = not uncovered
    distinct_ok = not dups
    valid = not bad and total == 0
    if require_cover:
        valid = valid and covered
    if require_distinct:
        valid = valid and distinct_ok
    return VerificationReport(valid, bad, pairs, covered, distinct_ok, total, dups, uncovered)


def is_separating(g: Graph, elements: Sequence[SystemElement]) -> bool:
    sig = signatures(g, elements)
    return len(set(sig)) == g.n
