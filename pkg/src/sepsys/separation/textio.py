"""Line-oriented certificate format.

::

    SEPSYS 1
    GRAPH n m
    E u v            (m lines, u < v, ascending)
    KIND path|tree
    SYSTEM k
    P v0 v1 ... vr   (path blocks)
    T s ; v0 .. v_{s-1} ; u0 w0 u1 w1 ...   (tree blocks)
    META key=value ...

Parsing is strict: every line must be exactly what the writer would emit
for the parsed content, so a read/write round trip is byte-identical.
"""

from __future__ import annotations

import re
from pathlib import Path

from sepsys.errors import MalformedEdge, ParseError, SepSysError
from sepsys.graph_core.graph import build_graph
from sepsys.separation.system import Certificate, MetaLine, SeparatingSystem, SystemElement

MAGIC = "SEPSYS 1"
_INT = re.compile(r"0|[1-9][0-9]*")
_INT_LIST = re.compile(r"(?:0|[1-9][0-9]*)(?: (?:0|[1-9][0-9]*))*")
_KEY = re.compile(r"[A-Za-z_][A-Za-z0-9_.-]*")


def _render_element(el: SystemElement) -> str:
    if el.kind == "path":
        return "P " + " ".join(map(str, el.vertices))
    verts = " ".join(map(str, el.vertices))
    line = f"T {len(el.vertices)} ; {verts} ;"
    if el.edges:
        line += " " + " ".join(f"{u} {v}" for u, v in el.edges)
    return line


def _render_meta(line: MetaLine) -> str:
    return "META " + " ".join(f"{k}={v}" for k, v in line)


def certificate_to_text(cert: Certificate) -> str:
    g, system = cert.graph, cert.system
    out = [MAGIC, f"GRAPH {g.n} {g.m}"]
    out += [f"E {u} {v}" for u, v in g.edges]
    out.append(f"KIND {system.kind}")
    out.append(f"SYSTEM {len(system)}")
    out += [_render_element(el) for el in system]
    meta = list(cert.meta)
    if cert.claimed_bound is not None and cert.meta_value("claimed") is None:
        meta.append((("claimed", str(cert.claimed_bound)),))
    out += [_render_meta(line) for line in meta]
    return "\n".join(out) + "\n"


def _ints(tokens: list[str], lineno: int) -> list[int]:
    # one regex over the whole run is much cheaper than one per token
    if not tokens or _INT_LIST.fullmatch(" ".join(tokens)):
        return list(map(int, tokens))
    for t in tokens:
        if not _INT.fullmatch(t):
            raise ParseError(f"expected a non-negative integer, got {t!r}", lineno)
    return [int(t) for t in tokens]


def _parse_element(text: str, kind: str, lineno: int) -> SystemElement:
    if kind == "path":
        if not text.startswith("P "):
            raise ParseError("expected a 'P' block in a path system", lineno)
        body = text[2:]
        if _INT_LIST.fullmatch(body):
            return SystemElement.path(map(int, body.split(" ")))
        return SystemElement.path(_ints(body.split(" "), lineno))
    if not text.startswith("T "):
        raise ParseError("expected a 'T' block in a tree system", lineno)
    parts = text[2:].split(" ;")
    if len(parts) != 3:
        raise ParseError("tree block needs 'T s ; vertices ; edges'", lineno)
    (size,) = _ints([parts[0]], lineno)
    verts = _ints(parts[1].split(), lineno)
    flat = _ints(parts[2].split(), lineno)
    if len(verts) != size:
        raise ParseError(f"tree block declares {size} vertices, lists {len(verts)}", lineno)
    if len(flat) % 2:
        raise ParseError("odd number of edge endpoints in tree block", lineno)
    return SystemElement.tree(verts, zip(flat[::2], flat[1::2]))


def _parse_meta(text: str, lineno: int) -> MetaLine:
    pairs = []
    for tok in text[5:].split(" "):
        key, eq, value = tok.partition("=")
        if not eq or not _KEY.fullmatch(key) or not value:
            raise ParseError(f"bad META entry {tok!r}", lineno)
        pairs.append((key, value))
    return tuple(pairs)


def certificate_from_text(text: str) -> Certificate:
    """Parse a certificate.

    Raises:
        ParseError: any deviation from the canonical layout, with the 1-based line number.
    """
    if not text.endswith("\n"):
        raise ParseError("file must end with a newline")
    lines = text[:-1].split("\n")
    pos = 0

    def take(expect: str) -> tuple[str, int]:
        nonlocal pos
        if pos >= len(lines):
            raise ParseError(f"unexpected end of file, expected {expect}", pos + 1)
        pos += 1
        return lines[pos - 1], pos

    head, ln = take("header")
    if head != MAGIC:
        raise ParseError(f"expected {MAGIC!r}", ln)
    gl, ln = take("GRAPH line")
    m_ = re.fullmatch(r"GRAPH (\S+) (\S+)", gl)
    if not m_:
        raise ParseError("expected 'GRAPH n m'", ln)
    n, m = _ints([m_.group(1), m_.group(2)], ln)
    edges = []
    for _ in range(m):
        el, ln = take("edge line")
        me = re.fullmatch(r"E (\S+) (\S+)", el)
        if not me:
            raise ParseError("expected 'E u v'", ln)
        u, v = _ints([me.group(1), me.group(2)], ln)
        if not u < v < n:
            raise ParseError(f"edge ({u}, {v}) must satisfy u < v < n", ln)
        if edges and (u, v) <= edges[-1]:
            raise ParseError("edges must be strictly ascending", ln)
        edges.append((u, v))
    kl, ln = take("KIND line")
    if kl not in ("KIND path", "KIND tree"):
        raise ParseError("expected 'KIND path' or 'KIND tree'", ln)
    kind = kl[5:]
    sl, ln = take("SYSTEM line")
    ms = re.fullmatch(r"SYSTEM (\S+)", sl)
    if not ms:
        raise ParseError("expected 'SYSTEM k'", ln)
    (k,) = _ints([ms.group(1)], ln)
    elements = []
    for _ in range(k):
        bl, ln = take("element block")
        el_ = _parse_element(bl, kind, ln)
        if _render_element(el_) != bl:
            raise ParseError("element block is not in canonical form", ln)
        elements.append(el_)
    meta: list[MetaLine] = []
    while pos < len(lines):
        ml, ln = take("META line")
        if not ml.startswith("META "):
            raise ParseError("only META lines may follow the element blocks", ln)
        line = _parse_meta(ml, ln)
        if _render_meta(line) != ml:
            raise ParseError("META line is not in canonical form", ln)
        meta.append(line)

    try:
        g = build_graph(n, edges)
    except MalformedEdge as exc:
        raise ParseError(str(exc), 2) from exc
    except SepSysError as exc:
        raise ParseError(f"graph rejected: {exc}", 2) from exc
    provenance: dict[str, str] = {}
    claimed = None
    for line in meta:
        for key, value in line:
            if key == "claimed" and claimed is None:
                if not _INT.fullmatch(value):
                    raise ParseError(f"claimed bound must be an integer, got {value!r}")
                claimed = int(value)
            elif key in ("construction", "params", "optimal", "nodes"):
                provenance.setdefault(key, value)
    system = SeparatingSystem(kind, tuple(elements), provenance)  # type: ignore[arg-type]
    return Certificate(g, system, claimed, tuple(meta))


def write_certificate(cert: Certificate, path: str | Path) -> None:
    Path(path).write_text(certificate_to_text(cert), encoding="ascii")


def read_certificate(path: str | Path) -> Certificate:
    return certificate_from_text(Path(path).read_text(encoding="ascii"))
