"""Closed-form bounds on f(G) and necessary endpoint conditions for path systems."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from sepsys.errors import BadParams, InvalidSystem, NonConstructiveRow, UnknownClass
from sepsys.graph_core.graph import Graph
from sepsys.graph_core.trees import degree_profile, require_tree
from sepsys.separation.system import Certificate, SeparatingSystem, verify


def clog2(x: int) -> int:
    """``ceil(log2(x))`` for a positive integer."""
    if x < 1:
        raise BadParams(f"log of non-positive value {x}")
    return (x - 1).bit_length()


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class BoundsRow:
    """Lower/upper bounds for one graph class instance.

    ``lower``/``upper`` are concrete integers when the formula evaluates;
    ``upper`` is ``None`` for asymptotic rows, with the shape kept in
    ``upper_form``.  ``constructive`` marks an upper value that is the size
    guarantee of this package's own construction.
    """

    cls: str
    params: tuple[int, ...]
    lower: int
    upper: int | None
    lower_form: str
    upper_form: str
    source: str
    constructive: bool = False

    def render(self) -> str:
        up = self.upper_form if self.upper is None else f"{self.upper} ({self.upper_form})"
        tag = " [construction count]" if self.constructive else ""
        return (
            f"class={self.cls} params={','.join(map(str, self.params))}\n"
            f"lower={self.lower} ({self.lower_form})\n"
            f"upper={up}{tag}\n"
            f"source={self.source}\n"
        )


def biclique_construction_size(m: int, n: int) -> int:
    """Size guarantee of :func:`biclique_system` for ``K_{m,n}``, ``m <= n``."""
    k = ceil_div(n, m)
    if k == 1:
        return 4 + clog2(m) + clog2(n)
    return 4 + clog2(m) + k * biclique_levels(n, k)


def biclique_levels(n: int, k: int) -> int:
    """Number of internal levels of a ``k``-ary tree with ``n`` leaves."""
    depth, reach = 0, 1
    while reach < n:
        reach *= k
        depth += 1
    return depth


def tight_tree_order(h: int) -> int:
    return 3 * 2 ** (h - 1) - 3


def _need(params: Sequence[int], count: int, cls: str) -> list[int]:
    if len(params) != count:
        raise BadParams(f"{cls} takes {count} parameter(s), got {list(params)}")
    vals = [int(p) for p in params]
    if any(v < 1 for v in vals):
        raise BadParams(f"{cls} parameters must be positive")
    return vals


def _tree_row(cls: str, params: tuple[int, ...], n: int, upper: int | None = None) -> BoundsRow:
    lower = max(ceil_div(n, 4) + 1, clog2(n)) if n >= 3 else clog2(n)
    return BoundsRow(
        cls, params, lower, upper, "n/4 + 1", "2n/3 + O(1)" if upper is None else "3*2^(h-3) + 2",
        "Foucaud-Kovse upper; n/4+1 lower", constructive=upper is not None,
    )


def known_bounds(cls: str, params: Sequence[int] = ()) -> BoundsRow:
    """Evaluate the bounds table for a class instance.

    Raises:
        NonConstructiveRow: random-graph and minor-free rows (nothing to evaluate).
        UnknownClass: class not in the table.
        BadParams: wrong parameter count or values.
    """
    tag = cls.replace("-", "_").lower()
    p = tuple(int(x) for x in params)
    if tag in ("gnp", "random", "k2t_minor_free", "k2t"):
        raise NonConstructiveRow(
            f"{cls}: the table row is an asymptotic or probabilistic statement "
            "with no construction behind it; nothing to evaluate"
        )
    if tag == "complete":
        (n,) = _need(p, 1, tag)
        v = clog2(n)
        return BoundsRow(tag, p, v, v, "ceil(log n)", "ceil(log n)", "Renyi")
    if tag == "hypercube":
        (d,) = _need(p, 1, tag)
        return BoundsRow(tag, p, d, d, "d", "d", "Foucaud-Kovse")
    if tag in ("path", "cycle"):
        (n,) = _need(p, 1, tag)
        v = ceil_div(n, 2)
        return BoundsRow(tag, p, v, v, "ceil(n/2)", "ceil(n/2)", "Foucaud-Kovse")
    if tag == "grid":
        m, n = _need(p, 2, tag)
        if m < 2 or n < 2:
            raise BadParams("grid row needs m, n >= 2")
        return BoundsRow(
            tag, p, clog2(m * n), 2 * clog2(m) + 2 * clog2(n),
            "ceil(log m + log n)", "2ceil(log m) + 2ceil(log n)", "grid construction",
        )
    if tag == "biclique":
        m, n = sorted(_need(p, 2, tag))
        return BoundsRow(
            tag, p, clog2(m + n), biclique_construction_size(m, n),
            "ceil(log(m+n))", "O(n/m * log n / log(1+n/m))", "Katona; biclique construction",
            constructive=True,
        )
    if tag == "fan":
        (n,) = _need(p, 1, tag)
        if n < 3:
            raise BadParams("fan needs n >= 3")
        lower = max(ceil_div(n - 1, 4), clog2(n))
        upper = ceil_div(n + 6, 4) if n >= 6 else None
        return BoundsRow(
            tag, p, lower, upper, "(n-1)/4", "(n+6)/4" if upper else "n/4 + O(1)",
            "fan construction", constructive=upper is not None,
        )
    if tag == "outerplanar":
        (n,) = _need(p, 1, tag)
        return BoundsRow(tag, p, clog2(n), None, "Omega(log n)", "n/4 + O(1)", "outerplanar construction")
    if tag == "tree":
        (n,) = _need(p, 1, tag)
        return _tree_row(tag, p, n)
    if tag == "star":
        (n,) = _need(p, 1, tag)
        return _tree_row(tag, p, n)
    if tag == "binary_tree":
        (lv,) = _need(p, 1, tag)
        return _tree_row(tag, p, 2**lv - 1)
    if tag == "tight_tree":
        (h,) = _need(p, 1, tag)
        if h < 4:
            raise BadParams("tight tree needs h >= 4")
        return _tree_row(tag, p, tight_tree_order(h), 3 * 2 ** (h - 3) + 2)
    raise UnknownClass(f"no bounds row for class {cls!r}")


def arrepol_bounds(t: Graph) -> tuple[int, Fraction]:
    """Degree-profile lower bound on f(T) and the leading term of the matching upper bound.

    The upper bound holds up to an additive constant that is not known
    explicitly, so only its leading part is returned.
    """
    require_tree(t)
    if t.n < 3:
        raise BadParams("degree-profile bounds need a tree with at least 3 vertices")
    prof = degree_profile(t)
    a1, a2, bare = prof.a1, prof.a2, prof.bare_paths
    lower = max(ceil_div(2 * a1 + a2 - bare, 3), ceil_div(a1 + a2 - bare, 2))
    upper = Fraction(2 * a1, 3) + Fraction(a2 - bare, 2)
    return lower, upper


# -- endpoint audit ---------------------------------------------------------


@dataclass
class EndpointAudit:
    """Outcome of the four necessary endpoint conditions; each list holds offending witnesses."""

    leaf_endpoints: int
    leaf_count: int
    leaf_count_ok: bool
    leaf_pair_violations: list[int] = field(default_factory=list)
    adjacent_deg2_violations: list[tuple[int, int]] = field(default_factory=list)
    pendant_violations: list[tuple[int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.leaf_count_ok
            and not self.leaf_pair_violations
            and not self.adjacent_deg2_violations
            and not self.pendant_violations
        )


def endpoint_audit(g: Graph, system: SeparatingSystem) -> EndpointAudit:
    """Check the endpoint conditions every separating path system must satisfy.

    A trivial path has its single vertex as both endpoints.

    Raises:
        InvalidSystem: ``system`` is not a valid separating path system of ``g``.
    """
    if system.kind != "path":
        raise InvalidSystem("endpoint audit applies to path systems only")
    report = verify(Certificate(g, system), require_distinct=False)
    if not report.valid:
        raise InvalidSystem(f"system does not verify: {report.summary()}")
    deg = g.degrees()
    ends = [frozenset(el.endpoints) for el in system]
    is_end = [False] * g.n
    for e in ends:
        for v in e:
            is_end[v] = True
    trivial_at = {el.vertices[0] for el in system if el.is_trivial}

    leaves = [v for v in range(g.n) if deg[v] == 1]
    leaf_ends = sum(1 for v in leaves if is_end[v])
    audit = EndpointAudit(leaf_ends, len(leaves), leaf_ends >= len(leaves) - 1)

    for i, el in enumerate(system):
        if el.is_trivial:
            continue
        u, v = el.endpoints
        if deg[u] == 1 and deg[v] == 1:
            pair = {u, v}
            if not any(len(e & pair) == 1 for e in ends):
                audit.leaf_pair_violations.append(i)

    for u, v in g.edges:
        if deg[u] == 2 and deg[v] == 2:
            if not any((u in e) != (v in e) for e in ends):
                audit.adjacent_deg2_violations.append((u, v))

    for u in leaves:
        (v,) = g.adj[u]
        if deg[v] != 2 or u in trivial_at:
            continue
        if not any(v in e and u not in el.vertices for e, el in zip(ends, system)):
            audit.pendant_violations.append((u, v))
    return audit
