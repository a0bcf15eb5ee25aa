"""Separating path systems of complete bipartite graphs ``K_{m,n}``."""

from __future__ import annotations

from dataclasses import dataclass

from sepsys.constructions.common import alternate, checked
from sepsys.errors import BadParams
from sepsys.graph_core.families import biclique_graph
from sepsys.separation.bounds import biclique_construction_size, biclique_levels, ceil_div, clog2
from sepsys.separation.system import Certificate, SystemElement, make_certificate


@dataclass(frozen=True)
class BicliquePlan:
    """Bookkeeping of the construction.

    ``leaf_code[j]`` is the position (one base-``branching`` digit per level,
    top level first) of the ``j``-th vertex of R among the leaves of the
    auxiliary tree.  ``level_groups[(level, i)]`` lists the R vertices whose
    ancestor at depth ``level + 1`` is an ``i``-th child.
    """

    left: tuple[int, ...]
    right: tuple[int, ...]
    right_prime: tuple[int, ...]
    branching: int
    levels: int
    leaf_code: tuple[tuple[int, ...], ...]
    level_groups: dict[tuple[int, int], tuple[int, ...]]


def _leaf_codes(n: int, k: int, levels: int) -> list[tuple[int, ...]]:
    # Digit 0 (least significant, deepest level) is j mod k; every other digit
    # is shifted by it.  This is a bijection on [k]^levels, and because j mod k
    # cycles fastest each digit value is taken by at most ceil(n/k) of the
    # first n indices, so every level group fits into K(L, .) as a path.
    codes = []
    for j in range(n):
        digits = []
        x, shift = j, j % k
        for lvl in range(levels):
            d = x % k
            x //= k
            digits.append(d if lvl == 0 else (d + shift) % k)
        codes.append(tuple(reversed(digits)))
    return codes


def biclique_plan(m: int, n: int) -> BicliquePlan:
    left = tuple(range(m))
    right = tuple(range(m, m + n))
    k = ceil_div(n, m)
    levels = biclique_levels(n, k) if k >= 2 else 0
    codes = _leaf_codes(n, k, levels) if k >= 2 else [()] * n
    groups: dict[tuple[int, int], list[int]] = {}
    for j, code in enumerate(codes):
        for lvl, digit in enumerate(code):
            groups.setdefault((lvl, digit), []).append(right[j])
    return BicliquePlan(
        left, right, right[:m], k, levels, tuple(codes),
        {key: tuple(v) for key, v in sorted(groups.items())},
    )


def _through(targets: list[int], connectors: tuple[int, ...]) -> list[int]:
    # A path visiting ``targets`` with connectors from the other side in between.
    assert len(connectors) >= len(targets) - 1
    return alternate(targets, connectors[: max(len(targets) - 1, 0)])


def _nice_paths(side: tuple[int, ...], other: tuple[int, ...]) -> list[list[int]]:
    # Label side[i] with i; path b spans the vertices whose label has bit b set.
    out = []
    for b in range(clog2(len(side))):
        chosen = [v for i, v in enumerate(side) if i >> b & 1]
        out.append(_through(chosen, other))
    return out


def biclique_system(m: int, n: int) -> Certificate:
    """Separating path system of ``K_{m,n}`` (side L = ``0..m-1`` is the smaller one).

    Four paths split L from R, ``ceil(log m)`` paths separate L, and R is
    separated either by a nice labelling (``m == n``) or by one path per
    (level, child index) of a ``ceil(n/m)``-ary tree over R.
    """
    if not 1 <= m <= n:
        raise BadParams(f"biclique system needs 1 <= m <= n, got m={m}, n={n}")
    g = biclique_graph(m, n)
    plan = biclique_plan(m, n)
    left, right = plan.left, plan.right
    half = ceil_div(m, 2)
    l1, l2 = left[:half], left[half:]
    r1, r2 = plan.right_prime[:half], plan.right_prime[half:]
    paths: list[list[int]] = []
    for xs in (l1, l2):
        for ys in (r1, r2):
            if xs or ys:
                paths.append(alternate(xs, ys))
    paths += _nice_paths(left, right)
    if plan.branching == 1:
        paths += _nice_paths(right, left)
    else:
        for group in plan.level_groups.values():
            paths.append(_through(list(group), left))
    elems = [SystemElement.path(p) for p in paths if p]
    bound = biclique_construction_size(m, n)
    return checked(make_certificate(g, "path", elems, "biclique", [m, n], bound))
