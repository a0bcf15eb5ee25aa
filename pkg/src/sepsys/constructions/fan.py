"""Fans ``F_n``: an apex joined to every vertex of a path on ``n - 1`` vertices."""

from __future__ import annotations

from sepsys.constructions.common import checked, windows
from sepsys.errors import BadParams
from sepsys.graph_core.families import fan_graph
from sepsys.separation.bounds import ceil_div
from sepsys.separation.system import Certificate, SystemElement, make_certificate

# Below this order the window halves are too short for the apex trick below,
# so the optimum is computed exactly instead.
SMALLEST_CONSTRUCTIVE = 10


def fan_paths(rim: list[int], apex: int) -> list[list[int]]:
    """Paths separating ``rim + [apex]`` in a fan; needs ``len(rim) >= 9``.

    The rim is cut into a left half (itself one path) and a right half, each
    separated by windows.  Left windows are joined to right windows through
    the apex.  Right window 1 is never joined, so the apex lies in windows
    0 and 2 but not 1; a rim vertex always lies in a contiguous run of
    windows, so the apex cannot collide with one.
    """
    left, right = rim[: len(rim) // 2], rim[len(rim) // 2 :]
    lw, rw = windows(left), windows(right)
    if len(rw) < 3:
        raise BadParams("fan rim too short for the apex construction")
    slots = [i for i in range(len(rw)) if i != 1]
    paths = [list(left)]
    for i, w in enumerate(rw):
        paths.append(list(w))
    for t, w in enumerate(lw):
        if t < len(slots):
            s = slots[t]
            paths[1 + s] = list(w) + [apex] + paths[1 + s]
        else:
            paths.append(list(w))
    return paths


def fan_system(n: int) -> Certificate:
    """Separating path system of ``F_n`` with at most ``ceil((n+6)/4)`` paths for ``n >= 6``."""
    if n < 3:
        raise BadParams("fan needs n >= 3")
    g = fan_graph(n)
    if n < SMALLEST_CONSTRUCTIVE:
        from sepsys.oracle import min_separating_system

        res = min_separating_system(g, "path")
        bound = ceil_div(n + 6, 4) if n >= 6 else res.optimum
        return checked(make_certificate(g, "path", res.witness.elements, "fan-exact", [n], bound))
    paths = fan_paths(list(range(1, n)), 0)
    elems = [SystemElement.path(p) for p in paths]
    return checked(make_certificate(g, "path", elems, "fan", [n], ceil_div(n + 6, 4)))
