"""Paths and cycles, complete graphs and hypercubes."""

from __future__ import annotations

from sepsys.constructions.common import checked, windows
from sepsys.errors import BadParams
from sepsys.graph_core.families import complete_graph, cycle_graph, hypercube_graph, path_graph
from sepsys.separation.bounds import ceil_div, clog2
from sepsys.separation.system import Certificate, SystemElement, make_certificate


def interval_system(n: int, on_cycle: bool = False) -> Certificate:
    """``ceil(n/2)`` windows along ``P_n`` (or ``C_n``); optimal for both."""
    if n < 3:
        raise BadParams("interval system needs n >= 3")
    g = cycle_graph(n) if on_cycle else path_graph(n)
    elems = [SystemElement.path(w) for w in windows(range(n))]
    name = "interval-cycle" if on_cycle else "interval"
    return checked(make_certificate(g, "path", elems, name, [n], ceil_div(n, 2)))


def complete_system(n: int) -> Certificate:
    """Vertex ``v`` gets label ``v``; path ``i`` runs through the vertices with bit ``i`` set."""
    if n < 2:
        raise BadParams("complete system needs n >= 2")
    g = complete_graph(n)
    bits = clog2(n)
    elems = [SystemElement.path([v for v in range(n) if v >> i & 1]) for i in range(bits)]
    return checked(make_certificate(g, "path", elems, "complete", [n], bits))


def gray_facet_path(d: int, bit: int) -> list[int]:
    """Hamiltonian path of the facet ``{x : bit of x set}`` of ``Q_d`` by reflected Gray code."""
    low = (1 << bit) - 1
    out = []
    for j in range(1 << (d - 1)):
        g = j ^ (j >> 1)
        out.append(((g >> bit) << (bit + 1)) | (1 << bit) | (g & low))
    return out


def hypercube_system(d: int) -> Certificate:
    """One Gray-code path per coordinate facet; signatures are the coordinates themselves."""
    if d < 1:
        raise BadParams("hypercube needs d >= 1")
    g = hypercube_graph(d)
    elems = [SystemElement.path(gray_facet_path(d, i)) for i in range(d)]
    return checked(make_certificate(g, "path", elems, "hypercube", [d], d))
