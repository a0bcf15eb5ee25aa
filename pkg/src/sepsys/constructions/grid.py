"""Separating path systems of grids with ``2 ceil(log m) + 2 ceil(log n)`` paths."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from sepsys.constructions.common import checked
from sepsys.errors import BadParams
from sepsys.graph_core.families import grid_graph
from sepsys.graph_core.grid import GridCoords, hamiltonian_bottom
from sepsys.separation.bounds import clog2
from sepsys.separation.system import Certificate, SystemElement, make_certificate


def position_classes(size: int) -> list[list[int]]:
    """Position sets whose indicator vectors tell apart all positions ``0..size-1``.

    Class 0 is ``{p : p mod 4 in {1, 2}}``; class ``i >= 1`` holds the
    positions with bit ``i`` set.  Bits ``>= 1`` identify ``p // 2`` and
    class 0 splits each pair ``{2t, 2t+1}``.
    """
    out = [[p for p in range(size) if p % 4 in (1, 2)]]
    out += [[p for p in range(size) if p >> i & 1] for i in range(1, clog2(size))]
    return out


def runs(positions: list[int]) -> list[tuple[int, int]]:
    """Maximal intervals of consecutive integers, as ``(first, last)``."""
    out: list[tuple[int, int]] = []
    for p in positions:
        if out and out[-1][1] == p - 1:
            out[-1] = (out[-1][0], p)
        else:
            out.append((p, p))
    return out


@dataclass(frozen=True)
class Band:
    """A band of ``height`` lines next to an excluded line.

    ``line_of_row(r)`` maps a row of :func:`hamiltonian_bottom` to a line
    index, with row ``height - 1`` adjacent to ``excluded``.
    """

    height: int
    excluded: int
    line_of_row: Callable[[int], int]


def band_path(band: Band, positions: list[int], vertex: Callable[[int, int], int]) -> list[int]:
    """Path covering ``band x positions`` that leaves the band only through the excluded line.

    Each run of consecutive positions gets a Hamiltonian path with both ends
    on the line next to the excluded one; consecutive runs are joined along
    the excluded line.  A run of width one can only be the last run and is
    walked straight away from the excluded line.
    """
    seq: list[int] = []
    exit_pos = -1
    blocks = runs(positions)
    for idx, (first, last) in enumerate(blocks):
        width = last - first + 1
        if width == 1 and band.height > 1:
            if idx != len(blocks) - 1:
                raise AssertionError("width-one run before the end of the band")
            cells = [(0, r) for r in range(band.height - 1, -1, -1)]
        else:
            cells = hamiltonian_bottom(width, band.height)
        if seq:
            seq.extend(vertex(band.excluded, p) for p in range(exit_pos, first + 1))
        seq.extend(vertex(band.line_of_row(r), first + c) for c, r in cells)
        exit_pos = first + cells[-1][0]
    return seq


def axis_paths(lines: int, size: int, vertex: Callable[[int, int], int]) -> list[list[int]]:
    # Separate positions 0..size-1 using two bands of lines: one omitting the
    # last line, one omitting the first.
    near = Band(lines - 1, lines - 1, lambda r: r)
    far = Band(lines - 1, 0, lambda r: lines - 1 - r)
    out = []
    for band in (near, far):
        for cls in position_classes(size):
            out.append(band_path(band, cls, vertex))
    return out


def grid_system(m: int, n: int) -> Certificate:
    """Separating path system of the ``m x n`` grid (vertex ``(x, y)`` is ``x * n + y``)."""
    if m < 2 or n < 2:
        raise BadParams("grid system needs m, n >= 2")
    g = grid_graph(m, n)
    gc: GridCoords = g.meta["coords"]  # type: ignore[assignment]
    paths = axis_paths(m, n, gc.vertex)
    paths += axis_paths(n, m, lambda line, pos: gc.vertex(pos, line))
    elems = [SystemElement.path(p) for p in paths]
    bound = 2 * clog2(m) + 2 * clog2(n)
    return checked(make_certificate(g, "path", elems, "grid", [m, n], bound))
