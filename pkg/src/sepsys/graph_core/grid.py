"""Grid coordinates and Hamiltonian paths ending on the bottom row."""

from __future__ import annotations

from dataclasses import dataclass

from sepsys.errors import BadParams, Impossible


@dataclass(frozen=True)
class GridCoords:
    """Bijection between grid vertices and ``(x, y)`` with ``0 <= x < m``, ``0 <= y < n``.

    Vertex id of ``(x, y)`` is ``x * n + y``.
    """

    m: int
    n: int

    def vertex(self, x: int, y: int) -> int:
        return x * self.n + y

    def coord(self, v: int) -> tuple[int, int]:
        return divmod(v, self.n)

    def adjacent(self, u: int, v: int) -> bool:
        (x1, y1), (x2, y2) = self.coord(u), self.coord(v)
        return abs(x1 - x2) + abs(y1 - y2) == 1


def _serpentine(cols: range, h: int) -> list[tuple[int, int]]:
    # Enters at the bottom of the first column; even column count exits at the bottom.
    out = []
    for k, c in enumerate(cols):
        rows = range(h - 1, -1, -1) if k % 2 == 0 else range(h)
        out.extend((c, r) for r in rows)
    return out


def _three_column_gadget(c0: int, h: int) -> list[tuple[int, int]]:
    # Up column c0, across the top, then a 2-wide zigzag down columns c0+1, c0+2.
    # Ends at the bottom of column c0+2 when h is odd and of column c0+1 when h is even.
    out = [(c0, r) for r in range(h - 1, -1, -1)]
    out += [(c0 + 1, 0), (c0 + 2, 0)]
    for r in range(1, h):
        pair = [(c0 + 2, r), (c0 + 1, r)]
        out.extend(pair if r % 2 == 1 else pair[::-1])
    return out


def hamiltonian_bottom(w: int, h: int) -> list[tuple[int, int]]:
    """Hamiltonian path of the ``w`` x ``h`` grid with both ends in row ``h - 1``.

    Cells are ``(column, row)``; the path starts at ``(0, h - 1)``.  Even
    widths use a column serpentine.  Odd widths combine the serpentine with a
    three-column gadget: the gadget comes first when ``h`` is odd and last
    when ``h`` is even (with even ``h`` the far corner has the wrong colour
    to be an endpoint).
    """
    if w < 1 or h < 1:
        raise BadParams(f"grid sides must be positive, got {w}x{h}")
    if w == 1:
        if h == 1:
            return [(0, 0)]
        raise Impossible("a single column has its path endpoints in different rows")
    if h == 1:
        return [(c, 0) for c in range(w)]
    if w % 2 == 0:
        return _serpentine(range(w), h)
    if h % 2 == 1:
        return _three_column_gadget(0, h) + _serpentine(range(3, w), h)
    return _serpentine(range(w - 3), h) + _three_column_gadget(w - 3, h)
