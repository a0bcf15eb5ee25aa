"""Exact optima for small members of each family next to the bounds table.

    python demos/small_optima.py
"""

from sepsys.errors import NonConstructiveRow
from sepsys.graph_core import gen_family
from sepsys.oracle import min_separating_system
from sepsys.separation import known_bounds

CASES = [
    ("path", (7,)),
    ("cycle", (8,)),
    ("complete", (6,)),
    ("hypercube", (3,)),
    ("biclique", (2, 5)),
    ("grid", (3, 3)),
    ("fan", (9,)),
    ("star", (8,)),
]

for cls, params in CASES:
    g = gen_family(cls, params)
    res = min_separating_system(g, "path")
    try:
        row = known_bounds(cls, params)
        bracket = f"[{row.lower}, {row.upper if row.upper is not None else '?'}]"
    except NonConstructiveRow:
        bracket = "[no row]"
    print(f"{cls:10s} {str(params):8s} n={g.n:2d} f={res.optimum}  bounds {bracket}  ({res.nodes_explored} nodes)")
    if cls == "grid":
        for el in res.witness:
            print(f"    {list(el.vertices)}")
