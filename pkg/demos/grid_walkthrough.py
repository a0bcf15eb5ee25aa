"""Walk through the grid construction on a 7 x 16 grid.

Prints the position classes used along each axis, the paths they turn
into, and the membership pattern of every vertex, then checks that no
two vertices share a pattern.

    python demos/grid_walkthrough.py
"""

from sepsys.constructions import grid_system, position_classes
from sepsys.separation import clog2, signature_strings, signatures, verify

ROWS, COLS = 7, 16

cert = grid_system(ROWS, COLS)
print(f"grid {ROWS} x {COLS}: {cert.graph.n} vertices, {cert.size} paths")
print(f"budget 2*ceil(log {ROWS}) + 2*ceil(log {COLS}) = {2 * clog2(ROWS) + 2 * clog2(COLS)}")

# Each class of column positions is realised twice, once in the top rows
# and once in the bottom rows, so the serpentine can reach every column.
for i, cls in enumerate(position_classes(COLS)):
    print(f"column class {i}: {cls}")

print()
for i, el in enumerate(cert.system):
    print(f"path {i:2d}: {len(el):3d} vertices, ends at {el.endpoints}")

sig = signatures(cert.graph, cert.system)
codes = signature_strings(sig, cert.size)
print()
for x in range(ROWS):
    print(" ".join(codes[x * COLS + y] for y in range(COLS)))

report = verify(cert)
print()
print(f"distinct patterns: {len(set(codes))} of {cert.graph.n}; verifier says {report.summary()}")
