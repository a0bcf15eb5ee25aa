"""How far above n/4 does the outerplanar construction land?

Generates random maximal outerplanar graphs, builds a system for each and
tabulates size - n/4.  With 100 seeds this is the corpus on which the
repository measures its additive constant; other orders can land higher.

    python demos/outerplanar_excess.py [seeds]
"""

import sys
from statistics import mean

from sepsys.constructions import RECORDED_EXCESS, outerplanar_system
from sepsys.graph_core import gen_random_maximal_outerplanar

seeds = int(sys.argv[1]) if len(sys.argv) > 1 else 20

print(f"{'n':>5} {'mean size':>10} {'mean excess':>12} {'max excess':>11}")
overall = float("-inf")
for n in (20, 50, 100, 500, 1000):
    sizes = []
    for seed in range(seeds):
        g, _ = gen_random_maximal_outerplanar(n, seed)
        sizes.append(outerplanar_system(g).size)
    excess = [s - n / 4 for s in sizes]
    overall = max(overall, max(excess))
    print(f"{n:5d} {mean(sizes):10.1f} {mean(excess):12.2f} {max(excess):11.2f}")

print(f"\nlargest excess over {seeds} seeds: {overall:.2f} (recorded constant {RECORDED_EXCESS})")
