"""Compare the two tree-system constructions against exact optima.

Small trees are solved exactly; the constructions are then run on larger
random trees where only the bounds are available.

    python demos/tree_systems_tour.py
"""

from collections import Counter

from sepsys.graph_core import center_radius, enumerate_trees, gen_random_tree, star_graph
from sepsys.oracle import exact_f
from sepsys.separation import clog2
from sepsys.tree_systems import centroid_plan, centroid_tree_system, radius_plan, radius_tree_system

print("gap between construction and optimum on every free tree with 8 vertices")
gaps = Counter()
for t in enumerate_trees(8):
    best = exact_f(t, "tree")
    radius_size = radius_tree_system(t).size
    centroid_size = centroid_tree_system(t).size
    gaps[min(radius_size, centroid_size) - best] += 1
for gap, count in sorted(gaps.items()):
    print(f"  better construction is {gap} above optimum on {count} trees")

# A star is the worst case for the radius route and the best for the centroid one.
star = star_graph(17)
plan = radius_plan(star)
print()
print(f"star on 17 vertices: {len(plan.leaves)} leaves labelled with {plan.label_bits} bits")
print(f"  radius-tree size {radius_tree_system(star).size}, centroid-tree size {centroid_tree_system(star).size}")

print()
print(f"{'n':>5} {'seed':>4} {'r':>3} {'radius':>7} {'bound':>6} {'centroid':>9} {'bound':>6}")
for n in (50, 200, 1000):
    for seed in range(3):
        t = gen_random_tree(n, seed)
        _, r = center_radius(t)
        cp = centroid_plan(t)
        print(
            f"{n:5d} {seed:4d} {r:3d} {radius_tree_system(t).size:7d} {r + 2 * clog2(n) + 1:6d}"
            f" {centroid_tree_system(t).size:9d} {n // 2 + clog2(n) + 1:6d}"
            f"   (largest branch {max(len(c) for c in cp.components)})"
        )
