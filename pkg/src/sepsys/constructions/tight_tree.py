"""The tree family on which the ``n/4 + 1`` lower bound is attained up to a constant."""

from __future__ import annotations

from sepsys.constructions.common import checked
from sepsys.graph_core.families import TightTreeSpec, gen_tight_tree
from sepsys.graph_core.trees import rooted_parents
from sepsys.separation.system import Certificate, SystemElement, make_certificate


def tree_path(parent: list[int], depth: list[int], u: int, v: int) -> list[int]:
    """The unique ``u``-``v`` path of a rooted tree."""
    head, tail = [u], [v]
    while depth[head[-1]] > depth[tail[-1]]:
        head.append(parent[head[-1]])
    while depth[tail[-1]] > depth[head[-1]]:
        tail.append(parent[tail[-1]])
    while head[-1] != tail[-1]:
        head.append(parent[head[-1]])
        tail.append(parent[tail[-1]])
    return head + tail[-2::-1]


def tight_tree_paths(spec: TightTreeSpec) -> list[list[int]]:
    t = spec.graph
    parent, order = rooted_parents(t, spec.root)
    depth = [0] * t.n
    for v in order[1:]:
        depth[v] = depth[parent[v]] + 1
    leaf = spec.label_leaf
    last = len(leaf) - 1
    pendant = {hub: p for p, hub in spec.pendant_of.items()}
    paths = []
    for i in range(last):
        if i % 4 == 0:
            continue
        seq = tree_path(parent, depth, leaf[i], leaf[i + 1])
        if i % 4 == 2:
            seq.append(pendant[leaf[i + 1]])
        paths.append(seq)
    paths.append(tree_path(parent, depth, leaf[0], leaf[last]))
    # the root and its two neighbours are otherwise indistinguishable
    paths.append(tree_path(parent, depth, spec.root, leaf[0]))
    paths.append(tree_path(parent, depth, spec.root, leaf[(last + 1) // 2]))
    return paths


def tight_tree_system(h: int) -> Certificate:
    """``3 * 2**(h-3) + 2`` leaf-to-leaf paths separating ``T_h`` (``h >= 4``)."""
    spec = gen_tight_tree(h)
    elems = [SystemElement.path(p) for p in tight_tree_paths(spec)]
    bound = 3 * 2 ** (h - 3) + 2
    return checked(make_certificate(spec.graph, "path", elems, "tight-tree", [h], bound))
