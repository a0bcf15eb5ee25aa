"""Graphs, family generators and structural algorithms."""

from sepsys.graph_core.families import (
    TightTreeSpec,
    biclique_graph,
    binary_tree_graph,
    complete_graph,
    cycle_graph,
    fan_graph,
    gen_family,
    gen_tight_tree,
    grid_graph,
    hypercube_graph,
    path_graph,
    star_graph,
)
from sepsys.graph_core.graph import (
    FAMILIES,
    Graph,
    bfs_distances,
    build_graph,
    graph_from_text,
    graph_to_text,
    is_path_in,
)
from sepsys.graph_core.grid import GridCoords, hamiltonian_bottom
from sepsys.graph_core.outerplanar import (
    InnerDual,
    OuterplanarEmbedding,
    gen_random_maximal_outerplanar,
    inner_dual,
    outer_cycle,
)
from sepsys.graph_core.trees import (
    DegreeProfile,
    canonical_form,
    center_radius,
    centroid,
    degree_profile,
    enumerate_trees,
    gen_random_tree,
    rooted_parents,
)

__all__ = [
    "FAMILIES",
    "DegreeProfile",
    "Graph",
    "GridCoords",
    "InnerDual",
    "OuterplanarEmbedding",
    "TightTreeSpec",
    "bfs_distances",
    "biclique_graph",
    "binary_tree_graph",
    "build_graph",
    "canonical_form",
    "center_radius",
    "centroid",
    "complete_graph",
    "cycle_graph",
    "degree_profile",
    "enumerate_trees",
    "fan_graph",
    "gen_family",
    "gen_random_maximal_outerplanar",
    "gen_random_tree",
    "gen_tight_tree",
    "graph_from_text",
    "graph_to_text",
    "grid_graph",
    "hamiltonian_bottom",
    "hypercube_graph",
    "inner_dual",
    "is_path_in",
    "outer_cycle",
    "path_graph",
    "rooted_parents",
    "star_graph",
]
