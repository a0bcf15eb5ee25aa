import itertools
from fractions import Fraction
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from brute import is_simple_path, separates_pairwise, to_nx
from sepsys.constructions import (
    EAR_STRIP_MIN,
    PIECE_EXCESS,
    RECORDED_EXCESS,
    axis_paths,
    biclique_plan,
    biclique_system,
    complete_system,
    fan_decompose,
    fan_paths,
    fan_system,
    gray_facet_path,
    grid_system,
    hypercube_system,
    inner2_system,
    interval_system,
    outerplanar_system,
    path_pieces,
    position_classes,
    tight_tree_system,
)
from sepsys.constructions.common import windows
from sepsys.errors import BadParams, DualNotAPath, NotMaximalOuterplanar
from sepsys.graph_core import (
    build_graph,
    cycle_graph,
    fan_graph,
    gen_random_maximal_outerplanar,
    gen_tight_tree,
    grid_graph,
    inner_dual,
    outer_cycle,
)
from sepsys.oracle import min_separating_system
from sepsys.separation import endpoint_audit, verify
from sepsys.separation.bounds import biclique_construction_size, ceil_div, clog2


def genuine(cert) -> bool:
    """Independent re-check: networkx paths plus the pairwise definition."""
    h = to_nx(cert.graph)
    seqs = [el.vertices for el in cert.system]
    return all(is_simple_path(h, s) for s in seqs) and separates_pairwise(cert.graph.n, seqs)


# -- intervals, complete graphs, hypercubes ---------------------------------------------


def test_interval_examples():
    six = interval_system(6)
    assert [el.vertices for el in six.system] == [(0, 1, 2), (1, 2, 3), (2, 3, 4)]
    assert interval_system(4).size == 2
    assert [el.vertices for el in interval_system(3).system] == [(0, 1), (1, 2)]
    with pytest.raises(BadParams):
        interval_system(2)


@pytest.mark.parametrize("n", list(range(3, 41)) + [97, 128, 255])
@pytest.mark.parametrize("on_cycle", [False, True])
def test_interval_sizes(n, on_cycle):
    cert = interval_system(n, on_cycle)
    assert cert.size == ceil_div(n, 2) and genuine(cert)


def test_window_signatures_are_distinct_runs():
    # vertex p lies in the windows max(0, p-h+1)..min(p, h-1); these runs are distinct
    for n in range(3, 4097):
        h = (n + 1) // 2
        runs = {(max(0, p - h + 1), min(p, h - 1)) for p in range(n)}
        assert len(runs) == n
    for n in (3, 10, 31):
        ws = windows(list(range(n)))
        for p in range(n):
            inside = [i for i, w in enumerate(ws) if p in w]
            assert inside == list(range(inside[0], inside[-1] + 1)) if inside else True


def test_complete_examples():
    assert complete_system(8).size == 3
    assert complete_system(2).size == 1
    five = complete_system(5)
    assert five.size == 3 and genuine(five)
    assert min_separating_system(five.graph, "path").optimum == 3


@pytest.mark.parametrize("n", range(2, 40))
def test_complete_sizes(n):
    cert = complete_system(n)
    assert cert.size == clog2(n) and genuine(cert)


def test_hypercube_examples():
    q3 = hypercube_system(3)
    assert q3.size == 3 and all(len(el) == 4 for el in q3.system) and genuine(q3)
    q1 = hypercube_system(1)
    assert q1.size == 1 and q1.system.elements[0].is_trivial
    assert hypercube_system(4).size == 4
    assert min_separating_system(q3.graph, "path").optimum == 3


@pytest.mark.parametrize("d", range(1, 8))
def test_gray_facet_paths(d):
    for bit in range(d):
        seq = gray_facet_path(d, bit)
        assert sorted(seq) == [x for x in range(2**d) if x >> bit & 1]
        assert all(bin(a ^ b).count("1") == 1 for a, b in zip(seq, seq[1:]))


# -- bicliques --------------------------------------------------------------------------


def test_biclique_examples():
    b33 = biclique_system(3, 3)
    assert b33.size <= 8 and genuine(b33)
    b28 = biclique_system(2, 8)
    assert b28.size <= 13 and genuine(b28)
    star = biclique_system(1, 3)
    assert genuine(star)
    assert min_separating_system(star.graph, "path").optimum <= star.size
    with pytest.raises(BadParams):
        biclique_system(4, 3)


@given(st.integers(1, 24), st.integers(1, 48))
def test_biclique_property(m, n):
    if m > n:
        m, n = n, m
    cert = biclique_system(m, n)
    assert cert.size <= biclique_construction_size(m, n)
    assert verify(cert).valid


@given(st.integers(1, 12), st.integers(1, 60), st.integers(0, 2**32 - 1))
def test_biclique_level_groups_split_subtrees(m, n, seed):
    if m > n:
        m, n = n, m
    plan = biclique_plan(m, n)
    if plan.branching < 2:
        return
    assert all(len(group) <= m for group in plan.level_groups.values())
    cert = biclique_system(m, n)
    sets = [set(el.vertices) for el in cert.system]
    rng = random.Random(seed)
    for _ in range(20):
        a, b = rng.sample(range(n), 2)
        if plan.leaf_code[a] == plan.leaf_code[b]:
            continue
        ra, rb = plan.right[a], plan.right[b]
        assert any((ra in s) != (rb in s) for s in sets)


# -- grids ------------------------------------------------------------------------------


def test_grid_examples():
    fig = grid_system(16, 7)
    assert fig.size <= 14 and genuine(fig)
    sq = grid_system(2, 2)
    assert sq.size <= 4 and min_separating_system(sq.graph, "path").optimum == 2
    assert grid_system(4, 4).size <= 8


def test_position_classes_separate():
    for size in range(2, 130):
        classes = position_classes(size)
        assert len(classes) == clog2(size)
        assert separates_pairwise(size, classes)


@given(st.integers(2, 20), st.integers(2, 20))
def test_grid_axes_separate_their_coordinate(m, n):
    g = grid_graph(m, n)
    gc = g.meta["coords"]
    h = to_nx(g)
    along_y = axis_paths(m, n, gc.vertex)
    along_x = axis_paths(n, m, lambda line, pos: gc.vertex(pos, line))
    for group, idx in ((along_y, 1), (along_x, 0)):
        assert all(is_simple_path(h, p) for p in group)
        sets = [set(p) for p in group]
        seen = {}
        for v in range(g.n):
            sig = tuple(v in s for s in sets)
            seen.setdefault(sig, set()).add(gc.coord(v)[idx])
        assert all(len(coords) == 1 for coords in seen.values())


# -- fans -------------------------------------------------------------------------------


def test_fan_examples():
    ten = fan_system(10)
    assert ten.size == 4 and genuine(ten)
    six = fan_system(6)
    assert six.size == 3 and genuine(six)
    four = fan_system(4)
    assert four.size == min_separating_system(fan_graph(4), "path").optimum


@pytest.mark.parametrize("n", range(3, 60))
def test_fan_sizes(n):
    cert = fan_system(n)
    if n >= 6:
        assert cert.size <= ceil_div(n + 6, 4)
    assert genuine(cert)


def test_fan_paths_need_long_rim():
    with pytest.raises(BadParams):
        fan_paths([1, 2, 3, 4], 0)


# -- outerplanar ------------------------------------------------------------------------


def zigzag_octagon():
    rim = [(i, (i + 1) % 8) for i in range(8)]
    return build_graph(8, rim + [(1, 7), (1, 6), (2, 6), (2, 5), (3, 5)])


def test_fan_decompose_examples():
    f8 = outer_cycle(fan_graph(8))
    dec = fan_decompose(f8, inner_dual(f8))
    assert len(dec.fans) == 1 and dec.fans[0].apex == 0

    zz = outer_cycle(zigzag_octagon())
    dec = fan_decompose(zz, inner_dual(zz))
    apexes = [f.apex for f in dec.fans]
    assert len(dec.fans) >= 2 and len(set(apexes)) == len(apexes)
    pos = zz.position()
    sides = [pos[a] < pos[dec.beta] for a in apexes]
    assert all(x != y for x, y in zip(sides, sides[1:]))

    for seed in range(4):
        emb = gen_random_maximal_outerplanar(4, seed)[1]
        dec = fan_decompose(emb, inner_dual(emb))
        assert 1 <= len(dec.fans) <= 2
        assert set().union(*({f.apex, *f.rim} for f in dec.fans)) == set(range(4))


@given(st.integers(4, 30), st.integers(0, 10_000))
def test_fan_decomposition_invariants(n, seed):
    g, emb = gen_random_maximal_outerplanar(n, seed)
    dual = inner_dual(emb)
    if not dual.is_path():
        with pytest.raises(DualNotAPath):
            fan_decompose(emb, dual)
        return
    dec = fan_decompose(emb, dual)
    adj = {v: set() for v in range(n)}
    for a, b, c in emb.triangles:
        adj[a] |= {b, c}
        adj[b] |= {a, c}
        adj[c] |= {a, b}
    for fan in dec.fans:
        assert all(v in adj[fan.apex] for v in fan.rim)
        assert all(b in adj[a] for a, b in zip(fan.rim, fan.rim[1:]))
    verts = [{f.apex, *f.rim} for f in dec.fans]
    for i, j in itertools.combinations(range(len(verts)), 2):
        assert len(verts[i] & verts[j]) <= 2
    assert set(dec.side0) | set(dec.side1) == set(range(n))
    assert not set(dec.side0) & set(dec.side1)
    cyc = list(emb.outer_cycle)
    for side in (dec.side0, dec.side1):
        idx = [cyc.index(v) for v in side]
        steps = {(b - a) % n for a, b in zip(idx, idx[1:])}
        assert steps <= {1}
    assert g.degrees().count(2) == 2
    assert g.degree(dec.alpha) == 2 and g.degree(dec.beta) == 2


def test_inner2_examples():
    f20 = outer_cycle(fan_graph(20))
    cert = inner2_system(f20, inner_dual(f20))
    assert genuine(cert) and cert.size <= 20 / 4 + RECORDED_EXCESS
    zz = outer_cycle(zigzag_octagon())
    assert genuine(inner2_system(zz, inner_dual(zz)))
    emb = gen_random_maximal_outerplanar(4, 0)[1]
    small = inner2_system(emb, inner_dual(emb))
    assert genuine(small)
    assert min_separating_system(small.graph, "path").optimum <= small.size


@given(st.integers(4, 60), st.integers(0, 10_000))
def test_inner2_covers(n, seed):
    emb = gen_random_maximal_outerplanar(n, seed)[1]
    dual = inner_dual(emb)
    if not dual.is_path():
        return
    cert = inner2_system(emb, dual)
    assert verify(cert, require_cover=True).valid


def test_outerplanar_examples():
    for n in (4, 5, 12, 40, 101):
        cert = outerplanar_system(fan_graph(n))
        assert genuine(cert) and cert.size <= Fraction(n, 4) + PIECE_EXCESS
    g, _ = gen_random_maximal_outerplanar(100, 2024)
    cert = outerplanar_system(g)
    assert verify(cert).valid and cert.size <= 25 + RECORDED_EXCESS
    g4, _ = gen_random_maximal_outerplanar(4, 0)
    assert min_separating_system(g4, "path").optimum <= outerplanar_system(g4).size
    with pytest.raises(NotMaximalOuterplanar):
        outerplanar_system(cycle_graph(6))


@given(st.integers(4, 200), st.integers(0, 10**6))
def test_outerplanar_property(n, seed):
    g, _ = gen_random_maximal_outerplanar(n, seed)
    stats: dict[str, int] = {}
    cert = outerplanar_system(g, stats)
    assert verify(cert).valid
    pieces = stats.get("pieces", 0)
    assert 1 <= pieces <= EAR_STRIP_MIN - 2
    assert cert.size <= Fraction(n, 4) + pieces * PIECE_EXCESS + Fraction(pieces - 1, 2)
    assert n > 30 or genuine(cert)


def two_ear_graph(choices):
    """Triangulated polygon grown one triangle at a time along two chains; its dual is a path."""
    left, right, edges = [0], [1], {(0, 1)}
    for v, side in enumerate(choices, start=2):
        edges |= {(left[-1], v), (right[-1], v)}
        (left if side else right).append(v)
    return build_graph(len(choices) + 2, sorted(edges))


def _piece_excess(choices):
    g = two_ear_graph(choices)
    stats: dict[str, int] = {}
    cert = outerplanar_system(g, stats)
    assert stats.get("pieces", 0) <= 1 and verify(cert).valid
    return cert.size - Fraction(g.n, 4)


def test_piece_excess_exhaustive():
    worst = max(
        _piece_excess(choices)
        for t in range(2, 13)
        for choices in itertools.product((0, 1), repeat=t)
    )
    assert worst == PIECE_EXCESS


@given(st.lists(st.booleans(), min_size=2, max_size=400))
def test_piece_excess_property(choices):
    assert _piece_excess(choices) <= PIECE_EXCESS


@given(st.integers(4, 120), st.integers(0, 10**6))
def test_path_pieces_partition(n, seed):
    emb = gen_random_maximal_outerplanar(n, seed)[1]
    pieces = path_pieces(list(emb.triangles))
    flat = [t for p in pieces for t in p]
    assert sorted(flat) == sorted(emb.triangles)
    for piece in pieces:
        for a, b in zip(piece, piece[1:]):
            assert len(set(a) & set(b)) == 2


# -- tight trees --------------------------------------------------------------------------


@pytest.mark.parametrize("h", range(4, 9))
def test_tight_tree_system(h):
    cert = tight_tree_system(h)
    n = 3 * 2 ** (h - 1) - 3
    assert cert.graph.n == n
    assert cert.size <= 3 * 2 ** (h - 3) + 2
    assert cert.size / n <= 0.25 + 3 / n
    assert genuine(cert)
    assert endpoint_audit(cert.graph, cert.system).ok


def test_tight_tree_h5():
    cert = tight_tree_system(5)
    assert cert.graph.n == 45 and cert.size <= 14 and 14 / 45 < 0.25 + 3 / 45
    assert gen_tight_tree(5).graph.edges == cert.graph.edges


def test_constructions_on_paths_pass_audit():
    for n in range(3, 30):
        cert = interval_system(n)
        assert endpoint_audit(cert.graph, cert.system).ok
