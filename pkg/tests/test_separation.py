import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from brute import all_paths, all_subtrees, is_simple_path, is_subtree, separates_pairwise, to_nx, unseparated_pairs
from sepsys.errors import BadParams, ElementNotInGraph, InvalidSystem, NonConstructiveRow, NotATree, ParseError, UnknownClass
from sepsys.graph_core import (
    binary_tree_graph,
    build_graph,
    complete_graph,
    cycle_graph,
    gen_random_maximal_outerplanar,
    gen_random_tree,
    path_graph,
    star_graph,
)
from sepsys.oracle import min_separating_system
from sepsys.separation import (
    Certificate,
    SeparatingSystem,
    SystemElement,
    arrepol_bounds,
    certificate_from_text,
    certificate_to_text,
    endpoint_audit,
    is_separating,
    known_bounds,
    signature_strings,
    signatures,
    verify,
)


def cert_of(g, elements, kind="path", bound=None):
    return Certificate(g, SeparatingSystem(kind, tuple(elements)), bound)


def paths(*seqs):
    return [SystemElement.path(s) for s in seqs]


# -- signatures ----------------------------------------------------------------


def test_signature_examples():
    p4 = path_graph(4)
    sig = signatures(p4, paths([0, 1], [1, 2]))
    assert signature_strings(sig, 2) == ["10", "11", "01", "00"]
    assert signatures(p4, []) == [0, 0, 0, 0]
    assert signature_strings(signatures(complete_graph(3), paths([0])), 1) == ["1", "0", "0"]
    with pytest.raises(ElementNotInGraph):
        signatures(p4, paths([0, 2]))


# -- verify -------------------------------------------------------------------------


def test_verify_examples():
    c4 = cycle_graph(4)
    assert verify(cert_of(c4, paths([0, 1], [1, 2]))).valid
    rep = verify(cert_of(path_graph(4), paths([0, 1, 2, 3])))
    assert not rep.valid and (0, 1) in rep.unseparated
    dup = verify(cert_of(c4, paths([0, 1], [1, 2], [2, 1])))
    assert not dup.distinct_ok and not dup.valid
    assert verify(cert_of(c4, paths([0, 1], [1, 2], [2, 1])), require_distinct=False).valid


def test_verify_cover_and_trivial_options():
    p3 = path_graph(3)
    elems = paths([0], [1])
    rep = verify(cert_of(p3, elems))
    assert rep.valid and not rep.covered and rep.uncovered == [2]
    assert not verify(cert_of(p3, elems), require_cover=True).valid
    assert not verify(cert_of(p3, elems), allow_trivial=False).valid
    assert verify(cert_of(p3, paths([0, 1], [1, 2])), allow_trivial=False, require_cover=True).valid


def test_verify_flags_bad_elements():
    g = path_graph(4)
    rep = verify(cert_of(g, paths([0, 2], [1, 2], [3, 3], [0, 9])))
    assert rep.bad_elements == [0, 2, 3]
    tree_in_path_system = [SystemElement.tree([0, 1], [(0, 1)])]
    assert verify(cert_of(g, tree_in_path_system)).bad_elements == [0]
    cyc = SystemElement.tree([0, 1, 2], [(0, 1), (1, 2), (0, 2)])
    assert verify(cert_of(complete_graph(3), [cyc], "tree")).bad_elements == [0]


def _random_host(rng, n):
    kind = rng.randrange(3)
    if kind == 0 or n < 4:
        return gen_random_tree(n, rng.randrange(10**6))
    if kind == 1:
        return gen_random_maximal_outerplanar(n, rng.randrange(10**6))[0]
    edges = {tuple(sorted(e)) for e in gen_random_tree(n, rng.randrange(10**6)).edges}
    for _ in range(rng.randrange(n)):
        u, v = rng.sample(range(n), 2)
        edges.add((min(u, v), max(u, v)))
    return build_graph(n, sorted(edges))


def _mutate(rng, n, seq):
    seq = list(seq)
    op = rng.randrange(3)
    if op == 0:
        seq.append(rng.randrange(n))
    elif op == 1 and len(seq) > 1:
        i = rng.randrange(len(seq))
        seq[i] = rng.randrange(n)
    else:
        seq = seq[::-1] + [seq[0]]
    return seq


@given(st.integers(2, 8), st.integers(0, 2**32 - 1))
def test_verify_matches_definition_paths(n, seed):
    rng = random.Random(seed)
    g = _random_host(rng, n)
    h = to_nx(g)
    pool = sorted(all_paths(h))
    chosen = [list(rng.choice(pool)) for _ in range(rng.randrange(1, 7))]
    if rng.random() < 0.4:
        i = rng.randrange(len(chosen))
        chosen[i] = _mutate(rng, n, chosen[i])
    elems = paths(*chosen)
    rep = verify(cert_of(g, elems), require_distinct=False)
    genuine = [is_simple_path(h, s) for s in chosen]
    good_sets = [set(s) for s, ok in zip(chosen, genuine) if ok]
    assert rep.bad_elements == [i for i, ok in enumerate(genuine) if not ok]
    assert rep.valid == (all(genuine) and separates_pairwise(n, good_sets))
    assert rep.unseparated_count == len(unseparated_pairs(n, good_sets))


@given(st.integers(2, 7), st.integers(0, 2**32 - 1))
def test_verify_matches_definition_trees(n, seed):
    rng = random.Random(seed)
    g = _random_host(rng, n)
    h = to_nx(g)
    pool = sorted(all_subtrees(h), key=lambda p: (sorted(p[0]), sorted(p[1])))
    chosen = [rng.choice(pool) for _ in range(rng.randrange(1, 6))]
    elems = [SystemElement.tree(vs, es) for vs, es in chosen]
    if rng.random() < 0.4:
        vs, es = chosen[0]
        extra = rng.randrange(n)
        elems[0] = SystemElement.tree(set(vs) | {extra}, es)
    rep = verify(cert_of(g, elems, "tree"), require_distinct=False)
    genuine = [is_subtree(h, el.vertices, el.edges) for el in elems]
    good_sets = [set(el.vertices) for el, ok in zip(elems, genuine) if ok]
    assert rep.bad_elements == [i for i, ok in enumerate(genuine) if not ok]
    assert rep.valid == (all(genuine) and separates_pairwise(n, good_sets))


@given(st.integers(3, 40), st.integers(0, 2**32 - 1))
def test_verify_pairs_on_larger_paths(n, seed):
    # windows on a path with some of them dropped: unseparated pairs match the double loop
    rng = random.Random(seed)
    g = path_graph(n)
    h = (n + 1) // 2
    keep = [list(range(i, i + h)) for i in range(h) if rng.random() < 0.7]
    rep = verify(cert_of(g, paths(*keep)))
    assert sorted(rep.unseparated) == unseparated_pairs(n, keep)
    assert rep.valid == separates_pairwise(n, keep)


@given(st.integers(2, 30), st.integers(0, 2**32 - 1))
def test_adding_elements_keeps_validity(n, seed):
    rng = random.Random(seed)
    g = path_graph(n)
    base = paths(*[list(range(i, i + (n + 1) // 2)) for i in range((n + 1) // 2)])
    assert verify(cert_of(g, base)).valid
    a = rng.randrange(n)
    b = rng.randrange(a, n)
    more = base + paths(list(range(a, b + 1)))
    assert verify(cert_of(g, more), require_distinct=False).valid
    shuffled = base[:]
    rng.shuffle(shuffled)
    assert verify(cert_of(g, shuffled)).valid
    assert len(signature_strings(signatures(g, shuffled), len(shuffled))[0]) == len(shuffled)


def test_is_separating():
    assert is_separating(path_graph(3), paths([0, 1], [1, 2]))
    assert not is_separating(path_graph(3), paths([0, 1, 2]))


# -- text format ------------------------------------------------------------------------


def _sample_certificates():
    g = gen_random_maximal_outerplanar(9, 4)[0]
    yield cert_of(g, paths([0, 1], [3], [5, 6, 7]), bound=7)
    t = binary_tree_graph(3)
    yield cert_of(t, [SystemElement.tree([0, 1, 3], [(0, 1), (1, 3)]), SystemElement.tree([5], [])], "tree")
    res = min_separating_system(path_graph(5), "path")
    yield res.certificate(path_graph(5))


@pytest.mark.parametrize("cert", list(_sample_certificates()))
def test_certificate_round_trip(cert):
    text = certificate_to_text(cert)
    back = certificate_from_text(text)
    assert certificate_to_text(back) == text
    assert back.system.elements == cert.system.elements
    assert back.claimed_bound == cert.claimed_bound
    assert back.graph.edges == cert.graph.edges


def test_certificate_layout():
    text = certificate_to_text(cert_of(path_graph(3), paths([0, 1], [2]), bound=2))
    assert text == "SEPSYS 1\nGRAPH 3 2\nE 0 1\nE 1 2\nKIND path\nSYSTEM 2\nP 0 1\nP 2\nMETA claimed=2\n"
    tree = certificate_to_text(cert_of(path_graph(3), [SystemElement.tree([1, 2], [(1, 2)])], "tree"))
    assert "T 2 ; 1 2 ; 1 2\n" in tree


GOOD = "SEPSYS 1\nGRAPH 3 2\nE 0 1\nE 1 2\nKIND path\nSYSTEM 2\nP 0 1\nP 2\n"


@pytest.mark.parametrize("broken, line", [
    (GOOD.replace("SEPSYS 1", "SEPSYS 2"), 1),
    (GOOD.replace("P 0 1", "P 0  1"), 7),
    (GOOD.replace("P 0 1", "P x 1"), 7),
    (GOOD.replace("P 0 1", "P 00 1"), 7),
    (GOOD.replace("E 1 2", "E 2 1"), 4),
    (GOOD.replace("KIND path", "KIND walk"), 5),
    (GOOD.replace("SYSTEM 2", "SYSTEM 3"), 9),
    (GOOD.replace("P 2", "T 1 ; 2 ;"), 8),
    (GOOD + "META broken\n", 9),
    (GOOD[:-1], None),
])
def test_certificate_parse_is_strict(broken, line):
    with pytest.raises(ParseError) as info:
        certificate_from_text(broken)
    assert info.value.line == line


def test_certificate_parse_accepts_good():
    assert certificate_to_text(certificate_from_text(GOOD)) == GOOD


# -- bounds -----------------------------------------------------------------------------


def test_known_bounds_examples():
    grid = known_bounds("grid", [4, 8])
    assert (grid.lower, grid.upper) == (5, 10)
    p9 = known_bounds("path", [9])
    assert (p9.lower, p9.upper) == (5, 5)
    k8 = known_bounds("complete", [8])
    assert (k8.lower, k8.upper) == (3, 3)
    tree = known_bounds("tree", [100])
    assert tree.lower == 26 and tree.upper is None
    assert known_bounds("biclique", [2, 8]).upper == 13
    with pytest.raises(NonConstructiveRow):
        known_bounds("gnp", [])
    with pytest.raises(UnknownClass):
        known_bounds("petersen", [])
    with pytest.raises(BadParams):
        known_bounds("grid", [4])


@pytest.mark.parametrize("cls, params", [
    ("path", [5]), ("cycle", [7]), ("complete", [6]), ("hypercube", [3]), ("grid", [2, 3]), ("fan", [7]),
])
def test_known_bounds_bracket_oracle(cls, params):
    from sepsys.graph_core import gen_family

    row = known_bounds(cls, params)
    opt = min_separating_system(gen_family(cls, params), "path").optimum
    assert row.lower <= opt and (row.upper is None or opt <= row.upper)


def test_arrepol_examples():
    assert arrepol_bounds(star_graph(6))[0] == 4
    assert arrepol_bounds(path_graph(6))[0] == 3
    lower, upper = arrepol_bounds(path_graph(6))
    assert upper == Fraction(4, 3) + 2
    with pytest.raises(NotATree):
        arrepol_bounds(cycle_graph(5))


def test_arrepol_on_subdivided_binary_tree():
    # every edge of a complete binary tree subdivided once
    base = binary_tree_graph(5)
    n = base.n
    edges = []
    for i, (u, v) in enumerate(base.edges):
        mid = n + i
        edges += [(u, mid), (mid, v)]
    t = build_graph(n + base.m, edges)
    lower, _ = arrepol_bounds(t)
    assert 9 * lower >= 2 * t.n


# -- endpoint audit ---------------------------------------------------------------------


def test_endpoint_audit_examples():
    p4 = path_graph(4)
    audit = endpoint_audit(p4, SeparatingSystem("path", tuple(paths([0, 1], [1, 2]))))
    assert audit.leaf_endpoints >= audit.leaf_count - 1 == 1 and audit.ok
    for n in range(3, 10):
        res = min_separating_system(path_graph(n), "path")
        assert not endpoint_audit(path_graph(n), res.witness).adjacent_deg2_violations
    star = star_graph(4)
    assert endpoint_audit(star, min_separating_system(star, "path").witness).ok
    with pytest.raises(InvalidSystem):
        endpoint_audit(p4, SeparatingSystem("path", tuple(paths([0, 1, 2, 3]))))


def test_endpoint_audit_trivial_convention():
    el = SystemElement.path([3])
    assert el.endpoints == (3, 3)
