import numpy as np
import pytest

from lapwalk import io as lio
from lapwalk.graphs import (
    cartesian_product,
    circulant,
    circulant_family,
    complement,
    complete,
    cone_p4_with_pendant,
    cycle,
    disjoint_union,
    empty,
    hypercube,
    join,
    line_graph,
    make_graph,
    odd_unicyclic,
    path,
    weak_product,
)


def test_path_degenerate_and_small():
    p1 = path(1)
    assert p1.n == 1 and p1.edge_count == 0
    p3 = path(3)
    assert [(u, v) for u, v, _ in p3.edges] == [(0, 1), (1, 2)]
    p5 = path(5)
    assert sorted(p5.degrees()) == [1, 1, 2, 2, 2]


def test_cycle_requires_three_vertices():
    with pytest.raises(ValueError):
        cycle(2)
    assert cycle(3).edges == complete(3).edges


def test_cycle_eigenvalues():
    # brute-force eigensolve oracle
    assert np.allclose(np.linalg.eigvalsh(cycle(4).adjacency()), [-2, 0, 0, 2], atol=1e-9)
    assert np.allclose(
        np.linalg.eigvalsh(cycle(6).adjacency()), [-2, -1, -1, 1, 1, 2], atol=1e-9
    )


def test_complete_empty_hypercube():
    assert complete(2).edge_count == 1
    assert empty(4).edge_count == 0
    assert hypercube(2).edges == cycle(4).relabel([0, 1, 3, 2]).edges
    q3 = hypercube(3)
    assert q3.n == 8
    assert all(d == 3 for d in q3.degrees())


def test_circulant():
    assert circulant(6, {1, 5}).edges == cycle(6).edges
    matching = circulant(4, {2})
    assert [(u, v) for u, v, _ in matching.edges] == [(0, 2), (1, 3)]
    with pytest.raises(ValueError):
        circulant(7, {2})  # not closed under negation
    with pytest.raises(ValueError):
        circulant(5, {0, 1, 4})


def test_circulant_family():
    assert circulant_family(2).edges == circulant(4, {2}).edges
    # m=3: m-1 even, generators {+-1}
    assert circulant_family(3).edges == cycle(6).edges
    for m in range(2, 9):
        g = circulant_family(m)
        degs = g.degrees()
        assert g.n == 2 * m
        assert degs.min() == degs.max() == m - 1
    with pytest.raises(ValueError):
        circulant_family(1)


def test_complement():
    assert complement(empty(4)).edges == complete(4).edges
    p5 = path(5)
    assert complement(complement(p5)) == p5
    two_k2 = disjoint_union(complete(2), complete(2))
    # enumerated by hand on 4 vertices: the complement is the 4-cycle 0-2-1-3
    assert [(u, v) for u, v, _ in complement(two_k2).edges] == [(0, 2), (0, 3), (1, 2), (1, 3)]
    with pytest.raises(ValueError):
        complement(make_graph(2, [(0, 1, 2.0)]))


def test_join_and_union():
    g = join(empty(2), complete(2))  # K4 minus one edge
    assert g.n == 4
    assert not g.has_edge(0, 1)
    assert g.edge_count == 5
    p3 = join(empty(2), empty(1))
    assert p3.relabel([0, 2, 1]) == path(3)
    for a, b in [(path(3), complete(2)), (cycle(4), empty(3))]:
        assert join(a, b).n == a.n + b.n


def test_complement_join_duality():
    rng = np.random.default_rng(5)
    for _ in range(8):
        na, nb = int(rng.integers(3, 7)), int(rng.integers(3, 7))
        ga = _random_graph(rng, na)
        gb = _random_graph(rng, nb)
        lhs = complement(join(ga, gb))
        rhs = disjoint_union(complement(ga), complement(gb))
        assert lhs == rhs  # identical labels under the block labeling


def _random_graph(rng, n):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
    return make_graph(n, edges)


def test_products():
    pk = weak_product(path(3), complete(4))
    assert pk.n == 12
    rng = np.random.default_rng(19)
    pairs = [(path(3), complete(2)), (cycle(4), path(2))]
    pairs += [
        (_random_graph(rng, int(rng.integers(2, 6))), _random_graph(rng, int(rng.integers(2, 6))))
        for _ in range(5)
    ]
    for g, h in pairs:
        a = weak_product(g, h).adjacency()
        assert np.array_equal(a, np.kron(g.adjacency(), h.adjacency()))
        c = cartesian_product(g, h).adjacency()
        expected = np.kron(g.adjacency(), np.eye(h.n)) + np.kron(np.eye(g.n), h.adjacency())
        assert np.array_equal(c, expected)
    assert cartesian_product(complete(2), join(empty(2), complete(2))).n == 8


def test_line_graph():
    lg, edges = line_graph(path(5))
    assert lg == path(4)
    assert edges == ((0, 1), (1, 2), (2, 3), (3, 4))
    tri, _ = line_graph(cycle(3))
    assert tri == cycle(3)
    # handshake and vertex count across a batch
    rng = np.random.default_rng(11)
    for _ in range(10):
        g = _random_graph(rng, int(rng.integers(4, 9)))
        lg, edges = line_graph(g)
        assert lg.n == g.edge_count == len(edges)
        assert sum(lg.degrees()) == 2 * lg.edge_count


def test_line_graph_of_odd_unicyclic():
    # 7 edges -> 7 vertices; cone over P4 with one-edge pendants on the two
    # degree-2 cone vertices
    u2, (a, b) = odd_unicyclic(2)
    lg, edges = line_graph(u2)
    assert lg.n == 7
    # cone over P4 (degrees 2,2,3,3,4) with the two degree-2 vertices picking
    # up a pendant each
    assert sorted(lg.degrees()) == [1, 1, 3, 3, 3, 3, 4]


def test_odd_unicyclic():
    u1, ends = odd_unicyclic(1)
    assert u1.n == 5 and ends == (0, 3)
    assert sorted(u1.degrees()) == [1, 1, 2, 3, 3]
    u2, _ = odd_unicyclic(2)
    assert u2.n == 7 and u2.edge_count == 7
    for m in (1, 2, 3, 4):
        g, (p, q) = odd_unicyclic(m)
        assert g.edge_count == 2 * m + 3
        assert g.degrees()[p] == g.degrees()[q] == 1
    with pytest.raises(ValueError):
        odd_unicyclic(0)


def test_cone_p4_with_pendant():
    g0, probe, tail = cone_p4_with_pendant(0)
    assert g0.n == 5 and probe == 1 and tail == 4
    g3 = cone_p4_with_pendant(3)
    assert g3.graph.n == 8 and g3.tail == 7
    for m in range(6):
        g = cone_p4_with_pendant(m).graph
        assert g.degrees()[0] == 4


def test_graph_validation():
    with pytest.raises(ValueError):
        make_graph(3, [(0, 1), (1, 0)])  # duplicate after canonicalization
    with pytest.raises(ValueError):
        make_graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        make_graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        make_graph(2, [(0, 1, float("inf"))])


def test_loops_on_diagonal_and_degree():
    g = make_graph(3, [(0, 1), (1, 2)], loops=[(1, 2.5)])
    a = g.adjacency()
    assert a[1, 1] == 2.5
    assert g.degrees()[1] == 2 + 2.5
    assert not g.is_unweighted


def test_json_round_trip():
    g = make_graph(4, [(0, 1), (1, 2, 2.5), (0, 3)], loops=[(2, 1.5)])
    text = lio.graph_to_json(g)
    back = lio.graph_from_json(text)
    assert back == g
    assert lio.graph_to_json(back) == text  # canonical output is stable


def test_edgelist_round_trip():
    g = make_graph(4, [(0, 1), (1, 2, 2.5)], loops=[(3, 0.25)])
    text = lio.graph_to_edgelist(g)
    back = lio.graph_from_edgelist(text)
    assert back == g
    assert lio.graph_to_edgelist(back) == text
