import pytest

from antimagic import (
    Regime,
    build_graph,
    classify_regime,
    decompose,
    gen_instance,
)
from antimagic.errors import (
    DuplicateEdge,
    SelfLoop,
    TooSmall,
    VertexOutOfRange,
    WrongMaxDegree,
)
from antimagic.graph import has_isolated_edge, isolated_vertices


def test_build_triangle():
    g = build_graph(3, [(1, 2), (2, 3), (1, 3)])
    assert g.m == 3
    assert g.degree(1) == g.degree(2) == g.degree(3) == 2


def test_build_rejects_self_loop():
    with pytest.raises(SelfLoop):
        build_graph(2, [(1, 1)])


def test_build_rejects_duplicate_edge():
    with pytest.raises(DuplicateEdge):
        build_graph(4, [(1, 2), (1, 2)])
    with pytest.raises(DuplicateEdge):
        build_graph(4, [(1, 2), (2, 1)])


def test_build_rejects_out_of_range():
    with pytest.raises(VertexOutOfRange):
        build_graph(3, [(1, 4)])


def test_edge_ids_follow_input_order():
    g = build_graph(4, [(3, 4), (1, 2)])
    assert g.edges[0] == (3, 4)
    assert g.edges[1] == (1, 2)


def test_decompose_orders_u_triple_by_degree():
    g = gen_instance(21, "main", seed=1)
    d = decompose(g)
    degs = [g.degree(u) for u in d.u]
    assert degs[0] >= degs[1] >= degs[2]
    # Recompute d' from adjacency and confirm the claimed ordering.
    for u, dp in zip(d.u, d.d_prime):
        assert sum(1 for w in g.adjacency[u] if w in d.h_set) == dp
    assert d.d_prime[0] >= d.d_prime[1] >= d.d_prime[2]


def test_decompose_partitions_vertices():
    g = gen_instance(20, "degen_i3", seed=3)
    d = decompose(g)
    everything = {d.r, *d.u, *d.h_vertices}
    assert everything == set(range(1, g.n + 1))
    assert len(d.e1) == g.n - 4
    assert set(d.e1) | set(d.e2) == set(range(g.m))
    assert not set(d.e1) & set(d.e2)


def test_decompose_root_tie_break_smallest_id():
    # Vertices 2 and 5 both reach the maximum degree 4 = n - 4.
    g = build_graph(8, [(2, 5), (2, 6), (2, 7), (2, 8),
                        (5, 6), (5, 7), (5, 8), (1, 6)])
    assert g.degree(2) == g.degree(5) == 4 == g.n - 4
    assert decompose(g).r == 2


def test_decompose_rejects_wrong_max_degree():
    star = build_graph(6, [(1, v) for v in range(2, 7)])  # Delta = n - 1
    with pytest.raises(WrongMaxDegree):
        decompose(star)


def test_decompose_rejects_tiny():
    g = build_graph(7, [(1, v) for v in range(2, 5)])
    with pytest.raises(TooSmall):
        decompose(g)


def test_decompose_deterministic():
    g = gen_instance(22, "main", seed=9)
    assert decompose(g) == decompose(g)


def test_classify_main():
    g = gen_instance(22, "main", seed=4, d_prime=(9, 7, 5))
    d = decompose(g)
    assert d.d_prime == (9, 7, 5)
    assert classify_regime(g, d) == Regime.MAIN
    assert g.n >= 16


def test_classify_degen_i3_from_dprime():
    g = gen_instance(21, "degen_i3", seed=5, d_prime=(6, 5, 2), triple=())
    d = decompose(g)
    assert d.d_prime == (6, 5, 2)
    assert classify_regime(g, d) == Regime.DEGEN_I3


def test_classify_disc_triple_p3():
    g = gen_instance(22, "disc_triple", seed=6, triple=((2, 3), (3, 4)))
    d = decompose(g)
    assert d.d_prime == (0, 0, 0)
    assert len(d.triple_edges) == 2
    assert classify_regime(g, d) == Regime.DISC_TRIPLE_COMPONENT


def test_classify_yilma_on_common_neighbour():
    g = gen_instance(20, "yilma", seed=2)
    d = decompose(g)
    u1, u2, u3 = d.u
    common = g.adjacency[u1] & g.adjacency[u2] & g.adjacency[u3] & d.h_set
    assert common
    assert classify_regime(g, d) == Regime.YILMA_FALLBACK


def test_classify_unsupported_below_7n():
    g = build_graph(8, [(1, 5), (1, 6), (1, 7), (1, 8),
                        (5, 6), (5, 7), (5, 8)])
    d = decompose(g)
    assert g.m < 7 * g.n
    assert classify_regime(g, d) == Regime.UNSUPPORTED


def test_no_common_neighbour_outside_yilma():
    for target in ("main", "main_triple", "degen_i2", "disc_u3_isolated"):
        g = gen_instance(22, target, seed=11)
        d = decompose(g)
        u1, u2, u3 = d.u
        assert not (g.adjacency[u1] & g.adjacency[u2]
                    & g.adjacency[u3] & d.h_set)


def test_shape_helpers():
    g = build_graph(5, [(1, 2), (3, 4)])
    assert has_isolated_edge(g)
    assert isolated_vertices(g) == [5]
