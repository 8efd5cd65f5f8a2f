"""Value types: builders, shadow/link/degree machinery, independence,
3-partiteness, and the text/JSON interchange."""

import random

import pytest

from f5lab.core import (Graph, ThreeGraph, brute_force_coloring, build_graph,
                        build_three_graph, degree_profile, from_json_obj,
                        graph_independence_number, independence_number, link,
                        pair_neighborhood, read_3g, read_g, shadow,
                        three_partition, to_json_obj, validate_witness,
                        write_3g, write_g)
from f5lab.construct import balanced_turan, blowup_graph, uniform_blowup, wheel, wheel_blowup
from f5lab.errors import DegenerateEdge, OutOfRange, ParseError, SameVertex, SizeLimit

from conftest import random_three_graph

F5_EDGES = [(0, 1, 2), (0, 1, 3), (2, 3, 4)]


def f5_graph():
    return build_three_graph(5, F5_EDGES)


def test_build_normalizes_and_validates():
    h = build_three_graph(5, [(2, 1, 0), (0, 1, 2), (0, 1, 3), (2, 3, 4)])
    assert h.edges == ((0, 1, 2), (0, 1, 3), (2, 3, 4))
    assert len(h) == 3
    with pytest.raises(DegenerateEdge):
        build_three_graph(3, [(0, 1, 1)])
    with pytest.raises(OutOfRange):
        build_three_graph(3, [(0, 1, 3)])
    assert len(build_three_graph(4, [])) == 0


def test_degree_sum_is_three_m():
    rng = random.Random(1)
    for _ in range(50):
        h = random_three_graph(rng, rng.randint(0, 8))
        assert sum(h.degrees()) == 3 * len(h.edges)


def test_shadow_examples():
    single = build_three_graph(3, [(0, 1, 2)])
    assert shadow(single).edges == ((0, 1), (0, 2), (1, 2))
    w = wheel()  # hub 0, cycle 1..5
    sh = shadow(w)
    assert len(sh.edges) == 10
    spokes = {(0, i) for i in range(1, 6)}
    rim = {tuple(sorted((1 + i, 1 + (i + 1) % 5))) for i in range(5)}
    assert set(sh.edges) == spokes | rim
    assert len(shadow(build_three_graph(4, []))) == 0


def test_link_examples():
    h = f5_graph()
    assert link(h, 4).edges == ((2, 3),)
    t9 = balanced_turan(9)
    for v in range(9):
        lg = link(t9, v)
        assert len(lg.edges) == 9 == t9.degree(v)
        degs = [d for d in lg.degrees() if d]
        assert sorted(degs) == [3] * 6  # complete bipartite 3x3
    assert len(link(h, 0, [])) == 0
    assert link(h, 0, [1, 2, 3]).edges == ((1, 2), (1, 3))
    with pytest.raises(OutOfRange):
        link(h, 9)


def test_pair_neighborhood_examples():
    h = f5_graph()
    assert pair_neighborhood(h, 0, 1) == {2, 3}
    assert pair_neighborhood(h, 0, 4) == frozenset()
    t6 = balanced_turan(6)  # parts {0,1},{2,3},{4,5}
    assert pair_neighborhood(t6, 0, 2) == {4, 5}
    with pytest.raises(SameVertex):
        pair_neighborhood(h, 2, 2)


def test_degree_profile_examples():
    prof = degree_profile(wheel())
    assert (prof.delta, prof.Delta) == (2, 5)
    big = wheel_blowup(5, [2, 2, 2, 2, 2])
    prof = degree_profile(big)
    assert big.n == 15 and prof.delta == 20 == 4 * 15 * 15 // 45
    assert degree_profile(build_three_graph(4, [])) == (0, 0, (0, 0, 0, 0))


def naive_alpha(h: ThreeGraph) -> int:
    """Subset-enumeration independence oracle for small n."""
    best = 0
    for mask in range(1 << h.n):
        verts = [v for v in range(h.n) if mask >> v & 1]
        if len(verts) <= best:
            continue
        vset = set(verts)
        if all(len(vset & set(e)) <= 1 for e in h.edges):
            best = len(verts)
    return best


def test_independence_examples():
    assert independence_number(f5_graph()) == 2
    assert independence_number(balanced_turan(9)) == 3
    assert independence_number(build_three_graph(7, [])) == 7
    with pytest.raises(SizeLimit):
        independence_number(build_three_graph(50, []))


def test_independence_matches_bruteforce_and_shadow():
    rng = random.Random(2)
    for _ in range(60):
        h = random_three_graph(rng, rng.randint(1, 7))
        a = independence_number(h)
        assert a == naive_alpha(h)
        assert a == graph_independence_number(shadow(h))


def test_three_partition_examples():
    w = three_partition(balanced_turan(7))
    assert w is not None and validate_witness(w, balanced_turan(7))
    assert sorted(len(p) for p in w.parts) == [2, 2, 3]
    assert three_partition(wheel()) is None
    empty = build_three_graph(4, [])
    w = three_partition(empty)
    assert w is not None and validate_witness(w, empty)


def test_three_partition_matches_bruteforce():
    rng = random.Random(3)
    for _ in range(80):
        h = random_three_graph(rng, rng.randint(1, 7))
        ours = three_partition(h)
        brute = brute_force_coloring(shadow(h), 3)
        assert (ours is not None) == (brute is not None)
        if ours is not None:
            assert validate_witness(ours, h)


def test_shadow_commutes_with_blowup():
    w = wheel()
    for m in (1, 2, 3):
        assert shadow(uniform_blowup(w, m)) == blowup_graph(shadow(w), m)


def test_graph_type_validation():
    with pytest.raises(DegenerateEdge):
        build_graph(3, [(1, 1)])
    with pytest.raises(OutOfRange):
        build_graph(2, [(0, 2)])
    g = build_graph(3, [(2, 0), (0, 1)])
    assert g.edges == ((0, 1), (0, 2))
    assert sum(g.degrees()) == 2 * len(g.edges)


def test_3g_roundtrip_and_rejections():
    h = wheel_blowup(2, [1, 1, 1, 1, 1])
    assert read_3g(write_3g(h)) == h
    g = shadow(h)
    assert read_g(write_g(g)) == g
    assert from_json_obj(to_json_obj(h)) == h
    with pytest.raises(ParseError):
        read_3g("2 1\n0 1\n")            # pair line in a 3g file
    with pytest.raises(ParseError):
        read_3g("4 2\n0 1 2\n0 1 2\n")   # duplicate
    with pytest.raises(ParseError):
        read_3g("4 2\n0 1 2\n")          # count mismatch
    with pytest.raises(ParseError):
        read_3g("4 1\n2 1 0\n")          # not strictly increasing
    with pytest.raises(ParseError):
        read_3g("4 1\n0 1 9\n")          # out of range
    with pytest.raises(ParseError):
        from_json_obj({"n": 4, "edges": [[0, 1, 2], [0, 1, 2]]})
