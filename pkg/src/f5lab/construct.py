"""Generators for the named constructions: balanced 3-partite 3-graphs,
wheel blowups, uniform blowups, the Andrasfai-type circulant family, and the
seven-part F5-free witness whose shadow contains a K4.
"""

from __future__ import annotations

import math
from typing import Optional, Sequence

from .core import Graph, ThreeGraph
from .errors import BadPartition, OutOfRange


def balanced_turan(n: int) -> ThreeGraph:
    """Balanced complete 3-partite 3-graph on n vertices (contiguous parts)."""
    if n < 0:
        raise OutOfRange(f"n={n} < 0")
    sizes = [n // 3 + (1 if i < n % 3 else 0) for i in range(3)]
    parts = []
    start = 0
    for s in sizes:
        parts.append(range(start, start + s))
        start += s
    edges = [(a, b, c) for a in parts[0] for b in parts[1] for c in parts[2]]
    return ThreeGraph(n, edges)


def turan_parts(n: int) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """The vertex parts used by balanced_turan(n)."""
    sizes = [n // 3 + (1 if i < n % 3 else 0) for i in range(3)]
    out, start = [], 0
    for s in sizes:
        out.append(tuple(range(start, start + s)))
        start += s
    return tuple(out)


def wheel_blowup(x: int, ys: Sequence[int]) -> ThreeGraph:
    """Blowup of the 3-uniform 5-wheel: hub class of size x, cycle classes ys.

    Edges are all triples (hub vertex, class-i vertex, class-(i+1) vertex),
    indices modulo 5.  When every class is nonempty the minimum degree equals
    min{sum_i y_i*y_{i+1}} over hub vertices and min_i x*(y_{i-1}+y_{i+1})
    over cycle vertices.
    """
    if x < 0 or any(y < 0 for y in ys):
        raise OutOfRange("class sizes must be nonnegative")
    if len(ys) != 5:
        raise OutOfRange("exactly five cycle class sizes required")
    blocks = []
    start = x
    for y in ys:
        blocks.append(range(start, start + y))
        start += y
    hub = range(x)
    n = start
    edges = []
    for i in range(5):
        j = (i + 1) % 5
        for a in hub:
            for b in blocks[i]:
                for c in blocks[j]:
                    edges.append((a, b, c))
    return ThreeGraph(n, edges)


def wheel_delta_formula(x: int, ys: Sequence[int]) -> int:
    """Closed-form min degree of wheel_blowup(x, ys); valid when all classes
    are nonempty (with an empty class the formula may undershoot or overshoot
    because it still ranks the missing class's degree term)."""
    hub_term = sum(ys[i] * ys[(i + 1) % 5] for i in range(5))
    cyc_terms = [x * (ys[(i - 1) % 5] + ys[(i + 1) % 5]) for i in range(5)]
    return min([hub_term] + cyc_terms)


def uniform_blowup(h: ThreeGraph, m: int) -> ThreeGraph:
    """Replace each vertex with m clones; each edge becomes the complete
    3-partite pattern across its three clone blocks.  Scales min degree by
    m^2 and preserves cancellativity."""
    if m < 1:
        raise OutOfRange(f"blowup factor {m} < 1")
    edges = []
    for a, b, c in h.edges:
        for i in range(m):
            for j in range(m):
                for k in range(m):
                    edges.append((a * m + i, b * m + j, c * m + k))
    return ThreeGraph(h.n * m, edges)


def blowup_graph(g: Graph, m: int) -> Graph:
    """Graph blowup with the same vertex numbering as uniform_blowup."""
    if m < 1:
        raise OutOfRange(f"blowup factor {m} < 1")
    edges = []
    for a, b in g.edges:
        for i in range(m):
            for j in range(m):
                edges.append((a * m + i, b * m + j))
    return Graph(g.n * m, edges)


def wheel() -> ThreeGraph:
    """The 3-uniform 5-wheel itself: hub 0, cycle 1..5."""
    return wheel_blowup(1, [1, 1, 1, 1, 1])


def gamma_graph(d: int) -> Graph:
    """The d-regular circulant on 3d-1 vertices with offsets 1, 4, ...,
    3*ceil(d/2) - 2."""
    if d < 1:
        raise OutOfRange(f"d={d} < 1")
    m = 3 * d - 1
    offsets = [3 * j + 1 for j in range((d + 1) // 2)]
    edges = set()
    for i in range(m):
        for o in offsets:
            j = (i + o) % m
            edges.add((i, j) if i < j else (j, i))
    return Graph(m, edges)


def cycle_graph(m: int) -> Graph:
    if m < 3:
        raise OutOfRange(f"cycle length {m} < 3")
    return Graph(m, [(i, (i + 1) % m) for i in range(m)])


def complement_graph(g: Graph) -> Graph:
    edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)
             if not g.has_edge(u, v)]
    return Graph(g.n, edges)


# ---------------------------------------------------------------------------
# Seven-part witness: F5-free, shadow contains K4, min degree near n^2/12.

def default_witness_parts(n: int) -> tuple[int, int, int, int, int, int]:
    """Default rounding of the irrational optimum: |Y_i| = round((n-10)/sqrt 12)
    clipped into each third of the remaining n-10 vertices."""
    r = n - 10
    p_sizes = [r // 3 + (1 if i < r % 3 else 0) for i in range(3)]
    y_target = round(r / math.sqrt(12.0))
    ys = [min(y_target, p) for p in p_sizes]
    zs = [p - y for p, y in zip(p_sizes, ys)]
    return (*ys, *zs)


def tightness_witness(n: int, part_sizes: Optional[Sequence[int]] = None) -> ThreeGraph:
    """The seven-part construction X, Y1..Y3, Z1..Z3 with |X| = 10.

    X carries the K4 expansion {i, j, x_ij}; the complete 3-partite pair set
    over (Y1+Z1, Y2+Z2, Y3+Z3) splits into E1..E4 (E_k = pure Y-pairs missing
    coordinate k for k <= 3, E4 = the rest) and each vertex contributes the
    cone over its assigned class.
    """
    if n < 13:
        raise BadPartition(f"n={n} < 13 cannot host the 10-vertex core plus 3 parts")
    if part_sizes is None:
        part_sizes = default_witness_parts(n)
    sizes = tuple(int(s) for s in part_sizes)
    if len(sizes) != 6:
        raise BadPartition("need six sizes (y1, y2, y3, z1, z2, z3)")
    if any(s < 0 for s in sizes):
        raise BadPartition(f"negative part size in {sizes}")
    if sum(sizes) != n - 10:
        raise BadPartition(f"part sizes {sizes} sum to {sum(sizes)} != n-10 = {n - 10}")
    y_sizes, z_sizes = sizes[:3], sizes[3:]

    # X = {1,2,3,4} at indices 0..3, expansion vertices x_ij at 4..9
    corner = {1: 0, 2: 1, 3: 2, 4: 3}
    pair_vertex = {}
    nxt = 4
    for i in range(1, 5):
        for j in range(i + 1, 5):
            pair_vertex[i, j] = nxt
            nxt += 1
    edges = [tuple(sorted((corner[i], corner[j], pair_vertex[i, j])))
             for i in range(1, 5) for j in range(i + 1, 5)]

    ys, zs = [], []
    start = 10
    for k in range(3):
        ys.append(tuple(range(start, start + y_sizes[k])))
        start += y_sizes[k]
    for k in range(3):
        zs.append(tuple(range(start, start + z_sizes[k])))
        start += z_sizes[k]
    p_parts = [ys[k] + zs[k] for k in range(3)]

    e1 = [(a, b) for a in ys[1] for b in ys[2]]
    e2 = [(a, b) for a in ys[0] for b in ys[2]]
    e3 = [(a, b) for a in ys[0] for b in ys[1]]
    pure = set(e1) | set(e2) | set(e3)
    e4 = []
    for k in range(3):
        for kk in range(k + 1, 3):
            for a in p_parts[k]:
                for b in p_parts[kk]:
                    if (a, b) not in pure:
                        e4.append((a, b))

    assignments = [
        (list(ys[0]) + list(zs[0]) + [corner[1], pair_vertex[2, 3],
                                      pair_vertex[2, 4], pair_vertex[3, 4]], e1),
        (list(ys[1]) + list(zs[1]) + [corner[2], pair_vertex[1, 3],
                                      pair_vertex[1, 4]], e2),
        (list(ys[2]) + list(zs[2]) + [corner[3], pair_vertex[1, 2]], e3),
        ([corner[4]], e4),
    ]
    for vertices, pair_class in assignments:
        for v in vertices:
            for a, b in pair_class:
                edges.append(tuple(sorted((v, a, b))))
    return ThreeGraph(n, edges)
