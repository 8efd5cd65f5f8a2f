"""Immutable 3-graph and graph value types.

Vertices are dense integers 0..n-1.  A ThreeGraph keeps a triangular
pair-membership index so that N_H(uv) queries are O(1) bitmask lookups;
everything downstream (detectors, search, constructions) is built on that.
All types are immutable after construction and safe to share.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, NamedTuple, Optional, Sequence

from .errors import DegenerateEdge, OutOfRange, ParseError, SameVertex, SizeLimit

INDEPENDENCE_CAP = 40
PARTITION_CAP = 64


def bits(mask: int) -> Iterator[int]:
    """Iterate set-bit positions of a bitmask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """An undirected simple graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        norm = set()
        for e in edges:
            u, v = e
            if u == v:
                raise DegenerateEdge(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRange(f"edge {e!r} outside 0..{n - 1}")
            norm.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = tuple(sorted(norm))
        adj = [0] * n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.adj = tuple(adj)

    def __len__(self) -> int:
        return len(self.edges)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(a.bit_count() for a in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def is_regular(self) -> bool:
        degs = self.degrees()
        return len(set(degs)) <= 1

    def triangle(self) -> Optional[tuple[int, int, int]]:
        """First triangle in lexicographic vertex order, or None."""
        for u, v in self.edges:
            common = self.adj[u] & self.adj[v]
            if common:
                w = next(bits(common))
                return tuple(sorted((u, v, w)))
        return None


class ThreeGraph:
    """A 3-uniform hypergraph with a pair-indexed membership structure."""

    __slots__ = ("n", "edges", "pair_nbrs", "adj", "_degrees")

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        self.n = n
        self.edges = tuple(sorted({tuple(sorted(e)) for e in edges}))
        pair_nbrs: dict[tuple[int, int], int] = {}
        adj = [0] * n
        degs = [0] * n
        for a, b, c in self.edges:
            for u, v, w in ((a, b, c), (a, c, b), (b, c, a)):
                pair_nbrs[u, v] = pair_nbrs.get((u, v), 0) | (1 << w)
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            degs[a] += 1
            degs[b] += 1
            degs[c] += 1
        self.pair_nbrs = pair_nbrs
        self.adj = tuple(adj)
        self._degrees = tuple(degs)

    def __len__(self) -> int:
        return len(self.edges)

    def __eq__(self, other) -> bool:
        return isinstance(other, ThreeGraph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"ThreeGraph(n={self.n}, m={len(self.edges)})"

    def has_edge(self, a: int, b: int, c: int) -> bool:
        u, v, w = sorted((a, b, c))
        return bool(self.pair_nbrs.get((u, v), 0) >> w & 1)

    def pair_mask(self, u: int, v: int) -> int:
        """Bitmask of N_H(uv)."""
        if u > v:
            u, v = v, u
        return self.pair_nbrs.get((u, v), 0)

    def degree(self, v: int) -> int:
        return self._degrees[v]

    def degrees(self) -> tuple[int, ...]:
        return self._degrees


def build_three_graph(n: int, edges: Iterable[Sequence[int]]) -> ThreeGraph:
    """Validate, normalize (sort + dedupe) and index an edge list."""
    if n < 0:
        raise OutOfRange(f"vertex count {n} < 0")
    norm = []
    for e in edges:
        t = tuple(sorted(e))
        if len(t) != 3 or len(set(t)) != 3:
            raise DegenerateEdge(f"triple {tuple(e)!r} does not have 3 distinct vertices")
        if t[0] < 0 or t[2] >= n:
            raise OutOfRange(f"edge {t!r} outside 0..{n - 1}")
        norm.append(t)
    return ThreeGraph(n, norm)


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate and normalize a 2-graph edge list."""
    if n < 0:
        raise OutOfRange(f"vertex count {n} < 0")
    norm = []
    for e in edges:
        t = tuple(e)
        if len(t) != 2:
            raise DegenerateEdge(f"pair {t!r} does not have 2 vertices")
        norm.append(t)
    return Graph(n, norm)


def shadow(h: ThreeGraph) -> Graph:
    """The graph of all pairs contained in some edge of h."""
    return Graph(h.n, h.pair_nbrs.keys())


def link(h: ThreeGraph, v: int, w_set: Optional[Iterable[int]] = None) -> Graph:
    """Link of v in h: pairs e with e + {v} an edge, restricted to w_set if given."""
    if not (0 <= v < h.n):
        raise OutOfRange(f"vertex {v} outside 0..{h.n - 1}")
    if w_set is None:
        wmask = (1 << h.n) - 1
    else:
        wmask = 0
        for u in w_set:
            if not (0 <= u < h.n):
                raise OutOfRange(f"restriction vertex {u} outside 0..{h.n - 1}")
            wmask |= 1 << u
    pairs = []
    for (a, b), m in h.pair_nbrs.items():
        if m >> v & 1 and wmask >> a & 1 and wmask >> b & 1:
            pairs.append((a, b))
    return Graph(h.n, pairs)


def pair_neighborhood(h: ThreeGraph, u: int, v: int) -> frozenset[int]:
    """N_H(uv) as a vertex set."""
    if u == v:
        raise SameVertex(f"pair ({u},{v}) is degenerate")
    if not (0 <= u < h.n and 0 <= v < h.n):
        raise OutOfRange(f"pair ({u},{v}) outside 0..{h.n - 1}")
    return frozenset(bits(h.pair_mask(u, v)))


class DegreeProfile(NamedTuple):
    delta: int
    Delta: int
    degrees: tuple[int, ...]


def degree_profile(h: ThreeGraph) -> DegreeProfile:
    degs = h.degrees()
    if not degs:
        return DegreeProfile(0, 0, ())
    return DegreeProfile(min(degs), max(degs), degs)


# ---------------------------------------------------------------------------
# Witnesses

@dataclass(frozen=True)
class Witness:
    """A re-checkable certificate for a detected pattern.

    kind is one of F5 | K4minus | K4shadow | clique | triangle | partition |
    homomorphism.  For partition witnesses the three parts live in `parts`.
    """

    kind: str
    vertices: tuple[int, ...] = ()
    edges: tuple[tuple[int, ...], ...] = ()
    parts: Optional[tuple[tuple[int, ...], ...]] = None

    def to_obj(self) -> dict:
        obj = {"kind": self.kind, "vertices": list(self.vertices),
               "edges": [list(e) for e in self.edges]}
        if self.parts is not None:
            obj["parts"] = [list(p) for p in self.parts]
        return obj


def validate_witness(w: Witness, host) -> bool:
    """Check that the witness pattern is realized inside the host (hyper)graph."""
    vs = w.vertices
    if w.kind == "F5":
        if len(vs) != 5 or len(set(vs)) != 5:
            return False
        a, b, c, d, e = vs
        return (host.has_edge(a, b, c) and host.has_edge(a, b, d)
                and host.has_edge(c, d, e))
    if w.kind == "K4minus":
        if len(vs) != 4 or len(set(vs)) != 4:
            return False
        a, b, c, d = vs
        return (host.has_edge(a, b, c) and host.has_edge(a, b, d)
                and host.has_edge(a, c, d))
    if w.kind in ("clique", "K4shadow", "triangle"):
        g = shadow(host) if isinstance(host, ThreeGraph) else host
        if len(set(vs)) != len(vs):
            return False
        if w.kind == "K4shadow" and len(vs) != 4:
            return False
        if w.kind == "triangle" and len(vs) != 3:
            return False
        return all(g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])
    if w.kind == "partition":
        if w.parts is None or len(w.parts) != 3:
            return False
        seen: set[int] = set()
        for p in w.parts:
            for v in p:
                if v in seen or not (0 <= v < host.n):
                    return False
                seen.add(v)
        if len(seen) != host.n:
            return False
        color = {}
        for i, p in enumerate(w.parts):
            for v in p:
                color[v] = i
        return all(len({color[a], color[b], color[c]}) == 3 for a, b, c in host.edges)
    return False


# ---------------------------------------------------------------------------
# Independence number (exact, exponential-time; desk scale only)

def _max_independent_set_size(adj: Sequence[int], n: int) -> int:
    """Branch-and-bound maximum independent set on bitmask adjacency."""
    best = 0

    def grow(cand: int, size: int) -> None:
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if cand == 0:
            if size > best:
                best = size
            return
        # branch on the candidate vertex of max degree inside cand
        v, vdeg = -1, -1
        for u in bits(cand):
            d = (adj[u] & cand).bit_count()
            if d > vdeg:
                v, vdeg = u, d
        grow(cand & ~(adj[v] | (1 << v)), size + 1)
        grow(cand & ~(1 << v), size)

    grow((1 << n) - 1, 0)
    return best


def graph_independence_number(g: Graph, cap: int = INDEPENDENCE_CAP) -> int:
    if g.n > cap:
        raise SizeLimit(f"n={g.n} exceeds exact independence cap {cap}")
    return _max_independent_set_size(g.adj, g.n)


def independence_number(h: ThreeGraph, cap: int = INDEPENDENCE_CAP) -> int:
    """Max size of a set meeting every edge in <= 1 vertex.

    Computed on the pair-membership index directly; coincides with the
    independence number of shadow(h).
    """
    if h.n > cap:
        raise SizeLimit(f"n={h.n} exceeds exact independence cap {cap}")
    adj = [0] * h.n
    for (u, v), m in h.pair_nbrs.items():
        if m:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return _max_independent_set_size(adj, h.n)


# ---------------------------------------------------------------------------
# 3-partiteness (proper 3-coloring of the shadow)

def three_partition(h: ThreeGraph, cap: int = PARTITION_CAP) -> Optional[Witness]:
    """A partition V = V1 + V2 + V3 with every edge rainbow, or None.

    Equivalent to a proper 3-coloring of shadow(h): the three pairs of every
    edge lie in the shadow, so a proper shadow coloring rainbow-colors edges.
    """
    if h.n > cap:
        raise SizeLimit(f"n={h.n} exceeds 3-partition cap {cap}")
    g = shadow(h)
    colors = _proper_coloring(g, 3)
    if colors is None:
        return None
    parts = tuple(tuple(v for v in range(h.n) if colors[v] == i) for i in range(3))
    return Witness(kind="partition", parts=parts)


def _proper_coloring(g: Graph, k: int) -> Optional[list[int]]:
    """Backtracking proper k-coloring, saturation-ordered, with symmetry break
    (a new color class may only be opened by the lowest-index uncolored call)."""
    n = g.n
    colors = [-1] * n
    adj = g.adj

    def pick() -> int:
        best_v, best_key = -1, (-1, -1, 1)
        for v in range(n):
            if colors[v] != -1:
                continue
            sat = len({colors[u] for u in bits(adj[v]) if colors[u] != -1})
            key = (sat, adj[v].bit_count(), -v)
            if key > best_key:
                best_v, best_key = v, key
        return best_v

    def solve(done: int, used: int) -> bool:
        if done == n:
            return True
        v = pick()
        forbidden = {colors[u] for u in bits(adj[v]) if colors[u] != -1}
        limit = min(k, used + 1)
        for c in range(limit):
            if c in forbidden:
                continue
            colors[v] = c
            if solve(done + 1, max(used, c + 1)):
                return True
            colors[v] = -1
        return False

    if n == 0:
        return []
    return colors if solve(0, 0) else None


def brute_force_coloring(g: Graph, k: int) -> Optional[list[int]]:
    """Exhaustive k^n coloring search; independent oracle for small n."""
    n = g.n
    if n == 0:
        return []
    if n > 12:
        raise SizeLimit("brute-force coloring is capped at n=12")
    for code in range(k ** n):
        c, x = [], code
        for _ in range(n):
            c.append(x % k)
            x //= k
        if all(c[u] != c[v] for u, v in g.edges):
            return c
    return None


# ---------------------------------------------------------------------------
# Text / JSON interchange

def write_3g(h: ThreeGraph) -> str:
    lines = [f"{h.n} {len(h.edges)}"]
    lines.extend(f"{a} {b} {c}" for a, b, c in h.edges)
    return "\n".join(lines) + "\n"


def read_3g(text: str) -> ThreeGraph:
    return _read_uniform(text, 3)


def write_g(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{a} {b}" for a, b in g.edges)
    return "\n".join(lines) + "\n"


def read_g(text: str) -> Graph:
    return _read_uniform(text, 2)


def _read_uniform(text: str, r: int):
    rows = [ln for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise ParseError("empty input")
    head = rows[0].split()
    if len(head) != 2:
        raise ParseError(f"bad header {rows[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise ParseError(f"bad header {rows[0]!r}") from exc
    if len(rows) - 1 != m:
        raise ParseError(f"header promises {m} edges, found {len(rows) - 1}")
    seen = set()
    edges = []
    for ln in rows[1:]:
        parts = ln.split()
        if len(parts) != r:
            raise ParseError(f"bad edge line {ln!r}")
        try:
            e = tuple(int(p) for p in parts)
        except ValueError as exc:
            raise ParseError(f"bad edge line {ln!r}") from exc
        if list(e) != sorted(set(e)):
            raise ParseError(f"edge {ln!r} not strictly increasing")
        if e in seen:
            raise ParseError(f"duplicate edge {ln!r}")
        seen.add(e)
        if e[0] < 0 or e[-1] >= n:
            raise ParseError(f"edge {ln!r} outside 0..{n - 1}")
        edges.append(e)
    if r == 3:
        return ThreeGraph(n, edges)
    return Graph(n, edges)


def to_json_obj(h) -> dict:
    return {"n": h.n, "edges": [list(e) for e in h.edges]}


def from_json_obj(obj: dict) -> ThreeGraph:
    try:
        n = int(obj["n"])
        edges = [tuple(int(v) for v in e) for e in obj["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad JSON 3-graph object: {exc}") from exc
    if any(len(e) != 3 for e in edges):
        raise ParseError("JSON edges must be triples")
    if len(set(edges)) != len(edges):
        raise ParseError("duplicate edge in JSON input")
    return build_three_graph(n, edges)


def graph_from_json_obj(obj: dict) -> Graph:
    try:
        n = int(obj["n"])
        edges = [tuple(int(v) for v in e) for e in obj["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad JSON graph object: {exc}") from exc
    if any(len(e) != 2 for e in edges):
        raise ParseError("JSON edges must be pairs")
    if len({tuple(sorted(e)) for e in edges}) != len(edges):
        raise ParseError("duplicate edge in JSON input")
    return build_graph(n, edges)
