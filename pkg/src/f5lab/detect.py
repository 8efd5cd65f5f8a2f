"""Forbidden-configuration detectors and structural-fact audits.

The detectors return the first witness under a fixed deterministic iteration
order (lexicographic pairs, lowest completing vertex), so outputs are stable
across runs and usable in golden tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .core import (
    Graph,
    ThreeGraph,
    Witness,
    bits,
    graph_independence_number,
    independence_number,
    link,
    shadow,
)
from .errors import OutOfRange, SizeLimit

CLIQUE_CAP = 256
HOM_CAP = 128


def find_F5(h: ThreeGraph) -> Optional[Witness]:
    """First copy of {abc, abd, cde}, scanning pairs uv with |N(uv)| >= 2.

    For each c < d in N(uv) the third edge is any e in N(cd) avoiding
    {u, v, c, d}; this is O(sum |N(uv)|^2) rather than O(n^5).
    """
    for (u, v), m in sorted(h.pair_nbrs.items()):
        if m.bit_count() < 2:
            continue
        nbrs = list(bits(m))
        excl = (1 << u) | (1 << v)
        for i, c in enumerate(nbrs):
            for d in nbrs[i + 1:]:
                rest = h.pair_mask(c, d) & ~(excl | (1 << c) | (1 << d))
                if rest:
                    e = next(bits(rest))
                    return Witness(
                        kind="F5",
                        vertices=(u, v, c, d, e),
                        edges=(tuple(sorted((u, v, c))), tuple(sorted((u, v, d))),
                               tuple(sorted((c, d, e)))),
                    )
    return None


def find_K4_3minus(h: ThreeGraph) -> Optional[Witness]:
    """First copy of {abc, abd, acd}: an apex a whose link contains a triangle."""
    for a in range(h.n):
        tri = link(h, a).triangle()
        if tri is not None:
            b, c, d = tri
            return Witness(
                kind="K4minus",
                vertices=(a, b, c, d),
                edges=(tuple(sorted((a, b, c))), tuple(sorted((a, b, d))),
                       tuple(sorted((a, c, d)))),
            )
    return None


def is_cancellative(h: ThreeGraph) -> bool:
    """No edges A != B, C with the symmetric difference of A and B inside C.

    Checked directly from the definition: only |A ∩ B| = 2 is possible, so it
    suffices that N_H(A △ B) is empty for every such pair of edges.  This is
    deliberately independent of find_F5 / find_K4_3minus.
    """
    for (u, v), m in h.pair_nbrs.items():
        if m.bit_count() < 2:
            continue
        nbrs = list(bits(m))
        for i, c in enumerate(nbrs):
            for d in nbrs[i + 1:]:
                if h.pair_mask(c, d):
                    return False
    return True


def find_clique(g: Graph, k: int, cap: int = CLIQUE_CAP) -> Optional[Witness]:
    """A k-clique in g, or None; exact branch-and-bound on bitmask adjacency."""
    if k < 1:
        raise OutOfRange(f"clique size {k} < 1")
    if g.n > cap:
        raise SizeLimit(f"n={g.n} exceeds clique search cap {cap}")
    if k == 1:
        return Witness(kind="clique", vertices=(0,)) if g.n >= 1 else None
    adj = g.adj
    found: list[int] = []

    # candidates stay above the last chosen vertex: lexicographic-first clique
    def extend(chosen: list[int], cand: int) -> bool:
        if len(chosen) == k:
            found.extend(chosen)
            return True
        if len(chosen) + cand.bit_count() < k:
            return False
        for v in bits(cand):
            if extend(chosen + [v], cand & adj[v] & ~((1 << (v + 1)) - 1)):
                return True
        return False

    if extend([], (1 << g.n) - 1):
        verts = tuple(found)
        return Witness(kind="clique", vertices=verts,
                       edges=tuple((u, v) for i, u in enumerate(verts) for v in verts[i + 1:]))
    return None


def find_k4_in_shadow(h: ThreeGraph) -> Optional[Witness]:
    w = find_clique(shadow(h), 4)
    if w is None:
        return None
    return Witness(kind="K4shadow", vertices=w.vertices, edges=w.edges)


def find_homomorphism(g: Graph, p: Graph) -> Optional[tuple[int, ...]]:
    """A map V(g) -> V(p) sending edges to edges, or None.

    Backtracking with forward checking: candidate masks are intersected with
    the pattern neighborhoods of already-assigned neighbors.  Vertices of g
    are processed in a connected, degree-descending order.
    """
    if g.n > HOM_CAP or p.n > HOM_CAP:
        raise SizeLimit(f"homomorphism search capped at {HOM_CAP} vertices")
    if g.n == 0:
        return ()
    if len(g.edges) > 0 and len(p.edges) == 0:
        return None

    order: list[int] = []
    placed = [False] * g.n
    for _ in range(g.n):
        best, best_key = -1, (-1, -1, 0)
        for v in range(g.n):
            if placed[v]:
                continue
            attached = sum(1 for u in bits(g.adj[v]) if placed[u])
            key = (attached, g.degree(v), -v)
            if key > best_key:
                best, best_key = v, key
        order.append(best)
        placed[best] = True
    pos = {v: i for i, v in enumerate(order)}

    full = (1 << p.n) - 1
    image = [-1] * g.n

    def assign(idx: int, cand_masks: list[int]) -> bool:
        if idx == g.n:
            return True
        v = order[idx]
        for t in bits(cand_masks[v]):
            image[v] = t
            ok = True
            updated = cand_masks[:]
            for u in bits(g.adj[v]):
                if pos[u] > idx:
                    updated[u] &= p.adj[t]
                    if updated[u] == 0:
                        ok = False
                        break
            if ok and assign(idx + 1, updated):
                return True
            image[v] = -1
        return False

    if assign(0, [full] * g.n):
        return tuple(image)
    return None


# ---------------------------------------------------------------------------
# Structural-fact audit

@dataclass(frozen=True)
class Violation:
    clause: str
    witness: Witness

    def to_obj(self) -> dict:
        obj = {"clause": self.clause}
        obj.update(self.witness.to_obj())
        return obj


@dataclass(frozen=True)
class FactReport:
    fact: str
    holds: bool
    violations: tuple[Violation, ...]

    def to_obj(self) -> dict:
        return {"fact": self.fact, "holds": self.holds,
                "violations": [v.to_obj() for v in self.violations]}


def audit_link_facts(h: ThreeGraph) -> FactReport:
    """Audit the link/neighborhood conditions expected of cancellative
    (clauses 1-3) and F5-free (clauses 4-5) 3-graphs; callable on any input.

    Clauses: (1) every link is triangle-free; (2) N_H(uv) is independent for
    every shadow pair; (3) links of adjacent vertices are edge-disjoint;
    (4) for every edge E and W = V - E the three restricted links are pairwise
    edge-disjoint; (5) every triangle inside their union lies in one link or
    meets all three exactly once.
    """
    violations: list[Violation] = []

    # clause 1: triangle-free links (violation is a K4minus with that apex)
    for v in range(h.n):
        tri = link(h, v).triangle()
        if tri is not None:
            b, c, d = tri
            violations.append(Violation(
                "triangle-free-link",
                Witness(kind="K4minus", vertices=(v, b, c, d),
                        edges=(tuple(sorted((v, b, c))), tuple(sorted((v, b, d))),
                               tuple(sorted((v, c, d))))),
            ))

    # clause 2: N_H(uv) independent in h
    for (u, v), m in sorted(h.pair_nbrs.items()):
        nbrs = list(bits(m))
        hit = None
        for i, c in enumerate(nbrs):
            for d in nbrs[i + 1:]:
                rest = h.pair_mask(c, d)
                if rest:
                    hit = (c, d, next(bits(rest)))
                    break
            if hit:
                break
        if hit:
            c, d, e = hit
            kind = "K4minus" if e in (u, v) else "F5"
            if kind == "F5":
                w = Witness(kind="F5", vertices=(u, v, c, d, e),
                            edges=(tuple(sorted((u, v, c))), tuple(sorted((u, v, d))),
                                   tuple(sorted((c, d, e)))))
            else:
                apex = e  # e is u or v; edges uvc, uvd, ecd share apex e
                other = v if e == u else u
                w = Witness(kind="K4minus", vertices=(apex, other, c, d),
                            edges=(tuple(sorted((u, v, c))), tuple(sorted((u, v, d))),
                                   tuple(sorted((e, c, d)))))
            violations.append(Violation("pair-neighborhood-independent", w))

    # clause 3: disjoint links across shadow pairs
    for (u, v), m in sorted(h.pair_nbrs.items()):
        if not m:
            continue
        lu = {e for e in h.pair_nbrs if h.pair_mask(*e) >> u & 1}
        lv = {e for e in h.pair_nbrs if h.pair_mask(*e) >> v & 1}
        common = sorted(lu & lv)
        if common:
            a, b = common[0]
            w_e = next(bits(m))
            if w_e in (a, b):
                apex = w_e
                other = b if w_e == a else a
                wit = Witness(kind="K4minus", vertices=(apex, other, u, v),
                              edges=(tuple(sorted((u, a, b))), tuple(sorted((v, a, b))),
                                     tuple(sorted((u, v, w_e)))))
            else:
                wit = Witness(kind="F5", vertices=(a, b, u, v, w_e),
                              edges=(tuple(sorted((u, a, b))), tuple(sorted((v, a, b))),
                                     tuple(sorted((u, v, w_e)))))
            violations.append(Violation("disjoint-links", wit))

    # clauses 4-5: per edge, restricted links on W = V - E
    fullmask = (1 << h.n) - 1
    for E in h.edges:
        emask = (1 << E[0]) | (1 << E[1]) | (1 << E[2])
        wmask = fullmask & ~emask
        w_verts = list(bits(wmask))
        links = [link(h, v, w_verts) for v in E]
        for i in range(3):
            for j in range(i + 1, 3):
                common = sorted(set(links[i].edges) & set(links[j].edges))
                if common:
                    a, b = common[0]
                    third = [x for x in E if x not in (E[i], E[j])][0]
                    violations.append(Violation(
                        "restricted-links-edge-disjoint",
                        Witness(kind="F5", vertices=(a, b, E[i], E[j], third),
                                edges=(tuple(sorted((E[i], a, b))), tuple(sorted((E[j], a, b))),
                                       E)),
                    ))
        union = Graph(h.n, [e for lg in links for e in lg.edges])
        memb = [set(lg.edges) for lg in links]
        for a, b in union.edges:
            common = union.adj[a] & union.adj[b]
            for c in bits(common):
                if c <= b:
                    continue
                tri_edges = [(a, b), tuple(sorted((a, c))), tuple(sorted((b, c)))]
                counts = [sum(1 for te in tri_edges if te in memb[i]) for i in range(3)]
                if max(counts) == 3 or counts == [1, 1, 1]:
                    continue
                violations.append(Violation(
                    "restricted-links-triangle-pattern",
                    Witness(kind="triangle", vertices=(a, b, c), edges=tuple(tri_edges)),
                ))

    return FactReport(fact="link-facts", holds=not violations,
                      violations=tuple(violations))


def link_restriction_bound(h: ThreeGraph, v: int, s_set: Iterable[int]) -> tuple[int, int]:
    """(|L_H(v, S)|, |L_H(v)| - alpha(H) * |V - S|).

    For cancellative h the first component dominates the second (the caller
    is responsible for the cancellativity precondition).
    """
    if not (0 <= v < h.n):
        raise OutOfRange(f"vertex {v} outside 0..{h.n - 1}")
    s = set(s_set)
    for u in s:
        if not (0 <= u < h.n):
            raise OutOfRange(f"restriction vertex {u} outside 0..{h.n - 1}")
    lhs = len(link(h, v, s).edges)
    alpha = independence_number(h)
    rhs = len(link(h, v).edges) - alpha * (h.n - len(s))
    return lhs, rhs


# ---------------------------------------------------------------------------
# Naive oracles (used by the test suite as independent references)

def naive_find_f5(h: ThreeGraph) -> bool:
    """All-subsets F5 search: any 3 edges realizing {abc, abd, cde}."""
    from itertools import combinations

    for A, B in combinations(h.edges, 2):
        sa, sb = set(A), set(B)
        if len(sa & sb) != 2:
            continue
        c, d = sorted(sa ^ sb)
        rest = h.pair_mask(c, d) & ~(1 << A[0]) & ~(1 << A[1]) & ~(1 << A[2]) \
            & ~(1 << B[0]) & ~(1 << B[1]) & ~(1 << B[2])
        if rest:
            return True
    return False


def naive_find_k4_3minus(h: ThreeGraph) -> bool:
    from itertools import combinations

    for A, B in combinations(h.edges, 2):
        sa, sb = set(A), set(B)
        if len(sa & sb) != 2:
            continue
        diff = sa ^ sb
        for w in sa & sb:
            if h.has_edge(*sorted(diff | {w})):
                return True
    return False


def alpha_cross_check(h: ThreeGraph) -> tuple[int, int]:
    """(alpha via the 3-graph route, alpha via the shadow graph route)."""
    return independence_number(h), graph_independence_number(shadow(h))
