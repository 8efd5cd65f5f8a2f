"""Brute-force oracles at desk scale: exhaustive branch-and-bound over edge
variables with incremental forbidden-pattern tracking, isomorph-reduced
enumeration, and a single-instance checker for the min-degree theorems.

Only patterns touching a newly added edge are ever tested, which keeps n = 7
(35 edge variables) tractable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Optional

from .construct import balanced_turan
from .core import ThreeGraph, bits, three_partition
from .detect import find_F5, find_K4_3minus
from .errors import OutOfRange, SizeLimit

SEARCH_CAP = 7
ENUM_FULL_CAP = 6

FORBIDDEN_KINDS = ("F5", "K4minus", "K4shadow")


@dataclass(frozen=True)
class SearchSpec:
    n: int
    forbidden: frozenset[str] = frozenset({"F5", "K4minus"})
    mode: str = "max-edges"                 # or "max-min-degree"
    require_non_3partite: bool = False
    iso_reduction: bool = False
    budget: Optional[int] = None            # node limit; None = unlimited

    def __post_init__(self):
        bad = self.forbidden - set(FORBIDDEN_KINDS)
        if bad:
            raise OutOfRange(f"unknown forbidden kinds {sorted(bad)}")
        if self.mode not in ("max-edges", "max-min-degree"):
            raise OutOfRange(f"unknown mode {self.mode!r}")


@dataclass
class SearchResult:
    optimum: int
    witness: Optional[ThreeGraph]
    nodes: int
    exhaustive: bool

    def to_obj(self) -> dict:
        obj = {"optimum": self.optimum, "nodes": self.nodes,
               "exhaustive": self.exhaustive}
        if self.witness is not None:
            obj["witness"] = {"n": self.witness.n,
                              "edges": [list(e) for e in self.witness.edges]}
        return obj


class _EdgeUniverse:
    """Precomputed triple/pair index tables for a fixed n."""

    _cache: dict[int, "_EdgeUniverse"] = {}

    def __init__(self, n: int):
        self.n = n
        self.triples = list(itertools.combinations(range(n), 3))
        self.pairs = list(itertools.combinations(range(n), 2))
        self.pair_id = {}
        for idx, (u, v) in enumerate(self.pairs):
            self.pair_id[u, v] = idx
            self.pair_id[v, u] = idx
        self.edge_pairs = []        # edge idx -> (pair ids, third vertex per pair)
        for a, b, c in self.triples:
            self.edge_pairs.append((
                (self.pair_id[a, b], self.pair_id[a, c], self.pair_id[b, c]),
                (c, b, a)))

    @classmethod
    def get(cls, n: int) -> "_EdgeUniverse":
        if n not in cls._cache:
            cls._cache[n] = cls(n)
        return cls._cache[n]


class _Tracker:
    """Incremental forbidden-pattern state over a DFS-managed edge set.

    cover[p] is the bitmask of third vertices w with pair p + {w} present.
    diff[p] holds one shared-pair bitmask per unordered present edge pair
    (A, B) with |A & B| = 2 and A ^ B = p.  A candidate edge C containing p
    realizes K4minus against such a record when its third vertex lies in the
    shared mask, and F5 when it lies outside.  Removal follows strict LIFO
    (DFS discipline), so diff lists pop exactly what the matching add pushed.
    """

    def __init__(self, n: int, forbidden: frozenset[str]):
        self.uni = _EdgeUniverse.get(n)
        self.n = n
        self.want_f5 = "F5" in forbidden
        self.want_k4m = "K4minus" in forbidden
        self.want_k4s = "K4shadow" in forbidden
        npairs = len(self.uni.pairs)
        self.cover = [0] * npairs
        self.diff: list[list[int]] = [[] for _ in range(npairs)]
        self.degree = [0] * n
        self.edge_ids: list[int] = []

    def shadow_adj(self) -> list[int]:
        adj = [0] * self.n
        for (u, v), pid in self.uni.pair_id.items():
            if u < v and self.cover[pid]:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        return adj

    def _hit(self, shared_mask: int, third: int) -> bool:
        inside = bool(shared_mask >> third & 1)
        return self.want_k4m if inside else self.want_f5

    def can_add(self, eid: int) -> bool:
        pairs, thirds = self.uni.edge_pairs[eid]
        if self.want_f5 or self.want_k4m:
            for p, t in zip(pairs, thirds):
                for shared in self.diff[p]:       # candidate plays C
                    if self._hit(shared, t):
                        return False
            a, b, c = self.uni.triples[eid]
            emask = (1 << a) | (1 << b) | (1 << c)
            for p, t in zip(pairs, thirds):       # candidate plays A
                for w in bits(self.cover[p]):
                    covered = self.cover[self.uni.pair_id[t, w]]
                    if not covered:
                        continue
                    shared = emask & ~(1 << t)
                    for x in bits(covered):
                        if self._hit(shared, x):
                            return False
        if self.want_k4s:
            a, b, c = self.uni.triples[eid]
            adj = self.shadow_adj()
            for u, v in ((a, b), (a, c), (b, c)):
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            for u, v in ((a, b), (a, c), (b, c)):
                common = adj[u] & adj[v] & ~(1 << u) & ~(1 << v)
                for w in bits(common):
                    if common & adj[w] & ~((1 << (w + 1)) - 1):
                        return False
        return True

    def add(self, eid: int) -> None:
        pairs, thirds = self.uni.edge_pairs[eid]
        a, b, c = self.uni.triples[eid]
        emask = (1 << a) | (1 << b) | (1 << c)
        for p, t in zip(pairs, thirds):
            for w in bits(self.cover[p]):
                self.diff[self.uni.pair_id[t, w]].append(emask & ~(1 << t))
            self.cover[p] |= 1 << t
        self.degree[a] += 1
        self.degree[b] += 1
        self.degree[c] += 1
        self.edge_ids.append(eid)

    def remove_last(self) -> None:
        eid = self.edge_ids.pop()
        pairs, thirds = self.uni.edge_pairs[eid]
        a, b, c = self.uni.triples[eid]
        for p, t in zip(pairs, thirds):
            self.cover[p] &= ~(1 << t)
            for w in bits(self.cover[p]):
                self.diff[self.uni.pair_id[t, w]].pop()
        self.degree[a] -= 1
        self.degree[b] -= 1
        self.degree[c] -= 1

    def graph(self) -> ThreeGraph:
        return ThreeGraph(self.n, [self.uni.triples[e] for e in self.edge_ids])


def _mantel_cap(n: int) -> int:
    """Any 3-graph with all links triangle-free has at most n*floor((n-1)^2/4)/3
    edges; a sound edge-count cap for cancellative instances."""
    return (n * (((n - 1) ** 2) // 4)) // 3


def _seed_witness(spec: SearchSpec) -> Optional[ThreeGraph]:
    """A valid starting incumbent: the balanced 3-partite construction is free
    of all three forbidden patterns and 3-partite, so it seeds max-edges
    searches (but never non-3-partite ones)."""
    if spec.require_non_3partite:
        return None
    return balanced_turan(spec.n)


def run_search(spec: SearchSpec) -> SearchResult:
    """Exhaustive branch-and-bound over the edge lattice for a SearchSpec."""
    if spec.n > SEARCH_CAP:
        raise SizeLimit(f"n={spec.n} exceeds search cap {SEARCH_CAP}")
    uni = _EdgeUniverse.get(spec.n)
    tracker = _Tracker(spec.n, spec.forbidden)
    mantel = _mantel_cap(spec.n) if {"F5", "K4minus"} <= spec.forbidden else None

    best_val = -1
    best_witness: Optional[ThreeGraph] = None
    nodes = 0
    aborted = False

    seed = _seed_witness(spec)
    if seed is not None:
        best_val = len(seed.edges) if spec.mode == "max-edges" \
            else (min(seed.degrees()) if seed.n else 0)
        best_witness = seed

    def leaf_value() -> Optional[int]:
        if spec.require_non_3partite and three_partition(tracker.graph()) is not None:
            return None
        if spec.mode == "max-edges":
            return len(tracker.edge_ids)
        return min(tracker.degree)

    def upper_bound(rem: list[int]) -> int:
        if spec.mode == "max-edges":
            ub = len(tracker.edge_ids) + len(rem)
            if mantel is not None:
                ub = min(ub, mantel)
            return ub
        pot = list(tracker.degree)
        for eid in rem:
            a, b, c = uni.triples[eid]
            pot[a] += 1
            pot[b] += 1
            pot[c] += 1
        return min(pot) if pot else 0

    budget = spec.budget

    def dfs(rem: list[int]) -> None:
        nonlocal nodes, best_val, best_witness, aborted
        nodes += 1
        if budget is not None and nodes > budget:
            aborted = True
            return
        if upper_bound(rem) <= best_val:
            return
        if not rem:
            val = leaf_value()
            if val is not None and val > best_val:
                best_val = val
                best_witness = tracker.graph()
            return
        eid = rem[0]
        rest = rem[1:]
        if tracker.can_add(eid):
            tracker.add(eid)
            dfs([f for f in rest if tracker.can_add(f)])
            tracker.remove_last()
            if aborted:
                return
        dfs(rest)

    initial = [eid for eid in range(len(uni.triples)) if tracker.can_add(eid)]
    dfs(initial)
    # best_val = -1 means the traversal proved no instance meets the spec
    return SearchResult(optimum=best_val, witness=best_witness, nodes=nodes,
                        exhaustive=not aborted)


def extremal_number(n: int, family: frozenset[str] | set[str]) -> SearchResult:
    """Exact ex(n, family) with a witness, by exhaustive branch-and-bound."""
    return run_search(SearchSpec(n=n, forbidden=frozenset(family), mode="max-edges"))


def max_min_degree(spec: SearchSpec) -> SearchResult:
    if spec.mode != "max-min-degree":
        spec = SearchSpec(n=spec.n, forbidden=spec.forbidden, mode="max-min-degree",
                          require_non_3partite=spec.require_non_3partite,
                          iso_reduction=spec.iso_reduction, budget=spec.budget)
    return run_search(spec)


# ---------------------------------------------------------------------------
# Single-instance theorem checker

@dataclass(frozen=True)
class TheoremVerdict:
    verdict: str            # "vacuous" | "consistent" | "COUNTEREXAMPLE"
    reason: str
    delta: int
    threshold: str

    def to_obj(self) -> dict:
        return {"verdict": self.verdict, "reason": self.reason,
                "delta": self.delta, "threshold": self.threshold}


def check_main_theorem(h: ThreeGraph) -> TheoremVerdict:
    """Instance check of the min-degree 3-partiteness theorems.

    With delta(H) <= 4n^2/45 or an F5 present the hypotheses fail (vacuous).
    Above the threshold, a K4minus-free instance falls under the all-n
    cancellative statement: it must be 3-partite, else COUNTEREXAMPLE.  An
    instance that keeps a K4minus is outside the all-n statement, and the
    large-n hypothesis cannot hold at desk scale, so it is reported vacuous.
    """
    n = h.n
    degs = h.degrees()
    delta = min(degs) if degs else 0
    threshold = Fraction(4 * n * n, 45)
    thr_str = f"4*{n}^2/45 = {threshold}"
    if Fraction(delta) <= threshold:
        return TheoremVerdict("vacuous", "min degree not above threshold",
                              delta, thr_str)
    if find_F5(h) is not None:
        return TheoremVerdict("vacuous", "instance contains the forbidden 5-vertex pattern",
                              delta, thr_str)
    if find_K4_3minus(h) is not None:
        return TheoremVerdict("vacuous",
                              "F5-free but not cancellative; the all-n statement "
                              "does not apply and n is below the large-n range",
                              delta, thr_str)
    if three_partition(h) is not None:
        return TheoremVerdict("consistent", "hypotheses and conclusion hold",
                              delta, thr_str)
    return TheoremVerdict("COUNTEREXAMPLE",
                          "cancellative, min degree above threshold, not 3-partite",
                          delta, thr_str)


# ---------------------------------------------------------------------------
# Enumeration (optionally isomorph-reduced via min-lex canonical forms)

def _perm_edge_maps(n: int) -> list[list[int]]:
    uni = _EdgeUniverse.get(n)
    index = {t: i for i, t in enumerate(uni.triples)}
    maps = []
    for perm in itertools.permutations(range(n)):
        maps.append([index[tuple(sorted((perm[a], perm[b], perm[c])))]
                     for a, b, c in uni.triples])
    return maps


_PERM_CACHE: dict[int, list[list[int]]] = {}


def canonical_form(mask: int, n: int) -> int:
    """Minimum edge-bitmask over all vertex permutations."""
    if n not in _PERM_CACHE:
        if n > SEARCH_CAP:
            raise SizeLimit(f"canonical forms capped at n={SEARCH_CAP}")
        _PERM_CACHE[n] = _perm_edge_maps(n)
    best = None
    for emap in _PERM_CACHE[n]:
        img = 0
        m = mask
        while m:
            low = m & -m
            img |= 1 << emap[low.bit_length() - 1]
            m ^= low
        if best is None or img < best:
            best = img
    return best if best is not None else 0


def enumerate_three_graphs(n: int, predicate: Optional[Callable[[ThreeGraph], bool]] = None,
                           family: Optional[frozenset[str] | set[str]] = None,
                           canonical: bool = False) -> Iterator[ThreeGraph]:
    """Stream every n-vertex 3-graph (optionally family-free), each exactly
    once up to isomorphism when canonical=True.

    Full-lattice enumeration is capped at n = 6 (2^20 subsets); n = 7 needs a
    forbidden family so the pattern tracker can prune the lattice walk.
    """
    if n > SEARCH_CAP:
        raise SizeLimit(f"n={n} exceeds enumeration cap {SEARCH_CAP}")
    if family is None and n > ENUM_FULL_CAP:
        raise SizeLimit(f"full enumeration capped at n={ENUM_FULL_CAP}; "
                        "supply a forbidden family for n=7")
    uni = _EdgeUniverse.get(n)
    tracker = _Tracker(n, frozenset(family) if family else frozenset())
    prune = family is not None and len(family) > 0
    seen: set[int] = set()
    nedges = len(uni.triples)

    def mask_now() -> int:
        m = 0
        for e in tracker.edge_ids:
            m |= 1 << e
        return m

    def emit() -> Optional[ThreeGraph]:
        if canonical:
            cf = canonical_form(mask_now(), n)
            if cf in seen:
                return None
            seen.add(cf)
        g = tracker.graph()
        if predicate is not None and not predicate(g):
            return None
        return g

    def walk(idx: int) -> Iterator[ThreeGraph]:
        if idx == nedges:
            g = emit()
            if g is not None:
                yield g
            return
        yield from walk(idx + 1)
        if not prune or tracker.can_add(idx):
            tracker.add(idx)
            yield from walk(idx + 1)
            tracker.remove_last()

    yield from walk(0)
