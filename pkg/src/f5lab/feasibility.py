"""Infeasibility certificates for the two quadratic constraint systems, the
vertex-extendability parameter check, and the catalog of scalar inequalities.

Infeasibility is *evidenced* numerically (deterministic grid / direction
scans whose best candidates are re-evaluated in exact arithmetic) and
*certified* exactly through the analytic reductions: a cubic negativity
certificate for the six-variable system, and a closed-form Q(sqrt 5) bound
for the circulant family systems.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional, Sequence

import numpy as np

from .algebra import CertificateReport, ExactScalar, ScalarLike, exact_sign
from .construct import gamma_graph
from .errors import OutOfRange

FOUR_45 = Fraction(4, 45)
#: 3 - 16/(3*sqrt5) = 3 - (16/15)*sqrt5, the open upper bound on sum(y).
SUM_BOUND = ExactScalar.of(3, Fraction(-16, 15))
#: 6/17, the neighborhood-sum ratio.
NB_RATIO = Fraction(6, 17)


# ---------------------------------------------------------------------------
# Polynomials over Q (dense, low-degree; coefficient lists low -> high)

def poly_mul(p: Sequence[Fraction], q: Sequence[Fraction]) -> tuple[Fraction, ...]:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return tuple(out)


def poly_add(p: Sequence[Fraction], q: Sequence[Fraction]) -> tuple[Fraction, ...]:
    n = max(len(p), len(q))
    return tuple(
        (p[i] if i < len(p) else Fraction(0)) + (q[i] if i < len(q) else Fraction(0))
        for i in range(n))


def poly_eval(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_scale(p: Sequence[Fraction], s: Fraction) -> tuple[Fraction, ...]:
    return tuple(c * s for c in p)


def poly_deriv(p: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(c * i for i, c in enumerate(p))[1:] or (Fraction(0),)


# ---------------------------------------------------------------------------
# Constraint systems (degree <= 2 polynomials with strict thresholds)

@dataclass(frozen=True)
class Constraint:
    """value(y) > threshold (sense '>') or value(y) < threshold (sense '<')."""

    name: str
    lin: tuple[tuple[int, Fraction], ...]
    quad: tuple[tuple[int, int, Fraction], ...]
    threshold: ExactScalar
    sense: str = ">"

    def value(self, point: Sequence[Fraction]) -> Fraction:
        v = Fraction(0)
        for i, c in self.lin:
            v += c * point[i]
        for i, j, c in self.quad:
            v += c * point[i] * point[j]
        return v

    def slack(self, point: Sequence[Fraction]) -> ExactScalar:
        v = ExactScalar.of(self.value(point))
        return v - self.threshold if self.sense == ">" else self.threshold - v


@dataclass(frozen=True)
class ConstraintSystem:
    nvars: int
    constraints: tuple[Constraint, ...]

    def min_slack(self, point: Sequence[Fraction]) -> ExactScalar:
        worst: Optional[ExactScalar] = None
        for c in self.constraints:
            s = c.slack(point)
            if worst is None or s < worst:
                worst = s
        assert worst is not None
        return worst


def opt1_system(threshold: Fraction = FOUR_45) -> ConstraintSystem:
    """Variables (x, y1..y5) on the 5-simplex: cycle-sum and hub constraints."""
    thr = ExactScalar.of(threshold)
    cons = [Constraint(
        "cycle-sum",
        lin=(),
        quad=tuple((1 + i, 1 + (i + 1) % 5, Fraction(1)) for i in range(5)),
        threshold=thr)]
    for i in range(5):
        cons.append(Constraint(
            f"hub-{i + 1}",
            lin=(),
            quad=((0, 1 + (i - 1) % 5, Fraction(1)), (0, 1 + (i + 1) % 5, Fraction(1))),
            threshold=thr))
    return ConstraintSystem(6, tuple(cons))


def opt2_system(d: int, edge_threshold: Fraction = FOUR_45) -> ConstraintSystem:
    """Variables y_1..y_{3d-1} (positive): edge-sum, neighborhood-ratio, and
    total-sum constraints for the d-regular circulant."""
    g = gamma_graph(d)
    m = g.n
    cons = [Constraint(
        "edge-sum",
        lin=(),
        quad=tuple((u, v, Fraction(1)) for u, v in g.edges),
        threshold=ExactScalar.of(edge_threshold))]
    for i in range(m):
        nb = {v for u, v in g.edges if u == i} | {u for u, v in g.edges if v == i}
        lin = []
        for j in range(m):
            c = (Fraction(1) if j in nb else Fraction(0)) - NB_RATIO
            if c:
                lin.append((j, c))
        cons.append(Constraint(f"nbhd-{i + 1}", lin=tuple(lin), quad=(),
                               threshold=ExactScalar.of(0)))
    cons.append(Constraint("total-sum",
                           lin=tuple((j, Fraction(1)) for j in range(m)),
                           quad=(), threshold=SUM_BOUND, sense="<"))
    return ConstraintSystem(m, tuple(cons))


# ---------------------------------------------------------------------------
# Numeric slack scans

@dataclass(frozen=True)
class SlackScan:
    resolution: int
    best_point: tuple[Fraction, ...]
    best_slack: float
    exact_best_slack: ExactScalar
    points_evaluated: int
    trace: tuple[float, ...]

    def to_obj(self) -> dict:
        return {
            "resolution": self.resolution,
            "best_point": [str(x) for x in self.best_point],
            "best_min_slack": self.best_slack,
            "exact_best_min_slack": self.exact_best_slack.to_obj(),
            "points_evaluated": self.points_evaluated,
            "refinement_trace": list(self.trace),
        }


def _opt1_min_slack_arrays(x, y1, y2, y3, y4, y5, thr: float):
    s = (y1 * y2 + y2 * y3 + y3 * y4 + y4 * y5 + y5 * y1) - thr
    ys = (y1, y2, y3, y4, y5)
    for i in range(5):
        s = np.minimum(s, x * (ys[(i - 1) % 5] + ys[(i + 1) % 5]) - thr)
    return s


def _scan_opt1_chunk(triples, planes, n, thr, top):
    best: list[tuple[float, tuple[int, ...]]] = []
    count = 0
    for k0, k1, k2 in triples:
        m = n - k0 - k1 - k2
        k3s, k4s = planes[m]
        k5s = m - k3s - k4s
        count += k3s.size
        s = _opt1_min_slack_arrays(
            k0 / n, k1 / n, k2 / n, k3s / n, k4s / n, k5s / n, thr)
        if k3s.size > top:
            idx = np.argpartition(s, -top)[-top:]
        else:
            idx = np.arange(k3s.size)
        for t in idx:
            best.append((float(s[t]), (k0, k1, k2, int(k3s[t]), int(k4s[t]), int(k5s[t]))))
        if len(best) > 64 * top:
            best.sort(key=lambda e: (-e[0], e[1]))
            del best[top:]
    best.sort(key=lambda e: (-e[0], e[1]))
    return best[:top], count


def _refine_simplex(system: ConstraintSystem, point: list[Fraction], h0: Fraction,
                    steps: int) -> tuple[list[Fraction], ExactScalar, list[float]]:
    """Exact coordinate-descent on the simplex: move mass h between a pair of
    coordinates whenever it improves the min slack; halve h on stagnation."""
    nv = len(point)
    best = system.min_slack(point)
    h = h0
    trace = [float(best)]
    floor = Fraction(1, 1 << 20)
    for _ in range(steps):
        move = None
        move_val = best
        for j in range(nv):
            if point[j] < h:
                continue
            for i in range(nv):
                if i == j:
                    continue
                cand = list(point)
                cand[i] += h
                cand[j] -= h
                s = system.min_slack(cand)
                if s > move_val:
                    move, move_val = (i, j), s
        if move is None:
            h = h / 2
            if h < floor:
                break
        else:
            i, j = move
            point[i] += h
            point[j] -= h
            best = move_val
            trace.append(float(best))
    return point, best, trace


def scan_opt1(resolution: int, threshold: Fraction = FOUR_45, threads: int = 0,
              refine_steps: int = 100, top: int = 10) -> SlackScan:
    """Barycentric lattice scan of the closed 5-simplex plus exact refinement
    of the best lattice points.  Deterministic for fixed inputs."""
    n = resolution
    thr = float(threshold)
    max_m = n
    planes = {}
    for m in range(max_m + 1):
        k3 = np.repeat(np.arange(m + 1), m + 1 - np.arange(m + 1))
        k4 = np.concatenate([np.arange(m + 1 - v) for v in range(m + 1)])
        planes[m] = (k3, k4)
    triples = [(k0, k1, k2)
               for k0 in range(n + 1)
               for k1 in range(n + 1 - k0)
               for k2 in range(n + 1 - k0 - k1)]
    if threads and threads > 1:
        chunks = [triples[i::threads] for i in range(threads)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(
                lambda ch: _scan_opt1_chunk(ch, planes, n, thr, top), chunks))
        cands = [c for part, _ in parts for c in part]
        count = sum(cnt for _, cnt in parts)
        cands.sort(key=lambda e: (-e[0], e[1]))
        cands = cands[:top]
    else:
        cands, count = _scan_opt1_chunk(triples, planes, n, thr, top)

    system = opt1_system(threshold)
    best_point: Optional[list[Fraction]] = None
    best_exact: Optional[ExactScalar] = None
    best_trace: list[float] = []
    for _, ks in cands:
        pt = [Fraction(k, n) for k in ks]
        pt, val, trace = _refine_simplex(system, pt, Fraction(1, 2 * n), refine_steps)
        if best_exact is None or val > best_exact:
            best_point, best_exact, best_trace = pt, val, trace
    assert best_point is not None and best_exact is not None
    return SlackScan(
        resolution=resolution,
        best_point=tuple(best_point),
        best_slack=float(best_exact),
        exact_best_slack=best_exact,
        points_evaluated=count,
        trace=tuple(best_trace),
    )


def scan_opt2(d: int, resolution: int, edge_threshold: Fraction = FOUR_45,
              seed: int = 20250810) -> SlackScan:
    """Direction x scale scan for the circulant system: directions from the
    uniform vector plus seeded Dirichlet samples, scale from a grid under the
    open sum bound, followed by float hill-climbing and an exact dyadic
    re-evaluation of the winner."""
    g = gamma_graph(d)
    m = g.n
    adj = np.zeros((m, m))
    for u, v in g.edges:
        adj[u, v] = adj[v, u] = 1.0
    s_max = float(SUM_BOUND)
    thr = float(edge_threshold)
    rng = np.random.default_rng(seed + 1009 * d + resolution)
    n_dirs = max(64, 8 * resolution)
    dirs = [np.full(m, 1.0 / m)]
    dirs.extend(rng.dirichlet(np.ones(m)) for _ in range(n_dirs - 1))
    s_grid = np.linspace(s_max / (4 * resolution), s_max * (1 - 1e-9), 4 * resolution)

    def dir_best(w):
        aw = adj @ w
        q = float(w @ aw) / 2.0
        nb_min = float(np.min(aw - (6.0 / 17.0) * w.sum()))
        edge = q * s_grid ** 2 - thr
        nbhd = nb_min * s_grid
        total = s_max - s_grid
        ms = np.minimum(np.minimum(edge, nbhd), total)
        i = int(np.argmax(ms))
        return float(ms[i]), float(s_grid[i])

    cands = []
    for idx, w in enumerate(dirs):
        val, s = dir_best(w)
        cands.append((val, idx, s))
    cands.sort(key=lambda e: (-e[0], e[1]))
    count = len(dirs) * s_grid.size

    def min_slack_float(y):
        aw = adj @ y
        edge = float(y @ aw) / 2.0 - thr
        nbhd = float(np.min(aw - (6.0 / 17.0) * y.sum()))
        total = s_max - float(y.sum())
        return min(edge, nbhd, total)

    best_y, best_val, trace = None, -np.inf, []
    for val, idx, s in cands[:10]:
        y = dirs[idx] * s
        cur = min_slack_float(y)
        h = s / (2.0 * resolution)
        local_trace = [cur]
        for _ in range(100):
            improved = False
            for i in range(m):
                for delta in (h, -h):
                    if y[i] + delta <= 0:
                        continue
                    y2 = y.copy()
                    y2[i] += delta
                    v2 = min_slack_float(y2)
                    if v2 > cur:
                        y, cur = y2, v2
                        improved = True
            if not improved:
                h /= 2.0
                if h < 1e-9:
                    break
            else:
                local_trace.append(cur)
        if cur > best_val:
            best_y, best_val, trace = y, cur, local_trace

    assert best_y is not None
    # exact re-evaluation at a dyadic rounding of the float winner
    denom = 1 << 24
    point = [max(Fraction(1, denom), Fraction(round(float(v) * denom), denom))
             for v in best_y]
    system = opt2_system(d, edge_threshold)
    exact = system.min_slack(point)
    return SlackScan(
        resolution=resolution,
        best_point=tuple(point),
        best_slack=float(exact),
        exact_best_slack=exact,
        points_evaluated=count,
        trace=tuple(trace),
    )


# ---------------------------------------------------------------------------
# Exact certificates: the cubic endgame of the six-variable system

CUBIC = (Fraction(-16), Fraction(96), Fraction(-225), Fraction(135))


def _bisect_sign_change(p: Sequence[Fraction], lo: Fraction, hi: Fraction,
                        width: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink [lo, hi] with sign(p(lo)) != sign(p(hi)) to the given width."""
    flo = poly_eval(p, lo)
    fhi = poly_eval(p, hi)
    if flo == 0 or fhi == 0 or (flo > 0) == (fhi > 0):
        raise ValueError("no sign change to bisect")
    while hi - lo > width:
        mid = (lo + hi) / 2
        fm = poly_eval(p, mid)
        if fm == 0:
            # nudge: a rational root would be found exactly; widen minimally
            mid += width / 4
            fm = poly_eval(p, mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    return lo, hi


def verify_cubic_negative() -> dict:
    """Exact certificate that 135x^3 - 225x^2 + 96x - 16 < 0 on [0, 1].

    The derivative's two roots are isolated by exact bisection; outside the
    isolating windows the cubic is monotone, and inside them a Lipschitz
    bound |c'| <= 951 over the window width keeps the value negative.
    """
    c = CUBIC
    cp = poly_deriv(c)
    width = Fraction(1, 1 << 20)
    lip = sum(abs(x) for x in cp)  # sup |c'| on [0,1] is at most sum |coef|
    checks = {
        "c(0)": poly_eval(c, Fraction(0)),
        "c(1)": poly_eval(c, Fraction(1)),
        "c'(0)": poly_eval(cp, Fraction(0)),
        "c'(1/2)": poly_eval(cp, Fraction(1, 2)),
        "c'(1)": poly_eval(cp, Fraction(1)),
    }
    ok = (checks["c(0)"] < 0 and checks["c(1)"] < 0 and checks["c'(0)"] > 0
          and checks["c'(1/2)"] < 0 and checks["c'(1)"] > 0)
    l1, u1 = _bisect_sign_change(cp, Fraction(0), Fraction(1, 2), width)
    l2, u2 = _bisect_sign_change(cp, Fraction(1, 2), Fraction(1), width)
    # monotone segments: increasing on [0,l1], decreasing on [u1,l2],
    # increasing on [u2,1]; their maxima are c(l1), c(u1), c(1).
    seg_ok = (poly_eval(c, l1) < 0 and poly_eval(c, u1) < 0
              and poly_eval(c, Fraction(1)) < 0)
    win_ok = (poly_eval(c, l1) + lip * (u1 - l1) < 0
              and poly_eval(c, l2) + lip * (u2 - l2) < 0)
    return {
        "pass": bool(ok and seg_ok and win_ok),
        "endpoint_values": {k: str(v) for k, v in checks.items()},
        "critical_windows": [[str(l1), str(u1)], [str(l2), str(u2)]],
        "lipschitz_bound": str(lip),
    }


def verify_opt1_reduction() -> dict:
    """Exact polynomial identities behind the six-variable endgame:

    * 9x^2 - 9x + 2 = (3x - 1)(3x - 2), so x(1-x) > 2/9 iff 1/3 < x < 2/3;
    * 405 x^2 ((1-x)^2 - 4/45) - 16(-9x^2 + 9x - 1) = (3x - 1) c(x).
    """
    f = Fraction
    quad = (f(2), f(-9), f(9))
    factored = poly_mul((f(-1), f(3)), (f(-2), f(3)))
    sq_ok = quad == factored
    inside = (poly_eval(quad, f(1, 2)) < 0)
    outside = (poly_eval(quad, f(0)) > 0 and poly_eval(quad, f(1)) > 0)
    lhs = poly_add(
        poly_scale(poly_mul((f(0), f(0), f(1)),
                            poly_add(poly_mul((f(1), f(-1)), (f(1), f(-1))),
                                     (f(-4, 45),))), f(405)),
        poly_scale((f(-1), f(9), f(-9)), f(-16)))
    rhs = poly_mul((f(-1), f(3)), CUBIC)
    red_ok = lhs == rhs
    return {
        "pass": bool(sq_ok and inside and outside and red_ok),
        "square_factorization": sq_ok,
        "strictly_between_roots": inside and outside,
        "reduction_identity": red_ok,
    }


def opt1_certificate(resolution: int, threshold: Fraction = FOUR_45,
                     threads: int = 0) -> CertificateReport:
    """Two-route verdict for the six-variable system on the simplex.

    (A) numeric: lattice scan plus refinement; infeasibility evidence is
    max min-slack <= 0 (exact re-evaluation at the best rational point).
    (B) exact (canonical threshold only): the cubic negativity certificate
    and the reduction identities.
    """
    if resolution < 10:
        raise OutOfRange(f"resolution {resolution} < 10")
    scan = scan_opt1(resolution, threshold, threads=threads)
    scan_infeasible = scan.exact_best_slack.sign() <= 0
    details: dict = {"threshold": str(threshold), "scan": scan.to_obj(),
                     "scan_infeasible": scan_infeasible}
    if threshold == FOUR_45:
        cubic = verify_cubic_negative()
        reduction = verify_opt1_reduction()
        details["cubic_certificate"] = cubic
        details["reduction_certificate"] = reduction
        passed = scan_infeasible and cubic["pass"] and reduction["pass"]
    else:
        details["note"] = "exact certificate applies to the canonical threshold only"
        passed = scan_infeasible
    return CertificateReport(lemma="opt1", parameter=resolution,
                             passed=passed, details=details)


def opt2_exact_bound(d: int) -> ExactScalar:
    """(d^2 - 13d + 144)/578 * (3 - 16/(3 sqrt5))^2 as an exact scalar."""
    q = Fraction(d * d - 13 * d + 144, 578)
    return SUM_BOUND * SUM_BOUND * q


def verify_opt2_identities(d: int) -> dict:
    """Exact identities for the circulant endgame at m = 3d - 1:

    * 17d - 3m = 8d + 3 and m - 3 = 3d - 4;
    * C(d,2) - 6(3d-4)(8d+3)/289 = (d^2 - 13d + 144)/578.
    """
    f = Fraction
    m_poly = (f(-1), f(3))                      # m(d) = 3d - 1
    lhs1 = poly_add((f(0), f(17)), poly_scale(m_poly, f(-3)))
    lhs2 = poly_add(m_poly, (f(-3),))
    prod = poly_mul(lhs2, lhs1)
    reg_ok = lhs1 == (f(3), f(8)) and lhs2 == (f(-4), f(3)) \
        and prod == poly_mul((f(-4), f(3)), (f(3), f(8)))
    choose2 = (f(0), f(-1, 2), f(1, 2))         # d(d-1)/2
    target = (f(144, 578), f(-13, 578), f(1, 578))
    diff = poly_add(choose2, poly_scale(prod, f(-6, 289)))
    quad_ok = diff == target
    value = opt2_exact_bound(d)
    return {
        "pass": bool(reg_ok and quad_ok),
        "regularity_identity": reg_ok,
        "quadratic_identity": quad_ok,
        "bound_value": value.to_obj(),
    }


def opt2_certificate(d: int, resolution: int,
                     edge_threshold: Fraction = FOUR_45) -> CertificateReport:
    """Two-route verdict for the circulant system at a given d in [2, 12]."""
    if not 2 <= d <= 12:
        raise OutOfRange(f"d={d} outside [2, 12]")
    if resolution < 10:
        raise OutOfRange(f"resolution {resolution} < 10")
    margin = ExactScalar.of(edge_threshold) - opt2_exact_bound(d)
    exact_ok = margin.sign() >= 0
    identities = verify_opt2_identities(d)
    scan = scan_opt2(d, resolution, edge_threshold)
    scan_infeasible = scan.exact_best_slack.sign() <= 0
    details = {
        "edge_threshold": str(edge_threshold),
        "exact_margin": margin.to_obj(),
        "identities": identities,
        "scan": scan.to_obj(),
        "scan_infeasible": scan_infeasible,
    }
    if edge_threshold == FOUR_45:
        passed = exact_ok and identities["pass"] and scan_infeasible
    else:
        details["note"] = "exact bound compared against the supplied threshold"
        passed = exact_ok and scan_infeasible
    return CertificateReport(lemma="opt2", parameter=d, passed=passed,
                             details=details)


# ---------------------------------------------------------------------------
# Vertex-extendability parameter system

def aes_section6_point() -> tuple[ExactScalar, ExactScalar, ExactScalar, ExactScalar]:
    """The canonical (alpha, beta, delta, gamma) instantiation:
    (1 - 4/(3 sqrt5), 4/(3 sqrt5), 4/45, 3 - 20/(3 sqrt5))."""
    beta = ExactScalar.of(0, Fraction(4, 15))
    return (ExactScalar.of(1) - beta, beta, ExactScalar.of(FOUR_45),
            ExactScalar.of(3, Fraction(-4, 3)))


def aes_parameter_check(alpha: ScalarLike, beta: ScalarLike, delta: ScalarLike,
                        gamma: ScalarLike) -> CertificateReport:
    """Evaluate the five strict inequalities of the extendability system."""
    al = ExactScalar.coerce(alpha)
    be = ExactScalar.coerce(beta)
    de = ExactScalar.coerce(delta)
    ga = ExactScalar.coerce(gamma)
    one = ExactScalar.of(1)
    half = Fraction(1, 2)

    slacks = {
        "beta-above-half": be - half,
        "delta-vs-cross-pairs": de - (be * (one - be) / 3 + ga * al),
        "delta-vs-square": de - ((one - ga) * (one - ga) / 12 + ga * al),
        "delta-above-1/12": de - Fraction(1, 12),
    }
    t1 = (2 - 2 * be) * (2 - 2 * be) / 4 + (2 * be - 1) * ga
    t2 = be * be / 4 + (one - be) * ga
    link_max = t1 if t1 >= t2 else t2
    slacks["delta-vs-link-bound"] = de - link_max / 2
    passed = all(s.sign() > 0 for s in slacks.values())
    return CertificateReport(
        lemma="aes-params", parameter=None, passed=passed,
        details={
            "inputs": {"alpha": al.to_obj(), "beta": be.to_obj(),
                       "delta": de.to_obj(), "gamma": ga.to_obj()},
            "slacks": {k: v.to_obj() for k, v in slacks.items()},
            "link_bound_branch": "first" if t1 >= t2 else "second",
            "beta_sq_quarter": (be * be / 4).to_obj(),
        },
    )


# ---------------------------------------------------------------------------
# Scalar-claim audit

def claim_a_margin(n: int) -> Fraction:
    """7n^2/12 - 196n - C(n,2)."""
    return Fraction(7 * n * n, 12) - 196 * n - Fraction(n * (n - 1), 2)


def claim_b_margin(k: int, n: int) -> Fraction:
    """(k^2-6k+6)/(12k) n^2 - k C(k+1,2) n."""
    return Fraction(k * k - 6 * k + 6, 12 * k) * n * n - k * comb(k + 1, 2) * n


def _boundary_claim(margin, deriv_gap: Fraction, boundary: int) -> dict:
    """Certify margin(n) > 0 for all integers n >= boundary for a quadratic
    margin with positive leading coefficient: check the boundary value and
    that the forward difference margin(n+1) - margin(n) is positive there
    (convexity makes forward differences nondecreasing)."""
    at_boundary = margin(boundary)
    step = margin(boundary + 1) - at_boundary
    return {
        "pass": bool(at_boundary > 0 and step > 0 and deriv_gap > 0),
        "boundary": boundary,
        "value_at_boundary": str(at_boundary),
        "forward_difference": str(step),
        "leading_coefficient": str(deriv_gap),
    }


def numeric_claim_audit() -> CertificateReport:
    """Exact verification of the six in-proof scalar claims (a)-(f)."""
    f = Fraction
    claims: dict[str, dict] = {}

    claims["a-clique7-count"] = _boundary_claim(claim_a_margin, f(1, 12), 4629)
    claims["a-clique7-count"]["fails_at_2000"] = bool(claim_a_margin(2000) < 0)

    for k in (5, 6):
        claims[f"b-clique-k{k}"] = _boundary_claim(
            lambda n, k=k: claim_b_margin(k, n), f(k * k - 6 * k + 6, 12 * k), 4629)

    gamma = f(1, 3) + 2 * f(1, 180)
    product = gamma * (4 * gamma - 1) * (3 * gamma - 1) / 6
    claims["c-k4-density"] = {
        "pass": bool(product == f(527, 729000) and product > f(1, 1620)),
        "gamma": str(gamma),
        "product": str(product),
        "required": str(f(1, 1620)),
    }

    x0 = ExactScalar.of(-2, f(16, 15))          # 16/(3 sqrt5) - 2
    peak = x0 * (ExactScalar.of(1) - x0) * f(3, 8)
    peak_closed = ExactScalar.of(f(-263, 60), 2)  # 2 sqrt5 - 263/60
    claims["d-join-case-chain"] = {
        "pass": bool(
            x0.sign() > 0
            and (ExactScalar.of(f(1, 2)) - x0).sign() > 0
            and peak == peak_closed
            and (ExactScalar.of(FOUR_45) - peak_closed).sign() > 0),
        "x0": x0.to_obj(),
        "peak": peak.to_obj(),
        "peak_closed_form": peak_closed.to_obj(),
        "upper_threshold": str(FOUR_45),
        "note": ("x(1-x) increases on [0, x0] because x0 < 1/2; "
                 "the endpoint x0 itself is taken as given"),
    }

    e_val = ExactScalar.of(f(33 * 12, 76), f(-33 * 5, 76)) - f(6, 17)
    claims["e-ratio-endgame"] = {
        "pass": bool(e_val.sign() == 1),
        "value": e_val.to_obj(),
    }

    beta = ExactScalar.of(0, f(4, 15))          # 4/(3 sqrt5)
    claims["f-shadow-degree-constant"] = {
        "pass": bool(beta.sign() > 0 and beta * beta == ExactScalar.of(4 * FOUR_45)),
        "beta_squared": (beta * beta).to_obj(),
        "four_times_bound": str(4 * FOUR_45),
    }

    passed = all(c["pass"] for c in claims.values())
    return CertificateReport(lemma="scalar-audit", parameter=None, passed=passed,
                             details={"claims": claims})
