"""Exact arithmetic over Q and Q(sqrt 5), dense exact matrices, and the
machine verification of the circulant-inverse, conjugation, and pentagon
identities.  No floating point is used in any assertion here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd, isqrt
from typing import Optional, Sequence, Union

from .construct import gamma_graph
from .core import Graph
from .errors import DimensionTooSmall, NotRegular, OutOfRange, PreconditionViolated

RationalLike = Union[int, Fraction]


@dataclass(frozen=True)
class ExactScalar:
    """A number a + b*sqrt(5) with rational a, b."""

    a: Fraction
    b: Fraction = Fraction(0)

    @staticmethod
    def of(a: RationalLike, b: RationalLike = 0) -> "ExactScalar":
        return ExactScalar(Fraction(a), Fraction(b))

    @staticmethod
    def sqrt5(coef: RationalLike = 1) -> "ExactScalar":
        return ExactScalar(Fraction(0), Fraction(coef))

    @staticmethod
    def coerce(x: "ScalarLike") -> "ExactScalar":
        if isinstance(x, ExactScalar):
            return x
        return ExactScalar(Fraction(x))

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def __add__(self, other: "ScalarLike") -> "ExactScalar":
        o = ExactScalar.coerce(other)
        return ExactScalar(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> "ExactScalar":
        return ExactScalar(-self.a, -self.b)

    def __sub__(self, other: "ScalarLike") -> "ExactScalar":
        return self + (-ExactScalar.coerce(other))

    def __rsub__(self, other: "ScalarLike") -> "ExactScalar":
        return (-self) + other

    def __mul__(self, other: "ScalarLike") -> "ExactScalar":
        o = ExactScalar.coerce(other)
        if self.b == 0 and o.b == 0:
            return ExactScalar(self.a * o.a)
        return ExactScalar(self.a * o.a + 5 * self.b * o.b,
                           self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, other: "ScalarLike") -> "ExactScalar":
        o = ExactScalar.coerce(other)
        norm = o.a * o.a - 5 * o.b * o.b
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 5)")
        conj = ExactScalar(o.a / norm, -o.b / norm)
        return self * conj

    def __rtruediv__(self, other: "ScalarLike") -> "ExactScalar":
        return ExactScalar.coerce(other) / self

    def sign(self) -> int:
        """Exact sign via rational comparisons only."""
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        t = self.a * self.a - 5 * self.b * self.b
        if t == 0:
            return 0
        return sa if t > 0 else sb

    def __lt__(self, other: "ScalarLike") -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: "ScalarLike") -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: "ScalarLike") -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: "ScalarLike") -> bool:
        return (self - other).sign() >= 0

    def __abs__(self) -> "ExactScalar":
        return -self if self.sign() < 0 else self

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * 5.0 ** 0.5

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        return f"{self.a} + ({self.b})*sqrt5"

    def to_obj(self) -> dict:
        return {"a": str(self.a), "b": str(self.b), "approx": float(self)}


ScalarLike = Union[int, Fraction, ExactScalar]


def exact_sign(x: ScalarLike) -> int:
    return ExactScalar.coerce(x).sign()


# ---------------------------------------------------------------------------
# Exact matrices.  Internally (A + B*sqrt5)/den with integer matrices A, B so
# that products run on arbitrary-precision ints; B is dropped when zero.

def _int_matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n, p = len(a), len(b[0])
    out = []
    for i in range(n):
        row_a = a[i]
        acc = [0] * p
        for k, x in enumerate(row_a):
            if x:
                row_b = b[k]
                acc = [u + x * w for u, w in zip(acc, row_b)]
        out.append(acc)
    return out


def _int_scale(a: list[list[int]], s: int) -> list[list[int]]:
    return [[x * s for x in row] for row in a]


def _int_add(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _zeros(n: int, p: int) -> list[list[int]]:
    return [[0] * p for _ in range(n)]


def _all_zero(a: Optional[list[list[int]]]) -> bool:
    return a is None or all(not any(row) for row in a)


class ExactMatrix:
    """Dense exact matrix over Q(sqrt 5); rational-only in common use."""

    __slots__ = ("rows", "cols", "_a", "_b", "_den")

    def __init__(self, a: list[list[int]], b: Optional[list[list[int]]], den: int):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            a = _int_scale(a, -1)
            b = None if b is None else _int_scale(b, -1)
            den = -den
        if b is not None and _all_zero(b):
            b = None
        g = den
        for mat in (a, b):
            if mat is None:
                continue
            for row in mat:
                for x in row:
                    if x:
                        g = gcd(g, abs(x))
                if g == 1:
                    break
        if g > 1:
            a = [[x // g for x in row] for row in a]
            b = None if b is None else [[x // g for x in row] for row in b]
            den //= g
        self.rows = len(a)
        self.cols = len(a[0]) if a else 0
        self._a = a
        self._b = b
        self._den = den

    @staticmethod
    def from_rows(rows: Sequence[Sequence[ScalarLike]]) -> "ExactMatrix":
        entries = [[ExactScalar.coerce(x) for x in row] for row in rows]
        den = 1
        for row in entries:
            for x in row:
                den = den * x.a.denominator // gcd(den, x.a.denominator)
                den = den * x.b.denominator // gcd(den, x.b.denominator)
        a = [[int(x.a * den) for x in row] for row in entries]
        b = [[int(x.b * den) for x in row] for row in entries]
        return ExactMatrix(a, b, den)

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        return ExactMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)], None, 1)

    def entry(self, i: int, j: int) -> ExactScalar:
        b = 0 if self._b is None else self._b[i][j]
        return ExactScalar(Fraction(self._a[i][j], self._den), Fraction(b, self._den))

    def is_symmetric(self) -> bool:
        for mat in (self._a, self._b):
            if mat is None:
                continue
            for i in range(self.rows):
                for j in range(i + 1, self.cols):
                    if mat[i][j] != mat[j][i]:
                        return False
        return True

    def transpose(self) -> "ExactMatrix":
        at = [list(col) for col in zip(*self._a)]
        bt = None if self._b is None else [list(col) for col in zip(*self._b)]
        return ExactMatrix(at, bt, self._den)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise OutOfRange("dimension mismatch in matrix addition")
        d1, d2 = self._den, other._den
        a = _int_add(_int_scale(self._a, d2), _int_scale(other._a, d1))
        if self._b is None and other._b is None:
            b = None
        else:
            b1 = _zeros(self.rows, self.cols) if self._b is None else self._b
            b2 = _zeros(self.rows, self.cols) if other._b is None else other._b
            b = _int_add(_int_scale(b1, d2), _int_scale(b2, d1))
        return ExactMatrix(a, b, d1 * d2)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + other.scale(-1)

    def scale(self, s: ScalarLike) -> "ExactMatrix":
        x = ExactScalar.coerce(s)
        num_den = x.a.denominator * x.b.denominator // gcd(x.a.denominator, x.b.denominator)
        pa = int(x.a * num_den)
        pb = int(x.b * num_den)
        a = _int_scale(self._a, pa)
        b_from_a = _int_scale(self._a, pb) if pb else None
        if self._b is not None:
            a = _int_add(a, _int_scale(self._b, 5 * pb)) if pb else a
            b_self = _int_scale(self._b, pa)
            b_from_a = b_self if b_from_a is None else _int_add(b_from_a, b_self)
        return ExactMatrix(a, b_from_a, self._den * num_den)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise OutOfRange("dimension mismatch in matrix product")
        a = _int_matmul(self._a, other._a)
        if self._b is None and other._b is None:
            b = None
        else:
            b1, b2 = self._b, other._b
            if b1 is not None and b2 is not None:
                a = _int_add(a, _int_scale(_int_matmul(b1, b2), 5))
                b = _int_add(_int_matmul(self._a, b2), _int_matmul(b1, other._a))
            elif b2 is not None:
                b = _int_matmul(self._a, b2)
            else:
                b = _int_matmul(b1, other._a)
        return ExactMatrix(a, b, self._den * other._den)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) \
            and self._den == other._den and self._a == other._a and self._b == other._b

    def __hash__(self):
        return hash((self.rows, self.cols, self._den,
                     tuple(map(tuple, self._a)),
                     None if self._b is None else tuple(map(tuple, self._b))))

    def max_abs_deviation(self, other: "ExactMatrix") -> ExactScalar:
        worst = ExactScalar.of(0)
        for i in range(self.rows):
            for j in range(self.cols):
                d = abs(self.entry(i, j) - other.entry(i, j))
                if d > worst:
                    worst = d
        return worst


def circulant_W(m: int) -> ExactMatrix:
    """Circulant 0/1 matrix with ones on the diagonal and at offsets +-1."""
    if m < 3:
        raise DimensionTooSmall(f"W_m needs m >= 3, got {m}")
    a = [[1 if (i - j) % m in (0, 1, m - 1) else 0 for j in range(m)] for i in range(m)]
    return ExactMatrix(a, None, 1)


def all_ones_J(m: int) -> ExactMatrix:
    if m < 1:
        raise DimensionTooSmall(f"J_m needs m >= 1, got {m}")
    return ExactMatrix([[1] * m for _ in range(m)], None, 1)


def adjacency(g: Graph) -> ExactMatrix:
    a = _zeros(g.n, g.n)
    for u, v in g.edges:
        a[u][v] = 1
        a[v][u] = 1
    return ExactMatrix(a, None, 1)


# ---------------------------------------------------------------------------
# Certificates

@dataclass(frozen=True)
class CertificateReport:
    lemma: str
    parameter: Optional[object]
    passed: bool
    details: dict = field(default_factory=dict)

    def to_obj(self) -> dict:
        return {"lemma": self.lemma, "parameter": self.parameter,
                "pass": self.passed, "details": self.details}


def gamma_inverse_matrix(d: int) -> ExactMatrix:
    """W_{3d-1} - (1/d) J_{3d-1}, the claimed inverse of the circulant family
    adjacency matrix."""
    m = 3 * d - 1
    return circulant_W(m) - all_ones_J(m).scale(Fraction(1, d))


def verify_gamma_inverse(d: int) -> CertificateReport:
    """Check A_d * (W_{3d-1} - (1/d) J_{3d-1}) = I exactly."""
    if d < 2:
        raise OutOfRange(f"d={d} < 2 (the offset pattern degenerates below d=2)")
    m = 3 * d - 1
    a = adjacency(gamma_graph(d))
    prod = a @ gamma_inverse_matrix(d)
    ident = ExactMatrix.identity(m)
    dev = prod.max_abs_deviation(ident)
    return CertificateReport(
        lemma="gamma-inverse", parameter=d, passed=prod == ident,
        details={"dimension": m, "max_deviation": str(dev),
                 "adjacency_symmetric": a.is_symmetric()},
    )


def verify_conjugation(d: int) -> CertificateReport:
    """Check inv^T (A_d/2 - C(d,2) J) inv = (W - J)/2 with inv = W - J/d."""
    if d < 2:
        raise OutOfRange(f"d={d} < 2")
    m = 3 * d - 1
    a = adjacency(gamma_graph(d))
    w = circulant_W(m)
    j = all_ones_J(m)
    inv = w - j.scale(Fraction(1, d))
    inverse_ok = (a @ inv) == ExactMatrix.identity(m)
    middle = a.scale(Fraction(1, 2)) - j.scale(comb(d, 2))
    lhs = inv.transpose() @ middle @ inv
    rhs = (w - j).scale(Fraction(1, 2))
    dev = lhs.max_abs_deviation(rhs)
    return CertificateReport(
        lemma="conjugation", parameter=d, passed=inverse_ok and lhs == rhs,
        details={"dimension": m, "inverse_recertified": inverse_ok,
                 "max_deviation": str(dev)},
    )


PENTAGON_B_ROWS = (
    (1, Fraction(1, 2), 1, 1, Fraction(1, 2)),
    (Fraction(1, 2), 1, Fraction(1, 2), 1, 1),
    (1, Fraction(1, 2), 1, Fraction(1, 2), 1),
    (1, 1, Fraction(1, 2), 1, Fraction(1, 2)),
    (Fraction(1, 2), 1, 1, Fraction(1, 2), 1),
)

PENTAGRAM_EDGES = ((0, 2), (1, 3), (2, 4), (0, 3), (1, 4))


def pentagram_graph() -> Graph:
    return Graph(5, PENTAGRAM_EDGES)


def verify_pentagon_identity() -> CertificateReport:
    """Check inv^T B inv = A_Q / 2 for the pentagon: inv = W_5 - J_5/2."""
    a2 = adjacency(gamma_graph(2))
    inv = gamma_inverse_matrix(2)
    inverse_ok = (a2 @ inv) == ExactMatrix.identity(5)
    b = ExactMatrix.from_rows(PENTAGON_B_ROWS)
    lhs = inv.transpose() @ b @ inv
    rhs = adjacency(pentagram_graph()).scale(Fraction(1, 2))
    dev = lhs.max_abs_deviation(rhs)
    return CertificateReport(
        lemma="pentagon", parameter=None,
        passed=inverse_ok and b.is_symmetric() and lhs == rhs,
        details={"inverse_recertified": inverse_ok,
                 "b_symmetric": b.is_symmetric(),
                 "lhs_symmetric": lhs.is_symmetric(),
                 "max_deviation": str(dev)},
    )


def quadratic_form_gap(f: Graph, z: Sequence[RationalLike], z0: RationalLike) -> Fraction:
    """(1/2) z^T A_F z minus the regular-graph lower bound d*z*z0 - d*m*z0^2/2.

    Requires F d-regular, min z_i >= z0 >= 0.  The return value is exact and
    nonnegative whenever the preconditions hold.
    """
    degs = f.degrees()
    if len(set(degs)) > 1:
        raise NotRegular(f"degree multiset {sorted(set(degs))} is not constant")
    if len(z) != f.n:
        raise OutOfRange(f"vector length {len(z)} != {f.n}")
    zf = [Fraction(x) for x in z]
    z0f = Fraction(z0)
    if z0f < 0:
        raise PreconditionViolated(f"z0={z0f} < 0")
    if zf and min(zf) < z0f:
        raise PreconditionViolated(f"min z_i = {min(zf)} < z0 = {z0f}")
    d = degs[0] if degs else 0
    m = f.n
    lhs = sum(zf[u] * zf[v] for u, v in f.edges)
    zsum = sum(zf)
    rhs = d * zsum * z0f - Fraction(d * m, 2) * z0f * z0f
    return lhs - rhs
