"""Exact Q(sqrt 5) arithmetic, exact matrices, and the matrix-identity
certificates.  Every assertion here is exact; floats appear only as
cross-checks of the sign routine."""

import random
from fractions import Fraction

import pytest

from f5lab.algebra import (ExactMatrix, ExactScalar, adjacency, all_ones_J,
                           circulant_W, exact_sign, gamma_inverse_matrix,
                           quadratic_form_gap, verify_conjugation,
                           verify_gamma_inverse, verify_pentagon_identity,
                           pentagram_graph)
from f5lab.construct import complement_graph, cycle_graph, gamma_graph
from f5lab.core import build_graph
from f5lab.errors import (DimensionTooSmall, NotRegular, OutOfRange,
                          PreconditionViolated)


def test_exact_scalar_arithmetic():
    x = ExactScalar.of(Fraction(1, 2), Fraction(1, 3))
    y = ExactScalar.of(2, Fraction(-1, 3))
    assert (x + y) == ExactScalar.of(Fraction(5, 2))
    prod = x * y
    # (1/2 + (1/3)r)(2 - (1/3)r) with r^2 = 5: a = 1 - 5/9, b = -1/6 + 2/3
    assert prod == ExactScalar.of(Fraction(4, 9), Fraction(1, 2))
    assert (x / x) == ExactScalar.of(1)
    assert float(ExactScalar.sqrt5()) == pytest.approx(5 ** 0.5)
    assert (2 - ExactScalar.sqrt5()).sign() == -1


def test_exact_sign_examples():
    assert exact_sign(ExactScalar.of(0, 0)) == 0
    assert exact_sign(ExactScalar.of(3, -1)) == 1          # 3 > sqrt5
    v = ExactScalar.of(Fraction(661, 45), Fraction(-32, 5))
    assert exact_sign(v) == 1
    assert float(v) == pytest.approx(0.3781, abs=5e-5)
    assert exact_sign(ExactScalar.of(-3, 1)) == -1
    assert exact_sign(ExactScalar.of(Fraction(-9, 4), 1)) == -1   # 2.25 > sqrt5
    assert exact_sign(ExactScalar.of(-2, 1)) == 1                 # sqrt5 > 2
    assert exact_sign(Fraction(-1, 10 ** 12)) == -1


def test_exact_sign_agrees_with_floats():
    rng = random.Random(31)
    checked = 0
    for _ in range(10000):
        a = Fraction(rng.randint(-5000, 5000), rng.randint(1, 300))
        b = Fraction(rng.randint(-5000, 5000), rng.randint(1, 300))
        x = ExactScalar(a, b)
        fx = float(x)
        if abs(fx) > 1e-6:
            checked += 1
            assert exact_sign(x) == (1 if fx > 0 else -1)
    assert checked > 9000


def test_circulant_and_ones_matrices():
    w3 = circulant_W(3)
    assert all(w3.entry(i, j) == ExactScalar.of(1) for i in range(3) for j in range(3))
    w5 = circulant_W(5)
    row0 = [int(w5.entry(0, j).a) for j in range(5)]
    assert row0 == [1, 1, 0, 0, 1]
    assert w5.is_symmetric()
    with pytest.raises(DimensionTooSmall):
        circulant_W(2)
    with pytest.raises(DimensionTooSmall):
        all_ones_J(0)
    a = adjacency(cycle_graph(5))
    assert [sum(int(a.entry(i, j).a) for j in range(5)) for i in range(5)] == [2] * 5
    assert a.is_symmetric()


def test_exact_matrix_algebra():
    m = ExactMatrix.from_rows([[1, Fraction(1, 2)], [0, 1]])
    ident = ExactMatrix.identity(2)
    assert m @ ident == m
    assert (m - m) == ExactMatrix.from_rows([[0, 0], [0, 0]])
    s = m.scale(ExactScalar.sqrt5())
    assert s.entry(0, 1) == ExactScalar.of(0, Fraction(1, 2))
    assert (s @ s).entry(0, 0) == ExactScalar.of(5)  # (sqrt5 I + nilpotent)^2
    assert m.transpose().entry(1, 0) == ExactScalar.of(Fraction(1, 2))


def test_gamma_inverse_certificates():
    for d in range(2, 21):
        rep = verify_gamma_inverse(d)
        assert rep.passed and rep.details["max_deviation"] == "0"
    with pytest.raises(OutOfRange):
        verify_gamma_inverse(1)


def test_gamma_inverse_is_real_inverse_at_small_d():
    # multiply the other way around too
    for d in (2, 3, 5):
        a = adjacency(gamma_graph(d))
        inv = gamma_inverse_matrix(d)
        assert inv @ a == ExactMatrix.identity(3 * d - 1)


def test_conjugation_certificates():
    for d in range(2, 13):
        rep = verify_conjugation(d)
        assert rep.passed, rep.to_obj()


def test_pentagon_identity():
    rep = verify_pentagon_identity()
    assert rep.passed
    assert rep.details["b_symmetric"] and rep.details["lhs_symmetric"]
    # spot-check one entry of (inv^T B inv) against A_Q / 2
    inv = gamma_inverse_matrix(2)
    from f5lab.algebra import PENTAGON_B_ROWS
    b = ExactMatrix.from_rows(PENTAGON_B_ROWS)
    lhs = inv.transpose() @ b @ inv
    assert lhs.entry(0, 1) == ExactScalar.of(0)
    assert lhs.entry(0, 2) == ExactScalar.of(Fraction(1, 2))
    q = pentagram_graph()
    assert set(q.degrees()) == {2}


def test_quadratic_form_gap_examples():
    c5 = cycle_graph(5)
    assert quadratic_form_gap(c5, [1] * 5, 1) == 0            # constant vector is tight
    # (1,1,1,1,2): form = 1+1+1+2+2 = 7, bound = 2*6*1 - 5 = 7: tight again
    assert quadratic_form_gap(c5, [1, 1, 1, 1, 2], 1) == 0
    assert quadratic_form_gap(c5, [1, 1, 1, 2, 2], 1) == 1
    assert quadratic_form_gap(c5, [Fraction(1, 3)] * 5, 0) == \
        5 * Fraction(1, 9)                                     # z0 = 0: gap is the form itself
    with pytest.raises(NotRegular):
        quadratic_form_gap(build_graph(3, [(0, 1)]), [1, 1, 1], 0)
    with pytest.raises(PreconditionViolated):
        quadratic_form_gap(c5, [1, 1, 1, 1, 2], Fraction(3, 2))
    with pytest.raises(PreconditionViolated):
        quadratic_form_gap(c5, [1] * 5, -1)
    with pytest.raises(OutOfRange):
        quadratic_form_gap(c5, [1] * 4, 0)


def test_quadratic_form_gap_property():
    rng = random.Random(32)
    fams = []
    for m in range(3, 9):
        fams.append(cycle_graph(m))
        fams.append(complement_graph(cycle_graph(m)))
    for d in range(1, 5):
        fams.append(gamma_graph(d))
    for _ in range(500):
        f = rng.choice(fams)
        z0 = Fraction(rng.randint(0, 4), rng.randint(1, 4))
        z = [z0 + Fraction(rng.randint(0, 8), rng.randint(1, 4)) for _ in range(f.n)]
        assert quadratic_form_gap(f, z, z0) >= 0
