import random
from fractions import Fraction as Q

import pytest

from z2poisson import linalg
from z2poisson.poly import Poly


def rand_mat(rng, rows, cols, lo=-5, hi=5):
    return [[Q(rng.randint(lo, hi)) for _ in range(cols)] for _ in range(rows)]


def test_rref_and_rank():
    m = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert linalg.rank(m) == 2
    red, pivots = linalg.rref(m)
    assert pivots == [0, 1]


def test_kernel_annihilates():
    rng = random.Random(2)
    for _ in range(25):
        m = rand_mat(rng, 4, 6)
        for v in linalg.kernel(m):
            assert all(sum(row[j] * v[j] for j in range(6)) == 0 for row in m)
        assert linalg.rank(m) + len(linalg.kernel(m)) == 6


def test_column_solver():
    cols = [[Q(1), Q(0), Q(2)], [Q(0), Q(1), Q(1)]]
    s = linalg.ColumnSolver(cols)
    assert s.solve([Q(3), Q(4), Q(10)]) == [Q(3), Q(4)]
    assert s.solve([Q(0), Q(0), Q(1)]) is None
    with pytest.raises(ValueError):
        linalg.ColumnSolver([[Q(1), Q(2)], [Q(2), Q(4)]])


def test_invert():
    m = [[Q(2), Q(1)], [Q(1), Q(1)]]
    inv = linalg.invert(m)
    assert linalg.mat_mul(m, inv) == linalg.identity(2)
    with pytest.raises(ValueError):
        linalg.invert([[Q(1), Q(1)], [Q(1), Q(1)]])


def _const_poly_matrix(m, nvars=2):
    return [[Poly.const(nvars, x) for x in row] for row in m]


def test_poly_rank_on_constant_matrices_matches_rational_rank():
    rng = random.Random(9)
    for _ in range(20):
        m = rand_mat(rng, 4, 5, -3, 3)
        assert linalg.poly_rank(_const_poly_matrix(m)) == linalg.rank(m)


def test_poly_rank_symbolic():
    x = Poly.var(2, 0)
    y = Poly.var(2, 1)
    zero = Poly.zero(2)
    assert linalg.poly_rank([[x, y], [y, x]]) == 2
    assert linalg.poly_rank([[x, y], [x, y]]) == 1
    assert linalg.poly_rank([[zero, zero], [zero, zero]]) == 0


def test_poly_det():
    x = Poly.var(2, 0)
    y = Poly.var(2, 1)
    assert linalg.poly_det([[x, y], [y, x]]) == x * x - y * y
    # antisymmetric swap picks up the sign
    one = Poly.const(2, 1)
    zero = Poly.zero(2)
    assert linalg.poly_det([[zero, one], [one, zero]]) == -one


def test_poly_kernel_annihilates_symbolically():
    x = Poly.var(3, 0)
    y = Poly.var(3, 1)
    z = Poly.var(3, 2)
    m = [[x, y, z]]
    basis = linalg.poly_kernel(m)
    assert len(basis) == 2
    for v in basis:
        s = sum((m[0][j] * v[j] for j in range(3)), Poly.zero(3))
        assert s.is_zero()


def test_contraction_rank_agrees_with_direct_elimination():
    # independent oracle: assemble the full skew matrix and eliminate it
    rng = random.Random(17)
    nvars = 4
    for _ in range(12):
        d0, d1 = rng.randint(1, 3), rng.randint(1, 3)
        a = [[Poly.zero(nvars) for _ in range(d0)] for _ in range(d0)]
        for i in range(d0):
            for j in range(i + 1, d0):
                p = Poly.linear([rng.randint(-2, 2) for _ in range(nvars)])
                a[i][j] = p
                a[j][i] = -p
        b = [[Poly.linear([rng.randint(-2, 2) for _ in range(nvars)])
              for _ in range(d1)] for _ in range(d0)]
        full = [[Poly.zero(nvars) for _ in range(d0 + d1)] for _ in range(d0 + d1)]
        for i in range(d0):
            for j in range(d0):
                full[i][j] = a[i][j]
            for j in range(d1):
                full[i][d0 + j] = b[i][j]
                full[d0 + j][i] = -b[i][j]
        assert linalg.contraction_rank(a, b) == linalg.poly_rank(full)


def test_min_poly_squarefree():
    nilpotent = [[Q(0), Q(1)], [Q(0), Q(0)]]
    assert not linalg.min_poly_squarefree(nilpotent)
    semisimple = [[Q(0), Q(1)], [Q(1), Q(0)]]
    assert linalg.min_poly_squarefree(semisimple)
    assert linalg.min_poly_squarefree([[Q(0), Q(0)], [Q(0), Q(0)]])
