"""Exact linear algebra over the rationals and over polynomial rings.

Rational matrices go through plain Gaussian elimination with Fraction
arithmetic.  Matrices with polynomial entries go through fraction-free
(Bareiss) elimination with full pivoting: every intermediate entry is a
minor of the input, divisions are exact, and the pivot count is the rank
over the rational function field.  Kernels of polynomial matrices are
assembled from Cramer-style maximal minors, which keeps every entry a
polynomial of bounded degree.
"""

from __future__ import annotations

from fractions import Fraction as Q

from .poly import Poly

Mat = list[list[Q]]


# ----------------------------------------------------------------------
# rational matrices
# ----------------------------------------------------------------------

def mat(rows) -> Mat:
    return [[Q(x) for x in row] for row in rows]


def rref(rows: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = [[x if isinstance(x, Q) else Q(x) for x in row] for row in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        p = next((i for i in range(r, nr) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nr):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return m, pivots


def rank(rows: Mat) -> int:
    if not rows or not rows[0]:
        return 0
    return len(rref(rows)[1])


def kernel(rows: Mat, ncols: int | None = None) -> list[list[Q]]:
    """Basis of the right kernel; one vector per free column, deterministic."""
    if not rows:
        n = ncols if ncols is not None else 0
        return [[Q(1) if j == i else Q(0) for j in range(n)] for i in range(n)]
    n = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Q(0)] * n
        v[f] = Q(1)
        for r, c in enumerate(pivots):
            v[c] = -red[r][f]
        basis.append(v)
    return basis


class ColumnSolver:
    """Solves ``B x = b`` for a fixed column basis B, exactly.

    Precomputes the row-reduction of B applied to an identity block so each
    solve is a matrix-vector product plus a consistency check.
    """

    def __init__(self, columns: list[list[Q]]):
        self.ncols = len(columns)
        self.nrows = len(columns[0]) if columns else 0
        aug = [[columns[j][i] for j in range(self.ncols)]
               + [Q(1) if k == i else Q(0) for k in range(self.nrows)]
               for i in range(self.nrows)]
        red, pivots = rref(aug)
        bpiv = [p for p in pivots if p < self.ncols]
        if len(bpiv) != self.ncols:
            raise ValueError("columns are not linearly independent")
        self.pivots = bpiv
        self.ops = [row[self.ncols:] for row in red]

    def solve(self, b: list[Q]) -> list[Q] | None:
        """Coordinates of b in the column basis, or None if b is outside."""
        y = [sum((op[i] * b[i] for i in range(self.nrows) if b[i] != 0), Q(0))
             for op in self.ops]
        x = [Q(0)] * self.ncols
        for r, c in enumerate(self.pivots):
            x[c] = y[r]
        for r in range(self.ncols, self.nrows):
            if y[r] != 0:
                return None
        return x


# ----------------------------------------------------------------------
# polynomial matrices (fraction-free)
# ----------------------------------------------------------------------

def _pivot_key(p: Poly) -> tuple[int, int]:
    return (len(p.terms), p.degree())


def bareiss_pivots(rows: list[list[Poly]]) -> tuple[int, list[int], list[int]]:
    """Rank over the fraction field, plus row/column indices of a maximal
    nonsingular submatrix of the input.

    Full pivoting with a smallest-entry heuristic; divisions by the previous
    pivot are exact by the Bareiss identity.
    """
    if not rows or not rows[0]:
        return 0, [], []
    work = [row[:] for row in rows]
    nr, nc = len(work), len(work[0])
    row_idx = list(range(nr))
    col_idx = list(range(nc))
    prev: Poly | None = None
    step = 0
    while step < min(nr, nc):
        best = None
        for i in range(step, nr):
            for j in range(step, nc):
                e = work[i][j]
                if e.is_zero():
                    continue
                key = _pivot_key(e)
                if best is None or key < best[0]:
                    best = (key, i, j)
        if best is None:
            break
        _, pi, pj = best
        work[step], work[pi] = work[pi], work[step]
        row_idx[step], row_idx[pi] = row_idx[pi], row_idx[step]
        if pj != step:
            for row in work:
                row[step], row[pj] = row[pj], row[step]
            col_idx[step], col_idx[pj] = col_idx[pj], col_idx[step]
        pivot = work[step][step]
        for i in range(step + 1, nr):
            head = work[i][step]
            for j in range(step + 1, nc):
                num = pivot * work[i][j] - head * work[step][j]
                work[i][j] = num.div_exact(prev) if prev is not None else num
            work[i][step] = Poly.zero(pivot.nvars)
        prev = pivot
        step += 1
    return step, sorted(row_idx[:step]), sorted(col_idx[:step])


def poly_rank(rows: list[list[Poly]]) -> int:
    return bareiss_pivots(rows)[0]


def poly_det(rows: list[list[Poly]]) -> Poly:
    """Determinant by fraction-free elimination (no pivoting surprises:
    returns the exact determinant including sign)."""
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    nvars = rows[0][0].nvars
    work = [row[:] for row in rows]
    sign = 1
    prev: Poly | None = None
    for step in range(n - 1):
        p = next((i for i in range(step, n) if not work[i][step].is_zero()), None)
        if p is None:
            return Poly.zero(nvars)
        if p != step:
            work[step], work[p] = work[p], work[step]
            sign = -sign
        pivot = work[step][step]
        for i in range(step + 1, n):
            head = work[i][step]
            for j in range(step + 1, n):
                num = pivot * work[i][j] - head * work[step][j]
                work[i][j] = num.div_exact(prev) if prev is not None else num
            work[i][step] = Poly.zero(nvars)
        prev = pivot
    return work[n - 1][n - 1] * sign


def poly_kernel(rows: list[list[Poly]]) -> list[list[Poly]]:
    """Basis of the right kernel over the fraction field, with polynomial
    entries.

    For each non-pivot column f the kernel vector is built from signed
    maximal minors on the pivot rows and columns extended by f; all entries
    are minors of the input, so no divisions occur.
    """
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    r, prow, pcol = bareiss_pivots(rows)
    nvars = rows[0][0].nvars if nr and nc else 0
    free = [c for c in range(nc) if c not in pcol]
    if r == 0:
        out = []
        for f in free:
            v = [Poly.zero(nvars) for _ in range(nc)]
            v[f] = Poly.const(nvars, 1)
            out.append(v)
        return out
    basis = []
    for f in free:
        cols = sorted(pcol + [f])
        v = [Poly.zero(nvars) for _ in range(nc)]
        for s, c in enumerate(cols):
            sub = [[rows[i][c2] for c2 in cols if c2 != c] for i in prow]
            d = poly_det(sub)
            if s % 2:
                d = -d
            v[c] = d
        basis.append(v)
    return basis


def contraction_rank(a_block: list[list[Poly]], b_block: list[list[Poly]]) -> int:
    """Generic rank of the skew matrix ``[[A, B], [-B^T, 0]]``.

    With C a kernel basis of ``B^T`` the rank equals
    ``2*rank(B) + rank(C^T A C)``: column operations against the full-row-rank
    part of B clear everything except the compression of A to ker(B^T).
    """
    d0 = len(a_block)
    bt = [list(col) for col in zip(*b_block)] if d0 and b_block[0] else []
    if not bt:
        return poly_rank(a_block)
    rb = poly_rank(b_block)
    c_basis = poly_kernel(bt)
    if not c_basis:
        return 2 * rb
    compressed = []
    av = [
        [sum((a_block[i][j] * v[j] for j in range(d0) if not v[j].is_zero()),
             Poly.zero(v[0].nvars)) for i in range(d0)]
        for v in c_basis
    ]
    for u in c_basis:
        row = []
        for w_img in av:
            row.append(sum((u[i] * w_img[i] for i in range(d0) if not u[i].is_zero()),
                           Poly.zero(u[0].nvars)))
        compressed.append(row)
    return 2 * rb + poly_rank(compressed)


# ----------------------------------------------------------------------
# small exact matrix utilities (dense, over Q)
# ----------------------------------------------------------------------

def mat_mul(a: Mat, b: Mat) -> Mat:
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def mat_sub(a: Mat, b: Mat) -> Mat:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def commutator(a: Mat, b: Mat) -> Mat:
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def trace(a: Mat) -> Q:
    return sum(a[i][i] for i in range(len(a)))


def trace_pair(a: Mat, b: Mat) -> Q:
    n = len(a)
    return sum(a[i][k] * b[k][i] for i in range(n) for k in range(n))


def is_zero_mat(a: Mat) -> bool:
    return all(x == 0 for row in a for x in row)


def identity(n: int) -> Mat:
    return [[Q(1) if i == j else Q(0) for j in range(n)] for i in range(n)]


def invert(a: Mat) -> Mat:
    """Exact inverse of a nonsingular rational matrix."""
    n = len(a)
    red, pivots = rref([list(row) + [Q(1 if t == i else 0) for t in range(n)]
                        for i, row in enumerate(a)])
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [[red[i][n + j] for j in range(n)] for i in range(n)]


def min_poly_squarefree(a: Mat) -> bool:
    """Whether the minimal polynomial of a rational matrix is squarefree,
    i.e. whether the matrix is semisimple (diagonalizable over the closure)."""
    n = len(a)
    powers = [identity(n)]
    for _ in range(n):
        powers.append(mat_mul(powers[-1], a))
    vecs = [[p[i][j] for i in range(n) for j in range(n)] for p in powers]
    # find the first power dependent on the previous ones
    coeffs: list[Q] | None = None
    for k in range(1, n + 1):
        solver_cols = vecs[:k]
        red, pivots = rref([[solver_cols[j][i] for j in range(k)] + [vecs[k][i]]
                            for i in range(n * n)])
        if all(p < k for p in pivots):
            sol = [Q(0)] * k
            for r, c in enumerate(pivots):
                sol[c] = red[r][k]
            coeffs = sol + [Q(-1)]  # a^k = sum sol_i a^i  =>  p(a) = 0
            break
    assert coeffs is not None
    # minimal polynomial p(t) = t^k - sum sol_i t^i (up to sign); check gcd(p, p') = 1
    p = [-c for c in coeffs]
    dp = [p[i] * i for i in range(1, len(p))]
    return _poly1_gcd_degree(p, dp) == 0


def _poly1_trim(p: list[Q]) -> list[Q]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly1_gcd_degree(p: list[Q], q: list[Q]) -> int:
    p, q = _poly1_trim(p[:]), _poly1_trim(q[:])
    while q:
        # remainder of p by q
        while len(p) >= len(q) and p:
            f = p[-1] / q[-1]
            shift = len(p) - len(q)
            for i, c in enumerate(q):
                p[i + shift] -= f * c
            _poly1_trim(p)
        p, q = q, p
    return len(p) - 1 if p else -1
