"""Invariant generators: classical Casimirs of the matrix algebras, their
top components along the grading (candidate invariants of the contraction),
the abelian-ideal invariant subalgebra for pairs without black nodes, and a
graded kernel search for noncommutativity witnesses.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction as Q

from . import linalg
from .errors import BudgetError, UnsupportedPairError
from .poisson import (bracket_with_coordinate, jacobian_rank_at, pairwise_commuting,
                      poisson_bracket)
from .poly import Poly
from .structure import (LieAlgebra, MatrixRealization, PairRealization, Z2Grading,
                        b_value, contract, sample_covector)


@dataclass
class InvariantSet:
    algebra: LieAlgebra
    polys: list[Poly]
    verified_central: list[bool]
    degrees: list[int]
    meta: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "polys": [p.to_text(self.algebra.labels) for p in self.polys],
            "degrees": self.degrees,
            "verified_central": self.verified_central,
            "meta": {k: v for k, v in self.meta.items()},
        }


# ----------------------------------------------------------------------
# symbolic characteristic coefficients and Pfaffian
# ----------------------------------------------------------------------

def _generic_matrix(mats, nvars: int, rows: range, cols: range) -> list[list[Poly]]:
    """X = sum_i x_i M_i restricted to a block, with polynomial entries."""
    out = [[Poly.zero(nvars) for _ in cols] for _ in rows]
    for t, m in enumerate(mats):
        for a, i in enumerate(rows):
            for b, j in enumerate(cols):
                if m[i][j] != 0:
                    out[a][b] = out[a][b] + Poly.var(nvars, t, m[i][j])
    return out


def char_coefficients(x: list[list[Poly]]) -> dict[int, Poly]:
    """Elementary symmetric functions e_k of the eigenvalues of X, computed
    by the Faddeev-LeVerrier recursion (divisions by integers only)."""
    n = len(x)
    nvars = x[0][0].nvars
    ident = [[Poly.const(nvars, 1 if i == j else 0) for j in range(n)]
             for i in range(n)]
    b = ident
    out: dict[int, Poly] = {}
    for k in range(1, n + 1):
        a = [[sum((x[i][t] * b[t][j] for t in range(n)
                   if not x[i][t].is_zero() and not b[t][j].is_zero()),
                  Poly.zero(nvars)) for j in range(n)] for i in range(n)]
        tr = sum((a[i][i] for i in range(n)), Poly.zero(nvars))
        pk = tr * Q(-1, k)
        out[k] = pk if k % 2 == 0 else -pk   # e_k = (-1)^k p_k
        b = [[a[i][j] + (pk if i == j else Poly.zero(nvars)) for j in range(n)]
             for i in range(n)]
    return out


def pfaffian(m: list[list[Poly]]) -> Poly:
    """Pfaffian of an antisymmetric polynomial matrix, by expansion along the
    first row; normalized so the standard 2x2 block [[0,1],[-1,0]] gives 1."""
    n = len(m)
    nvars = m[0][0].nvars if n else 0
    if n % 2:
        raise ValueError("Pfaffian of an odd-size matrix")
    if n == 0:
        return Poly.const(nvars, 1)
    if n == 2:
        return m[0][1]
    total = Poly.zero(nvars)
    for j in range(1, n):
        if m[0][j].is_zero():
            continue
        keep = [t for t in range(1, n) if t != j]
        sub = [[m[a][b] for b in keep] for a in keep]
        term = m[0][j] * pfaffian(sub)
        total = total + term if j % 2 == 1 else total - term
    return total


def _kind_generators(kind: str, x: list[list[Poly]],
                     pf_matrix=None) -> list[Poly]:
    """Generator list per classical type: degrees 2..n for sl, the even
    characteristic coefficients for sp and so, with the top so coefficient
    of even size replaced by the Pfaffian."""
    coeffs = char_coefficients(x)
    n = len(x)
    if kind == "sl":
        return [coeffs[k] for k in range(2, n + 1)]
    for k in range(1, n + 1, 2):
        if not coeffs[k].is_zero():
            raise AssertionError("odd characteristic coefficient survived")
    if kind == "sp":
        return [coeffs[k] for k in range(2, n + 1, 2)]
    top = n - 1 if n % 2 else n - 2
    gens = [coeffs[k] for k in range(2, top + 1, 2)]
    if n % 2 == 0:
        gens.append(pfaffian(pf_matrix if pf_matrix is not None else x))
    return gens


def _dual_matrices(mats) -> list[list[list[Q]]]:
    """Trace-form dual basis: tr(D_i B_j) = delta_ij.

    The generic element must be written through this identification of the
    dual space with the algebra; coordinates against the plain basis are not
    equivariant unless the basis happens to be self-dual.
    """
    n = len(mats)
    t = [[linalg.trace_pair(mats[i], mats[j]) for j in range(n)] for i in range(n)]
    tinv = linalg.invert(t)
    size = len(mats[0])
    dual = []
    for i in range(n):
        d = [[Q(0)] * size for _ in range(size)]
        for j in range(n):
            c = tinv[j][i]
            if c == 0:
                continue
            for a in range(size):
                for b in range(size):
                    if mats[j][a][b] != 0:
                        d[a][b] += c * mats[j][a][b]
        dual.append(d)
    return dual


def classical_invariants(real: MatrixRealization | PairRealization) -> InvariantSet:
    """Free generators of the invariant algebra of the matrix algebra:
    characteristic coefficients, plus the Pfaffian for even orthogonal types.
    All generators are verified central symbolically."""
    if isinstance(real, PairRealization):
        real = real.realization
    alg = real.algebra
    nvars = alg.dim
    mats = _dual_matrices(real.matrices)
    size = len(mats[0])
    kind = real.kind
    if kind.startswith("diag_"):
        base = kind[5:]
        half = real.size
        x1 = _generic_matrix(mats, nvars, range(half), range(half))
        x2 = _generic_matrix(mats, nvars, range(half, 2 * half),
                             range(half, 2 * half))
        polys = _kind_generators(base, x1) + _kind_generators(base, x2)
    elif kind == "so_split":
        # X itself is not antisymmetric, but form*X is; the Pfaffian lives there
        fmats = [linalg.mat_mul(real.form, m) for m in mats]
        x = _generic_matrix(mats, nvars, range(size), range(size))
        fx = _generic_matrix(fmats, nvars, range(size), range(size))
        polys = _kind_generators("so", x, pf_matrix=fx)
    else:
        x = _generic_matrix(mats, nvars, range(size), range(size))
        polys = _kind_generators(kind, x)

    flags = [verify_central(alg, p) for p in polys]
    if not all(flags):
        raise AssertionError("classical invariant failed the centrality check")
    return InvariantSet(alg, polys, flags, [p.degree() for p in polys],
                        meta={"kind": kind})


# ----------------------------------------------------------------------
# top components and the contraction invariant pool
# ----------------------------------------------------------------------

def top_component(f: Poly, grading: Z2Grading) -> Poly:
    """The sum of terms of maximal total degree in the odd coordinates; a
    candidate invariant of the contraction, returned unverified."""
    if f.is_zero():
        raise ValueError("top component of the zero polynomial")
    if not f.is_homogeneous():
        raise ValueError("top component needs a homogeneous input")
    odd = set(grading.odd_idx)
    w = f.weighted_degree(odd)
    return f.weight_component(odd, w)


def verify_central(k: LieAlgebra, f: Poly) -> bool:
    """True iff {x_i, f} = 0 symbolically for every coordinate."""
    return all(bracket_with_coordinate(k, i, f).is_zero() for i in range(k.dim))


def g1_invariants_check(k: LieAlgebra, grading: Z2Grading, f: Poly) -> bool:
    """True iff f commutes with every odd coordinate."""
    return all(bracket_with_coordinate(k, i, f).is_zero() for i in grading.odd_idx)


def _products_of_degree(gens: list[Poly], d: int) -> list[Poly]:
    """All products of at least two of the given polynomials with total
    degree exactly d (repetition allowed)."""
    out: list[Poly] = []

    def rec(i: int, remaining: int, acc: list[Poly]):
        if remaining == 0:
            if len(acc) >= 2:
                prod = acc[0]
                for p in acc[1:]:
                    prod = prod * p
                out.append(prod)
            return
        if i >= len(gens):
            return
        rec(i + 1, remaining, acc)
        dd = gens[i].degree()
        if 0 < dd <= remaining:
            rec(i, remaining - dd, acc + [gens[i]])

    rec(0, d, [])
    return out


def _weight_echelon_tops(polys: list[Poly], grading: Z2Grading) -> list[Poly]:
    """Top components of the invariants after weight-graded reduction.

    Each invariant is reduced modulo the span of products of lower-degree
    invariants and modulo its degree-mates, with monomials ordered by
    descending odd-weight.  Raw top components can coincide (the diagonal
    pairs) or degenerate into powers of lower tops (the quaternionic pairs);
    the reduction exposes one genuinely new top per generator.
    """
    odd = set(grading.odd_idx)
    by_degree: dict[int, list[Poly]] = {}
    for p in polys:
        by_degree.setdefault(p.degree(), []).append(p)
    out: list[Poly] = []
    earlier: list[Poly] = []
    for d in sorted(by_degree):
        group = by_degree[d]
        prods = _products_of_degree(earlier, d)
        monomials = sorted({e for p in prods + group for e in p.terms},
                           key=lambda e: (-sum(e[i] for i in odd), e))
        rows = [[p.terms.get(e, Q(0)) for e in monomials] for p in prods + group]
        red, pivots = linalg.rref(rows)
        prod_pivots = set(linalg.rref([[p.terms.get(e, Q(0)) for e in monomials]
                                       for p in prods])[1]) if prods else set()
        for r, c in enumerate(pivots):
            if c in prod_pivots:
                continue
            poly = Poly(group[0].nvars,
                        {monomials[cc]: red[r][cc] for cc in range(len(monomials))
                         if red[r][cc] != 0})
            out.append(top_component(poly, grading))
        earlier.extend(group)
    return out


def contraction_invariants(pr: PairRealization, seed: int = 1,
                           trials: int = 6) -> InvariantSet:
    """Verified central generators of the contraction's Poisson centre,
    obtained as weight-echelon top components of the classical invariants.

    The returned metadata carries a Jacobian rank certificate at a sampled
    point; ``meta['full']`` is set when the pool has full rank (one free
    generator per classical invariant, degree sum b)."""
    inv_g = classical_invariants(pr)
    k = contract(pr.g, pr.grading)
    tops = _weight_echelon_tops(inv_g.polys, pr.grading)
    flags = [verify_central(k, p) for p in tops]
    if not all(flags):
        raise AssertionError("top component is not central in the contraction")
    rng = random.Random(seed)
    best_rank, best_point = 0, None
    for _ in range(trials):
        mu = sample_covector(k.dim, rng, bound=10 ** 6)
        r = jacobian_rank_at(tops, mu)
        if r > best_rank:
            best_rank, best_point = r, mu
        if best_rank == len(tops):
            break
    meta = {
        "certified_rank": best_rank,
        "count": len(tops),
        "sum_degrees": sum(p.degree() for p in tops),
        "b": int(b_value(k)),
        "seed": seed,
        "sample_point": [str(c) for c in (best_point or [])],
        "full": best_rank == len(tops) == pr.rank_g,
    }
    return InvariantSet(k, tops, flags, [p.degree() for p in tops], meta)


def nreg_subalgebra(pr: PairRealization, seed: int = 1) -> InvariantSet:
    """Free generators of the odd-coordinate invariant subalgebra for pairs
    whose diagram has no black nodes: the odd coordinate functions plus
    arrow-many central polynomials chosen greedily for Jacobian rank b(k)."""
    if not pr.satake.is_n_regular():
        raise UnsupportedPairError(
            f"{pr.pair} is not regular at the nilpotent level: "
            "its diagram has black nodes")
    k = contract(pr.g, pr.grading)
    coords = [Poly.var(k.dim, i) for i in pr.grading.odd_idx]
    pool = contraction_invariants(pr, seed=seed)
    target = int(b_value(k))
    m = len(pr.satake.arrows)
    rng = random.Random(seed)
    points = [sample_covector(k.dim, rng, bound=10 ** 6) for _ in range(4)]

    def rank_of(polys: list[Poly]) -> int:
        return max(jacobian_rank_at(polys, mu) for mu in points)

    selected = list(coords)
    current = rank_of(selected)
    extras: list[Poly] = []
    for cand in sorted(pool.polys, key=lambda p: p.degree()):
        if current >= target:
            break
        trial = selected + [cand]
        r = rank_of(trial)
        if r > current:
            selected, current, extras = trial, r, extras + [cand]
    if current != target or len(selected) != len(coords) + m:
        raise UnsupportedPairError(
            f"invariant pool is insufficient for {pr.pair}: achieved rank "
            f"{current} with {len(selected)} generators, want rank {target} "
            f"with {len(coords) + m}")
    ok, witness = pairwise_commuting(k, selected)
    if not ok:
        raise AssertionError("selected generators fail to commute")
    flags = [g1_invariants_check(k, pr.grading, p) for p in selected]
    return InvariantSet(k, selected, flags,
                        [p.degree() for p in selected],
                        meta={"certified_rank": current, "m": m, "b": target,
                              "seed": seed, "count": len(selected)})


def _monomials(nvars: int, degree: int):
    for combo in itertools.combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        yield tuple(e)


def noncommutativity_witness(pr: PairRealization, degree_bound: int = 2,
                             max_dim: int = 40):
    """Searches the odd-coordinate invariants up to the degree bound for a
    pair with a nonzero mutual bracket.

    Returns (f, g, bracket) or None when the search is inconclusive within
    the bound.  Each graded piece is the exact kernel of the stacked
    bracket-with-odd-coordinates map.
    """
    k = contract(pr.g, pr.grading)
    if k.dim > max_dim:
        raise BudgetError(f"dimension {k.dim} exceeds the witness search cap")
    odd = list(pr.grading.odd_idx)
    candidates: list[Poly] = []
    for d in range(1, degree_bound + 1):
        monos = list(_monomials(k.dim, d))
        cols = {e: c for c, e in enumerate(monos)}
        rows: list[list[Q]] = []
        row_index: dict[tuple[int, tuple], int] = {}
        mat_rows: list[dict[int, Q]] = []
        for e_i in odd:
            for c, mono in enumerate(monos):
                br = bracket_with_coordinate(k, e_i, Poly(k.dim, {mono: Q(1)}))
                for out_e, coeff in br.terms.items():
                    key = (e_i, out_e)
                    if key not in row_index:
                        row_index[key] = len(mat_rows)
                        mat_rows.append({})
                    mat_rows[row_index[key]][c] = coeff
        dense = [[row.get(c, Q(0)) for c in range(len(monos))] for row in mat_rows]
        for kv in linalg.kernel(dense, ncols=len(monos)):
            candidates.append(Poly(k.dim, {monos[c]: kv[c]
                                           for c in range(len(monos)) if kv[c] != 0}))
    for i in range(len(candidates)):
        for j in range(i + 1, len(candidates)):
            br = poisson_bracket(k, candidates[i], candidates[j])
            if not br.is_zero():
                return candidates[i], candidates[j], br
    return None
