"""Deformed rings E_{a,b}, the ideals I and J, and the determinant identities
relating reduced and unreduced Haiman determinants.

Rings are modeled inside the free ring k[X, V] with an invariance predicate.
Graded pieces are spanned by products of monomial symmetric functions (one
per block of letters) with parameter monomials.  Because everything in sight
is block symmetric, coefficient vectors are restricted to block-dominant
monomials, which is injective on block-symmetric polynomials.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product

import flint

from .coords import params, reduction_pi, vred_images, vL_b
from .frobdem import apply_word, sylvester_word
from .haiman import hdet, key_cells, key_partitions, enumerate_shapes, sc_order, Shape, monomial_list
from .polycore import Poly, Registry, Weight, WindowExceeded, det, div_by_difference, _norm
from .symfun import (Partition, alphabet, dual_complement, divide_by_vandermonde, hook_schur,
                     monomial_symmetric, partitions_in_box, partitions_of, vandermonde)


# ------------------------------------------------------------------ windows

@dataclass(frozen=True)
class IdealWindow:
    """Numerator x-degree bound (as a q-degree) and parameter-degree bound."""
    qmax: int
    vmax: int = 3

    @classmethod
    def default(cls, a, b):
        return cls(2 * (a + b) + 4, 3)


# ------------------------------------------------------------------ rings

class DeformedRing:
    """Sym(X_1|...|X_m)[V] with consecutive letters x1..xN split into blocks."""

    def __init__(self, blocks, pnames, extra=()):
        self.blocks = tuple(blocks)
        self.N = sum(self.blocks)
        self.xs = [f"x{i}" for i in range(1, self.N + 1)]
        self.pnames = list(pnames)
        self.reg = Registry(self.xs + self.pnames + list(extra))
        self._basis = {}
        idx, start = [], 0
        for bsz in self.blocks:
            idx.append([self.reg.index[x] for x in self.xs[start:start + bsz]])
            start += bsz
        self.block_index = idx
        self.pweights = [self.reg.weights[self.reg.index[p]] for p in self.pnames]

    def block_vars(self):
        out, start = [], 0
        for bsz in self.blocks:
            out.append(self.xs[start:start + bsz])
            start += bsz
        return out

    def dominant(self, e) -> bool:
        for blk in self.block_index:
            for i, j in zip(blk, blk[1:]):
                if e[i] < e[j]:
                    return False
        return True

    def is_invariant(self, p: Poly) -> bool:
        for blk in self.block_vars():
            for x, y in zip(blk, blk[1:]):
                if p.swap(x, y) != p:
                    return False
        return True

    def param_monomials(self, n):
        return list(combinations_with_replacement(range(len(self.pnames)), n))

    def basis(self, w: Weight):
        """Spanning set (in fact a basis) of the weight-w piece."""
        if w in self._basis:
            return self._basis[w]
        out = []
        if w.a == 0 and w.t >= 0 and w.t % 2 == 0:
            n = w.t // 2
            reg = self.reg
            for pm in self.param_monomials(n):
                qv = sum(self.pweights[i].q for i in pm)
                if (w.q - qv) % 2:
                    continue
                d = (w.q - qv) // 2
                if d < 0:
                    continue
                pmono = reg.one()
                for i in pm:
                    pmono = pmono * reg.var(self.pnames[i])
                for parts in self._block_partitions(d):
                    p = pmono
                    for lam, vs in zip(parts, self.block_vars()):
                        if lam:
                            p = p * monomial_symmetric(lam, vs, reg)
                    out.append(p)
        self._basis[w] = out
        return out

    def _block_partitions(self, d):
        m = len(self.blocks)

        def rec(i, left):
            if i == m - 1:
                for lam in partitions_of(left, self.blocks[i]):
                    yield [lam]
                return
            for k in range(left + 1):
                for lam in partitions_of(k, self.blocks[i]):
                    for rest in rec(i + 1, left - k):
                        yield [lam] + rest
        if m == 0:
            return [[]] if d == 0 else []
        return list(rec(0, d))

    def dim(self, w: Weight) -> int:
        return len(self.basis(w))


def eab_ring(a: int, b: int, extra=()):
    return DeformedRing((a, b), params("v_L", a) + params("v_R", b), extra)


def eals_ring(a: int, l: int, s: int):
    """E_{a,(l,s)} = Sym(X1|L|B)[V_L^(a), V_R^(l+s)]."""
    blocks = tuple(x for x in (a, l, s) if x)
    return DeformedRing(blocks, params("v_L", a) + params("v_R", l + s))


# ------------------------------------------------------------ linear algebra

def _restricted_rows(polys, ring: DeformedRing):
    cols, rows = {}, []
    for p in polys:
        row = {}
        for e, c in p.terms.items():
            if ring.dominant(e):
                j = cols.setdefault(e, len(cols))
                row[j] = c
        rows.append(row)
    return rows, len(cols), cols


def _fmpz_from_sparse(rows, ncols):
    dense = []
    for row in rows:
        den = 1
        for c in row.values():
            if isinstance(c, Fraction):
                den = den * c.denominator // _gcd(den, c.denominator)
        r = [0] * ncols
        for j, c in row.items():
            r[j] = int(c * den)
        dense.extend(r)
    return flint.fmpz_mat(len(rows), ncols, dense)


def _gcd(a, b):
    from math import gcd
    return gcd(a, b)


def span_rank(polys, ring: DeformedRing) -> int:
    polys = [p for p in polys if p.terms]
    if not polys:
        return 0
    rows, n, _ = _restricted_rows(polys, ring)
    if n == 0:
        return 0
    return _fmpz_from_sparse(rows, n).rank()


def certify(span, targets, ring: DeformedRing):
    """For each target, rational coefficients c with sum c_i span_i = target, or None."""
    span = list(span)
    if not targets:
        return []
    allp = span + list(targets)
    rows, ncols, _ = _restricted_rows(allp, ring)
    n, m = len(span), len(targets)
    if ncols == 0:
        return [[0] * n if not t.terms else None for t in targets]
    # columns of the system are the polynomials; rows are monomials
    entries = [[Fraction(0)] * (n + m) for _ in range(ncols)]
    for j, row in enumerate(rows):
        for i, c in row.items():
            entries[i][j] = Fraction(c)
    M = flint.fmpq_mat(ncols, n + m, [flint.fmpq(x.numerator, x.denominator) for r in entries for x in r])
    R, rk = M.rref()
    pivots = []
    for i in range(rk):
        pivots.append(next(j for j in range(n + m) if R[i, j] != 0))
    bad = {p - n for p in pivots if p >= n}
    out = []
    for k in range(m):
        if bad:
            # a pivot in some target column: fall back to an individual solve
            out.append(_certify_one(span, targets[k], ring))
            continue
        sol = [0] * n
        for i, p in enumerate(pivots):
            v = R[i, n + k]
            sol[p] = _norm(Fraction(int(v.p), int(v.q)))
        out.append(sol)
    return out


def _certify_one(span, target, ring):
    r = certify_rows(span, target, ring)
    return r


def certify_rows(span, target, ring):
    allp = list(span) + [target]
    rows, ncols, _ = _restricted_rows(allp, ring)
    n = len(span)
    entries = [[Fraction(0)] * (n + 1) for _ in range(ncols)]
    for j, row in enumerate(rows):
        for i, c in row.items():
            entries[i][j] = Fraction(c)
    if ncols == 0:
        return [0] * n
    M = flint.fmpq_mat(ncols, n + 1, [flint.fmpq(x.numerator, x.denominator) for r in entries for x in r])
    R, rk = M.rref()
    sol = [0] * n
    for i in range(rk):
        p = next(j for j in range(n + 1) if R[i, j] != 0)
        if p == n:
            return None
        v = R[i, n]
        sol[p] = _norm(Fraction(int(v.p), int(v.q)))
    return sol


# ------------------------------------------------------------------ ideals

@dataclass
class GradedIdeal:
    ring: DeformedRing
    generators: list
    labels: list = field(default_factory=list)

    def __post_init__(self):
        self.generators = [g for g in self.generators if g.terms]
        for g in self.generators:
            if g.weight() is None:
                raise ValueError("generators must be homogeneous")
        self._span = {}

    def spanning(self, w: Weight):
        """[(generator index, basis element, product)] spanning the weight-w piece."""
        if w in self._span:
            return self._span[w]
        out = []
        for gi, g in enumerate(self.generators):
            for e in self.ring.basis(w - g.weight()):
                out.append((gi, e, e * g))
        self._span[w] = out
        return out

    def dim(self, w: Weight) -> int:
        return span_rank([p for _, _, p in self.spanning(w)], self.ring)

    def member(self, p: Poly):
        """(ok, certificate) with certificate {generator index: coefficient}."""
        return self.member_many([p])[0]

    def member_many(self, targets):
        by_w = {}
        for k, t in enumerate(targets):
            if not t.terms:
                continue
            w = t.weight()
            if w is None:
                raise ValueError("target must be homogeneous")
            by_w.setdefault(w, []).append(k)
        out = [(True, {}) for _ in targets]
        for w, ks in by_w.items():
            sp = self.spanning(w)
            sols = certify([p for _, _, p in sp], [targets[k] for k in ks], self.ring)
            for k, sol in zip(ks, sols):
                if sol is None:
                    out[k] = (False, None)
                    continue
                cert = {}
                for (gi, e, _), c in zip(sp, sol):
                    if c:
                        cert[gi] = cert.get(gi, self.ring.reg.zero()) + e.scale(c)
                # independent recheck of the certificate
                total = sum((c * self.generators[gi] for gi, c in cert.items()), self.ring.reg.zero())
                if total != targets[k]:
                    raise ArithmeticError("certificate does not reassemble the target")
                out[k] = (True, cert)
        return out

    def hilbert(self, weights):
        return {w: self.dim(w) for w in weights}


def hilbert_weights(qmin, qmax, vmax):
    return [Weight(q, 2 * n, 0) for n in range(vmax + 1) for q in range(qmin, qmax + 1, 2)]


def default_hilbert_weights(a, b, qmax=None, vmax=3):
    qmax = 2 * (a + b) + 4 if qmax is None else qmax
    return hilbert_weights(-2 * vmax * max(a, b, 1), qmax, vmax)


# ------------------------------------------------------------ y expansions

def y_expansions(ring: DeformedRing, strands):
    """strands: list of (letter indices, parameter prefix, count)."""
    reg = ring.reg
    out = {}
    for letters, pre, cnt in strands:
        for i in letters:
            xi = reg.var(f"x{i}")
            out[f"y{i}"] = sum((xi ** (r - 1) * reg.var(f"{pre}_{r}") for r in range(1, cnt + 1)), reg.zero())
    return out


def eab_y(ring: DeformedRing, a: int, b: int):
    return y_expansions(ring, [(range(1, a + 1), "v_L", a), (range(a + 1, a + b + 1), "v_R", b)])


def haiman_ratio(cells, ring: DeformedRing, yimg: dict, blocks_vars, order_points=None):
    """hdet(cells) with y's expanded, divided by the block Vandermondes."""
    N = len(cells)
    pts = order_points or list(range(1, N + 1))
    big = ring.reg.extend([f"y{i}" for i in pts])
    f = hdet(cells, [f"x{i}" for i in pts], [f"y{i}" for i in pts], big)
    f = f.subs({k: v.embed(big) for k, v in yimg.items() if k in big})
    f = f.restrict(ring.reg)
    for vs in blocks_vars:
        if len(vs) > 1:
            f = divide_by_vandermonde(f, vs)
    return f


def key_generators(a: int, b: int, ring: DeformedRing | None = None, yimg=None):
    """[((l, lam), Delta_Key / (Delta(X1) Delta(X2)))], 2^b of them."""
    if a < b:
        raise ValueError("need a >= b; swap the colors")
    ring = ring or eab_ring(a, b)
    yimg = yimg or eab_y(ring, a, b)
    X1, X2 = [f"x{i}" for i in range(1, a + 1)], [f"x{i}" for i in range(a + 1, a + b + 1)]
    return [((l, lam), haiman_ratio(key_cells(a, b, l, lam), ring, yimg, [X1, X2]))
            for l, lam in key_partitions(a, b)]


def key_ideal(a: int, b: int) -> GradedIdeal:
    ring = eab_ring(a, b)
    gens = key_generators(a, b, ring)
    return GradedIdeal(ring, [g for _, g in gens], [lab for lab, _ in gens])


def shapes_in_window(N: int, xmax: int, ymax: int):
    """Sets of N distinct cells with sum of x-exponents <= xmax and of y-exponents <= ymax."""
    cells = [(i, j) for j in range(ymax + 1) for i in range(xmax + 1)]
    cells.sort(key=lambda c: (c[1], c[0]))
    out = []

    def rec(start, acc, sx, sy):
        if len(acc) == N:
            out.append(tuple(acc))
            return
        for k in range(start, len(cells)):
            i, j = cells[k]
            if sx + i <= xmax and sy + j <= ymax:
                rec(k + 1, acc + [cells[k]], sx + i, sy + j)
    rec(0, [], 0, 0)
    return out


def antisym_generators(a: int, b: int, window: IdealWindow | None = None, ring=None):
    """[(cells, Alt(x^alpha y^beta)/(Delta(X1) Delta(X2)))] for shapes within the window."""
    window = window or IdealWindow.default(a, b)
    ring = ring or eab_ring(a, b)
    yimg = eab_y(ring, a, b)
    X1, X2 = [f"x{i}" for i in range(1, a + 1)], [f"x{i}" for i in range(a + 1, a + b + 1)]
    out = []
    for cells in shapes_in_window(a + b, window.qmax // 2, window.vmax):
        g = haiman_ratio(list(cells), ring, yimg, [X1, X2])
        if g.terms:
            out.append((cells, g))
    return out


def ideal_equality_check(a: int, b: int, window: IdealWindow | None = None):
    """Every antisymmetric generator in the window lies in the key ideal.

    Returns (all_ok, [(cells, ok, certificate)]).
    """
    I = key_ideal(a, b)
    gens = antisym_generators(a, b, window, I.ring)
    res = I.member_many([g for _, g in gens])
    rows = [(cells, ok, cert) for (cells, _), (ok, cert) in zip(gens, res)]
    return all(ok for _, ok, _ in rows), rows


def antisym_ideal(a: int, b: int, window: IdealWindow | None = None) -> GradedIdeal:
    ring = eab_ring(a, b)
    gens = antisym_generators(a, b, window, ring)
    return GradedIdeal(ring, [g for _, g in gens], [c for c, _ in gens])


# ------------------------------------------------- interpolation polynomials

def interpolation_polynomial(a: int, r: int, s: int, reg: Registry | None = None):
    """Coefficients [c_1..c_a] of m^{r,s}(z) = sum_t c_t z^(t-1) over E_{a,0}.

    Cramer's rule on the Vandermonde system, with y_i = sum_k x_i^(k-1) v_L_k;
    the division by the Vandermonde is exact, which certifies the
    coefficients lie in E_{a,0}.
    """
    reg = reg or Registry([f"x{i}" for i in range(1, a + 1)] + params("v_L", a))
    X1 = [f"x{i}" for i in range(1, a + 1)]
    big = reg.extend([f"y{i}" for i in range(1, a + 1)])
    yimg = {f"y{i}": sum((big.var(f"x{i}") ** (k - 1) * big.var(f"v_L_{k}") for k in range(1, a + 1)), big.zero())
            for i in range(1, a + 1)}
    sign = (-1) ** (a * (a - 1) // 2)
    coeffs = []
    for t in range(1, a + 1):
        cells = [(e, 0) for e in range(a)]
        cells[t - 1] = (r, s)
        f = hdet(cells, X1, [f"y{i}" for i in range(1, a + 1)], big)
        f = f.subs(yimg).restrict(reg)
        if a > 1:
            f = divide_by_vandermonde(f, X1)
        coeffs.append(f.scale(sign))
    return coeffs


def eval_interpolation(coeffs, x: Poly) -> Poly:
    out = x.reg.zero()
    for t, c in enumerate(coeffs):
        out = out + c.embed(x.reg) * x ** t
    return out


def interpolation_check(a: int, r: int, s: int) -> bool:
    reg = Registry([f"x{i}" for i in range(1, a + 1)] + params("v_L", a))
    cs = interpolation_polynomial(a, r, s, reg)
    for i in range(1, a + 1):
        xi = reg.var(f"x{i}")
        yi = sum((xi ** (k - 1) * reg.var(f"v_L_{k}") for k in range(1, a + 1)), reg.zero())
        if eval_interpolation(cs, xi) != xi ** r * yi ** s:
            return False
    return True


def mc0_closed_form(a: int, c: int, reg: Registry):
    """m^{c,0} coefficients for c >= a via hook Schur functions of X1."""
    X1 = alphabet("X1", [f"x{i}" for i in range(1, a + 1)])
    return [hook_schur(c - a, a - t, X1, reg).scale((-1) ** (a - t)) for t in range(1, a + 1)]


# -------------------------------------------------------- monomial difference

def ybar_images(a: int, b: int, reg: Registry):
    vr = vred_images(a, b, reg, primes=False)
    return {i: sum((reg.var(f"x{i}") ** (k - 1) * vr[k - 1] for k in range(1, b + 1)), reg.zero())
            for i in range(a + 1, a + b + 1)}


def monomial_difference_check(a: int, b: int, r: int) -> bool:
    """x_j^r y_j - m^{r,1}(x_j) = x_j^r ybar_j + sum_{k=a-r+1}^a (x_j^(r+k-1) - m^{r+k-1,0}(x_j)) v_L_k."""
    ring = eab_ring(a, b)
    reg = ring.reg
    yimg = eab_y(ring, a, b)
    yb = ybar_images(a, b, reg)
    m_r1 = interpolation_polynomial(a, r, 1, reg)
    for j in range(a + 1, a + b + 1):
        xj = reg.var(f"x{j}")
        lhs = xj ** r * yimg[f"y{j}"] - eval_interpolation(m_r1, xj)
        rhs = xj ** r * yb[j]
        for k in range(max(1, a - r + 1), a + 1):
            c = r + k - 1
            rhs = rhs + (xj ** c - eval_interpolation(interpolation_polynomial(a, c, 0, reg), xj)) * reg.var(f"v_L_{k}")
        if lhs != rhs:
            return False
    return True


# ------------------------------------------------------ Schur complement

def schur_complement_check(n: int, m: int, seed: int = 0, bound: int = 9) -> bool:
    """det(M) = det(A) det(D - C A^-1 B) on a random integer block matrix."""
    rng = random.Random(seed)
    while True:
        rows = [[rng.randint(-bound, bound) for _ in range(n + m)] for _ in range(n + m)]
        A = flint.fmpq_mat([r[:n] for r in rows[:n]])
        if A.det() != 0:
            break
    M = flint.fmpq_mat(rows)
    B = flint.fmpq_mat([r[n:] for r in rows[:n]])
    C = flint.fmpq_mat([r[:n] for r in rows[n:]])
    D = flint.fmpq_mat([r[n:] for r in rows[n:]])
    S = D - C * A.inv() * B
    # oracle: direct determinant
    return M.det() == A.det() * S.det()


def sc_block_matrix(a: int, b: int, S: Shape, ring: DeformedRing):
    """M_S: rows x_j^s - m^{s,0}(x_j) and x_j^r y_j - m^{r,1}(x_j) over x_j in X2 (SC order)."""
    reg = ring.reg
    yimg = eab_y(ring, a, b)
    rows = [c for c in sc_order(S) if not (c[1] == 0 and c[0] < a)]
    M = []
    for (e, s) in rows:
        m = interpolation_polynomial(a, e, s, reg)
        row = []
        for j in range(a + 1, a + b + 1):
            xj = reg.var(f"x{j}")
            row.append(xj ** e * (yimg[f"y{j}"] ** s) - eval_interpolation(m, xj))
        M.append(row)
    return rows, M


def shape_poly(S: Shape, ring: DeformedRing, a: int, b: int, reduced=False):
    """Delta_S in SC row order, y expanded, optionally reduced by pi."""
    N = a + b
    yimg = eab_y(ring, a, b)
    if reduced:
        yb = ybar_images(a, b, ring.reg)
        yimg = {f"y{i}": (ring.reg.zero() if i <= a else yb[i]) for i in range(1, N + 1)}
    big = ring.reg.extend([f"y{i}" for i in range(1, N + 1)])
    f = hdet(sc_order(S), [f"x{i}" for i in range(1, N + 1)], [f"y{i}" for i in range(1, N + 1)], big)
    return f.subs({k: v.embed(big) for k, v in yimg.items()}).restrict(ring.reg)


def sc_shape_check(a: int, b: int, S: Shape) -> bool:
    """Delta_S = det(A) det(M_S), A the ascending Vandermonde on X1."""
    ring = eab_ring(a, b)
    reg = ring.reg
    _, M = sc_block_matrix(a, b, S, ring)
    detA = hdet([(e, 0) for e in range(a)], [f"x{i}" for i in range(1, a + 1)], reg=reg)
    return shape_poly(S, ring, a, b) == detA * (det(M) if M else reg.one())


def _sort_sign(rows):
    key = [(c[1], c[0]) for c in rows]
    if len(set(key)) != len(key):
        return 0, None
    inv = sum(1 for i in range(len(key)) for j in range(i + 1, len(key)) if key[i] > key[j])
    return (-1 if inv % 2 else 1), sorted(rows, key=lambda c: (c[1], c[0]))


def unreduced_vs_reduced(a: int, b: int, S: Shape, ring: DeformedRing | None = None, verify=True):
    """Coefficients c_{S,R} in k[V_L] with Delta_S = pi(Delta_S) + sum_R c_{S,R} pi(Delta_R).

    Expands each y-row of M_S by the monomial-difference identity: either it
    becomes reduced, or it turns into the x-row x^(r+k-1) with coefficient
    v_L_k.  Returns ({R: c}, ok).
    """
    ring = ring or eab_ring(a, b)
    reg = ring.reg
    base = [c for c in sc_order(S) if c[1] == 0]
    yrows = [c for c in sc_order(S) if c[1] == 1]
    options = []
    for (r, _) in yrows:
        opts = [("keep", (r, 1), reg.one())]
        for k in range(max(1, a - r + 1), a + 1):
            opts.append(("move", (r + k - 1, 0), reg.var(f"v_L_{k}")))
        options.append(opts)
    coeffs = {}
    for choice in product(*options):
        if all(kind == "keep" for kind, _, _ in choice):
            continue
        cells = base + [cell for _, cell, _ in choice]
        sign, srt = _sort_sign(cells)
        if not sign:
            continue
        R = Shape(tuple(srt))
        c = reg.one()
        for _, _, f in choice:
            c = c * f
        coeffs[R] = coeffs.get(R, reg.zero()) + c.scale(sign)
    coeffs = {R: c for R, c in coeffs.items() if c.terms}
    ok = True
    if verify:
        lhs = shape_poly(S, ring, a, b) - shape_poly(S, ring, a, b, reduced=True)
        rhs = sum((c * shape_poly(R, ring, a, b, reduced=True) for R, c in coeffs.items()), reg.zero())
        ok = lhs == rhs
    return coeffs, ok


def shapes_up_to(a: int, b: int, l: int):
    return [S for k in range(l + 1) for S in enumerate_shapes(k, a, b)]


def red_to_un(a: int, b: int):
    """Unitriangular U over k[V_L] with Delta = U pi(Delta) on the shapes S_{<=b},
    and its inverse, so that pi(Delta_S) = sum_R Uinv[S][R] Delta_R."""
    ring = eab_ring(a, b)
    reg = ring.reg
    shapes = shapes_up_to(a, b, b)
    idx = {S: i for i, S in enumerate(shapes)}
    n = len(shapes)
    U = [[reg.one() if i == j else reg.zero() for j in range(n)] for i in range(n)]
    for S in shapes:
        cs, _ = unreduced_vs_reduced(a, b, S, ring, verify=False)
        for R, c in cs.items():
            U[idx[S]][idx[R]] = c
    # shapes are ordered by number of y-cells, and corrections only involve
    # fewer y-cells, so U is lower unitriangular in this order
    Uinv = [[reg.zero() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        Uinv[i][i] = reg.one()
        for j in range(i):
            acc = reg.zero()
            for k in range(j, i):
                if U[i][k].terms and Uinv[k][j].terms:
                    acc = acc + U[i][k] * Uinv[k][j]
            Uinv[i][j] = -acc
    for i in range(n):
        for j in range(n):
            s = sum((U[i][k] * Uinv[k][j] for k in range(n) if U[i][k].terms and Uinv[k][j].terms), reg.zero())
            if s != (1 if i == j else 0):
                raise ArithmeticError("unitriangular inversion failed")
    return shapes, U, Uinv


def red_to_un_check(a: int, b: int) -> bool:
    """pi(Delta_Key) = sum_R c_R Delta_R with c_R in k[V_L] for every key shape."""
    ring = eab_ring(a, b)
    shapes, U, Uinv = red_to_un(a, b)
    idx = {S: i for i, S in enumerate(shapes)}
    unred = [shape_poly(S, ring, a, b) for S in shapes]
    for l, lam in key_partitions(a, b):
        K = Shape(tuple(key_cells(a, b, l, lam)))
        i = idx[K]
        lhs = shape_poly(K, ring, a, b, reduced=True)
        rhs = sum((Uinv[i][j] * unred[j] for j in range(len(shapes)) if Uinv[i][j].terms), ring.reg.zero())
        if lhs != rhs:
            return False
    return True


# ------------------------------------------------------------ key lemma

def key_lemma_check(a: int, b: int, l: int, lam):
    """Both sides of the Laplace identity for pi(Delta_Key)/(Delta(X1) Delta(X2)).

    Returns (value, sign) where value is the reduced key ratio and sign = +-1
    is the realized sign relating it to the Laplace sum; raises on mismatch.
    """
    ring = eab_ring(a, b)
    reg = ring.reg
    N = a + b
    X1 = [f"x{i}" for i in range(1, a + 1)]
    X2 = [f"x{i}" for i in range(a + 1, N + 1)]
    yb = ybar_images(a, b, reg)
    big = reg.extend([f"y{i}" for i in range(1, N + 1)])
    yimg = {f"y{i}": (big.zero() if i <= a else yb[i].embed(big)) for i in range(1, N + 1)}
    full = hdet(key_cells(a, b, l, lam), [f"x{i}" for i in range(1, N + 1)], [f"y{i}" for i in range(1, N + 1)], big)
    full = full.subs(yimg).restrict(reg)
    lhs = divide_by_vandermonde(divide_by_vandermonde(full, X1), X2) if full.terms else full
    lamp = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    k = b - l
    rhs = reg.zero()
    for beta in partitions_in_box(a, k):
        bh = dual_complement(beta, a, k)
        f1 = hdet(monomial_list(beta, a), X1, reg=reg)
        cells2 = monomial_list(bh, k) + [(e, 1) for e, _ in monomial_list(lamp, l)]
        f2 = hdet(cells2, X2, [f"y{i}" for i in range(a + 1, N + 1)], big)
        f2 = f2.subs(yimg).restrict(reg)
        term = divide_by_vandermonde(f1, X1) * (divide_by_vandermonde(f2, X2) if f2.terms else f2)
        rhs = rhs + term.scale((-1) ** bh.size())
    if lhs == rhs:
        return lhs, 1
    if lhs == -rhs:
        return lhs, -1
    raise ArithmeticError(f"key lemma mismatch at {(a, b, l, tuple(lamp))}")


def ytov_check(k: int, b: int, a: int = 0) -> bool:
    """vb_r^(k) = (-1)^(r-1) d_{a+1}..d_{a+k-1}(e_{k-r}(x_(a+1)..x_(a+k-1)) ybar_(a+k)), 1 <= r <= k.

    ybar_i = sum_{j<=b} x_i^(j-1) vb_j, and vb^(k) is expressed in vb = vb^(b)
    through the reduced stability map.
    """
    from .coords import reduced_stability
    from .symfun import elem
    N = a + b
    names = [f"x{i}" for i in range(1, N + 1)] + params("vb", b) + (params(f"vb{k}", k) if k != b else [])
    reg = Registry(names)
    xs = [f"x{i}" for i in range(1, N + 1)]
    phi = reduced_stability(a, k, b, reg)
    ybar = sum((reg.var(f"x{a + k}") ** (j - 1) * reg.var(f"vb_{j}") for j in range(1, b + 1)), reg.zero())
    M = alphabet("M", [f"x{i}" for i in range(a + 1, a + k)])
    word = list(range(a + 1, a + k))
    for r in range(1, k + 1):
        f = elem(k - r, M, reg) * ybar
        rhs = apply_word(word, f, xs).scale((-1) ** (r - 1))
        lhs = phi(reg.var(f"vb{k}_{r}")) if k != b else reg.var(f"vb_{r}")
        if lhs != rhs:
            return False
    return True


# ------------------------------------------------------------ transparifer

def transparifer(bi: int, bj: int):
    """D_{i,j} = Delta_{Key_b(empty)}(X_i + X_j, Y_i + Y_j)/(Delta(X_i) Delta(X_j)), b = min."""
    a, b = max(bi, bj), min(bi, bj)
    ring = eab_ring(a, b)
    X1, X2 = [f"x{i}" for i in range(1, a + 1)], [f"x{i}" for i in range(a + 1, a + b + 1)]
    return ring, haiman_ratio(key_cells(a, b, b, ()), ring, eab_y(ring, a, b), [X1, X2])


def transparifer_specialization(bi: int, bj: int):
    """Set v_r = 0 for r > 1; returns (specialized D, sign) with D = sign (v_R_1 - v_L_1)^b."""
    ring, D = transparifer(bi, bj)
    a, b = max(bi, bj), min(bi, bj)
    reg = ring.reg
    kill = {n: reg.zero() for n in ring.pnames if not n.endswith("_1")}
    Ds = D.subs(kill)
    target = (reg.var("v_R_1") - reg.var("v_L_1")) ** b
    if Ds == target:
        return Ds, 1
    if Ds == -target:
        return Ds, -1
    return Ds, 0


# ------------------------------------------------------------ digon complex

@dataclass
class DigonComplexData:
    a: int
    b: int
    rings: list
    shifts: list

    def d(self, s: int, f: Poly) -> Poly:
        """Partial Sylvester operator merging x_(a+b-s) into the last s letters."""
        a, b = self.a, self.b
        p = a + b - s
        src = self.rings[s]
        tgt = self.rings[s + 1]
        if s == 0:
            return f.embed(tgt.reg) if src.reg != tgt.reg else f
        word = [i + p - 1 for i in sylvester_word(1, s)]
        return apply_word(word, f, src.xs)

    def k(self, s: int, f: Poly, sign: int = 1) -> Poly:
        """Null-homotopy component from position s to s - 1."""
        a, b = self.a, self.b
        l = b - s
        x = f.reg.var(f"x{a + l + 1}")
        g = x ** (b - 1) * f
        word = list(range(a + 1, a + l + 1))
        return apply_word(word, g, self.rings[s].xs).scale(sign * (-1) ** (b - s))


def digon_complex(a: int, b: int) -> DigonComplexData:
    if a < b:
        raise ValueError("need a >= b")
    rings = [eals_ring(a, b - s, s) for s in range(b + 1)]
    # all positions share one registry so maps can be composed directly
    return DigonComplexData(a, b, rings, [Weight(s * (s - 1), s, 0) for s in range(b + 1)])


def eals_key_generators(a: int, l: int, s: int, ring: DeformedRing):
    """Key generators of (a, l) inside E_{a,(l,s)}: y_i for i in L uses V_R^(l+s)."""
    if l == 0:
        return [((0, Partition(())), ring.reg.one())]
    yimg = y_expansions(ring, [(range(1, a + 1), "v_L", a), (range(a + 1, a + l + 1), "v_R", l + s)])
    X1, L = [f"x{i}" for i in range(1, a + 1)], [f"x{i}" for i in range(a + 1, a + l + 1)]
    out = []
    for ll, lam in key_partitions(a, l):
        cells = key_cells(a, l, ll, lam)
        out.append(((ll, lam), haiman_ratio(cells, ring, yimg, [X1, L])))
    return out


def digon_J(a: int, b: int, D: DigonComplexData):
    out = []
    for s in range(b + 1):
        gens = eals_key_generators(a, b - s, s, D.rings[s])
        out.append(GradedIdeal(D.rings[s], [g for _, g in gens], [lab for lab, _ in gens]))
    return out


def _raw(w: Weight, s: int):
    return Weight(w.q - s * (s - 1), w.t - s, w.a)


def _span_basis_polys(polys, ring):
    """A maximal independent subset (as polynomials) of polys."""
    out = []
    r = 0
    for p in polys:
        if not p.terms:
            continue
        if span_rank(out + [p], ring) > r:
            out.append(p)
            r += 1
    return out


def _piece_basis(ring, polys):
    polys = [p for p in polys if p.terms]
    if not polys:
        return []
    rows, n, cols = _restricted_rows(polys, ring)
    if n == 0:
        return []
    M = _fmpz_from_sparse(rows, n)
    # pick independent rows via rref of the transpose
    R, den, rk = M.transpose().rref()
    piv = []
    i = 0
    for j in range(R.ncols()):
        if i < rk and R[i, j] != 0:
            piv.append(j)
            i += 1
    return [polys[j] for j in piv]


def digon_report(a: int, b: int, qmax: int | None = None, vmax: int = 2):
    """Verify d^2 = 0, d(J) in J, exactness of J at 0..b-1 and of E everywhere.

    Weights are total weights (with the position shifts) in the window
    q in [qmin, qmax], parameter degree <= vmax.  Returns a dict of booleans
    and the list of failures.
    """
    D = digon_complex(a, b)
    J = digon_J(a, b, D)
    qmax = 2 * (a + b) + 2 if qmax is None else qmax
    report = {"d2": True, "dJ_in_J": True, "J_exact": True, "E_exact": True, "homotopy_sign": None}
    failures = []
    # homotopy sign, fixed once on a generic element of position 1 (or 0)
    sign = _homotopy_sign(D)
    report["homotopy_sign"] = sign
    for s in range(b + 1):
        for n in range(vmax + 1):
            for q in range(-2 * n * max(a, b) + s * (s - 1), qmax + 1, 2):
                W = Weight(q, 2 * n + s, 0)
                raw = _raw(W, s)
                E = D.rings[s].basis(raw)
                # E exactness through the homotopy: k d + d k = id
                for f in E:
                    tot = f.scale(0)
                    if s < b:
                        tot = tot + D.k(s + 1, D.d(s, f), sign)
                    if s > 0:
                        tot = tot + D.d(s - 1, D.k(s, f, sign))
                    if tot != f:
                        report["E_exact"] = False
                        failures.append(("E_exact", s, str(W)))
                        break
                    if s + 1 < b + 1 and s + 2 <= b:
                        if D.d(s + 1, D.d(s, f)):
                            report["d2"] = False
                            failures.append(("d2", s, str(W)))
                if s == b:
                    continue
                Jp = _piece_basis(D.rings[s], [p for _, _, p in J[s].spanning(raw)])
                images = [D.d(s, f) for f in Jp]
                nz = [(i, g) for i, g in enumerate(images) if g.terms]
                if nz:
                    ok = J[s + 1].member_many([g for _, g in nz])
                    if not all(o for o, _ in ok):
                        report["dJ_in_J"] = False
                        failures.append(("dJ_in_J", s, str(W)))
                rank_d = span_rank(images, D.rings[s + 1])
                ker = len(Jp) - rank_d
                if s == 0:
                    im_prev = 0
                else:
                    rawp = _raw(W, s - 1)
                    # same total weight at position s-1 (d has degree t, so t drops by one)
                    rawp = Weight(W.q - (s - 1) * (s - 2), W.t - 1 - (s - 1), 0)
                    Jq = _piece_basis(D.rings[s - 1], [p for _, _, p in J[s - 1].spanning(rawp)])
                    im_prev = span_rank([D.d(s - 1, f) for f in Jq], D.rings[s])
                if ker != im_prev:
                    report["J_exact"] = False
                    failures.append(("J_exact", s, str(W), ker, im_prev))
    return report, failures


def _homotopy_sign(D: DigonComplexData) -> int:
    """The global sign making k d + d k = id (checked on the unit at position b)."""
    b = D.b
    one = D.rings[b].reg.one()
    if b == 0:
        return 1
    v = D.d(b - 1, D.k(b, one, 1))
    if v == one:
        return 1
    if v == -one:
        return -1
    raise ArithmeticError("homotopy does not act by a sign on the unit")


# ------------------------------------------------------------ Haiman's I_N

def haiman_registry(N: int):
    return Registry([f"x{i}" for i in range(1, N + 1)] + [f"y{i}" for i in range(1, N + 1)])


def _bidegree_monomials(N, d, e, reg):
    out = []
    for xe in _compositions(d, N):
        for ye in _compositions(e, N):
            out.append(Poly.monomial(reg, tuple(xe) + tuple(ye)))
    return out


def _compositions(n, k):
    if k == 1:
        yield (n,)
        return
    for i in range(n + 1):
        for rest in _compositions(n - i, k - 1):
            yield (i,) + rest


def haiman_intersection_check(N: int, maxdeg: int):
    """dim I_N = dim of the intersection of <x_i - x_j, y_i - y_j> in each bidegree d + e <= maxdeg.

    Returns (all_equal, {(d, e): (dim I, dim intersection)}).
    """
    from .polycore import rank_of
    reg = haiman_registry(N)
    xs = [f"x{i}" for i in range(1, N + 1)]
    ys = [f"y{i}" for i in range(1, N + 1)]
    dets = {}
    for tot in range(maxdeg + 1):
        for ey in range(tot + 1):
            for cells in shapes_in_window(N, tot - ey, ey):
                sx, sy = sum(c[0] for c in cells), sum(c[1] for c in cells)
                if sx == tot - ey and sy == ey:
                    dets.setdefault((sx, sy), []).append(hdet(list(cells), xs, ys, reg))
    table = {}
    ok = True
    for d in range(maxdeg + 1):
        for e in range(maxdeg + 1 - d):
            span = []
            for (dx, dy), ds in dets.items():
                if dx <= d and dy <= e:
                    mons = _bidegree_monomials(N, d - dx, e - dy, reg)
                    span.extend(m * g for m in mons for g in ds)
            dimI = rank_of(span)
            mons = _bidegree_monomials(N, d, e, reg)
            # kernel of f -> (f restricted to x_i = x_j, y_i = y_j) for all i < j
            images = []
            for m in mons:
                parts = []
                for i, j in combinations(range(1, N + 1), 2):
                    parts.append(m.subs({f"x{j}": reg.var(f"x{i}"), f"y{j}": reg.var(f"y{i}")}))
                images.append(parts)
            dimK = len(mons) - _stacked_rank(images)
            table[(d, e)] = (dimI, dimK)
            ok = ok and dimI == dimK
    return ok, table


def _stacked_rank(images):
    """Rank of the linear map whose rows are the concatenated images."""
    cols = {}
    rows = []
    for parts in images:
        row = {}
        for k, p in enumerate(parts):
            for e, c in p.terms.items():
                j = cols.setdefault((k, e), len(cols))
                row[j] = row.get(j, 0) + c
        rows.append(row)
    if not cols:
        return 0
    dense = []
    for row in rows:
        r = [0] * len(cols)
        for j, c in row.items():
            r[j] = int(c)
        dense.extend(r)
    return flint.fmpz_mat(len(rows), len(cols), dense).rank()
