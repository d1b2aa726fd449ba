"""Curved Koszul complexes over polynomial rings.

The module is the exterior algebra on xi_1..xi_b, with basis indexed by
sorted subsets.  Operators are square matrices of Polys, entry [r][c] being
the coefficient of basis element r in the image of basis element c.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .polycore import Poly, Registry, Var, Weight, det, to_json
from .symfun import alphabet, complete, elem


def subsets(b: int):
    return [S for k in range(b + 1) for S in combinations(range(1, b + 1), k)]


def wedge_sign(i, S):
    """Sign of xi_i ^ xi_S = sign * xi_(S+i); 0 if i in S."""
    if i in S:
        return 0
    return -1 if sum(1 for s in S if s < i) % 2 else 1


def koszul_registry(b: int, extra=()):
    names = [f"x{i}" for i in range(1, b + 1)] + [f"xp{i}" for i in range(1, b + 1)]
    names += [f"vb_{i}" for i in range(1, b + 1)]
    return Registry(names + list(extra))


def zero_matrix(n, reg):
    return [[reg.zero() for _ in range(n)] for _ in range(n)]


def mat_mul(A, B, reg):
    n = len(A)
    out = zero_matrix(n, reg)
    for i in range(n):
        for k in range(n):
            if not A[i][k]:
                continue
            for j in range(n):
                if B[k][j]:
                    out[i][j] = out[i][j] + A[i][k] * B[k][j]
    return out


def mat_add(A, B):
    return [[x + y for x, y in zip(r, s)] for r, s in zip(A, B)]


def mat_map(A, f):
    return [[f(x) for x in r] for r in A]


def wedge_operator(coeffs, b, reg):
    """sum_i c_i * (xi_i ^ -)."""
    basis = subsets(b)
    pos = {S: n for n, S in enumerate(basis)}
    M = zero_matrix(len(basis), reg)
    for c, S in enumerate(basis):
        for i, ci in enumerate(coeffs, 1):
            s = wedge_sign(i, S)
            if s and ci:
                M[pos[tuple(sorted(S + (i,)))]][c] = M[pos[tuple(sorted(S + (i,)))]][c] + ci.scale(s)
    return M


def contraction_operator(coeffs, b, reg):
    """sum_i c_i * xi_i^*, with xi_i^*(xi_i ^ w) = w."""
    basis = subsets(b)
    pos = {S: n for n, S in enumerate(basis)}
    M = zero_matrix(len(basis), reg)
    for c, S in enumerate(basis):
        for i, ci in enumerate(coeffs, 1):
            if i in S and ci:
                T = tuple(s for s in S if s != i)
                s = wedge_sign(i, T)
                M[pos[T]][c] = M[pos[T]][c] + ci.scale(s)
    return M


@dataclass
class CurvedComplex:
    b: int
    reg: Registry
    d: list
    Delta: list
    curvature: Poly

    @property
    def basis(self):
        return subsets(self.b)

    def total(self):
        return mat_add(self.d, self.Delta)

    def basis_weight(self, S):
        w = Weight(0, 0, 0)
        for i in S:
            w = w + Weight(2 * i, -1, 0)
        return w

    def square(self):
        D = self.total()
        return mat_mul(D, D, self.reg)

    def check_curvature(self) -> bool:
        sq = self.square()
        n = len(sq)
        return all(sq[i][j] == (self.curvature if i == j else 0) for i in range(n) for j in range(n))

    def check_degrees(self) -> bool:
        """Every nonzero entry has weight t relative to source and target."""
        basis = self.basis
        for i, r in enumerate(self.total()):
            for j, e in enumerate(r):
                if not e:
                    continue
                w = e.weight()
                if w is None or w + self.basis_weight(basis[i]) - self.basis_weight(basis[j]) != Weight(0, 1, 0):
                    return False
        return True

    def to_json(self):
        label = lambda S: "*".join(f"xi{i}" for i in S) or "1"
        return {"schema": 1,
                "basis": [{"label": label(S), "weight": str(self.basis_weight(S))} for S in self.basis],
                "diff": [[to_json(e) for e in r] for r in self.total()],
                "curvature": to_json(self.curvature)}


def build_curved_koszul(b: int, reg: Registry | None = None) -> CurvedComplex:
    """d = sum h_i(X2 - X2') xi_i^*, Delta = sum vb_i xi_i; curvature sum h_i vb_i."""
    reg = reg or koszul_registry(b)
    D = alphabet("X2", [f"x{i}" for i in range(1, b + 1)]) - alphabet("X2p", [f"xp{i}" for i in range(1, b + 1)])
    hs = [complete(i, D, reg) for i in range(1, b + 1)]
    vs = [reg.var(f"vb_{i}") for i in range(1, b + 1)]
    curv = sum((h * v for h, v in zip(hs, vs)), reg.zero())
    C = CurvedComplex(b, reg, contraction_operator(hs, b, reg), wedge_operator(vs, b, reg), curv)
    if not C.check_curvature():
        raise ArithmeticError("curvature mismatch")
    return C


# ------------------------------------------------------------ zeta basis

@dataclass
class BasisChange:
    k: int
    b: int
    forward: list   # zeta_j = sum_i forward[j][i] xi_i
    inverse: list   # xi_i = sum_j inverse[i][j] zeta_j


def zeta_basis(k: int, b: int, reg: Registry) -> BasisChange:
    """zeta_j = sum_{i<=j} (-1)^(i-1) e_{j-i}(M) xi_i, M = x1..xk."""
    M = alphabet("M", [f"x{i}" for i in range(1, k + 1)])
    F = [[elem(j - i, M, reg).scale((-1) ** (i - 1)) if i <= j else reg.zero() for i in range(1, b + 1)]
         for j in range(1, b + 1)]
    G = [[complete(i - j, M, reg).scale((-1) ** (j - 1)) if j <= i else reg.zero() for j in range(1, b + 1)]
         for i in range(1, b + 1)]
    return BasisChange(k, b, F, G)


def basis_change_roundtrip(B: BasisChange, reg) -> bool:
    prod = [[sum((B.forward[j][i] * B.inverse[i][m] for i in range(B.b)), reg.zero()) for m in range(B.b)]
            for j in range(B.b)]
    return all(prod[j][m] == (1 if j == m else 0) for j in range(B.b) for m in range(B.b))


def exterior_change_matrix(B: BasisChange, reg):
    """P with column zeta_T written in the xi_S basis: P[S][T] = det forward[T, S]."""
    basis = subsets(B.b)
    n = len(basis)
    P = zero_matrix(n, reg)
    for c, T in enumerate(basis):
        for r, S in enumerate(basis):
            if len(S) != len(T):
                continue
            P[r][c] = det([[B.forward[t - 1][s - 1] for s in S] for t in T]) if T else reg.one()
    return P


def zeta_forms(k: int, b: int, reg: Registry):
    """The claimed (d, Delta) in the zeta basis, as operators on the zeta exterior algebra."""
    M = alphabet("M", [f"x{i}" for i in range(1, k + 1)])
    Mp = alphabet("Mp", [f"xp{i}" for i in range(1, k + 1)])
    dc = [elem(i, M, reg) - elem(i, Mp, reg) for i in range(1, b + 1)]
    Dc = [sum((complete(l - j, M, reg) * reg.var(f"vb_{l}") for l in range(j, b + 1)), reg.zero()).scale((-1) ** (j - 1))
          for j in range(1, b + 1)]
    return contraction_operator(dc, b, reg), wedge_operator(Dc, b, reg)


def check_zeta_forms(k: int, b: int) -> bool:
    """Conjugating by the zeta change reproduces the zeta forms.

    Delta matches exactly.  The d form holds on the column web, where the
    letters of X2 outside M are identified with their primed copies, so d is
    compared after that specialization.
    """
    reg = koszul_registry(b)
    C = build_curved_koszul(b, reg)
    B = zeta_basis(k, b, reg)
    if not basis_change_roundtrip(B, reg):
        return False
    P = exterior_change_matrix(B, reg)
    dz, Dz = zeta_forms(k, b, reg)
    if mat_mul(C.Delta, P, reg) != mat_mul(P, Dz, reg):
        return False
    ident = {f"xp{i}": reg.var(f"x{i}") for i in range(k + 1, b + 1)}
    on_web = lambda p: p.subs(ident)
    return mat_map(mat_mul(C.d, P, reg), on_web) == mat_map(mat_mul(P, dz, reg), on_web)


# ------------------------------------------------------------ contraction

def reduce_unit(p: Poly, name: str, inv: str) -> Poly:
    """Normalize modulo name*inv = 1."""
    reg = p.reg
    i, j = reg.index[name], reg.index[inv]
    out = {}
    for e, c in p.terms.items():
        m = min(e[i], e[j])
        if m:
            e = list(e)
            e[i] -= m
            e[j] -= m
            e = tuple(e)
        out[e] = out.get(e, 0) + c
    return Poly(reg, out)


def contract_if_unit(b: int, invert=None):
    """Null-homotopy of the curved Koszul complex with vb_j declared a unit.

    h = vb_j^(-1) xi_j^*.  The remaining twist sum_{i != j} vb_i xi_i and d
    both anticommute with xi_j^*, so no further correction is needed.
    Returns (complex, h) after verifying (d+Delta)h + h(d+Delta) = id.
    """
    if not invert:
        raise ValueError("no parameter declared a unit; the complex is not contractible this way")
    j = int(str(invert).replace("vb_", "").replace("v", ""))
    if not 1 <= j <= b:
        raise ValueError(f"parameter index {j} out of range")
    inv = f"vb_{j}_inv"
    reg = koszul_registry(b, extra=[Var(inv, Weight(2 * j, -2, 0))])
    C = build_curved_koszul(b, reg)
    coeffs = [reg.var(inv) if i == j else reg.zero() for i in range(1, b + 1)]
    h = contraction_operator(coeffs, b, reg)
    D = C.total()
    comm = mat_add(mat_mul(D, h, reg), mat_mul(h, D, reg))
    comm = mat_map(comm, lambda p: reduce_unit(p, f"vb_{j}", inv))
    n = len(comm)
    if any(comm[r][c] != (1 if r == c else 0) for r in range(n) for c in range(n)):
        raise ArithmeticError("homotopy check failed")
    return C, h


# -------------------------------------------------- coefficient identities

def crossing_identity(m: int, nb: int = None, na: int = None) -> bool:
    """sum_{r=1}^m (-1)^(r-1) e_{m-r}(X2) h_r(X2 - X1') = e_m(X2) - e_m(X1')."""
    nb = nb or m
    na = na or m
    reg = Registry([f"x{i}" for i in range(1, nb + 1)] + [f"xp{i}" for i in range(1, na + 1)])
    X2 = alphabet("X2", [f"x{i}" for i in range(1, nb + 1)])
    X1p = alphabet("X1p", [f"xp{i}" for i in range(1, na + 1)])
    lhs = sum((complete(r, X2 - X1p, reg) * elem(m - r, X2, reg)).scale((-1) ** (r - 1)) for r in range(1, m + 1))
    return lhs == elem(m, X2, reg) - elem(m, X1p, reg)


def e_vanishing(a: int, m: int) -> bool:
    """e_{m-1}(X2 - D) = 0 for m > a, where |X2| = a and D is one letter of X2."""
    reg = Registry([f"x{i}" for i in range(1, a + 1)])
    X2 = alphabet("X2", [f"x{i}" for i in range(1, a + 1)])
    D = alphabet("D", [f"x{a}"])
    return elem(m - 1, X2 - D, reg) == 0
