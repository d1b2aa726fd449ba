"""Coordinate systems for deformation parameters and the maps between them.

One-strand frames use x1..xa, xp1..xpa (the primed alphabet) and parameter
families u_k, v_k, vd_k; y_i is never a primitive in a V-frame and is
expanded on construction.  Two-strand frames use X1 = x1..xa,
X2 = x(a+1)..x(a+b), v_L_k, v_R_k and the reduced parameters vb_k.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .polycore import Poly, Registry, SubstitutionMap, Var, Weight
from .symfun import alphabet, complete, elem, hook_schur, power, vandermonde, divide_by_vandermonde
from .haiman import hdet


FAMILIES = ("U", "V", "Y", "Vbar", "Vdot", "VOmega")


@dataclass(frozen=True)
class CoordinateFrame:
    colors: tuple
    family: str = "V"
    permutation: tuple = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown parameter family {self.family}")

    def to_json(self):
        return {"strands": [{"color": c, "params": self.family} for c in self.colors],
                "permutation": list(self.permutation or range(1, len(self.colors) + 1))}


def xs(n, start=1, prime=False):
    p = "xp" if prime else "x"
    return [f"{p}{i}" for i in range(start, start + n)]


def params(prefix, n):
    return [f"{prefix}_{k}" for k in range(1, n + 1)]


def strand_registry(a: int, families=("u", "v", "vd"), ys=True):
    """Registry for one a-colored strand with both boundary alphabets."""
    names = xs(a) + xs(a, prime=True)
    if ys:
        names += [f"y{i}" for i in range(1, a + 1)]
    for f in families:
        names += params(f, a)
    return Registry(names)


def X(a, start=1, prime=False):
    return alphabet("Xp" if prime else "X", xs(a, start, prime))


# -------------------------------------------------------- curvature elements

def curvature_h(A, Ap, pnames, reg) -> Poly:
    """sum_k h_k(A - A') p_k."""
    D = A - Ap
    return sum((complete(k, D, reg) * reg.var(n) for k, n in enumerate(pnames, 1)), reg.zero())


def curvature_e(A, Ap, pnames, reg) -> Poly:
    """sum_k (e_k(A) - e_k(A')) p_k."""
    return sum(((elem(k, A, reg) - elem(k, Ap, reg)) * reg.var(n) for k, n in enumerate(pnames, 1)), reg.zero())


def curvature_p(A, Ap, pnames, reg) -> Poly:
    """sum_k (1/k)(p_k(A) - p_k(A')) p_k."""
    return sum((power(k, A - Ap, reg).scale(Fraction(1, k)) * reg.var(n) for k, n in enumerate(pnames, 1)), reg.zero())


def curvature_y(a, reg) -> Poly:
    """Thin curvature sum_i (x_i - x'_i) y_i."""
    return sum(((reg.var(f"x{i}") - reg.var(f"xp{i}")) * reg.var(f"y{i}") for i in range(1, a + 1)), reg.zero())


# ------------------------------------------------------------------ u and v

def v_to_u(a: int, reg: Registry, A=None) -> SubstitutionMap:
    """v_k -> (-1)^(k-1) sum_{l>=k} e_{l-k}(X) u_l (rewrites V-data in U)."""
    A = A or X(a)
    return SubstitutionMap({
        f"v_{k}": sum((elem(l - k, A, reg) * reg.var(f"u_{l}") for l in range(k, a + 1)), reg.zero()).scale((-1) ** (k - 1))
        for k in range(1, a + 1)})


def u_to_v(a: int, reg: Registry, A=None) -> SubstitutionMap:
    """u_k -> (-1)^(k-1) sum_{l>=k} h_{l-k}(X) v_l (rewrites U-data in V)."""
    A = A or X(a)
    return SubstitutionMap({
        f"u_{k}": sum((complete(l - k, A, reg) * reg.var(f"v_{l}") for l in range(k, a + 1)), reg.zero()).scale((-1) ** (k - 1))
        for k in range(1, a + 1)})


def sliding_v_check(a: int) -> bool:
    """1 (x) v_k = sum_{l>=k} h_{l-k}(X - X') (v_l (x) 1) inside k[X, X', U]."""
    reg = strand_registry(a, families=("u", "v"), ys=False)
    left = v_to_u(a, reg, X(a))
    right = v_to_u(a, reg, X(a, prime=True))
    D = X(a) - X(a, prime=True)
    for k in range(1, a + 1):
        lhs = right(reg.var(f"v_{k}"))
        rhs = sum((complete(l - k, D, reg) * left(reg.var(f"v_{l}")) for l in range(k, a + 1)), reg.zero())
        if lhs != rhs:
            return False
    return True


# ------------------------------------------------------------------ y maps

def y_from_v(a: int, reg: Registry, vprefix="v", start=1, ynames=None) -> SubstitutionMap:
    """Interpolation coordinates: y_i -> sum_r x_i^(r-1) v_r."""
    ynames = ynames or [f"y{i}" for i in range(start, start + a)]
    out = {}
    for i, yn in zip(range(start, start + a), ynames):
        xi = reg.var(f"x{i}")
        out[yn] = sum((xi ** (r - 1) * reg.var(f"{vprefix}_{r}") for r in range(1, a + 1)), reg.zero())
    return SubstitutionMap(out)


def y_to_v(a: int, reg: Registry) -> SubstitutionMap:
    """y_i -> sum_l h_{l-1}({x_i..x_a} - {x'_(i+1)..x'_a}) v_l."""
    out = {}
    for i in range(1, a + 1):
        D = alphabet("A", xs(a - i + 1, i)) - alphabet("B", xs(a - i, i + 1, prime=True))
        out[f"y{i}"] = sum((complete(l - 1, D, reg) * reg.var(f"v_{l}") for l in range(1, a + 1)), reg.zero())
    return SubstitutionMap(out)


def y_to_u(a: int, reg: Registry) -> SubstitutionMap:
    """y_i -> sum_l e_{l-1}(x_1..x_(i-1), x'_(i+1)..x'_a) u_l."""
    out = {}
    for i in range(1, a + 1):
        A = alphabet("A", xs(i - 1) + xs(a - i, i + 1, prime=True))
        out[f"y{i}"] = sum((elem(l - 1, A, reg) * reg.var(f"u_{l}") for l in range(1, a + 1)), reg.zero())
    return SubstitutionMap(out)


def v_from_y(a: int, reg: Registry):
    """[(numerator, denominator)] with v_(a-k+1) = (-1)^(a-k) Delta_{M_k}/Delta(X), k = 1..a.

    M_k = {x^(a-1), ..., omit x^(a-k), ..., 1, y}.
    """
    out = []
    den = vandermonde(xs(a), reg)
    for k in range(1, a + 1):
        cells = [(e, 0) for e in range(a - 1, -1, -1) if e != a - k] + [(0, 1)]
        num = hdet(cells, xs(a), [f"y{i}" for i in range(1, a + 1)], reg).scale((-1) ** (a - k))
        out.append((a - k + 1, num, den))
    return out


def recover_v(a: int, reg: Registry) -> dict:
    """v_r recovered from interpolated y's; returns {r: Poly} (should equal v_r)."""
    interp = y_from_v(a, reg)
    return {r: divide_by_vandermonde(interp(num), xs(a)) for r, num, _ in v_from_y(a, reg)}


# ------------------------------------------------------- stability phi_{c,d}

def stability_registry(c: int, d: int, primes=True, extra=()):
    names = xs(d) + (xs(d, prime=True) if primes else []) + params(f"v{c}", c) + params(f"v{d}", d) if c != d \
        else xs(d) + (xs(d, prime=True) if primes else []) + params(f"v{d}", d)
    return Registry(names + list(extra))


def stability_phi(c: int, d: int, reg: Registry, src="v{c}", dst="v{d}", letters=None) -> SubstitutionMap:
    """v_k^(c) -> v_k^(d) + (-1)^(c-k) sum_{l=c+1}^d s_(l-c-1|c-k)(X^(c)) v_l^(d).

    `letters` is the alphabet X^(c) (defaults to x1..xc).
    """
    if c > d:
        raise ValueError("need c <= d")
    s, t = src.format(c=c, d=d), dst.format(c=c, d=d)
    A = alphabet("Xc", letters or xs(c))
    out = {}
    for k in range(1, c + 1):
        img = reg.var(f"{t}_{k}")
        for l in range(c + 1, d + 1):
            img = img + (hook_schur(l - c - 1, c - k, A, reg) * reg.var(f"{t}_{l}")).scale((-1) ** (c - k))
        out[f"{s}_{k}"] = img
    if s == t:
        return SubstitutionMap({})
    return SubstitutionMap(out)


def Z_S(S, n: int, vprefix: str, reg: Registry, start=1) -> Poly:
    """sum_{k=1}^n h_k(X_S - X'_S) v_k for S a set of letter indices."""
    A = alphabet("S", [f"x{i}" for i in sorted(S)])
    Ap = alphabet("Sp", [f"xp{i}" for i in sorted(S)])
    return curvature_h(A, Ap, params(vprefix, n), reg)


# ------------------------------------------------------------ two strands

def two_strand_registry(a: int, b: int, primes=False, ys=False, vbar=False, extra=()):
    n = a + b
    names = xs(n)
    if primes:
        names += xs(n, prime=True)
    if ys:
        names += [f"y{i}" for i in range(1, n + 1)]
    names += params("v_L", a) + params("v_R", b)
    if vbar:
        names += params("vb", b)
    return Registry(names + list(extra))


def vL_b(a: int, b: int, reg: Registry, primes=False) -> list:
    """v_{L,j}^(b) = v_{L,j}^(a) + (-1)^(b-j) sum_{i=1}^{a-b} s_(i-1|b-j)(X'_2) v_{L,b+i}^(a)."""
    X2 = alphabet("X2", xs(b, a + 1, prime=primes))
    out = []
    for j in range(1, b + 1):
        if j > a:
            out.append(reg.zero())
            continue
        img = reg.var(f"v_L_{j}")
        for i in range(1, a - b + 1):
            img = img + (hook_schur(i - 1, b - j, X2, reg) * reg.var(f"v_L_{b + i}")).scale((-1) ** (b - j))
        out.append(img)
    return out


def vred_images(a: int, b: int, reg: Registry, primes=False) -> list:
    """Right side of the reduction rule: v_{R,j} - sum_{k>=j} h_{k-j}(X'_2 - X_2) v_{L,k}^(b)."""
    vlb = vL_b(a, b, reg, primes)
    if primes:
        D = alphabet("X2p", xs(b, a + 1, prime=True)) - alphabet("X2", xs(b, a + 1))
    out = []
    for j in range(1, b + 1):
        img = reg.var(f"v_R_{j}")
        for k in range(j, b + 1):
            hk = complete(k - j, D, reg) if primes else (reg.one() if k == j else reg.zero())
            img = img - hk * vlb[k - 1]
        out.append(img)
    return out


def reduction_pi(a: int, b: int, reg: Registry, primes=False) -> SubstitutionMap:
    """v_{L,i} -> 0 and v_{R,j} -> reduced expression."""
    imgs = {f"v_L_{i}": reg.zero() for i in range(1, a + 1)}
    for j, img in enumerate(vred_images(a, b, reg, primes), 1):
        imgs[f"v_R_{j}"] = img
    return SubstitutionMap(imgs, check=False)


def vbar_to_v(a: int, b: int, reg: Registry, primes=True) -> SubstitutionMap:
    """vb_j -> reduced expression (the reduced-to-full functor on coefficients)."""
    return SubstitutionMap({f"vb_{j}": img for j, img in enumerate(vred_images(a, b, reg, primes), 1)}, check=False)


def two_strand_curvature(a: int, b: int, reg: Registry) -> Poly:
    X1, X1p = alphabet("X1", xs(a)), alphabet("X1p", xs(a, prime=True))
    X2, X2p = alphabet("X2", xs(b, a + 1)), alphabet("X2p", xs(b, a + 1, prime=True))
    return curvature_h(X1, X1p, params("v_L", a), reg) + curvature_h(X2, X2p, params("v_R", b), reg)


def reduced_curvature(a: int, b: int, reg: Registry) -> Poly:
    X2, X2p = alphabet("X2", xs(b, a + 1)), alphabet("X2p", xs(b, a + 1, prime=True))
    return curvature_h(X2, X2p, params("vb", b), reg)


def ybar(i: int, b: int, a: int, reg: Registry) -> Poly:
    """pi(y_i) for i > a, as an element of E_{a,b}."""
    vr = vred_images(a, b, reg, primes=False)
    xi = reg.var(f"x{i}")
    return sum((xi ** (k - 1) * vr[k - 1] for k in range(1, b + 1)), reg.zero())


def two_strand_y(a: int, b: int, reg: Registry) -> SubstitutionMap:
    """y_i -> sum_k x_i^(k-1) v_{L,k} (i <= a) or v_{R,k} (i > a)."""
    imgs = {}
    for i in range(1, a + b + 1):
        xi = reg.var(f"x{i}")
        fam, n = ("v_L", a) if i <= a else ("v_R", b)
        imgs[f"y{i}"] = sum((xi ** (k - 1) * reg.var(f"{fam}_{k}") for k in range(1, n + 1)), reg.zero())
    return SubstitutionMap(imgs)


# ------------------------------------------------------------------ bundling

def cycles_of(omega):
    """Cycles of a permutation given as a 1-based tuple omega[i-1] = omega(i)."""
    m = len(omega)
    seen, out = set(), []
    for i in range(1, m + 1):
        if i in seen:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = omega[j - 1]
        out.append(sorted(cyc))
    return out


def bundle_registry(colors):
    m = len(colors)
    names = []
    for i in range(1, m + 1):
        names += [f"x{i}_{r}" for r in range(1, colors[i - 1] + 1)]
    for i in range(1, m + 1):
        names += [f"xp{i}_{r}" for r in range(1, colors[i - 1] + 1)]
    for i in range(1, m + 1):
        names += [Var(f"v{i}_{k}", Weight(-2 * k, 2)) for k in range(1, colors[i - 1] + 1)]
    for i in range(1, m + 1):
        names += [Var(f"w_{i}_{k}", Weight(-2 * k, 2)) for k in range(1, colors[i - 1] + 1)]
    return Registry([n if isinstance(n, Var) else Var(n, Weight(2, 0)) for n in names])


def strand_alphabet(i, colors, prime=False):
    p = "xp" if prime else "x"
    return alphabet(f"{p}{i}", [f"{p}{i}_{r}" for r in range(1, colors[i - 1] + 1)])


def bundle(omega, colors, reg: Registry) -> SubstitutionMap:
    """v_{i,k} -> sum_{l>=k} h_{l-k}(sum_{j<i, j~i}(X_j - X'_{omega^-1(j)})) v_{[i],l}.

    The representative [i] of a cycle is its minimum.
    """
    m = len(omega)
    if tuple(colors[omega[i] - 1] for i in range(m)) != tuple(colors):
        raise ValueError("omega must preserve the colors")
    inv = [0] * m
    for i in range(1, m + 1):
        inv[omega[i - 1] - 1] = i
    rep = {}
    for cyc in cycles_of(omega):
        for j in cyc:
            rep[j] = min(cyc)
    imgs = {}
    for i in range(1, m + 1):
        D = None
        for j in range(1, i):
            if rep[j] == rep[i]:
                term = strand_alphabet(j, colors) - strand_alphabet(inv[j - 1], colors, prime=True)
                D = term if D is None else D + term
        b = colors[i - 1]
        for k in range(1, b + 1):
            img = reg.zero()
            for l in range(k, b + 1):
                hk = complete(l - k, D, reg) if D is not None else (reg.one() if l == k else reg.zero())
                img = img + hk * reg.var(f"w_{rep[i]}_{l}")
            imgs[f"v{i}_{k}"] = img
    return SubstitutionMap(imgs)


def strandwise_curvature(omega, colors, reg: Registry) -> Poly:
    """sum_i sum_k h_k(X_i - X'_{omega^-1(i)}) v_{i,k}."""
    m = len(omega)
    inv = [0] * m
    for i in range(1, m + 1):
        inv[omega[i - 1] - 1] = i
    out = reg.zero()
    for i in range(1, m + 1):
        out = out + curvature_h(strand_alphabet(i, colors), strand_alphabet(inv[i - 1], colors, prime=True),
                                [f"v{i}_{k}" for k in range(1, colors[i - 1] + 1)], reg)
    return out


def bundled_curvature(omega, colors, reg: Registry) -> Poly:
    """sum over cycles [i] of sum_k h_k(X_[i] - X'_[i]) v_{[i],k}."""
    out = reg.zero()
    for cyc in cycles_of(omega):
        A = Ap = None
        for j in cyc:
            A = strand_alphabet(j, colors).virtual() if A is None else A + strand_alphabet(j, colors)
            Ap = strand_alphabet(j, colors, prime=True).virtual() if Ap is None else Ap + strand_alphabet(j, colors, prime=True)
        r = min(cyc)
        out = out + curvature_h(A, Ap, [f"w_{r}_{k}" for k in range(1, colors[r - 1] + 1)], reg)
    return out


# ------------------------------------------------------------ power sums

def v_to_vdot(a: int, reg: Registry) -> SubstitutionMap:
    """vd_k -> sum_{l>=k} (k/l) h_{l-k}(X - X') v_l (rewrites Vdot-data in V)."""
    D = X(a) - X(a, prime=True)
    return SubstitutionMap({
        f"vd_{k}": sum((complete(l - k, D, reg) * reg.var(f"v_{l}")).scale(Fraction(k, l)) for l in range(k, a + 1))
        for k in range(1, a + 1)})


def vdot_to_v(a: int, reg: Registry) -> SubstitutionMap:
    """v_k -> sum_{l>=k} (k/l)(-1)^(l-k) e_{l-k}(X - X') vd_l (rewrites V-data in Vdot)."""
    D = X(a) - X(a, prime=True)
    return SubstitutionMap({
        f"v_{k}": sum((elem(l - k, D, reg) * reg.var(f"vd_{l}")).scale(Fraction(k, l) * (-1) ** (l - k)) for l in range(k, a + 1))
        for k in range(1, a + 1)})


def mod_diagonal(p: Poly, a: int) -> Poly:
    """Image of p under x'_i -> x_i (enough to test membership in N(X, X')
    for polynomials whose x-dependence is symmetric)."""
    reg = p.reg
    return p.subs({f"xp{i}": reg.var(f"x{i}") for i in range(1, a + 1)})


def in_permuted_diagonal_ideal(f: Poly, letters, primed) -> bool:
    """Membership in <e_k(X) - e_k(X')>.

    The quotient is free over k[X] and generically a product of fields indexed
    by permutations, so f lies in the ideal iff f(X, sigma X) = 0 for every
    permutation sigma.
    """
    from itertools import permutations
    reg = f.reg
    for perm in permutations(letters):
        if f.subs({p: reg.var(x) for p, x in zip(primed, perm)}):
            return False
    return True


def two_to_one_curvature_check(a: int, b: int) -> bool:
    """Reduced curvature maps to the two-strand curvature modulo N(X1+X2, X1'+X2')."""
    reg = two_strand_registry(a, b, primes=True, vbar=True)
    lhs = vbar_to_v(a, b, reg)(reduced_curvature(a, b, reg))
    rhs = two_strand_curvature(a, b, reg)
    return in_permuted_diagonal_ideal(lhs - rhs, xs(a + b), xs(a + b, prime=True))


def reduced_stability(a: int, l: int, b: int, reg: Registry) -> SubstitutionMap:
    """vb_k^(l) -> vb_k^(b) + (-1)^(l-k) sum_{r=l+1}^b s_(r-l-1|l-k)(x_(a+1)..x_(a+l)) vb_r^(b).

    Source names vb{l}_k, target names vb_k.
    """
    return stability_phi(l, b, reg, src="vb{c}", dst="vb", letters=xs(l, a + 1))
