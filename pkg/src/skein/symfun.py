"""Symmetric functions of alphabets and virtual alphabets.

e/h/p of a formal combination sum c_i X_i are read off the generating
functions H(X, t) = prod 1/(1 - x t), with H(-X, t) = E(X, -t).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from .polycore import Poly, Registry, canonical_order, det, div_by_difference


@dataclass(frozen=True)
class Alphabet:
    name: str
    variables: tuple

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("alphabet variables must be distinct")

    def __len__(self):
        return len(self.variables)

    def virtual(self):
        return VirtualAlphabet(((1, self),))

    def __add__(self, o):
        return self.virtual() + o

    def __sub__(self, o):
        return self.virtual() - o

    def __neg__(self):
        return -self.virtual()


@dataclass(frozen=True)
class VirtualAlphabet:
    terms: tuple  # of (int coefficient, Alphabet)

    @staticmethod
    def of(x):
        if isinstance(x, VirtualAlphabet):
            return x
        if isinstance(x, Alphabet):
            return x.virtual()
        raise TypeError(x)

    def __add__(self, o):
        return VirtualAlphabet(self.terms + VirtualAlphabet.of(o).terms)

    def __sub__(self, o):
        return self + (-VirtualAlphabet.of(o))

    def __neg__(self):
        return VirtualAlphabet(tuple((-c, A) for c, A in self.terms))

    def __rmul__(self, n: int):
        return VirtualAlphabet(tuple((n * c, A) for c, A in self.terms))

    def variables(self):
        out = []
        for _, A in self.terms:
            out.extend(v for v in A.variables if v not in out)
        return out


def alphabet(name, variables):
    return Alphabet(name, tuple(variables))


def _reg_for(A, reg):
    if reg is not None:
        return reg
    return Registry(canonical_order(VirtualAlphabet.of(A).variables()))


# ----------------------------------------------------------- concrete pieces

@lru_cache(maxsize=None)
def _elem_concrete(k, vars_, reg):
    if k < 0 or k > len(vars_):
        return Poly(reg, {})
    t = {}
    for c in combinations(vars_, k):
        e = [0] * reg.n
        for v in c:
            e[reg.index[v]] = 1
        t[tuple(e)] = 1
    return Poly(reg, t)


@lru_cache(maxsize=None)
def _complete_concrete(k, vars_, reg):
    if k < 0:
        return Poly(reg, {})
    t = {}
    for c in combinations_with_replacement(vars_, k):
        e = [0] * reg.n
        for v in c:
            e[reg.index[v]] += 1
        t[tuple(e)] = 1
    return Poly(reg, t)


def _power_concrete(k, vars_, reg):
    return sum((Poly.var(reg, v, k) for v in vars_), Poly(reg, {}))


def _series_mul(f, g, n, reg):
    out = [Poly(reg, {}) for _ in range(n + 1)]
    for i, fi in enumerate(f[: n + 1]):
        if not fi.terms:
            continue
        for j, gj in enumerate(g[: n + 1 - i]):
            if gj.terms:
                out[i + j] = out[i + j] + fi * gj
    return out


@lru_cache(maxsize=None)
def _h_series(A: VirtualAlphabet, n: int, reg: Registry):
    """[h_0(A), ..., h_n(A)] by truncated generating-function products."""
    s = [Poly.const(reg, 1)] + [Poly(reg, {}) for _ in range(n)]
    for c, X in A.terms:
        if c > 0:
            base = [_complete_concrete(k, X.variables, reg) for k in range(n + 1)]
        elif c < 0:
            base = [_elem_concrete(k, X.variables, reg).scale((-1) ** k) for k in range(n + 1)]
        else:
            continue
        for _ in range(abs(c)):
            s = _series_mul(s, base, n, reg)
    return tuple(s)


def complete(k: int, A, reg: Registry | None = None) -> Poly:
    A = VirtualAlphabet.of(A)
    reg = _reg_for(A, reg)
    if k < 0:
        return Poly(reg, {})
    return _h_series(A, k, reg)[k]


def elem(k: int, A, reg: Registry | None = None) -> Poly:
    """e_k(A) = (-1)^k h_k(-A)."""
    A = VirtualAlphabet.of(A)
    reg = _reg_for(A, reg)
    if k < 0:
        return Poly(reg, {})
    return _h_series(-A, k, reg)[k].scale((-1) ** k)


def power(k: int, A, reg: Registry | None = None) -> Poly:
    if k < 1:
        raise ValueError("power sums need k >= 1")
    A = VirtualAlphabet.of(A)
    reg = _reg_for(A, reg)
    out = Poly(reg, {})
    for c, X in A.terms:
        out = out + _power_concrete(k, X.variables, reg).scale(c)
    return out


h = complete
e = elem
p = power


# ------------------------------------------------------------------ partitions

@dataclass(frozen=True)
class Partition:
    parts: tuple

    def __post_init__(self):
        ps = tuple(int(x) for x in self.parts)
        if any(ps[i] < ps[i + 1] for i in range(len(ps) - 1)) or any(x < 0 for x in ps):
            raise ValueError(f"not a partition: {ps}")
        while ps and ps[-1] == 0:
            ps = ps[:-1]
        object.__setattr__(self, "parts", ps)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i] if i < len(self.parts) else 0

    def size(self):
        return sum(self.parts)

    def fits(self, a, b):
        """lambda in P(a, b): at most a parts, each at most b."""
        return len(self.parts) <= a and (not self.parts or self.parts[0] <= b)

    def padded(self, n):
        return tuple(self[i] for i in range(n))

    def conjugate(self):
        if not self.parts:
            return Partition(())
        return Partition(tuple(sum(1 for x in self.parts if x > j) for j in range(self.parts[0])))

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions_in_box(a: int, b: int):
    """All partitions with at most a parts, each at most b, in reverse lex order."""
    out = []

    def rec(prefix, maxpart, left):
        if left == 0:
            out.append(Partition(tuple(prefix)))
            return
        for x in range(maxpart, -1, -1):
            rec(prefix + [x], x, left - 1)

    rec([], b, a)
    return sorted(set(out), key=lambda l: (-l.size(), tuple(-x for x in l.parts)), reverse=False)


def exponent_set(lam: Partition, c: int):
    """Exponents {lam_i + c - i} of the monomial list M_c(lam)."""
    if len(lam) > c:
        raise ValueError("partition has more than c parts")
    return [lam[i - 1] + c - i for i in range(1, c + 1)]


def partition_from_exponents(exps):
    """Inverse of exponent_set: a strictly decreasing list -> partition."""
    c = len(exps)
    ex = sorted(exps, reverse=True)
    return Partition(tuple(ex[i - 1] - (c - i) for i in range(1, c + 1)))


def dual_complement(lam: Partition, a: int, b: int) -> Partition:
    """The partition lam-hat in P(b, a) whose exponent set complements lam's.

    M_b(lam-hat) = {0, ..., a+b-1} minus M_a(lam).
    """
    if not lam.fits(a, b):
        raise ValueError("partition outside the a x b box")
    s = set(exponent_set(lam, a))
    rest = [x for x in range(a + b - 1, -1, -1) if x not in s]
    return partition_from_exponents(rest)


# ---------------------------------------------------------------------- Schur

def vandermonde(vars_, reg) -> Poly:
    out = Poly.const(reg, 1)
    for i in range(len(vars_)):
        for j in range(i + 1, len(vars_)):
            out = out * (Poly.var(reg, vars_[i]) - Poly.var(reg, vars_[j]))
    return out


def divide_by_vandermonde(f: Poly, vars_) -> Poly:
    for i in range(len(vars_)):
        for j in range(i + 1, len(vars_)):
            f = div_by_difference(f, vars_[i], vars_[j])
    return f


def schur(lam, A, reg: Registry | None = None) -> Poly:
    """Schur polynomial.  Bialternant for a concrete alphabet, Jacobi-Trudi otherwise."""
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    if isinstance(A, Alphabet):
        reg = _reg_for(A, reg)
        N = len(A)
        if len(lam) > N:
            return Poly(reg, {})
        exps = exponent_set(lam, N)
        M = [[Poly.var(reg, x, ex) for x in A.variables] for ex in exps]
        if N == 0:
            return Poly.const(reg, 1)
        return divide_by_vandermonde(det(M), list(A.variables))
    return schur_jt(lam, A, reg)


def schur_jt(lam, A, reg: Registry | None = None) -> Poly:
    """Jacobi-Trudi: s_lam = det(h_{lam_i - i + j})."""
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    A = VirtualAlphabet.of(A)
    reg = _reg_for(A, reg)
    n = len(lam)
    if n == 0:
        return Poly.const(reg, 1)
    M = [[complete(lam[i] - i + j, A, reg) for j in range(n)] for i in range(n)]
    return det(M)


def hook_schur(i: int, j: int, A, reg: Registry | None = None) -> Poly:
    """s_(i|j) = s_(i+1, 1^j) via (-1)^j s_(i|j) = sum_{k+l=j} (-1)^l h_{i+k+1} e_l."""
    A = VirtualAlphabet.of(A)
    reg = _reg_for(A, reg)
    if i < 0 or j < 0:
        return Poly(reg, {})
    out = Poly(reg, {})
    for k in range(j + 1):
        l = j - k
        out = out + (complete(i + k + 1, A, reg) * elem(l, A, reg)).scale((-1) ** l)
    return out.scale((-1) ** j)


def h_reduce(N: int, X, Y: Alphabet, c: int, r: int, reg: Registry | None = None) -> Poly:
    """Right side of h-reduction: sum_{0<=i<=c} (-1)^(c-i) s_(r-1|c-i)(X+Y) h_i(X).

    N is the index c + r of the complete function being reduced; the result is
    checked against h_N(X).
    """
    if len(Y) > c:
        raise ValueError("|Y| must be at most c")
    if r < 1 or N != c + r:
        raise ValueError("need r >= 1 and N = c + r")
    X = VirtualAlphabet.of(X)
    XY = X + Y
    reg = _reg_for(XY, reg)
    out = Poly(reg, {})
    for i in range(c + 1):
        out = out + (hook_schur(r - 1, c - i, XY, reg) * complete(i, X, reg)).scale((-1) ** (c - i))
    if out != complete(N, X, reg):
        raise ArithmeticError("h-reduction identity failed")
    return out


def monomial_reduction(m: int, i: int, A: Alphabet, reg: Registry | None = None) -> Poly:
    """x_i^m = sum_j (-1)^(a-j) s_(m-a|a-j)(A) x_i^(j-1) for m >= a."""
    reg = _reg_for(A, reg)
    a = len(A)
    xi = A.variables[i - 1]
    out = Poly(reg, {})
    for j in range(1, a + 1):
        out = out + (hook_schur(m - a, a - j, A, reg) * Poly.var(reg, xi, j - 1)).scale((-1) ** (a - j))
    return out


def monomial_symmetric(lam, vars_, reg) -> Poly:
    """m_lam(vars): sum of distinct permutations of x^lam."""
    from itertools import permutations
    lam = tuple(lam) + (0,) * (len(vars_) - len(tuple(lam)))
    t = {}
    for perm in set(permutations(lam)):
        e = [0] * reg.n
        for v, x in zip(vars_, perm):
            e[reg.index[v]] = x
        t[tuple(e)] = 1
    return Poly(reg, t)


def partitions_of(n: int, maxparts: int, maxpart: int | None = None):
    """Partitions of n with at most maxparts parts (each at most maxpart)."""
    if maxpart is None:
        maxpart = n
    out = []

    def rec(prefix, left, cap):
        if left == 0:
            out.append(tuple(prefix))
            return
        if len(prefix) == maxparts:
            return
        for x in range(min(left, cap), 0, -1):
            rec(prefix + [x], left - x, x)

    rec([], n, maxpart)
    return out
