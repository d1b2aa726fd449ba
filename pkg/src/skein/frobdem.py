"""Demazure and Sylvester operators, antisymmetrization, Frobenius dual bases."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .polycore import Poly, div_by_difference
from .symfun import Alphabet, Partition, dual_complement, partitions_in_box, schur, divide_by_vandermonde


@dataclass(frozen=True)
class FrobeniusData:
    """Sym(big)^(blocks) inside the polynomial ring on big_alphabet."""
    big_alphabet: Alphabet
    blocks: tuple

    def __post_init__(self):
        if sum(self.blocks) != len(self.big_alphabet) or any(b < 1 for b in self.blocks):
            raise ValueError("blocks must be a composition of the alphabet size")

    def block_vars(self):
        out, i = [], 0
        for b in self.blocks:
            out.append(self.big_alphabet.variables[i:i + b])
            i += b
        return out


def _vars(A):
    return list(A.variables) if isinstance(A, Alphabet) else list(A)


def demazure(i: int, f: Poly, A) -> Poly:
    """(f - s_i f)/(x_i - x_{i+1}) for the i-th and (i+1)-th letters of A (1-based)."""
    xs = _vars(A)
    a, b = xs[i - 1], xs[i]
    return div_by_difference(f - f.swap(a, b), a, b)


def apply_word(word, f: Poly, A) -> Poly:
    """Apply the operator product d_{w1} d_{w2} ... d_{wn}; the last index acts first."""
    for i in reversed(word):
        f = demazure(i, f, A)
        if not f.terms:
            break
    return f


def longest_word(N: int):
    """(d_1 ... d_{N-1}) ... (d_1 d_2) d_1 as a list of indices."""
    w = []
    for m in range(N - 1, 0, -1):
        w.extend(range(1, m + 1))
    return w


def longest_trace(A, f: Poly) -> Poly:
    return apply_word(longest_word(len(_vars(A))), f, A)


def sylvester_word(a: int, b: int):
    """(d_b ... d_1)(d_{b+1} ... d_2) ... (d_{a+b-1} ... d_a)."""
    w = []
    for i in range(1, a + 1):
        w.extend(range(b + i - 1, i - 1, -1))
    return w


def is_block_symmetric(f: Poly, blocks) -> bool:
    for blk in blocks:
        for x, y in zip(blk, blk[1:]):
            if f.swap(x, y) != f:
                return False
    return True


def sylvester(a: int, b: int, f: Poly, A, word=None, check=True) -> Poly:
    """Sylvester operator Sym(X1|X2) -> Sym(X1+X2), X1 = first a letters of A."""
    xs = _vars(A)
    if len(xs) != a + b:
        raise ValueError("alphabet must have a + b letters")
    if check and not is_block_symmetric(f, [xs[:a], xs[a:]]):
        raise ValueError("input is not symmetric in each block")
    return apply_word(word if word is not None else sylvester_word(a, b), f, xs)


def antisymmetrize(xs, ys, f: Poly) -> Poly:
    """sum_sigma sgn(sigma) sigma(f), sigma acting on (x_i, y_i) pairs together."""
    xs, ys = list(xs), list(ys or [])
    if ys and len(xs) != len(ys):
        raise ValueError("alphabets must have equal size")
    reg = f.reg
    N = len(xs)
    ix = [reg.index[v] for v in xs]
    iy = [reg.index[v] for v in ys]
    out = {}
    for perm in permutations(range(N)):
        inv = sum(1 for i in range(N) for j in range(i + 1, N) if perm[i] > perm[j])
        s = -1 if inv & 1 else 1
        for k, c in f.terms.items():
            e = list(k)
            for i in range(N):
                e[ix[perm[i]]] = k[ix[i]]
                if iy:
                    e[iy[perm[i]]] = k[iy[i]]
            e = tuple(e)
            out[e] = out.get(e, 0) + s * c
    return Poly(reg, out)


def trace_via_alternant(A, f: Poly) -> Poly:
    """Alt(f)/Delta(A), the closed form of the longest trace."""
    xs = _vars(A)
    return divide_by_vandermonde(antisymmetrize(xs, None, f), xs)


def divide_by_block_vandermondes(f: Poly, X1, X2) -> Poly:
    return divide_by_vandermonde(divide_by_vandermonde(f, _vars(X1)), _vars(X2))


def dual_basis(a: int, b: int, X1: Alphabet, X2: Alphabet, reg):
    """Pairs (s_lam(X1), (-1)^|lam-hat| s_lam-hat(X2)) for lam in P(a, b)."""
    out = []
    for lam in partitions_in_box(a, b):
        lh = dual_complement(lam, a, b)
        out.append((lam, schur(lam, X1, reg), schur(lh, X2, reg).scale((-1) ** lh.size())))
    return out


def pairing_matrix(a: int, b: int, X1: Alphabet, X2: Alphabet, reg):
    """Matrix of d_{a,b}(s_lam(X1) * dual_mu) over lam, mu in P(a, b)."""
    basis = dual_basis(a, b, X1, X2, reg)
    A = list(X1.variables) + list(X2.variables)
    M = []
    for lam, s, _ in basis:
        row = []
        for mu, _, d in basis:
            row.append(sylvester(a, b, s * d, A, check=False))
        M.append(row)
    return [lam for lam, _, _ in basis], M
