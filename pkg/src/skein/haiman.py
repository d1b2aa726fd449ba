"""Shapes, key shapes and Haiman determinants.

A monic monomial x^i y^j is stored as the cell (i, j).  hdet of an ordered
list of N cells is det(m_r(x_c, y_c)) with rows r given by the list and
columns c by the points 1..N.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .polycore import Poly, Registry
from .symfun import Partition, partitions_in_box


def xy_registry(N: int, extra=()):
    return Registry([f"x{i}" for i in range(1, N + 1)] + [f"y{i}" for i in range(1, N + 1)] + list(extra))


def canonical_cells(cells):
    """Rows by y-power ascending, each row by x-power descending."""
    return sorted(set(cells), key=lambda c: (c[1], -c[0]))


@dataclass(frozen=True)
class Shape:
    cells: tuple

    def __post_init__(self):
        cs = [tuple(c) for c in self.cells]
        if len(set(cs)) != len(cs):
            raise ValueError("shape cells must be distinct")
        object.__setattr__(self, "cells", tuple(canonical_cells(cs)))

    def __len__(self):
        return len(self.cells)

    def row(self, j):
        return [c for c in self.cells if c[1] == j]

    def to_json(self):
        return [list(c) for c in sorted(self.cells)]

    @classmethod
    def from_json(cls, data):
        return cls(tuple(tuple(c) for c in data))


def hdet(monomials, xs=None, ys=None, reg: Registry | None = None) -> Poly:
    """Haiman determinant of an ordered list of cells (x-exp, y-exp).

    Computed as the antisymmetrization sum over permutations; duplicate
    cells give zero.
    """
    cells = [tuple(m) for m in monomials]
    N = len(cells)
    if reg is None:
        reg = xy_registry(N)
    xs = xs or [f"x{i}" for i in range(1, N + 1)]
    ys = ys or [f"y{i}" for i in range(1, N + 1)]
    if len(xs) != N:
        raise ValueError("need one point per monomial")
    if len(set(cells)) != N:
        return Poly(reg, {})
    ix = [reg.index[v] for v in xs]
    needs_y = any(j for _, j in cells)
    iy = [reg.index[v] for v in ys] if needs_y else []
    out = {}
    zero = [0] * reg.n
    for perm in permutations(range(N)):
        inv = sum(1 for i in range(N) for j in range(i + 1, N) if perm[i] > perm[j])
        e = list(zero)
        for r, c in enumerate(perm):
            e[ix[c]] += cells[r][0]
            if cells[r][1]:
                e[iy[c]] += cells[r][1]
        e = tuple(e)
        out[e] = out.get(e, 0) + (-1 if inv & 1 else 1)
    return Poly(reg, out)


def shape_det(S: Shape, reg=None, xs=None, ys=None) -> Poly:
    return hdet(list(S.cells), xs, ys, reg)


def monomial_list(lam, c: int):
    """M_c(lam) = [x^(lam_1+c-1), ..., x^(lam_c)]."""
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    return [(lam[i - 1] + c - i, 0) for i in range(1, c + 1)]


def key_cells(a: int, b: int, l: int, lam) -> list:
    """Key_l(lam) in its determinant order: x-row descending, then y-row descending."""
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    if not (a >= b >= l >= 0):
        raise ValueError("need a >= b >= l >= 0")
    if not lam.fits(l, b - l):
        raise ValueError("partition must lie in P(l, b - l)")
    row0 = [(k, 0) for k in range(a + b - l - 1, -1, -1)]
    row1 = [(lam[i - 1] + l - i, 1) for i in range(1, l + 1)]
    return row0 + row1


def key_shape(a, b, l, lam) -> Shape:
    return Shape(tuple(key_cells(a, b, l, lam)))


def key_det(a: int, b: int, l: int, lam, reg: Registry | None = None) -> Poly:
    """Delta_{Key_l(lam)} in k[X, Y] with |X| = |Y| = a + b."""
    return hdet(key_cells(a, b, l, lam), reg=reg or xy_registry(a + b))


def key_partitions(a: int, b: int):
    """All (l, lam) with 0 <= l <= b and lam in P(l, b - l); there are 2^b."""
    return [(l, lam) for l in range(b + 1) for lam in partitions_in_box(l, b - l)]


def enumerate_shapes(l: int, a: int, b: int):
    """The family S_l: first row {1..x^(a-1)} plus b-l exponents in [a, a+b-1],
    second row l cells with x-exponents in [0, b-1]."""
    out = []
    for top in combinations(range(a, a + b), b - l):
        for bot in combinations(range(b), l):
            cells = [(k, 0) for k in range(a)] + [(s, 0) for s in top] + [(r, 1) for r in bot]
            out.append(Shape(tuple(cells)))
    return out


def sc_order(S: Shape):
    """Schur-complement row order: x-row ascending, then y-row ascending."""
    return sorted(S.cells, key=lambda c: (c[1], c[0]))
