from itertools import permutations
from math import comb

import pytest
from hypothesis import given, strategies as st

from skein.haiman import (Shape, enumerate_shapes, hdet, key_cells, key_det, key_partitions, monomial_list,
                          xy_registry)
from skein.ideals import eab_ring, key_lemma_check, ybar_images
from skein.symfun import Partition, alphabet, schur, vandermonde


def leibniz_hdet(cells, reg):
    """Oracle: expand det(m_r(x_c, y_c)) directly from the matrix."""
    N = len(cells)
    M = [[reg.var(f"x{c}") ** i * reg.var(f"y{c}") ** j for c in range(1, N + 1)] for i, j in cells]
    out = reg.zero()
    for perm in permutations(range(N)):
        inv = sum(1 for a in range(N) for b in range(a + 1, N) if perm[a] > perm[b])
        t = reg.one()
        for r, c in enumerate(perm):
            t = t * M[r][c]
        out = out + t.scale((-1) ** inv)
    return out


def test_vandermonde_shape():
    reg = xy_registry(3)
    assert hdet([(2, 0), (1, 0), (0, 0)], reg=reg) == vandermonde(["x1", "x2", "x3"], reg)


def test_four_by_four_example():
    reg = xy_registry(4)
    cells = [(2, 0), (1, 0), (0, 0), (0, 1)]
    assert hdet(cells, reg=reg) == leibniz_hdet(cells, reg)


@given(st.lists(st.tuples(st.integers(0, 2), st.integers(0, 1)), min_size=1, max_size=4, unique=True))
def test_hdet_matches_leibniz(cells):
    reg = xy_registry(len(cells))
    assert hdet(cells, reg=reg) == leibniz_hdet(cells, reg)


@given(st.integers(0, 3), st.integers(0, 2))
def test_bialternant(p, q):
    lam = Partition(tuple(x for x in sorted((p, q), reverse=True) if x))
    reg = xy_registry(3)
    xs = ["x1", "x2", "x3"]
    assert hdet(monomial_list(lam, 3), reg=reg) == vandermonde(xs, reg) * schur(lam, alphabet("X", xs), reg)


def test_key_examples():
    reg = xy_registry(2)
    x1, x2, y1, y2 = reg.gens("x1", "x2", "y1", "y2")
    assert key_det(1, 1, 0, ()) == x1 - x2
    assert key_det(1, 1, 1, ()) == y2 - y1
    assert key_cells(2, 1, 1, ()) == [(1, 0), (0, 0), (0, 1)]
    with pytest.raises(ValueError):
        key_cells(1, 2, 0, ())


@pytest.mark.parametrize("a,b", [(1, 1), (2, 1), (2, 2), (3, 2)])
def test_maximal_key(a, b):
    value, sign = key_lemma_check(a, b, b, ())
    yb = ybar_images(a, b, eab_ring(a, b).reg)
    prod = eab_ring(a, b).reg.one()
    for i in range(a + 1, a + b + 1):
        prod = prod * yb[i]
    assert sign == 1 and value == prod


@pytest.mark.parametrize("b", [1, 2, 3])
def test_key_partition_count(b):
    assert len(key_partitions(b, b)) == 2 ** b


@pytest.mark.parametrize("a,b", [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3)])
def test_shape_count(a, b):
    for l in range(b + 1):
        shapes = enumerate_shapes(l, a, b)
        assert len(shapes) == comb(b, b - l) * comb(b, l)
        assert all(len(S) == a + b for S in shapes)


def test_shape_json_roundtrip():
    S = Shape(((0, 1), (1, 0), (0, 0)))
    assert Shape.from_json(S.to_json()) == S
    with pytest.raises(ValueError):
        Shape(((0, 0), (0, 0)))
