from hypothesis import given, strategies as st

from skein import suites
from skein.polycore import Poly, Registry
from skein.symfun import (Partition, alphabet, complete, dual_complement, elem, h_reduce, hook_schur,
                          partitions_in_box, power, schur, schur_jt)

REG = Registry(["x1", "x2", "x3", "xp1", "xp2"])
X = alphabet("X", ["x1", "x2", "x3"])
X2 = alphabet("X2", ["x1", "x2"])
XP = alphabet("XP", ["xp1", "xp2"])


def test_virtual_examples():
    reg = Registry(["x", "xp"])
    x, xp = reg.gens("x", "xp")
    A, B = alphabet("A", ["x"]), alphabet("B", ["xp"])
    assert complete(2, A - B, reg) == x ** 2 - x * xp
    assert complete(3, A - A, reg) == 0
    assert power(1, A - B, reg) == elem(1, A, reg) - elem(1, B, reg)
    assert elem(2, X2, REG) == REG.var("x1") * REG.var("x2")


def test_schur_examples():
    x1, x2 = REG.gens("x1", "x2")
    assert schur(Partition((1,)), X2, REG) == x1 + x2
    assert schur(Partition((2, 1)), X2, REG) == x1 ** 2 * x2 + x1 * x2 ** 2
    assert schur(Partition(()), X2, REG) == 1


@given(st.integers(0, 3), st.integers(0, 2))
def test_schur_bialternant_vs_jacobi_trudi(i, j):
    lam = Partition(tuple(sorted((i, j), reverse=True)))
    assert schur(lam, X, REG) == schur_jt(lam, X, REG)


def test_hook_definition_cases():
    for i in range(1, 5):
        assert hook_schur(i - 1, 0, X, REG) == complete(i, X, REG)
        assert hook_schur(0, i - 1, X, REG) == elem(i, X, REG)


@given(st.integers(1, 4), st.integers(1, 4))
def test_hook_recurrence(i, j):
    lhs = complete(i, X, REG) * elem(j, X, REG)
    assert lhs == hook_schur(i, j - 1, X, REG) + hook_schur(i - 1, j, X, REG)


def test_h_reduce_example():
    reg = Registry(["x1", "x2"])
    x1 = reg.var("x1")
    out = h_reduce(2, alphabet("X", ["x1"]), alphabet("Y", ["x2"]), 1, 1, reg)
    assert out == x1 ** 2


def test_h_difference_has_no_i0_term():
    # the (r-1|c) hook has c+1 rows, more than |X| = c
    assert hook_schur(1, 2, X2, REG) == 0


def test_dual_complement_and_box():
    assert len(partitions_in_box(2, 2)) == 6
    # exponent-set complement: {3, 0} -> {2, 1}
    assert dual_complement(Partition((2,)), 2, 2) == Partition((1, 1))
    assert dual_complement(Partition(()), 2, 3) == Partition((2, 2, 2))


def test_identity_suite():
    for name, fn, args in suites.CRITERIA[1][1]:
        r = fn(*args)
        assert (r[0] if isinstance(r, tuple) else r), name
