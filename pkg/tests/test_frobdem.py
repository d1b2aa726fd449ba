import pytest
from hypothesis import given, strategies as st

from skein import suites
from skein.frobdem import (FrobeniusData, antisymmetrize, demazure, longest_trace, sylvester, sylvester_word,
                           trace_via_alternant)
from skein.polycore import Poly, Registry
from skein.symfun import alphabet, elem

REG = Registry(["x1", "x2", "x3", "y1", "y2"])
X = alphabet("X", ["x1", "x2", "x3"])
x1, x2, x3, y1, y2 = REG.gens("x1", "x2", "x3", "y1", "y2")


def test_demazure_examples():
    assert demazure(1, x1, X) == 1
    assert demazure(1, x1 ** 2, X) == x1 + x2
    assert demazure(1, x1 * x2 + x3, X) == 0


@given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.just(0), st.just(0)),
                       st.integers(-4, 4).filter(bool), max_size=4), st.integers(1, 2))
def test_demazure_squares_to_zero(d, i):
    f = Poly(REG, d)
    assert demazure(i, demazure(i, f, X), X) == 0


@given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.just(0), st.just(0)),
                       st.integers(-4, 4).filter(bool), max_size=4), st.integers(1, 3))
def test_trace_linear_over_symmetric(d, k):
    f = Poly(REG, d)
    g = elem(k, X, REG)
    assert longest_trace(X, f * g) == longest_trace(X, f) * g
    assert longest_trace(X, f) == trace_via_alternant(X, f)


def test_staircase_and_unit():
    assert longest_trace(X, x1 ** 2 * x2) == 1
    assert longest_trace(X, REG.one()) == 0
    assert longest_trace(X, x1 ** 3) == 0


def test_sylvester_examples():
    A = ["x1", "x2"]
    assert sylvester(1, 1, x1, A) == 1
    assert sylvester(1, 1, REG.one(), A) == 0
    with pytest.raises(ValueError):
        sylvester(2, 1, x1, ["x1", "x2", "x3"])
    assert sylvester_word(2, 1) == [1, 2]


def test_sylvester_alternative_word():
    # (d2 d1)(d3 d2) vs d2 d1 d3 d2 rewritten by braid move d1 d3 = d3 d1
    reg = Registry(["x1", "x2", "x3", "x4"])
    a1, a2, a3, a4 = reg.gens("x1", "x2", "x3", "x4")
    A = list(reg.names)
    f = (a1 + a2) ** 2 * (a3 ** 3 + a4 ** 3) * a3 * a4
    assert sylvester(2, 2, f, A) == sylvester(2, 2, f, A, word=[2, 3, 1, 2])


def test_antisymmetrize_examples():
    assert antisymmetrize(["x1", "x2"], ["y1", "y2"], x1) == x1 - x2
    assert antisymmetrize(["x1", "x2"], ["y1", "y2"], x1 * y1) == x1 * y1 - x2 * y2
    assert antisymmetrize(["x1", "x2"], ["y1", "y2"], x1 * x2) == 0


def test_frobenius_data():
    F = FrobeniusData(X, (2, 1))
    assert F.block_vars() == [("x1", "x2"), ("x3",)] or F.block_vars() == [["x1", "x2"], ["x3"]]
    with pytest.raises(ValueError):
        FrobeniusData(X, (2, 2))


def test_frobenius_suite():
    for name, fn, args in suites.CRITERIA[2][1]:
        r = fn(*args)
        assert (r[0] if isinstance(r, tuple) else r), name
