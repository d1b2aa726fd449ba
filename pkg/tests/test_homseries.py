import pytest
from hypothesis import given, strategies as st

from skein.homseries import (SeriesExpr, compare_series, default_window, deformation_series,
                             hh_series_of_invariant_ring,
                             hom_to_web_series, hopf_crosscheck, hopf_parity_series, sym_series, unknot_series)
from skein.polycore import LaurentSeries, Weight, Window
from skein.symfun import partitions_in_box

W = Window(-16, 16, 8, -4, 0)


def test_unknot_display():
    assert str(unknot_series(1)) == "(1+a^-1*q^2)/(1-q^2)"
    assert str(unknot_series(1, deformed=True)) == "(1+a^-1*q^2)/((1-q^2)*(1-q^-2*t^2))"
    assert str(unknot_series(0)) == "1"
    assert str(unknot_series(1, dual=True)) == "(1+a*q^-2)/(1-q^2)"


def test_unknot_expansion_b1():
    got = unknot_series(1).expand(W, 1).restricted()
    want = {}
    for k in range(0, 9):
        want[Weight(2 * k)] = 1
        want[Weight(2 * k + 2, 0, -1)] = 1
    assert got == {w: c for w, c in want.items() if W.contains(w)}


@pytest.mark.parametrize("b", [0, 1, 2, 3])
def test_deformation_factorization(b):
    slope = max(b, 1)
    lhs = unknot_series(b, deformed=True).expand(W, slope)
    assert lhs == unknot_series(b).expand(W, slope) * deformation_series(b).expand(W, slope)


def _long_division_oracle(num_factors, den_factors, window, slope):
    """Coefficients c with den * c = num, solved term by term in increasing height."""
    num = LaurentSeries({Weight(): 1}, window, slope)
    for s, m in num_factors:
        num = num * LaurentSeries({Weight(): 1, m: s}, window, slope)
    den = {Weight(): 1}
    for s, m in den_factors:
        new = {}
        for w, c in den.items():
            new[w] = new.get(w, 0) + c
            new[w + m] = new.get(w + m, 0) + s * c
        den = new
    height = lambda w: (w.q + slope * w.t, w.t)
    out = {}
    keys = sorted({w for w in num.coeffs} | set(_candidates(den_factors, window, slope)), key=height)
    for w in keys:
        if not window.contains(w) and height(w)[0] > window.qmax + slope * window.tmax:
            continue
        acc = num.coeffs.get(w, 0)
        for dw, dc in den.items():
            if dw != Weight():
                acc -= dc * out.get(w - dw, 0)
        if acc:
            out[w] = acc
    return {w: c for w, c in out.items() if window.contains(w)}


def _candidates(den_factors, window, slope):
    ws = {Weight()}
    for _, m in den_factors:
        ws |= {w + m * k for w in list(ws) for k in range(1, 12)}
    extra = {w + Weight(2 * j, 0, -i) for w in ws for j in range(0, 12) for i in range(0, 3)}
    return ws | extra


@given(st.lists(st.integers(1, 3), max_size=2), st.lists(st.integers(1, 3), min_size=1, max_size=2),
       st.lists(st.integers(1, 2), max_size=1))
def test_expansion_matches_long_division(nums, dens, defs):
    Wd = Window(-8, 10, 4, -2, 0)
    num_f = [(1, Weight(2 * i, 0, -1)) for i in nums]
    den_f = [(-1, Weight(2 * i)) for i in dens] + [(-1, Weight(-2 * i, 2)) for i in defs]
    s = SeriesExpr.one()
    for sg, m in num_f:
        s = s * SeriesExpr.factor(sg, m, 1)
    for sg, m in den_f:
        s = s * SeriesExpr.factor(sg, m, -1)
    got = s.expand(Wd, 2).restricted()
    assert got == _long_division_oracle(num_f, den_f, Wd, 2)


def test_hh_of_invariant_ring():
    for b in range(4):
        assert hh_series_of_invariant_ring((b,)).expand(W, 1) == unknot_series(b).expand(W, 1)
    assert str(hh_series_of_invariant_ring((1,))) == "(1+a^-1*q^2)/(1-q^2)"
    theta = hh_series_of_invariant_ring((1, 1, 1)).expand(W, 1)
    want = sym_series(1) * sym_series(1) * sym_series(1)
    for k in (1, 2, 3):
        want = want * SeriesExpr.factor(1, Weight(2 * k, 0, -1), 1)
    assert theta == want.expand(W, 1)


def test_hopf_b0_and_11_summands():
    s0 = hopf_parity_series(2, 0)
    assert len(s0.terms) == 1 and s0.expand(W, 2) == unknot_series(2).expand(W, 2)
    s = hopf_parity_series(1, 1)
    assert [t.prefactor for t in s.terms] == [Weight(2), Weight(-2, 2)]


@pytest.mark.parametrize("a,b", [(a, b) for a in range(4) for b in range(min(a, 2) + 1)])
def test_hopf_parity(a, b):
    for s in (hopf_parity_series(a, b), hopf_parity_series(a, b, deformed=True)):
        assert all(t.prefactor.t % 2 == 0 and all(f.mono.t % 2 == 0 for f in t.factors) for t in s.terms)
        assert not [w for w in s.expand(default_window(a, b), max(a, b, 1)).restricted() if w.t % 2]


def test_hom_to_web():
    a = 3
    for b in (1, 2, 3):
        for l in range(b + 1):
            ratio_count = len(partitions_in_box(l, b - l))
            s = hom_to_web_series(a, b, l)
            base = (sym_series(a) * sym_series(b)).shifted(Weight((a - l) * (b - l)))
            gauss = SeriesExpr(())
            for lam in partitions_in_box(l, b - l):
                gauss = gauss + SeriesExpr.monomial(Weight(2 * lam.size()))
            assert s.expand(W, 1) == (base * gauss).expand(W, 1)
            assert sum(1 for _ in partitions_in_box(l, b - l)) == ratio_count
    assert hom_to_web_series(2, 2, 2).expand(W, 1) == (sym_series(2) * sym_series(2)).expand(W, 1)
    assert hom_to_web_series(2, 1, 0).terms[0].prefactor == Weight(2)


def test_compare_series():
    s = unknot_series(2, deformed=True)
    r = compare_series(s, s, window=W, slope=2)
    assert r.equal and r.shift == Weight()
    r = compare_series(s.shifted(Weight(2)), s, True, W, slope=2)
    assert r.equal and r.shift == Weight(2)
    r = compare_series(s, unknot_series(1), True, W, slope=2)
    assert not r.equal


def test_compare_ambiguous():
    tab = {Weight(0, 0, 0): 1, Weight(0, 0, -1): 1}
    with pytest.raises(ValueError):
        compare_series(tab, tab, True, W)


def test_hopf_crosscheck_11():
    r = hopf_crosscheck(1, 1)
    assert r.equal and r.shift == Weight()
