"""Hypothesis strategies for small exact polynomials."""
from hypothesis import strategies as st

from skein.polycore import Poly, Registry

REG = Registry(["x1", "x2", "x3", "y1", "v_1", "v_2"])
ODD = Registry(["x1", "x2", "xi1", "xi2", "xi3"])


def polys(reg=REG, max_terms=4, max_exp=2):
    exps = st.tuples(*[st.integers(0, 1 if i in reg.oddset else max_exp) for i in range(reg.n)])
    coefs = st.integers(-6, 6).filter(bool)
    return st.dictionaries(exps, coefs, max_size=max_terms).map(lambda d: Poly(reg, d))


def homogeneous(reg=REG, max_terms=3):
    """Homogeneous polynomials: random monomials of one fixed weight."""
    def build(data):
        ms, cs = data
        if not ms:
            return reg.zero()
        w = reg.weight_of(ms[0])
        return Poly(reg, {m: c for m, c in zip(ms, cs) if reg.weight_of(m) == w})
    exps = st.tuples(*[st.integers(0, 2) for _ in range(reg.n)])
    return st.tuples(st.lists(exps, min_size=1, max_size=max_terms),
                     st.lists(st.integers(-5, 5).filter(bool), min_size=max_terms, max_size=max_terms)).map(build)
