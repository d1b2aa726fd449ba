from fractions import Fraction

import pytest

from skein import suites
from skein.coords import (X, bundle, bundle_registry, bundled_curvature, cycles_of, reduction_pi,
                          stability_phi, stability_registry, strand_registry, two_strand_registry, u_to_v,
                          v_to_u, v_to_vdot, vdot_to_v, mod_diagonal)
from skein.symfun import complete, elem


def test_u_v_two_strands():
    reg = strand_registry(2)
    x1, x2, u1, u2, v1, v2 = reg.gens("x1", "x2", "u_1", "u_2", "v_1", "v_2")
    vu = v_to_u(2, reg)
    # v_k = (-1)^(k-1) sum_l e_(l-k)(X) u_l
    assert vu.apply(v1) == u1 + (x1 + x2) * u2
    assert vu.apply(v2) == -u2
    assert u_to_v(2, reg).apply(vu.apply(v1)) == v1


def test_vdot_example():
    reg = strand_registry(2, families=("v", "vd"))
    v1, v2 = reg.gens("v_1", "v_2")
    A, Ap = X(2), X(2, prime=True)
    h1 = complete(1, A - Ap, reg)
    img = v_to_vdot(2, reg).apply(reg.var("vd_1"))
    assert img == v1 + (h1 * v2).scale(Fraction(1, 2))
    assert vdot_to_v(2, reg).apply(img) == reg.var("vd_1")
    assert mod_diagonal(img, 2) == v1


def test_stability_example():
    reg = stability_registry(1, 2, extra=["y1", "y2"])
    phi = stability_phi(1, 2, reg)
    assert phi.apply(reg.var("v1_1")) == reg.var("v2_1") + reg.var("x1") * reg.var("v2_2")
    assert phi.apply(reg.var("y1")) == reg.var("y1")


def test_reduction_on_right_parameters():
    reg = two_strand_registry(2, 1)
    pi = reduction_pi(2, 1, reg)
    assert pi.apply(reg.var("v_L_1")) == 0
    assert pi.apply(pi.apply(reg.var("v_R_1"))) == pi.apply(reg.var("v_R_1"))


def test_bundling_identity_and_transposition():
    assert cycles_of((1, 2)) == [[1], [2]]
    assert cycles_of((2, 1)) == [[1, 2]]
    reg = bundle_registry((1, 1))
    B = bundle((1, 2), (1, 1), reg)
    assert B.apply(reg.var("v1_1")) == reg.var("w_1_1")
    assert B.apply(reg.var("v2_1")) == reg.var("w_2_1")
    with pytest.raises(ValueError):
        bundle((2, 1), (1, 2), bundle_registry((1, 2)))


def test_knot_bundled_curvature_vanishes_on_diagonal():
    reg = bundle_registry((1, 1))
    c = bundled_curvature((2, 1), (1, 1), reg)
    diag = c.subs({"xp1_1": reg.var("x1_1"), "xp2_1": reg.var("x2_1")})
    # the single cycle has X_[1] = X'_[1] as alphabets after closing up
    swapped = c.subs({"xp1_1": reg.var("x2_1"), "xp2_1": reg.var("x1_1")})
    assert diag == 0 and swapped == 0


def test_coordinate_suite():
    for name, fn, args in suites.CRITERIA[3][1]:
        r = fn(*args)
        assert (r[0] if isinstance(r, tuple) else r), (name, r)
