import pytest

from skein.curvedkoszul import (basis_change_roundtrip, build_curved_koszul, check_zeta_forms, contract_if_unit,
                                koszul_registry, subsets, wedge_sign, zeta_basis)
from skein.symfun import alphabet, complete


def test_b1_square():
    C = build_curved_koszul(1)
    reg = C.reg
    curv = (reg.var("x1") - reg.var("xp1")) * reg.var("vb_1")
    sq = C.square()
    assert sq[0][0] == curv and sq[1][1] == curv and sq[0][1] == 0 and sq[1][0] == 0


def test_b2_curvature():
    C = build_curved_koszul(2)
    reg = C.reg
    D = alphabet("X", ["x1", "x2"]) - alphabet("XP", ["xp1", "xp2"])
    want = complete(1, D, reg) * reg.var("vb_1") + complete(2, D, reg) * reg.var("vb_2")
    assert C.curvature == want and C.check_curvature() and C.check_degrees()


def test_exterior_basics():
    assert subsets(2) == [(), (1,), (2,), (1, 2)]
    assert wedge_sign(1, (2,)) == 1 and wedge_sign(2, (1,)) == -1 and wedge_sign(1, (1,)) == 0


def test_zeta_example():
    reg = koszul_registry(2)
    B = zeta_basis(1, 2, reg)
    # zeta_2 = e_1(M) xi_1 - xi_2 with M = {x1}
    assert B.forward[1] == [reg.var("x1"), -reg.one()]
    assert basis_change_roundtrip(B, reg)


@pytest.mark.parametrize("b", [1, 2, 3])
def test_zeta_forms(b):
    assert all(check_zeta_forms(k, b) for k in range(b + 1))


@pytest.mark.parametrize("b,j", [(1, 1), (2, 1), (2, 2)])
def test_contraction(b, j):
    C, h = contract_if_unit(b, f"vb_{j}")
    assert any(e for row in h for e in row)


def test_contraction_needs_a_unit():
    with pytest.raises(ValueError):
        contract_if_unit(2, None)


def test_json_schema():
    js = build_curved_koszul(1).to_json()
    assert js["schema"] == 1 and [b["label"] for b in js["basis"]] == ["1", "xi1"]
