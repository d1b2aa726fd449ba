import json

import pytest

from skein.cli import run


def out(capsys, argv, code=0):
    assert run(argv) == code
    return capsys.readouterr()


def test_unknot(capsys):
    assert out(capsys, ["series", "unknot", "--b", "1"]).out.strip() == "(1+a^-1*q^2)/(1-q^2)"


def test_ideal_hilbert_json(capsys):
    data = json.loads(out(capsys, ["--format", "json", "ideal", "hilbert", "--a", "1", "--b", "1"]).out)
    assert data["schema"] == 1
    assert data["table"][0] == {"a": 0, "q": 2, "t": 0, "coef": "1"}


def test_hdet_keydet_schur(capsys):
    assert out(capsys, ["hdet", "--shape", "[[1,0],[0,0]]"]).out.strip() == "x1 - x2"
    assert out(capsys, ["keydet", "--a", "1", "--b", "1", "--l", "1"]).out.strip() == "-y1 + y2"
    assert out(capsys, ["schur", "--lambda", "2,1", "--n", "2"]).out.strip() == "x1^2*x2 + x1*x2^2"


def test_member_and_gens(capsys):
    assert "Key_0(): 1" in out(capsys, ["ideal", "member", "--a", "1", "--b", "1", "--poly", "x1-x2"]).out
    res = out(capsys, ["ideal", "member", "--a", "1", "--b", "1", "--poly", "x1"], code=1)
    assert "not a member" in res.out and "assertion failed" in res.err
    assert len(out(capsys, ["ideal", "gens", "--a", "2", "--b", "2"]).out.strip().splitlines()) == 4


def test_coords_koszul_digon(capsys):
    assert "v_2 -> -u_2" in out(capsys, ["coords", "map", "--from", "v", "--to", "u", "--a", "2"]).out
    assert out(capsys, ["coords", "map", "--from", "q", "--to", "u", "--a", "2"], code=2).err
    assert "xi1*xi2" in out(capsys, ["koszul", "build", "--b", "2"]).out
    assert "vb_1_inv" in out(capsys, ["koszul", "contract", "--b", "1", "--invert", "vb_1"]).out
    assert out(capsys, ["koszul", "contract", "--b", "1"], code=2).err
    assert "J_exact: True" in out(capsys, ["digon", "--a", "2", "--b", "1"]).out


def test_series_hopf_compare(capsys):
    assert "t^2" in out(capsys, ["series", "hopf", "--a", "1", "--b", "1"]).out
    data = json.loads(out(capsys, ["--format", "json", "series", "compare", "--a", "1", "--b", "1"]).out)
    assert data["equal"] and data["shift"] == "1"


def test_usage_errors(capsys):
    out(capsys, ["series", "unknot", "--nope"], code=2)
    out(capsys, ["bogus"], code=2)


def test_verify_and_determinism(capsys):
    first = out(capsys, ["verify", "symfun"]).out
    second = out(capsys, ["verify", "symfun"]).out
    assert first == second and first.count("PASS") == 8
    data = json.loads(out(capsys, ["--format", "json", "verify", "koszul"]).out)
    assert data["ok"] and data["schema"] == 1


def test_window_env(capsys, monkeypatch):
    monkeypatch.setenv("SKEIN_WINDOW", "0,4,0")
    data = json.loads(out(capsys, ["--format", "json", "series", "unknot", "--b", "1"]).out)
    assert {(r["q"], r["a"]) for r in data["table"]} == {(0, 0), (2, 0), (4, 0), (2, -1), (4, -1)}
