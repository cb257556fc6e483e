import os
import pathlib

import pytest

import bsswb

CORPUS = pathlib.Path(os.environ.get("BSSWB_CORPUS_DIR", pathlib.Path(__file__).parents[2] / "corpus"))


def program(name):
    return (CORPUS / f"{name}.bss").read_text()


def test_run_identity_and_loop():
    r = bsswb.run(program("identity"), ["5"], 100)
    assert r["kind"] == "output" and r["values"] == ["5"] and r["text"] == "output=[5]"
    r = bsswb.run(program("loop"), [], 100)
    assert r["kind"] == "budget-exhausted" and r["steps"] == 100


def test_square_symbolic_and_numeric():
    assert bsswb.run(program("square"), ["3/2"])["values"] == ["9/4"]
    r = bsswb.run(program("square"), ["T1"], sign_mode="numeric", bind={1: "pi"})
    assert r["values"] == ["T1^2"]


def test_oracle_machine_uses_iz():
    assert bsswb.run(program("oracle"), ["T1"])["values"] == ["1"]
    assert bsswb.run(program("oracle"), ["T1"], oracle_context=["T1"])["values"] == ["0"]


def test_codes():
    code = bsswb.encode(program("identity"))
    assert len(code) == 1
    assert bsswb.universal_run(code, ["7"], 100)["values"] == ["7"]
    assert bsswb.parse_program(bsswb.decode(code)) == bsswb.parse_program(program("identity"))
    curried = bsswb.smn_curry(code, ["3"])
    assert bsswb.universal_run(curried, [], 100)["values"] == ["3"]
    q = bsswb.make_quine()
    assert bsswb.universal_run(q, [], 10)["values"] == q


def test_pairing():
    assert bsswb.pair(3, "-5/4") == "3073/4"
    assert bsswb.unpair("770") == (0, "192")
    n = 2**40
    assert bsswb.unpair(bsswb.pair(40, "1/3")) == (40, "1/3")
    with pytest.raises(bsswb.Error):
        bsswb.pair(n, "1/3")
    with pytest.raises(bsswb.Error):
        bsswb.unpair("3")


def test_transcendence_tools():
    assert bsswb.trdeg(["T1", "T2", "T1*T2"])["text"] == "trdeg=2 basis=[0,1] method=jacobian"
    assert bsswb.max_independent_subset(["T1+T2", "T1-T2", "T1"])["trdeg"] == 2
    assert bsswb.kd(["T1", "T2"]) == 2
    ko = bsswb.ko(["T1", "alg(Z^2 - 2, 1, 2)"])
    assert (ko["lower"], ko["upper"], ko["exact"], ko["certificate"]) == (1, 2, 2, "lueroth")
    assert bsswb.find_dependence(["T1^2", "T1^3"], 4, 2) == "X1^3 - X2^2"
    assert bsswb.find_dependence(["T1", "T2"], 2, 2) is None
    assert not bsswb.independent(["T1*T2", "T2"], ["T1"])
    assert bsswb.kolmogorov_set_member(["T1", "T2"], 2)
    with pytest.raises(bsswb.Error):
        bsswb.kd([])


def test_cantor_and_irreducibility():
    assert bsswb.cantor_member_depth("1/2", 1) == "excluded level=1"
    assert bsswb.cantor_member_depth("1/4", 8) == "in-prefix"
    r = bsswb.run(bsswb.cantor_program(), ["1/2"], 10000)
    assert r["kind"] == "output" and r["values"] == []
    assert bsswb.poly_irreducible("T1^2 + T2^2 + 1")
    assert not bsswb.poly_irreducible("T1^2 - T2^2")
