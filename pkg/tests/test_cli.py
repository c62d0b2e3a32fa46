import json
import subprocess
import sys
from pathlib import Path

import pytest

from noarb.cli import main

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"

CASES = [
    ("check_all_binomial", 0, ["check", "all", str(DATA / "binomial.json")]),
    ("check_na_dominance", 1, ["check", "na", str(DATA / "dominance.json")]),
    ("emm_binomial", 0, ["emm", str(DATA / "binomial.json")]),
    ("emm_trinomial", 0, ["emm", str(DATA / "trinomial.json")]),
    ("price_binomial_call", 0, ["price", str(DATA / "binomial.json"), str(DATA / "call_payoff.json")]),
    ("price_binomial_zero", 0, ["price", str(DATA / "binomial.json"), str(DATA / "zero_payoff.json")]),
    ("counterexample_3", 0, ["counterexample", "--n", "3"]),
    ("verify_seed0", 0, ["verify", "--seed", "0", "--instances", "5"]),
    ("separate_orthant", 0, ["separate", str(DATA / "orthant_cone.json")]),
    ("separate_gen", 0, ["separate", str(DATA / "cone_with_gen.json")]),
    ("separate_e2", 1, ["separate", str(DATA / "cone_with_e2.json")]),
    ("separate_target", 0, ["separate", str(DATA / "cone_with_gen.json"), "--target", "1,1"]),
]


@pytest.mark.parametrize("name,expected_exit,argv", CASES, ids=[c[0] for c in CASES])
def test_golden_reports_byte_stable(name, expected_exit, argv, capsys):
    code = main(["--json", *argv])
    out = capsys.readouterr().out
    assert code == expected_exit
    golden = (GOLDEN / f"{name}.json").read_text()
    assert out == golden
    json.loads(out)  # the report is well-formed JSON


def test_golden_semantics():
    check = json.loads((GOLDEN / "check_all_binomial.json").read_text())
    assert check["verdicts"] == {k: True for k in check["verdicts"]}
    assert check["exact"] is True

    dom = json.loads((GOLDEN / "check_na_dominance.json").read_text())
    assert dom["verdicts"]["na"] is False
    assert dom["witnesses"]["arbitrage"]["strategy"] == [
        {"t": 1, "asset": "S", "cell": ["u", "d"], "units": "1"}]

    emm = json.loads((GOLDEN / "emm_binomial.json").read_text())
    assert emm["witnesses"]["measure"] == {"u": "1/3", "d": "2/3"}

    tri = json.loads((GOLDEN / "emm_trinomial.json").read_text())
    assert all(v == "0" for v in tri["martingale_residuals"].values())

    price = json.loads((GOLDEN / "price_binomial_call.json").read_text())
    assert price["price"] == "1/3"
    assert price["witnesses"]["hedge"] == [
        {"t": 1, "asset": "S", "cell": ["u", "d"], "units": "2/3"}]
    zero = json.loads((GOLDEN / "price_binomial_zero.json").read_text())
    assert zero["price"] == "0"

    ce = json.loads((GOLDEN / "counterexample_3.json").read_text())
    assert (ce["sup_squared_l2"], ce["min_indicator_gauge"]) == ("9", "1/3")
    assert ce["zero_set_trivial"] is True

    sep = json.loads((GOLDEN / "separate_orthant.json").read_text())
    assert all(v != "0" for v in sep["witnesses"]["functional"].values())
    bad = json.loads((GOLDEN / "separate_e2.json").read_text())
    assert bad["witnesses"]["violating_direction"] == {"a": "0", "b": "1"}


def test_first_kind_concept_routes(capsys):
    for concept in ("na1", "nupbr"):
        assert main(["--json", "check", concept, str(DATA / "binomial.json")]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["verdicts"] == {concept: True}
        assert main(["--json", "check", concept, str(DATA / "dominance.json")]) == 1
        out = json.loads(capsys.readouterr().out)
        assert out["verdicts"] == {concept: False}
        assert out["witnesses"]["arbitrage"]["payoff"] == {"u": "1", "d": "1/2"}


def test_exit_code_taxonomy(capsys):
    assert main(["check", "na", str(DATA / "binomial.json")]) == 0
    assert main(["check", "na", str(DATA / "dominance.json")]) == 1
    assert main(["check", "na", str(DATA / "truncated.json")]) == 2
    assert main(["check", "na", str(DATA / "no_such_file.json")]) == 2
    assert main(["counterexample", "--n", "0"]) == 2
    assert main(["verify", "--seed", "0", "--instances", "0"]) == 2
    assert main(["price", str(DATA / "binomial.json"), str(DATA / "negative_payoff.json")]) == 2
    capsys.readouterr()


def test_internal_disagreement_exits_3(monkeypatch, capsys):
    from noarb import cli
    from noarb.errors import InternalInconsistency

    def boom(model):
        raise InternalInconsistency("routes disagree")

    monkeypatch.setattr(cli, "full_verdict", boom)
    assert main(["check", "all", str(DATA / "binomial.json")]) == 3
    assert "internal inconsistency" in capsys.readouterr().err


def test_counterexample_n1(capsys):
    assert main(["--json", "counterexample", "--n", "1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["sup_squared_l2"] == "1" and out["min_indicator_gauge"] == "1"


def test_verify_self_test_detects_injection(capsys):
    code = main(["--json", "verify", "--seed", "1", "--instances", "2", "--self-test"])
    out = json.loads(capsys.readouterr().out)
    assert code == 1
    assert out["violations"]


def test_human_output_mentions_verdict(capsys):
    main(["check", "na", str(DATA / "binomial.json")])
    assert "na: holds" in capsys.readouterr().out
    main(["emm", str(DATA / "dominance.json")])
    out = capsys.readouterr().out
    assert "none" in out and "arbitrage" in out


def test_console_entry_point_via_module():
    proc = subprocess.run(
        [sys.executable, "-m", "noarb", "--json", "check", "all", str(DATA / "binomial.json")],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "check_all_binomial.json").read_text()
