from __future__ import annotations

import json

import pytest

from hallcluster.cli import main, parse_dims, parse_module, parse_primes, parse_quiver
from hallcluster.laurent import parse_laurent
from hallcluster.quiver import Quiver


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def files(tmp_path):
    (tmp_path / "a2.q").write_text("vertices=2; arrows=[(1,2)]\n")
    (tmp_path / "a3.q").write_text("vertices=3\narrows=[(1,2),(3,2)]\n")
    (tmp_path / "rel.q").write_text("vertices=3\narrows=[(3,2),(2,1)]\nrel: 1*[a2,a1]\n")
    (tmp_path / "bad.q").write_text("vertices=3; arrows=[(1,5)]\n")
    (tmp_path / "i2.m").write_text("dims=[1,1,1]\nmat 1 = [[1]]\nmat 2 = [[1]]\n")
    return tmp_path


def test_parse_quiver():
    assert parse_quiver("vertices=2; arrows=[(1,2)]") == Quiver(2, ((0, 1),))
    q = parse_quiver("vertices=3; arrows=[(3,2),(2,1)]\nrel: 1*[a2,a1]")
    assert len(q.relations) == 1 and q.relations[0].terms == ((1, (1, 0)),)
    q2 = parse_quiver("vertices=3; arrows=[(3,2),(2,1)]; relations=[{coeff: 1, path: [2,1]}]")
    assert q2 == q
    with pytest.raises(ValueError):
        parse_quiver("vertices=3; arrows=[(1,5)]")
    with pytest.raises(ValueError):
        parse_quiver("arrows=[(1,2)]")


def test_parse_module(a3_rel):
    m = parse_module("dims=[1,1,0]\nmat 2 = [[4]]", a3_rel, 3)
    assert m.mats[1].tolist() == [[1]]
    with pytest.raises(ValueError):
        parse_module("dims=[1,1,1]\nmat 1 = [[1]]\nmat 2 = [[1]]", a3_rel, 2)
    with pytest.raises(ValueError):
        parse_module("dims=[1,1,0]\nmat 2 = [[1,1]]", a3_rel, 2)


def test_parse_small_things():
    assert parse_primes("2,3") == [2, 3]
    for bad in ("2,2", "4", "", "x"):
        with pytest.raises(ValueError):
            parse_primes(bad)
    assert parse_dims("(1,2)") == (1, 2)


def test_spec_examples(capsys, files):
    code, out, _ = run(capsys, "green", "--quiver", str(files / "a2.q"), "--primes", "2,3", "--max-total-dim", "3")
    assert code == 0
    code, out, _ = run(capsys, "cc", "--quiver", str(files / "a3.q"), "--object", "S2")
    assert code == 0 and out.strip() == "(x1*x3+1)/x2"
    code, out, _ = run(capsys, "cluster", "mutate", "--b", "[[0,1],[-1,0]]", "--seq", "1,2,1,2,1,2,1,2,1,2")
    assert code == 0 and "initial seed recovered: yes" in out


def test_module_file(capsys, files):
    code, out, _ = run(capsys, "cc", "--quiver", str(files / "a3.q"), "--module-file", str(files / "i2.m"))
    assert code == 0 and out.strip() == "(x1*x3+x2^2+2*x2+1)/(x1*x2*x3)"


def test_exit_codes(capsys, files):
    assert run(capsys, "cc", "--quiver", str(files / "bad.q"), "--object", "S1")[0] == 2
    assert run(capsys, "cc", "--quiver", "nowhere", "--object", "S1")[0] == 2
    assert run(capsys, "green", "--quiver", "a2", "--primes", "4")[0] == 2
    assert run(capsys, "no-such-command")[0] == 2
    assert run(capsys, "cluster", "enumerate", "--b", "[[0,2],[-2,0]]", "--ceiling", "10")[0] == 3
    assert run(capsys, "cluster", "mutate", "--b", "[[0,1],[1,0]]", "--seq", "1")[0] == 2


def test_violation_exit_code(capsys, monkeypatch):
    import hallcluster.cli as cli_mod
    from hallcluster.green import Report

    monkeypatch.setattr(cli_mod, "thm82_check", lambda q, m, n: Report("thm82", (m, n), (1,), (2,)))
    code, out, _ = run(capsys, "twocy", "thm82", "--quiver", "a2", "--m", "S1", "--n", "S2")
    assert code == 1 and "MISMATCH" in out


def test_relation_file(capsys, files):
    code, out, _ = run(capsys, "quiver-check", "--quiver", str(files / "rel.q"))
    assert code == 0 and "relations: 1" in out


def _json(capsys, *args):
    code, out, _ = run(capsys, "--json", *args)
    return code, out


@pytest.mark.parametrize("args", [
    ("cc", "--quiver", "a3", "--object", "I2"),
    ("ck", "--quiver", "a2-left", "--m", "S2+S2", "--n", "S1+S1"),
    ("green", "--quiver", "a2", "--primes", "2", "--max-total-dim", "2", "--variant", "rewritten"),
    ("twocy", "classes", "--quiver", "a2", "--dims", "1,1"),
    ("cluster", "finite-type", "--b", "[[0,2],[-2,0]]"),
])
def test_json_deterministic_and_roundtrips(capsys, args):
    code1, out1 = _json(capsys, *args)
    code2, out2 = _json(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert json.dumps(doc, sort_keys=True, indent=2) == out1.strip()
    assert doc["command"] and doc["ok"] is True and doc["exit_code"] == 0


def test_json_values_parse_back(capsys):
    _, out = _json(capsys, "ck", "--quiver", "a2-left", "--m", "S2+S2", "--n", "S1+S1")
    r = json.loads(out)["results"][0]
    assert parse_laurent(r["lhs"], 2) == parse_laurent(r["rhs"], 2)
    _, out = _json(capsys, "cc", "--quiver", "a3", "--object", "S2")
    assert parse_laurent(json.loads(out)["notes"]["value"], 3) == parse_laurent("(x1*x3+1)/x2", 3)


@pytest.mark.parametrize("args", [
    ("quiver-check", "--quiver", "kronecker"),
    ("iso-classes", "--quiver", "kronecker", "--dims", "1,1"),
    ("hall", "--quiver", "a2", "S1", "S2"),
    ("hall", "--quiver", "a2", "--coproduct", "P1"),
    ("green", "--quiver", "a3-rel", "--variant", "nonhereditary", "--primes", "2", "--max-total-dim", "2"),
    ("green", "--quiver", "a2", "--variant", "degenerated", "--max-total-dim", "2"),
    ("coproduct-check", "--quiver", "a2", "--grade", "1,1"),
    ("pairing-check", "--quiver", "a2", "--grade", "1,1", "--twisted"),
    ("serre-check", "--quiver", "a2"),
    ("cluster-mult", "--quiver", "kronecker", "--xi", "S1", "--eta", "S2"),
    ("assoc-check", "--quiver", "a2", "--max-total-dim", "2"),
    ("assoc-check", "--quiver", "a2", "--max-total-dim", "2", "--higher"),
    ("cluster", "enumerate", "--b", "[[0,1],[-1,0]]"),
    ("twocy", "thm82", "--quiver", "a2", "--max-total-dim", "2"),
])
def test_commands_succeed(capsys, args):
    assert run(capsys, *args)[0] == 0


def test_hall_output(capsys):
    _, out, _ = run(capsys, "hall", "--quiver", "a2", "S2", "S1")
    assert out.strip() == "(1)*u_S1+S2"
