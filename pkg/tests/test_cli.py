import json
import subprocess
import sys

import pytest

from winset.automata import equivalent, parse_dfa
from winset.cli import main

PARITY_TEXT = """\
dfa 2 01
initial 0
finals 1
0 0 0
0 1 1
1 0 1
1 1 0
"""

ENDS_WITH_A_TEXT = """\
dfa 2 AB
initial 0
finals 1
0 A 1
0 B 0
1 A 1
1 B 0
"""

BA_STAR_NFA = """\
nfa 2 AB
initial 0
finals 0
0 B 1
1 A 0
"""

NOT_CIRCUIT = "input x\nnot g x\noutput y g\n"


@pytest.fixture
def parity_file(tmp_path):
    p = tmp_path / "parity.dfa"
    p.write_text(PARITY_TEXT)
    return str(p)


def test_wdfa_computes_parity_winset(parity_file, capsys):
    assert main(["wdfa", parity_file]) == 0
    out = parse_dfa(capsys.readouterr().out)
    assert out.state_count == 2
    assert equivalent(out, parse_dfa(ENDS_WITH_A_TEXT))


def test_emit_dot_and_json(parity_file, capsys):
    assert main(["wdfa", parity_file, "--emit", "dot"]) == 0
    assert "digraph" in capsys.readouterr().out
    assert main(["wdfa", parity_file, "--emit", "json"]) == 0
    blob = json.loads(capsys.readouterr().out)
    assert blob["initial"] == 0


def test_minimize_roundtrip(parity_file, capsys):
    assert main(["minimize", parity_file]) == 0
    assert parse_dfa(capsys.readouterr().out).state_count == 2


def test_equiv_exit_codes(tmp_path, parity_file, capsys):
    other = tmp_path / "other.dfa"
    other.write_text(PARITY_TEXT.replace("finals 1", "finals 0"))
    assert main(["equiv", parity_file, parity_file]) == 0
    assert main(["equiv", parity_file, str(other)]) == 1
    assert "not equivalent" in capsys.readouterr().out


def test_congruent_command(tmp_path, capsys):
    w = tmp_path / "w.dfa"
    w.write_text(ENDS_WITH_A_TEXT)
    assert main(["congruent", str(w), "A", "BA"]) == 0
    assert main(["congruent", str(w), "A", "B"]) == 1


def test_decide_member(parity_file, capsys):
    assert main(["decide", "member", parity_file, "A"]) == 0
    assert main(["decide", "member", parity_file, "B"]) == 1
    assert main(["decide", "member", parity_file, "X"]) == 2


def test_decide_intersect(tmp_path, parity_file, capsys):
    bstar = tmp_path / "b.nfa"
    bstar.write_text("nfa 1 AB\ninitial 0\nfinals 0\n0 B 0\n")
    assert main(["decide", "intersect", parity_file, str(bstar)]) == 1
    assert "empty" in capsys.readouterr().err
    nfa = tmp_path / "ba.nfa"
    nfa.write_text(BA_STAR_NFA)
    # (BA)* meets the winset of exactly-one-1
    ones = tmp_path / "ones.dfa"
    ones.write_text(
        "dfa 3 01\ninitial 0\nfinals 1\n"
        "0 0 0\n0 1 1\n1 0 1\n1 1 2\n2 0 2\n2 1 2\n"
    )
    assert main(["decide", "intersect", str(ones), str(nfa)]) == 0
    assert capsys.readouterr().out.strip() == "BA"


def test_decide_intersect_budget(tmp_path, parity_file, capsys):
    nfa = tmp_path / "a.nfa"
    nfa.write_text("nfa 1 AB\ninitial 0\nfinals 0\n0 A 0\n")
    assert main(["decide", "intersect", parity_file, str(nfa), "--budget", "1"]) == 2


def test_oracle_member_builtin(capsys):
    assert main(["oracle", "member", "parity", "BBA"]) == 0
    assert main(["oracle", "member", "parity", "BBB"]) == 1
    assert main(["oracle", "member", "dyck", "AAB"]) == 2  # odd length


def test_oracle_slice(capsys):
    assert main(["oracle", "slice", "exact-ones:1", "2"]) == 0
    lines = capsys.readouterr().out.split()
    assert lines == ["AA", "BA"]


def test_oracle_slice_from_file(parity_file, capsys):
    assert main(["oracle", "slice", parity_file, "2"]) == 0
    assert capsys.readouterr().out.split() == ["AA", "BA"]


def test_gadget_lower_bound(capsys):
    assert main(["gadget", "lower-bound", "1"]) == 0
    assert parse_dfa(capsys.readouterr().out).state_count == 18


def test_gadget_chain(capsys):
    assert main(["gadget", "chain", "3", "--finals", "0", "1"]) == 0
    d = parse_dfa(capsys.readouterr().out)
    assert d.finals == frozenset({0, 1})


def test_gadget_errors(capsys):
    assert main(["gadget", "frobnicate", "3"]) == 2
    assert main(["gadget", "gen-subset"]) == 2


def test_gadget_circuit_value(tmp_path, capsys):
    f = tmp_path / "not.circuit"
    f.write_text(NOT_CIRCUIT)
    assert main(["gadget", "circuit", str(f), "--value", "F"]) == 0
    out = capsys.readouterr().out
    assert "word " in out
    word = out.rsplit("word ", 1)[1].strip()
    dfa_text = out.rsplit("word ", 1)[0]
    from winset.decision import member

    assert member(parse_dfa(dfa_text), word)  # NOT(F) is true


def test_enumerate_line_format(tmp_path, capsys):
    witness = tmp_path / "witness.dfa"
    assert main(["enumerate", "2", "--emit-witness", str(witness)]) == 0
    assert capsys.readouterr().out.strip() == "n=2 max=4 exhausted=true"
    from winset.game import winset_dfa

    assert winset_dfa(parse_dfa(witness.read_text())).state_count == 4


def test_enumerate_budget_reports_partial(capsys):
    assert main(["enumerate", "4", "--budget", "0.05"]) == 0
    out = capsys.readouterr().out.strip()
    assert out.startswith("n=4 max=") and out.endswith("exhausted=false")


def test_missing_file_is_a_usage_error(capsys):
    assert main(["wdfa", "/nonexistent/path.dfa"]) == 2
    assert "error:" in capsys.readouterr().err


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "winset.cli", "enumerate", "1"],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "n=1 max=1 exhausted=true"
