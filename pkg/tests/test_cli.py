import csv
import io
import json
import subprocess
import sys

import pytest

from densetop import canonical_form, h_analogue, space_from_json
from densetop import theorems
from densetop.cli import EXIT_CAP, EXIT_FALSIFIED, EXIT_OK, EXIT_USAGE, parse_expression, run, search
from densetop.errors import DensetopError


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_check_named_space():
    code, out, _ = call("check", "named:h_analogue")
    assert code == EXIT_OK
    prof = json.loads(out)
    assert prof["ultraconnected"] and not prof["dense_ultraconnected"]
    assert prof["incomparable_pair"] == [1, 2]
    assert prof["dense_ultraconnected_brute"] is False


def test_check_inline_json_and_file(tmp_path):
    text = json.dumps({"n": 2, "opens": [[], [0], [0, 1]]})
    code, out, _ = call("check", text)
    assert code == EXIT_OK and json.loads(out)["T0"]
    f = tmp_path / "s.json"
    f.write_text(text)
    assert call("check", str(f))[1] == out


def test_check_sum_of_named_spaces():
    code, out, _ = call("check", "named:sum:indiscrete:2+indiscrete:1")
    prof = json.loads(out)
    assert code == EXIT_OK
    assert prof["components"] == [[0, 1], [2]]
    assert prof["dc_components"] == [[0, 1], [2]]


def test_verify_json_report(tmp_path):
    dest = tmp_path / "r.json"
    code, out, _ = call("verify", "t1", "--n", "3", "--json", str(dest), "--no-timing")
    assert code == EXIT_OK
    rep = json.loads(out)
    assert rep["checked"] == 29 and rep["failures"] == [] and rep["elapsed_ms"] == 0
    assert rep["verdict"] == "verified at this scale"
    assert json.loads(dest.read_text()) == rep


def test_verify_group_statement():
    code, out, _ = call("verify", "c1", "--order", "2", "--no-timing")
    assert code == EXIT_OK and json.loads(out)["checked"] == 4


def test_verify_falsified_exit_code_and_replay(monkeypatch):
    monkeypatch.setattr(theorems, "is_dense_connected_fast", lambda X: True)
    code, out, _ = call("verify", "t1", "--n", "3", "--no-timing")
    assert code == EXIT_FALSIFIED
    rep = json.loads(out)
    assert rep["verdict"] == "falsified" and rep["failures"]
    for rec in rep["failures"]:
        space = json.dumps(rec["input"]["spaces"][0])
        c, prof, _ = call("check", space)
        assert c == EXIT_OK
        prof = json.loads(prof)
        # the profile recomputes the claim that the broken decider got wrong
        assert prof["dense_connected_brute"] != rec["witness"]["fast"]
        assert prof["dense_connected_brute"] == rec["witness"]["dense_connected"]


def test_search_rediscovers_h_analogue():
    code, out, _ = call("search", "--property", "ultraconnected & !dense_ultraconnected", "--n", "3")
    res = json.loads(out)
    assert code == EXIT_OK and res["result"] == "found"
    W = space_from_json(json.dumps(res["witness"]))
    assert canonical_form(W) == canonical_form(h_analogue())


def test_search_t1_note_and_empty_result():
    res = search("T1 & !discrete", 3)
    assert res["result"] == "none at this scale" and res["witness"] is None
    assert any("T1" in note for note in res["notes"])


def test_expression_precedence():
    pred, names = parse_expression("connected | discrete & !T0")
    assert names == ["connected", "discrete", "T0"]
    with pytest.raises(DensetopError):
        parse_expression("connected &")
    with pytest.raises(DensetopError):
        parse_expression("(connected")


def test_enumerate_output():
    code, out, _ = call("enumerate", "--n", "3")
    lines = out.splitlines()
    assert code == EXIT_OK and len(lines) == 30
    assert json.loads(lines[-1]) == {"count": 29, "mode": "labeled", "n": 3}
    code, out, _ = call("enumerate", "--n", "3", "--mode", "classes", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["index", "n", "opens"] and len(rows) == 10


def test_text_and_csv_formats():
    _, text, _ = call("check", "named:sierpinski", "--format", "text")
    assert "T0: True" in text.splitlines()
    _, out, _ = call("check", "named:sierpinski", "--format", "csv")
    rows = dict(csv.reader(io.StringIO(out)))
    assert rows["T0"] == "True" and rows["key"] == "value"


def test_sym_commands():
    code, out, _ = call("sym", "H_space", "dense_ultraconnected", "--trace")
    res = json.loads(out)
    assert code == EXIT_OK and res["value"] is False and res["trace"]
    code, out, _ = call("sym", "cofinite_N", "--cross-validate", "--radius", "16")
    assert code == EXIT_OK and json.loads(out)["disagreements"] == []


@pytest.mark.parametrize("argv, code, kind", [
    (["verify", "t99", "--n", "3"], EXIT_USAGE, "UnknownTheorem"),
    (["verify", "t1"], EXIT_USAGE, "UsageError"),
    (["verify", "t1", "--n", "-1"], EXIT_USAGE, "UsageError"),
    (["verify", "t1", "--n", "9"], EXIT_CAP, "CapExceeded"),
    (["verify", "t2", "--order", "9"], EXIT_CAP, "CapExceeded"),
    (["sym", "ray_R", "compact"], EXIT_USAGE, "UnknownClaim"),
    (["sym", "nowhere", "T1"], EXIT_USAGE, "UsageError"),
    (["sym", "cofinite_N", "--cross-validate", "--radius", "65"], EXIT_CAP, "CapExceeded"),
    (["check", "named:nope"], EXIT_USAGE, "UsageError"),
    (["check", "{not json"], EXIT_USAGE, "UsageError"),
    (["check", json.dumps({"n": 2, "opens": [[0]]})], EXIT_USAGE, "NotATopology"),
])
def test_structured_errors(argv, code, kind):
    c, out, _ = call(*argv)
    assert c == code
    err = json.loads(out)
    assert err["error"] == kind and err["exit_code"] == code and err["message"]


def test_errors_go_to_stderr_for_text():
    c, out, err = call("verify", "t99", "--n", "3", "--format", "text")
    assert c == EXIT_USAGE and out == "" and "UnknownTheorem" in err


def test_argparse_errors_are_usage():
    assert call("verify")[0] == EXIT_USAGE
    assert call("nonsense")[0] == EXIT_USAGE


def test_reports_are_deterministic():
    for argv in (["verify", "t22", "--n", "4", "--no-timing"],
                 ["verify", "t3", "--order", "4", "--no-timing"],
                 ["search", "--property", "connected & !hyperconnected", "--n", "3"],
                 ["enumerate", "--n", "3", "--mode", "classes"]):
        assert call(*argv)[1] == call(*argv)[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "densetop", "check", "named:h_analogue"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["ultraconnected"] is True
