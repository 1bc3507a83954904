from __future__ import annotations

import json
import subprocess
import sys

import pytest

from psigreedoid.cli import main
from psigreedoid.graph import corona_k1, cycle_graph, parse_edge_list


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def k2_file(tmp_path):
    p = tmp_path / "k2.txt"
    p.write_text("n 2\n0 1\n")
    return str(p)


# --- analyze ----------------------------------------------------------------

def test_analyze_fig2_g2(capsys):
    code, out, _ = run(capsys, "analyze", "--catalog", "fig2_G2", "--json")
    data = json.loads(out)
    assert code == 0
    assert (data["well_covered"], data["konig_egervary"], data["very_well_covered"]) == (False, True, False)


def test_analyze_fig3_h(capsys):
    code, out, _ = run(capsys, "analyze", "--catalog", "fig3_H", "--json")
    assert json.loads(out)["greedoid"]["oracle"]["is_greedoid"] is True


def test_analyze_k2_file(capsys, k2_file):
    code, out, _ = run(capsys, "analyze", k2_file, "--json")
    data = json.loads(out)
    assert (data["alpha"], data["mu"], data["konig_egervary"]) == (1, 1, True)
    assert data["psi"] == [[], [0], [1]]
    assert data["greedoid"]["oracle"]["is_greedoid"] is True


def test_analyze_text(capsys, k2_file):
    code, out, _ = run(capsys, "analyze", k2_file)
    assert code == 0 and "alpha: 1" in out and "greedoid(oracle): true" in out


def test_analyze_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO("n 3\n0 1\n1 2\n"))
    code, out, _ = run(capsys, "analyze", "-", "--json")
    assert code == 0 and json.loads(out)["n"] == 3


def test_analyze_errors(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("n 3\n0 0\n")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 2 and "line 2" in err
    code, _, err = run(capsys, "analyze", "--catalog", "nope")
    assert code == 2 and "nope" in err
    code, _, err = run(capsys, "analyze", str(tmp_path / "missing.txt"))
    assert code == 2
    code, _, err = run(capsys, "analyze")
    assert code == 2


# --- decide -----------------------------------------------------------------

def test_decide_fig2_g1(capsys):
    code, out, _ = run(capsys, "decide", "--catalog", "fig2_G1", "--method", "theorem10", "--json")
    data = json.loads(out)
    assert code == 0 and data["is_greedoid"] and data["decision_path"] == "theorem10"


def test_decide_fig3_g_triangle_free_method(capsys):
    code, out, _ = run(capsys, "decide", "--catalog", "fig3_G", "--method", "theorem33", "--json")
    data = json.loads(out)
    assert code == 1 and not data["is_greedoid"]
    assert data["witness"]["S"] == ["b", "c"]


def test_decide_c4_girth4_method(capsys):
    code, out, _ = run(capsys, "decide", "--catalog", "fig2_C4", "--method", "theorem10", "--json")
    data = json.loads(out)
    assert code == 1 and sorted(data["witness"]["matchings"]) == ["p-q,r-s", "p-s,q-r"]


def test_decide_precondition_exit(capsys):
    code, _, err = run(capsys, "decide", "--catalog", "fig4_G", "--method", "theorem10")
    assert code == 2 and "girth 3" in err


def test_decide_auto_reports_path(capsys):
    code, out, _ = run(capsys, "decide", "--catalog", "fig4_G")
    assert "decision path: oracle" in out


def test_decide_oracle_failed_axiom_text(capsys):
    code, out, _ = run(capsys, "decide", "--catalog", "fig3_G", "--method", "oracle")
    assert code == 1 and "failed axiom:" in out


def test_bad_method_is_usage_error(capsys):
    with pytest.raises(SystemExit) as err:
        main(["decide", "--catalog", "K3", "--method", "fast"])
    assert err.value.code == 2


# --- verify -----------------------------------------------------------------

def test_verify_theorem10_exhaustive(capsys):
    code, out, err = run(capsys, "verify", "--suite", "theorem10", "--exhaustive", "5", "--json")
    data = json.loads(out)
    s = data["suites"][0]
    assert code == 0 and s["disagreements"] == 0 and s["in_scope"] > 0
    assert s["agreements"] + s["disagreements"] == s["in_scope"]
    assert "wall time" in err and "elapsed" not in out


def test_verify_corona_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "corollary1", "--coronas-upto", "5", "--json")
    s = json.loads(out)["suites"][0]
    assert code == 0 and s["in_scope"] == s["scanned"] > 0


def test_verify_extension_suite_random(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "theorem1", "--random", "12", "0.3", "42", "20", "--json")
    data = json.loads(out)
    assert code == 0 and data["suites"][0]["in_scope"] == 20
    assert data["corpora"] == [{"kind": "random", "n_min": 12, "n_max": 12, "p": 0.3, "seed": 42, "count": 20}]


def test_verify_text_output(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "matching,ur", "--exhaustive", "4")
    assert code == 0 and "matching" in out and "result: all suites passed" in out


@pytest.mark.parametrize("argv", [
    ["verify", "--exhaustive", "8"],
    ["verify", "--exhaustive", "0"],
    ["verify", "--suite", "no-such-suite", "--exhaustive", "3"],
    ["verify", "--random", "17", "0.5", "1", "3"],
    ["verify", "--random", "5", "1.5", "1", "3"],
    ["verify", "--random", "5", "x", "1", "3"],
    ["verify", "--coronas-upto", "8"],
])
def test_verify_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_verify_failure_exit_code(capsys, monkeypatch):
    from psigreedoid import verify
    from psigreedoid.verdict import Verdict

    broken = verify.Suite("theorem10", "test", lambda g: Verdict(False, {"S": 1}, "forced"))
    monkeypatch.setitem(verify.SUITES, "theorem10", broken)
    code, out, _ = run(capsys, "verify", "--suite", "theorem10", "--exhaustive", "2")
    assert code == 1 and "FAIL" in out and "forced" in out


# --- generate ---------------------------------------------------------------

def test_generate_cycle(capsys):
    code, out, _ = run(capsys, "generate", "--cycle", "4")
    assert code == 0 and parse_edge_list(out) == cycle_graph(4)


def test_generate_corona(capsys, tmp_path):
    c5 = tmp_path / "c5.txt"
    c5.write_text("n 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    code, out, _ = run(capsys, "generate", "--corona", str(c5))
    assert code == 0 and parse_edge_list(out) == corona_k1(cycle_graph(5))
    code, out, _ = run(capsys, "generate", "--corona", "catalog:fig2_C4")
    assert parse_edge_list(out).n == 8


def test_generate_random_deterministic(capsys):
    _, a, _ = run(capsys, "generate", "--random", "8", "0.5", "7")
    _, b, _ = run(capsys, "generate", "--random", "8", "0.5", "7")
    assert a == b and a.startswith("n 8\n")


@pytest.mark.parametrize("argv", [
    ["generate"],
    ["generate", "--cycle", "2"],
    ["generate", "--cycle", "4", "--random", "3", "0.5", "1"],
    ["generate", "--random", "3", "2", "1"],
    ["generate", "--corona", "catalog:none"],
])
def test_generate_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


# --- catalog ----------------------------------------------------------------

def test_catalog_listing(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    assert "fig1_G" in out and "all maximum matchings uniquely restricted" in out
    assert "fig3_G" in out and "Psi not a greedoid" in out


def test_catalog_json_check(capsys):
    code, out, _ = run(capsys, "catalog", "--check", "--json")
    data = json.loads(out)
    assert code == 0 and len(data) == 10
    assert all(c["holds"] for e in data for c in e["claims"])
    by_name = {e["name"]: e for e in data}
    assert "very well-covered" in {c["text"] for c in by_name["fig2_C4"]["claims"]}


# --- entry points -----------------------------------------------------------

def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "psigreedoid", "generate", "--cycle", "3"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "n 3\n0 1\n0 2\n1 2\n"
