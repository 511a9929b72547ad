import io
import json
import subprocess
import sys

import pytest

from jacobi_products.cli import main
from jacobi_products.verify import PUBLISHED_RQ_TABLE, SUITES, compute_report, corollary_reconstruction, run_suite


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_compute_q7_all():
    code, text = run("compute", "--q", "7", "--what", "all", "--format", "json")
    assert code == 0
    rep = json.loads(text)["reports"][0]
    assert (rep["R"], rep["x"], rep["det"]) == ("-4", "-2", "-4")
    assert all(c["status"] == "pass" for c in rep["checks"])


def test_compute_q5_all():
    rep = compute_report(5)
    assert (rep.R, rep.det, rep.a, rep.c, rep.d) == (1, 1, 2, 1, 1)


@pytest.mark.parametrize("what,field", [("rq", "R = -12"), ("xq", "x = -3"), ("det", "det = -27"),
                                        ("aq", "a = -6"), ("decomp", "c = -3")])
def test_compute_text(what, field):
    code, text = run("compute", "--q", "13", "--what", what)
    assert code == 0 and field in text


def test_compute_q17_audit_does_not_fail():
    code, text = run("compute", "--q", "17", "--what", "all")
    assert code == 0
    assert "[audit] table.published_value" in text


@pytest.mark.parametrize("argv", [
    ["compute", "--q", "4"],
    ["compute", "--q", "15"],
    ["compute", "--q", "2"],
    ["compute", "--q", "7", "--what", "decomp"],
    ["compute", "--q", "1000003"],
    ["verify", "--suite", "nope"],
    ["verify", "--suite", "thm1", "--jobs", "0"],
    ["verify", "--suite", "thm1", "--qmin", "50", "--qmax", "10"],
    ["corollary", "--p", "13"],
    ["corollary", "--p", "15"],
    ["table", "--qmin", "30", "--qmax", "7"],
    [],
    ["frobnicate"],
])
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_verify_text_summary():
    code, text = run("verify", "--suite", "lemma21", "--qmax", "30")
    assert code == 0
    assert "lemma21 [3, 30]" in text and "0 fail" in text


def test_verify_table_audits_keep_exit_zero():
    code, text = run("verify", "--suite", "table")
    assert code == 0
    assert "AUDIT 17" in text and "AUDIT 27" in text


def test_verify_json_deterministic_and_parallel_equal():
    a = run("verify", "--suite", "thm2", "--qmax", "60", "--format", "json")
    b = run("verify", "--suite", "thm2", "--qmax", "60", "--format", "json")
    c = run("verify", "--suite", "thm2", "--qmax", "60", "--format", "json", "--jobs", "3")
    assert a == b == c
    doc = json.loads(a[1])
    assert set(doc) == {"config", "reports", "summary"}
    assert doc["summary"]["fail"] == 0


def test_fail_entries_carry_witness(monkeypatch):
    from jacobi_products import verify

    def broken(q):
        return [verify._check("thm2.neg_det_eq_x2", False, "forced", q)]

    monkeypatch.setitem(verify.SUITES, "thm2", verify.Suite(broken, verify.odd_prime_powers, 3, 11))
    code, text = run("verify", "--suite", "thm2", "--format", "json")
    assert code == 1
    doc = json.loads(text)
    assert doc["summary"]["fail"] == 5
    assert all(c["witness"] == r["item"].__str__() for r in doc["reports"] for c in r["checks"])


def test_crash_inside_check_is_failure(monkeypatch):
    from jacobi_products import verify

    def boom(q):
        raise ArithmeticError("bad")

    monkeypatch.setitem(verify.SUITES, "thm1", verify.Suite(boom, verify.odd_prime_powers, 3, 5))
    res = run_suite("thm1")
    assert res["summary"]["fail"] == 2
    assert res["reports"][0]["checks"][0]["witness"] == "3"


def test_table_csv():
    code, text = run("table")
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0] == "q,R_q,x_q,source,published_R_q"
    rows = {int(l.split(",")[0]): l.split(",") for l in lines[1:]}
    assert sorted(rows) == sorted(PUBLISHED_RQ_TABLE)
    assert rows[7][1:4] == ["-4", "-2", "paper"]
    assert rows[17][1] == "-168" and rows[17][3] == "mismatch" and rows[17][4] == "-60"
    assert rows[27][3] == "mismatch"


def test_table_json_outside_published_range():
    code, text = run("table", "--qmin", "31", "--qmax", "41", "--format", "json")
    doc = json.loads(text)
    assert code == 0
    assert {r["source"] for r in doc["rows"]} == {"computed"}
    assert all(isinstance(r["R_q"], str) for r in doc["rows"])


@pytest.mark.parametrize("p,R", [(7, -4), (11, 16), (23, -1024), (3, 1)])
def test_corollary(p, R):
    res = corollary_reconstruction(p)
    assert res["ok"] and res["reconstructed"] == R
    code, text = run("corollary", "--p", str(p))
    assert code == 0 and "match" in text


def test_corollary_p7_details():
    res = corollary_reconstruction(7)
    assert (res["radicand"], res["root"], res["delta"]) == (16, 4, -1)


def test_suites_registry():
    assert set(SUITES) >= {
        "thm1", "thm2", "thm3", "cor1", "lemma21", "lemma22", "lemma23", "lemma24", "lemma25",
        "lemma41", "lemma42", "lemma43", "lemma44", "lemma45", "carlitz", "wuwang", "table",
    }


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "jacobi_products", "compute", "--q", "9", "--what", "rq"],
        capture_output=True, text=True,
    )
    assert out.returncode == 0 and "R = -2" in out.stdout
    out = subprocess.run([sys.executable, "-m", "jacobi_products", "compute", "--q", "4"],
                         capture_output=True, text=True)
    assert out.returncode == 2
