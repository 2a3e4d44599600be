import io
import json
import subprocess
import sys

import pytest

from cyclicggm.cli import EXIT_BOUND, EXIT_FAIL, EXIT_OK, EXIT_USAGE, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_count_all_methods():
    code, out, _ = call("count", "--n", "5", "--method", "all")
    assert code == EXIT_OK
    assert out.splitlines() == ["bruteforce: 57", "walks: 57", "lgv: 57", "closed: 57"]


def test_count_json_and_single_method():
    code, out, _ = call("count", "--n", "10", "--method", "lgv", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out) == {"n": 10, "counts": {"lgv": 161052}}


def test_count_skips_capped_methods():
    code, out, _ = call("count", "--n", "9", "--method", "all")
    assert code == EXIT_OK
    assert "bruteforce: skipped" in out and "walks: 35401" in out


def test_count_bound_and_n3_note():
    assert call("count", "--n", "9", "--method", "bruteforce")[0] == EXIT_BOUND
    code, out, _ = call("count", "--n", "3", "--method", "lgv")
    assert code == EXIT_OK and "lgv: 1" in out and "note:" in out


@pytest.mark.parametrize("n,count,classes", [(3, 1, 1), (4, 9, 3), (5, 57, 12)])
def test_export_json(n, count, classes):
    code, out, _ = call("export", "--n", str(n))
    assert code == EXIT_OK
    doc = json.loads(out)
    assert list(doc) == ["n", "count", "class_count", "msafts"]
    assert (doc["n"], doc["count"], doc["class_count"]) == (n, count, classes)
    assert len(doc["msafts"]) == count
    for m in doc["msafts"]:
        assert len(m) == 2 * n
        idx = [v * (v + 1) // 2 + u for u, v in m]
        assert idx == sorted(idx) and all(u <= v for u, v in m)


def test_export_n3_is_the_full_set():
    doc = json.loads(call("export", "--n", "3")[1])
    assert doc["msafts"] == [[[0, 0], [0, 1], [1, 1], [0, 2], [1, 2], [2, 2]]]


def test_json_is_byte_stable_across_processes():
    cmd = [sys.executable, "-m", "cyclicggm", "export", "--n", "5", "--method", "bruteforce"]
    runs = {subprocess.run(cmd, capture_output=True, check=True,
                           env={"PYTHONHASHSEED": seed, "PATH": ""}).stdout for seed in ("0", "1", "2")}
    assert len(runs) == 1
    assert runs.pop() == call("export", "--n", "5", "--method", "walks")[1].encode()


def test_enumerate_text_and_dot():
    code, out, _ = call("enumerate", "--n", "4", "--one-indexed")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert len(lines) == 10 and lines[-1] == "# 9 Msafts"
    assert "{0," not in out and "{1,1}" in out
    code, dot, _ = call("enumerate", "--n", "4", "--format", "dot")
    assert dot.count("graph msaft_") == 9
    assert "  0 -- 0;" in dot  # loops are self-edges


def test_enumerate_bound():
    assert call("enumerate", "--n", "11", "--method", "walks")[0] == EXIT_BOUND
    assert call("enumerate", "--n", "9", "--method", "bruteforce")[0] == EXIT_BOUND


def test_triples():
    code, out, _ = call("triples", "--n", "4")
    assert code == EXIT_OK
    assert out.splitlines() == ["{0,0} {2,2} {1,3}", "{1,1} {0,2} {3,3}", "# 2 forbidden triples"]
    doc = json.loads(call("triples", "--n", "7", "--format", "json")[1])
    assert doc["count"] == 196


def test_minors():
    code, out, _ = call("minors", "--n", "5", "--one-indexed")
    assert code == EXIT_OK
    assert "rows 1,2,3 cols 3,4,5: s33*s24*s15 - s33*s14*s25" in out
    assert out.splitlines()[-1] == "# 15 generators"
    doc = json.loads(call("minors", "--n", "4", "--format", "json")[1])
    assert doc["count"] == 2 and all(len(m["terms"]) == 6 for m in doc["minors"])


def test_leading():
    code, out, _ = call("leading", "--n", "6")
    assert code == EXIT_OK and "63 leading monomials; equal to" in out


def test_groebner_check():
    code, out, _ = call("groebner-check", "--n", "5")
    assert code == EXIT_OK and "all S-pairs reduce to zero" in out
    code, out, _ = call("groebner-check", "--n", "4", "--no-coprime", "--format", "json")
    assert json.loads(out)["reduced"] == 1 and json.loads(out)["passed"]
    assert call("groebner-check", "--n", "7")[0] == EXIT_BOUND
    assert call("groebner-check", "--n", "6", "--no-coprime", "--max-seconds", "0")[0] == EXIT_BOUND


def test_identities():
    code, out, _ = call("identities", "--max-n", "300")
    assert code == EXIT_OK and out.strip().endswith("all pass")
    assert call("identities", "--max-n", "0")[0] == EXIT_USAGE


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_verify_all(n):
    code, out, _ = call("verify-all", "--n", str(n))
    assert code == EXIT_OK
    assert "[FAIL]" not in out and out.count("[PASS]") >= 10


def test_verify_all_time_limit():
    code, _, err = call("verify-all", "--n", "8", "--max-seconds", "0.5")
    assert code == EXIT_BOUND and "resource bound" in err


def test_usage_errors():
    assert call()[0] == EXIT_USAGE
    assert call("frobnicate")[0] == EXIT_USAGE
    assert call("count", "--n", "2")[0] == EXIT_USAGE
    assert call("count", "--method", "magic")[0] == EXIT_USAGE
    assert call("--help")[0] == EXIT_OK


def test_console_script_exit_codes():
    ok = subprocess.run([sys.executable, "-m", "cyclicggm", "count", "--n", "4"], capture_output=True)
    assert ok.returncode == EXIT_OK and b"closed: 9" in ok.stdout
    bad = subprocess.run([sys.executable, "-m", "cyclicggm", "count", "--n", "1"], capture_output=True)
    assert bad.returncode == EXIT_USAGE and b"error" in bad.stderr


def test_disagreement_exits_with_failure(monkeypatch):
    from cyclicggm import verify
    monkeypatch.setattr(verify, "msaft_counts", lambda g, methods, **kw: {"lgv": 57, "closed": 58})
    assert call("count", "--n", "5")[0] == EXIT_FAIL
    monkeypatch.setattr(verify, "verify_all",
                        lambda n, **kw: [verify.Check("x", True), verify.Check("y", False)])
    code, out, _ = call("verify-all", "--n", "5")
    assert code == EXIT_FAIL and "[FAIL] y" in out
