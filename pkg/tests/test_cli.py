"""Command line behavior: exit codes, output formats, the HTTP service."""

from __future__ import annotations

import json
import subprocess
import sys
import threading
import urllib.error
import urllib.request

import pytest

from seqcalc.cli import main
from seqcalc.server import make_server

from conftest import CORPUS_DIR

FLAWED = "Dis p (Neg p)\n\nAlphaImp\n  Neg p\n  p\nBasic\n"


def corpus_path(name):
    return str(CORPUS_DIR / name)


# --- check ----------------------------------------------------------------

def test_check_corpus_ok(capsys):
    paths = [corpus_path(n) for n in (
        "excluded_middle.secav", "instantiate_twice.secav", "exists_monotone.secav",
    )]
    assert main(["check", *paths]) == 0
    out = capsys.readouterr()
    assert out.out.count("1 proof verified") == 3
    assert out.err == ""


def test_check_verification_error(tmp_path, capsys):
    bad = tmp_path / "bad.secav"
    bad.write_text(FLAWED, encoding="utf-8")
    assert main(["check", str(bad)]) == 1
    err = capsys.readouterr().err
    assert "shape_mismatch" in err
    assert "AlphaImp" in err


def test_check_syntax_error_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.secav"
    bad.write_text("Dis p (Neg p\n", encoding="utf-8")
    assert main(["check", str(bad)]) == 2
    assert "syntax_error" in capsys.readouterr().err


def test_check_missing_file_exit_2(capsys):
    assert main(["check", "/nonexistent/nowhere.secav"]) == 2
    assert "cannot read" in capsys.readouterr().err


def test_check_worst_exit_wins(tmp_path, capsys):
    bad = tmp_path / "bad.secav"
    bad.write_text(FLAWED, encoding="utf-8")
    ok = corpus_path("excluded_middle.secav")
    assert main(["check", ok, str(bad)]) == 1
    capsys.readouterr()


def test_check_json(tmp_path, capsys):
    bad = tmp_path / "bad.secav"
    bad.write_text(FLAWED, encoding="utf-8")
    code = main(["check", "--json", corpus_path("excluded_middle.secav"), str(bad)])
    assert code == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["schema_version"] == 1
    assert payload["ok"] is False
    assert [r["ok"] for r in payload["results"]] == [True, False]
    diag = payload["results"][1]["diagnostics"][0]
    assert diag["category"] == "shape_mismatch"
    assert diag["severity"] == "error"
    assert diag["start_line"] >= 1


def test_check_warnings_allowed(tmp_path, capsys):
    text = (
        "Dis (Dis p[a] (Neg p[a])) (Neg p[a, a])\n"
        "\n"
        "AlphaDis\n"
        "  Dis p[a] (Neg p[a])\n"
        "  Neg p[a, a]\n"
        "AlphaDis\n"
        "  p[a]\n"
        "  Neg p[a]\n"
        "  Neg p[a, a]\n"
        "Basic\n"
    )
    f = tmp_path / "warn.secav"
    f.write_text(text, encoding="utf-8")
    assert main(["check", str(f)]) == 0
    out = capsys.readouterr()
    assert "arity_lint" in out.err
    assert "verified" in out.out


# --- unshorten --------------------------------------------------------------

def test_unshorten_stdout(capsys):
    assert main(["unshorten", corpus_path("excluded_middle.secav")]) == 0
    out = capsys.readouterr().out
    assert out.startswith("(*")
    assert "lemma ‹⊩" in out
    assert "Dis (Pre 0 [Fun 0 [], Fun 1 []]) (Neg (Pre 0 [Fun 0 [], Fun 1 []]))" in out


def test_unshorten_errors_emit_nothing(tmp_path, capsys):
    bad = tmp_path / "bad.secav"
    bad.write_text(FLAWED, encoding="utf-8")
    assert main(["unshorten", str(bad)]) == 1
    out = capsys.readouterr()
    assert out.out == ""
    assert "shape_mismatch" in out.err


def test_unshorten_force(tmp_path, capsys):
    bad = tmp_path / "bad.secav"
    bad.write_text(FLAWED, encoding="utf-8")
    assert main(["unshorten", "--force", str(bad)]) == 1
    out = capsys.readouterr().out
    assert "lemma ‹⊩" in out
    assert "from AlphaImp" in out


def test_unshorten_force_incomplete_gets_sorry(tmp_path, capsys):
    incomplete = "Dis p (Neg p)\n\nAlphaDis\n  p\n  Neg p\n"
    f = tmp_path / "open.secav"
    f.write_text(incomplete, encoding="utf-8")
    assert main(["unshorten", "--force", str(f)]) == 1
    out = capsys.readouterr().out
    assert "sorry" in out


def test_unshorten_hint_style(capsys):
    assert main(["unshorten", corpus_path("instantiate_twice.secav")]) == 0
    assert "GammaUni[where t = ‹Fun 0 []›]" in capsys.readouterr().out
    assert main([
        "unshorten", "--hint-style", "comment", corpus_path("instantiate_twice.secav"),
    ]) == 0
    assert "― ‹t = Fun 0 []›" in capsys.readouterr().out


def test_unshorten_warning_banner(tmp_path, capsys):
    # an Ext that restates the same state verifies with a warning
    text = "Dis p (Neg p)\n\nExt\n  Dis p (Neg p)\nAlphaDis\n  p\n  Neg p\nBasic\n"
    f = tmp_path / "warned.secav"
    f.write_text(text, encoding="utf-8")
    assert main(["unshorten", str(f)]) == 0
    out = capsys.readouterr()
    assert "WARNING: 1 warning" in out.out
    assert "unchanged_sequent" in out.err


def test_unshorten_json(capsys):
    assert main(["unshorten", "--json", corpus_path("excluded_middle.secav")]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["ok"] is True
    assert len(payload["proofs"]) == 1
    proof = payload["proofs"][0]
    assert proof["name_map"] == {"functions": {"a": 0, "b": 1}, "predicates": {"p": 0}}
    assert proof["conventional"] == "p(a, b) ∨ ¬p(a, b)"
    assert proof["isar"].startswith("lemma")


# --- countermodel -------------------------------------------------------------

def test_countermodel_found(capsys):
    assert main(["countermodel", "Imp p[a] (Uni p[0])", "--max-domain", "2"]) == 1
    out = capsys.readouterr().out
    assert "domain size 2" in out
    assert "a = 0" in out
    assert "p(0) = true" in out
    assert "p(1) = false" in out


def test_countermodel_none(capsys):
    assert main(["countermodel", "Dis p[a, b] (Neg p[a, b])", "--max-domain", "3"]) == 0
    assert "no countermodel" in capsys.readouterr().out


def test_countermodel_budget_exit_3(capsys):
    code = main([
        "countermodel", "Imp p[0, 1, 2] q[c[0, 1]]", "--max-domain", "4", "--budget", "3",
    ])
    assert code == 3
    assert "budget exceeded" in capsys.readouterr().err


def test_countermodel_syntax_error_exit_2(capsys):
    assert main(["countermodel", "Imp p ("]) == 2
    assert "syntax_error" in capsys.readouterr().err


def test_countermodel_json(capsys):
    assert main(["countermodel", "--json", "Imp p[a] (Uni p[0])"]) == 1
    payload = json.loads(capsys.readouterr().out)
    cm = payload["countermodel"]
    assert cm["domain_size"] == 2
    assert cm["functions"][0]["name"] == "a"
    assert cm["predicates"][0]["table"] == [
        {"args": [0], "value": True},
        {"args": [1], "value": False},
    ]


def test_countermodel_json_none(capsys):
    assert main(["countermodel", "--json", "Dis p (Neg p)"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["countermodel"] is None


def test_max_domain_zero_usage_error(capsys):
    with pytest.raises(SystemExit) as exit_info:
        main(["countermodel", "p", "--max-domain", "0"])
    assert exit_info.value.code == 2
    capsys.readouterr()


def test_console_script_installed():
    result = subprocess.run(
        [sys.executable, "-m", "seqcalc.cli", "check", corpus_path("excluded_middle.secav")],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert "verified" in result.stdout


# --- serve ---------------------------------------------------------------

@pytest.fixture(scope="module")
def server_url():
    server = make_server(0)
    port = server.server_address[1]
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{port}"
    server.shutdown()
    server.server_close()
    thread.join(timeout=5)


def _post(url, body: bytes, content_type="application/json"):
    req = urllib.request.Request(
        url, data=body, headers={"Content-Type": content_type}, method="POST"
    )
    try:
        with urllib.request.urlopen(req) as resp:
            return resp.status, resp.read()
    except urllib.error.HTTPError as err:
        return err.code, err.read()


def test_health(server_url):
    with urllib.request.urlopen(f"{server_url}/health") as resp:
        assert resp.status == 200
        assert json.loads(resp.read()) == {"status": "ok"}


def test_process_clean_proof(server_url, corpus_texts):
    body = json.dumps({"source": corpus_texts["excluded_middle.secav"]}).encode()
    status, raw = _post(f"{server_url}/process", body)
    assert status == 200
    payload = json.loads(raw)
    assert payload["schema_version"] == 1
    assert payload["diagnostics"] == []
    assert len(payload["proofs"]) == 1
    proof = payload["proofs"][0]
    assert proof["isar"].startswith("lemma ‹⊩")
    assert proof["conventional"] == "p(a, b) ∨ ¬p(a, b)"
    assert proof["name_map"] == {"functions": {"a": 0, "b": 1}, "predicates": {"p": 0}}
    span = proof["span"]
    assert span["start_line"] == 1 and span["end_line"] >= 5


def test_process_flawed_text(server_url):
    body = json.dumps({"source": FLAWED}).encode()
    status, raw = _post(f"{server_url}/process", body)
    assert status == 200
    payload = json.loads(raw)
    assert payload["proofs"] == []
    assert payload["diagnostics"]
    assert payload["diagnostics"][0]["category"] == "shape_mismatch"


def test_process_referentially_transparent(server_url, corpus_texts):
    body = json.dumps({"source": corpus_texts["exists_monotone.secav"]}).encode()
    first = _post(f"{server_url}/process", body)
    second = _post(f"{server_url}/process", body)
    assert first == second


def test_process_invalid_json_400(server_url):
    status, raw = _post(f"{server_url}/process", b"not json at all")
    assert status == 400
    assert "JSON" in json.loads(raw)["error"]


def test_process_wrong_shape_400(server_url):
    status, _ = _post(f"{server_url}/process", json.dumps({"src": "x"}).encode())
    assert status == 400
    status, _ = _post(f"{server_url}/process", json.dumps({"source": 5}).encode())
    assert status == 400


def test_unknown_path_404(server_url):
    try:
        with urllib.request.urlopen(f"{server_url}/nope") as resp:
            status = resp.status
    except urllib.error.HTTPError as err:
        status = err.code
    assert status == 404


def test_process_multiple_proofs(server_url, corpus_texts):
    combined = corpus_texts["excluded_middle.secav"] + "\n" + corpus_texts["instantiate_twice.secav"]
    status, raw = _post(f"{server_url}/process", json.dumps({"source": combined}).encode())
    assert status == 200
    payload = json.loads(raw)
    assert len(payload["proofs"]) == 2
    assert payload["proofs"][0]["span"]["end_line"] < payload["proofs"][1]["span"]["start_line"]
