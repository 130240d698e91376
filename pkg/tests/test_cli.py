import json
from pathlib import Path

import pytest

from hennings.cli import main

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariants_lens_k2(capsys):
    code, out, _ = run(capsys, "invariants", CORPUS / "lens_k2.tangle", "--l", 3)
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"meta", "results", "checks"}
    assert doc["meta"]["ell"] == 3
    (r,) = doc["results"]
    assert r["h"] == 2 and r["theorem_ok"] is True
    assert doc["checks"][0]["status"] == "pass"


def test_bad_ell_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["invariants", str(CORPUS / "lens_k2.tangle"), "--l", "1"])
    assert exc.value.code == 2


def test_parse_error_exits_2(capsys, tmp_path):
    bad = tmp_path / "bad.tangle"
    bad.write_text("tangle b {\n  component: [O+a, X]\n}\n")
    code, _, err = run(capsys, "invariants", bad, "--l", 2)
    assert code == 2 and "line 2" in err
    code, _, _ = run(capsys, "invariants", tmp_path / "missing.tangle", "--l", 2)
    assert code == 2


def test_budget_exits_3(capsys):
    code, _, err = run(capsys, "invariants", CORPUS / "borromean_111.tangle", "--l", 2, "--budget", 10)
    assert code == 3 and "budget" in err


def test_deterministic_json(capsys):
    args = ("invariants", CORPUS / "lens_km3.tangle", CORPUS / "s1xs2.tangle", "--l", 4)
    first = run(capsys, *args)[1]
    assert run(capsys, *args)[1] == first


def test_csv_and_pretty(capsys):
    code, out, _ = run(capsys, "invariants", CORPUS / "s1xs2.tangle", "--l", 3, "--format", "csv")
    assert code == 0
    header, row = out.strip().splitlines()
    assert header.startswith("name,ell,h") and row.startswith("s1xs2,3,0,")
    code, out, _ = run(capsys, "invariants", CORPUS / "s1xs2.tangle", "--l", 3, "--format", "pretty")
    assert "tau=2" in out and "[PASS]" in out


def test_out_file(capsys, tmp_path):
    dest = tmp_path / "r.json"
    code, out, _ = run(capsys, "invariants", CORPUS / "s3.tangle", "--l", 2, "--out", dest)
    assert code == 0 and out == ""
    assert json.loads(dest.read_text())["results"][0]["psi"][0] == "1/1"


def test_verify_axioms(capsys):
    code, out, _ = run(capsys, "verify", "axioms", "--l", 2)
    assert code == 0
    assert all(c["status"] == "pass" for c in json.loads(out)["checks"])


def test_verify_corpus(capsys):
    code, out, _ = run(capsys, "verify", "corpus", "--l", 2)
    assert code == 0
    assert all(r["theorem_ok"] for r in json.loads(out)["results"])


def test_print_roundtrip(capsys):
    src = CORPUS / "borromean.tangle"
    code, out, _ = run(capsys, "print", src)
    assert code == 0 and out == src.read_text()


def test_strict_exits_4_on_vanishing_normalizer(capsys, monkeypatch):
    import hennings.manifold as mf

    real = mf.normalizers(3)
    fake = mf.Normalizers(3, real.lam_minus, real.lam_plus, real.qt_minus * 0, real.qt_plus)
    monkeypatch.setattr(mf, "normalizers", lambda ell: fake)
    path = CORPUS / "lens_k2.tangle"
    code, out, _ = run(capsys, "invariants", path, "--l", 3)
    assert code == 0 and json.loads(out)["results"][0]["tau_undefined"] is True
    code, _, _ = run(capsys, "invariants", path, "--l", 3, "--strict")
    assert code == 4
