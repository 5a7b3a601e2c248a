"""The k3family command-line interface, exercised in process."""

import json

import pytest

from k3family.checks import REGISTRY, CheckDef
from k3family.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# -- list-checks ---------------------------------------------------------------------


def test_list_checks(capsys):
    code, out, err = run(capsys, "list-checks")
    assert code == 0 and err == ""
    lines = [l for l in out.splitlines() if l.strip()]
    assert len(lines) == 14
    assert lines[0].startswith("degree-ledger")
    assert lines[-1].startswith("univariate-divisibility")


# -- verify --------------------------------------------------------------------------


def test_verify_single_check_prints_report(capsys):
    code, out, err = run(capsys, "verify", "degree-ledger")
    assert code == 0
    doc = json.loads(out)
    assert doc["checks"][0]["name"] == "degree-ledger"
    assert doc["checks"][0]["status"] == "pass"
    assert doc["meta"]["prime"] == 2305843009213693951


def test_verify_unknown_check_is_usage_error(capsys):
    code, out, err = run(capsys, "verify", "no-such-check")
    assert code == 2
    assert "unknown check" in err


def test_verify_composite_prime_is_usage_error(capsys):
    code, out, err = run(capsys, "verify", "degree-ledger", "--prime", "91")
    assert code == 2
    assert "error" in err


def test_verify_out_file_and_status_lines(capsys, tmp_path):
    dest = tmp_path / "report.json"
    code, out, err = run(capsys, "verify", "lattice-invariants", "--out", str(dest))
    assert code == 0
    assert "lattice-invariants: pass" in out
    assert f"report written to {dest}" in out
    doc = json.loads(dest.read_text())
    assert doc["checks"][0]["status"] == "pass"


def test_verify_seed_and_prime_land_in_meta(capsys):
    code, out, _ = run(capsys, "verify", "degree-ledger", "--seed", "9", "--prime", "1000003")
    assert code == 0
    doc = json.loads(out)
    assert doc["meta"]["seed"] == 9 and doc["meta"]["prime"] == 1000003


def test_verify_slice_option(capsys):
    code, out, _ = run(capsys, "verify", "slice-factorization", "--slice", "4,28,42")
    assert code == 0
    doc = json.loads(out)
    (chk,) = doc["checks"]
    assert chk["witnesses"]["attempts"][0]["slice"] == ["t4", "t28", "t42"]


def test_verify_bad_slice_syntax(capsys):
    with pytest.raises(SystemExit) as exc:
        run(capsys, "verify", "slice-factorization", "--slice", "4,x")
    assert exc.value.code == 2


def test_verify_timings_flag(capsys, tmp_path):
    dest = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "degree-ledger", "--timings", "--out", str(dest))
    assert code == 0
    assert "ms)" in out


def test_verify_failure_exits_one(capsys, monkeypatch):
    def no(spec, rng):
        return "fail", {"reason": "forced"}, []

    monkeypatch.setitem(REGISTRY, "degree-ledger", CheckDef("degree-ledger", "patched", no))
    code, out, _ = run(capsys, "verify", "degree-ledger")
    assert code == 1
    doc = json.loads(out)
    assert doc["checks"][0]["status"] == "fail"


# -- poly ----------------------------------------------------------------------------


def write(tmp_path, text, name="poly.txt"):
    f = tmp_path / name
    f.write_text(text)
    return str(f)


def test_poly_print_uses_directives(capsys, tmp_path):
    path = write(
        tmp_path,
        """# vars: u, b
# domain: QQ
70*b^3*u^4 - 21*b^2*u^5
""",
    )
    code, out, _ = run(capsys, "poly", "print", path)
    assert code == 0
    assert out.strip() == "-21*b^2*u^5 + 70*b^3*u^4"


def test_poly_parse_reports_metadata(capsys, tmp_path):
    path = write(tmp_path, "x^2 + x*y + y^2")
    code, out, _ = run(capsys, "poly", "parse", path)
    assert code == 0
    doc = json.loads(out)
    assert doc["canonical"] == "x^2 + x*y + y^2"
    assert doc["variables"] == ["x", "y"]  # order of first appearance
    assert doc["domain"] == "QQ"
    assert doc["terms"] == 3
    assert doc["total_degree"] == 2
    assert doc["round_trip"] is True


def test_poly_vars_flag_overrides_appearance_order(capsys, tmp_path):
    path = write(tmp_path, "x + y")
    code, out, _ = run(capsys, "poly", "parse", path, "--vars", "y,x")
    doc = json.loads(out)
    assert code == 0 and doc["variables"] == ["y", "x"]


def test_poly_domain_flag(capsys, tmp_path):
    path = write(tmp_path, "x^2 - 5")
    code, out, _ = run(capsys, "poly", "parse", path, "--domain", "GF:7")
    doc = json.loads(out)
    assert code == 0
    assert doc["domain"] == "GF(7)"
    assert doc["canonical"] == "x^2 + 2"


def test_poly_bad_domain_flag(capsys, tmp_path):
    path = write(tmp_path, "x")
    with pytest.raises(SystemExit) as exc:
        run(capsys, "poly", "parse", path, "--domain", "RR")
    assert exc.value.code == 2


def test_poly_unparsable_body(capsys, tmp_path):
    path = write(tmp_path, "x +* y")
    code, out, err = run(capsys, "poly", "parse", path)
    assert code == 2 and "error" in err


def test_poly_missing_file(capsys, tmp_path):
    code, out, err = run(capsys, "poly", "parse", str(tmp_path / "absent.txt"))
    assert code == 2 and "error" in err


def test_poly_empty_body(capsys, tmp_path):
    path = write(tmp_path, "# domain: QQ\n")
    code, out, err = run(capsys, "poly", "parse", path)
    assert code == 2 and "no polynomial text" in err


def test_poly_fraction_content_over_zz_fails_cleanly(capsys, tmp_path):
    path = write(tmp_path, "1/2*x")
    code, out, err = run(capsys, "poly", "parse", path, "--domain", "ZZ")
    assert code == 2 and "error" in err


# -- scan ----------------------------------------------------------------------------


def euler_point_json():
    vals = dict.fromkeys(
        ("t4", "t10", "t12", "t16", "t18", "t22", "t24", "t28", "t30", "t36", "t42"), 0
    )
    vals.update({"t4": -3, "t10": 6, "t16": -3, "t12": -6, "t18": 8, "t24": -3})
    return json.dumps({k: str(v) for k, v in vals.items()})


def test_scan_reports_fibers(capsys, tmp_path):
    path = write(tmp_path, euler_point_json(), "point.json")
    code, out, _ = run(capsys, "scan", "--t", path, "--prime", "101")
    assert code == 0
    doc = json.loads(out)
    places = {f["place"]: f["type"] for f in doc["fibers"]}
    assert places == {"0": "I0*", "1": "I0*", "96": "I1", "100": "I1"}
    assert doc["infinity"]["type"] == "II*"
    assert doc["residual"] == 0


def test_scan_composite_prime(capsys, tmp_path):
    path = write(tmp_path, euler_point_json(), "point.json")
    code, out, err = run(capsys, "scan", "--t", path, "--prime", "100")
    assert code == 2 and "error" in err


def test_scan_missing_file(capsys):
    code, out, err = run(capsys, "scan", "--t", "/nonexistent/point.json")
    assert code == 2 and "error" in err


def test_scan_bad_point(capsys, tmp_path):
    path = write(tmp_path, json.dumps({"t4": "1"}), "point.json")
    code, out, err = run(capsys, "scan", "--t", path)
    assert code == 2 and "bad family point" in err


def test_scan_zero_point(capsys, tmp_path):
    vals = dict.fromkeys(
        ("t4", "t10", "t12", "t16", "t18", "t22", "t24", "t28", "t30", "t36", "t42"), "0"
    )
    path = write(tmp_path, json.dumps(vals), "point.json")
    code, out, err = run(capsys, "scan", "--t", path)
    assert code == 2 and "bad family point" in err


# -- argument plumbing ------------------------------------------------------------------


def test_missing_subcommand_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
