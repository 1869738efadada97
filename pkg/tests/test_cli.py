import json

import pytest

from lpgg.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_mult_table_text(capsys):
    code, out, _ = run_cli(capsys, "mult-table", "--n", "3", "--sign", "+")
    assert code == 0
    assert "all match" in out
    assert "a1*a2" in out


def test_mult_table_negative(capsys):
    code, out, _ = run_cli(capsys, "mult-table", "--n", "3", "--sign", "-")
    assert code == 0
    assert "all match" in out


def test_mult_table_json(capsys):
    code, out, _ = run_cli(
        capsys, "mult-table", "--n", "4", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["pairs_checked"] == 16 * 6
    # (a1 a2) a1 = a1: row 3 (a1*a2) by column 1 (a1)
    a1 = payload["grid"][0][3]
    assert payload["grid"][2][0] == a1


def test_mult_table_out_of_range(capsys):
    code, _, err = run_cli(capsys, "mult-table", "--n", "20")
    assert code == 2
    assert "2..8" in err


def test_frame_json_t3(capsys):
    code, out, _ = run_cli(capsys, "frame", "--n", "3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    t = payload["T"]
    assert t[0][0] == [{"rational": "1/2", "sqrt": 1}]
    assert t[2][0] == [{"rational": "1", "sqrt": 1}]
    assert payload["null_vectors"][2] == "e1 + f2"
    assert payload["exact"] is True


def test_frame_csv_t8(capsys):
    code, out, _ = run_cli(capsys, "frame", "--n", "8", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "T"
    row4 = lines[4].split(",")
    assert row4 == ["1", "0", "1/2", "1/2*sqrt(3)", "0", "0", "0", "0"]


def test_frame_out_of_range(capsys):
    code, _, err = run_cli(capsys, "frame", "--n", "13")
    assert code == 2


def test_verify_frame_suite(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "frame", "--n-max", "6",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["summary"]["fail"] == 0
    assert payload["summary"]["corrected"] is True
    names = {check["name"] for check in payload["checks"]}
    assert "frame-axioms" in names


def test_verify_calculus_reports_corrections(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "calculus", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    by_name = {c["name"]: c for c in payload["checks"]}
    assert by_name["dual-laplacian"]["status"] == "pass-corrected"
    assert by_name["dual-dot-dual"]["status"] == "pass-corrected"


def test_verify_unknown_suite(capsys):
    code, _, err = run_cli(capsys, "verify", "--suite", "nosuch")
    assert code == 2
    assert "unknown suite" in err


def test_verify_deterministic(capsys):
    _, out1, _ = run_cli(
        capsys, "verify", "--suite", "star", "--seed", "7",
        "--format", "json",
    )
    _, out2, _ = run_cli(
        capsys, "verify", "--suite", "star", "--seed", "7",
        "--format", "json",
    )
    assert out1 == out2


def test_spectral_command(capsys):
    code, out, _ = run_cli(capsys, "spectral", "--g", '{"g12": 1}')
    assert code == 0
    payload = json.loads(out)
    assert payload["roots"] == ["0", "1"]
    assert payload["checks"]["discriminant_corrected"] is False


def test_spectral_fraction_strings(capsys):
    code, out, _ = run_cli(
        capsys, "spectral", "--g", '{"g12": "1/2", "g23": "1/3"}'
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["checks"]["discriminant_corrected"] is True


def test_spectral_degenerate(capsys):
    code, _, err = run_cli(capsys, "spectral", "--g", '{"g12": 1, "g21": 1}')
    assert code == 1
    assert "spectral error" in err


def test_spectral_bad_json(capsys):
    code, _, err = run_cli(capsys, "spectral", "--g", "{nope")
    assert code == 2


def test_simplex_centroid(capsys):
    code, out, _ = run_cli(
        capsys, "simplex", "--n", "2", "--point",
        "0.3333333,0.3333333,0.3333334",
    )
    assert code == 0
    payload = json.loads(out)
    assert abs(payload["norm_squared_float"] - 1 / 3) < 1e-6
    assert payload["barycentric"] is True


def test_simplex_exact_point(capsys):
    code, out, _ = run_cli(
        capsys, "simplex", "--n", "2", "--point", "1/3,1/3,1/3",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["norm_squared"] == "1/3"
    assert "unit" in payload


def test_simplex_vertex_on_cone(capsys):
    code, out, _ = run_cli(capsys, "simplex", "--n", "2", "--point", "1,0,0")
    assert code == 0
    payload = json.loads(out)
    assert payload["on_cone"] is True
    assert "unit" not in payload


def test_simplex_bad_point(capsys):
    code, _, err = run_cli(capsys, "simplex", "--n", "2", "--point", "1,0")
    assert code == 2


def test_classify_levels(capsys):
    code, out, _ = run_cli(capsys, "classify", "--max", "6")
    assert code == 0
    assert "level 6: -+-+-+-" in out
    assert "product sequence: --++--" in out


def test_classify_csv(capsys):
    code, out, _ = run_cli(
        capsys, "classify", "--max", "2", "--format", "csv"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "p,q,sign,product_of_signs"
    assert "2,0,-,+" in lines


def test_classify_json(capsys):
    code, out, _ = run_cli(
        capsys, "classify", "--max", "3", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["levels"]["3"] == "-+-+"


def test_classify_limit(capsys):
    code, _, err = run_cli(capsys, "classify", "--max", "11")
    assert code == 2


def test_express_canonical_form(capsys):
    code, out, _ = run_cli(capsys, "express", "--n", "3", "--mv", "e1^f2")
    assert code == 0
    payload = json.loads(out)
    assert payload["null_products"] == {"1": "-1", "a1*a3": "1", "a2*a3": "1"}


def test_express_with_a_matrix(capsys):
    code, out, _ = run_cli(
        capsys, "express", "--n", "2", "--mv", "1/2*e1 + 1/2*f1",
        "--a-matrix",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["null_products"] == {"a1": "1"}
    entries = payload["a_matrix"]["entries"]
    assert entries[0][0] == "0"  # a1 a1 a1 = 0


def test_express_bad_input(capsys):
    code, _, err = run_cli(capsys, "express", "--n", "3", "--mv", "e7")
    assert code == 2


def test_simplex_vertices_inline(capsys):
    code, out, _ = run_cli(
        capsys, "simplex", "--n", "2", "--vertices", "1,0,0;0,1,0;0,0,1",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["vertices"]["order"] == 3
    assert payload["vertices"]["closed"] is False
    assert payload["vertices"]["degenerate"] is False


def test_simplex_vertices_file(capsys, tmp_path):
    path = tmp_path / "vertices.csv"
    path.write_text("1,-1,0\n0,1,-1\n-1,0,1\n")
    code, out, _ = run_cli(
        capsys, "simplex", "--n", "2", "--vertices-file", str(path),
        "--free-vertices",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["vertices"]["closed"] is True
    assert payload["vertices"]["order"] == 2


def test_simplex_needs_input(capsys):
    code, _, err = run_cli(capsys, "simplex", "--n", "2")
    assert code == 2


def test_backend_env(capsys, monkeypatch):
    monkeypatch.setenv("LPGG_BACKEND", "approx")
    code, out, _ = run_cli(
        capsys, "simplex", "--n", "2", "--point", "1/3,1/3,1/3",
    )
    assert code == 0
    payload = json.loads(out)
    # fractions parse to floats under the approx backend
    assert payload["norm_squared"] != "1/3"
    monkeypatch.setenv("LPGG_BACKEND", "bogus")
    with pytest.raises(SystemExit):
        run_cli(capsys, "simplex", "--n", "2", "--point", "1/3,1/3,1/3")
