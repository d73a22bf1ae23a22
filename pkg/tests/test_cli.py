import json

import pytest

from qlab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_single_identity_passes(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--id", "R10", "--N", "3", "--order", "30",
        "--samples", "5", "--seed", "7",
    )
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 5
    assert all(r["outcome"] == "pass" for r in reports)


def test_verify_unknown_id_exits_2_naming_valid_ids(capsys):
    code, _, err = run_cli(capsys, "verify", "--id", "NOSUCH")
    assert code == 2
    assert "R01" in err and "R45" in err


def test_verify_zero_samples_is_empty(capsys):
    code, out, _ = run_cli(capsys, "verify", "--samples", "0")
    assert code == 0
    assert json.loads(out) == []


def test_verify_json_roundtrips_report_fields(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--id", "R01", "--samples", "2", "--order", "12"
    )
    assert code == 0
    for report in json.loads(out):
        assert set(report) == {
            "id", "env", "N", "T", "outcome",
            "first_mismatch_order", "lhs_coeff", "rhs_coeff", "elapsed_ms",
        }
        assert report["id"] == "R01"
        assert report["N"] is None
        assert all("/" in v or v.lstrip("-").isdigit() for v in report["env"].values())


def _strip_timing(payload):
    reports = json.loads(payload)
    for r in reports:
        r["elapsed_ms"] = 0
    return reports


def test_verify_output_is_deterministic_modulo_timing(capsys):
    args = ("verify", "--id", "R06", "--samples", "3", "--order", "15", "--seed", "9")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert _strip_timing(out1) == _strip_timing(out2)


def test_table_spt(capsys):
    code, out, _ = run_cli(capsys, "table", "--stat", "spt", "--max-n", "10")
    assert code == 0
    table = json.loads(out)
    assert table["values"]["4"] == 10


def test_table_n_sc(capsys):
    code, out, _ = run_cli(capsys, "table", "--stat", "n_sc", "--max-n", "5")
    assert code == 0
    assert json.loads(out)["values"]["1"] == 1


def test_table_overlined_largest(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--stat", "overlined_largest_sum", "--max-n", "4"
    )
    assert code == 0
    assert json.loads(out)["values"]["4"] == 17


def test_table_restricted_requires_bound(capsys):
    code, _, err = run_cli(capsys, "table", "--stat", "p_restricted", "--max-n", "5")
    assert code == 2
    assert "--N" in err


def test_table_unknown_stat_is_usage_error(capsys):
    with pytest.raises(SystemExit) as err:
        main(["table", "--stat", "nope", "--max-n", "5"])
    assert err.value.code == 2


def test_coeffs_moment_closed_form(capsys):
    code, out, _ = run_cli(
        capsys, "coeffs", "--id", "R33", "--side", "rhs", "--N", "1", "--order", "6"
    )
    assert code == 0
    assert json.loads(out)["coeffs"] == ["0", "1", "1", "2", "2", "3", "3"]


def test_coeffs_order_zero_single_constant(capsys):
    code, out, _ = run_cli(
        capsys, "coeffs", "--id", "R45", "--d", "1/2", "--order", "0"
    )
    assert code == 0
    assert json.loads(out)["coeffs"] == ["0"]


def test_coeffs_on_pole_exits_2_with_description(capsys):
    code, _, err = run_cli(
        capsys, "coeffs", "--id", "R01", "--a", "1/1", "--b", "1/3", "--order", "5"
    )
    assert code == 2
    assert "a = 1" in err


def test_coeffs_rejects_decimal_literal(capsys):
    code, _, err = run_cli(
        capsys, "coeffs", "--id", "R45", "--d", "0.5", "--order", "5"
    )
    assert code == 2
    assert "exact rational" in err


def test_coeffs_missing_parameter_named(capsys):
    code, _, err = run_cli(capsys, "coeffs", "--id", "R01", "--a", "1/2", "--order", "5")
    assert code == 2
    assert "b" in err


def test_positivity_pattern_and_strict(capsys, tmp_path):
    code, out, _ = run_cli(
        capsys, "positivity", "--N", "1", "--order", "10", "--format", "tsv"
    )
    assert code == 0
    rows = [line.split("\t") for line in out.strip().splitlines()[1:]]
    assert [r[2] for r in rows] == ["1", "0", "1", "0", "1", "0", "1", "0", "1", "0"]
    code, _, err = run_cli(capsys, "positivity", "--N", "0")
    assert code == 2


def test_out_writes_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys, "list", "--out", str(target)
    )
    assert code == 0 and out == ""
    listing = json.loads(target.read_text())
    assert len(listing) == 45
    assert listing[0]["id"] == "R01"


def test_list_tsv(capsys):
    code, out, _ = run_cli(capsys, "list", "--format", "tsv")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 46  # header + 45 entries
