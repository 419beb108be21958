from __future__ import annotations

import json

import pytest

from sectorkit import analyze_linkages, leontief_inverse, technical_coefficients
from sectorkit.cli import USAGE_EXIT, VALIDATION_EXIT, main
from sectorkit.linkage import linkage_report_csv
from conftest import FIXTURES, make_oracle_table


def run(capsys, *argv) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- usage errors -----------------------------------------------------------


def test_unknown_flag_is_usage_error(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["hhi", "--shares", "50,50", "--sideways"])
    assert excinfo.value.code == USAGE_EXIT


def test_missing_subcommand_is_usage_error(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main([])
    assert excinfo.value.code == USAGE_EXIT


def test_unknown_subcommand_is_usage_error(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["frobnicate"])
    assert excinfo.value.code == USAGE_EXIT


def test_bad_units_choice_is_usage_error(capsys, oracle_csv):
    with pytest.raises(SystemExit) as excinfo:
        main(["entropy", str(oracle_csv), "--units", "parsecs"])
    assert excinfo.value.code == USAGE_EXIT


# --- hhi ---------------------------------------------------------------------


def test_hhi_plain(capsys):
    code, out, _ = run(capsys, "hhi", "--shares", "30,30,20,20")
    assert code == 0
    assert out == "hhi 2600.000000\n"


def test_hhi_with_merge(capsys):
    code, out, _ = run(capsys, "hhi", "--shares", "30,30,20,20",
                       "--merge", "2,3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "pre_hhi 2600.000000"
    assert lines[1] == "delta 800.000000"
    assert lines[2] == "post_hhi 3400.000000"
    assert lines[3] == "market_class highly_concentrated"
    assert lines[4] == "action presumed_enhances_market_power"
    assert lines[5] == "coverage 100.000000"
    assert lines[6].startswith("rationale ")


def test_hhi_validation_failure(capsys):
    code, _, err = run(capsys, "hhi", "--shares", "60,50")
    assert code == VALIDATION_EXIT
    assert "error:" in err


def test_hhi_malformed_shares(capsys):
    code, _, err = run(capsys, "hhi", "--shares", "ten,twenty")
    assert code == VALIDATION_EXIT
    assert "comma-separated numbers" in err


def test_hhi_malformed_merge(capsys):
    code, _, err = run(capsys, "hhi", "--shares", "30,30", "--merge", "0")
    assert code == VALIDATION_EXIT


# --- tcc ---------------------------------------------------------------------


def test_tcc_profile(capsys):
    code, out, _ = run(capsys, "tcc", "--profile",
                       str(FIXTURES / "derived_profile.json"))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "tcc 3.186090"
    assert lines[1] == "beta_sum 0.900000"
    assert lines[2] == "tca 35.401001"


def test_tcc_without_eva_omits_tca(capsys, tmp_path):
    payload = json.loads((FIXTURES / "derived_profile.json").read_text())
    del payload["eva"]
    path = tmp_path / "profile.json"
    path.write_text(json.dumps(payload))
    code, out, _ = run(capsys, "tcc", "--profile", str(path))
    assert code == 0
    assert "tca" not in out


def test_tcc_missing_file(capsys):
    code, _, err = run(capsys, "tcc", "--profile", "/nonexistent.json")
    assert code == VALIDATION_EXIT
    assert "error:" in err


def test_tcc_invalid_profile(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"T": 99, "I": 4, "H": 5, "O": 3,
                                "beta": [0.3, 0.2, 0.25, 0.15]}))
    code, _, err = run(capsys, "tcc", "--profile", str(path))
    assert code == VALIDATION_EXIT
    assert "T" in err


# --- io analyze -----------------------------------------------------------------


def test_io_analyze_stdout_matches_library(capsys, oracle_csv):
    code, out, _ = run(capsys, "io", "analyze", str(oracle_csv))
    assert code == 0
    table = make_oracle_table()
    expected_linkage = linkage_report_csv(
        analyze_linkages(leontief_inverse(technical_coefficients(table))))
    assert expected_linkage in out
    assert "farming,1.083333,1.000000,0.543928,0.707107,false" in out
    assert "# report: linkages" in out
    assert "# report: structure" in out
    assert "sector,G_row,G_col,H_row,H_col,RU,RG,GI" in out


def test_io_analyze_writes_files(capsys, oracle_csv, tmp_path):
    out_dir = tmp_path / "reports"
    code, out, _ = run(capsys, "io", "analyze", str(oracle_csv),
                       "--out", str(out_dir))
    assert code == 0
    linkages = (out_dir / "linkages.csv").read_text()
    structure = (out_dir / "structure.csv").read_text()
    assert "manufactures,0.916667,1.000000,0.642824,0.471405,false" in linkages
    assert "# entropy_variant: intermediate-only" in structure
    assert str(out_dir / "linkages.csv") in out


def test_io_analyze_invalid_table(capsys, tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text(
        "sector,farming,manufactures,final_demand,gross_output\n"
        "farming,20,30,40,100\n"
        "manufactures,40,10,50,100\n")
    code, _, err = run(capsys, "io", "analyze", str(path))
    assert code == VALIDATION_EXIT
    assert "row_balance" in err


def test_io_analyze_forward_orientation(capsys, oracle_csv):
    code, out, _ = run(capsys, "io", "analyze", str(oracle_csv),
                       "--gi-orientation", "forward")
    assert code == 0
    assert "# gi_orientation: forward" in out


# --- entropy ---------------------------------------------------------------------


def test_entropy_default_nats(capsys, oracle_csv):
    code, out, _ = run(capsys, "entropy", str(oracle_csv))
    assert code == 0
    lines = out.splitlines()
    assert "# entropy_variant: intermediate-only" in lines
    assert "# entropy_units: nats" in lines
    assert "sector,H_row,H_col" in lines
    assert "farming,0.673012,0.636514" in lines
    assert "manufactures,0.500402,0.562335" in lines


def test_entropy_with_final_demand(capsys, oracle_csv):
    code, out, _ = run(capsys, "entropy", str(oracle_csv),
                       "--with-final-demand")
    assert code == 0
    assert "# entropy_variant: with-final-demand" in out
    assert "farming,1.029653,0.636514" in out


def test_entropy_bits(capsys, oracle_csv):
    code, out, _ = run(capsys, "entropy", str(oracle_csv), "--units", "bits")
    assert code == 0
    assert "farming,0.970951," in out


def test_entropy_normalized_bounded_by_one(capsys, oracle_csv):
    code, out, _ = run(capsys, "entropy", str(oracle_csv),
                       "--units", "normalized")
    assert code == 0
    rows = [line for line in out.splitlines() if not line.startswith(("#", "sector"))]
    for row in rows:
        _, h_row, h_col = row.split(",")
        assert 0.0 <= float(h_row) <= 1.0
        assert 0.0 <= float(h_col) <= 1.0


# --- plan evaluate ------------------------------------------------------------------


def _plan_payload() -> dict:
    return {
        "title": "continuous caster",
        "sector": "steel",
        "claimed_novelty": "new_method",
        "technology_profile": json.loads(
            (FIXTURES / "derived_profile.json").read_text()),
        "tech_class": "emerging",
    }


def test_plan_evaluate(capsys, tmp_path):
    path = tmp_path / "plan.json"
    path.write_text(json.dumps(_plan_payload()))
    code, out, _ = run(capsys, "plan", "evaluate", str(path))
    assert code == 0
    evaluation = json.loads(out)
    assert evaluation["decision"] == "approve"
    assert evaluation["instruments"] == [
        "credit_creation_with_productive_means_collateral"]


def test_plan_evaluate_invalid_plan(capsys, tmp_path):
    payload = _plan_payload()
    payload["claimed_novelty"] = "perpetual motion"
    path = tmp_path / "plan.json"
    path.write_text(json.dumps(payload))
    code, _, err = run(capsys, "plan", "evaluate", str(path))
    assert code == VALIDATION_EXIT
    assert "claimed_novelty" in err


def test_plan_evaluate_non_object_json(capsys, tmp_path):
    path = tmp_path / "plan.json"
    path.write_text("[1, 2, 3]")
    code, _, err = run(capsys, "plan", "evaluate", str(path))
    assert code == VALIDATION_EXIT
