import json

import pytest

from mdscosets.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dist_closed_form_w1(capsys):
    code, out, _ = run(capsys, "dist", "--closed-form", "w1",
                       "--n", "6", "--d", "4", "--q", "5", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == "mdscosets.v1"
    assert payload["counts"] == ["0", "1", "0", "10", "35", "45", "34"]
    assert payload["total"] == "125"
    assert payload["consistent"] is True


def test_dist_bonneau_prefix(capsys):
    code, out, _ = run(capsys, "dist", "--bonneau", "--prefix", "0,0,2",
                       "--n", "5", "--d", "4", "--q", "5", "--format", "json")
    assert code == 0
    assert json.loads(out)["counts"] == ["0", "0", "2", "4", "11", "8"]


def test_dist_bonneau_original_agrees(capsys):
    code, out, _ = run(capsys, "dist", "--bonneau", "--original",
                       "--prefix", "0,0,2", "--n", "5", "--d", "4", "--q", "5",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["counts"] == ["0", "0", "2", "4", "11", "8"]


def test_dist_closed_form_mid(capsys):
    code, out, _ = run(capsys, "dist", "--closed-form", "mid", "--W", "2",
                       "--knowns", "1", "--n", "6", "--d", "5", "--q", "5",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["counts"] == ["0", "0", "1", "1", "6", "11", "6"]


def test_dist_closed_form_w2_and_d2(capsys):
    code, out, _ = run(capsys, "dist", "--closed-form", "w2", "--b", "1",
                       "--n", "6", "--d", "5", "--q", "5", "--format", "json")
    assert code == 0
    assert json.loads(out)["counts"] == ["0", "0", "1", "1", "6", "11", "6"]
    code2, out2, _ = run(capsys, "dist", "--closed-form", "d2", "--b", "3",
                         "--n", "6", "--d", "4", "--q", "5", "--format", "json")
    assert code2 == 0
    assert json.loads(out2)["counts"] == ["0", "0", "3", "8", "33", "48", "33"]
    code3, _, err = run(capsys, "dist", "--closed-form", "d2",
                        "--n", "6", "--d", "4", "--q", "5")
    assert code3 == 2 and "--b" in err


def test_verify_json_payload(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "conic-census",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["all_passed"] is True
    assert payload["criteria"][0]["number"] == 4


def test_dist_usage_error_for_small_d(capsys):
    code, _, err = run(capsys, "dist", "--closed-form", "w1",
                       "--n", "6", "--d", "2", "--q", "5")
    assert code == 2
    assert "d >= 3" in err


def test_dist_inconsistent_prefix_loose(capsys):
    code, out, _ = run(capsys, "dist", "--bonneau", "--loose",
                       "--prefix", "0,0,50", "--n", "5", "--d", "4", "--q", "5",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["consistent"] is False
    strict_code, _, err = run(capsys, "dist", "--bonneau",
                              "--prefix", "0,0,50", "--n", "5", "--d", "4", "--q", "5")
    assert strict_code == 2
    assert "inconsistent" in err


def test_census_code_classes(capsys):
    code, out, _ = run(capsys, "census", "code", "--family", "gdrs",
                       "--q", "5", "--d", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["classes"]) == 4
    assert payload["total_cosets"] == "125"
    weights = [c["weight_W"] for c in payload["classes"]]
    assert weights == sorted(weights)


def test_census_code_csv_columns(capsys):
    code, out, _ = run(capsys, "census", "code", "--family", "gdrs",
                       "--q", "5", "--d", "4", "--format", "csv")
    assert code == 0
    head = out.splitlines()[0]
    assert head.startswith("class_index,weight_W,coset_count,B_0,")
    assert head.endswith("B_6")


def test_census_budget_refusal(capsys):
    code, _, err = run(capsys, "census", "code", "--family", "gdrs",
                       "--q", "13", "--d", "6")
    assert code == 3
    assert "budget" in err


def test_census_geometry(capsys):
    code, out, _ = run(capsys, "census", "geometry", "--q", "5",
                       "--arc", "conic", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["classes"] == [{"bisecants": 3, "points": "10"},
                                  {"bisecants": 2, "points": "15"}]
    code2, out2, _ = run(capsys, "census", "geometry", "--q", "5",
                         "--arc", "conic-minus:1", "--format", "json")
    assert code2 == 0
    assert len(json.loads(out2)["classes"]) == 3
    code3, _, err = run(capsys, "census", "geometry", "--q", "5", "--arc", "moon")
    assert code3 == 2 and "unknown arc" in err


def test_census_field_poly_override(capsys):
    code, out, _ = run(capsys, "census", "code", "--family", "gdrs",
                       "--q", "8", "--d", "3", "--poly", "1,0,1,1",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["total_cosets"] == "64"


def test_covering_classify_gtrs(capsys):
    code, out, _ = run(capsys, "covering", "classify", "--family", "gtrs",
                       "--q", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["R"] == 2 and payload["mu"] == "3"
    assert payload["is_pmcf"] is True
    assert payload["saturating_set"]["kind"] == "OS"


def test_covering_classify_grs_with_deep_hole_check(capsys):
    code, out, _ = run(capsys, "covering", "classify", "--family", "grs",
                       "--q", "5", "--d", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["R"] == 3 and payload["mu"] == "10"
    assert payload["is_apmcf"] is True
    assert payload["deep_hole_check"]["count"] == "4"
    assert payload["deep_hole_check"]["equality_required"] is True


def test_covering_classify_counterexample_exits_1(capsys):
    # the [5,1,5]_5 removal refutes the deep-hole formula: verification mismatch
    code, _, err = run(capsys, "covering", "classify", "--family", "gdrs",
                       "--q", "5", "--d", "5", "--remove", "5")
    assert code == 1
    assert "mismatch" in err


def test_verify_theorem_subsets(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "conic-census")
    assert code == 0
    assert "criterion 4" in out and "PASS" in out
    code2, out2, _ = run(capsys, "verify", "--theorem", "symmetry", "--q", "5")
    assert code2 == 0
    code3, out3, _ = run(capsys, "verify", "--theorem", "remark-6-6", "--q", "5")
    assert code3 == 0
    assert "empirical, not asserted" in out3


def test_verify_unknown_theorem(capsys):
    code, _, err = run(capsys, "verify", "--theorem", "nonsense")
    assert code == 2 and "unknown theorem" in err


def test_out_file(tmp_path, capsys):
    target = tmp_path / "dist.json"
    code, out, _ = run(capsys, "dist", "--closed-form", "d1",
                       "--n", "5", "--d", "4", "--q", "5",
                       "--format", "json", "--out", str(target))
    assert code == 0
    assert json.loads(target.read_text())["counts"] == ["0", "0", "0", "10", "5", "10"]


def test_usage_error_exit_code(capsys):
    assert main(["dist", "--closed-form", "w1"]) == 2  # missing required args
    assert main(["nonsense"]) == 2
