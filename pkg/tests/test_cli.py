from __future__ import annotations

import io
import json

from blockverify.cli import main
from blockverify.records import corpus_dir


def run(*argv, stdin: str = ""):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdin=io.StringIO(stdin), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def corpus(name: str) -> str:
    return str(corpus_dir() / name)


class TestCheck:
    def test_s10(self):
        code, out, _ = run("check", corpus("s10_p2.json"))
        assert code == 0
        assert "FAIL      strong_local: 26112 > 25600" in out
        assert "expected (documented counterexample)" in out
        assert "PASS      local_conjecture: 26112 <= 41984" in out

    def test_a5_by_basename(self):
        code, out, _ = run("check", "a5_p2.json")
        assert code == 0 and "no_lb_factor: 11 > 9" in out

    def test_a5_by_stem(self):
        code, out, _ = run("check", "a5_p2")
        assert code == 0 and "no_lb_factor: 11 > 9" in out

    def test_whole_corpus_exits_zero(self):
        code, _, err = run("check", "--corpus")
        assert code == 0, err

    def test_json_single_and_many(self):
        code, out, _ = run("check", "a5_p2.json", "--report", "json")
        data = json.loads(out)
        assert code == 0 and data["record"] == "A5 principal 2-block"
        v = next(v for v in data["verdicts"] if v["check_id"] == "local_conjecture")
        assert (v["lhs"], v["rhs"]) == ("11/3", "9/1")
        code, out, _ = run("check", "a5_p2.json", "a7_p3.json", "--report", "json")
        assert isinstance(json.loads(out), list) and len(json.loads(out)) == 2

    def test_malformed_exit_1(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"name": "x",\n "p": }')
        code, _, err = run("check", str(bad))
        assert code == 1 and f"{bad}:2:" in err

    def test_schema_violation_exit_1(self):
        code, _, err = run("check", "-", stdin='{"name": "x", "p": 2}')
        assert code == 1 and "<stdin>" in err and "required property" in err

    def test_missing_file_exit_1(self):
        code, _, err = run("check", "no_such_file.json")
        assert code == 1 and "cannot read" in err

    def test_potential_counterexample_exit_2(self):
        record = {"name": "odd", "p": 3, "defect_group_order": 3, "brauer_degrees": [1, 2], "ordinary_degrees": [1, 3, 4]}
        code, out, _ = run("check", "-", stdin=json.dumps(record))
        assert code == 2 and "potential counterexample" in out

    def test_expectation_mismatch_exit_2(self):
        record = json.loads((corpus_dir() / "a5_p2.json").read_text())
        record["expected"] = {"local_conjecture": "fail"}
        code, out, _ = run("check", "-", stdin=json.dumps(record))
        assert code == 2 and "expectation mismatch" in out

    def test_inconsistent_data_exit_1(self):
        record = {"name": "x", "p": 2, "defect_group_order": 4, "brauer_degrees": [1], "cartan": [[4]], "ordinary_degrees": [1]}
        code, _, err = run("check", "-", stdin=json.dumps(record))
        assert code == 1 and "phi^T C phi != sum of squared ordinary degrees" in err

    def test_tolerance_flag(self):
        code, out, _ = run("check", "a5_p2.json", "--tolerance", "1/10")
        assert code == 0 and "tolerance 1/10" in out
        code, _, _ = run("check", "a5_p2.json", "--tolerance", "-1")
        assert code == 1

    def test_speculative_flag(self):
        _, out, _ = run("check", "tame_sd3h_d8.json")
        assert "SKIP" in out and "speculative" in out
        code, out, _ = run("check", "tame_sd3h_d8.json", "--include-speculative")
        assert code == 0 and "tame.sharper_bound: 10 > 9" in out and "discrepancy" in out

    def test_no_inputs(self):
        assert run("check")[0] == 1

    def test_deterministic(self):
        assert run("check", "--corpus", "--report", "json") == run("check", "--corpus", "--report", "json")


class TestTree:
    def test_star(self):
        code, out, _ = run("tree", "--star", "3", "2")
        assert code == 0
        assert "|D| = em+1 = 7" in out and "    3   2   2" in out
        assert "SKIP      cyclic_inequality" in out

    def test_star_with_degrees_equality(self):
        code, out, _ = run("tree", "--star", "3", "2", "--degrees", "1,1,1")
        assert code == 0 and "PASS      cyclic_inequality: 3 = 3" in out

    def test_path_file_m1(self, tmp_path):
        f = tmp_path / "path.json"
        f.write_text(json.dumps({"vertices": ["a", "b", "c", "d"], "edges": [["a", "b"], ["b", "c"], ["c", "d"]]}))
        code, out, _ = run("tree", str(f), "--report", "json")
        data = json.loads(out)
        assert code == 0 and data["cartan"] == [[2, 1, 0], [1, 2, 1], [0, 1, 2]]
        assert data["defect_group_order"] == 4 and data["is_star"] is False

    def test_corpus_tree(self):
        code, out, _ = run("tree", "tree_path_e3_m2.json")
        assert code == 0 and "cyclic_inequality: 11/7 <= 3" in out

    def test_errors(self):
        assert run("tree")[0] == 1
        assert run("tree", "--star", "3", "2", "--degrees", "1,1")[0] == 1
        assert run("tree", "a5_p2.json")[0] == 1
        assert run("tree", "--star", "3", "2", "--degrees", "1,x")[0] == 1


class TestTame:
    def test_d3k(self):
        code, out, _ = run("tame", "D3K", "--defect-max", "64")
        assert code == 0 and "10 parameter points, 0 failures" in out

    def test_all_to_4096(self):
        code, out, _ = run("tame", "ALL", "--defect-max", "2^12", "--include-speculative")
        assert code == 0 and out.rstrip().endswith("0 failures")
        assert "sharper stated bound exceeded" in out

    def test_json(self):
        code, out, _ = run("tame", "SD3H", "--defect-max", "16", "--report", "json")
        rows = json.loads(out)
        assert code == 0 and [r["defect_group_order"] for r in rows] == [8, 16]

    def test_unknown(self):
        code, _, err = run("tame", "BOGUS")
        assert code == 1 and "unknown family" in err


class TestProductPower:
    def test_product_a5_a5(self):
        code, out, _ = run("product", "a5_p2.json", "a5_p2.json")
        data = json.loads(out)
        assert code == 0 and sum(x * x for x in data["ordinary_degrees"]) == 1936

    def test_power_pipes_into_check(self):
        code, out, _ = run("power", "a5_p2.json", "3")
        assert code == 0
        code, report, _ = run("check", "-", stdin=out)
        assert code == 0
        assert "FAIL      no_lb_factor: 1331 > 729" in report
        assert "PASS      local_conjecture" in report

    def test_power_one(self):
        _, out, _ = run("power", "a5_p2.json", "1")
        data = json.loads(out)
        orig = json.loads((corpus_dir() / "a5_p2.json").read_text())
        for key in ("provenance", "expected"):
            orig.pop(key, None)
        assert data.pop("name") == orig.pop("name") + "^1"
        assert data == orig

    def test_errors(self):
        assert run("power", "a5_p2.json", "0")[0] == 1
        assert run("product", "a5_p2.json", "s3_p3.json")[0] == 1
        assert run("product", "a5_p2.json", "tree_star_e2_m3.json")[0] == 1


def test_usage_error():
    assert run("frobnicate")[0] == 1
    assert run()[0] == 1


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
