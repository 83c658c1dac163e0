from __future__ import annotations

import json

import pytest

from blockverify.brauer_tree import BrauerTree
from blockverify.checkers import assess, run_suite
from blockverify.model import BlockRecord, GroupRecord
from blockverify.records import (
    DataError,
    block_from_dict,
    corpus_paths,
    dumps_record,
    load_corpus,
    parse_entry,
)
from blockverify.tame import TameFamilySpec

EXPECTED_CORPUS = {
    "a5_p2", "a5_p2_group", "a7_p3", "cyclic_c5", "s10_p2", "s10_p2_degrees", "s10_p2_group",
    "s3_p3", "sl25_p2", "tame_d3k_d8", "tame_sd3h_d8", "tree_path_e3_m2", "tree_star_e2_m3",
}


def test_corpus_contents():
    corpus = load_corpus()
    assert set(corpus) == EXPECTED_CORPUS
    assert all(e.provenance for e in corpus.values())
    assert isinstance(corpus["a5_p2_group"].record, GroupRecord)
    assert isinstance(corpus["tree_star_e2_m3"].record, BrauerTree)
    assert isinstance(corpus["tame_sd3h_d8"].record, TameFamilySpec)


def test_expectations_name_real_checks():
    for stem, entry in load_corpus().items():
        if not isinstance(entry.record, (BlockRecord, GroupRecord)):
            continue
        report = run_suite(entry.record)
        for check_id, want in entry.expected.items():
            v = report.verdict(check_id)
            assert v.holds == (want == "pass"), (stem, check_id)
        assert assess(report, entry.record.p, entry.expected).ok, stem


def test_s10_record_values():
    rec = load_corpus()["s10_p2"].record
    assert rec.brauer_degrees == (128, 160)
    assert rec.cartan.to_lists() == [[3, 4], [4, 8]]
    assert rec.group_order == 3628800


@pytest.mark.parametrize("stem", sorted(EXPECTED_CORPUS))
def test_round_trip(stem):
    entry = load_corpus()[stem]
    again = parse_entry(dumps_record(entry.record), "<rt>")
    assert again.record == entry.record


def test_block_dict_round_trip():
    d = json.loads(corpus_paths()[0].read_text())
    d.pop("provenance", None)
    d.pop("expected", None)
    assert json.loads(dumps_record(block_from_dict(d))) == d


class TestDiagnostics:
    def test_malformed_json_has_position(self):
        with pytest.raises(DataError) as exc:
            parse_entry('{\n  "name": "x",\n  "p": 2,,\n}', "f.json")
        assert exc.value.diagnostics[0].startswith("f.json:3:")

    def test_schema_violation_has_line(self):
        text = '{\n  "name": "x",\n  "p": 2,\n  "defect_group_order": 4,\n  "brauer_degrees": [1, -2]\n}'
        with pytest.raises(DataError) as exc:
            parse_entry(text, "f.json")
        msg = exc.value.diagnostics[0]
        assert msg.startswith("f.json:5:") and "brauer_degrees/1" in msg

    def test_unknown_field(self):
        with pytest.raises(DataError, match="schema violation"):
            parse_entry('{"name": "x", "p": 2, "defect_group_order": 4, "brauer_degrees": [1], "colour": 1}')

    def test_missing_field(self):
        with pytest.raises(DataError, match="'brauer_degrees' is a required property"):
            parse_entry('{"name": "x", "p": 2, "defect_group_order": 4}')

    def test_invalid_record(self):
        with pytest.raises(DataError, match="cartan not positive definite"):
            parse_entry('{"name": "x", "p": 2, "defect_group_order": 4, "brauer_degrees": [1], "cartan": [[0]]}')

    def test_invalid_tree(self):
        with pytest.raises(DataError, match="invalid tree"):
            parse_entry('{"vertices": ["a", "b", "c"], "edges": [["a", "b"]]}')
        with pytest.raises(DataError, match="brauer_degrees"):
            parse_entry('{"vertices": ["a", "b"], "edges": [["a", "b"]], "brauer_degrees": [1, 1]}')

    def test_inadmissible_tame(self):
        with pytest.raises(DataError, match="inadmissible parameters"):
            parse_entry('{"family": "D3K", "parameters": {"a": 1, "k": 5}, "defect_group_order": 8}')
        with pytest.raises(DataError, match="schema violation"):
            parse_entry('{"family": "NOPE", "parameters": {}, "defect_group_order": 8}')

    def test_top_level_must_be_object(self):
        with pytest.raises(DataError, match="must be an object"):
            parse_entry("[1, 2]")
