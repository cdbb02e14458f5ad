#!/usr/bin/env python3
"""
Tests for report records, JSONL persistence and the resumable census
"""

import sys
import os
import json
import tempfile
sys.path.append(os.path.dirname(os.path.dirname(__file__)))

from leflab.census import census_sweep, ci_prediction, degree_tuples, summarize_census
from leflab.errors import BudgetExceeded, GenericityFailure, NotArtinian
from leflab.exactfield import FieldSpec
from leflab.predict import ci3_prediction
from leflab.reports import (JsonlWriter, ReportRecord, STATUS_BUDGET, STATUS_ERROR, STATUS_GENERICITY,
                            STATUS_MISMATCH, describe_error, new_record, read_jsonl, records_to_frame,
                            save_report, status_for, strip_timings)

FP = FieldSpec.prime()


def test_compare():
    record = new_record("locus", {"ci": [2, 2, 3]}, FP, 0)
    assert record.modulus == 32003 and record.field == str(FP)
    assert record.compare("codim", 2, 2)
    assert record.ok
    assert not record.compare("degree", 5, 6)
    assert record.status == STATUS_MISMATCH
    assert record.mismatches == [{"quantity": "degree", "computed": 5, "predicted": 6, "match": False}]
    assert len(record.comparisons) == 2


def test_compare_locus():
    prediction = ci3_prediction(2, 2, 3)
    record = new_record("locus", {"ci": [2, 2, 3]}, FP, 0)
    assert record.compare_locus("theorem", prediction, False, 2, 6)
    assert [c["quantity"] for c in record.comparisons] == ["theorem.empty", "theorem.codim", "theorem.degree"]
    wrong = new_record("locus", {"ci": [2, 2, 3]}, FP, 0)
    assert not wrong.compare_locus("theorem", prediction, True, 3, 0)
    assert [c["quantity"] for c in wrong.comparisons] == ["theorem.empty"]


def test_errors():
    assert status_for(GenericityFailure("x")) == STATUS_GENERICITY
    assert status_for(BudgetExceeded("x", 3)) == STATUS_BUDGET
    assert status_for(NotArtinian("x")) == STATUS_ERROR
    record = new_record("hf", {}, FP, 0)
    record.record_error(NotArtinian("only 1 generator"))
    assert record.status == STATUS_ERROR
    assert record.error == {"type": "NotArtinian", "message": "only 1 generator"}
    assert describe_error(NotArtinian("only 1 generator")) == "NotArtinian: only 1 generator"


def test_dict_round_trip():
    record = new_record("census", {"degrees": [2, 3]}, FP, 11)
    record.hvector = [1, 2, 2, 1]
    record.time("locus", 0.1234567)
    data = record.to_dict()
    assert data["schema_version"] == 1
    assert data["timings"]["locus"] == 0.123457
    restored = ReportRecord.from_dict(data)
    assert strip_timings(restored.to_dict()) == strip_timings(data)


def test_save_and_frame():
    with tempfile.TemporaryDirectory() as tmp:
        one = new_record("hf", {"monomial": [2, 2]}, FP, 0)
        one.hvector = [1, 2, 1]
        path = os.path.join(tmp, "one.json")
        save_report([one], path)
        with open(path) as f:
            assert json.load(f)["hvector"] == [1, 2, 1]
        save_report([one, one], path)
        with open(path) as f:
            assert len(json.load(f)) == 2

    record = new_record("locus", {"ci": [2, 2]}, FP, 0)
    record.loci = [{"degree": 0, "empty": True}, {"degree": 1, "empty": False}]
    frame = records_to_frame([record, new_record("hf", {}, FP, 0)])
    assert len(frame) == 3
    assert list(frame["locus_degree"].iloc[:2]) == [0, 1]


def test_jsonl():
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "records.jsonl")
        assert read_jsonl(path) == []
        with open(path, "w") as f:
            f.write('{"a": 1}\n{"a": 2')
        assert read_jsonl(path) == [{"a": 1}]
        with JsonlWriter(path) as writer:
            writer.write({"a": 3})
        assert read_jsonl(path) == [{"a": 1}, {"a": 3}]


def test_census_resume():
    assert degree_tuples(2, 3) == [(2, 2), (2, 3), (3, 3)]
    assert ci_prediction((2, 3)).degree == 2
    with tempfile.TemporaryDirectory() as tmp:
        out = os.path.join(tmp, "census_n2.jsonl")
        census_sweep(2, 2, FP, 0, out=out)
        assert len(read_jsonl(out)) == 1
        census_sweep(2, 3, FP, 0, out=out)
        records = read_jsonl(out)
        assert [tuple(r["input"]["degrees"]) for r in records] == [(2, 2), (2, 3), (3, 3)]
        assert all(r["status"] == "ok" for r in records)
        census_sweep(2, 3, FP, 0, out=out)
        assert len(read_jsonl(out)) == 3

        summary = summarize_census(out)
        assert int(summary["records"].sum()) == 3
        assert int(summary["matches"].sum()) == 3
        assert set(summary["regime"]) == {"codim2-equal-degrees", "codim2-ci"}


def test_census_bounds():
    with tempfile.TemporaryDirectory() as tmp:
        out = os.path.join(tmp, "census.jsonl")
        for n, bound in ((5, 3), (2, 1)):
            try:
                census_sweep(n, bound, FP, 0, out=out)
            except ValueError:
                continue
            raise AssertionError(f"n={n}, bound={bound} should be rejected")


def main():
    tests = [test_compare, test_compare_locus, test_errors, test_dict_round_trip, test_save_and_frame,
             test_jsonl, test_census_resume, test_census_bounds]
    for test in tests:
        test()
        print(f"✅ {test.__name__}")
    print(f"\n{len(tests)} tests passed")


if __name__ == "__main__":
    main()
