"""Method comparison reports, JSON/text rendering, benchmark grid."""

import json

import numpy as np
import pytest

import trinv
from trinv.bench import METHOD_NAMES, compare_to_json, compare_to_text, invert_with, run_bench, run_compare, write_bench_csv

QUARTERS = trinv.make_tridiagonal([1.0, 1.0], [2.0, 2.0, 2.0], [1.0, 1.0])

JSON_METHOD_KEYS = {"name", "status", "residuals", "cond1", "ops", "time_ns"}


class TestInvertWith:
    def test_method_names_frozen(self):
        assert METHOD_NAMES == (
            "naive",
            "two-way",
            "two-way-fast",
            "lewis",
            "lewis-block",
            "ratio",
            "ratio-ext",
            "gepp",
        )

    def test_each_method_inverts_quarters(self):
        for name in METHOD_NAMES:
            X, ops = invert_with(name, QUARTERS)
            assert np.abs(X.entries @ QUARTERS.to_dense() - np.eye(3)).max() < 1e-12
            assert (ops is None) == (name == "gepp")

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            invert_with("cholesky", QUARTERS)


class TestRunCompare:
    def test_every_method_present_even_on_failure(self):
        report = run_compare(trinv.t10(), METHOD_NAMES, descriptor="paper-t10")
        assert [r.name for r in report.results] == list(METHOD_NAMES)
        by_status = {r.name: r.status for r in report.results}
        assert by_status["naive"] == "not-applicable"
        assert by_status["two-way"] == "not-applicable"
        assert by_status["lewis"] == "not-applicable"
        assert by_status["ratio"] == "not-applicable"
        assert by_status["ratio-ext"] == "success"
        assert by_status["lewis-block"] == "success"
        assert by_status["gepp"] == "success"

    def test_failures_carry_message_and_no_residuals(self):
        report = run_compare(trinv.t10(), ["naive", "ratio-ext"])
        failed = report.result("naive")
        assert failed.residual is None
        assert failed.message
        assert report.result("ratio-ext").residual is not None

    def test_duplicates_collapse(self):
        report = run_compare(QUARTERS, ["ratio-ext", "ratio-ext", "gepp"])
        assert [r.name for r in report.results] == ["ratio-ext", "gepp"]

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            run_compare(QUARTERS, ["ratio-ext", "qr"])

    def test_agreement_pairs(self):
        report = run_compare(QUARTERS, ["ratio-ext", "gepp", "naive"])
        assert set(report.agreement) == {("ratio-ext", "gepp"), ("ratio-ext", "naive"), ("gepp", "naive")}
        for value in report.agreement.values():
            assert value <= 1e-12

    def test_overflow_status(self):
        report = run_compare(trinv.toeplitz(400, 1.0, 2016.0, 1.0), ["lewis", "ratio-ext"])
        assert report.result("lewis").status == "overflow"
        assert report.result("ratio-ext").status == "success"

    def test_singular_status(self):
        report = run_compare(trinv.toeplitz(8, 1.0, 1.0, 1.0), ["ratio-ext", "gepp"])
        assert {r.status for r in report.results} == {"singular"}


class TestJsonOutput:
    def test_schema(self):
        report = run_compare(trinv.t10(), METHOD_NAMES, descriptor="paper-t10")
        doc = json.loads(compare_to_json(report))
        assert set(doc) == {"matrix", "n", "methods"}
        assert doc["matrix"] == "paper-t10"
        assert doc["n"] == 10
        assert [m["name"] for m in doc["methods"]] == list(METHOD_NAMES)
        for m in doc["methods"]:
            assert set(m) == JSON_METHOD_KEYS
            assert m["status"] in ("success", "overflow", "not-applicable", "singular")
            if m["status"] == "success":
                assert set(m["residuals"]) == {"right", "left"}
                assert set(m["residuals"]["right"]) == {"one", "inf", "frobenius", "two_estimate"}
            else:
                assert m["residuals"] is None

    def test_gepp_ops_null(self):
        doc = json.loads(compare_to_json(run_compare(QUARTERS, ["gepp"])))
        assert doc["methods"][0]["ops"] is None

    def test_non_finite_cond_serializes_as_null(self):
        # Inverting this succeeds but norm(A) * norm(X) overflows to inf.
        A = trinv.make_tridiagonal([0.0], [1e308, 1e-308], [0.0])
        doc = json.loads(compare_to_json(run_compare(A, ["gepp"])))
        method = doc["methods"][0]
        assert method["status"] == "success"
        assert method["cond1"] is None

    def test_failed_method_serializes_nulls(self):
        doc = json.loads(compare_to_json(run_compare(trinv.t10(), ["naive"])))
        method = doc["methods"][0]
        assert method["status"] == "not-applicable"
        assert method["residuals"] is None
        assert method["cond1"] is None


class TestTextOutput:
    def test_contains_methods_and_agreement(self):
        report = run_compare(QUARTERS, ["ratio-ext", "gepp"])
        text = compare_to_text(report)
        assert "ratio-ext" in text and "gepp" in text
        assert "pairwise max deviation" in text
        assert "eps=" in text

    def test_shows_failure_reason(self):
        text = compare_to_text(run_compare(trinv.t10(), ["naive"]))
        assert "not-applicable" in text


class TestRunBench:
    def test_grid_and_csv(self, tmp_path):
        rows = run_bench("toeplitz(N, 1, 4, 1)", [10, 20], repetitions=2, methods=["ratio-ext", "lewis"])
        assert [(r["method"], r["n"]) for r in rows] == [
            ("ratio-ext", 10),
            ("lewis", 10),
            ("ratio-ext", 20),
            ("lewis", 20),
        ]
        for row in rows:
            assert row["status"] == "success"
            assert row["time_ns_best"] <= row["time_ns_mean"]
            assert row["reps"] == 2
            assert row["ops"] > 0
        path = tmp_path / "bench.csv"
        write_bench_csv(rows, path)
        lines = path.read_text().splitlines()
        assert lines[0] == "method,n,status,ops,reps,time_ns_best,time_ns_mean"
        assert len(lines) == 1 + len(rows)

    def test_family_must_mention_n(self):
        with pytest.raises(ValueError):
            run_bench("paper-t10", [10], repetitions=1, methods=["ratio-ext"])

    def test_sizes_must_ascend(self):
        with pytest.raises(ValueError):
            run_bench("toeplitz(N, 1, 4, 1)", [20, 10], repetitions=1, methods=["ratio-ext"])

    def test_default_methods_exclude_dense_oracle(self):
        rows = run_bench("toeplitz(N, 1, 4, 1)", [6], repetitions=1)
        names = {r["method"] for r in rows}
        assert "gepp" not in names
        assert "ratio-ext" in names and "lewis" in names

    def test_overflow_rows_recorded(self, tmp_path):
        rows = run_bench("toeplitz(N, 1, 2016, 1)", [300], repetitions=1, methods=["lewis", "ratio-ext"])
        status = {r["method"]: r["status"] for r in rows}
        assert status["lewis"] == "overflow"
        assert status["ratio-ext"] == "success"
        path = tmp_path / "bench.csv"
        write_bench_csv(rows, path)
        overflow_line = [ln for ln in path.read_text().splitlines() if ln.startswith("lewis")][0]
        assert ",overflow,," in overflow_line  # empty ops cell
