"""Small-scale runs of the acceptance suite and its report export."""
import json

import numpy as np
import pytest

from core.orders import alternating_scheme, constant_scheme, random_ev_periodic
from core.words import Alphabet, parse_finite
from evaluation.run_suite import CRITERIA, CriterionResult, boundary_contradictions, main, run_all
from storage.report_exporter import ReportExporter


@pytest.mark.slow
@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion_passes_at_small_scale(number):
    res = CRITERIA[number](scale=0.01, seed=0, progress=False)
    assert res.number == number
    assert res.checked > 0
    assert res.failures == 0, res.examples


def test_boundary_contradictions_clean_on_examples():
    ab = Alphabet.from_string("ab")
    alt = alternating_scheme(2)
    assert boundary_contradictions(parse_finite("bababab", ab), alt, 3) == []
    assert boundary_contradictions(parse_finite("bababab", ab), alt, 3, parse_finite("ab", ab)) == []
    assert boundary_contradictions(parse_finite("abaabbab", ab), constant_scheme(2), 4) == []
    assert boundary_contradictions(parse_finite("baba", ab), constant_scheme(2), 2, parse_finite("a", ab)) == []


def test_boundaries_stay_factor_boundaries_on_samples():
    rng = np.random.default_rng(31)
    for scheme in (constant_scheme(2), alternating_scheme(2)):
        for _ in range(10):
            long_ = random_ev_periodic(rng, 2, 8, 10).prefix(40)
            assert boundary_contradictions(long_[:32], scheme, 16, long_[32:]) == []


def test_criterion_result_keeps_first_examples():
    res = CriterionResult(0, "demo")
    for i in range(8):
        res.check(i % 2 == 0, f"odd {i}")
    assert res.checked == 8
    assert res.failures == 4
    assert res.examples == ["odd 1", "odd 3", "odd 5", "odd 7"]


def test_run_all_respects_only():
    results = run_all(scale=0.01, seed=0, progress=False, only=[1])
    assert [r.number for r in results] == [1]


def test_report_exporter_writes_both_formats(tmp_path):
    exporter = ReportExporter(str(tmp_path))
    data = {
        "scale": 0.5,
        "seed": 3,
        "criteria": [
            {"number": 1, "title": "vectors", "checked": 4, "failures": 1, "seconds": 0.1, "examples": ["x=(ab)"]}
        ],
    }
    md = exporter.export("report", data)
    assert md["path"].endswith("report.md")
    assert "Verdict: FAIL (1 failures)" in md["content"]
    assert "`x=(ab)`" in md["content"]
    js = exporter.export("report", data, fmt="json")
    assert json.loads((tmp_path / "report.json").read_text(encoding="utf-8"))["seed"] == 3
    assert js["format"] == "json"


def test_suite_main_writes_reports(tmp_path):
    code = main(["--scale", "0.01", "--seed", "0", "--out_dir", str(tmp_path), "--only", "1", "--no-progress"])
    assert code == 0
    summary = json.loads((tmp_path / "acceptance_summary.json").read_text(encoding="utf-8"))
    assert summary["total_failures"] == 0
    assert (tmp_path / "acceptance_report.md").exists()
