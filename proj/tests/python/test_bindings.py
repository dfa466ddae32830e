import json
import os

import pytest

import stanley

FIXTURES = os.environ.get("STANLEY_FIXTURE_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "fixtures"))


def fixture(name):
    with open(os.path.join(FIXTURES, name)) as f:
        return json.load(f)


def test_crit_counts_and_class():
    crit = fixture("example_crit.json")
    assert stanley.counts(crit) == {"minus": 4, "equal": 4, "plus": 4}
    assert stanley.classify(crit)["class"] == "critical"
    report = stanley.analyze(crit)
    assert report["characterization"]["critical_iii"] is True
    assert report["characterization"]["supercritical_iii"] is False


def test_closure_words_match_fixture():
    inst = fixture("example_closure.json")
    words = stanley.extensions(inst)
    for variant, expected in inst["expected"]["words"].items():
        assert sorted(words[variant]) == sorted(expected)
    added = {tuple(p) for p in stanley.closure(inst)["added_covers"]}
    assert added == {("x1", "y2"), ("x1", "y3")}


def test_single_variant():
    inst = fixture("example_closure.json")
    assert list(stanley.extensions(inst, "equal")) == ["equal"]
    with pytest.raises(ValueError):
        stanley.extensions(inst, "sideways")


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        stanley.counts("{not json")


def test_sweep_summary():
    out = stanley.sweep(n_max=4, checks="stanley,trivial,k2")
    summary = out["summary"]
    assert summary["anomalous"] == 0
    assert summary["instances"] == len(out["findings"])
    with pytest.raises(RuntimeError):
        stanley.sweep(n_max=9)
