"""Smoke tests for the python bindings: each bound operation is called once
with a worked value."""

import json
import math

import pytest

import meancomp as mc

GINI_21 = json.dumps(
    {
        "kind": "gini",
        "p": 2.0,
        "q": 1.0,
        "family": {"kind": "coordinates", "d": 3},
        "measure": {
            "kind": "atoms",
            "atoms": [
                [1, 0.3333333333333333],
                [2, 0.3333333333333333],
                [3, 0.3333333333333334],
            ],
        },
    }
)

GEOMETRIC = json.dumps(
    {
        "pair": {
            "f": {"kind": "log"},
            "g": {"kind": "const", "c": 1.0},
            "interval": [0.0, 100.0],
        },
        "family": {"kind": "coordinates", "d": 2},
        "measure": {"kind": "atoms", "atoms": [[1, 0.5], [2, 0.5]]},
    }
)


def test_eval_implicit_and_explicit():
    assert mc.eval_implicit(GINI_21, [1.0, 2.0, 3.0]) == pytest.approx(14 / 6)
    assert mc.eval_explicit(GEOMETRIC, [1.0, 4.0]) == pytest.approx(2.0)
    assert mc.eval_implicit(GEOMETRIC, [1.0, 4.0]) == pytest.approx(2.0)


def test_scalar_means():
    assert mc.holder_mean(1.0, [1.0, 3.0]) == pytest.approx(2.0)
    assert mc.holder_mean(0.0, [2.0, 8.0]) == pytest.approx(4.0)
    assert mc.stolarsky_mean(2.0, 1.0, 1.0, 3.0) == pytest.approx(2.0)
    assert mc.delta_gini(2.0, 1.0, 2.0) == pytest.approx(2.0)
    assert mc.capital_delta_gini(2.0, 1.0, 1.0, 2.0) == pytest.approx(-2.0)


def test_gini_mean_descriptor():
    fam = json.dumps({"kind": "coordinates", "d": 3})
    mu = json.dumps(
        {
            "kind": "atoms",
            "atoms": [
                [1, 0.3333333333333333],
                [2, 0.3333333333333333],
                [3, 0.3333333333333334],
            ],
        }
    )
    assert mc.gini_mean(2.0, 1.0, fam, mu, [1.0, 2.0, 3.0]) == pytest.approx(14 / 6)


def test_diagonal_derivatives():
    mean = json.dumps(
        {
            "kind": "gini",
            "p": 2.0,
            "q": 0.0,
            "family": {"kind": "segment"},
            "measure": {"kind": "uniform01", "nodes": 64},
        }
    )
    doc = json.loads(mc.diagonal_derivatives(mean, 1.0))
    assert doc["gradient"][0] == pytest.approx(0.5)
    assert doc["hessian"][0][0] == pytest.approx(1 / 12)


def test_comparisons():
    verdict = json.loads(mc.gini_global(1.0, 0.0, 2.0, 0.0, math.inf))
    assert verdict["status"] == "Holds"
    verdict = json.loads(mc.gini_global(2.0, 0.0, 1.0, 0.0, math.inf))
    assert verdict["status"] == "Fails"
    assert "witness" in verdict

    assert json.loads(mc.holder_compare(1.0, 2.0))["status"] == "Holds"
    assert json.loads(mc.holder_compare(3.0, 1.0))["status"] == "Fails"

    mean_a = json.dumps(
        {
            "kind": "gini",
            "p": 1.0,
            "q": 0.0,
            "family": {"kind": "segment"},
            "measure": {"kind": "uniform01", "nodes": 48},
        }
    )
    mean_b = mean_a.replace('"p": 1.0', '"p": 2.0')
    local = json.loads(mc.compare_local(mean_a, mean_b, 1.0))
    assert local["status"] == "Holds"


def test_oracle_and_errors():
    report = json.loads(
        mc.brute_force_compare(GEOMETRIC, GEOMETRIC, 0.5, 4.0, 128, 1)
    )
    assert report["verdict"] == "Dominates"
    assert report["min_slack"] == 0.0

    with pytest.raises(ValueError):
        mc.delta_gini(1.0, 2.0, -1.0)
    with pytest.raises(ValueError):
        mc.eval_implicit("{not json", [1.0, 2.0])


def test_scenarios_listed():
    names = mc.scenario_names()
    assert "identity" in names
    result = json.loads(mc.run_scenario("identity", 3))
    assert result["pass"] is True
