import json

import pytest

from commgraph.certify import (
    CLAIMS,
    RunConfig,
    suite_m9,
    suite_thm5,
    suite_thm8,
    suite_thm9,
    suite_lemma1,
    verify_all,
)
from commgraph.constructions import default_conjugator
from commgraph.distance import validate_path
from commgraph.fields import GF
from commgraph.matrix import Matrix, matrix_from_json


def test_thm5_single_pair():
    cfg = RunConfig(timing=False)
    c = suite_thm5(cfg, grid=((3, 7),), pairs=[("3:0", "1:0,2:1")])
    assert c.verdict == "verified" and c.counters["instances"] == 1


def test_tampered_conjugator_is_violated():
    F = GF(7)
    S, _ = default_conjugator(F, 3)
    rows = [list(r) for r in S.data]
    rows[0][0] = F.zero
    bad = Matrix(F, rows)
    c = suite_thm5(RunConfig(timing=False), grid=((3, 7),), S_override=bad)
    assert c.verdict == "violated"


def test_budget_one_is_unsupported():
    c = suite_thm5(RunConfig(budget=1, timing=False), grid=((3, 7),))
    assert c.verdict == "unsupported"
    assert "BudgetExceeded" in c.notes[0]


def test_witnesses_round_trip():
    c = suite_thm5(RunConfig(timing=False), grid=((3, 7),), pairs=[("1:0,1:1,1:2", "3:0")])
    ex = json.loads(json.dumps(c.to_json()))["witnesses"]["example"]
    path = [matrix_from_json(m) for m in ex["path"]]
    A, B = matrix_from_json(ex["A"]), matrix_from_json(ex["B"])
    assert validate_path(path) and path[0] == A and path[-1] == B and len(path) == 5


def test_byte_identical_without_timing():
    cfg = RunConfig(seed=3, trials=5, timing=False)
    a = json.dumps(suite_lemma1(cfg).to_json(), sort_keys=True)
    b = json.dumps(suite_lemma1(cfg).to_json(), sort_keys=True)
    assert a == b
    assert "elapsed_ms" not in json.loads(a)
    c = RunConfig(seed=4, trials=5, timing=False)
    assert json.loads(json.dumps(suite_lemma1(c).to_json()))["seed"] == 4


def test_census_claims():
    cfg = RunConfig(timing=False)
    t8, t9 = suite_thm8(cfg), suite_thm9(cfg)
    assert t8.verdict == "verified" and not t8.witnesses["split_disagreements"]
    assert t8.witnesses["non_split_classes"]
    assert t9.verdict == "verified"


def test_m9_suite():
    c = suite_m9(RunConfig(timing=False))
    assert c.verdict == "verified" and c.witnesses["intersection_dim"] == 1


def test_verify_all_produces_twelve(tmp_path):
    out = tmp_path / "report.json"
    rep = verify_all(RunConfig(trials=10, out=str(out)))
    assert [c["claim_id"] for c in rep["certificates"]] == list(CLAIMS)
    assert len(CLAIMS) == 12
    assert rep["all_verified"], rep["summary"]
    assert json.loads(out.read_text())["all_verified"]


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(trials=0)


def test_thm5_grid_without_conjugator_is_unsupported():
    c = suite_thm5(RunConfig(timing=False), grid=((4, 5),))
    assert c.verdict == "unsupported" and c.counters["instances"] == 0
    assert c.counters["skipped"][0]["q"] == 5
