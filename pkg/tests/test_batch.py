# -*- coding: utf-8 -*-
import json

import pandas as pd
import pytest

from liebranch.batch import COLUMNS, load_jobs, results_to_dataframe, run_batch, write_ledger

JOBS = [
    {"verb": "dim", "type": "A2", "weight": "1,1"},
    {"verb": "tensor", "type": "A1", "weights": "1;1"},
    {"verb": "case", "case": "A_D", "m": 0, "weight": "1"},
    {"verb": "levi", "type": "G2", "cross": [1], "weight": "0,1"},
    {"verb": "frobnicate"},
]


def test_run_batch_keeps_order_and_captures_errors():
    results = run_batch(JOBS, workers=3)
    assert [r["ok"] for r in results] == [True, True, False, True, False]
    assert results[0]["result"].dim == 8
    assert results[2]["exit"] == 2
    assert "out of range" in results[2]["error"]
    assert "frobnicate" in results[4]["error"]
    assert all(r["logs"][0].startswith("[STEP]") for r in results)


def test_run_batch_serial_matches_parallel():
    jobs = JOBS[:2] + JOBS[3:4]
    serial = [r["result"] for r in run_batch(jobs, workers=1)]
    parallel = [r["result"] for r in run_batch(jobs, workers=4)]
    assert [o.decomposition for o in serial] == [o.decomposition for o in parallel]


def test_missing_field_is_reported():
    (res,) = run_batch([{"verb": "dim"}])
    assert not res["ok"]
    assert res["error"].startswith("missing field")


@pytest.mark.parametrize(
    "job, field",
    [
        ({"verb": "tensor", "type": 5, "weights": "1;1"}, "type"),
        ({"verb": "case", "case": "A_D", "m": [2], "weight": "1,0,1"}, "m"),
        ({"verb": "case", "case": "A_D", "m": True, "weight": "1"}, "m"),
        ({"verb": "case", "case": ["A_D"], "m": 2, "weight": "1,0,1"}, "case"),
        ({"verb": "levi", "type": "F4", "cross": "3", "weight": "1,0,0,0"}, "cross"),
        ({"verb": "levi", "type": "F4", "cross": [[3]], "weight": "1,0,0,0"}, "cross"),
        ({"verb": "resmat", "type": {"F": 4}, "cross": [3]}, "type"),
    ],
)
def test_wrongly_typed_field_stays_in_its_job(job, field):
    good = {"verb": "dim", "type": "A1", "weight": "2"}
    results = run_batch([good, job, good], workers=3)
    assert [r["ok"] for r in results] == [True, False, True]
    assert results[1]["exit"] == 2
    assert repr(field) in results[1]["error"]


@pytest.mark.parametrize("weight", [[None], [{"a": 1}], {"w": [1]}, None, 1.5])
def test_wrongly_typed_weight_is_a_usage_error(weight):
    (res,) = run_batch([{"verb": "dim", "type": "A1", "weight": weight}])
    assert not res["ok"]
    assert res["exit"] == 2
    assert res["error"].startswith("bad weight")


def test_ledger_csv(tmp_path):
    results = run_batch(JOBS, workers=2)
    path = write_ledger(JOBS, results, str(tmp_path / "out" / "ledger.csv"))
    df = pd.read_csv(path, dtype=str, keep_default_na=False)
    assert list(df.columns) == COLUMNS
    assert len(df) == len(JOBS)
    assert df.loc[0, "dim"] == "8"
    assert df.loc[1, "components"] == "1X[0] +1X[2]"
    assert df.loc[1, "total_dim"] == "4"
    assert df.loc[3, "k"] == "A1T1"


def test_ledger_frame_without_results():
    df = results_to_dataframe([{"verb": "dim"}], [{"ok": False, "error": "boom"}])
    assert df.loc[0, "error"] == "boom"
    assert not df.loc[0, "ok"]


def test_load_jobs(tmp_path):
    p = tmp_path / "jobs.json"
    p.write_text(json.dumps({"jobs": JOBS[:2]}), encoding="utf-8")
    assert load_jobs(str(p)) == JOBS[:2]
    p.write_text("[1, 2]", encoding="utf-8")
    with pytest.raises(ValueError):
        load_jobs(str(p))
