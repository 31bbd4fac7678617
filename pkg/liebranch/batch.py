# -*- coding: utf-8 -*-
"""
Independent jobs in parallel, merged back in input order, and a pandas
ledger of the results (.xlsx or .csv).
"""
from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, Mapping, Sequence

import pandas as pd

from liebranch.commands import execute, render_lie, to_payload
from liebranch.logging_utils import get_logger

_log = get_logger(__name__)

COLUMNS = [
    "job",
    "verb",
    "g",
    "k",
    "weight",
    "dim",
    "components",
    "total_dim",
    "ok",
    "error",
]


def load_jobs(path: str) -> List[Dict[str, Any]]:
    """Read a JSON list of job dicts (or {"jobs": [...]})."""
    with open(path, "r", encoding="utf-8") as f:
        data = json.load(f)
    if isinstance(data, dict):
        data = data.get("jobs", [])
    if not isinstance(data, list) or not all(isinstance(j, dict) for j in data):
        raise ValueError(f"{path}: expected a list of job objects")
    return data


def _run_one(job: Mapping[str, Any]) -> Dict[str, Any]:
    logs: List[str] = []

    def log(msg: str) -> None:
        logs.append(msg)
        _log.info("%s", msg)

    log(f"[STEP] {job.get('verb')} {json.dumps(dict(job), sort_keys=True)}")
    try:
        out = execute(job)
    except (ValueError, ArithmeticError, KeyError) as e:
        msg = str(e) if not isinstance(e, KeyError) else f"missing field {e}"
        log(f"[ERROR] {msg}")
        return {"ok": False, "error": msg, "logs": logs, "result": None, "exit": 3 if isinstance(e, ArithmeticError) else 2}
    log(f"[OK] {render_lie(out)[:200]}")
    return {"ok": True, "error": "", "logs": logs, "result": out, "exit": 0}


def run_batch(jobs: Sequence[Mapping[str, Any]], workers: int = 4) -> List[Dict[str, Any]]:
    """Run jobs on a thread pool; the returned list follows the input order."""
    workers = max(1, int(workers))
    _log.info("batch: %d jobs on %d workers", len(jobs), workers)
    if workers == 1 or len(jobs) <= 1:
        return [_run_one(j) for j in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_one, jobs))


def results_to_dataframe(jobs: Sequence[Mapping[str, Any]], results: Sequence[Mapping[str, Any]]) -> pd.DataFrame:
    data = []
    for i, (job, res) in enumerate(zip(jobs, results), start=1):
        out = res.get("result")
        row = {c: "" for c in COLUMNS}
        row.update({"job": i, "verb": job.get("verb", ""), "ok": bool(res.get("ok")), "error": res.get("error", "")})
        if out is not None:
            payload = to_payload(out)
            row["g"] = payload.get("g", "")
            row["k"] = payload.get("k", "")
            row["weight"] = ",".join(str(x) for x in payload.get("weight", []))
            if out.dim is not None:
                row["dim"] = out.dim
            if out.decomposition is not None:
                row["components"] = render_lie(out)
                if out.decomposition.convention == "native":
                    row["total_dim"] = out.decomposition.total_dim()
        data.append(row)
    return pd.DataFrame(data, columns=COLUMNS)


def write_ledger(jobs: Sequence[Mapping[str, Any]], results: Sequence[Mapping[str, Any]], path: str) -> str:
    """Write the batch ledger; the extension picks the format."""
    d = os.path.dirname(path)
    if d and not os.path.exists(d):
        os.makedirs(d, exist_ok=True)
    df = results_to_dataframe(jobs, results)
    if path.lower().endswith(".csv"):
        df.to_csv(path, index=False)
    else:
        df.to_excel(path, index=False, engine="openpyxl")
    _log.info("ledger: %d rows -> %s", len(df), path)
    return path
