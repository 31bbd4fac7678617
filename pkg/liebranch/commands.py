# -*- coding: utf-8 -*-
"""
Verb implementations shared by the command line and batch runner, plus the
two output shapes: LiE-style text and a JSON payload.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from liebranch.logging_utils import get_logger
from liebranch.reps import Decomposition, branch_diag, dim, tensor
from liebranch.rootsys import LieType, LieTypeError, ShapeError, SimpleLieType, Weight
from liebranch.rules import (
    BASTON_EASTWOOD,
    CATALOG,
    NATIVE,
    RestrictionSpec,
    catalog_spec,
    grading_values,
    levi_branch,
    levi_spec,
    make_case,
)
from liebranch.weyl import SimpleSubset

_log = get_logger(__name__)


@dataclass
class Outcome:
    verb: str
    g: str = ""
    k: str = ""
    weight: Tuple[int, ...] = ()
    decomposition: Optional[Decomposition] = None
    spec: Optional[RestrictionSpec] = None
    dim: Optional[int] = None
    grading: List[Tuple[Fraction, ...]] = field(default_factory=list)
    cases: List[Dict[str, Any]] = field(default_factory=list)


# ---------------- Parsing ----------------

def _tokens(text) -> List[str]:
    if isinstance(text, (list, tuple)):
        return [str(x).strip() for x in text]
    src = str(text).strip().strip("[]")
    return [p.strip() for p in src.split(",")] if src else []


def parse_weight(text) -> Tuple[int, ...]:
    """ "1,0,2" -> (1, 0, 2); lists pass through. Empty text is the empty weight."""
    try:
        return tuple(int(p) for p in _tokens(text))
    except ValueError:
        raise ValueError(f"bad weight {text!r}: expected comma-separated integers") from None


def parse_typed_weight(t: LieType, text) -> Weight:
    """
    Weight of ``t``: the semisimple coordinates, then optionally one exact
    central value per torus factor ("1,0,0,0,0,0,-1/3" for E6T1). Central
    values default to 0.
    """
    parts = _tokens(text)
    ss, tr = t.semisimple_rank, t.torus_rank
    if len(parts) not in (ss, ss + tr):
        raise ShapeError(ss + tr, len(parts), "weight")
    try:
        coords = tuple(int(p) for p in parts[:ss])
        central = tuple(Fraction(p) for p in parts[ss:]) or (Fraction(0),) * tr
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"bad weight {text!r}: expected integers, then rational central values") from None
    return Weight(coords, central)


def parse_typed_weights(t: LieType, text) -> List[Weight]:
    """ "1,0;0,1" -> [Weight((1, 0)), Weight((0, 1))]; one weight per ";"-separated part."""
    if isinstance(text, (list, tuple)):
        parts = list(text)
    else:
        parts = [p for p in str(text).split(";") if p.strip()]
    if not parts:
        raise ValueError("no weights given")
    return [parse_typed_weight(t, p) for p in parts]


def parse_simple(text: str) -> SimpleLieType:
    t = LieType.parse(text)
    if not t.is_simple():
        raise LieTypeError(text, "a simple type is required here")
    return t.simple_factors[0]


def parse_crossed(nodes: Sequence) -> SimpleSubset:
    if not nodes:
        raise ValueError("at least one --cross node is required")
    return SimpleSubset.of(int(n) for n in nodes)


# ---------------- Job fields ----------------

def _text_field(job: Mapping[str, Any], key: str, required: bool = True) -> Optional[str]:
    value = job[key] if required else job.get(key)
    if value is None and not required:
        return None
    if not isinstance(value, str):
        raise ValueError(f"field {key!r} must be a string, got {type(value).__name__}")
    return value


def _int_field(job: Mapping[str, Any], key: str) -> Optional[int]:
    value = job.get(key)
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"field {key!r} must be an integer, got {type(value).__name__}")
    return value


def _cross_field(job: Mapping[str, Any]) -> List[int]:
    value = job.get("cross", [])
    if isinstance(value, int) and not isinstance(value, bool):
        value = [value]
    if not isinstance(value, (list, tuple)) or not all(
        isinstance(n, int) and not isinstance(n, bool) for n in value
    ):
        raise ValueError("field 'cross' must be a list of node numbers")
    return list(value)


# ---------------- Verbs ----------------

def run_case(name: str, weight, m=None, p=None, q=None) -> Outcome:
    case = make_case(name, m=m, p=p, q=q)
    spec = catalog_spec(case)
    w = parse_weight(weight)
    dec = spec.branch(w)
    return Outcome("case", str(spec.g), str(spec.k), w, decomposition=dec, spec=spec)


def list_cases() -> Outcome:
    rows = []
    for name, info in CATALOG.items():
        rows.append({
            "name": name,
            "kind": info.kind,
            "params": list(info.params),
            "order": info.order,
            "gamma": info.gamma,
            "label": info.label,
        })
    return Outcome("case", cases=rows)


def run_levi(type_text: str, cross: Sequence, weight, be: bool = False) -> Outcome:
    g = parse_simple(type_text)
    crossed = parse_crossed(cross)
    w = parse_weight(weight)
    spec = levi_spec(g, crossed)
    dec = levi_branch(g, crossed, w, BASTON_EASTWOOD if be else NATIVE)
    return Outcome("levi", str(g), str(spec.k), w, decomposition=dec, spec=spec)


def run_grading(type_text: str, cross: Sequence) -> Outcome:
    g = parse_simple(type_text)
    crossed = parse_crossed(cross)
    spec = levi_spec(g, crossed)
    return Outcome("levi", str(g), str(spec.k), spec=spec, grading=grading_values(g, crossed))


def run_resmat(name: Optional[str] = None, m=None, p=None, q=None,
               type_text: Optional[str] = None, cross: Sequence = ()) -> Outcome:
    if name:
        spec = catalog_spec(make_case(name, m=m, p=p, q=q))
    elif type_text:
        spec = levi_spec(parse_simple(type_text), parse_crossed(cross))
    else:
        raise ValueError("resmat needs a case name or --type with --cross")
    return Outcome("resmat", str(spec.g), str(spec.k), spec=spec)


def run_tensor(type_text: str, weights) -> Outcome:
    t = LieType.parse(type_text)
    rows = parse_typed_weights(t, weights)
    if len(rows) != 2:
        raise ValueError(f"tensor takes exactly two weights, got {len(rows)}")
    dec = tensor(t, rows[0], rows[1])
    return Outcome("tensor", str(t), str(t), rows[0].coords, decomposition=dec)


def run_diag(type_text: str, weights) -> Outcome:
    t = LieType.parse(type_text)
    rows = parse_typed_weights(t, weights)
    dec = branch_diag(t, rows)
    return Outcome("diag", str(t), str(t), rows[0].coords, decomposition=dec)


def run_dim(type_text: str, weight) -> Outcome:
    t = LieType.parse(type_text)
    w = parse_typed_weight(t, weight)
    return Outcome("dim", str(t), weight=w.coords, dim=dim(t, w))


def execute(job: Mapping[str, Any]) -> Outcome:
    """Run one job dict (same keys as the command-line options)."""
    verb = job.get("verb")
    if verb == "case":
        if job.get("list"):
            return list_cases()
        return run_case(_text_field(job, "case"), job.get("weight", ()),
                        _int_field(job, "m"), _int_field(job, "p"), _int_field(job, "q"))
    if verb == "levi":
        if job.get("grading"):
            return run_grading(_text_field(job, "type"), _cross_field(job))
        return run_levi(_text_field(job, "type"), _cross_field(job), job.get("weight", ()), bool(job.get("be")))
    if verb == "resmat":
        return run_resmat(_text_field(job, "case", required=False),
                          _int_field(job, "m"), _int_field(job, "p"), _int_field(job, "q"),
                          _text_field(job, "type", required=False), _cross_field(job))
    if verb == "tensor":
        return run_tensor(_text_field(job, "type"), job["weights"])
    if verb == "diag":
        return run_diag(_text_field(job, "type"), job["weights"])
    if verb == "dim":
        return run_dim(_text_field(job, "type"), job.get("weight", ()))
    raise ValueError(f"unknown verb {verb!r}")


# ---------------- Rendering ----------------

def render_decomposition(dec: Decomposition) -> str:
    """LiE-style "1X[0,1,0] +1X[2,0,0]", sorted lexicographically."""
    return " +".join(f"{m}X{w}" for w, m in dec.items())


def _render_matrix(spec: RestrictionSpec) -> str:
    lines = [f"{spec.g} -> {spec.k} ({spec.provenance})"]
    lines.extend("[" + ",".join(str(x) for x in row) + "]" for row in spec.matrix.entries)
    if spec.matrix.central_cols:
        cols = ",".join(str(c + 1) for c in spec.matrix.central_cols)
        lines.append(f"central columns {cols} / {spec.matrix.central_den}")
    return "\n".join(lines)


def render_lie(out: Outcome) -> str:
    if out.cases:
        width = max(len(c["name"]) for c in out.cases)
        return "\n".join(
            f"{c['name']:<{width}}  {c['kind']:<7}  order {c['order']}  {c['label']}" for c in out.cases
        )
    if out.dim is not None:
        return str(out.dim)
    if out.grading:
        return " ".join("(" + ",".join(str(x) for x in v) + ")" for v in out.grading)
    if out.decomposition is not None:
        return render_decomposition(out.decomposition)
    if out.spec is not None:
        return _render_matrix(out.spec)
    return ""


def decomposition_payload(dec: Decomposition) -> List[Dict[str, Any]]:
    return [
        {"mult": m, "weight": list(w.coords), "central": [str(c) for c in w.central]}
        for w, m in dec.items()
    ]


def to_payload(out: Outcome) -> Dict[str, Any]:
    if out.cases:
        return {"cases": out.cases}
    data: Dict[str, Any] = {"g": out.g, "weight": list(out.weight)}
    if out.dim is not None:
        data["dim"] = out.dim
        return data
    data["k"] = out.k
    if out.grading:
        data["grading"] = [[str(x) for x in v] for v in out.grading]
    if out.decomposition is not None:
        data["components"] = decomposition_payload(out.decomposition)
        if out.decomposition.convention != NATIVE:
            data["convention"] = out.decomposition.convention
    elif out.spec is not None:
        m = out.spec.matrix
        data.pop("weight")
        data.update({
            "rows": [list(r) for r in m.entries],
            "central_cols": list(m.central_cols),
            "central_den": m.central_den,
            "perm": list(out.spec.perm),
            "provenance": out.spec.provenance,
        })
    return data


def render_json(out: Outcome) -> str:
    return json.dumps(to_payload(out), ensure_ascii=False, indent=2)


def decomposition_from_payload(data: Mapping[str, Any]) -> Decomposition:
    """Inverse of the JSON rendering for a decomposition."""
    t = LieType.parse(data["g"] if data.get("convention") == BASTON_EASTWOOD else data["k"])
    terms: Dict[Weight, int] = {}
    for c in data["components"]:
        w = Weight(tuple(c["weight"]), tuple(Fraction(x) for x in c.get("central", ())))
        terms[w] = terms.get(w, 0) + int(c["mult"])
    return Decomposition(t, terms, convention=data.get("convention", NATIVE))
