"""Tabular report serialisation (JSON, TSV and a plain-text rendering).

Rationals are written as "p/q" strings, floats with 12 significant digits,
weights as "[1,0,0]" strings.  Output depends only on the inputs, so repeated
invocations are byte-identical.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import singledispatch

from .affine import SumRuleReport, affine_qdim, level_weights, sugawara_weight, vacuum_s_entry
from .coset import ClassificationReport
from .lie import RootSystem
from .minimal import MinimalModel

SCHEMA_VERSION = 1


@dataclass
class Table:
    kind: str
    algebra: str | None
    parameters: dict = field(default_factory=dict)
    rows: list = field(default_factory=list)


def format_float(x):
    return f"{x:.12g}"


def format_weight(w):
    return "[" + ",".join(str(x) for x in w) + "]"


def _json_value(v):
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, float):
        return float(format_float(v))
    if isinstance(v, tuple):
        return format_weight(v)
    if isinstance(v, list):
        return [_json_value(x) for x in v]
    raise TypeError(f"cannot serialise {type(v).__name__}")


def _text_value(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format_float(v)
    if isinstance(v, (tuple, list)):
        return "[" + ",".join(_text_value(x) for x in v) + "]"
    return str(v)


@singledispatch
def to_table(report):
    raise TypeError(f"no table layout for {type(report).__name__}")


@to_table.register
def _(report: Table):
    return report


@to_table.register
def _(rs: RootSystem):
    row = {
        "rank": rs.rank,
        "dual_coxeter": rs.dual_coxeter,
        "dim_g": rs.dim_g,
        "positive_roots": len(rs.positive_roots),
        "fundamental_group_order": rs.fundamental_group_order,
        "long_index": rs.long_index,
        "highest_root": rs.highest_root,
        "marks": rs.marks,
        "comarks": rs.comarks,
        "simple_currents": rs.simple_current_indices,
    }
    return Table("roots", rs.name, {}, [row])


def weights_table(rs, k):
    rows = [{"weight": lam, "level": rs.level(lam), "h": sugawara_weight(rs, k, lam),
             "s0": vacuum_s_entry(rs, k, lam), "qdim": affine_qdim(rs, k, lam)}
            for lam in level_weights(rs, k)]
    return Table("weights", rs.name, {"level": k}, rows)


@to_table.register
def _(report: SumRuleReport):
    params = {"level": report.level, "sum_sq": report.total, "residual": report.residual,
              "tolerance": report.tolerance, "passed": report.passed}
    rows = [{"weight": lam, "s0": s} for lam, s in report.row.entries.items()]
    for i, c in enumerate(report.classes):
        params[f"class{i}"] = f"{format_weight(c.representative)} size={c.size} " \
                              f"sum={format_float(c.total)} residual={format_float(c.residual)}"
    return Table("srow", report.algebra, params, rows)


def classification_table(report: ClassificationReport, dedup=False):
    sizes = {t: o.size for o in report.orbits for t in o.members}
    reps = {o.representative for o in report.orbits}
    cands = {r.triple for r in report.candidates}
    rows = []
    for r in report.triples:
        if dedup and r.triple not in reps:
            continue
        rows.append({"top": r.triple.top, "mid": r.triple.mid, "bot": r.triple.bot,
                     "qdim": r.qdim, "baseline_h": r.baseline,
                     "orbit_size": sizes[r.triple], "candidate": r.triple in cands})
    params = {
        "k": report.k, "l": report.l, "central_charge": report.central_charge,
        "triples": len(report.triples), "orbits": len(report.orbits),
        "glob": report.glob, "sum_sq_all": report.sum_sq_all,
        "sum_sq_candidates": report.sum_sq_candidates, "ratio_all": report.ratio_all,
        "residual": report.residual, "tolerance": report.tolerance,
        "passed": report.passed,
        "short_orbits": [format_weight(t.top + t.mid + t.bot) for t in report.short_orbits],
    }
    return Table("coset", report.algebra, params, rows)


@to_table.register
def _(report: ClassificationReport):
    return classification_table(report)


@to_table.register
def _(mm: MinimalModel):
    rows = [{"r": r, "s": s, "h": h} for (r, s), h in mm.spectrum]
    return Table("minimal", None, {"p": mm.p, "q": mm.q, "central_charge": mm.central_charge},
                 rows)


def export(report, fmt="json"):
    """Serialise a report to bytes in ``fmt`` ('json' or 'tsv')."""
    t = to_table(report)
    if fmt == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "kind": t.kind,
            "algebra": t.algebra,
            "parameters": {k: _json_value(v) for k, v in t.parameters.items()},
            "rows": [{k: _json_value(v) for k, v in row.items()} for row in t.rows],
        }
        return (json.dumps(doc, indent=2) + "\n").encode()
    if fmt == "tsv":
        cols = _columns(t.rows)
        lines = ["\t".join(cols)]
        lines += ["\t".join(_text_value(row.get(c)) for c in cols) for row in t.rows]
        return ("\n".join(lines) + "\n").encode()
    if fmt == "text":
        return render_text(t).encode()
    raise ValueError(f"unknown format {fmt!r}")


def _columns(rows):
    cols = []
    for row in rows:
        for c in row:
            if c not in cols:
                cols.append(c)
    return cols


def render_text(t):
    out = [f"{t.kind}" + (f" {t.algebra}" if t.algebra else "")]
    for k, v in t.parameters.items():
        out.append(f"  {k}: {_text_value(v)}")
    cols = _columns(t.rows)
    if cols:
        cells = [cols] + [[_text_value(row.get(c)) for c in cols] for row in t.rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(cols))]
        out.append("")
        for r in cells:
            out.append("  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip())
    return "\n".join(out) + "\n"
