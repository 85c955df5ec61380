"""
Report Service - Text and JSON Output
=====================================

This module renders every command result as human-readable text or as a
machine-readable JSON document.

JSON documents are built from ``to_dict`` records whose key order is
fixed, serialized with a fixed indent and a trailing newline, so identical
inputs give byte-identical output.

Usage:
    print(verdict_text(v, show_trace=True))
    sys.stdout.write(to_json(verdict_document(v)))
"""

from __future__ import annotations

import json
from typing import Any, Optional

import pandas as pd

from models.exploration import Certification
from models.model_class import ModelClass
from models.tangency_set import TangencySet
from models.verdict import Verdict
from models.whitehead_move import ReductionTrace
from services.model_catalog import models_frame


def to_json(document: Any) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def _word_lines(words, indent: str = "  ") -> list[str]:
    return [f"{indent}{w}" for w in words] or [f"{indent}(none)"]


def _length_profile(trace: ReductionTrace) -> str:
    moves = len(trace)
    return " -> ".join(str(n) for n in trace.lengths) + f" ({moves} move{'s' if moves != 1 else ''})"


def trace_lines(trace: ReductionTrace) -> list[str]:
    """Move-by-move log of a reduction."""
    lines = []
    for number, step in enumerate(trace.steps, start=1):
        lines.append(f"  {number}. {step.move.describe()}  -> length {step.length}")
        lines.append(f"     {step.result}")
    return lines


def occurrences_frame(v: Verdict) -> pd.DataFrame:
    """Per-generator occurrence counts of S_min with cut-disk crossings."""
    report = v.occurrences
    return pd.DataFrame(
        [{"generator": f"x{i}", "x_i": report.positive(i), "x_i^-1": report.negative(i),
          "crossings": report.crossings(i)} for i in range(1, report.genus + 1)],
        columns=["generator", "x_i", "x_i^-1", "crossings"],
    )


# =========================================================================
# check
# =========================================================================

def verdict_document(v: Verdict) -> dict:
    return v.to_dict()


def verdict_text(v: Verdict, show_trace: bool = False, source: Optional[str] = None) -> str:
    lines = []
    if source:
        lines.append(f"source: {source}")
    lines.append(f"genus: {v.genus}")
    raw = v.input_set.raw_words
    lines.append(f"input words ({len(raw)}, {v.input_set.essential_count} essential):")
    lines.extend(_word_lines(raw))
    lines.append(f"S_min (length {v.s_min.length}):")
    lines.extend(_word_lines(v.s_min.reduced))
    lines.append(f"reduction: {_length_profile(v.trace)}")
    if show_trace:
        lines.extend(trace_lines(v.trace))
    if v.genus:
        lines.append("occurrences in S_min:")
        table = occurrences_frame(v).to_string(index=False)
        lines.extend("  " + row for row in table.splitlines())
    lines.append(f"condition (A): {'holds' if v.criterion_holds else 'fails'}")
    lines.append(f"interpretation: {v.interpretation.value}")
    lines.append(f"  {v.interpretation.description}")
    return "\n".join(lines) + "\n"


# =========================================================================
# reduce
# =========================================================================

def reduction_document(s: TangencySet, s_min: TangencySet, trace: ReductionTrace) -> dict:
    return {
        "genus": s.genus,
        "input_words": [str(w) for w in s.raw_words],
        "length": s.length,
        "s_min": [str(w) for w in s_min.reduced],
        "min_length": s_min.length,
        "trace": trace.to_dict(),
    }


def reduction_text(s: TangencySet, s_min: TangencySet, trace: ReductionTrace) -> str:
    lines = [f"genus: {s.genus}", f"S_min (length {s_min.length}):"]
    lines.extend(_word_lines(s_min.reduced))
    lines.append(f"reduction: {_length_profile(trace)}")
    lines.extend(trace_lines(trace))
    return "\n".join(lines) + "\n"


# =========================================================================
# oracle
# =========================================================================

def certification_document(s: TangencySet, cert: Certification, node_budget: int) -> dict:
    document = {
        "genus": s.genus,
        "input_words": [str(w) for w in s.raw_words],
        "length": s.length,
        "node_budget": node_budget,
    }
    document.update(cert.to_dict())
    document["passed"] = cert.passed
    return document


def certification_text(s: TangencySet, cert: Certification, node_budget: int) -> str:
    exploration = cert.exploration
    lines = [
        f"genus: {s.genus}",
        f"start length: {s.length}",
        f"length cap: {exploration.length_cap}   node budget: {node_budget}",
        f"states visited: {exploration.visited_count}",
        f"greedy minimum: {cert.greedy_length}",
        f"oracle minimum: {exploration.global_min_length}",
        f"minimal forms ({len(exploration.minimal_forms)}):",
    ]
    lines.extend(f"  {form}" for form in exploration.minimal_forms)
    lines.append(f"greedy certified: {'yes' if cert.certified else 'NO'}")
    lines.append(f"minimal forms agree on (A): {'yes' if cert.forms_agree else 'NO'}")
    lines.append(f"minimal level connected: {'yes' if cert.connected else 'NO'}")
    return "\n".join(lines) + "\n"


# =========================================================================
# models
# =========================================================================

def models_document(g: int, classes: list[ModelClass], note: Optional[str]) -> dict:
    return {
        "genus": g,
        "count": len(classes),
        "nonempty": sum(1 for m in classes if not m.is_empty),
        "classes": [m.to_dict() for m in classes],
        "note": note,
    }


def models_text(g: int, classes: list[ModelClass], note: Optional[str]) -> str:
    lines = [f"genus {g}: {len(classes)} model classes (including the empty model)"]
    table = models_frame(classes).drop(columns=["genus"]).to_string(index=False)
    lines.extend("  " + row for row in table.splitlines())
    if note:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


# =========================================================================
# campaign
# =========================================================================

def campaign_document(df: pd.DataFrame, passed: bool) -> dict:
    return {
        "cases": len(df),
        "passed": passed,
        "rows": json.loads(df.to_json(orient="records")),
    }


def campaign_text(df: pd.DataFrame, passed: bool) -> str:
    if df.empty:
        return "campaign: 0 cases\n"
    failing = df[~(df["certified"] & df["forms_agree"] & df["connected"])]
    lines = [
        f"campaign: {len(df)} cases, genus {df['genus'].min()}..{df['genus'].max()}, "
        f"length {df['length'].min()}..{df['length'].max()}",
        f"certified: {int(df['certified'].sum())}/{len(df)}",
        f"minimal forms agree: {int(df['forms_agree'].sum())}/{len(df)}",
        f"minimal level connected: {int(df['connected'].sum())}/{len(df)}",
        f"criterion holds: {int(df['criterion_holds'].sum())}/{len(df)}",
        f"states visited: {int(df['visited'].sum())}",
    ]
    if not failing.empty:
        lines.append("failing cases:")
        lines.extend("  " + row for row in failing.to_string(index=False).splitlines())
    lines.append("PASSED" if passed else "FAILED")
    return "\n".join(lines) + "\n"


# =========================================================================
# errors
# =========================================================================

def error_document(exc: BaseException, exit_code: int) -> dict:
    return {
        "error": {"type": type(exc).__name__, "message": str(exc)},
        "exit_code": exit_code,
    }
