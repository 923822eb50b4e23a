"""Table and JSON renderings of evaluator results."""

from __future__ import annotations

from typing import Any, Iterable, Sequence

from .dsl.evaluator import Result
from .dsl.format import format_value
from .neutroset import NeutroProduct, NeutroRelation, NeutroSet, NeutroTriple
from .serialization import dumps, relation_to_json, set_to_json, triple_to_json
from .taxonomy import Classification

__all__ = ["render_table", "render_json", "result_to_json", "classification_to_json"]


def _grid(header: Sequence[str], rows: Iterable[Sequence[str]], indent: str = "  ") -> list[str]:
    rows = [list(header)] + [list(r) for r in rows]
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    return [indent + "  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]


def _triple_cells(t: NeutroTriple) -> list[str]:
    return [str(c) for c in t.components]


def _result_lines(r: Result) -> list[str]:
    v = r.value
    if isinstance(v, NeutroSet):
        rows = ([name] + _triple_cells(t) for name, t in v.items())
        return [r.statement] + _grid(["element", "T", "I", "F"], rows)
    if isinstance(v, NeutroProduct):
        header = ["tuple"] + [f"#{k + 1}" for k in range(len(v.factors))]
        rows = (["(" + ", ".join(p.elements) + ")"] + [str(t) for t in p.triples] for p in v.tuples())
        return [r.statement] + _grid(header, rows)
    if isinstance(v, NeutroRelation):
        rows = (["(" + ", ".join(key) + ")"] + _triple_cells(t) for key, t in v.tuples.items())
        return [r.statement] + _grid(["tuple", "T", "I", "F"], rows)
    return [f"{r.statement}: {format_value(v)}"]


def render_table(results: Iterable[Result]) -> str:
    lines: list[str] = []
    for r in results:
        lines.extend(_result_lines(r))
    return "\n".join(lines) + ("\n" if lines else "")


def classification_to_json(c: Classification) -> dict[str, list[str]]:
    return {"labels": c.sorted_labels, "flags": c.sorted_flags}


def result_to_json(r: Result) -> dict[str, Any]:
    v = r.value
    doc: dict[str, Any] = {"kind": r.kind, "line": r.line, "statement": r.statement}
    if isinstance(v, NeutroSet):
        doc["value"] = set_to_json(v)
    elif isinstance(v, NeutroProduct):
        doc["value"] = {
            "factors": [set_to_json(s) for s in v.factors],
            "tuples": [
                {"elements": list(p.elements), "triples": [triple_to_json(t) for t in p.triples]}
                for p in v.tuples()
            ],
        }
    elif isinstance(v, NeutroRelation):
        doc["value"] = relation_to_json(v)
    elif isinstance(v, NeutroTriple):
        doc["value"] = triple_to_json(v)
    elif isinstance(v, Classification):
        doc["value"] = classification_to_json(v)
        doc["triple"] = triple_to_json(r.triple)
    else:
        doc["value"] = bool(v)
    return doc


def render_json(results: Iterable[Result]) -> str:
    return dumps([result_to_json(r) for r in results], indent=2) + "\n"
