"""JSON documents for sets, triples and script results.

Endpoints are written as ``{"std": number, "coeff": number}`` with the
numbers copied digit-for-digit from the underlying decimals, and read back
with ``parse_float=Decimal``; a dump/load cycle is therefore exact.
"""

from __future__ import annotations

import json
from decimal import Decimal
from typing import Any

from .hyperreal import NonStdValue, format_decimal
from .ndset import IntervalUnion, NsInterval
from .neutroset import NeutroRelation, NeutroSet, NeutroTriple

__all__ = [
    "ENDPOINT_SCHEMA",
    "TRIPLE_SCHEMA",
    "SET_SCHEMA",
    "RESULTS_SCHEMA",
    "value_to_json",
    "value_from_json",
    "triple_to_json",
    "triple_from_json",
    "set_to_json",
    "set_from_json",
    "relation_to_json",
    "dumps",
    "loads",
]

ENDPOINT_SCHEMA = {
    "type": "object",
    "properties": {"std": {"type": "number"}, "coeff": {"type": "number"}},
    "required": ["std", "coeff"],
    "additionalProperties": False,
}

_COMPONENT_SCHEMA = {
    "type": "array",
    "minItems": 1,
    "items": {"type": "array", "items": ENDPOINT_SCHEMA, "minItems": 2, "maxItems": 2},
}

TRIPLE_SCHEMA = {
    "type": "object",
    "properties": {"T": _COMPONENT_SCHEMA, "I": _COMPONENT_SCHEMA, "F": _COMPONENT_SCHEMA},
    "required": ["T", "I", "F"],
    "additionalProperties": False,
}

SET_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "universe": {"type": "array", "items": {"type": "string"}, "uniqueItems": True},
        "membership": {"type": "object", "additionalProperties": TRIPLE_SCHEMA},
    },
    "required": ["universe", "membership"],
    "additionalProperties": False,
}

_NAMES = {"type": "array", "items": {"type": "string"}}

RESULTS_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "array",
    "items": {
        "type": "object",
        "required": ["kind", "line", "statement", "value"],
        "properties": {
            "line": {"type": "integer", "minimum": 1},
            "statement": {"type": "string"},
        },
        "oneOf": [
            {"properties": {"kind": {"const": "set"}, "value": SET_SCHEMA}},
            {"properties": {"kind": {"const": "triple"}, "value": TRIPLE_SCHEMA}},
            {"properties": {"kind": {"const": "check"}, "value": {"type": "boolean"}}},
            {
                "properties": {
                    "kind": {"const": "classify"},
                    "triple": TRIPLE_SCHEMA,
                    "value": {
                        "type": "object",
                        "properties": {"labels": _NAMES, "flags": _NAMES},
                        "required": ["labels", "flags"],
                    },
                },
                "required": ["triple"],
            },
            {
                "properties": {
                    "kind": {"const": "product"},
                    "value": {
                        "type": "object",
                        "properties": {
                            "factors": {"type": "array", "items": SET_SCHEMA},
                            "tuples": {
                                "type": "array",
                                "items": {
                                    "type": "object",
                                    "properties": {
                                        "elements": _NAMES,
                                        "triples": {"type": "array", "items": TRIPLE_SCHEMA},
                                    },
                                    "required": ["elements", "triples"],
                                },
                            },
                        },
                        "required": ["factors", "tuples"],
                    },
                }
            },
            {
                "properties": {
                    "kind": {"const": "relation"},
                    "value": {
                        "type": "object",
                        "properties": {
                            "domains": {"type": "array", "items": _NAMES},
                            "tuples": {
                                "type": "array",
                                "items": {
                                    "type": "object",
                                    "properties": {"elements": _NAMES, "triple": TRIPLE_SCHEMA},
                                    "required": ["elements", "triple"],
                                },
                            },
                        },
                        "required": ["domains", "tuples"],
                    },
                }
            },
        ],
    },
}


def value_to_json(v: NonStdValue) -> dict[str, Decimal]:
    return {"std": v.std, "coeff": v.coeff}


def value_from_json(obj: dict[str, Any]) -> NonStdValue:
    return NonStdValue(_number(obj["std"]), _number(obj["coeff"]))


def _number(x: Any) -> Decimal:
    if isinstance(x, bool) or not isinstance(x, (int, float, Decimal)):
        raise ValueError(f"expected a JSON number, got {x!r}")
    return x if isinstance(x, Decimal) else Decimal(repr(x))


def _component_to_json(c: IntervalUnion) -> list[list[dict[str, Decimal]]]:
    return [[value_to_json(p.lo), value_to_json(p.hi)] for p in c.parts]


def _component_from_json(obj: list) -> IntervalUnion:
    return IntervalUnion(NsInterval(value_from_json(lo), value_from_json(hi)) for lo, hi in obj)


def triple_to_json(x: NeutroTriple) -> dict[str, Any]:
    return {"T": _component_to_json(x.T), "I": _component_to_json(x.I), "F": _component_to_json(x.F)}


def triple_from_json(obj: dict[str, Any]) -> NeutroTriple:
    return NeutroTriple(
        _component_from_json(obj["T"]),
        _component_from_json(obj["I"]),
        _component_from_json(obj["F"]),
    )


def set_to_json(s: NeutroSet) -> dict[str, Any]:
    return {
        "universe": list(s.universe),
        "membership": {name: triple_to_json(t) for name, t in s.membership.items()},
    }


def set_from_json(obj: dict[str, Any]) -> NeutroSet:
    return NeutroSet(
        tuple(obj["universe"]),
        {name: triple_from_json(t) for name, t in obj["membership"].items()},
    )


def relation_to_json(r: NeutroRelation) -> dict[str, Any]:
    return {
        "domains": [list(d) for d in r.domains],
        "tuples": [
            {"elements": list(key), "triple": triple_to_json(t)} for key, t in r.tuples.items()
        ],
    }


def dumps(obj: Any, indent: int | None = None) -> str:
    """Serialize like :func:`json.dumps`, writing Decimals as exact JSON numbers."""
    return _encode(obj, indent, 0)


def _encode(o: Any, indent: int | None, level: int) -> str:
    if isinstance(o, Decimal):
        if not o.is_finite():
            raise ValueError("non-finite number")
        return format_decimal(o)
    if o is None or isinstance(o, (bool, int, float, str)):
        return json.dumps(o)
    if isinstance(o, dict):
        items = [f"{json.dumps(str(k))}: {_encode(v, indent, level + 1)}" for k, v in o.items()]
        return _wrap("{", "}", items, indent, level)
    if isinstance(o, (list, tuple)):
        items = [_encode(v, indent, level + 1) for v in o]
        return _wrap("[", "]", items, indent, level)
    raise TypeError(f"cannot serialize {type(o).__name__}")


def _wrap(open_: str, close: str, items: list[str], indent: int | None, level: int) -> str:
    if not items:
        return open_ + close
    if indent is None:
        return open_ + ", ".join(items) + close
    pad = " " * (indent * (level + 1))
    return open_ + "\n" + ",\n".join(pad + item for item in items) + "\n" + " " * (indent * level) + close


def loads(text: str) -> Any:
    """Parse JSON with fractional numbers as exact Decimals (integers stay int)."""
    return json.loads(text, parse_float=Decimal)
