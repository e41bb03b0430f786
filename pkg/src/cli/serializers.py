"""
Stable JSON and table output for the command line.

Every JSON document carries the schema tag, keys are sorted and floats are
written with repr precision, so the same inputs give byte-identical output.
"""
from __future__ import annotations

import json
from typing import Any, Dict, List, Mapping, Sequence

import pandas as pd

from config import settings
from src.analytics.appell import AppellSeries, TaylorSeries, series_from_json, series_to_json
from src.core.exceptions import DomainError
from src.core.multivector import Multivector, multivector_from_json, multivector_to_json
from src.core.polynomial import CliffordPolynomial, polynomial_from_json, polynomial_to_json

COLLECTION_KINDS = ("appell", "polyappell", "monomial-map")


def dumps(payload: Mapping[str, Any]) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def document(kind: str, **fields: Any) -> Dict[str, Any]:
    """A top-level record tagged with the schema and its kind."""
    return {"schema": settings.SCHEMA_VERSION, "kind": kind, **fields}


def encode(value: Any) -> Dict[str, Any]:
    """Tagged JSON form of a multivector, polynomial or series."""
    if isinstance(value, Multivector):
        return {"type": "multivector", "value": multivector_to_json(value)}
    if isinstance(value, CliffordPolynomial):
        return {"type": "polynomial", "value": polynomial_to_json(value)}
    if isinstance(value, (TaylorSeries, AppellSeries)):
        return {"type": "series", "value": series_to_json(value)}
    raise DomainError(f"Cannot serialize {type(value).__name__}")


def decode(data: Mapping[str, Any]) -> Any:
    try:
        tag, value = data["type"], data["value"]
    except (KeyError, TypeError) as exc:
        raise DomainError(f"Malformed value record: {exc}") from exc
    if tag == "multivector":
        return multivector_from_json(value)
    if tag == "polynomial":
        return polynomial_from_json(value)
    if tag == "series":
        return series_from_json(value)
    raise DomainError(f"Unknown value type {tag!r}")


def parse_document(data: Mapping[str, Any]) -> Dict[str, Any]:
    """
    Rebuild a document written by this tool, decoding every value record.

    Items of a collection keep their index fields; the decoded object replaces
    the serialized one so that re-encoding gives the canonical form.
    """
    if not isinstance(data, Mapping):
        raise DomainError("Expected a JSON object at top level")
    schema = data.get("schema")
    if schema != settings.SCHEMA_VERSION:
        raise DomainError(f"Unsupported schema {schema!r}, expected {settings.SCHEMA_VERSION!r}")
    kind = data.get("kind")
    extra = {k: v for k, v in data.items() if k not in ("schema", "kind", "items", "value")}
    if kind == "value":
        return {"kind": kind, "value": decode(data.get("value", {})), **extra}
    if kind in COLLECTION_KINDS:
        items = []
        for item in data.get("items", []):
            fields = {k: v for k, v in item.items() if k != "value"}
            items.append({**fields, "value": decode(item.get("value", {}))})
        return {"kind": kind, "items": items, **extra}
    raise DomainError(f"Unknown document kind {kind!r}")


def render_document(parsed: Mapping[str, Any]) -> Dict[str, Any]:
    """Inverse of :func:`parse_document`."""
    kind = parsed["kind"]
    extra = {k: v for k, v in parsed.items() if k not in ("kind", "items", "value")}
    if kind == "value":
        return document(kind, value=encode(parsed["value"]), **extra)
    items = [
        {**{k: v for k, v in item.items() if k != "value"}, "value": encode(item["value"])}
        for item in parsed["items"]
    ]
    return document(kind, items=items, **extra)


def parse_point(text: str, n: int) -> List[float]:
    """'0.5,0.1,0.2,0.3' -> [x0, x1, ..., xn]."""
    try:
        values = [float(part) for part in text.split(",")]
    except ValueError as exc:
        raise DomainError(f"Cannot parse point {text!r}: {exc}") from exc
    if len(values) != n + 1:
        raise DomainError(f"Point needs {n + 1} coordinates for n={n}, got {len(values)}")
    return values


def render_frame(frame: pd.DataFrame, output_format: str) -> str:
    if output_format == "csv":
        return frame.to_csv(index=False)
    return frame.to_string(index=False)


def render_items_text(items: Sequence[Mapping[str, Any]], keys: Sequence[str]) -> str:
    lines = []
    for item in items:
        label = " ".join(f"{key}={item[key]}" for key in keys)
        lines.append(f"{label}: {item['value']}")
    return "\n".join(lines)
