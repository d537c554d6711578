"""Graph documents: JSON persistence, DOT and CSV export.

One file holds one graph.  Membership values are written as decimal
strings when the denominator is a power of ten ("0.13") and as "p/q"
otherwise ("7/15"); both forms parse back to the identical rational, so
round-trips are lossless.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .construct import MagicLabeling
from .graph import FuzzyGraph, GraphError, build_graph
from .labels import LabelOutOfRange, format_label, parse_label

FORMAT_VERSION = 1


class ParseError(ValueError):
    def __init__(self, message, field=None):
        self.field = field
        where = f" (field {field})" if field else ""
        super().__init__(f"{message}{where}")


class ValidationError(ValueError):
    """Document parsed but the graph it describes is invalid; wraps the
    underlying build_graph error."""

    def __init__(self, cause):
        self.cause = cause
        super().__init__(str(cause))


def to_document(g: FuzzyGraph | MagicLabeling) -> dict:
    meta = None
    if isinstance(g, MagicLabeling):
        meta = {
            "unit": f"{g.unit.numerator}/{g.unit.denominator}",
            "magic_constant": format_label(g.magic_constant),
        }
        g = g.graph
    doc = {
        "format_version": FORMAT_VERSION,
        "vertices": [
            {"id": v, "alpha": format_label(g.alpha[v])} for v in g.vertices
        ],
        "edges": [
            {"u": u, "v": v, "beta": format_label(g.beta[(u, v)])}
            for (u, v) in g.edges
        ],
    }
    if meta:
        doc["meta"] = meta
    return doc


def to_json(g: FuzzyGraph | MagicLabeling, meta: dict | None = None) -> str:
    doc = to_document(g)
    if meta:
        doc.setdefault("meta", {}).update(meta)
    return json.dumps(doc, indent=2) + "\n"


def _vertex_id(raw, field):
    if isinstance(raw, bool) or not isinstance(raw, (int, str)):
        raise ParseError(f"vertex id must be an integer, got {raw!r}", field)
    try:
        value = int(raw)
    except ValueError:
        raise ParseError(f"vertex id must be an integer, got {raw!r}", field) from None
    if value < 0:
        raise ParseError(f"vertex id must be non-negative, got {value}", field)
    return value


def from_document(doc: dict) -> FuzzyGraph:
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {version!r}", "format_version")
    try:
        vertex_labels = [
            (_vertex_id(entry["id"], "vertices.id"), parse_label(entry["alpha"]))
            for entry in doc.get("vertices", [])
        ]
        edge_labels = [
            (
                _vertex_id(entry["u"], "edges.u"),
                _vertex_id(entry["v"], "edges.v"),
                parse_label(entry["beta"]),
            )
            for entry in doc.get("edges", [])
        ]
    except KeyError as exc:
        raise ParseError(f"missing field {exc.args[0]!r}") from None
    except (TypeError, ZeroDivisionError) as exc:
        raise ParseError(str(exc)) from None
    except LabelOutOfRange as exc:
        raise ValidationError(exc) from exc
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    try:
        return build_graph(vertex_labels, edge_labels)
    except GraphError as exc:
        raise ValidationError(exc) from exc


def from_json(text: str) -> FuzzyGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}: {exc.msg}") from None
    return from_document(doc)


def document_meta(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}: {exc.msg}") from None
    meta = doc.get("meta", {}) if isinstance(doc, dict) else {}
    return meta if isinstance(meta, dict) else {}


def to_dot(g: FuzzyGraph | MagicLabeling) -> str:
    """Graphviz text with vertex labels "id: alpha" and edge labels "beta";
    everything sorted by id so output is deterministic."""
    if isinstance(g, MagicLabeling):
        g = g.graph
    lines = ["graph fuzzy {"]
    for v in sorted(g.vertices):
        lines.append(f'  {v} [label="{v}: {format_label(g.alpha[v])}"];')
    for u, v in sorted(g.edges):
        lines.append(f'  {u} -- {v} [label="{format_label(g.beta[(u, v)])}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_csv(g: FuzzyGraph | MagicLabeling) -> str:
    """Flat CSV with one row per vertex and per edge."""
    if isinstance(g, MagicLabeling):
        g = g.graph
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["kind", "id", "u", "v", "label"])
    for v in sorted(g.vertices):
        writer.writerow(["vertex", v, "", "", format_label(g.alpha[v])])
    for u, v in sorted(g.edges):
        writer.writerow(["edge", "", u, v, format_label(g.beta[(u, v)])])
    return out.getvalue()
