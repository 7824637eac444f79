"""DOT, CSV and JSON renderings of an n-total graph."""

from __future__ import annotations

import csv
import io
import json
import math

from .graph import NTotalGraph


def _num(x):
    return "inf" if isinstance(x, float) and math.isinf(x) else x


def to_document(g: NTotalGraph) -> dict:
    return {
        "ring": str(g.ring),
        "n": g.n,
        "selector": g.selector.value,
        "vertices": [str(v) for v in g.vertices],
        "edges": [list(e) for e in g.edge_labels()],
        "signature": g.signature.labels(),
        "diameter": _num(g.diameter),
        "girth": _num(g.girth),
    }


def to_json(g: NTotalGraph) -> str:
    return json.dumps(to_document(g), indent=2) + "\n"


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: NTotalGraph) -> str:
    component = {}
    for idx, comp in enumerate(g.components()):
        for v in comp:
            component[v] = idx
    lines = [f"graph {_quote(g.name)} {{"]
    for v in g.vertices:
        lines.append(f"  {_quote(str(v))} [label={_quote(str(v))}, component={component[v]}];")
    for u, v in g.edge_labels():
        lines.append(f"  {_quote(u)} -- {_quote(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_csv(g: NTotalGraph) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(g.edge_labels())
    return buf.getvalue()


FORMATS = {"dot": to_dot, "json": to_json, "csv": to_csv}
