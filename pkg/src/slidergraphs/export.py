"""Deterministic DOT and JSON serialization of digraphs."""

from __future__ import annotations

import json

from .digraph import Digraph


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: Digraph) -> str:
    lines = [f"digraph {_quote(g.name)} {{"]
    lines += [f"  {_quote(v)};" for v in g.vertices]
    for s, d, lab in g.arrow_keys():
        attr = f" [label={_quote(lab)}]" if lab is not None else ""
        lines.append(f"  {_quote(s)} -> {_quote(d)}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_dict(g: Digraph) -> dict:
    return {
        "name": g.name,
        "vertices": list(g.vertices),
        "arrows": [{"src": s, "dst": d, "label": lab} for s, d, lab in g.arrow_keys()],
    }


def export_json(g: Digraph) -> str:
    return json.dumps(graph_to_dict(g), indent=2, ensure_ascii=False) + "\n"


def parse_json(text: str) -> Digraph:
    data = json.loads(text)
    arrows = [(a["src"], a["dst"], a.get("label")) for a in data["arrows"]]
    return Digraph.from_keys(data["vertices"], arrows, data.get("name", "g"))


def export(g: Digraph, fmt: str) -> str:
    if fmt == "dot":
        return export_dot(g)
    if fmt == "json":
        return export_json(g)
    raise ValueError(f"unknown format {fmt!r}")
