"""Canonical JSON, CSV and DOT output for records, orbits and posets."""
from __future__ import annotations

import csv
import io
import json
from typing import Any, Iterable, Sequence

import networkx as nx

from .conjclass import ClassRecord
from .labels import ClassLabel
from .maps import ExceptionalOrbit, MoveEdge
from .orbits import JordanType, OrbitRecord, closure_leq
from .skeleta import ReductionProfile


def to_dict(obj: Any) -> Any:
    """Plain JSON-ready structure; integers and strings only."""
    if isinstance(obj, ClassLabel):
        d = {"kind": obj.kind, "text": str(obj)}
        if obj.kind == "carter":
            d["name"] = obj.name
        else:
            d["alpha"] = list(obj.alpha)
            if obj.kind == "bipartition":
                d["beta"] = list(obj.beta)
                d["tag"] = obj.tag
        return d
    if isinstance(obj, JordanType):
        return {"kind": "jordan", "type": obj.algebra_type, "ambient_dim": obj.ambient_dim,
                "parts": list(obj.parts), "tag": obj.very_even_tag, "text": str(obj)}
    if isinstance(obj, ExceptionalOrbit):
        return {"kind": "exceptional_orbit", "label": obj.label, "dim_orbit": obj.dim_orbit,
                "d_O": obj.d_O, "text": obj.label}
    if isinstance(obj, OrbitRecord):
        return {"kind": "orbit_record", "jordan": to_dict(obj.jordan), "dim_orbit": obj.dim_orbit,
                "d_O": obj.d_O}
    if isinstance(obj, ClassRecord):
        return {"kind": "class_record", "label": to_dict(obj.label), "order": obj.order,
                "fixed_dim": obj.fixed_dim, "delta": obj.delta, "min_length": obj.min_length,
                "class_size": obj.class_size, "word": list(obj.word)}
    if isinstance(obj, MoveEdge):
        return {"kind": "move", "from": to_dict(obj.from_label), "to": to_dict(obj.to_label),
                "removed_part": obj.removed_part}
    if isinstance(obj, ReductionProfile):
        return {"kind": "profile", "ell": {str(k): v for k, v in obj.ell.items()},
                "r": {str(k): v for k, v in obj.r.items()}}
    if isinstance(obj, dict):
        return {str(k): to_dict(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_dict(x) for x in obj]
    if isinstance(obj, float):
        raise TypeError("floating point values are not exported")
    return obj


def from_dict(d: Any) -> Any:
    if isinstance(d, list):
        return [from_dict(x) for x in d]
    if not isinstance(d, dict) or "kind" not in d:
        return d
    kind = d["kind"]
    if kind == "cycle":
        return ClassLabel.cycle(d["alpha"])
    if kind == "bipartition":
        return ClassLabel.bipartition(d["alpha"], d["beta"], d["tag"])
    if kind == "carter":
        return ClassLabel("carter", name=d["name"])
    if kind == "jordan":
        return JordanType(tuple(d["parts"]), d["type"], d["ambient_dim"], d["tag"])
    if kind == "exceptional_orbit":
        return ExceptionalOrbit(d["label"], d["dim_orbit"], d["d_O"])
    if kind == "orbit_record":
        return OrbitRecord(from_dict(d["jordan"]), d["dim_orbit"], d["d_O"])
    if kind == "class_record":
        return ClassRecord(from_dict(d["label"]), d["order"], d["fixed_dim"], d["delta"],
                           d["min_length"], d["class_size"], tuple(d["word"]))
    if kind == "move":
        return MoveEdge(from_dict(d["from"]), from_dict(d["to"]), d["removed_part"])
    if kind == "profile":
        return ReductionProfile({int(k): v for k, v in d["ell"].items()},
                                {int(k): v for k, v in d["r"].items()})
    raise ValueError(f"unknown record kind {kind!r}")


def dumps(obj: Any) -> str:
    """Canonical serialization: sorted keys, fixed separators, UTF-8 text."""
    return json.dumps(to_dict(obj), sort_keys=True, ensure_ascii=False, indent=2)


def loads(text: str) -> Any:
    return from_dict(json.loads(text))


def to_csv(rows: Sequence[dict], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: ("" if row.get(k) is None else row.get(k)) for k in columns})
    return buf.getvalue()


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def render_poset_dot(nodes: Sequence[str], edges: Iterable[tuple[str, str]], name: str = "poset") -> str:
    """DOT digraph of the Hasse diagram of the relation generated by ``edges`` (small -> large)."""
    g = nx.DiGraph()
    g.add_nodes_from(nodes)
    g.add_edges_from(edges)
    if not nx.is_directed_acyclic_graph(g):
        raise ValueError("relation has a cycle")
    hasse = nx.transitive_reduction(g)
    position = {n: i for i, n in enumerate(nodes)}
    lines = [f"digraph {_quote(name)} {{"]
    for n in nodes:
        lines.append(f"  {_quote(n)};")
    for a, b in sorted(hasse.edges(), key=lambda e: (position[e[0]], position[e[1]])):
        lines.append(f"  {_quote(a)} -> {_quote(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def orbit_poset(orbits: Sequence[JordanType]) -> tuple[list[str], list[tuple[str, str]]]:
    """Nodes (smallest orbit first) and closure relations between classical orbits."""
    ordered = sorted(orbits, key=lambda o: (-len(o.parts), o.parts, o.very_even_tag or ""))
    names = [str(o) for o in ordered]
    edges = [(str(a), str(b)) for a in ordered for b in ordered
             if a != b and closure_leq(a, b)]
    return names, edges
