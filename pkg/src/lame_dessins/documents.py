"""Dessin documents (JSON) and graph exports.

Document layout::

    {
      "degree": 9,
      "sigma_black": [[1, 2], [3, 4], ...],     # disjoint cycles, fixed points omitted
      "sigma_white": [[1, 3, 5], ...],
      "sigma_face":  [[...], ...],              # optional, checked when present
      "marks": {"0": {"kind": "black", "cycle": [7]}, ...}   # optional
    }

Darts are 1-based everywhere in documents.
"""

from __future__ import annotations

import json

from .hypermap import (
    KINDS,
    LABELS,
    Dessin,
    Feature,
    MarkedDessin,
    NotAPermutation,
    perm_cycles,
    perm_from_cycles,
)


class DocumentError(ValueError):
    pass


def _cycles(p) -> list[list[int]]:
    return [list(c) for c in perm_cycles(p, singletons=False)]


def to_document(obj) -> dict:
    m = obj if isinstance(obj, MarkedDessin) else None
    d = m.dessin if m else obj
    doc = {
        "degree": d.degree,
        "sigma_black": _cycles(d.black),
        "sigma_white": _cycles(d.white),
        "sigma_face": _cycles(d.face),
    }
    if m is not None:
        doc["marks"] = {lab: {"kind": f.kind, "cycle": list(f.cycle)} for lab, f in m.marks}
    return doc


def dumps(obj) -> str:
    return json.dumps(to_document(obj), indent=2) + "\n"


def _cycle_list(doc, key, degree):
    raw = doc.get(key)
    if not isinstance(raw, list) or not all(isinstance(c, list) for c in raw):
        raise DocumentError(f"{key} must be a list of cycles (lists of darts)")
    for c in raw:
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in c):
            raise DocumentError(f"{key} contains a non-integer dart")
    try:
        return perm_from_cycles(raw, degree)
    except NotAPermutation as exc:
        raise DocumentError(f"{key}: {exc}") from None


def raw_permutations(doc: dict):
    """Parse without building a Dessin: ``(degree, black, white, face-or-None)``."""
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    degree = doc.get("degree")
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
        raise DocumentError("degree must be a positive integer")
    black = _cycle_list(doc, "sigma_black", degree)
    white = _cycle_list(doc, "sigma_white", degree)
    face = _cycle_list(doc, "sigma_face", degree) if "sigma_face" in doc else None
    return degree, black, white, face


def parse_marks(doc: dict):
    marks = doc.get("marks")
    if marks is None:
        return None
    if not isinstance(marks, dict):
        raise DocumentError("marks must be an object")
    out = {}
    for lab, entry in marks.items():
        if lab not in LABELS:
            raise DocumentError(f"unknown mark label {lab!r}")
        if not isinstance(entry, dict) or entry.get("kind") not in KINDS:
            raise DocumentError(f"mark {lab!r} needs kind in {KINDS}")
        cyc = entry.get("cycle")
        if not isinstance(cyc, list) or not cyc or not all(isinstance(x, int) for x in cyc):
            raise DocumentError(f"mark {lab!r} needs a non-empty integer cycle")
        out[lab] = Feature(entry["kind"], tuple(cyc))
    return out


def from_document(doc: dict):
    """Dessin or MarkedDessin from a parsed document."""
    _, black, white, _ = raw_permutations(doc)
    d = Dessin(black, white)
    marks = parse_marks(doc)
    return d if marks is None else MarkedDessin(d, marks)


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from None
    return from_document(doc)


def read(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def write(obj, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))


# -- graph exports ----------------------------------------------------------

def _split(obj):
    if isinstance(obj, MarkedDessin):
        return obj.dessin, {(f.kind, f.cycle): lab for lab, f in obj.marks}
    return obj, {}


def graph_data(obj) -> dict:
    """Bipartite graph: one node per black/white cycle, one edge per dart."""
    d, marked = _split(obj)
    nodes, owner = [], {}
    for kind, prefix in (("black", "b"), ("white", "w")):
        for i, cyc in enumerate(perm_cycles(d.perm(kind)), 1):
            name = f"{prefix}{i}"
            node = {"id": name, "kind": kind, "darts": list(cyc)}
            if (kind, cyc) in marked:
                node["mark"] = marked[(kind, cyc)]
            nodes.append(node)
            for x in cyc:
                owner[kind, x] = name
    edges = [{"dart": x, "black": owner["black", x], "white": owner["white", x]}
             for x in range(1, d.degree + 1)]
    faces = []
    for cyc in perm_cycles(d.face):
        face = {"darts": list(cyc)}
        if ("face", cyc) in marked:
            face["mark"] = marked[("face", cyc)]
        faces.append(face)
    return {"degree": d.degree, "nodes": nodes, "edges": edges, "faces": faces}


def to_json_graph(obj) -> str:
    return json.dumps(graph_data(obj), indent=2) + "\n"


def to_dot(obj) -> str:
    g = graph_data(obj)
    out = ["graph dessin {", "  node [label=\"\", width=0.18, height=0.18];"]
    for node in g["nodes"]:
        style = ("shape=circle, style=filled, fillcolor=black" if node["kind"] == "black"
                 else "shape=circle, style=solid, fillcolor=white")
        attrs = style
        if "mark" in node:
            attrs += f", xlabel=\"{node['mark']}\""
        out.append(f"  {node['id']} [{attrs}];")
    for e in g["edges"]:
        out.append(f"  {e['black']} -- {e['white']} [label=\"{e['dart']}\"];")
    for face in g["faces"]:
        if "mark" in face:
            darts = " ".join(str(x) for x in face["darts"])
            out.append(f"  // face ({darts}) marked {face['mark']}")
    out.append("}")
    return "\n".join(out) + "\n"
