"""Graph and family-spec serialization: edge list, JSON, DOT (write-only)."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import ParseError, SymbreakError
from .generators import FamilySpec, Part
from .graph import Graph


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    """``#`` comment lines, then ``n m``, then ``m`` lines ``u v``."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: expected two integers, got {raw!r}") from None
    if not rows:
        raise ParseError("missing 'n m' header")
    (n, m), edges = rows[0], rows[1:]
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    try:
        return Graph(n, edges)
    except SymbreakError as exc:
        raise ParseError(str(exc)) from exc


def graph_to_obj(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges], "roles": dict(sorted(g.roles.items()))}


def to_json(g: Graph) -> str:
    return json.dumps(graph_to_obj(g), sort_keys=True) + "\n"


def graph_from_obj(obj: Any) -> Graph:
    if not isinstance(obj, dict) or "n" not in obj:
        raise ParseError("graph JSON must be an object with at least 'n'")
    try:
        n = int(obj["n"])
        edges = [tuple(int(x) for x in e) for e in obj.get("edges", [])]
        roles = {str(k): int(v) for k, v in obj.get("roles", {}).items()}
    except (TypeError, ValueError, AttributeError) as exc:
        raise ParseError(f"malformed graph JSON: {exc}") from exc
    if any(len(e) != 2 for e in edges):
        raise ParseError("every edge must be a pair")
    try:
        return Graph(n, edges, roles)
    except SymbreakError as exc:
        raise ParseError(str(exc)) from exc


def parse_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return graph_from_obj(obj)


def to_dot(g: Graph, name: str = "G") -> str:
    out = [f"graph {name} {{"]
    role_of = {}
    for role, v in sorted(g.roles.items()):
        role_of.setdefault(v, []).append(role)
    for v in range(g.n):
        if v in role_of:
            out.append(f'  {v} [label="{v}\\n{",".join(role_of[v])}"];')
        else:
            out.append(f"  {v};")
    out += [f"  {u} -- {v};" for u, v in g.edges]
    out.append("}")
    return "\n".join(out) + "\n"


FORMATS = {"edgelist": to_edgelist, "json": to_json, "dot": to_dot}


def dumps(g: Graph, fmt: str) -> str:
    if fmt not in FORMATS:
        raise ParseError(f"unknown output format {fmt!r}")
    return FORMATS[fmt](g)


def loads(text: str) -> Graph:
    """JSON if the text starts with ``{``, otherwise edge list."""
    return parse_json(text) if text.lstrip().startswith("{") else parse_edgelist(text)


def load_graph(path: str | Path) -> Graph:
    return loads(Path(path).read_text())


# -- family specs --------------------------------------------------------------------

def spec_from_obj(obj: Any) -> FamilySpec:
    """``{"kind", "params", "parts": [{<spec>, "x", "y"}], "graphs": {"F": <graph>, "G1": <graph>}}``."""
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ParseError("family spec must be an object with a 'kind'")
    try:
        params = tuple(int(p) for p in obj.get("params", []))
    except (TypeError, ValueError) as exc:
        raise ParseError(f"params must be integers: {exc}") from exc
    parts = []
    for raw in obj.get("parts", []):
        if not isinstance(raw, dict):
            raise ParseError("each part must be an object")
        sub = spec_from_obj({k: v for k, v in raw.items() if k not in ("x", "y")})
        parts.append(Part(sub, _selector(raw.get("x", 0)), _selector(raw.get("y"))))
    graphs = {str(k): graph_from_obj(v) for k, v in obj.get("graphs", {}).items()}
    return FamilySpec(str(obj["kind"]), params, tuple(parts), graphs)


def _selector(sel):
    if sel is None or isinstance(sel, str):
        return sel
    if isinstance(sel, bool) or not isinstance(sel, int):
        raise ParseError(f"selector must be an index or role name, got {sel!r}")
    return sel


def spec_to_obj(spec: FamilySpec) -> dict:
    obj: dict = {"kind": spec.kind, "params": list(spec.params)}
    if spec.parts:
        obj["parts"] = []
        for part in spec.parts:
            sub = spec_to_obj(part.spec)
            sub["x"] = part.x
            if part.y is not None:
                sub["y"] = part.y
            obj["parts"].append(sub)
    if spec.graphs:
        obj["graphs"] = {k: graph_to_obj(v) for k, v in sorted(spec.graphs.items())}
    return obj


def load_spec(path: str | Path) -> FamilySpec:
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from exc
    return spec_from_obj(obj)
