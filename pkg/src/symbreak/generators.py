"""Base graphs, point-attaching compositions and the named chemical families.

Vertex numbering is part of the public contract, so witnesses stay stable:

* ``cycle k``: ``i ~ (i+1) mod k``.  ``path n``: ``i ~ i+1``.  ``star n``
  (K_{1,n}): centre 0, leaves ``1..n``.  ``complete n``: all pairs.
* Compositions keep the first part's numbering; every later part's
  vertices that are not identified with an existing vertex are appended
  in ascending order of their own index, part after part.  ``circuit``
  puts the cycle ``0..k-1`` first.  ``link`` is a plain disjoint union
  with offsets.
* ``q_graph m,n``: hubs ``0..m-1`` form K_m; hub ``i`` carries outer
  vertices ``m + i(n-1) + j`` for ``j < n-1`` (roles ``hub:i``, ``outer:i:j``).
* ``dutch n,k``: centre 0; blade ``i`` is the cycle
  ``0, 1+i(k-1), ..., (i+1)(k-1), 0``.
* ``spiro q,h,k`` / ``poly q,h,k``: chain / link of ``k`` copies of C_q with
  contacts ``x = 0`` and ``y = h`` in each copy (distance ``h`` along the
  shorter arc, hence ``h <= q // 2``).
* ``nanostar k``: bouquet of three copies of ``G_k`` at their roots; the
  merged root is role ``center``.  See :func:`nanostar_base_graphs`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence, Union

from .errors import BadContacts, BadParams, BadRole, IndexOutOfRange, UnknownFamily
from .graph import Graph

Selector = Union[int, str]

BASE_KINDS = ("complete", "cycle", "path", "star")
COMPOSITION_KINDS = ("bouquet", "circuit", "chain", "link", "point_attach")
FAMILY_KINDS = BASE_KINDS + ("q_graph", "dutch", "friendship", "spiro", "poly", "nanostar") + COMPOSITION_KINDS


@dataclass(frozen=True)
class Part:
    """One child of a composition: a sub-spec and its contact selectors."""

    spec: "FamilySpec"
    x: Selector = 0
    y: Selector | None = None


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple = ()
    parts: tuple = ()
    # optional base graphs, e.g. {"F": Graph, "G1": Graph} for nanostar
    graphs: Mapping[str, Graph] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        object.__setattr__(self, "parts", tuple(self.parts))

    @property
    def key(self) -> str:
        if self.parts:
            return f"{self.kind}({','.join(p.spec.key for p in self.parts)})"
        return f"{self.kind}({','.join(map(str, self.params))})"


def resolve(g: Graph, sel: Selector) -> int:
    """Turn an index or role name into a vertex index of ``g``."""
    if isinstance(sel, str):
        return g.role(sel)
    if not 0 <= sel < g.n:
        raise IndexOutOfRange(f"vertex {sel} outside 0..{g.n - 1}")
    return int(sel)


# -- base graphs ----------------------------------------------------------

def complete(n: int) -> Graph:
    if n < 1:
        raise BadParams(f"K_n needs n >= 1, got {n}")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise BadParams(f"C_k needs k >= 3, got {k}")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def path(n: int) -> Graph:
    if n < 1:
        raise BadParams(f"P_n needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    if n < 1:
        raise BadParams(f"K_1,n needs n >= 1, got {n}")
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)], {"center": 0})


def make_base(kind: str, *params: int) -> Graph:
    makers = {"complete": complete, "cycle": cycle, "path": path, "star": star}
    if kind not in makers:
        raise UnknownFamily(f"unknown base graph {kind!r}")
    if len(params) != 1:
        raise BadParams(f"{kind} takes one parameter, got {params}")
    return makers[kind](params[0])


# -- gluing ---------------------------------------------------------------

def _glue(parts: Sequence[Graph], identify: Mapping[tuple[int, int], tuple[int, int]], extra_edges=()):
    """Disjoint union of ``parts`` with vertices merged per ``identify``.

    ``identify[(i, v)] = (j, w)`` with ``j < i`` merges vertex ``v`` of part
    ``i`` into vertex ``w`` of the earlier part ``j``.  ``extra_edges`` are
    ``((i, v), (j, w))`` pairs.  Returns ``(n, edges, maps, roles)`` where
    ``maps[i][v]`` is the new index of vertex ``v`` of part ``i``.
    """
    maps: list[list[int]] = []
    count = 0
    for i, g in enumerate(parts):
        m = []
        for v in range(g.n):
            target = identify.get((i, v))
            if target is not None:
                j, w = target
                if j >= i:
                    raise ValueError("identification must point at an earlier part")
                m.append(maps[j][w])
            else:
                m.append(count)
                count += 1
        maps.append(m)
    edges = []
    roles = {}
    for i, g in enumerate(parts):
        m = maps[i]
        edges.extend((m[u], m[v]) for u, v in g.edges)
        for name, v in g.roles.items():
            roles[f"{i}/{name}"] = m[v]
    for (i, v), (j, w) in extra_edges:
        edges.append((maps[i][v], maps[j][w]))
    return count, edges, maps, roles


def point_attach(g1: Graph, v1: Selector, g2: Graph, v2: Selector) -> Graph:
    """Merge vertex ``v1`` of ``g1`` with vertex ``v2`` of ``g2``."""
    a, b = resolve(g1, v1), resolve(g2, v2)
    n, edges, maps, roles = _glue([g1, g2], {(1, b): (0, a)})
    roles["attach"] = a
    return Graph(n, edges, roles)


def _bouquet(parts):
    if len(parts) < 2:
        raise BadParams(f"a bouquet needs at least 2 parts, got {len(parts)}")
    graphs = [g for g, _ in parts]
    roots = [resolve(g, x) for g, x in parts]
    identify = {(i, roots[i]): (0, roots[0]) for i in range(1, len(parts))}
    n, edges, maps, roles = _glue(graphs, identify)
    roles["root"] = roots[0]
    return Graph(n, edges, roles), maps


def bouquet(parts: Sequence[tuple[Graph, Selector]]) -> Graph:
    """Identify the chosen root of every part into one vertex (role ``root``)."""
    return _bouquet(parts)[0]


def circuit(parts: Sequence[tuple[Graph, Selector]]) -> Graph:
    """Merge ``x_i`` of part ``i`` with vertex ``i`` of a cycle C_k, ``k = len(parts)``."""
    k = len(parts)
    if k < 3:
        raise BadParams(f"a circuit needs at least 3 parts, got {k}")
    graphs = [cycle(k)] + [g for g, _ in parts]
    identify = {(i + 1, resolve(g, x)): (0, i) for i, (g, x) in enumerate(parts)}
    n, edges, maps, raw = _glue(graphs, identify)
    roles = {f"cycle:{i}": i for i in range(k)}
    for name, v in raw.items():
        idx, rest = name.split("/", 1)
        if idx != "0":  # part numbering shifts down past the cycle
            roles[f"{int(idx) - 1}/{rest}"] = v
    return Graph(n, edges, roles)


def _contacts(parts, allow_equal):
    out = []
    for i, part in enumerate(parts):
        if len(part) != 3:
            raise BadContacts(f"part {i} needs (graph, x, y)")
        g, x, y = part
        try:
            xi, yi = resolve(g, x), resolve(g, y)
        except (IndexOutOfRange, BadRole) as exc:
            raise BadContacts(f"part {i}: {exc}") from None
        if xi == yi and not allow_equal:
            raise BadContacts(f"part {i}: contacts x and y coincide at vertex {xi}")
        out.append((g, xi, yi))
    if not out:
        raise BadContacts("at least one part is required")
    return out


def chain(parts: Sequence[tuple[Graph, Selector, Selector]]) -> Graph:
    """Identify ``y_i`` with ``x_{i+1}`` for consecutive parts."""
    parts = _contacts(parts, allow_equal=False)
    graphs = [g for g, _, _ in parts]
    identify = {(i, parts[i][1]): (i - 1, parts[i - 1][2]) for i in range(1, len(parts))}
    n, edges, maps, roles = _glue(graphs, identify)
    for i, (_, x, y) in enumerate(parts):
        roles[f"contact:{i}:x"] = maps[i][x]
        roles[f"contact:{i}:y"] = maps[i][y]
    return Graph(n, edges, roles)


def link(parts: Sequence[tuple[Graph, Selector, Selector]]) -> Graph:
    """Disjoint union plus a bridge edge ``y_i - x_{i+1}`` for consecutive parts."""
    parts = _contacts(parts, allow_equal=True)
    graphs = [g for g, _, _ in parts]
    bridges = [((i, parts[i][2]), (i + 1, parts[i + 1][1])) for i in range(len(parts) - 1)]
    n, edges, maps, roles = _glue(graphs, {}, bridges)
    for i, (_, x, y) in enumerate(parts):
        roles[f"contact:{i}:x"] = maps[i][x]
        roles[f"contact:{i}:y"] = maps[i][y]
    return Graph(n, edges, roles)


# -- named families ---------------------------------------------------------

def q_graph(m: int, n: int) -> Graph:
    """K_m with every hub identified with a vertex of its own K_n."""
    if m < 2 or n < 2:
        raise BadParams(f"Q(m,n) needs m >= 2 and n >= 2, got m={m}, n={n}")
    edges = [(u, v) for u in range(m) for v in range(u + 1, m)]
    roles = {}
    for i in range(m):
        roles[f"hub:{i}"] = i
        blade = [i] + [m + i * (n - 1) + j for j in range(n - 1)]
        for j in range(n - 1):
            roles[f"outer:{i}:{j}"] = blade[j + 1]
        edges.extend((a, b) for idx, a in enumerate(blade) for b in blade[idx + 1:])
    return Graph(m + m * (n - 1), edges, roles)


def dutch(n: int, k: int) -> Graph:
    """n copies of C_k sharing one vertex (the centre, index 0)."""
    if n < 2 or k < 3:
        raise BadParams(f"windmill needs n >= 2 and k >= 3, got n={n}, k={k}")
    g = bouquet([(cycle(k), 0)] * n)
    return Graph(g.n, g.edges, {"center": 0})


def friendship(n: int) -> Graph:
    return dutch(n, 3)


def _check_chem(q, h, k):
    if q < 3 or not 1 <= h <= q // 2 or k < 1:
        raise BadParams(f"need q >= 3, 1 <= h <= q//2, k >= 1; got q={q}, h={h}, k={k}")


def spiro(q: int, h: int, k: int) -> Graph:
    _check_chem(q, h, k)
    return chain([(cycle(q), 0, h)] * k)


def poly(q: int, h: int, k: int) -> Graph:
    _check_chem(q, h, k)
    return link([(cycle(q), 0, h)] * k)


def nanostar_base_graphs() -> tuple[Graph, Graph]:
    """Default ``(F, G1)``: reconstructed hexagon-based building blocks.

    ``F`` is C_6 with pendant vertices on two antipodal ring vertices,
    rooted at one pendant (role ``root``), the other pendant being role
    ``tip``.  ``G1`` is C_6 with a single pendant, rooted at that leaf.
    """
    f = Graph(8, [(i, (i + 1) % 6) for i in range(6)] + [(0, 6), (3, 7)], {"root": 6, "tip": 7})
    g1 = Graph(7, [(i, (i + 1) % 6) for i in range(6)] + [(0, 6)], {"root": 6})
    return f, g1


def nanostar_branch(k: int, f: Graph | None = None, g1: Graph | None = None) -> Graph:
    """The rooted dendrimer ``G_k``: bouquet of ``G_{k-1}``, ``G_{k-1}`` and ``F`` at their roots."""
    if k < 1:
        raise BadParams(f"nanostar needs k >= 1, got {k}")
    df, dg = nanostar_base_graphs()
    f = f or df
    g = g1 or dg
    for name, base in (("F", f), ("G1", g)):
        if "root" not in base.roles:
            raise BadParams(f"{name} must carry a 'root' role")
    g = Graph(g.n, g.edges, {"root": g.role("root")})
    for _ in range(k - 1):
        merged, maps = _bouquet([(g, "root"), (g, "root"), (f, "root")])
        if "tip" in f.roles:
            tip = maps[2][f.role("tip")]
        else:
            leaves = [v for v in range(merged.n) if merged.degree(v) == 1]
            if len(leaves) != 1:
                raise BadParams("F has no 'tip' role and the bouquet has no unique leaf to root at")
            tip = leaves[0]
        g = Graph(merged.n, merged.edges, {"root": tip})
    return g


def nanostar(k: int, f: Graph | None = None, g1: Graph | None = None) -> Graph:
    branch = nanostar_branch(k, f, g1)
    g, _ = _bouquet([(branch, "root")] * 3)
    return Graph(g.n, g.edges, {"center": g.role("root")})


def nanostar_order(k: int, f_order: int = 8, g1_order: int = 7) -> int:
    """|ND_k| from the recursion |G_k| = 2|G_{k-1}| + |F| - 2, |ND_k| = 3|G_k| - 2."""
    size = g1_order
    for _ in range(k - 1):
        size = 2 * size + f_order - 2
    return 3 * size - 2


# -- spec dispatch ------------------------------------------------------------

_ARITY = {
    "complete": 1, "cycle": 1, "path": 1, "star": 1, "q_graph": 2, "dutch": 2,
    "friendship": 1, "spiro": 3, "poly": 3, "nanostar": 1,
}


def family(spec: FamilySpec) -> Graph:
    """Build the graph described by ``spec``."""
    kind = spec.kind
    if kind not in FAMILY_KINDS:
        raise UnknownFamily(f"unknown family {kind!r}")
    if kind in _ARITY:
        if len(spec.params) != _ARITY[kind]:
            raise BadParams(f"{kind} takes {_ARITY[kind]} parameter(s), got {list(spec.params)}")
        p = spec.params
        if kind in BASE_KINDS:
            return make_base(kind, *p)
        if kind == "q_graph":
            return q_graph(*p)
        if kind == "dutch":
            return dutch(*p)
        if kind == "friendship":
            if p[0] < 2:
                raise BadParams(f"friendship graph needs n >= 2, got {p[0]}")
            return friendship(*p)
        if kind == "spiro":
            return spiro(*p)
        if kind == "poly":
            return poly(*p)
        return nanostar(p[0], spec.graphs.get("F"), spec.graphs.get("G1"))

    if not spec.parts:
        raise BadParams(f"{kind} needs at least one part")
    built = [(family(part.spec), part) for part in spec.parts]
    if kind == "point_attach":
        if len(built) != 2:
            raise BadParams("point_attach takes exactly two parts")
        (g1, p1), (g2, p2) = built
        return point_attach(g1, p1.x, g2, p2.x)
    if kind == "bouquet":
        return bouquet([(g, part.x) for g, part in built])
    if kind == "circuit":
        return circuit([(g, part.x) for g, part in built])
    pairs = [(g, part.x, part.y) for g, part in built]
    if any(part.y is None for _, part in built):
        raise BadContacts(f"{kind} parts need both x and y selectors")
    return chain(pairs) if kind == "chain" else link(pairs)
