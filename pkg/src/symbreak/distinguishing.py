"""Exact distinguishing number D(G) and distinguishing index D'(G).

The solver tries r = 1, 2, ... and runs a depth-first search over labelings
of the vertices (or edges).  Three pruning rules keep it small:

* canonical colour order: a label may be used only if every smaller label
  already appears, which removes the r! relabelings of each class pattern;
* doomed branches: if some nontrivial automorphism preserves every label
  assigned so far and fixes each still-unlabeled item, no completion can
  break it, so the branch is cut;
* lex-leader: a partial labeling is dropped once its image under some known
  automorphism is lexicographically smaller in search order, since every
  orbit of labelings keeps its lex-least member.  ``lex=False`` disables it.

Two engines evaluate the pruning tests.  ``elements`` filters an explicit
list of group elements (the surviving set); a branch succeeds as soon as
only the identity survives.  ``refine`` never lists the group and asks the
partition-refinement backend instead, which is what makes windmills with
millions of automorphisms tractable.  ``auto`` picks ``elements`` only when
the caller passes a small exact group.
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass

import numpy as np

from . import refine
from .automorphism import AutGroup, enumerate_automorphisms
from .errors import CappedGroup, LengthMismatch, NoEdges, RMaxExceeded, SearchTimeout
from .graph import Graph, induced_edge_perm, labels_of

log = logging.getLogger(__name__)

ELEMENTS_LIMIT = 5_000


@dataclass(frozen=True)
class DistResult:
    """Minimal label count with a witness labeling that achieves it.

    ``checked_r_below`` records that every r below ``value`` was searched
    exhaustively without success.  ``kernel_nontrivial`` (edge version only)
    flags automorphisms that move vertices but fix every edge, which no
    edge labeling can break (K2 is the usual culprit).
    """

    value: int
    witness: tuple
    kind: str
    checked_r_below: bool = True
    kernel_nontrivial: bool = False
    engine: str = ""
    nodes: int = 0

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "witness": list(self.witness),
            "kind": self.kind,
            "checked_r_below": self.checked_r_below,
            "kernel_nontrivial": self.kernel_nontrivial,
            "engine": self.engine,
            "nodes": self.nodes,
        }


# -- predicates on complete labelings --------------------------------------------

def _elements_array(auts: AutGroup) -> np.ndarray:
    auts.require_exact()
    return np.asarray(auts.elements, dtype=np.int64).reshape(len(auts.elements), -1)


def edge_perm_array(g: Graph, auts: AutGroup) -> np.ndarray:
    """Distinct induced edge permutations of the group, one row each, identity first."""
    perms = sorted({induced_edge_perm(g, p) for p in auts.elements})
    return np.asarray(perms, dtype=np.int64).reshape(len(perms), g.m)


def is_distinguishing_vertex(g: Graph, auts: AutGroup, labeling) -> bool:
    """True iff no non-identity automorphism preserves every vertex label."""
    labels = np.asarray(labels_of(labeling), dtype=np.int64)
    if len(labels) != g.n:
        raise LengthMismatch(f"labeling has {len(labels)} entries, graph has {g.n} vertices")
    arr = _elements_array(auts)
    if g.n == 0:
        return True
    preserved = (labels[arr] == labels).all(axis=1)
    return int(preserved.sum()) == 1


def is_distinguishing_edge(g: Graph, auts: AutGroup, labeling) -> bool:
    """True iff every automorphism preserving the edge labels fixes every edge.

    Automorphisms that move vertices while fixing all edges are ignored:
    no edge labeling can see them.
    """
    labels = np.asarray(labels_of(labeling), dtype=np.int64)
    if len(labels) != g.m:
        raise LengthMismatch(f"labeling has {len(labels)} entries, graph has {g.m} edges")
    auts.require_exact()
    if g.m == 0:
        return True
    arr = edge_perm_array(g, auts)
    preserved = (labels[arr] == labels).all(axis=1)
    return int(preserved.sum()) == 1


def _vertex_adj(g: Graph):
    return [sorted(a) for a in g.adj]


def _subdivision_adj(g: Graph):
    """Original vertices 0..n-1, then one vertex per edge at n + edge index."""
    adj = [[] for _ in range(g.n + g.m)]
    for i, (u, v) in enumerate(g.edges):
        adj[u].append(g.n + i)
        adj[v].append(g.n + i)
        adj[g.n + i] = [u, v]
    return adj


def preserving_automorphism(g: Graph, labeling):
    """A label-preserving automorphism that moves some vertex, or ``None`` (group-free check)."""
    labels = labels_of(labeling)
    if len(labels) != g.n:
        raise LengthMismatch(f"labeling has {len(labels)} entries, graph has {g.n} vertices")
    return refine.find_moving_automorphism(_vertex_adj(g), list(labels))


def preserving_edge_automorphism(g: Graph, labeling):
    """A label-preserving automorphism that moves some edge, or ``None`` (group-free check).

    The result acts on the subdivision graph: entries ``0..n-1`` are the
    vertex images, the rest are edge images shifted by ``n``.
    """
    labels = labels_of(labeling)
    if len(labels) != g.m:
        raise LengthMismatch(f"labeling has {len(labels)} entries, graph has {g.m} edges")
    colors = [0] * g.n + [int(x) for x in labels]
    return refine.find_moving_automorphism(_subdivision_adj(g), colors, range(g.n, g.n + g.m))


def edge_kernel_nontrivial(g: Graph) -> bool:
    """Whether some automorphism moves a vertex but fixes every edge."""
    colors = [0] * g.n + [1 + i for i in range(g.m)]
    return refine.find_moving_automorphism(_subdivision_adj(g), colors, range(g.n)) is not None


# -- search engines ----------------------------------------------------------------

class _ElementsEngine:
    """Surviving set as an explicit array of permutations of the labeled items."""

    name = "elements"

    def __init__(self, perms: np.ndarray, size: int):
        self.base = perms
        self.base_inv = np.argsort(perms, axis=1) if perms.size else perms
        self.size = size

    def reset(self):
        self.labels = np.zeros(self.size, dtype=np.int64)
        self.stack = [(self.base, self.base_inv)]
        self.unlabeled = np.ones(self.size, dtype=bool)

    def push(self, item, c):
        perms, inv = self.stack[-1]
        self.labels[item] = c
        self.unlabeled[item] = False
        a = self.labels[perms[:, item]]
        b = self.labels[inv[:, item]]
        keep = ((a == 0) | (a == c)) & ((b == 0) | (b == c))
        self.stack.append((perms[keep], inv[keep]))

    def pop(self, item):
        self.stack.pop()
        self.labels[item] = 0
        self.unlabeled[item] = True

    def solved(self):
        return len(self.stack[-1][0]) == 1

    def doomed(self):
        perms = self.stack[-1][0]
        if len(perms) == 1:
            return False
        free = np.flatnonzero(self.unlabeled)
        fixes = (perms[:, free] == free).all(axis=1)
        return int(fixes.sum()) > 1


class _RefineEngine:
    """Group-free: ask the refinement backend whether a doomed automorphism exists."""

    name = "refine"

    def __init__(self, adj, size: int, offset: int = 0, base_colors=None):
        self.adj = adj
        self.size = size
        self.offset = offset
        self.targets = range(offset, offset + size)
        self.base_colors = list(base_colors) if base_colors is not None else [0] * len(adj)

    def reset(self):
        self.labels = [0] * self.size

    def push(self, item, c):
        self.labels[item] = c

    def pop(self, item):
        self.labels[item] = 0

    def solved(self):
        return False

    def doomed(self):
        colors = list(self.base_colors)
        fresh = max(self.labels, default=0) + 1
        for i, c in enumerate(self.labels):
            colors[self.offset + i] = c if c else fresh + 1 + i
        return refine.find_moving_automorphism(self.adj, colors, self.targets) is not None


class _LexLeader:
    """Prunes labelings beaten lexicographically (in search order) by an image under a known automorphism.

    Any set of automorphisms is sound here: the lex-least labeling of each
    orbit is never pruned, and it also satisfies canonical colour order.
    """

    def __init__(self, perms: np.ndarray, order):
        order = np.asarray(order, dtype=np.int64)
        ident = np.arange(perms.shape[1]) if perms.size else None
        keep = [row for row in perms if not np.array_equal(row, ident)]
        self.rows = np.asarray(keep, dtype=np.int64).reshape(len(keep), perms.shape[1])[:, order]
        self.order = order

    def beaten(self, labels: np.ndarray, depth: int) -> bool:
        if not len(self.rows):
            return False
        base = labels[self.order[:depth]]
        img = labels[self.rows[:, :depth]]
        diff = img != base
        first = diff.argmax(axis=1)
        vals = img[np.arange(len(img)), first]
        return bool((diff.any(axis=1) & (vals != 0) & (vals < base[first])).any())


def _search(engine, order, r, deadline, counter, lex=None):
    engine.reset()
    size = len(order)
    labels = np.zeros(size, dtype=np.int64)

    def rec(depth, used):
        counter[0] += 1
        if deadline is not None and counter[0] % 64 == 0 and time.monotonic() > deadline:
            raise SearchTimeout("labeling search exceeded its time budget")
        if engine.solved():
            return True
        if depth == size:
            # a complete labeling that is not doomed is distinguishing
            return True
        item = order[depth]
        for c in range(1, min(used + 1, r) + 1):
            engine.push(item, c)
            labels[item] = c
            if not (lex is not None and lex.beaten(labels, depth + 1)) and not engine.doomed():
                if rec(depth + 1, max(used, c)):
                    return True
            labels[item] = 0
            engine.pop(item)
        return False

    if engine.doomed():
        return None
    if rec(0, 0):
        return tuple(int(c) if c else 1 for c in labels)
    return None


def _pick_engine(g, auts, engine, edge):
    if engine not in ("auto", "elements", "refine"):
        raise ValueError(f"unknown engine {engine!r}")
    if engine == "auto":
        if auts is not None and auts.capped:
            raise CappedGroup(f"a capped group ({auts.order} elements listed) cannot certify a labeling")
        engine = "elements" if auts is not None and auts.order <= ELEMENTS_LIMIT else "refine"
    if engine == "elements":
        if auts is None:
            auts = enumerate_automorphisms(g)
        if auts.capped:
            raise CappedGroup(f"the elements engine needs the full group; enumeration stopped at {auts.order}")
        if edge:
            return _ElementsEngine(edge_perm_array(g, auts), g.m), auts
        return _ElementsEngine(_elements_array(auts), g.n), auts
    if edge:
        return _RefineEngine(_subdivision_adj(g), g.m, offset=g.n), auts
    return _RefineEngine(_vertex_adj(g), g.n), auts


def _lex_perms(g: Graph, engine, edge: bool) -> np.ndarray:
    """Elements engine: the whole group.  Refine engine: strong generators and their inverses."""
    if isinstance(engine, _ElementsEngine):
        return engine.base
    gens = refine.strong_generators(_vertex_adj(g))
    gens += [tuple(np.argsort(p).tolist()) for p in gens]
    if edge:
        gens = [induced_edge_perm(g, p) for p in gens]
    size = g.m if edge else g.n
    return np.asarray(sorted(set(gens)), dtype=np.int64).reshape(len(set(gens)), size)


def _solve(g, engine, order, r_max, kind, time_limit, lex, **extra):
    deadline = None if time_limit is None else time.monotonic() + time_limit
    counter = [0]
    pruner = _LexLeader(_lex_perms(g, engine, kind == "edge"), order) if lex else None
    for r in range(1, r_max + 1):
        witness = _search(engine, order, r, deadline, counter, pruner)
        log.debug("%s search r=%d: %s after %d nodes", kind, r, "found" if witness else "none", counter[0])
        if witness is not None:
            return DistResult(r, witness, kind, True, engine=engine.name, nodes=counter[0], **extra)
    raise RMaxExceeded(f"no distinguishing {kind} labeling with at most {r_max} labels")


def vertex_order(g: Graph) -> list[int]:
    """Descending degree, then ascending index."""
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def edge_order(g: Graph) -> list[int]:
    """Descending endpoint-degree sum, then canonical edge position."""
    deg = g.degrees()
    return sorted(range(g.m), key=lambda i: (-(deg[g.edges[i][0]] + deg[g.edges[i][1]]), i))


def distinguishing_number(
    g: Graph,
    auts: AutGroup | None = None,
    r_max: int | None = None,
    *,
    engine: str = "auto",
    time_limit: float | None = None,
    lex: bool = True,
) -> DistResult:
    """Least r admitting a vertex labeling with labels 1..r preserved only by the identity."""
    if g.n == 0:
        return DistResult(1, (), "vertex", engine="trivial")
    eng, _ = _pick_engine(g, auts, engine, edge=False)
    return _solve(g, eng, vertex_order(g), g.n if r_max is None else r_max, "vertex", time_limit, lex)


def distinguishing_index(
    g: Graph,
    auts: AutGroup | None = None,
    r_max: int | None = None,
    *,
    engine: str = "auto",
    time_limit: float | None = None,
    lex: bool = True,
) -> DistResult:
    """Least r admitting an edge labeling whose preserving automorphisms all fix every edge."""
    if g.m == 0:
        raise NoEdges("the distinguishing index needs at least one edge")
    eng, auts = _pick_engine(g, auts, engine, edge=True)
    if auts is not None:
        kernel = any(
            induced_edge_perm(g, p) == tuple(range(g.m)) and p != tuple(range(g.n)) for p in auts.elements
        )
    else:
        kernel = edge_kernel_nontrivial(g)
    if kernel:
        log.warning("some automorphism fixes every edge but moves vertices; it is ignored")
    return _solve(g, eng, edge_order(g), max(g.m, 1) if r_max is None else r_max, "edge", time_limit, lex,
                  kernel_nontrivial=kernel)


def validate_witness(g: Graph, result: DistResult, auts: AutGroup | None = None) -> bool:
    """Re-check a result's witness: label range, then the distinguishing property.

    Uses the listed group when an exact one is given, otherwise the group-free check.
    """
    w = result.witness
    if any(not 1 <= x <= result.value for x in w):
        return False
    if result.kind == "edge":
        if auts is not None and not auts.capped:
            return is_distinguishing_edge(g, auts, w)
        return preserving_edge_automorphism(g, w) is None
    if auts is not None and not auts.capped:
        return is_distinguishing_vertex(g, auts, w)
    return preserving_automorphism(g, w) is None
