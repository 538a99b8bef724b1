"""Immutable simple graphs, permutations on vertex indices, and labelings.

Vertices are ``0..n-1``.  Edges are stored as ``(u, v)`` pairs with ``u < v``
in lexicographic order; every edge labeling refers to positions in that
order.  Permutations are plain tuples where ``p[v]`` is the image of ``v``.
"""
from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import (
    BadRole,
    IndexOutOfRange,
    LengthMismatch,
    NotAutomorphism,
    SelfLoop,
    SymbreakError,
)

Permutation = tuple  # tuple[int, ...]


class Graph:
    """A simple undirected graph with optional named vertex roles.

    Use :func:`build` (or the constructor, which does the same validation).
    Instances are immutable and hashable; two graphs compare equal when they
    have the same order, edge set and role map.
    """

    __slots__ = ("_n", "_edges", "_roles", "_adj", "_edge_index")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), roles: Mapping[str, int] | None = None):
        if n < 0:
            raise IndexOutOfRange(f"vertex count must be nonnegative, got {n}")
        canon = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise IndexOutOfRange(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            canon.add((u, v) if u < v else (v, u))
        roles = dict(roles or {})
        for name, idx in roles.items():
            if not isinstance(name, str):
                raise BadRole(f"role names must be strings, got {name!r}")
            if not 0 <= idx < n:
                raise BadRole(f"role {name!r} points at {idx}, outside 0..{n - 1}")
        self._n = n
        self._edges = tuple(sorted(canon))
        self._roles = MappingProxyType(dict(sorted(roles.items())))
        adj = [set() for _ in range(n)]
        for u, v in self._edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(a) for a in adj)
        self._edge_index = {e: i for i, e in enumerate(self._edges)}

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def roles(self) -> Mapping[str, int]:
        return self._roles

    @property
    def adj(self) -> tuple[frozenset, ...]:
        return self._adj

    def neighbors(self, v: int) -> frozenset:
        """Open neighbourhood N(v)."""
        return self._adj[v]

    def closed_neighbors(self, v: int) -> frozenset:
        return self._adj[v] | {v}

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edge_index(self, u: int, v: int) -> int:
        """Position of edge {u, v} in the canonical edge order."""
        key = (u, v) if u < v else (v, u)
        try:
            return self._edge_index[key]
        except KeyError:
            raise SymbreakError(f"({u}, {v}) is not an edge") from None

    def role(self, name: str) -> int:
        try:
            return self._roles[name]
        except KeyError:
            raise BadRole(f"unknown role {name!r}") from None

    def with_roles(self, roles: Mapping[str, int]) -> "Graph":
        return Graph(self._n, self._edges, roles)

    def is_connected(self) -> bool:
        if self._n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for w in self._adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self._n

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges and dict(self._roles) == dict(other._roles)

    def __hash__(self):
        return hash((self._n, self._edges, tuple(self._roles.items())))

    def __repr__(self):
        return f"Graph(n={self._n}, m={len(self._edges)})"


def build(n: int, edges: Iterable[Sequence[int]] = (), roles: Mapping[str, int] | None = None) -> Graph:
    """Validate and canonicalise a graph; duplicate edges are merged."""
    return Graph(n, edges, roles)


# -- permutations ---------------------------------------------------------

def identity(n: int) -> Permutation:
    return tuple(range(n))


def check_permutation(p: Sequence[int], n: int | None = None) -> Permutation:
    p = tuple(int(x) for x in p)
    if n is not None and len(p) != n:
        raise LengthMismatch(f"permutation has length {len(p)}, expected {n}")
    if sorted(p) != list(range(len(p))):
        raise SymbreakError(f"{p} is not a bijection on 0..{len(p) - 1}")
    return p


def perm_compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """Return ``p o q``, i.e. apply ``q`` first: ``v -> p[q[v]]``."""
    if len(p) != len(q):
        raise LengthMismatch(f"cannot compose permutations of lengths {len(p)} and {len(q)}")
    return tuple(p[x] for x in q)


def perm_inverse(p: Sequence[int]) -> Permutation:
    inv = [0] * len(p)
    for v, w in enumerate(p):
        inv[w] = v
    return tuple(inv)


def is_identity(p: Sequence[int]) -> bool:
    return all(v == w for v, w in enumerate(p))


def is_automorphism(g: Graph, p: Sequence[int]) -> bool:
    if len(p) != g.n:
        raise LengthMismatch(f"permutation has length {len(p)}, graph has {g.n} vertices")
    adj = g.adj
    # bijection + edges onto edges is enough: |E| is finite and preserved
    if set(p) != set(range(g.n)):
        return False
    return all(p[v] in adj[p[u]] for u, v in g.edges)


def induced_edge_perm(g: Graph, p: Sequence[int]) -> Permutation:
    """Permutation of canonical edge positions induced by the automorphism ``p``."""
    if len(p) != g.n:
        raise LengthMismatch(f"permutation has length {len(p)}, graph has {g.n} vertices")
    index = g._edge_index
    out = []
    for u, v in g.edges:
        a, b = p[u], p[v]
        key = (a, b) if a < b else (b, a)
        j = index.get(key)
        if j is None:
            raise NotAutomorphism(f"edge ({u}, {v}) maps to non-edge {key}")
        out.append(j)
    return tuple(out)


# -- labelings ------------------------------------------------------------

@dataclass(frozen=True)
class VertexLabeling:
    """Labels ``1..r`` on the vertices; ``labels[v]`` belongs to vertex ``v``."""

    labels: tuple
    r: int

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))
        _check_labels(self.labels, self.r)

    def __len__(self):
        return len(self.labels)

    def relabel_bound(self, r: int) -> "VertexLabeling":
        return type(self)(self.labels, r)


@dataclass(frozen=True)
class EdgeLabeling(VertexLabeling):
    """Labels ``1..r`` aligned with the canonical edge order."""


def _check_labels(labels: Sequence[int], r: int) -> None:
    if r < 1:
        raise SymbreakError(f"label bound must be positive, got {r}")
    for x in labels:
        if not 1 <= x <= r:
            raise SymbreakError(f"label {x} outside 1..{r}")


def labels_of(obj) -> tuple:
    """Accept a labeling object or a bare sequence of ints."""
    if isinstance(obj, VertexLabeling):
        return obj.labels
    return tuple(int(x) for x in obj)
