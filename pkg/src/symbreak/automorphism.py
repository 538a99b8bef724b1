"""Automorphism groups of small graphs.

:func:`enumerate_automorphisms` lists every element by backtracking, which
is what the element-filtering labeling search and the distinguishing
predicates consume.  :func:`aut_order` gets the exact order from the
refinement backend when listing would be too expensive.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from . import refine
from .errors import BadParams, CappedGroup
from .graph import Graph, identity, is_automorphism, perm_compose, perm_inverse

log = logging.getLogger(__name__)

DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class AutGroup:
    """All automorphisms of a graph, identity first, in lexicographic order of images.

    When ``capped`` is true the enumeration stopped at the cap and
    ``elements`` is only a prefix of the group.
    """

    elements: tuple
    capped: bool = False

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def n(self) -> int:
        return len(self.elements[0]) if self.elements else 0

    def require_exact(self) -> None:
        if self.capped:
            raise CappedGroup(f"automorphism enumeration stopped at {self.order} elements")

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def _invariants(g: Graph) -> list:
    deg = g.degrees()
    return [(deg[v], tuple(sorted(deg[u] for u in g.adj[v]))) for v in range(g.n)]


def _search_order(g: Graph) -> list[tuple[int, int]]:
    """DFS preorder (vertex, tree parent or -1); components start at their highest-degree vertex.

    Depth-first keeps each cycle's vertices consecutive, so a wrong image
    choice dies on the closing edge instead of several layers later.
    """
    deg = g.degrees()
    seen = [False] * g.n
    order = []
    for start in sorted(range(g.n), key=lambda v: (-deg[v], v)):
        if seen[start]:
            continue
        stack = [(start, -1)]
        while stack:
            v, parent = stack.pop()
            if seen[v]:
                continue
            seen[v] = True
            order.append((v, parent))
            for w in sorted(g.adj[v], reverse=True):
                if not seen[w]:
                    stack.append((w, v))
    return order


def enumerate_automorphisms(g: Graph, cap: int = DEFAULT_CAP) -> AutGroup:
    """Every automorphism of ``g`` by vertex-by-vertex backtracking.

    Candidate images are pruned on degree, on the sorted multiset of
    neighbour degrees, and on adjacency with vertices already mapped.
    Stops with ``capped=True`` once more than ``cap`` elements would be
    returned.
    """
    if cap < 1:
        raise BadParams(f"cap must be positive, got {cap}")
    n = g.n
    adj = g.adj
    inv = _invariants(g)
    order = _search_order(g)
    image = [-1] * n
    used = [False] * n
    found = []
    capped = False

    def candidates(v, parent):
        pool = sorted(adj[image[parent]]) if parent >= 0 else range(n)
        mapped_nbrs = [u for u in adj[v] if image[u] >= 0]
        for c in pool:
            if used[c] or inv[c] != inv[v]:
                continue
            if any(image[u] not in adj[c] for u in mapped_nbrs):
                continue
            # c must not gain extra mapped neighbours
            if sum(1 for x in adj[c] if used[x]) != len(mapped_nbrs):
                continue
            yield c

    def extend(i):
        nonlocal capped
        if capped:
            return
        if i == n:
            if len(found) >= cap:
                capped = True
                return
            found.append(tuple(image))
            return
        v, parent = order[i]
        for c in candidates(v, parent):
            image[v] = c
            used[c] = True
            extend(i + 1)
            used[c] = False
            image[v] = -1
            if capped:
                return

    extend(0)
    if n == 0:
        found = [()]
    found.sort()
    if capped:
        log.info("automorphism enumeration capped at %d elements", cap)
    return AutGroup(tuple(found), capped)


def aut_order(g: Graph) -> int:
    """Exact |Aut(g)| via orbit-stabiliser on the refinement backend."""
    return refine.automorphism_group_order([sorted(a) for a in g.adj])


def orbits(group: AutGroup, n: int | None = None) -> list[list[int]]:
    """Vertex orbits, each sorted, listed by smallest member."""
    group.require_exact()
    n = group.n if n is None else n
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in group.elements:
        for v, w in enumerate(p):
            a, b = find(v), find(w)
            if a != b:
                parent[max(a, b)] = min(a, b)
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(find(v), []).append(v)
    return sorted(classes.values())


def group_order_formula_dutch(n: int, k: int) -> int:
    """n! * 2^n, the automorphism count of n k-cycles sharing one vertex."""
    if n < 2 or k < 3:
        raise BadParams(f"windmill needs n >= 2 and k >= 3, got n={n}, k={k}")
    return math.factorial(n) * 2**n


def _generated(gens, members, n):
    """Right-multiplication closure of the identity under ``gens``; ``None`` if it leaves ``members``."""
    start = identity(n)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for p in frontier:
            for t in gens:
                q = perm_compose(p, t)
                if q not in members:
                    return None
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def check_group_axioms(g: Graph, group: AutGroup) -> list[str]:
    """Problems found when treating ``group.elements`` as a group; empty means it is one.

    Generators are picked greedily; breadth-first right multiplication
    from the identity must stay inside the set and reach all of it.  A
    finite set equal to the monoid generated by its own elements is a
    group, so this certifies closure under composition and inverse.
    """
    group.require_exact()
    problems = []
    elems = set(group.elements)
    if len(elems) != len(group.elements):
        problems.append("duplicate elements")
    if identity(g.n) not in elems:
        problems.append("identity missing")
    for p in group.elements:
        if not is_automorphism(g, p):
            problems.append(f"{p} is not an automorphism")
        if perm_inverse(p) not in elems:
            problems.append(f"inverse of {p} missing")
    if problems:
        return problems
    gens: list = []
    reached = {identity(g.n)}
    for p in group.elements:
        if p in reached:
            continue
        gens.append(p)
        reached = _generated(gens, elems, g.n)
        if reached is None:
            problems.append("not closed under composition")
            return problems
    return problems
