"""Individualisation-refinement search on vertex-coloured graphs.

This is the group-free backend: it answers "is there a colour-preserving
automorphism that moves one of these vertices?" and computes exact group
orders by orbit-stabiliser, without ever listing group elements.  That is
what lets the labeling solver handle windmills with 10^7 automorphisms.

Colourings are lists of ints.  Refinement is 1-dimensional Weisfeiler-Leman
with canonical recolouring (new colour = rank of the signature), so two
colourings refined jointly stay comparable colour-for-colour.
"""
from __future__ import annotations

from collections import Counter
from typing import Sequence

Adjacency = Sequence[Sequence[int]]


def _signatures(adj, colors):
    return [(colors[v], tuple(sorted([colors[u] for u in adj[v]]))) for v in range(len(adj))]


def refine(adj: Adjacency, colors: Sequence[int]) -> list[int]:
    """Coarsest equitable refinement of ``colors``, recoloured canonically to 0..k-1."""
    colors = list(colors)
    k = -1
    while True:
        sigs = _signatures(adj, colors)
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == k:
            return colors
        k = len(rank)


def joint_refine(adj: Adjacency, c1: Sequence[int], c2: Sequence[int]):
    """Refine two colourings of the same graph in lockstep.

    Returns ``None`` as soon as the colour histograms disagree (no colour
    preserving isomorphism can exist), else the pair of refined colourings.
    """
    c1, c2 = list(c1), list(c2)
    k = -1
    while True:
        s1 = _signatures(adj, c1)
        s2 = _signatures(adj, c2)
        if Counter(s1) != Counter(s2):
            return None
        rank = {s: i for i, s in enumerate(sorted(set(s1)))}
        c1 = [rank[s] for s in s1]
        c2 = [rank[s] for s in s2]
        if len(rank) == k:
            return c1, c2
        k = len(rank)


def _target_cell(colors, restrict=None):
    """Smallest non-singleton colour class (optionally meeting ``restrict``), lowest colour on ties."""
    counts = Counter(colors)
    best = None
    for col, cnt in counts.items():
        if cnt < 2:
            continue
        if restrict is not None and not any(colors[v] == col for v in restrict):
            continue
        if best is None or (cnt, col) < best:
            best = (cnt, col)
    return None if best is None else best[1]


def _individualize(colors, v):
    out = list(colors)
    out[v] = max(colors) + 1
    return out


def _is_mapping_automorphism(adj, mapping):
    return all(set(mapping[u] for u in adj[v]) == set(adj[mapping[v]]) for v in range(len(adj)))


def _search_iso(adj, c1, c2):
    pair = joint_refine(adj, c1, c2)
    if pair is None:
        return None
    c1, c2 = pair
    n = len(adj)
    if max(c1, default=-1) + 1 == n:
        where = [0] * n
        for w, col in enumerate(c2):
            where[col] = w
        mapping = tuple(where[c1[v]] for v in range(n))
        return mapping if _is_mapping_automorphism(adj, mapping) else None
    col = _target_cell(c1)
    x = min(v for v in range(n) if c1[v] == col)
    d1 = _individualize(c1, x)
    for y in range(n):
        if c2[y] != col:
            continue
        found = _search_iso(adj, d1, _individualize(c2, y))
        if found is not None:
            return found
    return None


def find_isomorphism(adj: Adjacency, c1: Sequence[int], c2: Sequence[int]):
    """An automorphism ``m`` of the graph with ``c2[m[v]] == c1[v]`` for every ``v``, or ``None``."""
    return _search_iso(adj, c1, c2)


def find_moving_automorphism(adj: Adjacency, colors: Sequence[int], targets=None):
    """Return a colour-preserving automorphism moving some vertex of ``targets``, or ``None``.

    ``targets`` defaults to all vertices, in which case this decides whether
    the coloured graph has any nontrivial automorphism.
    """
    n = len(adj)
    targets = range(n) if targets is None else sorted(targets)
    colors = refine(adj, colors)
    while True:
        col = _target_cell(colors, targets)
        if col is None:
            return None
        v = min(t for t in targets if colors[t] == col)
        cv = _individualize(colors, v)
        for w in range(n):
            if w != v and colors[w] == col:
                found = _search_iso(adj, cv, _individualize(colors, w))
                if found is not None:
                    return found
        # nothing maps v elsewhere: continue inside the stabiliser of v
        colors = refine(adj, cv)


def _orbit_stabiliser(adj, colors):
    n = len(adj)
    colors = refine(adj, [0] * n if colors is None else colors)
    order, gens = 1, []
    while True:
        col = _target_cell(colors)
        if col is None:
            return order, gens
        v = min(u for u in range(n) if colors[u] == col)
        cv = _individualize(colors, v)
        orbit = 1
        for w in range(n):
            if w != v and colors[w] == col:
                found = _search_iso(adj, cv, _individualize(colors, w))
                if found is not None:
                    orbit += 1
                    gens.append(found)
        order *= orbit
        colors = refine(adj, cv)


def automorphism_group_order(adj: Adjacency, colors: Sequence[int] | None = None) -> int:
    """Exact order of the colour-preserving automorphism group, via orbit-stabiliser."""
    return _orbit_stabiliser(adj, colors)[0]


def strong_generators(adj: Adjacency, colors: Sequence[int] | None = None) -> list[tuple]:
    """Automorphisms found along the stabiliser chain; together they generate the group."""
    return _orbit_stabiliser(adj, colors)[1]
