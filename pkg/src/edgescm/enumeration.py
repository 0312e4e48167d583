"""Exhaustive enumeration of small simple graphs up to isomorphism.

Canonical labels come from colour refinement plus individualisation: refine
the degree partition to a stable colouring, split the first non-singleton
cell on each of its vertices, recurse, and keep the lexicographically least
relabelled edge list over all leaves. Twin vertices within a cell give
identical subtrees, so only one vertex per twin class is tried.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .graph import Graph


def _refine(adj: list, colors: list) -> list:
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(len(adj))]
        ranks = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def _leaf_code(edges: list, colors: list) -> tuple:
    return tuple(sorted((min(colors[i], colors[j]), max(colors[i], colors[j])) for i, j in edges))


def canonical_form(g: Graph) -> Graph:
    """An isomorphic copy of G that depends only on G's isomorphism class."""
    n = g.n
    adj = [set() for _ in range(n)]
    edges = [(i - 1, j - 1) for i, j in g.edges]
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    best = None

    def search(colors):
        nonlocal best
        colors = _refine(adj, colors)
        if len(set(colors)) == n:
            code = _leaf_code(edges, colors)
            if best is None or code < best:
                best = code
            return
        counts = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        cell = [v for v in range(n) if colors[v] == target]
        reps = []
        for v in cell:
            if any(adj[v] - {r} == adj[r] - {v} for r in reps):
                continue
            reps.append(v)
            search([2 * c - (u == v) for u, c in enumerate(colors)])

    if n:
        search([0] * n)
    code = best or ()
    return Graph.from_edges(n, [(i + 1, j + 1) for i, j in code])


def graph_key(g: Graph) -> tuple:
    """Deterministic sort key: vertex count, edge count, then the edge list."""
    return (g.n, len(g.edges), g.sorted_edges())


@lru_cache(maxsize=None)
def _graphs_on(n: int) -> tuple:
    if n <= 1:
        return (Graph(n, frozenset()),)
    found = set()
    for g in _graphs_on(n - 1):
        for k in range(n):
            for nbrs in combinations(range(1, n), k):
                grown = Graph(n, g.edges | {(v, n) for v in nbrs})
                found.add(canonical_form(grown))
    return tuple(sorted(found, key=graph_key))


def graphs_on(n: int) -> list:
    """All graphs on exactly n vertices, one per isomorphism class, canonically labelled."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    return list(_graphs_on(n))


def graphs_up_to(max_n: int, min_n: int = 1) -> list:
    return [g for n in range(min_n, max_n + 1) for g in graphs_on(n)]


def labeled_graphs_on(n: int):
    """Every labelled graph on vertices 1..n (2^(n choose 2) of them)."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))
