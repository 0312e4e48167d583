"""Simple undirected graphs on the vertex set 1..n and the predicates used downstream."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable


class GraphParseError(ValueError):
    """Malformed edge-list input; carries the 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        clean = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"edge {i}-{j} outside 1..{self.n}")
            clean.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(clean))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def adjacency(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def isolated_vertices(self) -> frozenset:
        touched = {v for e in self.edges for v in e}
        return frozenset(v for v in self.vertices if v not in touched)

    def __repr__(self):
        body = ", ".join(f"{i}-{j}" for i, j in self.sorted_edges())
        return f"Graph(n={self.n}, edges=[{body}])"


def edgeless_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete_graph needs n >= 1")
    return Graph(n, frozenset(combinations(range(1, n + 1), 2)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle_graph needs n >= 3")
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return Graph.from_edges(n, edges)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path_graph needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def complement(g: Graph) -> Graph:
    pairs = combinations(range(1, g.n + 1), 2)
    return Graph(g.n, frozenset(p for p in pairs if p not in g.edges))


def induced_subgraph(g: Graph, subset: Iterable[int]) -> tuple[Graph, dict]:
    """Subgraph induced on `subset`, relabelled 1..|subset| by increasing original label.

    Returns the graph and the map new label -> original label.
    """
    keep = sorted(set(subset))
    for v in keep:
        _check_vertex(g, v)
    relabel = {old: new for new, old in enumerate(keep, start=1)}
    edges = [(relabel[i], relabel[j]) for i, j in g.edges if i in relabel and j in relabel]
    return Graph.from_edges(len(keep), edges), {new: old for old, new in relabel.items()}


def add_isolated_vertices(g: Graph, k: int) -> Graph:
    return Graph(g.n + k, g.edges)


def neighbors(g: Graph, x: int) -> frozenset:
    _check_vertex(g, x)
    out = set()
    for i, j in g.edges:
        if i == x:
            out.add(j)
        elif j == x:
            out.add(i)
    return frozenset(out)


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    return all(g.has_edge(i, j) for i, j in combinations(sorted(vertices), 2))


def find_simplicial_vertex(g: Graph, clique: Iterable[int] = ()) -> int | None:
    """Smallest vertex outside `clique` whose neighbourhood is a clique, or None."""
    clique = set(clique)
    if not is_clique(g, clique):
        raise ValueError("the given vertex set is not a clique")
    adj = g.adjacency()
    for x in g.vertices:
        if x not in clique and is_clique(g, adj[x]):
            return x
    return None


def perfect_elimination_order(g: Graph) -> list | None:
    """Repeatedly delete the smallest vertex whose remaining neighbourhood is a clique.

    Returns the deletion order, or None when the process gets stuck (G not chordal).
    """
    adj = g.adjacency()
    alive = set(g.vertices)
    order = []
    while alive:
        for x in sorted(alive):
            nbrs = adj[x] & alive
            if all(b in adj[a] for a, b in combinations(nbrs, 2)):
                break
        else:
            return None
        order.append(x)
        alive.remove(x)
    return order


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_order(g) is not None


def is_forest(g: Graph) -> bool:
    parent = list(range(g.n + 1))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for i, j in g.edges:
        ri, rj = find(i), find(j)
        if ri == rj:
            return False
        parent[ri] = rj
    return True


def is_vertex_cover(g: Graph, subset: Iterable[int]) -> bool:
    s = set(subset)
    return all(i in s or j in s for i, j in g.edges)


def _maximal_independent_sets(vertices: list, adj: dict) -> list:
    # Bron-Kerbosch with pivoting on the complement: cliques there are independent sets here.
    out = []
    universe = set(vertices)
    non_adj = {v: universe - adj[v] - {v} for v in vertices}

    def expand(r, p, x):
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = min(p | x, key=lambda u: (-len(p & non_adj[u]), u))
        for v in sorted(p - non_adj[pivot]):
            expand(r | {v}, p & non_adj[v], x & non_adj[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(vertices), set())
    return out


def minimal_vertex_covers(g: Graph) -> list:
    """All inclusion-minimal vertex covers, sorted by size then lexicographically.

    Isolated vertices never appear. Covers are the complements (within the
    non-isolated vertices) of the maximal independent sets.
    """
    adj = g.adjacency()
    active = [v for v in g.vertices if adj[v]]
    active_set = frozenset(active)
    covers = {active_set - ind for ind in _maximal_independent_sets(active, adj)}
    return sorted(covers, key=lambda c: (len(c), sorted(c)))


def _check_vertex(g: Graph, x: int) -> None:
    if not 1 <= x <= g.n:
        raise ValueError(f"vertex {x} outside 1..{g.n}")


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: first non-comment line is n, then `i j` per line."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        col = raw.index(stripped[0]) + 1
        tokens = stripped.split()
        if n is None:
            if len(tokens) != 1:
                raise GraphParseError("expected a single vertex count", lineno, col)
            n = _parse_int(tokens[0], lineno, col)
            if n < 0:
                raise GraphParseError("vertex count must be nonnegative", lineno, col)
            continue
        if len(tokens) != 2:
            raise GraphParseError(f"expected 'i j', got {len(tokens)} tokens", lineno, col)
        second_col = raw.index(tokens[1], col - 1 + len(tokens[0])) + 1
        i = _parse_int(tokens[0], lineno, col)
        j = _parse_int(tokens[1], lineno, second_col)
        for v, c in ((i, col), (j, second_col)):
            if not 1 <= v <= n:
                raise GraphParseError(f"vertex {v} outside 1..{n}", lineno, c)
        if i == j:
            raise GraphParseError(f"loop at vertex {i}", lineno, col)
        edges.append((i, j))
    if n is None:
        raise GraphParseError("missing vertex count", max(1, len(text.splitlines())), 1)
    return Graph.from_edges(n, edges)


def _parse_int(token: str, line: int, column: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphParseError(f"not an integer: {token!r}", line, column) from None


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{i} {j}" for i, j in g.sorted_edges()]
    return "\n".join(lines) + "\n"
