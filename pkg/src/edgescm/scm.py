"""Cohen-Macaulay and sequentially Cohen-Macaulay decisions for edge ideals."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from .complex import (
    QQ,
    FieldSpec,
    SimplicialComplex,
    clique_complex,
    ideal_of_complex,
    pure_skeleton,
    stanley_reisner_complex,
)
from .graph import (
    Graph,
    complement,
    find_simplicial_vertex,
    induced_subgraph,
    is_chordal,
    is_clique,
    is_forest,
)
from .ideal import DomainError, MonomialIdeal, alexander_dual, dual_component, edge_ideal, is_unmixed
from .resolution import has_linear_resolution, is_componentwise_linear


class InvariantViolation(AssertionError):
    """Two results that must agree did not."""


def is_scm(g: Graph, field: FieldSpec = QQ) -> bool:
    if not g.edges:
        return True
    return is_componentwise_linear(alexander_dual(edge_ideal(g)), field)


def is_cm_ideal(ideal: MonomialIdeal, field: FieldSpec = QQ) -> bool:
    """R/I is CM iff the dual is equigenerated with a linear resolution (Eagon-Reiner)."""
    dual = alexander_dual(ideal)
    return dual.is_equigenerated() and has_linear_resolution(dual, field)


def is_cm_graph(g: Graph, field: FieldSpec = QQ) -> bool:
    if not g.edges:
        return True
    return is_cm_ideal(edge_ideal(g), field)


def is_scm_duval(g: Graph, field: FieldSpec = QQ) -> bool:
    """Skeleton route: every pure skeleton of the Stanley-Reisner complex is Cohen-Macaulay."""
    if not g.edges:
        raise DomainError("the skeleton route needs a graph with at least one edge")
    cx = stanley_reisner_complex(edge_ideal(g))
    # The (-1)-skeleton {emptyset} has quotient ring k, which is CM.
    return all(
        is_cm_ideal(ideal_of_complex(pure_skeleton(cx, i)), field) for i in range(0, cx.dim + 1)
    )


def _desc_lex(subsets) -> list:
    return sorted(subsets, key=lambda s: tuple(sorted(s, reverse=True)), reverse=True)


def chordal_quotient_ordering(g: Graph, d: int) -> list:
    """Generators of the degree-d dual component of a chordal graph, in an order with linear quotients.

    Follows the inductive splitting at a simplicial vertex x with neighbourhood
    y = N(x): covers avoiding x contain all of y and restrict to covers of
    G - N[x]; covers through x restrict to covers of G - x. The y-prefixed block
    comes first, then the x-prefixed block.
    """
    if not is_chordal(g):
        raise ValueError("chordal_quotient_ordering needs a chordal graph")

    @lru_cache(maxsize=None)
    def covers(vertices: frozenset, k: int) -> tuple:
        if k < 0 or k > len(vertices):
            return ()
        sub, label = induced_subgraph(g, vertices)
        if not sub.edges:
            return tuple(_desc_lex(frozenset(c) for c in combinations(sorted(vertices), k)))
        if is_clique(g, vertices):
            m = len(vertices)
            if k == m:
                return (vertices,)
            if k == m - 1:
                return tuple(_desc_lex(vertices - {v} for v in vertices))
            return ()
        x = label[find_simplicial_vertex(sub)]
        ys = frozenset(v for v in vertices if g.has_edge(x, v))
        without_closed = covers(vertices - ys - {x}, k - len(ys))
        without_x = covers(vertices - {x}, k - 1)
        return tuple(ys | a for a in without_closed) + tuple(b | {x} for b in without_x)

    return list(covers(frozenset(g.vertices), d))


def f_vector(cx: SimplicialComplex) -> list:
    """Face counts (f_-1, f_0, ..., f_dim) with f_-1 = 1."""
    if cx.is_void():
        raise DomainError("the void complex has no f-vector")
    return [len(cx.faces(i)) for i in range(-1, cx.dim + 1)]


@dataclass(frozen=True)
class HVector:
    d: int
    values: tuple

    def has_negative_entry(self) -> bool:
        return any(h < 0 for h in self.values)


def h_vector(cx: SimplicialComplex) -> HVector:
    # sum_i f_{i-1} t^i (1-t)^(d-i) = sum_k h_k t^k
    f = f_vector(cx)
    d = cx.dim + 1
    values = tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1)) for k in range(d + 1)
    )
    return HVector(d, values)


def obstruction_skeleton(g: Graph) -> SimplicialComplex | None:
    """The pure 1-skeleton of the clique complex of the complement, or None if it has no edges."""
    cx = clique_complex(complement(g))
    if cx.dim < 1:
        return None
    return pure_skeleton(cx, 1)


def negative_h_obstruction(g: Graph) -> bool:
    """True when #E - #V + 1 < 0 for the non-isolated part of the complement (certifies non-SCM)."""
    if not g.edges:
        raise DomainError("the h-vector obstruction needs a graph with at least one edge")
    gc = complement(g)
    isolated = gc.isolated_vertices()
    vertices = gc.n - len(isolated)
    if vertices == 0:
        return False
    return len(gc.edges) - vertices + 1 < 0


@dataclass(frozen=True)
class Classification:
    graph: Graph
    chordal: bool
    forest: bool
    unmixed: bool
    cm: bool
    scm: bool
    scm_duval: bool | None
    obstruction_fired: bool
    field: FieldSpec

    def to_json(self) -> dict:
        return {
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.sorted_edges()],
            "characteristic": self.field.characteristic,
            "chordal": self.chordal,
            "forest": self.forest,
            "unmixed": self.unmixed,
            "cm": self.cm,
            "scm": self.scm,
            "scm_duval": self.scm_duval,
            "obstruction_fired": self.obstruction_fired,
        }


def classify(g: Graph, field: FieldSpec = QQ) -> Classification:
    """Run every decider on G and cross-check them; raises InvariantViolation on disagreement."""
    has_edges = bool(g.edges)
    result = Classification(
        graph=g,
        chordal=is_chordal(g),
        forest=is_forest(g),
        unmixed=is_unmixed(edge_ideal(g)) if has_edges else True,
        cm=is_cm_graph(g, field),
        scm=is_scm(g, field),
        scm_duval=is_scm_duval(g, field) if has_edges else None,
        obstruction_fired=negative_h_obstruction(g) if has_edges else False,
        field=field,
    )
    problems = []
    if has_edges and result.scm != result.scm_duval:
        problems.append("componentwise-linear and skeleton routes disagree")
    if result.obstruction_fired and result.scm:
        problems.append("h-vector obstruction fired on an SCM graph")
    if result.chordal and not result.scm:
        problems.append("chordal graph is not SCM")
    if result.cm != (result.scm and result.unmixed):
        problems.append("CM differs from SCM and unmixed")
    if problems:
        raise InvariantViolation(f"{'; '.join(problems)} for {g!r}")
    return result
