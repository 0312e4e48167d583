"""Golden claims replayed by the ``paper-check`` command.

Each claim is a named check returning ``(ok, detail)``. Expected values are
module-level constants so they can be inspected (or tampered with in tests).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .complex import QQ, FieldSpec
from .graph import Graph, complete_graph, cycle_graph, is_chordal
from .ideal import (
    alexander_dual,
    dual_component,
    edge_ideal,
    format_monomial,
    is_unmixed,
    squarefree_component,
    squarefree_veronese,
)
from .resolution import (
    betti_table,
    has_linear_quotients,
    has_linear_resolution,
    is_componentwise_linear,
    regularity,
    upper_koszul,
)
from .scm import (
    chordal_quotient_ordering,
    classify,
    h_vector,
    is_cm_graph,
    is_scm,
    is_scm_duval,
    negative_h_obstruction,
    obstruction_skeleton,
)
from .enumeration import graphs_up_to

CYCLE_RANGE = range(3, 11)
SCM_CYCLES = {3, 5}
UNMIXED_CYCLES = {3, 4, 5, 7}

C7_DUAL = [
    (1, 2, 4, 6), (1, 3, 4, 6), (1, 3, 5, 6), (1, 3, 5, 7),
    (2, 3, 5, 7), (2, 4, 5, 7), (2, 4, 6, 7),
]
C7_DUAL_BETTI = {(0, 4): 7, (1, 5): 7, (2, 7): 1}

# C4 plus vertex 5 pendant at 4
EXAMPLE_4_4_GRAPH = Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (1, 4), (4, 5)])
EXAMPLE_4_4_DUAL = [(2, 4), (1, 3, 5), (1, 3, 4)]
EXAMPLE_4_4_REGULARITY = 3

# C6 plus vertex 7 joined to the adjacent vertices 1 and 6
TRIANGLE_C6_GRAPH = Graph.from_edges(
    7, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (1, 7), (6, 7)]
)
TRIANGLE_C6_DUAL = [
    (2, 4, 6, 7), (1, 3, 5, 7), (1, 3, 5, 6), (1, 3, 4, 6),
    (1, 2, 4, 6), (2, 3, 5, 6, 7), (1, 2, 4, 5, 7),
]

C4_OBSTRUCTION_H = (1, 2, -1)


@dataclass(frozen=True)
class Claim:
    name: str
    check: Callable[[FieldSpec], tuple]


def _as_sets(gens) -> set:
    return {frozenset(g) for g in gens}


def _fmt(gens) -> str:
    return ", ".join(format_monomial(frozenset(g)) for g in sorted(gens, key=lambda g: (len(g), sorted(g))))


def _cycles_scm(field):
    got = {n for n in CYCLE_RANGE if is_scm(cycle_graph(n), field)}
    return got == SCM_CYCLES, f"SCM cycles in 3..10: {sorted(got)}"


def _cycles_cm(field):
    got = {n for n in CYCLE_RANGE if is_cm_graph(cycle_graph(n), field)}
    return got == SCM_CYCLES, f"CM cycles in 3..10: {sorted(got)}"


def _cycles_unmixed(field):
    got = {n for n in CYCLE_RANGE if is_unmixed(edge_ideal(cycle_graph(n)))}
    return got == UNMIXED_CYCLES, f"unmixed cycles in 3..10: {sorted(got)}"


def _c7_dual(field):
    dual = alexander_dual(edge_ideal(cycle_graph(7)))
    return _as_sets(dual.gens) == _as_sets(C7_DUAL), str(dual)


def _c7_betti(field):
    table = betti_table(alexander_dual(edge_ideal(cycle_graph(7))), field)
    return table.entries == C7_DUAL_BETTI and not has_linear_resolution(
        alexander_dual(edge_ideal(cycle_graph(7))), field
    ), str(table.entries)


def _even_cycles(field):
    details = []
    ok = True
    for r in range(2, 6):
        g = cycle_graph(2 * r)
        comp = dual_component(g, r)
        odd = frozenset(range(1, 2 * r, 2))
        even = frozenset(range(2, 2 * r + 1, 2))
        table = betti_table(comp, field)
        good = (
            set(comp.gens) == {odd, even}
            and table.entries == {(0, r): 2, (1, 2 * r): 1}
            and not has_linear_resolution(comp, field)
        )
        ok &= good
        details.append(f"C{2 * r}:{'ok' if good else table.entries}")
    return ok, " ".join(details)


def _odd_cycles(field):
    details = []
    ok = True
    for r in (3, 4, 5):
        n = 2 * r + 1
        j = squarefree_component(alexander_dual(edge_ideal(cycle_graph(n))), r + 1)
        beta = betti_table(j, field)[(2, n)]
        good = beta > 0 and len(j.gens) == n
        if n > 7:
            k = upper_koszul(j, range(1, n + 1))
            good &= all(k.contains_face(e) for e in ({1, 4}, {4, 7}, {1, 7}))
            good &= not k.contains_face({1, 4, 7})
        ok &= good
        details.append(f"C{n}: beta_2,{n}={beta}")
    return ok, " ".join(details)


def _example_4_4(field):
    g = EXAMPLE_4_4_GRAPH
    dual = alexander_dual(edge_ideal(g))
    reg = regularity(betti_table(dual, field))
    c = classify(g, field)
    ok = (
        _as_sets(dual.gens) == _as_sets(EXAMPLE_4_4_DUAL)
        and reg == EXAMPLE_4_4_REGULARITY
        and is_componentwise_linear(dual, field)
        and c.scm and not c.chordal and not c.unmixed and not c.cm
    )
    return ok, f"dual=({dual}) expected=({_fmt(EXAMPLE_4_4_DUAL)}) reg={reg} scm={c.scm}"


def _triangle_c6(field):
    g = TRIANGLE_C6_GRAPH
    dual = alexander_dual(edge_ideal(g))
    c = classify(g, field)
    ok = _as_sets(dual.gens) == _as_sets(TRIANGLE_C6_DUAL) and c.scm and not c.chordal
    return ok, f"dual=({dual}) expected=({_fmt(TRIANGLE_C6_DUAL)}) scm={c.scm}"


def _c4_obstruction(field):
    g = cycle_graph(4)
    h = h_vector(obstruction_skeleton(g)).values
    fired = negative_h_obstruction(g)
    return fired and h == C4_OBSTRUCTION_H and not is_scm(g, field), f"h={h} fired={fired}"


def _complete_graphs(field):
    details = []
    ok = True
    for n in range(2, 7):
        g = complete_graph(n)
        dual = alexander_dual(edge_ideal(g))
        good = list(dual.gens) == list(squarefree_veronese(n, n - 1).gens)
        good &= all(dual_component(g, d).is_zero() for d in range(0, n - 1))
        good &= [set(m) for m in dual_component(g, n).gens] == [set(range(1, n + 1))]
        order = chordal_quotient_ordering(g, n - 1)
        good &= has_linear_quotients(dual, order)
        good &= is_componentwise_linear(dual, field)
        ok &= good
        details.append(f"K{n}:{'ok' if good else 'FAIL'}")
    return ok, " ".join(details)


def _veronese(field):
    bad = [
        (n, d) for n in range(1, 7) for d in range(1, n + 1)
        if not has_linear_resolution(squarefree_veronese(n, d), field)
    ]
    return not bad, f"non-linear Veronese ideals: {bad}"


def _chordal_small(field):
    chordal = [g for g in graphs_up_to(6) if is_chordal(g)]
    bad = [g for g in chordal if not is_scm(g, field)]
    return not bad, f"{len(chordal)} chordal graphs on <= 6 vertices, {len(bad)} not SCM"


def _routes_small(field):
    graphs = [g for g in graphs_up_to(5) if g.edges]
    bad = [g for g in graphs if is_scm(g, field) != is_scm_duval(g, field)]
    return not bad, f"{len(graphs)} graphs on <= 5 vertices, {len(bad)} route disagreements"


CLAIMS = [
    Claim("cycles: C_n is SCM iff n in {3,5} (3 <= n <= 10)", _cycles_scm),
    Claim("cycles: C_n is CM iff n in {3,5} (3 <= n <= 10)", _cycles_cm),
    Claim("cycles: C_n is unmixed iff n in {3,4,5,7}", _cycles_unmixed),
    Claim("C_7: dual generators of I(C_7)", _c7_dual),
    Claim("C_7: resolution 0 -> R(-7) -> R(-5)^7 -> R(-4)^7 of I(C_7)^v", _c7_betti),
    Claim("even cycles: degree-r dual component is a non-linear complete intersection", _even_cycles),
    Claim("odd cycles: degree-(r+1) dual component has beta_{2,n} > 0", _odd_cycles),
    Claim("Example 4.4: dual generators, regularity 3, SCM", _example_4_4),
    Claim("C_6 with a triangle on an edge: dual generators, SCM", _triangle_c6),
    Claim("C_4: h-vector obstruction (1,2,-1) fires", _c4_obstruction),
    Claim("complete graphs: duals are squarefree Veronese with linear quotients", _complete_graphs),
    Claim("squarefree Veronese ideals have linear resolutions", _veronese),
    Claim("chordal graphs on <= 6 vertices are SCM", _chordal_small),
    Claim("both SCM routes agree on <= 5 vertices", _routes_small),
]


def run_claims(field: FieldSpec = QQ, claims=None) -> list:
    """Evaluate claims; returns (name, ok, detail) triples. Exceptions count as failures."""
    results = []
    for claim in CLAIMS if claims is None else claims:
        try:
            ok, detail = claim.check(field)
        except Exception as exc:  # noqa: BLE001 - report, never crash the whole run
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append((claim.name, bool(ok), detail))
    return results
