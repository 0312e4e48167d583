import pytest
from hypothesis import given, settings, strategies as st

from edgescm.complex import FieldSpec
from edgescm.graph import Graph, complete_graph, cycle_graph
from edgescm.ideal import (
    DomainError,
    MonomialIdeal,
    alexander_dual,
    dual_component,
    edge_ideal,
    monomial,
    squarefree_component,
    squarefree_veronese,
    zero_ideal,
)
from edgescm.resolution import (
    BettiTable,
    betti_table,
    find_linear_quotient_order,
    has_linear_quotients,
    has_linear_resolution,
    is_componentwise_linear,
    multigraded_betti,
    regularity,
    upper_koszul,
)

from oracles import taylor_betti

H44 = Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (1, 4), (4, 5)])
C7_DUAL = alexander_dual(edge_ideal(cycle_graph(7)))


@st.composite
def ideals(draw, max_n=6, max_gens=6):
    n = draw(st.integers(1, max_n))
    gens = draw(st.lists(st.frozensets(st.integers(1, n), min_size=1), min_size=1, max_size=max_gens))
    return MonomialIdeal(n, tuple(gens))


def test_upper_koszul_examples():
    assert upper_koszul(MonomialIdeal.of(2, (1, 2)), {1, 2}).facets == (frozenset(),)
    assert upper_koszul(MonomialIdeal.of(2, (1,)), {1, 2}).facet_lists() == [[2]]
    assert upper_koszul(MonomialIdeal.of(2, (1, 2)), {1}).is_void()


def test_upper_koszul_triangle_in_long_odd_cycles():
    for n in (9, 11):
        r = (n - 1) // 2
        j = squarefree_component(alexander_dual(edge_ideal(cycle_graph(n))), r + 1)
        k = upper_koszul(j, range(1, n + 1))
        assert all(k.contains_face(e) for e in ({1, 4}, {4, 7}, {1, 7}))
        assert not k.contains_face({1, 4, 7})


@given(ideals(max_n=5), st.frozensets(st.integers(1, 5)))
def test_upper_koszul_is_closed_downward(i, b):
    b = frozenset(v for v in b if v <= i.n)
    k = upper_koszul(i, b)
    for f in k.facets:
        for v in f:
            assert k.contains_face(f - {v})
            assert any(g <= b - (f - {v}) for g in i.gens)


def test_betti_examples():
    assert betti_table(C7_DUAL).entries == {(0, 4): 7, (1, 5): 7, (2, 7): 1}
    assert betti_table(MonomialIdeal.of(3, (1, 2, 3))).entries == {(0, 3): 1}
    for r in range(2, 6):
        j = dual_component(cycle_graph(2 * r), r)
        assert betti_table(j).entries == {(0, r): 2, (1, 2 * r): 1}
    with pytest.raises(DomainError):
        betti_table(zero_ideal(3))


def test_betti_table_rendering():
    t = betti_table(C7_DUAL)
    assert t.to_text().splitlines() == [
        "       0 1 2",
        "total: 7 7 1",
        "    4: 7 7 .",
        "    5: . . 1",
    ]
    assert t.to_json() == [{"i": 0, "j": 4, "beta": 7}, {"i": 1, "j": 5, "beta": 7}, {"i": 2, "j": 7, "beta": 1}]
    with pytest.raises(ValueError):
        BettiTable({(0, 1): -1})


@settings(max_examples=150, deadline=None)
@given(ideals(max_n=6, max_gens=6), st.sampled_from([0, 2, 3]))
def test_betti_matches_taylor_oracle(i, p):
    if i.is_unit():
        return
    assert betti_table(i, FieldSpec(p)).entries == taylor_betti(i.gens, p)


@given(ideals())
def test_beta_zero_counts_generators(i):
    if i.is_unit():
        return
    t = betti_table(i)
    for d in set(i.degrees()):
        assert t[(0, d)] == sum(1 for g in i.gens if len(g) == d)
    assert sum(b for (k, _), b in t.items() if k == 0) == len(i.gens)


def test_multigraded_betti_lives_on_lcm_lattice():
    mb = multigraded_betti(C7_DUAL)
    assert mb[(2, frozenset(range(1, 8)))] == 1
    assert sum(v for (i, _), v in mb.items() if i == 1) == 7


def test_regularity():
    assert regularity(betti_table(C7_DUAL)) == 5
    assert regularity(betti_table(MonomialIdeal.of(4, (1, 2, 3)))) == 3
    assert regularity(betti_table(alexander_dual(edge_ideal(H44)))) == 3
    with pytest.raises(DomainError):
        regularity(BettiTable({}))


def test_linear_resolution():
    for n in range(1, 7):
        for d in range(1, n + 1):
            assert has_linear_resolution(squarefree_veronese(n, d))
    assert not has_linear_resolution(dual_component(cycle_graph(6), 3))
    assert not has_linear_resolution(C7_DUAL)
    assert not has_linear_resolution(alexander_dual(edge_ideal(H44)))


def test_componentwise_linear():
    assert is_componentwise_linear(alexander_dual(edge_ideal(H44)))
    assert not is_componentwise_linear(alexander_dual(edge_ideal(cycle_graph(4))))
    for n in range(2, 7):
        assert is_componentwise_linear(alexander_dual(edge_ideal(complete_graph(n))))
    with pytest.raises(DomainError):
        is_componentwise_linear(zero_ideal(3))


def test_linear_quotients():
    assert has_linear_quotients(MonomialIdeal.of(3, (1,), (2,), (3,)), [monomial(1), monomial(2), monomial(3)])
    ci = MonomialIdeal.of(4, (1, 3), (2, 4))
    assert not has_linear_quotients(ci, [monomial(1, 3), monomial(2, 4)])
    assert not has_linear_quotients(ci, [monomial(2, 4), monomial(1, 3)])
    for n in range(2, 7):
        dual = alexander_dual(edge_ideal(complete_graph(n)))
        # descending lex with x1 > x2 > ... > xn
        desc = sorted(dual.gens, key=lambda g: [int(v in g) for v in range(1, n + 1)], reverse=True)
        assert has_linear_quotients(dual, desc)


def test_linear_quotients_rejects_bad_orders():
    i = MonomialIdeal.of(4, (1,), (2, 3))
    with pytest.raises(ValueError):
        has_linear_quotients(i, [monomial(2, 3), monomial(1)])
    with pytest.raises(ValueError):
        has_linear_quotients(i, [monomial(1)])


def test_find_linear_quotient_order():
    v43 = squarefree_veronese(4, 3)
    order = find_linear_quotient_order(v43)
    assert order is not None and has_linear_quotients(v43, order)
    assert find_linear_quotient_order(MonomialIdeal.of(4, (1, 3), (2, 4))) is None
    assert find_linear_quotient_order(MonomialIdeal.of(3, (1, 2))) == [monomial(1, 2)]


def test_find_linear_quotient_order_is_lexicographically_first():
    # x3x4 right after x1x2 gives colon (x1x2) which is not linear
    i =MonomialIdeal.of(4, (1, 2), (3, 4), (1, 3))
    order = find_linear_quotient_order(i)
    assert order == [monomial(1, 2), monomial(1, 3), monomial(3, 4)]


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(1, n),
    st.lists(st.frozensets(st.integers(1, n)), min_size=1, max_size=7))))
def test_linear_quotients_imply_linear_resolution(data):
    n, d, raw = data
    gens = {g for g in raw if len(g) == d}
    if not gens:
        return
    i = MonomialIdeal(n, tuple(gens))
    if find_linear_quotient_order(i) is not None:
        assert has_linear_resolution(i)


def test_characteristic_two_never_lowers_betti_numbers_on_suite():
    suite = [C7_DUAL, alexander_dual(edge_ideal(H44))]
    suite += [dual_component(cycle_graph(2 * r), r) for r in range(2, 5)]
    for n in (7, 9):
        r = (n - 1) // 2
        suite.append(squarefree_component(alexander_dual(edge_ideal(cycle_graph(n))), r + 1))
    for i in suite:
        zero, two = betti_table(i), betti_table(i, FieldSpec(2))
        assert all(two[k] >= v for k, v in zero.items())
