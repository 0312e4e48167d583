import pytest
from hypothesis import given, strategies as st

from edgescm.complex import (
    QQ,
    FieldSpec,
    SimplicialComplex,
    boundary_matrix,
    clique_complex,
    ideal_of_complex,
    pure_skeleton,
    rank,
    reduced_homology_dims,
    stanley_reisner_complex,
)
from edgescm.enumeration import labeled_graphs_on
from edgescm.graph import Graph, complement, complete_graph, cycle_graph
from edgescm.ideal import DomainError, MonomialIdeal, edge_ideal, zero_ideal

from oracles import dense_rank

HOLLOW_TRIANGLE = SimplicialComplex.of(3, (1, 2), (1, 3), (2, 3))
SIMPLEX3 = SimplicialComplex.of(3, (1, 2, 3))


@st.composite
def complexes(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    facets = draw(st.lists(st.frozensets(st.integers(1, n)), max_size=6))
    return SimplicialComplex(n, tuple(facets))


def mat_mul(a, b):
    if not a or not b or not b[0]:
        return []
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def test_field_spec():
    assert FieldSpec(0) == QQ
    FieldSpec(2)
    FieldSpec(2147483647)
    for bad in (1, 4, 9, -3):
        with pytest.raises(ValueError):
            FieldSpec(bad)


def test_facets_are_antichain():
    cx = SimplicialComplex.of(4, (1, 2), (1, 2, 3), (4,), (3,))
    assert cx.facet_lists() == [[4], [1, 2, 3]]
    assert cx.dim == 2
    assert SimplicialComplex.of(3, ()).dim == -1
    with pytest.raises(DomainError):
        SimplicialComplex(3, ()).dim


def test_stanley_reisner_complex_examples():
    assert stanley_reisner_complex(MonomialIdeal.of(2, (1, 2))).facet_lists() == [[1], [2]]
    assert stanley_reisner_complex(zero_ideal(3)).facet_lists() == [[1, 2, 3]]
    with pytest.raises(DomainError):
        stanley_reisner_complex(MonomialIdeal.of(2, ()))


def test_edge_ideal_complex_is_clique_complex_of_complement(graphs_le6):
    for g in graphs_le6:
        assert stanley_reisner_complex(edge_ideal(g)) == clique_complex(complement(g))


def test_clique_complex_examples():
    assert clique_complex(complete_graph(3)).facet_lists() == [[1, 2, 3]]
    assert clique_complex(cycle_graph(4)).facet_lists() == [[1, 2], [1, 4], [2, 3], [3, 4]]
    assert clique_complex(Graph.from_edges(4, [(1, 3), (2, 4)])).facet_lists() == [[1, 3], [2, 4]]
    assert clique_complex(Graph.from_edges(3, [(1, 2)])).facet_lists() == [[3], [1, 2]]


def test_pure_skeleton():
    assert pure_skeleton(SIMPLEX3, 1) == HOLLOW_TRIANGLE
    assert pure_skeleton(SIMPLEX3, -1).facets == (frozenset(),)
    c4 = clique_complex(complement(cycle_graph(4)))
    assert pure_skeleton(c4, 1).facet_lists() == [[1, 3], [2, 4]]
    with pytest.raises(ValueError):
        pure_skeleton(SIMPLEX3, 3)


def test_ideal_of_complex_examples():
    assert ideal_of_complex(SimplicialComplex.of(2, (1,), (2,))) == MonomialIdeal.of(2, (1, 2))
    assert ideal_of_complex(SimplicialComplex.of(2, ())) == MonomialIdeal.of(2, (1,), (2,))
    assert ideal_of_complex(SimplicialComplex(2, ())).is_unit()


@given(st.integers(1, 6).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.frozensets(st.integers(1, n), min_size=1), max_size=6))))
def test_stanley_reisner_roundtrip(data):
    n, gens = data
    i = MonomialIdeal(n, tuple(gens))
    assert ideal_of_complex(stanley_reisner_complex(i)) == i


@given(complexes())
def test_complex_roundtrip(cx):
    if cx.is_void():
        return
    assert stanley_reisner_complex(ideal_of_complex(cx)) == cx


def test_boundary_examples():
    edge = SimplicialComplex.of(2, (1, 2))
    assert boundary_matrix(edge, 1) == [[-1], [1]]
    assert boundary_matrix(edge, 0) == [[1, 1]]
    assert rank(boundary_matrix(HOLLOW_TRIANGLE, 1)) == 2
    assert boundary_matrix(edge, 1, FieldSpec(3)) == [[2], [1]]


@given(complexes())
def test_boundary_squares_to_zero(cx):
    if cx.is_void():
        return
    for s in range(0, cx.dim + 1):
        prod = mat_mul(boundary_matrix(cx, s), boundary_matrix(cx, s + 1))
        assert all(v == 0 for row in prod for v in row)


@given(complexes(), st.sampled_from([0, 2, 3]))
def test_rank_matches_dense_oracle(cx, p):
    if cx.is_void():
        return
    for s in range(0, cx.dim + 1):
        m = boundary_matrix(cx, s)
        assert rank(m, FieldSpec(p)) == dense_rank(m, p)


@given(st.lists(st.lists(st.integers(-4, 4), min_size=4, max_size=4), max_size=6), st.sampled_from([0, 2, 5]))
def test_rank_random_integer_matrices(m, p):
    assert rank(m, FieldSpec(p)) == dense_rank(m, p)


def test_reduced_homology_examples():
    assert reduced_homology_dims(HOLLOW_TRIANGLE) == {-1: 0, 0: 0, 1: 1}
    assert reduced_homology_dims(SimplicialComplex.of(2, (1,), (2,))) == {-1: 0, 0: 1}
    assert set(reduced_homology_dims(SIMPLEX3).values()) == {0}
    assert reduced_homology_dims(SimplicialComplex.of(3, ())) == {-1: 1}
    assert reduced_homology_dims(SimplicialComplex(3, ())) == {-1: 0}


def test_projective_plane_torsion_shows_in_characteristic_two():
    # 6-vertex triangulation of RP^2: H~ vanishes over Q, not over GF(2).
    rp2 = SimplicialComplex.of(
        6, (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
        (2, 3, 5), (3, 4, 6), (2, 4, 5), (3, 5, 6), (2, 4, 6),
    )
    assert set(reduced_homology_dims(rp2).values()) == {0}
    f2 = reduced_homology_dims(rp2, FieldSpec(2))
    assert f2[1] == 1 and f2[2] == 1


@given(complexes(), st.sampled_from([0, 2]))
def test_reduced_euler_characteristic(cx, p):
    if cx.is_void():
        return
    dims = reduced_homology_dims(cx, FieldSpec(p))
    euler = sum((-1) ** i * len(cx.faces(i)) for i in range(-1, cx.dim + 1))
    assert euler == sum((-1) ** i * d for i, d in dims.items())


@pytest.mark.parametrize("n", range(1, 5))
def test_clique_complex_duality_all_labelled(n):
    for g in labeled_graphs_on(n):
        if g.edges:
            assert clique_complex(complement(g)) == stanley_reisner_complex(edge_ideal(g))
