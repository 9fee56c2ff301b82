from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from softbary.generators import (
    complete,
    cycle,
    flat_torus,
    icosahedron,
    join,
    octahedron,
    path,
    projective_plane,
    wheel,
)
from softbary.graph import Graph, SimplicialComplex, is_isomorphic, whitney_complex
from softbary.manifold import classify
from softbary.refine import (
    NotAManifoldError,
    barycentric,
    barycentric_complex,
    boundary_complex,
    boundary_graph,
    classify_faces,
    dual_circle,
    dual_graph,
    edge_refine,
    refine_facet_edges,
    refine_graph,
    soft_barycentric,
    soft_whitney,
)

PSI = np.array([[1, 1, 1], [0, 2, 6], [0, 0, 6]])
PHI = np.array([[1, 0, 1], [0, 1, 3], [0, 0, 3]])


def test_classify_faces_examples():
    fc = classify_faces(whitney_complex(complete(4)))
    assert fc.q == 3 and len(fc.boundary) == 4 and not fc.interior
    fc = classify_faces(whitney_complex(octahedron()))
    assert len(fc.interior) == 12 and not fc.boundary and not fc.singular
    book = SimplicialComplex([(0, 1, 2), (0, 1, 3), (0, 1, 4)])
    assert classify_faces(book).singular == [(0, 1)]


def test_free_faces_in_non_pure_complex():
    c = SimplicialComplex([(0, 1, 2), (2, 3)])
    fc = classify_faces(c)
    assert fc.free == [(2, 3)] and not fc.pure
    assert (2, 3) in soft_whitney(c)


def test_barycentric_examples():
    assert is_isomorphic(barycentric(whitney_complex(cycle(4))).graph, cycle(8))
    k3 = whitney_complex(barycentric(whitney_complex(complete(3))).graph)
    assert k3.f_vector() == (7, 12, 6)
    octa = whitney_complex(barycentric(whitney_complex(octahedron())).graph)
    assert octa.f_vector() == (26, 72, 48)


def test_barycentric_provenance_and_dimension():
    r = barycentric(whitney_complex(complete(3)))
    assert r.provenance[:3] == ((0,), (1,), (2,))
    assert r.dimension_of(6) == 2
    assert r.index()[(0, 1)] == 3


@pytest.mark.parametrize("g", [octahedron(), complete(4), wheel(5), cycle(5)])
def test_barycentric_complex_equals_clique_complex(g):
    c = whitney_complex(g)
    direct, prov = barycentric_complex(c)
    r = barycentric(c)
    assert prov == r.provenance
    assert direct == whitney_complex(r.graph)


def test_soft_whitney_examples():
    assert len(soft_whitney(whitney_complex(complete(3)))) == 7
    kept = soft_whitney(whitney_complex(octahedron()))
    assert len(kept) == 14 and all(len(s) != 2 for s in kept)
    assert soft_whitney(whitney_complex(cycle(5))) == [(i,) for i in range(5)]


def test_soft_barycentric_examples():
    assert is_isomorphic(soft_barycentric(whitney_complex(cycle(5))).graph, cycle(5))
    r = soft_barycentric(whitney_complex(icosahedron()))
    c = whitney_complex(r.graph)
    assert c.f_vector() == (32, 90, 60)
    assert classify(r.graph).kind == "sphere"
    k2 = whitney_complex(complete(2))
    assert is_isomorphic(soft_barycentric(k2).graph, path(3))
    assert is_isomorphic(soft_barycentric(k2).graph, barycentric(k2).graph)


def test_singular_faces_are_dropped():
    book = SimplicialComplex([(0, 1, 2), (0, 1, 3), (0, 1, 4)])
    r = soft_barycentric(book)
    assert (0, 1) not in r.provenance
    facets = [i for i, s in enumerate(r.provenance) if len(s) == 3]
    assert not any(r.graph.has_edge(a, b) for a, b in combinations(facets, 2))


@st.composite
def two_complexes(draw):
    n = draw(st.integers(3, 8))
    tris = list(combinations(range(n), 3))
    chosen = draw(st.lists(st.sampled_from(tris), min_size=1, max_size=8, unique=True))
    return whitney_complex(SimplicialComplex(chosen).skeleton_graph())


@given(two_complexes())
@settings(max_examples=40, deadline=None)
def test_psi_f_vector_law(c):
    if c.dim != 2:
        return
    g = barycentric(c).graph
    assert np.array_equal(np.array(whitney_complex(g).f_vector()), PSI @ np.array(c.f_vector()))


@pytest.mark.parametrize("g", [octahedron(), icosahedron(), flat_torus(4, 4), projective_plane()])
def test_phi_f_vector_law_on_closed_surfaces(g):
    c = whitney_complex(g)
    f = whitney_complex(soft_barycentric(c).graph).f_vector()
    assert np.array_equal(np.array(f), PHI @ np.array(c.f_vector()))


@pytest.mark.parametrize("g", [octahedron(), wheel(6), complete(4), join(cycle(4), cycle(4)), projective_plane()])
def test_euler_characteristic_is_invariant(g):
    chi = whitney_complex(g).euler_characteristic()
    for op in (barycentric, soft_barycentric):
        assert whitney_complex(op(whitney_complex(g)).graph).euler_characteristic() == chi


def test_edge_refine_examples():
    assert is_isomorphic(edge_refine(cycle(4), (0, 1)), cycle(5))
    g = edge_refine(complete(3), (0, 1))
    assert g.n == 4 and g.m == 5
    with pytest.raises(ValueError):
        edge_refine(cycle(4), (0, 2))


@pytest.mark.parametrize("g", [octahedron(), icosahedron(), flat_torus(4, 4), wheel(5)])
def test_refining_facet_edges_gives_strong_refinement(g):
    c = whitney_complex(g)
    bridged = refine_facet_edges(soft_barycentric(c))
    strong = barycentric(c)
    assert is_isomorphic(bridged.graph, strong.graph)
    # provenance pins the isomorphism down exactly
    pos = strong.index()
    mapped = {tuple(sorted((pos[bridged.provenance[a]], pos[bridged.provenance[b]]))) for a, b in bridged.graph.edges}
    assert mapped == set(strong.graph.edges)


def test_dual_graph_examples():
    cube = dual_graph(whitney_complex(octahedron()))
    n, edges = oracles.cube_graph()
    assert is_isomorphic(cube, Graph(n, edges))
    dodeca = dual_graph(whitney_complex(icosahedron()))
    assert dodeca.n == 20 and set(dodeca.degrees()) == {3}
    import networkx as nx

    assert nx.girth(dodeca.to_networkx()) == 5
    torus = dual_graph(whitney_complex(flat_torus(4, 4)))
    assert torus.n == 32 and set(torus.degrees()) == {3}
    assert whitney_complex(torus).dim == 1


def test_dual_graph_names_are_facets():
    d = dual_graph(whitney_complex(octahedron()))
    assert d.names == tuple(whitney_complex(octahedron()).facets)


def test_dual_circles():
    oc = whitney_complex(octahedron())
    assert all(dual_circle(oc, (v,)).n == 4 for v in range(6))
    ic = whitney_complex(icosahedron())
    assert all(dual_circle(ic, (v,)).n == 5 for v in range(12))
    s3 = whitney_complex(join(cycle(4), cycle(4)))
    assert all(dual_circle(s3, e).n == 4 for e in s3.faces[1])


def test_dual_circle_errors():
    with pytest.raises(ValueError):
        dual_circle(whitney_complex(octahedron()), (0, 1))
    w = whitney_complex(wheel(5))
    with pytest.raises(NotAManifoldError) as err:
        dual_circle(w, (0,))
    assert err.value.simplex == (0,)


@pytest.mark.parametrize("g", [wheel(4), wheel(7), complete(4)])
def test_boundary_commutes_with_refinement(g):
    c = whitney_complex(g)
    soft = whitney_complex(soft_barycentric(c).graph)
    # the boundary stays a complex: the skeleton of the boundary of K4 is K4 again
    strong_of_boundary = barycentric(boundary_complex(c)).graph
    assert is_isomorphic(boundary_graph(soft), strong_of_boundary)


def test_flat_tori_stay_flat():
    g = refine_graph(flat_torus(4, 5))
    assert set(g.degrees()) == {6}
    assert whitney_complex(g).euler_characteristic() == 0
    assert classify(g).kind == "manifold"


def test_refine_graph_iterates():
    assert refine_graph(octahedron(), 2).n == (PHI @ PHI @ np.array([6, 12, 8]))[0] == 38
    assert refine_graph(cycle(5), 3) == refine_graph(cycle(5), 1)
    assert refine_graph(complete(3), 1, soft=False).n == 7
