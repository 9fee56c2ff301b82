import pytest

from softbary import generators as gen
from softbary.graph import whitney_complex
from softbary.manifold import classify


def test_cycle():
    g = gen.generate("cycle", 5)
    assert g.n == 5 and g.m == 5


def test_flat_torus():
    g = gen.flat_torus(4, 4)
    c = whitney_complex(g)
    assert c.f_vector() == (16, 48, 32)
    assert set(g.degrees()) == {6}
    rep = classify(g)
    assert rep.kind == "manifold" and rep.dimension == 2
    assert c.euler_characteristic() == 0


def test_projective_plane():
    g = gen.projective_plane()
    c = whitney_complex(g)
    assert g.n == 31
    assert c.euler_characteristic() == 1
    rep = classify(g)
    assert rep.kind == "manifold" and rep.dimension == 2


def test_icosahedron_is_five_regular_with_antipodes():
    g = gen.icosahedron()
    assert g.m == 30 and set(g.degrees()) == {5}
    anti = gen.icosahedron_antipode()
    assert all(anti[anti[v]] == v and anti[v] != v for v in range(12))
    # antipodes are at distance 3
    assert all(anti[v] not in g.adj[v] for v in range(12))


@pytest.mark.parametrize("q", [0, 1, 2, 3])
def test_cross_polytope_is_a_sphere(q):
    g = gen.cross_polytope(q)
    rep = classify(g)
    assert rep.kind == "sphere" and rep.dimension == q


def test_wheel_layout():
    w = gen.wheel(6)
    assert w.degree(6) == 6 and w.n == 7


@pytest.mark.parametrize(
    "name, params",
    [("nope", ()), ("cycle", (2,)), ("flat-torus", (3, 4)), ("cycle", ()), ("wheel", (2,))],
)
def test_generate_errors(name, params):
    with pytest.raises(ValueError):
        gen.generate(name, *params)


def test_from_spec():
    assert gen.from_spec("flat-torus:4:5").n == 20
    j = gen.from_spec("cycle:4+cycle:4")
    assert j.n == 8 and j.m == 24
    with pytest.raises(ValueError):
        gen.from_spec("cycle:x")


def test_generators_are_deterministic():
    for name in ("icosahedron", "projective-plane", "octahedron"):
        assert gen.generate(name) == gen.generate(name)
