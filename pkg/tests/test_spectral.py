import math
import random
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from softbary.generators import complete, cycle, edgeless, flat_torus, icosahedron, octahedron, projective_plane, wheel
from softbary.graph import Graph, graph_distance, whitney_complex
from softbary.refine import refine_graph
from softbary.spectral import (
    DenseCapExceeded,
    DosHistogram,
    SpectralSummary,
    bareiss_det,
    convergence_experiment,
    dos,
    dos_from_counts,
    dos_l1,
    eigenvalues,
    hex_dos,
    hex_symbol,
    kirchhoff,
    mass_l1,
    potential,
    spectral_count,
    spectral_function_l1,
    tree_forest,
)


def random_graph(n, p, rng):
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def summary(vals):
    return SpectralSummary(np.sort(np.asarray(vals, dtype=float)))


def test_kirchhoff_examples():
    assert np.array_equal(kirchhoff(complete(2)).toarray(), [[1, -1], [-1, 1]])
    assert np.all(np.diag(kirchhoff(cycle(4)).toarray()) == 2)
    assert np.all(np.diag(kirchhoff(complete(4)).toarray()) == 3)


@given(st.integers(1, 25), st.floats(0, 1), st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_kirchhoff_rows_sum_to_zero_and_trace_is_twice_edges(n, p, seed):
    g = random_graph(n, p, random.Random(seed))
    k = kirchhoff(g).toarray()
    assert np.array_equal(k, oracles.laplacian(g.n, g.edges))
    assert np.all(k.sum(axis=1) == 0)
    lam = eigenvalues(g).eigenvalues
    assert lam[0] == pytest.approx(0, abs=1e-9)
    assert lam.sum() == pytest.approx(2 * g.m, rel=1e-8, abs=1e-8)
    assert lam[-1] <= 2 * max(g.degrees()) + 1e-9


def test_eigenvalue_examples():
    assert np.allclose(eigenvalues(complete(5)).eigenvalues, [0, 5, 5, 5, 5])
    assert np.allclose(eigenvalues(cycle(4)).eigenvalues, [0, 2, 2, 4])
    assert np.allclose(eigenvalues(complete(2)).eigenvalues, [0, 2])


def test_dense_cap(monkeypatch):
    monkeypatch.setenv("SOFTBARY_DENSE_CAP", "10")
    with pytest.raises(DenseCapExceeded):
        eigenvalues(cycle(11))
    assert eigenvalues(cycle(10)).n == 10


@pytest.mark.parametrize("g", [octahedron(), icosahedron(), flat_torus(4, 4), projective_plane(), wheel(7)])
def test_largest_eigenvalue_bound_on_corpus(g):
    assert eigenvalues(g).eigenvalues[-1] <= 2 * max(g.degrees()) + 1e-9


def test_spectral_count_examples():
    assert spectral_count(kirchhoff(complete(4)), 1).count == 1
    assert spectral_count(kirchhoff(cycle(4)), 3).count == 3


def test_spectral_count_on_an_eigenvalue_shifts_down():
    res = spectral_count(kirchhoff(cycle(4)), 2.0)
    assert res.shift != 2.0 and abs(res.shift - 2.0) < 1e-6
    assert res.count == (1 if res.shift < 2 else 3)


@pytest.mark.parametrize("seed", range(20))
def test_spectral_count_matches_dense_counts(seed):
    rng = random.Random(seed)
    g = random_graph(rng.randint(20, 200), rng.uniform(0.02, 0.2), rng)
    lam = np.linalg.eigvalsh(oracles.laplacian(g.n, g.edges))
    m = kirchhoff(g)
    for t in np.linspace(-0.5, 2 * max(max(g.degrees()), 1) + 0.5, 100):
        res = spectral_count(m, float(t))
        assert res.count == int(np.sum(lam < res.shift))


def test_spectral_function_l1_examples():
    a = eigenvalues(cycle(4))
    assert spectral_function_l1(a, a) == 0
    chord = eigenvalues(Graph(4, cycle(4).edges + [(0, 2)]))
    assert spectral_function_l1(a, chord) <= 4 * 1 / 4
    assert spectral_function_l1(eigenvalues(complete(2)), eigenvalues(edgeless(2))) == pytest.approx(1.0)


@given(
    st.lists(st.floats(0, 10), min_size=1, max_size=12),
    st.lists(st.floats(0, 10), min_size=1, max_size=12),
)
@settings(max_examples=60, deadline=None)
def test_exact_l1_matches_sampling(a, b):
    exact = spectral_function_l1(summary(a), summary(b))
    # the midpoint rule is exact on breakpoints that are multiples of 1/samples
    samples = 27720  # lcm(1..12)
    assert exact == pytest.approx(oracles.sampled_l1(a, b, samples), abs=1e-9)


@pytest.mark.parametrize("seed", range(200))
def test_lidskii_bound(seed):
    rng = random.Random(1000 + seed)
    n = rng.randint(2, 40)
    g = random_graph(n, rng.uniform(0.05, 0.5), rng)
    flips = rng.sample(list(combinations(range(n), 2)), k=rng.randint(1, min(10, n * (n - 1) // 2)))
    edges = set(g.edges) ^ set(flips)
    h = Graph(n, sorted(edges))
    la, lb = eigenvalues(g).eigenvalues, eigenvalues(h).eigenvalues
    assert np.sum(np.abs(la - lb)) <= 4 * graph_distance(g, h) + 1e-6


def test_dos_examples():
    h = dos(eigenvalues(complete(2)), 2, 0, 2)
    assert np.allclose(h.masses, [0.5, 0.5])
    h = dos(eigenvalues(icosahedron()), 64)
    assert h.masses.sum() == pytest.approx(1, abs=1e-12)
    with pytest.raises(ValueError):
        dos(eigenvalues(cycle(4)), 0)


def test_dos_by_counting_matches_dense():
    g = refine_graph(flat_torus(4, 4), 1)
    m = kirchhoff(g)
    a = dos(eigenvalues(m), 32, 0, 9)
    b = dos_from_counts(m, 32, 0, 9)
    assert np.allclose(a.masses, b.masses)


def test_hex_symbol_range_and_critical_values():
    t = np.linspace(0, 2 * np.pi, 301)
    f = hex_symbol(t[:, None], t[None, :])
    assert f.min() >= -1e-12 and f.max() <= 9 + 1e-12
    assert hex_symbol(np.array(0.0), np.array(0.0)) == pytest.approx(0)
    assert hex_symbol(np.array(2 * np.pi / 3), np.array(2 * np.pi / 3)) == pytest.approx(9)
    assert hex_symbol(np.array(np.pi), np.array(0.0)) == pytest.approx(8)


def test_hex_dos():
    h = hex_dos(200, 90)
    assert h.integrated()[-1] == pytest.approx(1)
    assert 7.5 <= h.peak_bin()[0] <= 8.5
    with pytest.raises(ValueError):
        hex_dos(8, 10)


def test_histogram_distances():
    edges = np.linspace(0, 1, 5)
    a = DosHistogram(edges, np.array([1.0, 0, 0, 0]))
    b = DosHistogram(edges, np.array([0, 0, 0, 1.0]))
    assert mass_l1(a, b) == pytest.approx(2)
    assert dos_l1(a, b) == pytest.approx(0.75)
    assert dos_l1(a, a) == 0
    with pytest.raises(ValueError):
        dos_l1(a, DosHistogram(np.linspace(0, 1, 3), np.array([0.5, 0.5])))


@given(st.lists(st.lists(st.integers(-6, 6), min_size=5, max_size=5), min_size=5, max_size=5), st.integers(1, 5))
@settings(max_examples=60, deadline=None)
def test_bareiss_matches_fraction_elimination(rows, k):
    mat = [r[:k] for r in rows[:k]]
    assert bareiss_det(mat) == oracles.fraction_det(mat)


def test_tree_forest_examples():
    r = tree_forest(complete(4))
    assert r.pseudo_det_exact == 64 == 4 * oracles.spanning_trees(4, complete(4).edges)
    assert tree_forest(complete(2)).forest_det_exact == 3


def all_connected_small_graphs(count, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, 6)
        g = random_graph(n, rng.uniform(0.3, 0.9), rng)
        if g.is_connected():
            out.append(g)
    return out


@pytest.mark.parametrize("g", all_connected_small_graphs(40, 5))
def test_matrix_tree_and_forest_theorems(g):
    r = tree_forest(g)
    assert r.pseudo_det_exact == g.n * oracles.spanning_trees(g.n, g.edges)
    assert r.forest_det_exact == oracles.rooted_forests(g.n, g.edges)
    assert math.exp(r.pseudo_det_log) == pytest.approx(r.pseudo_det_exact, rel=1e-9)
    assert math.exp(r.forest_det_log) == pytest.approx(r.forest_det_exact, rel=1e-9)
    assert r.tau > 1 or g.n == 1


def test_tree_forest_disconnected_is_flagged():
    r = tree_forest(Graph(4, [(0, 1), (2, 3)]))
    assert not r.connected and r.zero_modes == 2
    assert r.pseudo_det_exact == 4


def test_potential_examples():
    k2 = eigenvalues(complete(2))
    p = potential(k2, 0)
    assert p.value == pytest.approx(-0.5 * math.log(2)) and p.omitted == 1
    assert potential(k2, -1).value == pytest.approx(-0.5 * (math.log(1) + math.log(3)))
    assert potential(eigenvalues(cycle(4)), 0).value == pytest.approx(-0.25 * (2 * math.log(2) + math.log(4)))


def test_potential_gives_tree_and_forest_indices():
    g = wheel(6)
    lam = eigenvalues(g)
    r = tree_forest(g)
    assert potential(lam, 0).value == pytest.approx(-r.pseudo_det_log / g.n)
    assert potential(lam, -1).value == pytest.approx(-r.forest_det_log / g.n)


def test_convergence_on_torus_decreases():
    rep = convergence_experiment(flat_torus(4, 4), 3)
    d = rep.l1_distances
    assert len(d) == 3 and all(a > b for a, b in zip(d, d[1:]))
    assert [s.n for s in rep.steps] == [16, 48, 144, 432]
    assert rep.final_dos.masses.sum() == pytest.approx(1)


def test_convergence_fixed_point():
    rep = convergence_experiment(cycle(5), 2)
    assert all(d == pytest.approx(0, abs=1e-12) for d in rep.l1_distances)


def test_convergence_counting_mode_agrees():
    dense = convergence_experiment(octahedron(), 2)
    counted = convergence_experiment(octahedron(), 2, counting=True)
    assert counted.steps[-1].spectrum is None
    # area between integrated densities on a 512-point grid over [0, 2 dmax]
    for a, b in zip(dense.l1_distances, counted.l1_distances):
        assert b == pytest.approx(a, abs=0.01)


def test_convergence_rejects_short_runs():
    with pytest.raises(ValueError):
        convergence_experiment(cycle(5), 1)
