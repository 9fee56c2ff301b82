"""Deterministic labeled graph generators for the test corpus."""

from __future__ import annotations

import math
from itertools import combinations, product

from .graph import Graph, graph_join, whitney_complex


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def edgeless(n: int) -> Graph:
    return Graph(n)


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def wheel(rim: int) -> Graph:
    """Rim vertices 0..rim-1, hub ``rim``."""
    if rim < 3:
        raise ValueError("wheel needs a rim of at least 3")
    edges = [(i, (i + 1) % rim) for i in range(rim)] + [(i, rim) for i in range(rim)]
    return Graph(rim + 1, edges)


def cross_polytope(q: int) -> Graph:
    """Boundary of the (q+1)-dimensional cross polytope, a q-sphere.

    Vertex ``i`` and ``i + q + 1`` are antipodal; every other pair is an edge.
    """
    if q < 0:
        raise ValueError("cross polytope needs q >= 0")
    k = q + 1
    return Graph(2 * k, [(a, b) for a, b in combinations(range(2 * k), 2) if b - a != k])


def octahedron() -> Graph:
    return cross_polytope(2)


def _icosahedron_points() -> list[tuple[float, float, float]]:
    phi = (1 + math.sqrt(5)) / 2
    pts = []
    for a, b in product((-1.0, 1.0), repeat=2):
        pts += [(0.0, a, b * phi), (a, b * phi, 0.0), (b * phi, 0.0, a)]
    return sorted(pts)


def icosahedron() -> Graph:
    pts = _icosahedron_points()
    edges = [
        (i, j)
        for i, j in combinations(range(12), 2)
        if abs(math.dist(pts[i], pts[j]) - 2.0) < 1e-9
    ]
    return Graph(12, edges)


def icosahedron_antipode() -> list[int]:
    pts = _icosahedron_points()
    index = {tuple(round(c, 9) for c in p): i for i, p in enumerate(pts)}
    return [index[tuple(round(-c, 9) for c in p)] for p in pts]


def flat_torus(m: int, n: int) -> Graph:
    """Triangulated C_m x C_n: vertex (i, j) -> i*n + j, diagonals (i,j)-(i+1,j+1)."""
    if m < 4 or n < 4:
        raise ValueError("flat torus needs m, n >= 4")
    edges = set()
    for i in range(m):
        for j in range(n):
            v = i * n + j
            for di, dj in ((1, 0), (0, 1), (1, 1)):
                w = ((i + di) % m) * n + (j + dj) % n
                edges.add((min(v, w), max(v, w)))
    return Graph(m * n, sorted(edges))


def projective_plane() -> Graph:
    """Antipodal quotient of the Barycentric refinement of the icosahedron.

    31 vertices (6 vertex pairs, 15 edge pairs, 10 triangle pairs).
    """
    ico = icosahedron()
    anti = icosahedron_antipode()
    simplices = whitney_complex(ico).simplices()

    def image(s):
        return tuple(sorted(anti[v] for v in s))

    orbit = {s: min(s, image(s)) for s in simplices}
    reps = sorted(set(orbit.values()), key=lambda s: (len(s), s))
    index = {s: i for i, s in enumerate(reps)}
    edges = set()
    for s in simplices:
        for k in range(1, len(s)):
            for t in combinations(s, k):
                a, b = index[orbit[t]], index[orbit[s]]
                edges.add((min(a, b), max(a, b)))
    return Graph(len(reps), sorted(edges))


def join(*parts: Graph | str) -> Graph:
    graphs = [p if isinstance(p, Graph) else from_spec(p) for p in parts]
    if not graphs:
        raise ValueError("join needs at least one part")
    return graph_join(*graphs)


_GENERATORS = {
    "cycle": cycle,
    "path": path,
    "edgeless": edgeless,
    "complete": complete,
    "wheel": wheel,
    "octahedron": octahedron,
    "icosahedron": icosahedron,
    "cross-polytope": cross_polytope,
    "flat-torus": flat_torus,
    "projective-plane": projective_plane,
    "join": join,
}

NAMES = tuple(sorted(_GENERATORS))


def generate(name: str, *params) -> Graph:
    """Generate a corpus graph by name, e.g. ``generate("flat-torus", 4, 4)``."""
    try:
        fn = _GENERATORS[name]
    except KeyError:
        raise ValueError(f"unknown generator {name!r}; choose from {', '.join(NAMES)}") from None
    try:
        return fn(*params)
    except TypeError as exc:
        raise ValueError(f"bad parameters for {name}: {params!r}") from exc


def from_spec(spec: str) -> Graph:
    """Parse ``"cycle:5"``, ``"flat-torus:4:4"`` or ``"cycle:5+cycle:5"`` (join)."""
    spec = spec.strip()
    if "+" in spec:
        return join(*spec.split("+"))
    name, *raw = spec.split(":")
    try:
        params = [int(p) for p in raw]
    except ValueError:
        raise ValueError(f"non-integer parameter in {spec!r}") from None
    return generate(name, *params)
