"""Strong and soft Barycentric refinement, face classification and duals."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph, Simplex, SimplicialComplex, whitney_complex


class NotAManifoldError(ValueError):
    """A local structure that must be a circle in a manifold is not one."""

    def __init__(self, message: str, simplex: Simplex | None = None):
        super().__init__(message)
        self.simplex = simplex


@dataclass(frozen=True)
class FaceClassification:
    """Codimension-one faces of a complex sorted by how many facets contain them.

    ``free`` holds (q-1)-faces lying in no facet at all; they only occur in
    non-pure complexes.
    """

    q: int
    facets: list[Simplex]
    boundary: list[Simplex]
    interior: list[Simplex]
    singular: list[Simplex]
    free: list[Simplex] = field(default_factory=list)
    cofaces: dict[Simplex, list[Simplex]] = field(default_factory=dict, repr=False)

    @property
    def pure(self) -> bool:
        return not self.free


@dataclass(frozen=True)
class RefinedGraph:
    """A refined graph whose vertex ``i`` stands for simplex ``provenance[i]``."""

    graph: Graph
    provenance: tuple[Simplex, ...]
    pure: bool = True

    def dimension_of(self, v: int) -> int:
        return len(self.provenance[v]) - 1

    def index(self) -> dict[Simplex, int]:
        return {s: i for i, s in enumerate(self.provenance)}

    def complex(self) -> SimplicialComplex:
        return whitney_complex(self.graph)


def classify_faces(c: SimplicialComplex) -> FaceClassification:
    q = c.dim
    if q < 1:
        return FaceClassification(q, list(c.facets), [], [], [], [], {})
    cofaces: dict[Simplex, list[Simplex]] = defaultdict(list)
    for t in c.facets:
        for i in range(len(t)):
            cofaces[t[:i] + t[i + 1 :]].append(t)
    boundary, interior, singular, free = [], [], [], []
    for f in c.faces[q - 1]:
        k = len(cofaces.get(f, ()))
        if k == 0:
            free.append(f)
        elif k == 1:
            boundary.append(f)
        elif k == 2:
            interior.append(f)
        else:
            singular.append(f)
    return FaceClassification(q, list(c.facets), boundary, interior, singular, free, dict(cofaces))


def _sort_key(s: Simplex):
    return (len(s), s)


def _containment_edges(verts: list[Simplex], index: dict[Simplex, int]) -> list[tuple[int, int]]:
    edges = []
    for s in verts:
        i = index[s]
        for k in range(1, len(s)):
            for t in combinations(s, k):
                j = index.get(t)
                if j is not None:
                    edges.append((j, i))
    return edges


def barycentric(c: SimplicialComplex) -> RefinedGraph:
    """Graph on all simplices, joining strictly nested pairs."""
    verts = sorted(c.simplices(), key=_sort_key)
    index = {s: i for i, s in enumerate(verts)}
    g = Graph(len(verts), _containment_edges(verts, index))
    return RefinedGraph(g, tuple(verts))


def barycentric_complex(c: SimplicialComplex) -> tuple[SimplicialComplex, tuple[Simplex, ...]]:
    """Order complex of the face poset, built from chains.

    Equals ``whitney_complex(barycentric(c).graph)`` without clique search;
    vertex ``i`` of the result stands for the ``i``-th simplex in
    ``(dimension, simplex)`` order, which is the returned provenance.
    """
    verts = sorted(c.simplices(), key=_sort_key)
    index = {s: i for i, s in enumerate(verts)}
    # every chain is (chain ending at a proper face t of s) + s, for a unique t
    ending: list[list[Simplex]] = []
    out: list[Simplex] = []
    for s in verts:
        i = index[s]
        chains = [(i,)]
        for k in range(1, len(s)):
            for t in combinations(s, k):
                chains.extend(ch + (i,) for ch in ending[index[t]])
        ending.append(chains)
        out.extend(chains)
    return SimplicialComplex(out, close=False), tuple(verts)


def _is_closed_one_manifold(fc: FaceClassification) -> bool:
    return fc.q == 1 and not (fc.boundary or fc.singular or fc.free)


def soft_whitney(c: SimplicialComplex, faces: FaceClassification | None = None) -> list[Simplex]:
    """Simplices kept by the soft refinement.

    Every simplex of dimension other than q-1, plus the boundary faces.  Free
    (q-1)-faces of non-pure complexes are kept like boundary faces.  Closed
    1-manifolds and 0-dimensional complexes are fixed points, so for them the
    vertex set is returned.
    """
    fc = faces or classify_faces(c)
    q = fc.q
    if q <= 0 or _is_closed_one_manifold(fc):
        return list(c.faces[0]) if c.faces else []
    kept = [s for k, layer in enumerate(c.faces) if k != q - 1 for s in layer]
    kept += fc.boundary + fc.free
    return sorted(kept, key=_sort_key)


def soft_barycentric(c: SimplicialComplex) -> RefinedGraph:
    """Soft refinement: soft-Whitney simplices, joined by strict containment or
    by sharing an interior face (for two facets).  Singular faces add nothing.
    """
    fc = classify_faces(c)
    verts = soft_whitney(c, fc)
    if fc.q <= 0 or _is_closed_one_manifold(fc):
        g = c.skeleton_graph().relabeled()
        return RefinedGraph(g, tuple(verts), fc.pure)
    index = {s: i for i, s in enumerate(verts)}
    edges = _containment_edges(verts, index)
    for f in fc.interior:
        a, b = fc.cofaces[f]
        edges.append((index[a], index[b]))
    return RefinedGraph(Graph(len(verts), edges), tuple(verts), fc.pure)


def refine_graph(g: Graph, steps: int = 1, soft: bool = True) -> Graph:
    """Iterate soft (default) or strong refinement on a graph's Whitney complex."""
    op = soft_barycentric if soft else barycentric
    for _ in range(steps):
        g = op(whitney_complex(g)).graph
    return g


def edge_refine(g: Graph, e: tuple[int, int]) -> Graph:
    """Replace edge (a, b) by a new vertex joined to a, b and their common neighbours."""
    a, b = e
    if not (0 <= a < g.n and 0 <= b < g.n) or not g.has_edge(a, b):
        raise ValueError(f"{e} is not an edge")
    new = g.n
    edges = [x for x in g.edges if x != (min(a, b), max(a, b))]
    edges += [(w, new) for w in sorted(g.adj[a] & g.adj[b] | {a, b})]
    return Graph(g.n + 1, edges)


def refine_facet_edges(r: RefinedGraph) -> RefinedGraph:
    """Edge-refine every facet-facet edge of a soft refinement.

    The new vertex for facets A, B gets provenance A & B; for a manifold the
    result equals the strong refinement under provenance.
    """
    g = r.graph
    q = max((len(s) for s in r.provenance), default=0) - 1
    prov = list(r.provenance)
    adj = [set(s) for s in g.adj]
    for a, b in g.edges:
        if len(prov[a]) == q + 1 and len(prov[b]) == q + 1:
            new = len(adj)
            attach = adj[a] & adj[b] | {a, b}
            adj[a].discard(b)
            adj[b].discard(a)
            adj.append(set(attach))
            for w in attach:
                adj[w].add(new)
            prov.append(tuple(sorted(set(prov[a]) & set(prov[b]))))
    edges = [(v, w) for v in range(len(adj)) for w in adj[v] if v < w]
    return RefinedGraph(Graph(len(adj), edges), tuple(prov), r.pure)


def dual_graph(c: SimplicialComplex) -> Graph:
    """Facets as vertices, adjacent when they share a (q-1)-face.

    Vertex ``i`` is the ``i``-th facet in sorted order; ``names`` holds the facets.
    """
    facets = c.facets
    index = {t: i for i, t in enumerate(facets)}
    fc = classify_faces(c)
    edges = set()
    for f, cof in fc.cofaces.items():
        for a, b in combinations(cof, 2):
            i, j = index[a], index[b]
            edges.add((min(i, j), max(i, j)))
    return Graph(len(facets), sorted(edges), facets)


def neighbor_sets(c: SimplicialComplex) -> dict[int, set[int]]:
    nbrs: dict[int, set[int]] = {v: set() for v in c.vertices}
    if c.dim >= 1:
        for a, b in c.faces[1]:
            nbrs[a].add(b)
            nbrs[b].add(a)
    return nbrs


def _link_vertices(nbrs: dict[int, set[int]], x: Simplex) -> set[int]:
    common = set(nbrs[x[0]])
    for v in x[1:]:
        common &= nbrs[v]
    return common


def _as_cycle(nbrs: dict[int, set[int]], verts: set[int]) -> Graph | None:
    ordered = sorted(verts)
    index = {v: i for i, v in enumerate(ordered)}
    edges = [(index[a], index[b]) for a in ordered for b in nbrs[a] & verts if a < b]
    g = Graph(len(ordered), edges, ordered)
    if g.n >= 4 and all(d == 2 for d in g.degrees()) and g.is_connected():
        return g
    return None


def dual_circle(c: SimplicialComplex, x: Simplex, nbrs: dict[int, set[int]] | None = None) -> Graph:
    """Intersection of the unit spheres of the vertices of a (q-2)-simplex.

    In a q-manifold this is a cycle; its length is the returned graph's ``n``
    (for q = 3 it is the number of tetrahedra around the edge ``x``).
    """
    x = tuple(sorted(x))
    if len(x) != c.dim - 1:
        raise ValueError(f"{x} is not a (q-2)-simplex of a {c.dim}-dimensional complex")
    if x not in c:
        raise ValueError(f"{x} is not a simplex of the complex")
    nbrs = nbrs if nbrs is not None else neighbor_sets(c)
    circle = _as_cycle(nbrs, _link_vertices(nbrs, x))
    if circle is None:
        raise NotAManifoldError(f"dual of {x} is not a cycle: not a manifold at {x}", x)
    return circle


def boundary_complex(c: SimplicialComplex) -> SimplicialComplex:
    """Closure of the boundary faces."""
    return SimplicialComplex(classify_faces(c).boundary)


def boundary_graph(c: SimplicialComplex) -> Graph:
    """1-skeleton of the boundary complex; ``names`` are the original vertices."""
    return boundary_complex(c).skeleton_graph()
