"""Finite simple graphs, Whitney complexes and elementary invariants.

Vertices are always the dense integers ``0..n-1``.  Original labels, when a
graph was built from arbitrary hashables (JSON input, joins, refinements), are
kept in ``Graph.names`` so serialization can round-trip them.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Sequence
from itertools import combinations

import networkx as nx

Simplex = tuple[int, ...]


class Graph:
    """Immutable finite simple graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "names", "_edges")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        names: Sequence[Hashable] | None = None,
    ):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a}, {b}) has an endpoint outside 0..{n - 1}")
            nbrs[a].add(b)
            nbrs[b].add(a)
        if names is not None:
            names = tuple(names)
            if len(names) != n or len(set(names)) != n:
                raise ValueError("names must be n distinct labels")
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in nbrs)
        self.names = names
        self._edges: list[tuple[int, int]] | None = None

    @classmethod
    def from_labels(
        cls, vertices: Sequence[Hashable], edges: Iterable[tuple[Hashable, Hashable]]
    ) -> Graph:
        """Build from arbitrary labels; vertex order is the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise ValueError("duplicate vertex label")
        try:
            pairs = [(index[a], index[b]) for a, b in edges]
        except KeyError as exc:
            raise ValueError(f"edge endpoint {exc.args[0]!r} is not a listed vertex") from None
        plain = all(isinstance(v, int) and v == i for i, v in enumerate(vertices))
        return cls(len(vertices), pairs, None if plain else vertices)

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> Graph:
        return cls.from_labels(list(g.nodes), g.edges)

    def to_networkx(self) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from(self.edges)
        return h

    @property
    def edges(self) -> list[tuple[int, int]]:
        if self._edges is None:
            self._edges = [(a, b) for a in range(self.n) for b in sorted(self.adj[a]) if a < b]
        return self._edges

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def label(self, v: int) -> Hashable:
        return v if self.names is None else self.names[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adj]

    def has_edge(self, a: int, b: int) -> bool:
        return b in self.adj[a]

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph; new vertex i is the i-th of ``sorted(vertices)``."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[a], index[b]) for a in keep for b in self.adj[a] if b in index and a < b]
        return Graph(len(keep), edges, [self.label(v) for v in keep])

    def remove_vertex(self, v: int) -> Graph:
        return self.induced(w for w in range(self.n) if w != v)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(_component(self.adj, 0, range(self.n))) == self.n

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for v in range(self.n):
            if v not in seen:
                comp = _component(self.adj, v, range(self.n))
                seen |= comp
                out.append(sorted(comp))
        return out

    def relabeled(self) -> Graph:
        """Same graph with the integer labels as names (drops provenance names)."""
        return Graph(self.n, self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _component(adj: Sequence[Iterable[int]], start: int, allowed: Iterable[int]) -> set[int]:
    allowed = set(allowed)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w in allowed and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


class SimplicialComplex:
    """Finite abstract simplicial complex over integer vertices.

    Simplices are sorted integer tuples, stored per dimension in sorted order.
    With ``close=True`` (default) every non-empty subset of an input simplex is
    added; pass ``close=False`` only when the input is already closed.
    """

    __slots__ = ("faces", "_members")

    def __init__(self, simplices: Iterable[Iterable[int]], close: bool = True):
        members: set[Simplex] = set()
        for s in simplices:
            t = tuple(sorted(set(s)))
            if not t:
                continue
            if close:
                if t in members:
                    continue
                for k in range(1, len(t) + 1):
                    members.update(combinations(t, k))
            else:
                members.add(t)
        q = max((len(s) for s in members), default=0) - 1
        faces: list[list[Simplex]] = [[] for _ in range(q + 1)]
        for s in members:
            faces[len(s) - 1].append(s)
        for layer in faces:
            layer.sort()
        self.faces = faces
        self._members = members

    @property
    def dim(self) -> int:
        """Maximal dimension q; -1 for the empty complex."""
        return len(self.faces) - 1

    @property
    def facets(self) -> list[Simplex]:
        return self.faces[-1] if self.faces else []

    @property
    def vertices(self) -> list[int]:
        return [s[0] for s in self.faces[0]] if self.faces else []

    def __contains__(self, s: Iterable[int]) -> bool:
        return tuple(sorted(s)) in self._members

    def __iter__(self):
        for layer in self.faces:
            yield from layer

    def __len__(self) -> int:
        return len(self._members)

    def simplices(self) -> list[Simplex]:
        return [s for layer in self.faces for s in layer]

    def f_vector(self) -> tuple[int, ...]:
        return f_vector(self)

    def euler_characteristic(self) -> int:
        return euler_characteristic(self)

    def is_pure(self) -> bool:
        """Every simplex lies in some facet of dimension q."""
        if not self.faces:
            return True
        covered: set[Simplex] = set()
        for t in self.facets:
            for k in range(1, len(t) + 1):
                covered.update(combinations(t, k))
        return len(covered) == len(self._members)

    def skeleton_graph(self) -> Graph:
        """1-skeleton on vertices re-indexed in sorted order; names keep the originals."""
        verts = self.vertices
        index = {v: i for i, v in enumerate(verts)}
        edges = [(index[a], index[b]) for a, b in (self.faces[1] if self.dim >= 1 else [])]
        plain = all(v == i for i, v in enumerate(verts))
        return Graph(len(verts), edges, None if plain else verts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._members == other._members

    def __repr__(self) -> str:
        return f"SimplicialComplex(f={f_vector(self)})"


def whitney_complex(g: Graph) -> SimplicialComplex:
    """All cliques of ``g`` as a simplicial complex (the flag complex)."""
    higher = [frozenset(w for w in g.adj[v] if w > v) for v in range(g.n)]
    out: list[Simplex] = []

    def extend(prefix: Simplex, cand: frozenset[int]) -> None:
        for w in sorted(cand):
            t = prefix + (w,)
            out.append(t)
            rest = cand & higher[w]
            if rest:
                extend(t, rest)

    for v in range(g.n):
        out.append((v,))
        extend((v,), higher[v])
    return SimplicialComplex(out, close=False)


def clique_number(g: Graph) -> int:
    return whitney_complex(g).dim + 1


def f_vector(c: SimplicialComplex) -> tuple[int, ...]:
    return tuple(len(layer) for layer in c.faces)


def euler_characteristic(c: SimplicialComplex) -> int:
    return sum((-1) ** k * n for k, n in enumerate(f_vector(c)))


def unit_sphere(g: Graph, v: int) -> Graph:
    """Subgraph induced by the neighbours of ``v``."""
    if not 0 <= v < g.n:
        raise ValueError(f"unknown vertex {v}")
    return g.induced(g.adj[v])


def graph_join(*graphs: Graph) -> Graph:
    """Disjoint union of the inputs plus every edge between different inputs.

    The result's names are ``(part, vertex)`` pairs.
    """
    offsets = []
    total = 0
    for h in graphs:
        offsets.append(total)
        total += h.n
    edges: list[tuple[int, int]] = []
    for off, h in zip(offsets, graphs):
        edges.extend((a + off, b + off) for a, b in h.edges)
    for i, j in combinations(range(len(graphs)), 2):
        gi, gj = graphs[i], graphs[j]
        edges.extend(
            (a + offsets[i], b + offsets[j]) for a in range(gi.n) for b in range(gj.n)
        )
    names = [(p, v) for p, h in enumerate(graphs) for v in range(h.n)]
    return Graph(total, edges, names)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    off = 0
    for h in graphs:
        edges.extend((a + off, b + off) for a, b in h.edges)
        off += h.n
    return Graph(off, edges)


def graph_distance(g: Graph, h: Graph) -> int:
    """Size of the symmetric difference of the edge sets (same vertex set)."""
    if g.n != h.n:
        raise ValueError(
            f"graphs live on different vertex sets ({g.n} vs {h.n} vertices); "
            "host-graph minimisation is not supported"
        )
    return len(set(g.edges) ^ set(h.edges))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test (VF2 after cheap invariant screening)."""
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return nx.is_isomorphic(g.to_networkx(), h.to_networkx())


def fingerprint(g: Graph) -> str:
    """Isomorphism-invariant hash (Weisfeiler-Lehman refinement of degrees)."""
    return nx.weisfeiler_lehman_graph_hash(g.to_networkx(), iterations=4)
