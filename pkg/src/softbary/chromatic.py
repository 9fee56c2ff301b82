"""Colorings: exact chromatic numbers, acyclic dual 3-colorings, forest covers,
colorings of soft refinements, and Fisk complexes."""

from __future__ import annotations

import random
import sys
from collections import Counter, deque
from contextlib import contextmanager
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .graph import Graph, Simplex, SimplicialComplex, clique_number
from .manifold import classify
from .refine import (
    RefinedGraph,
    classify_faces,
    dual_graph,
    neighbor_sets,
    _as_cycle,
    _link_vertices,
    NotAManifoldError,
    soft_barycentric,
)

DEFAULT_BUDGET = 1_000_000
EXHAUSTIVE_LIMIT = 40


class BudgetExhausted(RuntimeError):
    pass


class ColoringFailure(RuntimeError):
    """No coloring with the requested properties was found; ``report`` says why."""

    def __init__(self, message: str, report: dict):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int | None, ...]
    meta: dict = field(default_factory=dict, compare=False)

    @classmethod
    def from_mapping(cls, n: int, mapping: dict[int, int]) -> Coloring:
        return cls(tuple(mapping.get(v) for v in range(n)))

    @property
    def color_count(self) -> int:
        return len({c for c in self.colors if c is not None})

    @property
    def is_total(self) -> bool:
        return all(c is not None for c in self.colors)

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.colors):
            out.setdefault(c, []).append(v)
        return out

    def __getitem__(self, v: int) -> int | None:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)


@dataclass(frozen=True)
class ChromaticResult:
    lower: int
    upper: int
    coloring: Coloring
    nodes: int

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> int | None:
        return self.upper if self.exact else None


@dataclass(frozen=True)
class ForestCover:
    parts: list[list[int]]


@dataclass(frozen=True)
class FiskComplex:
    q: int
    simplices: list[Simplex]
    components: list[SimplicialComplex]
    pieces: list[SimplicialComplex] | None = None

    @property
    def empty(self) -> bool:
        return not self.simplices


@dataclass(frozen=True)
class EdgeCensus:
    """Edge degrees of a 3-complex, split into interior and boundary edges.

    ``interior``/``boundary`` count facets containing the edge.  The
    ``sphere_*`` tables use the size of the dual sphere S(a) & S(b) instead,
    which agrees with the facet count inside and exceeds it by one on the
    boundary.
    """

    interior: dict[int, int]
    boundary: dict[int, int]
    sphere_interior: dict[int, int]
    sphere_boundary: dict[int, int]

    @property
    def sphere_all(self) -> dict[int, int]:
        total = Counter(self.sphere_interior) + Counter(self.sphere_boundary)
        return dict(sorted(total.items()))

    def as_dict(self) -> dict:
        return {
            "interior": self.interior,
            "boundary": self.boundary,
            "dualSphere": {
                "interior": self.sphere_interior,
                "boundary": self.sphere_boundary,
                "all": self.sphere_all,
            },
        }


def verify_coloring(g: Graph, col: Coloring) -> bool:
    if len(col) != g.n or not col.is_total:
        raise ValueError("coloring is partial")
    return all(col.colors[a] != col.colors[b] for a, b in g.edges)


def is_eulerian(g: Graph) -> bool:
    return all(d % 2 == 0 for d in g.degrees())


class _UnionFind:
    """Union by size without path compression, so unions can be undone."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.history: list[tuple[int, int]] = []

    def find(self, v: int) -> int:
        while self.parent[v] != v:
            v = self.parent[v]
        return v

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.history.append((ra, rb))
        return True

    def mark(self) -> int:
        return len(self.history)

    def rollback(self, mark: int) -> None:
        while len(self.history) > mark:
            ra, rb = self.history.pop()
            self.parent[rb] = rb
            self.size[ra] -= self.size[rb]


def _acyclic(vertices: Iterable[int], edges: Iterable[tuple[int, int]], n: int) -> bool:
    uf = _UnionFind(n)
    return all(uf.union(a, b) for a, b in edges)


def bichromatic_cycles(g: Graph, col: Coloring) -> list[tuple[int, int]]:
    """Color pairs whose two-colored induced subgraph contains a cycle."""
    if not verify_coloring(g, col):
        raise ValueError("coloring is not proper")
    used = sorted({c for c in col.colors})
    bad = []
    for a, b in combinations(used, 2):
        edges = [(x, y) for x, y in g.edges if {col[x], col[y]} == {a, b}]
        if not _acyclic((), edges, g.n):
            bad.append((a, b))
    return bad


def kempe_free(g: Graph, col: Coloring) -> bool:
    """True iff every two-colored induced subgraph is a forest (no Kempe cycles)."""
    return not bichromatic_cycles(g, col)


@contextmanager
def _deep_recursion(depth: int):
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, depth + 1000))
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


class _Search:
    """DSATUR backtracking for k-colorings, optionally keeping some color pairs acyclic.

    ``prefer`` maps a vertex to a function giving its preferred color order
    from the partial coloring; otherwise colors are tried in increasing order.
    """

    def __init__(
        self,
        adj: Sequence[frozenset[int]],
        k: int,
        budget: int,
        acyclic_pairs: Iterable[tuple[int, int]] = (),
        prefer=None,
    ):
        self.adj = adj
        self.n = len(adj)
        self.k = k
        self.budget = budget
        self.nodes = 0
        self.color = [-1] * self.n
        self.seen = [[0] * k for _ in range(self.n)]
        self.sat = [0] * self.n
        self.pairs = {tuple(sorted(p)): _UnionFind(self.n) for p in acyclic_pairs}
        # "next unused color only" symmetry breaking is sound only when colors are interchangeable
        full = len(self.pairs) in (0, k * (k - 1) // 2)
        self.symmetric = full and prefer is None
        self.prefer = prefer

    def _pick(self) -> int:
        best, best_key = -1, None
        color, sat, adj = self.color, self.sat, self.adj
        for v in range(self.n):
            if color[v] < 0:
                key = (sat[v], sum(1 for w in adj[v] if color[w] < 0))
                if best_key is None or key > best_key:
                    best, best_key = v, key
        return best

    def _assign(self, v: int, c: int) -> list | None:
        """Color v with c if acyclicity allows; return an undo record."""
        marks = []
        for (a, b), uf in self.pairs.items():
            if c not in (a, b):
                continue
            other = b if c == a else a
            mark = uf.mark()
            ok = True
            for w in self.adj[v]:
                if self.color[w] == other and not uf.union(v, w):
                    ok = False
                    break
            marks.append((uf, mark))
            if not ok:
                for u, m in marks:
                    u.rollback(m)
                return None
        self.color[v] = c
        for w in self.adj[v]:
            row = self.seen[w]
            if row[c] == 0:
                self.sat[w] += 1
            row[c] += 1
        return marks

    def _unassign(self, v: int, marks: list) -> None:
        c = self.color[v]
        for w in self.adj[v]:
            row = self.seen[w]
            row[c] -= 1
            if row[c] == 0:
                self.sat[w] -= 1
        self.color[v] = -1
        for uf, m in reversed(marks):
            uf.rollback(m)

    def run(self) -> list[int] | None:
        with _deep_recursion(self.n + 10):
            return self.color[:] if self._rec(0, 0) else None

    def _rec(self, depth: int, used: int) -> bool:
        if depth == self.n:
            return True
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhausted(f"search exceeded {self.budget} nodes")
        v = self._pick()
        row = self.seen[v]
        limit = min(used + 1, self.k) if self.symmetric else self.k
        order = self.prefer(v, self.color) if self.prefer else range(limit)
        for c in order:
            if c >= limit or row[c]:
                continue
            marks = self._assign(v, c)
            if marks is None:
                continue
            if self._rec(depth + 1, max(used, c + 1)):
                return True
            self._unassign(v, marks)
        return False


def _greedy_dsatur(g: Graph) -> list[int]:
    color = [-1] * g.n
    seen: list[set[int]] = [set() for _ in range(g.n)]
    for _ in range(g.n):
        v = max(
            (u for u in range(g.n) if color[u] < 0),
            key=lambda u: (len(seen[u]), g.degree(u), -u),
        )
        c = 0
        while c in seen[v]:
            c += 1
        color[v] = c
        for w in g.adj[v]:
            seen[w].add(c)
    return color


def k_coloring(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> Coloring | None:
    """A proper k-coloring, or None if none exists; BudgetExhausted if undecided."""
    if g.n == 0:
        return Coloring(())
    if k <= 0:
        return None
    found = _Search(g.adj, k, budget).run()
    return None if found is None else Coloring(tuple(found))


def chromatic_number(
    g: Graph, budget: int = DEFAULT_BUDGET, upper_hint: Coloring | None = None
) -> ChromaticResult:
    """Exact chromatic number by DSATUR branch and bound over k = clique number, ...

    When the node budget runs out the result is a bracket ``[lower, upper]``
    with ``exact == False``; ``coloring`` always witnesses ``upper``.
    """
    if g.n == 0:
        return ChromaticResult(0, 0, Coloring(()), 0)
    best = Coloring(tuple(_greedy_dsatur(g)))
    if upper_hint is not None and verify_coloring(g, upper_hint):
        if upper_hint.color_count < best.color_count:
            best = upper_hint
    lower, upper = clique_number(g), best.color_count
    nodes = 0
    for k in range(lower, upper):
        search = _Search(g.adj, k, budget - nodes)
        try:
            found = search.run()
        except BudgetExhausted:
            return ChromaticResult(k, upper, best, budget)
        nodes += search.nodes
        if found is not None:
            return ChromaticResult(k, k, Coloring(tuple(found)), nodes)
    return ChromaticResult(upper, upper, best, nodes)


def _parity_seed(g: Graph, root: int) -> list[int]:
    """Distance parity from ``root``; an endpoint of each same-parity edge gets color 2."""
    dist = [-1] * g.n
    color = [0] * g.n
    for start in [root] + list(range(g.n)):
        if dist[start] >= 0:
            continue
        dist[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in sorted(g.adj[v]):
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
    for v in range(g.n):
        color[v] = dist[v] % 2
    for a, b in g.edges:
        if color[a] == color[b] != 2:
            color[b if dist[b] >= dist[a] else a] = 2
    return color


def _violation(g: Graph, color: Sequence[int]) -> tuple[int, set[int]]:
    """Improper edges plus independent bichromatic cycles, and the vertices involved."""
    bad = 0
    hot: set[int] = set()
    for a, b in g.edges:
        if color[a] == color[b]:
            bad += 1
            hot.update((a, b))
    for pair in ((0, 1), (0, 2), (1, 2)):
        uf = _UnionFind(g.n)
        for a, b in g.edges:
            if color[a] != color[b] and color[a] in pair and color[b] in pair:
                if not uf.union(a, b):
                    bad += 1
                    hot.update((a, b))
    return bad, hot


def _local_search(g: Graph, color: list[int], rng: random.Random, steps: int) -> list[int] | None:
    cost, hot = _violation(g, color)
    for _ in range(steps):
        if cost == 0:
            return color
        v = rng.choice(sorted(hot))
        options = []
        for c in range(3):
            if c == color[v]:
                continue
            old = color[v]
            color[v] = c
            options.append((_violation(g, color), c))
            color[v] = old
        if rng.random() < 0.1:
            (cost, hot), c = rng.choice(options)
        else:
            best = min(o[0][0] for o in options)
            (cost, hot), c = rng.choice([o for o in options if o[0][0] == best])
        color[v] = c
    return color if cost == 0 else None


def _counting_certificate(g: Graph) -> dict | None:
    """Each color pair of an acyclic 3-coloring spans a forest, so |E| <= 2|V| - 1."""
    for comp in g.components():
        sub = g.induced(comp)
        if sub.m >= 2 * sub.n:
            return {"vertices": comp, "edges": sub.m, "bound": 2 * sub.n - 1}
    return None


def acyclic_3_coloring(
    g: Graph,
    root: int = 0,
    seed: int = 0,
    local_steps: int = 20_000,
    budget: int = 2_000_000,
    exhaustive_limit: int | None = EXHAUSTIVE_LIMIT,
) -> Coloring:
    """Proper, Kempe-free coloring with at most three colors.

    Parity seed from ``root``, bounded local repair, then exhaustive search
    (for graphs up to ``exhaustive_limit`` vertices; None removes the limit).
    Raises ColoringFailure with the offending subgraph otherwise.
    """
    if g.n == 0:
        return Coloring(())
    cert = _counting_certificate(g)
    if cert is not None:
        raise ColoringFailure(
            "no acyclic 3-coloring exists: edge count exceeds what three forests allow",
            {"reason": "counting", **cert},
        )
    color = _parity_seed(g, root)
    if _violation(g, color)[0] == 0:
        return Coloring(tuple(color), {"method": "parity"})
    repaired = _local_search(g, color[:], random.Random(seed), local_steps)
    if repaired is not None:
        return Coloring(tuple(repaired), {"method": "local-search"})
    if exhaustive_limit is not None and g.n > exhaustive_limit:
        raise ColoringFailure(
            f"local search failed and {g.n} vertices exceed the exhaustive limit",
            {"reason": "budget", "vertices": list(range(g.n))},
        )
    try:
        found = _Search(g.adj, 3, budget, ((0, 1), (0, 2), (1, 2))).run()
    except BudgetExhausted:
        raise ColoringFailure(
            "exhaustive acyclic search exhausted its budget",
            {"reason": "budget", "vertices": list(range(g.n))},
        ) from None
    if found is None:
        raise ColoringFailure(
            "exhaustive search proves no acyclic 3-coloring exists",
            {"reason": "exhaustive", "vertices": list(range(g.n))},
        )
    return Coloring(tuple(found), {"method": "exhaustive"})


def _interior_facet(c: SimplicialComplex) -> int:
    fc = classify_faces(c)
    on_boundary = {t for f in fc.boundary for t in fc.cofaces[f]}
    for i, t in enumerate(c.facets):
        if t not in on_boundary:
            return i
    return 0


def dual_acyclic_3color(c: SimplicialComplex, **kwargs) -> Coloring:
    """Kempe-free coloring of the dual graph with at most three colors.

    The parity seed starts from an interior facet.  Closed q-manifolds with
    q >= 3 have (q+1)-regular duals with |E| >= 2|V|, which no acyclic
    3-coloring can accommodate; those fail with a counting certificate.
    """
    d = dual_graph(c)
    kwargs.setdefault("root", _interior_facet(c))
    col = acyclic_3_coloring(d, **kwargs)
    return col


def forest_3_coloring(g: Graph, budget: int = 2_000_000) -> Coloring:
    """Proper 3-coloring whose classes 0 and 1 induce a forest.

    Weaker than Kempe-free, but still a two-forest certificate (classes 0+1,
    and the independent class 2).
    """
    if g.n == 0:
        return Coloring(())
    try:
        found = _Search(g.adj, 3, budget, ((0, 1),)).run()
    except BudgetExhausted:
        raise ColoringFailure("forest 3-coloring search exhausted its budget", {"reason": "budget"}) from None
    if found is None:
        raise ColoringFailure("no proper 3-coloring with an acyclic color pair", {"reason": "exhaustive"})
    return Coloring(tuple(found), {"method": "exhaustive"})


def two_forest_cover(g: Graph, col: Coloring) -> ForestCover:
    """Two induced forests: the union of an acyclic color pair, and the remaining class."""
    if not verify_coloring(g, col):
        raise ValueError("coloring is not proper")
    used = sorted({c for c in col.colors})
    if len(used) > 3:
        raise ValueError("two_forest_cover needs at most three colors")
    if len(used) <= 1:
        parts = [list(range(g.n))] if g.n else []
        return ForestCover(parts)
    pairs = list(combinations(used, 2))
    bad = set(bichromatic_cycles(g, col))
    good = [p for p in pairs if p not in bad]
    if not good:
        raise ValueError("no color pair induces a forest")
    a, b = good[0]
    first = [v for v in range(g.n) if col[v] in (a, b)]
    second = [v for v in range(g.n) if col[v] not in (a, b)]
    cover = ForestCover([p for p in (first, second) if p])
    if not is_forest_cover(g, cover):
        raise AssertionError("forest cover failed verification")
    return cover


def is_forest_cover(g: Graph, cover: ForestCover) -> bool:
    flat = sorted(v for p in cover.parts for v in p)
    if flat != list(range(g.n)):
        return False
    for part in cover.parts:
        inside = set(part)
        if not _acyclic(part, [(a, b) for a, b in g.edges if a in inside and b in inside], g.n):
            return False
    return True


def color_soft_refinement(
    c: SimplicialComplex, dual_col: Coloring, refined: RefinedGraph | None = None
) -> Coloring:
    """Color the soft refinement by dimension up to q-2 and give facets a
    disjoint copy of the dual coloring, starting at color q-1.

    A boundary face touches only its own faces and its single facet, so it
    takes color q-1 unless its facet already has it, in which case it takes
    the next facet color.  Total: (q-1) + c(dual) colors, at least q+1.
    """
    r = refined or soft_barycentric(c)
    fc = classify_faces(c)
    q = fc.q
    dual = dual_graph(c)
    if len(dual_col) != dual.n or not verify_coloring(dual, dual_col):
        raise ValueError("dual coloring is not a proper coloring of the dual graph")
    if q <= 1:
        found = chromatic_number(r.graph)
        return Coloring(found.coloring.colors, {"method": "exact-low-dimension"})
    facet_index = {t: i for i, t in enumerate(c.facets)}
    palette = sorted({x for x in dual_col.colors})
    rank = {x: i for i, x in enumerate(palette)}

    def facet_color(t: Simplex) -> int:
        return q - 1 + rank[dual_col[facet_index[t]]]

    colors = []
    for s in r.provenance:
        k = len(s) - 1
        if k <= q - 2:
            colors.append(k)
        elif k == q:
            colors.append(facet_color(s))
        else:
            owners = fc.cofaces.get(s, ())
            taken = facet_color(owners[0]) if owners else None
            colors.append(q - 1 if taken != q - 1 else q)
    col = Coloring(tuple(colors), {"method": "dimension+dual"})
    if not verify_coloring(r.graph, col):
        raise AssertionError("refinement coloring failed verification")
    return col


def _face_triple(col: Coloring, face: Simplex) -> frozenset[int]:
    return frozenset(col[v] for v in face)


def color_2sphere_refinement(c: SimplicialComplex, col: Coloring) -> Coloring:
    """Explicit coloring of the soft refinement of a colored 2-sphere.

    Eulerian surface: vertices 0, faces alternate 1/2 across edges (a
    ColoringFailure names the first face pair where this does not close).
    Otherwise: vertices 3, faces in {0, 1, 2}; each face takes its
    neighbour's color +1 (same color triple) or -1 (different triples) mod 3.
    That rule is not consistent around every vertex, so it only orders the
    candidates of a backtracking search; ``meta["ruleConflicts"]`` counts the
    adjacencies where the rule had to be overridden.
    """
    if c.dim != 2:
        raise ValueError("expected a 2-dimensional complex")
    g = c.skeleton_graph()
    if len(col) != g.n or not verify_coloring(g, col):
        raise ValueError("input coloring is not proper")
    r = soft_barycentric(c)
    d = dual_graph(c)
    faces = c.facets
    ncol = col.color_count
    if ncol > 4:
        raise ValueError("expected a coloring with 3 or 4 colors")
    eulerian = is_eulerian(g)
    vertex_color = 0 if eulerian else 3
    face_color: list[int]
    if eulerian:
        face_color = [-1] * d.n
        for start in range(d.n):
            if face_color[start] >= 0:
                continue
            face_color[start] = 1
            queue = deque([start])
            while queue:
                f = queue.popleft()
                for h in sorted(d.adj[f]):
                    want = (-face_color[f]) % 3
                    if face_color[h] < 0:
                        face_color[h] = want
                        queue.append(h)
                    elif face_color[h] != want:
                        raise ColoringFailure(
                            f"propagation conflict between faces {faces[f]} and {faces[h]}",
                            {"reason": "conflict", "faces": [list(faces[f]), list(faces[h])]},
                        )
        meta = {"method": "eulerian-parity", "ruleConflicts": 0}
    else:
        triples = [_face_triple(col, t) for t in faces]
        order = _bfs_order(d)
        parent = {v: p for v, p in order}
        conflicts = 0

        def prefer(f, partial):
            p = parent.get(f)
            if p is None or partial[p] < 0:
                return [0, 1, 2]
            step = 1 if triples[p] == triples[f] else -1
            first = (partial[p] + step) % 3
            return [first] + [x for x in (0, 1, 2) if x != first]

        search = _Search(d.adj, 3, DEFAULT_BUDGET, prefer=prefer)
        found = search.run()
        if found is None:
            raise ColoringFailure("faces admit no 3-coloring", {"reason": "exhaustive"})
        face_color = found
        for f, p in order:
            if p is not None:
                step = 1 if triples[p] == triples[f] else -1
                if face_color[f] != (face_color[p] + step) % 3:
                    conflicts += 1
        meta = {"method": "triple-rule+search", "ruleConflicts": conflicts}
    facet_index = {t: i for i, t in enumerate(faces)}
    colors = [
        vertex_color if len(s) == 1 else face_color[facet_index[s]] for s in r.provenance
    ]
    out = Coloring(tuple(colors), meta)
    if not verify_coloring(r.graph, out):
        raise AssertionError("sphere refinement coloring failed verification")
    return out


def _bfs_order(g: Graph) -> list[tuple[int, int | None]]:
    seen = [False] * g.n
    out: list[tuple[int, int | None]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        out.append((start, None))
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in sorted(g.adj[v]):
                if not seen[w]:
                    seen[w] = True
                    out.append((w, v))
                    queue.append(w)
    return out


def fisk_complex(c: SimplicialComplex) -> FiskComplex:
    """(q-2)-simplices with an odd dual circle, with connected components and,
    when each piece is a manifold, the split into manifold pieces."""
    q = c.dim
    if q < 2:
        raise ValueError("Fisk complex needs q >= 2")
    nbrs = neighbor_sets(c)
    odd = []
    for x in c.faces[q - 2]:
        circle = _as_cycle(nbrs, _link_vertices(nbrs, x))
        if circle is None:
            raise NotAManifoldError(f"dual of {x} is not a cycle", x)
        if circle.n % 2:
            odd.append(x)
    components = [SimplicialComplex(part) for part in _group(odd, by_vertex=True)]
    pieces = None
    if q >= 3 and odd:
        split = [SimplicialComplex(part) for part in _group(odd, by_vertex=False)]
        if all(classify(p.skeleton_graph()).is_manifold for p in split):
            pieces = split
    return FiskComplex(q, odd, components, pieces)


def _group(simplices: list[Simplex], by_vertex: bool) -> list[list[Simplex]]:
    """Connected groups of simplices: sharing a vertex, or (``by_vertex=False``)
    sharing a codimension-one face that lies in exactly two of them."""
    uf = _UnionFind(len(simplices))
    owners: dict[Simplex, list[int]] = {}
    for i, s in enumerate(simplices):
        keys = [(v,) for v in s] if by_vertex else list(combinations(s, len(s) - 1))
        for key in keys:
            owners.setdefault(key, []).append(i)
    for key, idx in owners.items():
        if by_vertex or len(idx) == 2:
            for j in idx[1:]:
                uf.union(idx[0], j)
    groups: dict[int, list[Simplex]] = {}
    for i, s in enumerate(simplices):
        groups.setdefault(uf.find(i), []).append(s)
    return sorted(groups.values())


def edge_degree_stats(c: SimplicialComplex) -> EdgeCensus:
    """Census of edge degrees of a 3-complex, interior and boundary separately."""
    if c.dim != 3:
        raise ValueError("edge census needs a 3-dimensional complex")
    fc = classify_faces(c)
    on_boundary = {e for f in fc.boundary for e in combinations(f, 2)}
    facets_per_edge: Counter = Counter()
    for t in c.facets:
        facets_per_edge.update(combinations(t, 2))
    nbrs = neighbor_sets(c)
    inner, outer, s_inner, s_outer = Counter(), Counter(), Counter(), Counter()
    for e in c.faces[1]:
        k = facets_per_edge[e]
        s = len(nbrs[e[0]] & nbrs[e[1]])
        if e in on_boundary:
            outer[k] += 1
            s_outer[s] += 1
        else:
            inner[k] += 1
            s_inner[s] += 1
    return EdgeCensus(*(dict(sorted(x.items())) for x in (inner, outer, s_inner, s_outer)))


def grotzsch_example() -> Graph:
    """C8 with apex A (vertex 8) on the even and apex B (vertex 9) on the odd vertices."""
    edges = [(i, (i + 1) % 8) for i in range(8)]
    edges += [(i, 8) for i in range(0, 8, 2)] + [(i, 9) for i in range(1, 8, 2)]
    return Graph(10, edges)


def even_dual_circle_colorable(c: SimplicialComplex) -> bool:
    """Every dual circle of a (q-2)-simplex has even length (empty Fisk complex)."""
    return fisk_complex(c).empty
