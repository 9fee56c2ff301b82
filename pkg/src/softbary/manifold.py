"""Recursive recognizers for contractible graphs, spheres, balls and manifolds.

All recursion happens on vertex subsets of one root graph: a unit sphere or a
punctured graph is an induced subgraph, so ``frozenset`` vertex sets are exact
memo keys.  Two cheap necessary conditions prune the contractibility search:
a contractible graph is connected and has Euler characteristic 1.  Cones are
accepted without search.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, clique_number

DEFAULT_WORK_CAP = 500_000

SPHERE = "sphere"
BALL = "ball"
MANIFOLD = "manifold"
MANIFOLD_WITH_BOUNDARY = "manifold-with-boundary"
CONTRACTIBLE = "contractible-flag"
NOT_MANIFOLD = "not-manifold"
UNDECIDED = "undecided"


class WorkCapExceeded(RuntimeError):
    """The recursive search hit its work cap before reaching a verdict."""


@dataclass(frozen=True)
class ManifoldReport:
    kind: str
    dimension: int
    boundary_vertices: frozenset[int] = field(default_factory=frozenset)
    witness: int | None = None

    @property
    def is_manifold(self) -> bool:
        return self.kind in (SPHERE, BALL, MANIFOLD, MANIFOLD_WITH_BOUNDARY)

    @property
    def has_boundary(self) -> bool:
        return self.kind in (BALL, MANIFOLD_WITH_BOUNDARY)

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "dimension": self.dimension,
            "boundaryVertices": sorted(self.boundary_vertices),
            "witness": self.witness,
        }


class Recognizer:
    """Memoized recursive recognition on induced subgraphs of ``g``."""

    def __init__(self, g: Graph, cap: int | None = DEFAULT_WORK_CAP):
        self.adj = g.adj
        self.cap = cap
        self.work = 0
        self._contractible: dict[frozenset[int], bool] = {}
        self._sphere: dict[tuple[frozenset[int], int], bool] = {}
        self._ball: dict[tuple[frozenset[int], int], bool] = {}
        self._euler: dict[frozenset[int], int] = {}

    def _tick(self) -> None:
        self.work += 1
        if self.cap is not None and self.work > self.cap:
            raise WorkCapExceeded(f"work cap {self.cap} exceeded")

    def sphere_of(self, v: int, w: frozenset[int]) -> frozenset[int]:
        return self.adj[v] & w

    def connected(self, w: frozenset[int]) -> bool:
        if not w:
            return True
        start = next(iter(w))
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for x in self.adj[v] & w:
                if x not in seen:
                    seen.add(x)
                    stack.append(x)
        return len(seen) == len(w)

    def euler(self, w: frozenset[int]) -> int:
        if w in self._euler:
            return self._euler[w]
        chi = 0
        higher = {v: frozenset(x for x in self.adj[v] & w if x > v) for v in w}

        def count(cand: frozenset[int], sign: int) -> int:
            total = 0
            for x in cand:
                total += sign
                rest = cand & higher[x]
                if rest:
                    total += count(rest, -sign)
            return total

        for v in w:
            chi += 1
            if higher[v]:
                chi += count(higher[v], -1)
        self._euler[w] = chi
        return chi

    def contractible(self, w: frozenset[int]) -> bool:
        if len(w) <= 1:
            return len(w) == 1
        if w in self._contractible:
            return self._contractible[w]
        self._tick()
        size = len(w) - 1
        if any(len(self.adj[v] & w) == size for v in w):
            result = True
        elif not self.connected(w) or self.euler(w) != 1:
            result = False
        else:
            result = False
            for v in sorted(w, key=lambda x: (len(self.adj[x] & w), x)):
                if self.contractible(self.adj[v] & w) and self.contractible(w - {v}):
                    result = True
                    break
        self._contractible[w] = result
        return result

    def sphere(self, w: frozenset[int], d: int) -> bool:
        if d < 0:
            return d == -1 and not w
        if not w:
            return False
        if d == 0:
            return len(w) == 2 and all(not (self.adj[v] & w) for v in w)
        key = (w, d)
        if key in self._sphere:
            return self._sphere[key]
        self._tick()
        result = (
            self.connected(w)
            and self.euler(w) == 1 + (-1) ** d
            and all(self.sphere(self.adj[v] & w, d - 1) for v in sorted(w))
            and any(self.contractible(w - {v}) for v in sorted(w))
        )
        self._sphere[key] = result
        return result

    def ball(self, w: frozenset[int], d: int) -> bool:
        # contractible manifold with non-empty boundary; K_{d+1} qualifies
        if d <= 0:
            return d == 0 and len(w) == 1
        key = (w, d)
        if key in self._ball:
            return self._ball[key]
        self._tick()
        result = False
        if self.connected(w) and self.euler(w) == 1:
            seen_ball = False
            for v in sorted(w):
                s = self.adj[v] & w
                if self.sphere(s, d - 1):
                    continue
                if self.ball(s, d - 1):
                    seen_ball = True
                    continue
                break
            else:
                result = seen_ball and self.contractible(w)
        self._ball[key] = result
        return result


def is_contractible(g: Graph, cap: int | None = DEFAULT_WORK_CAP) -> bool:
    """Recursive contractibility; raises WorkCapExceeded instead of guessing."""
    return Recognizer(g, cap).contractible(frozenset(range(g.n)))


def is_sphere(g: Graph, d: int, cap: int | None = DEFAULT_WORK_CAP) -> bool:
    return Recognizer(g, cap).sphere(frozenset(range(g.n)), d)


def is_ball(g: Graph, d: int, cap: int | None = DEFAULT_WORK_CAP) -> bool:
    return Recognizer(g, cap).ball(frozenset(range(g.n)), d)


def classify(g: Graph, cap: int | None = DEFAULT_WORK_CAP) -> ManifoldReport:
    """Classify ``g`` as sphere, ball, manifold (with or without boundary) or neither.

    The dimension is the clique number minus one.  ``witness`` is the first
    vertex whose unit sphere is neither a sphere nor a ball of one dimension
    lower.
    """
    if g.n == 0:
        return ManifoldReport(SPHERE, -1)
    q = clique_number(g) - 1
    rec = Recognizer(g, cap)
    everything = frozenset(range(g.n))
    try:
        if q == 0:
            if g.n == 1:
                return ManifoldReport(BALL, 0)
            return ManifoldReport(SPHERE if g.n == 2 else MANIFOLD, 0)
        boundary = set()
        witness = None
        for v in range(g.n):
            s = g.adj[v]
            if rec.sphere(s, q - 1):
                continue
            if rec.ball(s, q - 1):
                boundary.add(v)
                continue
            witness = v
            break
        if witness is not None:
            kind = CONTRACTIBLE if rec.contractible(everything) else NOT_MANIFOLD
            return ManifoldReport(kind, q, frozenset(), witness)
        if boundary:
            kind = BALL if rec.contractible(everything) else MANIFOLD_WITH_BOUNDARY
            return ManifoldReport(kind, q, frozenset(boundary))
        kind = SPHERE if rec.sphere(everything, q) else MANIFOLD
        return ManifoldReport(kind, q)
    except WorkCapExceeded:
        return ManifoldReport(UNDECIDED, q)
