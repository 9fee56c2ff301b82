"""Kirchhoff spectra, spectral functions, densities of states and tree/forest counts.

Two tiers: a dense symmetric eigensolver up to ``dense_cap()`` vertices and,
beyond that, eigenvalue counting through the inertia of a sparse LDL^T
factorization (Sylvester's law).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import splu

from .graph import Graph, SimplicialComplex, f_vector, whitney_complex
from .refine import barycentric, soft_barycentric

DEFAULT_DENSE_CAP = 4000
ZERO_TOL = 1e-9
HISTOGRAM_GRID = 512


def dense_cap() -> int:
    return int(os.environ.get("SOFTBARY_DENSE_CAP", DEFAULT_DENSE_CAP))


class DenseCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class KirchhoffMatrix:
    n: int
    matrix: sp.csr_matrix

    def toarray(self) -> np.ndarray:
        return self.matrix.toarray()


@dataclass(frozen=True)
class SpectralSummary:
    eigenvalues: np.ndarray

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    def spectral_function(self, x: float) -> float:
        """F(x): value lambda_k on [k/n, (k+1)/n), with F(1) = lambda_{n-1}."""
        k = min(int(math.floor(x * self.n)), self.n - 1)
        return float(self.eigenvalues[k])


@dataclass(frozen=True)
class DosHistogram:
    edges: np.ndarray
    masses: np.ndarray

    @property
    def widths(self) -> np.ndarray:
        return np.diff(self.edges)

    def integrated(self) -> np.ndarray:
        """Integrated density of states at the right bin edges."""
        return np.cumsum(self.masses)

    def peak_bin(self, interior: bool = True) -> tuple[float, float]:
        """Bin of largest density (mass / width); endpoint bins skipped if ``interior``."""
        dens = self.masses / self.widths
        lo = 1 if interior and len(dens) > 2 else 0
        hi = len(dens) - 1 if interior and len(dens) > 2 else len(dens)
        k = lo + int(np.argmax(dens[lo:hi]))
        return float(self.edges[k]), float(self.edges[k + 1])


class CountResult(NamedTuple):
    count: int
    shift: float


class Potential(NamedTuple):
    value: float
    omitted: int


def kirchhoff(g: Graph) -> KirchhoffMatrix:
    """Degree matrix minus adjacency matrix, as sparse CSR."""
    n = g.n
    edges = np.array(g.edges, dtype=np.int64).reshape(-1, 2)
    rows = np.concatenate([edges[:, 0], edges[:, 1], np.arange(n)])
    cols = np.concatenate([edges[:, 1], edges[:, 0], np.arange(n)])
    vals = np.concatenate([-np.ones(2 * len(edges)), np.array(g.degrees(), dtype=float)])
    return KirchhoffMatrix(n, sp.csr_matrix((vals, (rows, cols)), shape=(n, n)))


def eigenvalues(m: KirchhoffMatrix | Graph, cap: int | None = None) -> SpectralSummary:
    if isinstance(m, Graph):
        m = kirchhoff(m)
    cap = dense_cap() if cap is None else cap
    if m.n > cap:
        raise DenseCapExceeded(
            f"{m.n} vertices exceed the dense cap {cap}; use spectral_count for counting"
        )
    if m.n == 0:
        return SpectralSummary(np.zeros(0))
    return SpectralSummary(np.sort(np.linalg.eigvalsh(m.toarray())))


def _negative_pivots(a: sp.csc_matrix) -> int | None:
    lu = splu(
        a,
        permc_spec="MMD_AT_PLUS_A",
        diag_pivot_thresh=0.0,
        options={"SymmetricMode": True},
    )
    if not np.array_equal(lu.perm_r, lu.perm_c):
        return None
    d = lu.U.diagonal()
    scale = max(1.0, float(abs(a).max()))
    if np.min(np.abs(d)) < 1e-10 * scale:
        return None
    return int(np.count_nonzero(d < 0))


def spectral_count(m: KirchhoffMatrix, t: float, max_tries: int = 8) -> CountResult:
    """Number of eigenvalues below ``t`` from the inertia of K - tI.

    When ``t`` sits on an eigenvalue (tiny pivot) or the factorization leaves
    the diagonal, the shift is perturbed by multiples of 1e-7, downward first;
    the shift actually used is returned.
    """
    base = m.matrix.tocsc().astype(float)
    eye = sp.identity(m.n, format="csc")
    shifts = [t] + [t + sign * j * 1e-7 for j in range(1, max_tries) for sign in (-1, 1)]
    for shift in shifts[:max_tries]:
        try:
            neg = _negative_pivots((base - shift * eye).tocsc())
        except RuntimeError:
            neg = None
        if neg is not None:
            return CountResult(neg, shift)
    raise ArithmeticError(f"LDL^T inertia failed near t={t} after {max_tries} shifts")


def counting_idos(m: KirchhoffMatrix, grid: np.ndarray) -> np.ndarray:
    """Integrated density of states on ``grid`` by eigenvalue counting."""
    return np.array([spectral_count(m, float(t)).count for t in grid]) / m.n


def spectral_function_l1(a: SpectralSummary, b: SpectralSummary) -> float:
    """Exact L1 distance on [0, 1] between two spectral step functions."""
    na, nb = a.n, b.n
    if na == 0 or nb == 0:
        raise ValueError("empty spectrum")
    total = na * nb
    bp = np.union1d(np.arange(na + 1) * nb, np.arange(nb + 1) * na)
    left, width = bp[:-1], np.diff(bp)
    diff = np.abs(a.eigenvalues[left // nb] - b.eigenvalues[left // na])
    return float(np.dot(diff, width) / total)


def dos(a: SpectralSummary, bins: int, lo: float = 0.0, hi: float | None = None) -> DosHistogram:
    """Normalized eigenvalue histogram on [lo, hi] (hi defaults to the top eigenvalue)."""
    if bins < 1:
        raise ValueError("bins must be >= 1")
    if hi is None:
        hi = float(a.eigenvalues[-1]) if a.n and a.eigenvalues[-1] > lo else lo + 1.0
    vals = a.eigenvalues.copy()
    # round-off puts the kernel eigenvalue slightly below 0; keep it in range
    tol = ZERO_TOL * max(1.0, abs(hi))
    vals[(vals < lo) & (vals >= lo - tol)] = lo
    vals[(vals > hi) & (vals <= hi + tol)] = hi
    counts, edges = np.histogram(vals, bins=bins, range=(lo, hi))
    return DosHistogram(edges, counts / max(a.n, 1))


def dos_from_counts(m: KirchhoffMatrix, bins: int, lo: float, hi: float) -> DosHistogram:
    """Histogram by counting; the last edge is nudged up so the top eigenvalue is kept."""
    edges = np.linspace(lo, hi, bins + 1)
    probe = edges.copy()
    probe[-1] = hi + 1e-6
    idos = counting_idos(m, probe)
    idos[0] = spectral_count(m, lo).count / m.n
    return DosHistogram(edges, np.diff(idos))


def hex_symbol(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Fourier symbol of the Laplacian of the six-neighbour planar lattice."""
    return 6 - 2 * np.cos(x) - 2 * np.cos(y) - 2 * np.cos(x + y)


def hex_dos(grid_size: int, bins: int, lo: float = 0.0, hi: float = 9.0) -> DosHistogram:
    if grid_size < 16:
        raise ValueError("grid_size must be >= 16")
    t = 2 * np.pi * np.arange(grid_size) / grid_size
    vals = hex_symbol(t[:, None], t[None, :]).ravel()
    counts, edges = np.histogram(np.clip(vals, lo, hi), bins=bins, range=(lo, hi))
    return DosHistogram(edges, counts / vals.size)


def dos_l1(a: DosHistogram, b: DosHistogram) -> float:
    """Area between the two integrated densities of states.

    This is the histogram-resolution version of the L1 distance between the
    spectral functions (the area between a monotone function and another is
    the same measured along either axis).
    """
    if a.edges.shape != b.edges.shape or not np.allclose(a.edges, b.edges):
        raise ValueError("histograms must share bin edges")
    return float(np.sum(np.abs(a.integrated() - b.integrated()) * a.widths))


def mass_l1(a: DosHistogram, b: DosHistogram) -> float:
    """Total variation style distance: sum of absolute bin-mass differences."""
    if a.edges.shape != b.edges.shape or not np.allclose(a.edges, b.edges):
        raise ValueError("histograms must share bin edges")
    return float(np.sum(np.abs(a.masses - b.masses)))


def bareiss_det(mat: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    a = [list(map(int, row)) for row in mat]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class TreeForestReport:
    n: int
    connected: bool
    zero_modes: int
    pseudo_det_log: float
    forest_det_log: float
    pseudo_det_exact: int | None = None
    forest_det_exact: int | None = None

    @property
    def tau(self) -> float:
        if self.pseudo_det_exact and self.forest_det_exact is not None:
            return self.forest_det_exact / self.pseudo_det_exact
        return math.exp(self.forest_det_log - self.pseudo_det_log)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "connected": self.connected,
            "zeroModes": self.zero_modes,
            "pseudoDetLog": self.pseudo_det_log,
            "forestDetLog": self.forest_det_log,
            "pseudoDetExact": self.pseudo_det_exact,
            "forestDetExact": self.forest_det_exact,
            "tau": self.tau,
        }


def tree_forest(g: Graph, exact_limit: int = 12) -> TreeForestReport:
    """Pseudo-determinant Det(K) (rooted spanning trees, per component product)
    and det(1 + K) (rooted spanning forests), exact as integers for n <= exact_limit."""
    spec = eigenvalues(g).eigenvalues
    tol = ZERO_TOL * max(1.0, float(spec[-1])) if len(spec) else ZERO_TOL
    nonzero = spec[spec > tol]
    pdet_log = float(np.sum(np.log(nonzero)))
    forest_log = float(np.sum(np.log1p(spec)))
    pdet_exact = forest_exact = None
    if g.n <= exact_limit:
        k = kirchhoff(g).toarray().astype(int)
        forest_exact = bareiss_det((np.eye(g.n, dtype=int) + k).tolist())
        pdet_exact = 1
        for comp in g.components():
            sub = k[np.ix_(comp[1:], comp[1:])]
            pdet_exact *= len(comp) * bareiss_det(sub.tolist())
    return TreeForestReport(
        g.n, g.is_connected(), int(len(spec) - len(nonzero)), pdet_log, forest_log,
        pdet_exact, forest_exact,
    )


def potential(a: SpectralSummary, z: float, eps: float = 1e-12) -> Potential:
    """-(1/n) sum log|z - lambda|, skipping terms with |z - lambda| < eps."""
    gaps = np.abs(z - a.eigenvalues)
    keep = gaps >= eps
    return Potential(float(-np.sum(np.log(gaps[keep])) / a.n), int(np.count_nonzero(~keep)))


@dataclass
class StepRecord:
    step: int
    fvector: tuple[int, ...]
    n: int
    spectrum: SpectralSummary | None = None
    idos: np.ndarray | None = None
    l1_to_next: float | None = None


@dataclass
class ConvergenceReport:
    refiner: str
    steps: list[StepRecord] = field(default_factory=list)
    final_dos: DosHistogram | None = None

    @property
    def l1_distances(self) -> list[float]:
        return [s.l1_to_next for s in self.steps if s.l1_to_next is not None]

    @property
    def final_spectrum(self) -> SpectralSummary | None:
        return self.steps[-1].spectrum if self.steps else None


def convergence_experiment(
    seed: SimplicialComplex | Graph,
    steps: int,
    refiner: str = "soft",
    bins: int = 128,
    hi: float | None = None,
    counting: bool = False,
) -> ConvergenceReport:
    """Refine ``steps`` times, recording f-vectors, spectra and successive L1 distances.

    Above the dense cap (or with ``counting=True``) spectra are replaced by
    integrated densities on a fixed 512-point grid and the L1 distance is the
    area between consecutive integrated densities.
    """
    if steps < 2:
        raise ValueError("steps must be >= 2")
    op: Callable = {"soft": soft_barycentric, "strong": barycentric}[refiner]
    c = seed if isinstance(seed, SimplicialComplex) else whitney_complex(seed)
    graphs = [c.skeleton_graph().relabeled()]
    complexes = [c]
    for _ in range(steps):
        g = op(complexes[-1]).graph
        graphs.append(g)
        complexes.append(whitney_complex(g))
    top = max(g.n for g in graphs)
    use_counts = counting or top > dense_cap()
    report = ConvergenceReport(refiner)
    mats = [kirchhoff(g) for g in graphs]
    if use_counts:
        hi_c = hi if hi is not None else 2.0 * max(max(g.degrees(), default=0) for g in graphs)
        grid = np.linspace(0.0, hi_c, HISTOGRAM_GRID)
        for i, (g, cx, m) in enumerate(zip(graphs, complexes, mats)):
            report.steps.append(StepRecord(i, f_vector(cx), g.n, idos=counting_idos(m, grid)))
        width = grid[1] - grid[0]
        for a, b in zip(report.steps, report.steps[1:]):
            a.l1_to_next = float(np.sum(np.abs(a.idos - b.idos)) * width)
        report.final_dos = dos_from_counts(mats[-1], bins, 0.0, hi_c)
    else:
        for i, (g, cx, m) in enumerate(zip(graphs, complexes, mats)):
            report.steps.append(StepRecord(i, f_vector(cx), g.n, spectrum=eigenvalues(m)))
        for a, b in zip(report.steps, report.steps[1:]):
            a.l1_to_next = spectral_function_l1(a.spectrum, b.spectrum)
        report.final_dos = dos(report.steps[-1].spectrum, bins, 0.0, hi)
    return report
