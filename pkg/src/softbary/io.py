"""Deterministic text formats: Graph JSON, colorings, censuses, spectra and histograms.

Writers sort everything and emit fixed float formatting, so equal inputs give
byte-identical files.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Iterable

from .chromatic import Coloring, EdgeCensus
from .graph import Graph
from .refine import RefinedGraph
from .spectral import DosHistogram, SpectralSummary


class FormatError(ValueError):
    """Malformed input file."""


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def fmt_float(x: float) -> str:
    s = f"{float(x):.12g}"
    return "0" if s == "-0" else s


def graph_to_obj(g: Graph) -> dict:
    return {"vertices": list(range(g.n)), "edges": [list(e) for e in g.edges]}


def graph_from_obj(obj: Any) -> Graph:
    try:
        vertices = obj["vertices"]
        edges = [tuple(e) for e in obj["edges"]]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"not a Graph JSON object: {exc}") from None
    if not isinstance(vertices, list) or any(len(e) != 2 for e in edges):
        raise FormatError("vertices must be a list and edges pairs")
    try:
        return Graph.from_labels(vertices, edges)
    except (ValueError, TypeError) as exc:
        raise FormatError(str(exc)) from None


def refined_to_obj(r: RefinedGraph) -> dict:
    obj = graph_to_obj(r.graph)
    obj["provenance"] = [[i, list(s)] for i, s in enumerate(r.provenance)]
    return obj


def refined_from_obj(obj: Any) -> RefinedGraph:
    g = graph_from_obj(obj)
    try:
        prov = dict((int(i), tuple(s)) for i, s in obj["provenance"])
        return RefinedGraph(g, tuple(prov[v] for v in range(g.n)))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad provenance: {exc}") from None


def coloring_to_obj(col: Coloring, verified: bool, kempe_free: bool | None) -> dict:
    return {
        "colors": [[v, c] for v, c in enumerate(col.colors)],
        "verified": bool(verified),
        "kempeFree": kempe_free,
    }


def coloring_from_obj(obj: Any, n: int | None = None) -> Coloring:
    try:
        pairs = {int(v): int(c) for v, c in obj["colors"]}
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"not a Coloring JSON object: {exc}") from None
    size = n if n is not None else (max(pairs) + 1 if pairs else 0)
    return Coloring.from_mapping(size, pairs)


def census_to_obj(census: EdgeCensus) -> dict:
    def keyed(d: dict[int, int]) -> dict[str, int]:
        return {str(k): v for k, v in sorted(d.items())}

    out = census.as_dict()
    return {
        "interior": keyed(out["interior"]),
        "boundary": keyed(out["boundary"]),
        "dualSphere": {k: keyed(v) for k, v in out["dualSphere"].items()},
    }


def eigenvalues_csv(s: SpectralSummary) -> str:
    return "".join(fmt_float(x) + "\n" for x in s.eigenvalues)


def histogram_csv(h: DosHistogram) -> str:
    rows = ["binLeft,binRight,mass"]
    for a, b, m in zip(h.edges[:-1], h.edges[1:], h.masses):
        rows.append(f"{fmt_float(a)},{fmt_float(b)},{fmt_float(m)}")
    return "\n".join(rows) + "\n"


def read_histogram_csv(text: str) -> DosHistogram:
    import numpy as np

    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != "binLeft,binRight,mass":
        raise FormatError("missing histogram header")
    try:
        rows = [[float(x) for x in ln.split(",")] for ln in lines[1:]]
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    edges = [r[0] for r in rows] + ([rows[-1][1]] if rows else [])
    return DosHistogram(np.array(edges), np.array([r[2] for r in rows]))


def write_text(path: str | Path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def write_json(path: str | Path, obj: Any) -> None:
    write_text(path, dumps(obj))


def read_json(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from None


def read_graph(path: str | Path) -> Graph:
    return graph_from_obj(read_json(path))


def write_graph(path: str | Path, g: Graph | RefinedGraph) -> None:
    obj = refined_to_obj(g) if isinstance(g, RefinedGraph) else graph_to_obj(g)
    write_json(path, obj)


def report_to_obj(fvectors: Iterable[tuple[int, ...]], l1: list[float | None], refs: list[str]) -> dict:
    steps = [
        {"fvector": list(f), "l1ToNext": d, "histogramRef": ref}
        for f, d, ref in zip(fvectors, l1, refs)
    ]
    return {"steps": steps, "final": {"histogramRef": refs[-1] if refs else None}}
