"""Command-line front end: ``softbary <command> [options]``.

Every command prints a one-line JSON summary carrying the f-vector, Euler
characteristic and classification of the graph it worked on.  Exit status is
0 on success, 1 when a verified failure report was produced and 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import chromatic, generators, io, manifold, refine, spectral
from .graph import Graph, graph_distance, whitney_complex

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class VerifiedFailure(Exception):
    def __init__(self, message: str, report: dict, graph: Graph | None = None):
        super().__init__(message)
        self.report = report
        self.graph = graph


def _load(args) -> Graph:
    if getattr(args, "graph", None):
        return generators.from_spec(args.graph)
    if getattr(args, "input", None):
        return io.read_graph(args.input)
    raise UsageError("give --in FILE or --graph SPEC")


def _describe(g: Graph, cap: int) -> dict:
    c = whitney_complex(g)
    rep = manifold.classify(g, cap)
    return {
        "vertices": g.n,
        "fvector": list(c.f_vector()),
        "euler": c.euler_characteristic(),
        "classification": rep.kind,
        "dimension": rep.dimension,
    }


def _out(args, text: str) -> None:
    if args.out:
        io.write_text(args.out, text)


def _round(x: float | None) -> float | None:
    return None if x is None else float(io.fmt_float(x))


def cmd_gen(args) -> tuple[Graph, dict]:
    if args.graph:
        g = generators.from_spec(args.graph)
    elif args.name:
        g = generators.generate(args.name, *args.params)
    else:
        raise UsageError("gen needs --name or --graph")
    _out(args, io.dumps(io.graph_to_obj(g)))
    return g, {}


def cmd_refine(args) -> tuple[Graph, dict]:
    g = _load(args)
    op = refine.barycentric if args.strong else refine.soft_barycentric
    r = None
    for _ in range(args.steps):
        r = op(whitney_complex(g))
        g = r.graph
    if args.out:
        io.write_graph(args.out, r if r is not None else g)
    return g, {"refiner": "strong" if args.strong else "soft", "steps": args.steps}


def cmd_classify(args) -> tuple[Graph, dict]:
    g = _load(args)
    rep = manifold.classify(g, args.cap)
    _out(args, io.dumps(rep.as_dict()))
    return g, {"report": rep.as_dict()}


def cmd_dual(args) -> tuple[Graph, dict]:
    g = _load(args)
    d = refine.dual_graph(whitney_complex(g))
    _out(args, io.dumps(io.graph_to_obj(d)))
    return g, {"dual": {"vertices": d.n, "edges": d.m, "degrees": sorted(set(d.degrees()))}}


def cmd_fvector(args) -> tuple[Graph, dict]:
    return _load(args), {}


def cmd_spectrum(args) -> tuple[Graph, dict]:
    g = _load(args)
    s = spectral.eigenvalues(g)
    _out(args, io.eigenvalues_csv(s))
    top = float(s.eigenvalues[-1]) if s.n else 0.0
    return g, {"eigenvalues": s.n, "max": _round(top)}


def cmd_dos(args) -> tuple[Graph, dict]:
    g = _load(args)
    m = spectral.kirchhoff(g)
    if args.counting or g.n > spectral.dense_cap():
        hi = args.hi if args.hi is not None else 2.0 * max(g.degrees(), default=0)
        h = spectral.dos_from_counts(m, args.bins, args.lo, hi)
    else:
        h = spectral.dos(spectral.eigenvalues(m), args.bins, args.lo, args.hi)
    _out(args, io.histogram_csv(h))
    return g, {"bins": args.bins, "mass": _round(float(h.masses.sum())), "peak": [_round(x) for x in h.peak_bin()]}


def cmd_hexdos(args) -> tuple[Graph | None, dict]:
    h = spectral.hex_dos(args.grid, args.bins, args.lo, args.hi)
    _out(args, io.histogram_csv(h))
    extra = {"grid": args.grid, "bins": args.bins, "peak": [_round(x) for x in h.peak_bin()]}
    if args.compare:
        other = io.read_histogram_csv(Path(args.compare).read_text(encoding="utf-8"))
        extra["l1"] = _round(spectral.dos_l1(other, h))
    return None, extra


def cmd_converge(args) -> tuple[Graph, dict]:
    g = _load(args)
    rep = spectral.convergence_experiment(g, args.steps, args.refiner, args.bins, args.hi, args.counting)
    if args.outdir:
        outdir = Path(args.outdir)
        outdir.mkdir(parents=True, exist_ok=True)
        refs: list[str | None] = []
        for st in rep.steps:
            ref = None
            if st.spectrum is not None:
                ref = f"step{st.step}.csv"
                io.write_text(outdir / ref, io.histogram_csv(spectral.dos(st.spectrum, args.bins, 0.0, args.hi)))
            refs.append(ref)
        io.write_text(outdir / "final.csv", io.histogram_csv(rep.final_dos))
        l1 = [_round(st.l1_to_next) for st in rep.steps]
        obj = io.report_to_obj([st.fvector for st in rep.steps], l1, refs)
        obj["final"] = {"histogramRef": "final.csv"}
        io.write_json(outdir / "report.json", obj)
    return g, {"refiner": args.refiner, "l1": [_round(x) for x in rep.l1_distances]}


def cmd_treeforest(args) -> tuple[Graph, dict]:
    g = _load(args)
    return g, {"treeForest": spectral.tree_forest(g).as_dict()}


def cmd_potential(args) -> tuple[Graph, dict]:
    g = _load(args)
    p = spectral.potential(spectral.eigenvalues(g), args.z)
    return g, {"z": args.z, "potential": _round(p.value), "omitted": p.omitted}


def _coloring_payload(g: Graph, col: chromatic.Coloring) -> dict:
    ok = chromatic.verify_coloring(g, col)
    return io.coloring_to_obj(col, ok, chromatic.kempe_free(g, col) if ok else None)


def cmd_color(args) -> tuple[Graph, dict]:
    g = _load(args)
    if args.construct:
        c = whitney_complex(g)
        dual_col = chromatic.chromatic_number(refine.dual_graph(c), args.budget).coloring
        r = refine.soft_barycentric(c)
        col = chromatic.color_soft_refinement(c, dual_col, r)
        target = r.graph
        extra = {"method": "construct", "colors": col.color_count, "q": c.dim}
    else:
        res = chromatic.chromatic_number(g, args.budget)
        col, target = res.coloring, g
        extra = {"method": "exact", "lower": res.lower, "upper": res.upper, "exact": res.exact}
    payload = _coloring_payload(target, col)
    _out(args, io.dumps(payload))
    extra["verified"] = payload["verified"]
    return g, extra


def cmd_dualcolor(args) -> tuple[Graph, dict]:
    g = _load(args)
    c = whitney_complex(g)
    d = refine.dual_graph(c)
    try:
        col = chromatic.dual_acyclic_3color(c, seed=args.seed)
    except chromatic.ColoringFailure as exc:
        raise VerifiedFailure(str(exc), exc.report, g) from None
    payload = _coloring_payload(d, col)
    _out(args, io.dumps(payload))
    return g, {"colors": col.color_count, "verified": payload["verified"], "kempeFree": payload["kempeFree"]}


def cmd_forestcover(args) -> tuple[Graph, dict]:
    g = _load(args)
    c = whitney_complex(g)
    d = refine.dual_graph(c)
    try:
        col = chromatic.dual_acyclic_3color(c, seed=args.seed)
        how = "acyclic-3-coloring"
    except chromatic.ColoringFailure:
        try:
            col = chromatic.forest_3_coloring(d)
        except chromatic.ColoringFailure as exc:
            raise VerifiedFailure(str(exc), exc.report, g) from None
        how = "forest-pair-3-coloring"
    cover = chromatic.two_forest_cover(d, col)
    _out(args, io.dumps({"parts": cover.parts, "verified": chromatic.is_forest_cover(d, cover)}))
    return g, {"parts": len(cover.parts), "certificate": how}


def cmd_fisk(args) -> tuple[Graph, dict]:
    g = _load(args)
    try:
        f = chromatic.fisk_complex(whitney_complex(g))
    except refine.NotAManifoldError as exc:
        raise VerifiedFailure(str(exc), {"simplex": list(exc.simplex or ())}, g) from None
    obj = {
        "simplices": [list(s) for s in f.simplices],
        "components": [[list(s) for s in comp.facets] for comp in f.components],
        "pieces": None if f.pieces is None else [[list(s) for s in p.facets] for p in f.pieces],
    }
    _out(args, io.dumps(obj))
    return g, {"fisk": len(f.simplices), "components": len(f.components)}


def cmd_edgecensus(args) -> tuple[Graph, dict]:
    g = _load(args)
    census = chromatic.edge_degree_stats(whitney_complex(g))
    obj = io.census_to_obj(census)
    _out(args, io.dumps(obj))
    return g, {"census": obj}


def cmd_distance(args) -> tuple[Graph, dict]:
    g = _load(args)
    h = io.read_graph(args.other)
    return g, {"distance": graph_distance(g, h)}


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--in", dest="input", help="Graph JSON input file")
    p.add_argument("--graph", help="generator spec such as cycle:5 or cycle:4+cycle:4")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="softbary", description=__doc__.splitlines()[0])
    parser.add_argument("--cap", type=int, default=manifold.DEFAULT_WORK_CAP, help="recognizer work cap")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, inputs=True, out=True):
        p = sub.add_parser(name)
        if inputs:
            _add_input(p)
        if out:
            p.add_argument("--out")
        p.set_defaults(func=fn)
        return p

    p = add("gen", cmd_gen, inputs=False)
    p.add_argument("--name", choices=generators.NAMES)
    p.add_argument("--params", type=int, nargs="*", default=[])
    p.add_argument("--graph")

    p = add("refine", cmd_refine)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--soft", action="store_true", default=True)
    mode.add_argument("--strong", action="store_true")
    p.add_argument("--steps", type=int, default=1)

    add("classify", cmd_classify)
    add("dual", cmd_dual)
    add("fvector", cmd_fvector, out=False)
    add("spectrum", cmd_spectrum)

    p = add("dos", cmd_dos)
    p.add_argument("--bins", type=int, default=128)
    p.add_argument("--lo", type=float, default=0.0)
    p.add_argument("--hi", type=float)
    p.add_argument("--counting", action="store_true")

    p = add("hexdos", cmd_hexdos, inputs=False)
    p.add_argument("--grid", type=int, default=400)
    p.add_argument("--bins", type=int, default=128)
    p.add_argument("--lo", type=float, default=0.0)
    p.add_argument("--hi", type=float, default=9.0)
    p.add_argument("--compare", help="histogram CSV to measure against")

    p = add("converge", cmd_converge, out=False)
    p.add_argument("--steps", type=int, default=3)
    p.add_argument("--refiner", choices=("soft", "strong"), default="soft")
    p.add_argument("--bins", type=int, default=128)
    p.add_argument("--hi", type=float)
    p.add_argument("--counting", action="store_true")
    p.add_argument("--outdir")

    add("treeforest", cmd_treeforest, out=False)
    p = add("potential", cmd_potential, out=False)
    p.add_argument("--z", type=float, default=1.0)

    p = add("color", cmd_color)
    how = p.add_mutually_exclusive_group()
    how.add_argument("--exact", action="store_true", default=True)
    how.add_argument("--construct", action="store_true")
    p.add_argument("--budget", type=int, default=chromatic.DEFAULT_BUDGET)

    for name, fn in (("dualcolor", cmd_dualcolor), ("forestcover", cmd_forestcover)):
        p = add(name, fn)
        p.add_argument("--seed", type=int, default=0)

    add("fisk", cmd_fisk)
    add("edgecensus", cmd_edgecensus)
    p = add("distance", cmd_distance, out=False)
    p.add_argument("--other", required=True, help="second Graph JSON file")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    summary: dict = {"command": args.command}
    try:
        g, extra = args.func(args)
        if g is not None:
            summary.update(_describe(g, args.cap))
        summary.update(extra)
        status = EXIT_OK
    except VerifiedFailure as exc:
        if exc.graph is not None:
            summary.update(_describe(exc.graph, args.cap))
        summary.update({"status": "failure", "error": str(exc), "report": exc.report})
        status = EXIT_FAILURE
    except (UsageError, io.FormatError, ValueError, OSError) as exc:
        summary.update({"status": "error", "error": str(exc)})
        print(json.dumps(summary, sort_keys=True), file=sys.stderr)
        return EXIT_USAGE
    else:
        summary["status"] = "ok"
    print(json.dumps(summary, sort_keys=True))
    return status


if __name__ == "__main__":
    sys.exit(main())
