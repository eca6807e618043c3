"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 verification failure,
3 enumeration limit exceeded.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import sys

from . import checks, graph, ideal, oracle, resolution, series, toric
from .combinatorics import Partition, PartitionError, corners, parse_partition

log = logging.getLogger("ferrers")

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# --- report builders (pure; reused by the JSON round-trip tests) ---------------

def tableau_diagram(p: Partition) -> str:
    outer = set(corners(p).outer)
    width = len(f"x{p.n}")
    lines = []
    for i in range(1, p.n + 1):
        cells = ["*" if (i, j) in outer else "#" for j in range(1, p.part(i) + 1)]
        lines.append(f"{'x' + str(i):>{width}} | " + " ".join(cells))
    return "\n".join(lines)


def decompose_report(p: Partition, redundant: bool = False) -> dict:
    comps = ideal.redundant_decomposition(p) if redundant else ideal.irredundant_decomposition(p)
    return {"partition": list(p.parts), "components": [c.to_json() for c in comps]}


def series_report(p: Partition) -> dict:
    out = {"partition": list(p.parts)}
    out.update(series.betti_numbers(p).to_json())
    out["hilbert"] = series.hilbert_series(p).to_json()
    return out


def toric_report(p: Partition) -> dict:
    out = {"partition": list(p.parts)}
    out.update(toric.toric_invariants(p).to_json())
    return out


def invariants_report(p: Partition) -> dict:
    return {
        "partition": list(p.parts),
        "n": p.n, "m": p.m, "weight": p.weight, "s": p.s,
        "ideal": ideal.invariants(p).to_json(),
        "components": [c.to_json() for c in ideal.irredundant_decomposition(p)],
        "series": {k: v for k, v in series_report(p).items() if k != "partition"},
        "toric": toric.toric_invariants(p).to_json(),
    }


def paths_report(p: Partition) -> dict:
    return {"partition": list(p.parts),
            "turn_counts": [str(c) for c in oracle.lattice_path_counts(p)]}


def recognize_report(g: graph.BipartiteGraph) -> dict:
    out = graph.recognize_ferrers(g).to_json()
    out["nx"], out["ny"] = g.nx, g.ny
    return out


# --- text renderers -------------------------------------------------------------

def _emit(args, report: dict, text: str):
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print(text)


def _read_partition(args) -> Partition:
    if (args.partition is None) == (args.partition_file is None):
        raise UsageError("give exactly one of PARTITION or --partition-file")
    if args.partition_file is not None:
        with open(args.partition_file) as fh:
            text = " ".join(line.split("#", 1)[0] for line in fh)
    else:
        text = args.partition
    return parse_partition(text)


def cmd_invariants(args):
    p = _read_partition(args)
    rep = invariants_report(p)
    inv = ideal.invariants(p)
    tor = toric.toric_invariants(p)
    beta = series.betti_numbers(p)
    lines = [
        f"partition {p}  (n={p.n}, m={p.m}, |lambda|={p.weight}, s={p.s})",
        tableau_diagram(p),
        "",
        "edge ideal:",
        "  decomposition: " + " ∩ ".join(str(c) for c in ideal.irredundant_decomposition(p)),
        f"  height {inv.height}, pd {inv.projective_dimension}, reg {inv.regularity}, "
        f"unmixed {inv.unmixed}, Cohen-Macaulay {inv.cohen_macaulay}"
        + (f" (type {inv.cm_type})" if inv.cm_type else ""),
        "  betti: " + " ".join(map(str, beta.beta)),
        f"  hilbert series: {series.hilbert_series(p)}",
        "toric ring:",
        f"  h-vector {' '.join(map(str, tor.h_vector))}, multiplicity {tor.multiplicity}",
        f"  dim {tor.dimension}, reg {tor.regularity}, a-invariant {tor.a_invariant}, "
        f"Gorenstein {tor.gorenstein}",
    ]
    _emit(args, rep, "\n".join(lines))


def cmd_decompose(args):
    p = _read_partition(args)
    comps = ideal.redundant_decomposition(p) if args.redundant else ideal.irredundant_decomposition(p)
    _emit(args, decompose_report(p, args.redundant),
          tableau_diagram(p) + "\n" + " ∩ ".join(str(c) for c in comps))


def cmd_betti(args):
    p = _read_partition(args)
    beta = series.betti_numbers(p)
    rows = [f"  beta_{i} = {b}" + (f"  (degree {i + 1})" if i else "") for i, b in enumerate(beta.beta)]
    _emit(args, series_report(p), f"Betti numbers of R/I for {p} (pd {beta.pd}):\n" + "\n".join(rows))


def cmd_hilbert(args):
    p = _read_partition(args)
    h = series.hilbert_series(p)
    rep = series_report(p)
    values = [series.hilbert_function(h, d) for d in range(args.max_degree + 1)]
    rep["hilbert_function"] = [str(v) for v in values]
    _emit(args, rep, f"P(R/I, t) = {h}\nh(d), d=0..{args.max_degree}: " + " ".join(map(str, values)))


def cmd_resolution(args):
    p = _read_partition(args)
    cc = resolution.build_resolution(p)
    rep = resolution.verify_resolution(p, args.depth, method=args.method)
    out = cc.to_json()
    out["verification"] = rep.to_json()
    lines = [f"cellular resolution of I for {p}",
             "f-vector: " + " ".join(map(str, cc.complex.f_vector))]
    for k, entries in enumerate(cc.maps, start=1):
        lines.append(f"d_{k}: {len(cc.complex.faces[k - 1])} x {len(cc.complex.faces[k])}, "
                     f"{len(entries)} nonzero entries")
    lines += [f"check {name}: {'ok' if ok else 'FAILED ' + detail}" for name, ok, detail in rep.checks]
    _emit(args, out, "\n".join(lines))
    return EXIT_OK if rep.passed else EXIT_VERIFY


def cmd_toric(args):
    p = _read_partition(args)
    tor = toric.toric_invariants(p)
    lines = [f"toric ring of G for {p}",
             f"ladder shape: {','.join(map(str, tor.ladder)) or '(degenerate)'}",
             f"h-vector: {' '.join(map(str, tor.h_vector))}",
             f"multiplicity: {tor.multiplicity}",
             f"dimension: {tor.dimension}",
             f"regularity: {tor.regularity}",
             f"a-invariant: {tor.a_invariant}",
             f"Gorenstein: {tor.gorenstein}"]
    if tor.gorenstein:
        lines.append(f"unmixed witness: {toric.gorenstein_witness(p)}")
    _emit(args, toric_report(p), "\n".join(lines))


def cmd_recognize(args):
    g = graph.strip_isolated(graph.read_edge_list(args.edges), warn=True)
    if g.nx == 0:
        raise UsageError("edge list has no edges")
    rep = recognize_report(g)
    res = graph.recognize_ferrers(g)
    if res.ferrers:
        text = (f"Ferrers graph with partition {res.partition}\n"
                f"row order: {' '.join(f'x{i}' for i in res.row_permutation)}\n"
                f"column order: {' '.join(f'y{j}' for j in res.col_permutation)}")
    else:
        i, i2, j, k = res.obstruction
        text = (f"not a Ferrers graph: x{i}y{k} and x{i2}y{j} are edges, "
                f"x{i}y{j} and x{i2}y{k} are not")
    _emit(args, rep, text)


def cmd_paths(args):
    p = _read_partition(args)
    counts = oracle.lattice_path_counts(p)
    rep = paths_report(p)
    lines = [f"lattice paths in the tableau of {p} by east-north turns:"]
    lines += [f"  {k} turns: {c}" for k, c in enumerate(counts)]
    if args.list:
        rep["paths"] = [path.steps for path in oracle.lattice_paths(p)]
        lines += [f"  {path.steps} ({path.turns})" for path in oracle.lattice_paths(p)]
    _emit(args, rep, "\n".join(lines))


def cmd_verify(args):
    bounds = checks.FULL if args.level == "full" else checks.QUICK
    overrides = {"seed": args.seed}
    if args.max_weight is not None:
        overrides["max_weight"] = args.max_weight
        overrides["resolution_weight"] = min(bounds.resolution_weight, args.max_weight)
        overrides["acyclic_weight"] = min(bounds.acyclic_weight, args.max_weight)
    if args.max_degree is not None:
        overrides["max_degree"] = args.max_degree
        overrides["toric_degree"] = args.max_degree
    bounds = dataclasses.replace(bounds, **overrides)
    results = []
    failed = None
    for name, violation in checks.run_all(bounds):
        results.append({"sweep": name, "ok": violation is None,
                        "counterexample": None if violation is None else str(violation)})
        if args.format != "json":
            print(f"{name:<14} {'ok' if violation is None else 'FAILED ' + str(violation)}", flush=True)
        if violation is not None and failed is None:
            failed = violation
    if args.format == "json":
        print(json.dumps({"level": args.level, "bounds": dataclasses.asdict(bounds),
                          "results": results, "passed": failed is None}, indent=2))
    return EXIT_OK if failed is None else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ferrers", description="Ferrers graphs, their edge ideals and toric rings.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_partition(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("partition", nargs="?", help='comma-separated parts, e.g. "6,4,4,2,1"')
        sp.add_argument("--partition-file", help="file holding the partition")
        sp.add_argument("--format", choices=["text", "json"], default="text")
        sp.set_defaults(func=func)
        return sp

    with_partition("invariants", cmd_invariants, "summary of ideal, series and toric invariants")
    sp = with_partition("decompose", cmd_decompose, "primary decomposition of the edge ideal")
    sp.add_argument("--redundant", action="store_true", help="the unpruned decomposition")
    with_partition("betti", cmd_betti, "Betti numbers of R/I")
    sp = with_partition("hilbert", cmd_hilbert, "Hilbert series and function of R/I")
    sp.add_argument("--max-degree", type=int, default=6)
    sp = with_partition("resolution", cmd_resolution, "cellular minimal free resolution")
    sp.add_argument("--depth", type=int, default=4, choices=[1, 2, 3, 4])
    sp.add_argument("--method", choices=["exact", "modular"], default="exact")
    with_partition("toric", cmd_toric, "invariants of the toric ring")
    sp = with_partition("paths", cmd_paths, "lattice paths counted by turns")
    sp.add_argument("--list", action="store_true", help="list every path")

    sp = sub.add_parser("recognize", help="decide whether a bipartite graph is Ferrers")
    sp.add_argument("--edges", required=True, help="edge-list file")
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_recognize)

    sp = sub.add_parser("verify", help="run the invariant sweeps")
    sp.add_argument("--level", choices=["quick", "full"], default="quick")
    sp.add_argument("--max-weight", type=int)
    sp.add_argument("--max-degree", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    for bound in ("max_weight", "max_degree"):
        value = getattr(args, bound, None)
        if value is not None and value < (1 if bound == "max_weight" else 0):
            print(f"ferrers: error: --{bound.replace('_', '-')} out of range", file=sys.stderr)
            return EXIT_USAGE
    try:
        code = args.func(args)
    except (UsageError, PartitionError, graph.GraphError, OSError) as exc:
        print(f"ferrers: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except oracle.ResourceLimitError as exc:
        print(f"ferrers: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
