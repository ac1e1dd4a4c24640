"""Command line entry points.

Subcommands: construct (extremal graphs), spectrum (eigenvalues of one
graph), check (one theorem on one graph), find-tree (exact bounded-degree
tree search), certify (violating set or witness tree), verify (exhaustive
family runs with JSONL/CSV/PNG reports). Graph inputs are a single file
holding either a graph6 line or an edge list (vertex count, then 'u v'
lines); the format is detected from the first line. Exit status is nonzero
when a verification finds a counterexample, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import certificates as ct
from . import checks as ck
from . import enumeration as en
from . import extremal as ex
from . import graphs as gr
from . import harness as hn
from .spectra import adjacency_spectrum, laplacian_spectrum


def read_graph_file(path: str) -> gr.Graph:
    text = Path(path).read_text()
    stripped = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not stripped:
        raise ValueError(f"{path}: no graph data")
    first = stripped[0].split()[0]
    if first.lstrip("-").isdigit():
        return gr.parse_edge_list(text)
    if len(stripped) > 1:
        raise ValueError(f"{path}: expected a single graph6 line or one edge list")
    return gr.parse_graph6(stripped[0])


def _write_graph(g: gr.Graph, fmt: str) -> str:
    if fmt == "graph6":
        return gr.to_graph6(g) + "\n"
    return gr.to_edge_list(g)


def _cmd_construct(args) -> int:
    if args.family == "H":
        if args.r is None:
            raise ValueError("construct --family H needs --r")
        if args.k is None:
            params = ex.RegularCaseParams.q2_case(args.r)
        else:
            params = ex.RegularCaseParams.from_degrees(args.r, args.k)
        g = ex.build_H(params)
    else:
        if args.n is None or args.k is None:
            raise ValueError("construct --family leaf-extremal needs --n and --k")
        g = ex.build_leaf_extremal(ex.LeafFamilyParams(args.n, args.k, args.s))
    sys.stdout.write(_write_graph(g, args.out))
    return 0


def _cmd_spectrum(args) -> int:
    g = read_graph_file(args.infile)
    vals = adjacency_spectrum(g) if args.matrix == "adjacency" else laplacian_spectrum(g)
    for v in vals:
        print(f"{v:.12g}")
    return 0


def _cmd_check(args) -> int:
    g = read_graph_file(args.infile)
    theorem = ck.resolve_theorem(args.theorem)
    rec = ck.apply_theorem(theorem, g, args.k, args.t)
    print(hn.record_json_line(rec))
    return 1 if rec.verdict == ck.COUNTEREXAMPLE else 0


def _cmd_find_tree(args) -> int:
    g = read_graph_file(args.infile)
    if args.mode == "ktree":
        tree = ct.find_k_tree(g, args.k)
    else:
        tree = ct.find_leaf_tree(g, args.k)
    if tree is None:
        print("none")
        return 1
    for u, v in tree.edges:
        print(f"{u} {v}")
    return 0


def _cmd_certify(args) -> int:
    g = read_graph_file(args.infile)
    if args.condition == "win":
        cert = ct.certify_win(g, args.k)
    else:
        cert = ct.certify_kaneko(g, args.k)
    payload: dict = {"condition": args.condition, "k": args.k, "kind": cert.kind}
    if cert.kind == ct.TREE_FOUND:
        payload["edges"] = [list(e) for e in cert.tree.edges]
    elif cert.kind in (ct.WIN_VIOLATOR, ct.KANEKO_VIOLATOR):
        payload["vertex_set"] = list(cert.vertex_set)
        payload["component_count"] = cert.component_count
        payload["isolated_count"] = cert.isolated_count
    print(json.dumps(payload))
    return 0


def _cmd_verify(args) -> int:
    spec = en.FamilySpec(args.family, args.n, r=args.r, dedup_iso=args.dedup)
    summary = hn.run_verification(
        spec,
        args.theorem,
        k=args.k,
        t=args.t,
        report_path=args.report,
        workers=args.workers,
        figure=not args.no_figure,
    )
    margin = "" if summary.min_pass_margin is None else f" min_pass_margin={summary.min_pass_margin:.6g}"
    print(
        f"theorem={summary.theorem} family={summary.family} n={summary.n}"
        f" k={summary.k} total={summary.total} pass={summary.passes}"
        f" vacuous={summary.vacuous} boundary={summary.boundary}"
        f" counterexample={summary.counterexamples}"
        f" seconds={summary.seconds:.3f}{margin}"
    )
    report = Path(args.report)
    print(f"report: {report}")
    print(f"summary: {report.with_suffix('.csv')}")
    if not args.no_figure:
        print(f"figure: {report.with_suffix('.png')}")
    return 1 if summary.counterexamples else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treespectra",
        description="Spectral conditions for degree-bounded spanning trees: "
        "constructions, exact searches, and exhaustive verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit an extremal graph")
    p.add_argument("--family", choices=("H", "leaf-extremal"), required=True)
    p.add_argument("--r", type=int, help="host regularity (family H)")
    p.add_argument("--k", type=int, help="tree degree / leaf degree bound")
    p.add_argument("--n", type=int, help="order (family leaf-extremal)")
    p.add_argument("--s", type=int, default=1, help="cut size (family leaf-extremal)")
    p.add_argument("--out", choices=("graph6", "edgelist"), default="graph6")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("spectrum", help="print eigenvalues, largest first")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--matrix", choices=("adjacency", "laplacian"), default="adjacency")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("check", help="apply one theorem checker to one graph")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--theorem", required=True, help="theorem id or unique prefix")
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("find-tree", help="exact bounded-degree spanning tree search")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--mode", choices=("ktree", "leaftree"), required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_find_tree)

    p = sub.add_parser("certify", help="violating set, witness tree, or exhausted")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--condition", choices=("win", "kaneko"), required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("verify", help="run one theorem over a whole family")
    p.add_argument("--family", choices=("all", "connected", "regular"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, help="regularity (family regular)")
    p.add_argument("--dedup", action="store_true", help="one graph per isomorphism class")
    p.add_argument("--theorem", required=True, help="theorem id or unique prefix")
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--report", required=True, help="JSONL output path")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-figure", action="store_true")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
