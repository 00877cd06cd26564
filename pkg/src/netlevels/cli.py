"""Command-line entry point: ``netlevels analyze|generate|fit``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from netlevels import __version__
from netlevels.centrality import DisconnectedGraphError, assign_levels, eccentricity_profile
from netlevels.classifier import agreement, classify_edges, format_classification, read_truth_table
from netlevels.distfit import (
    AnalysisReport,
    FitError,
    build_ccdf,
    csv_header,
    csv_row,
    fit_power_law,
    fit_report,
    fit_weibull,
    parse_ccdf,
    sig6,
    write_ccdfs,
)
from netlevels.generators import BAConfig, EBAConfig, generate
from netlevels.graph import (
    Graph,
    ParseError,
    connected_components,
    largest_component,
    read_edge_list,
    write_edge_list,
)

EXIT_PARSE = 1
EXIT_DISCONNECTED = 2
EXIT_FIT = 3


class CommandError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _dump_json(obj, path: Path | None = None) -> str:
    text = json.dumps(obj, indent=2, allow_nan=False) + "\n"
    if path is not None:
        path.write_text(text, encoding="utf-8")
    return text


def analyze_graph(
    g: Graph,
    name: str,
    source: str,
    *,
    strict_connected: bool = False,
    ecc_algorithm: str = "pruned",
    threads: int | None = None,
    truth_path: str | None = None,
) -> tuple[AnalysisReport, Graph, object]:
    """Run the LCC -> center -> levels -> classify -> fit pipeline."""
    comps = connected_components(g)
    if not comps.is_connected and strict_connected:
        other = int((comps.component_id != comps.component_id[0]).argmax())
        raise DisconnectedGraphError(g.labels[0], g.labels[other])
    work = largest_component(g, comps)
    profile = eccentricity_profile(work, ecc_algorithm, threads=threads)
    levels = assign_levels(work, profile)
    c = classify_edges(work, levels)
    report = fit_report(work, c, name=name)
    if truth_path is not None:
        report.agreement = agreement(work, c, read_truth_table(truth_path)).to_dict()
    report.provenance = {
        "input": source,
        "lcc_reduced": not comps.is_connected,
        "input_nodes": g.node_count,
        "input_edges": g.edge_count,
        "components": comps.component_count,
        "normalization": g.normalization.to_dict(),
        "ecc_algorithm": ecc_algorithm,
        "radius": profile.radius,
        "diameter": profile.diameter,
        "center_size": len(profile.center),
        "max_level": levels.max_level,
        "tool_version": __version__,
    }
    return report, work, c


def write_analysis(report: AnalysisReport, g: Graph, c, out_dir: Path, fmt: str) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    if fmt in ("json", "both"):
        _dump_json(report.to_dict(), out_dir / "report.json")
    if fmt in ("csv", "both"):
        (out_dir / "report.csv").write_text(csv_header() + csv_row(report), encoding="utf-8")
    write_ccdfs(report, out_dir)
    with open(out_dir / "classification.tsv", "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_classification(g, c))


def _run_analysis(g: Graph, args, name: str, source: str) -> int:
    try:
        report, work, c = analyze_graph(
            g,
            name,
            source,
            strict_connected=args.strict_connected,
            ecc_algorithm=args.ecc_algorithm,
            threads=args.threads,
            truth_path=args.truth,
        )
    except DisconnectedGraphError as exc:
        raise CommandError(str(exc), EXIT_DISCONNECTED) from None
    except (ParseError, OSError) as exc:
        raise CommandError(f"truth table: {exc}", EXIT_PARSE) from None
    write_analysis(report, work, c, Path(args.out), args.format)
    sys.stdout.write(csv_header() + csv_row(report))
    if report.agreement is not None and report.agreement["agreement_percent"] is not None:
        print(f"agreement: {report.agreement['agreement_percent']:.1f}%")
    failures = report.fit_failures()
    if failures and args.fail_on_fit_error:
        raise CommandError(f"fit failures: {', '.join(failures)}", EXIT_FIT)
    return 0


def cmd_analyze(args) -> int:
    try:
        g = read_edge_list(args.path)
    except (ParseError, OSError, UnicodeDecodeError) as exc:
        raise CommandError(f"{args.path}: {exc}", EXIT_PARSE) from None
    name = args.name or Path(args.path).stem
    return _run_analysis(g, args, name, str(args.path))


def cmd_generate(args) -> int:
    try:
        if args.model == "ba":
            cfg = BAConfig(m0=args.m0, m=args.m, t=args.t, seed=args.seed)
        else:
            cfg = EBAConfig(p=args.p, q=args.q, m=args.m, m0=args.m0, t=args.t, seed=args.seed)
        result = generate(cfg)
    except ValueError as exc:
        raise CommandError(f"invalid parameters: {exc}", EXIT_PARSE) from None
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    name = args.name or f"{args.model}_seed{args.seed}"
    edge_path = out / f"{name}.edges"
    write_edge_list(result.graph, edge_path, header=[f"netlevels {__version__} {args.model} {cfg}"])
    _dump_json(result.report.to_dict(), out / f"{name}.generation.json")
    print(f"wrote {edge_path} (N={result.graph.node_count}, E={result.graph.edge_count})")
    if args.analyze:
        # the edge file sits beside the report; a bare name keeps output independent of --out
        return _run_analysis(result.graph, args, name, edge_path.name)
    return 0


def _read_fit_input(path: str):
    with open(path, encoding="utf-8") as fh:
        lines = fh.readlines()
    body = [ln for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
    if path.endswith(".tsv") or (body and len(body[0].split()) == 2):
        return parse_ccdf(lines)
    try:
        degrees = [int(ln.strip()) for ln in body]
    except ValueError as exc:
        raise ValueError(f"degree list: {exc}") from None
    return build_ccdf(degrees)


def cmd_fit(args) -> int:
    try:
        ccdf = _read_fit_input(args.path)
    except (ValueError, OSError) as exc:
        raise CommandError(f"{args.path}: {exc}", EXIT_PARSE) from None
    models = ["power_law", "weibull"] if args.model == "both" else [args.model.replace("-", "_")]
    out = {"input": args.path, "points": len(ccdf)}
    code = 0
    for model in models:
        fit = fit_power_law if model == "power_law" else fit_weibull
        try:
            out[model] = {k: (sig6(v) if isinstance(v, float) else v) for k, v in fit(ccdf).to_dict().items()}
        except FitError as exc:
            out[model] = {"error": str(exc)}
            code = EXIT_FIT
    sys.stdout.write(_dump_json(out))
    return code


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", default=".", help="output directory")
    parser.add_argument("--format", choices=("json", "csv", "both"), default="both")
    parser.add_argument("--ecc-algorithm", choices=("naive", "pruned"), default="pruned")
    parser.add_argument("--strict-connected", action="store_true",
                        help="fail on disconnected input instead of using the largest component")
    parser.add_argument("--name", help="dataset name (default: file stem)")
    parser.add_argument("--truth", help="edge-type truth table 'u v P2C|P2P'")
    parser.add_argument("--threads", type=int, help="threads for naive eccentricity")
    parser.add_argument("--fail-on-fit-error", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="netlevels", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify edges of an edge list and fit degree CCDFs")
    p.add_argument("path")
    _common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("generate", help="grow a BA or EBA network")
    p.add_argument("model", choices=("ba", "eba"))
    p.add_argument("--m0", type=int, default=2)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--p", type=float, default=0.0)
    p.add_argument("--q", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--analyze", action="store_true", help="analyze the generated graph")
    _common(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("fit", help="fit a degree list or CCDF table")
    p.add_argument("path")
    p.add_argument("--model", choices=("power-law", "weibull", "both"), default="both")
    p.set_defaults(func=cmd_fit)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CommandError as exc:
        print(f"netlevels: error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
