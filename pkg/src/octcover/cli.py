"""Command-line interface.

Subcommands: gen, color, verify, decompose, triangles, wedgegraph,
search, render.  Exit codes: 0 success / Ok, 1 verified violation found,
2 usage or format error, 3 resource budget exhausted.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import instances, svg
from .coloring import (
    BudgetExhausted,
    DEFAULT_NODE_BUDGET,
    ExhaustiveTwoColorer,
    color_set,
)
from .core import OctantApex, WedgeApex, project, rank_reduce
from .duality import decompose_cover, decompose_triangle_cover, min_full_coverage
from .partition import build_partition
from .search import (
    exhaustive_instances,
    family_instances,
    opset_to_raw,
    random_instances,
    sweep,
)
from .verify import Violation, empirical_min_threshold, verify
from .wedgegraph import build_wedge_graph, four_color

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _load_opset(path: str):
    raw = instances.parse_points(Path(path).read_text())
    return project(rank_reduce(raw))


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _violation_line(v: Violation) -> str:
    if isinstance(v.apex, WedgeApex):
        apex = f"({v.apex.a},{v.apex.b})"
    else:
        apex = f"({v.apex.a1},{v.apex.a2},{v.apex.a3})"
    ids = ",".join(str(i) for i in v.witness)
    return (
        f"violation apex={apex} time={v.time} distinct={v.distinct_colors_found} "
        f"witness={ids}"
    )


def _cmd_gen(args) -> int:
    pts = instances.generate(args.kind, args.n, args.seed)
    _write(args.output, instances.format_points(pts))
    return EXIT_OK


def _cmd_color(args) -> int:
    opset = _load_opset(args.input)
    base = ExhaustiveTwoColorer(args.budget)
    coloring = color_set(opset, tuple(range(1, args.k + 1)), base)
    _write(args.output, instances.format_coloring(coloring))
    return EXIT_OK


def _cmd_verify(args) -> int:
    opset = _load_opset(args.input)
    coloring = instances.parse_coloring(Path(args.coloring).read_text())
    violations = verify(opset, coloring, args.m, args.d)
    if args.format == "json":
        report = {
            "ok": not violations,
            "violations": [
                {
                    "apex": [v.apex.a, v.apex.b],
                    "time": v.time,
                    "witness": list(v.witness),
                    "distinct_colors_found": v.distinct_colors_found,
                }
                for v in violations
            ],
            "empirical_min_threshold": empirical_min_threshold(
                opset, coloring, args.d
            ),
        }
        print(json.dumps(report, indent=2))
    else:
        for v in violations:
            print(_violation_line(v))
        if not violations:
            print("ok")
    return EXIT_VIOLATION if violations else EXIT_OK


def _cmd_decompose(args) -> int:
    cover = instances.parse_cover(Path(args.input).read_text())
    base = ExhaustiveTwoColorer(args.budget)
    decomp = decompose_cover(cover, args.k, base)
    lines = [f"{i} {decomp.class_of[i]}" for i in sorted(decomp.class_of)]
    if args.format == "json":
        print(
            json.dumps(
                {
                    "classes": decomp.class_of,
                    "min_full_coverage": min_full_coverage(cover, decomp, args.k),
                },
                indent=2,
            )
        )
    else:
        _write(args.output, "".join(f"{ln}\n" for ln in lines))
        print(
            f"# all {args.k} classes cover every target with coverage >= "
            f"{min_full_coverage(cover, decomp, args.k)}",
            file=sys.stderr,
        )
    return EXIT_OK


def _cmd_triangles(args) -> int:
    homothets, targets = instances.parse_triangles(Path(args.input).read_text())
    base = ExhaustiveTwoColorer(args.budget)
    decomp = decompose_triangle_cover(homothets, targets, args.k, base)
    _write(args.output, "".join(f"{i} {decomp.class_of[i]}\n" for i in sorted(decomp.class_of)))
    return EXIT_OK


def _cmd_partition(args) -> int:
    opset = _load_opset(args.input)
    part = build_partition(opset)
    _write(args.output, instances.format_partition(part))
    return EXIT_OK


def _cmd_wedgegraph(args) -> int:
    opset = _load_opset(args.input)
    graph = build_wedge_graph(opset)
    coloring = four_color(graph)
    for u, v in sorted(graph.edges):
        print(f"edge {u} {v}")
    for i in sorted(coloring.assignment):
        print(f"color {i} {coloring.assignment[i]}")
    if args.svg:
        _write(args.svg, svg.render_wedgegraph_svg(opset, graph, coloring))
    return EXIT_OK


def _cmd_search(args) -> int:
    if args.mode == "exhaustive":
        gen = exhaustive_instances(args.n)
    elif args.mode == "random":
        gen = random_instances(args.n, args.count, args.seed)
    elif args.mode == "family":
        gen = family_instances(args.n)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(args.mode)
    report = sweep(gen, args.colors, args.distinct, args.budget)

    out_dir = Path(args.out_dir) if args.out_dir else None
    rows = []
    for e in report.entries:
        witness_file = ""
        if out_dir and e.min_threshold == report.max_threshold:
            out_dir.mkdir(parents=True, exist_ok=True)
            inst_path = out_dir / f"{e.instance_id}.points"
            wit_path = out_dir / f"{e.instance_id}.coloring"
            inst_path.write_text(instances.format_points(opset_to_raw(e.opset)))
            wit_path.write_text(instances.format_coloring(e.witness))
            witness_file = str(wit_path)
        rows.append((e.instance_id, e.min_threshold, witness_file))

    if args.format == "json":
        print(
            json.dumps(
                {
                    "max_threshold": report.max_threshold,
                    "argmax": report.argmax_id,
                    "entries": [
                        {"instance": r[0], "min_threshold": r[1], "witness_file": r[2]}
                        for r in rows
                    ],
                },
                indent=2,
            )
        )
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(["instance-id", "min-threshold", "witness-file"])
        writer.writerows(rows)
        print(f"# max={report.max_threshold} argmax={report.argmax_id}", file=sys.stderr)

    if out_dir:
        _threshold_figure(report, out_dir / "thresholds.png")
    return EXIT_OK


def _threshold_figure(report, path: Path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    values = [e.min_threshold for e in report.entries]
    fig, ax = plt.subplots(figsize=(6, 4))
    bins = range(min(values), max(values) + 2)
    ax.hist(values, bins=bins, align="left", rwidth=0.8, color="#1f77b4")
    ax.set_xlabel("minimal feasible threshold")
    ax.set_ylabel("instances")
    ax.set_title(f"threshold distribution (max={report.max_threshold})")
    fig.tight_layout()
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path)
    plt.close(fig)


def _cmd_render(args) -> int:
    opset = _load_opset(args.input)
    if args.artifact == "partition":
        doc = svg.render_partition_svg(opset, build_partition(opset))
    elif args.artifact == "coloring":
        coloring = instances.parse_coloring(Path(args.coloring).read_text())
        doc = svg.render_coloring_svg(opset, coloring)
    elif args.artifact == "wedgegraph":
        graph = build_wedge_graph(opset)
        doc = svg.render_wedgegraph_svg(opset, graph, four_color(graph))
    else:  # pragma: no cover
        raise ValueError(args.artifact)
    _write(args.output, doc)
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="octcover")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate an instance file")
    g.add_argument("--kind", choices=["chain", "antichain", "grid", "random"], required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--output", "-o", default="-")
    g.set_defaults(func=_cmd_gen)

    c = sub.add_parser("color", help="compute a k-good coloring")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--input", required=True)
    c.add_argument("--output", "-o", default="-")
    c.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    c.set_defaults(func=_cmd_color)

    v = sub.add_parser("verify", help="verify the (m, d) wedge condition")
    v.add_argument("--m", type=int, required=True)
    v.add_argument("--d", type=int, required=True)
    v.add_argument("--input", required=True)
    v.add_argument("--coloring", required=True)
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.set_defaults(func=_cmd_verify)

    d = sub.add_parser("decompose", help="decompose an octant cover into k coverings")
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--input", required=True)
    d.add_argument("--output", "-o", default="-")
    d.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    d.add_argument("--format", choices=["text", "json"], default="text")
    d.set_defaults(func=_cmd_decompose)

    t = sub.add_parser("triangles", help="decompose a triangle-homothet cover")
    t.add_argument("--k", type=int, required=True)
    t.add_argument("--input", required=True)
    t.add_argument("--output", "-o", default="-")
    t.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    t.set_defaults(func=_cmd_triangles)

    pp = sub.add_parser("partition", help="dump the important-point partition")
    pp.add_argument("--input", required=True)
    pp.add_argument("--output", "-o", default="-")
    pp.set_defaults(func=_cmd_partition)

    w = sub.add_parser("wedgegraph", help="build and 4-color the wedge graph")
    w.add_argument("--input", required=True)
    w.add_argument("--svg")
    w.set_defaults(func=_cmd_wedgegraph)

    s = sub.add_parser("search", help="explore minimal feasible thresholds")
    s.add_argument("--mode", choices=["exhaustive", "random", "family"], required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--colors", type=int, required=True)
    s.add_argument("--distinct", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=20)
    s.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    s.add_argument("--out-dir")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=_cmd_search)

    r = sub.add_parser("render", help="render an SVG figure")
    r.add_argument("--artifact", choices=["partition", "coloring", "wedgegraph"], required=True)
    r.add_argument("--input", required=True)
    r.add_argument("--coloring")
    r.add_argument("--output", "-o", default="-")
    r.set_defaults(func=_cmd_render)
    return p


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args)
    except instances.FormatError as e:
        print(f"format error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExhausted as e:
        print(f"budget exhausted: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:  # console script
    raise SystemExit(main())
