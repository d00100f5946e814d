"""Command line front end: ``weakiasi gen|solve|verify|spectrum|check``.

Exit codes: 0 success, 1 negative verdict (labeling not weak, or a REFUTED
catalog row), 2 usage, parse, I/O or size-limit errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog
from .errors import IncompleteLabelingError, WeakIASIError
from .expr import eval_expr, parse_expr
from .formats import read_graph, read_labeling, write_certificate, write_graph
from .labels import is_iasi, is_weak_iasi, mono_indexed_edges

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2


class CliError(Exception):
    pass


def _graph_from_arg(text: str):
    notes: list[str] = []
    g = eval_expr(parse_expr(text), notes)
    for note in notes:
        print(f"note: {note}", file=sys.stderr)
    return g


def _emit(args, text: str) -> None:
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _check_format(args, allowed: tuple[str, ...]) -> str:
    fmt = args.format or allowed[0]
    if fmt not in allowed:
        raise CliError(f"--format for {args.command} must be one of {', '.join(allowed)}")
    return fmt


def cmd_gen(args) -> int:
    _check_format(args, ("graph",))
    _emit(args, write_graph(_graph_from_arg(args.expr)))
    return EXIT_OK


def cmd_solve(args) -> int:
    from .sparing import sparing_exact

    _check_format(args, ("json",))
    g = _graph_from_arg(args.expr)
    _emit(args, write_certificate(sparing_exact(g)) + "\n")
    return EXIT_OK


def cmd_spectrum(args) -> int:
    from .sparing import mono_count_spectrum

    _check_format(args, ("text",))
    g = _graph_from_arg(args.expr)
    _emit(args, " ".join(map(str, mono_count_spectrum(g))) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    fmt = _check_format(args, ("text", "json"))
    try:
        g = read_graph(Path(args.graph).read_text())
        f = read_labeling(Path(args.labeling).read_text())
    except OSError as exc:
        raise CliError(str(exc)) from None
    extra = sorted(set(f) - set(g.vertices))
    if extra:
        raise CliError(f"labeling names vertices not in the graph: {extra}")
    try:
        iasi = is_iasi(g, f)
        weak = is_weak_iasi(g, f)
    except IncompleteLabelingError as exc:
        raise CliError(str(exc.args[0])) from None
    mono = mono_indexed_edges(g, f)
    if fmt == "json":
        obj = {
            "iasi": iasi.verdict,
            "weak": weak.verdict,
            "mono_edges": [list(e) for e in mono],
            "violations": [
                {"kind": v.kind, "elements": [list(x) if isinstance(x, tuple) else x for x in v.elements]}
                for v in weak.violations
            ],
        }
        text = json.dumps(obj, separators=(",", ":")) + "\n"
    else:
        lines = [
            f"iasi: {str(iasi.verdict).lower()}",
            f"weak: {str(weak.verdict).lower()}",
            "mono_edges: " + " ".join([str(len(mono))] + [f"{u}-{v}" for u, v in mono]),
        ]
        lines += [f"violation: {v.describe()}" for v in weak.violations]
        text = "\n".join(lines) + "\n"
    _emit(args, text)
    return EXIT_OK if weak.verdict else EXIT_NEGATIVE


def parse_param(spec: str) -> tuple[str, list]:
    """``n=3..12``, ``n=3,5,7``, ``family=path`` -> (name, values)."""
    name, sep, rhs = spec.partition("=")
    if not sep or not name or not rhs:
        raise CliError(f"bad --param {spec!r}; expected name=values")
    values: list = []
    for part in rhs.split(","):
        lo, dots, hi = part.partition("..")
        if dots:
            if not (lo.isdigit() and hi.isdigit()):
                raise CliError(f"bad range {part!r} in --param {spec!r}")
            values.extend(range(int(lo), int(hi) + 1))
        elif part.isdigit():
            values.append(int(part))
        elif part:
            values.append(part)
        else:
            raise CliError(f"empty value in --param {spec!r}")
    return name.strip(), values


def cmd_check(args) -> int:
    fmt = _check_format(args, ("csv", "md"))
    try:
        theorem = catalog.TheoremId(args.theorem)
    except ValueError:
        raise CliError(
            f"unknown theorem {args.theorem!r}; known: {', '.join(t.value for t in catalog.TheoremId)}"
        ) from None
    ranges: dict[str, list] = {}
    for spec in args.param:
        name, values = parse_param(spec)
        ranges.setdefault(name, []).extend(values)
    result = catalog.sweep(theorem, ranges, args.convention)
    _emit(args, result.to_csv() if fmt == "csv" else result.to_markdown())
    if fmt == "csv":
        counts = result.summary
        print("summary: " + ", ".join(
            f"{v}={counts.get(v, 0)}"
            for v in (catalog.CONFIRMED, catalog.REFUTED, catalog.NOT_APPLICABLE, catalog.ERROR)
        ), file=sys.stderr)
    verdicts = {r.verdict for r in result.rows}
    if catalog.ERROR in verdicts:
        return EXIT_ERROR
    return EXIT_NEGATIVE if catalog.REFUTED in verdicts else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", help="write the result to this file instead of stdout")
    common.add_argument("--format", help="output format (command specific)")

    parser = argparse.ArgumentParser(prog="weakiasi", description="Weak integer additive set-indexers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="evaluate a graph expression and print the graph file")
    p.add_argument("expr")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", parents=[common], help="sparing number with a certificate labeling")
    p.add_argument("expr", help="graph expression, or @file")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", parents=[common], help="check a labeling against a graph")
    p.add_argument("graph")
    p.add_argument("labeling")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("spectrum", parents=[common], help="all achievable mono-indexed edge counts")
    p.add_argument("expr")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("check", parents=[common], help="adjudicate a published formula over a parameter grid")
    p.add_argument("theorem")
    p.add_argument("--param", "-p", action="append", default=[], metavar="NAME=VALUES",
                   help="e.g. n=3..12, n=3,5,7, family=path (repeatable)")
    p.add_argument("--convention", help="vertices|length|both for path sizes; regular|maxdeg|both for COMPLEMENT_RREG_BOUND")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, WeakIASIError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
