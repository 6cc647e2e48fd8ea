"""Command-line interface.

Commands:
  tgp       geodesic census of a graph, optionally checked against closed forms
  verify    classify a labeling file against a graph
  search    exhaustive labeling search; prints a witness or a certificate
  feasible  divisibility necessary condition, single graph or parameter range
  census    stream a graph6 corpus through the search, one JSON row per graph

Exit codes separate mathematical verdicts from operational errors so scripts
can assert results directly:

  0   geodesic Leech / witness found / condition feasible
  10  almost geodesic Leech
  20  neither / condition infeasible
  21  condition not applicable (edges lie on unequal geodesic counts)
  30  search exhausted, no labeling exists within bounds
  40  search timed out
  41  search hit its node limit
  64  usage or configuration error
  65  unreadable or malformed input data
  70  closed-form cross-check mismatch

Graph sources are files (edge-list text, or .g6 for graph6) or --family
specs: cycle:N, path:N, complete:N, knn:N, kmn:MxN, wheel:N, prism.
LEECHLAB_WORKERS sets the default worker count; flags override it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections import deque
from concurrent.futures import ProcessPoolExecutor

from . import families, formulas
from .errors import (
    ConfigInvalidError,
    EmptyGraphError,
    FormulaDomainError,
    LabelCountMismatchError,
    LeechLabError,
    ParseError,
    TooSmallError,
    UnknownPresetError,
)
from .graph import Graph, census
from .graphio import format_labeling, graph6_decode, load_graph, load_labeling
from .labeling import Verdict, classify
from .search import Mode, SearchConfig, Status, _corpus_row, search

SCHEMA = "leechlab/1"

EXIT_LEECH = 0
EXIT_ALMOST = 10
EXIT_NEITHER = 20
EXIT_NOT_APPLICABLE = 21
EXIT_EXHAUSTED = 30
EXIT_TIMEOUT = 40
EXIT_NODE_LIMIT = 41
EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_MISMATCH = 70

_VERDICT_EXIT = {
    Verdict.GEODESIC_LEECH: EXIT_LEECH,
    Verdict.ALMOST_GEODESIC_LEECH: EXIT_ALMOST,
    Verdict.NEITHER: EXIT_NEITHER,
}
_STATUS_EXIT = {
    Status.FOUND: EXIT_LEECH,
    Status.EXHAUSTED_NONE: EXIT_EXHAUSTED,
    Status.TIMED_OUT: EXIT_TIMEOUT,
    Status.NODE_LIMIT: EXIT_NODE_LIMIT,
}

_USAGE_ERRORS = (
    ConfigInvalidError,
    TooSmallError,
    FormulaDomainError,
    UnknownPresetError,
    EmptyGraphError,
)


class _CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def parse_family(spec: str) -> tuple[Graph, tuple]:
    """Build a graph from a family spec; returns (graph, (name, *params))."""
    name, _, param = spec.partition(":")
    name = name.lower()
    try:
        if name == "prism":
            if param:
                raise _CliError(f"family prism takes no parameter, got {spec!r}", EXIT_USAGE)
            return families.prism(), ("prism",)
        if name == "kmn":
            m_str, _, n_str = param.partition("x")
            m, n = int(m_str), int(n_str)
            return families.complete_bipartite(m, n), ("kmn", m, n)
        n = int(param)
        if name == "cycle":
            return families.cycle(n), ("cycle", n)
        if name == "path":
            return families.path(n), ("path", n)
        if name == "complete":
            return families.complete(n), ("complete", n)
        if name == "knn":
            return families.complete_bipartite(n, n), ("knn", n)
        if name == "wheel":
            return families.wheel(n), ("wheel", n)
    except ValueError:
        raise _CliError(f"malformed family parameter in {spec!r}", EXIT_USAGE) from None
    raise _CliError(f"unknown family {name!r} in {spec!r}", EXIT_USAGE)


def _resolve_graph(args, inputs: list[str]) -> tuple[Graph, tuple | None]:
    if args.family:
        if inputs:
            raise _CliError("give either --family or a graph file, not both", EXIT_USAGE)
        return parse_family(args.family)
    if not inputs:
        raise _CliError("a graph file or --family spec is required", EXIT_USAGE)
    return load_graph(inputs[0]), None


def _closed_form(info: tuple) -> int | None:
    name = info[0]
    if name == "cycle":
        return formulas.tgp_cycle(info[1])
    if name == "knn":
        return formulas.tgp_knn(info[1])
    if name == "kmn" and info[1] == info[2]:
        return formulas.tgp_knn(info[1])
    if name == "wheel":
        return formulas.tgp_wheel(info[1])
    if name == "complete":
        return formulas.tgp_complete(info[1])
    return None


def _emit(payload: dict, as_json: bool, text_lines: list[str]) -> None:
    if as_json:
        print(json.dumps({"schema": SCHEMA, **payload}))
    else:
        for line in text_lines:
            print(line)


def cmd_tgp(args) -> int:
    g, info = _resolve_graph(args, args.inputs)
    c = census(g)
    lines = [
        f"vertices: {g.vertex_count}",
        f"edges: {g.edge_count}",
        f"geodesic paths: {c.total}",
        f"diameter: {c.diameter}",
        "by length: " + ", ".join(f"{l}:{c.by_length[l]}" for l in sorted(c.by_length)),
        "per edge: " + " ".join(str(k) for k in c.per_edge),
    ]
    payload = {
        "command": "tgp",
        "n": g.vertex_count,
        "m": g.edge_count,
        "t_gp": c.total,
        "diameter": c.diameter,
        "by_length": {str(k): v for k, v in sorted(c.by_length.items())},
        "per_edge": list(c.per_edge),
    }
    if args.closed_form:
        if info is None:
            raise _CliError("--closed-form needs a --family source", EXIT_USAGE)
        expected = _closed_form(info)
        if expected is None:
            raise _CliError(f"no closed form for family {info[0]}", EXIT_USAGE)
        payload["closed_form"] = expected
        lines.append(f"closed form: {expected}")
        if expected != c.total:
            _emit(payload, args.json, lines)
            print(
                f"closed-form mismatch: census says {c.total}, formula says {expected}",
                file=sys.stderr,
            )
            return EXIT_MISMATCH
    _emit(payload, args.json, lines)
    return 0


def _report_payload(report) -> dict:
    return {
        "verdict": report.verdict.value,
        "t_gp": report.t_gp,
        "weight_multiset": list(report.weight_multiset),
        "missing": list(report.missing),
        "duplicates": [list(d) for d in report.duplicates],
        "overshoot": list(report.overshoot),
    }


def cmd_verify(args) -> int:
    if args.family:
        if len(args.inputs) != 1:
            raise _CliError("usage: verify --family SPEC LABELING_FILE", EXIT_USAGE)
        g, _ = parse_family(args.family)
        labeling_path = args.inputs[0]
    else:
        if len(args.inputs) != 2:
            raise _CliError("usage: verify GRAPH_FILE LABELING_FILE", EXIT_USAGE)
        g = load_graph(args.inputs[0])
        labeling_path = args.inputs[1]
    lab = load_labeling(labeling_path)
    report = classify(g, lab)
    lines = [
        f"verdict: {report.verdict.value}",
        f"t_gp: {report.t_gp}",
    ]
    if report.missing:
        lines.append("missing: " + " ".join(map(str, report.missing)))
    if report.duplicates:
        lines.append("duplicates: " + " ".join(f"{v}x{c}" for v, c in report.duplicates))
    if report.overshoot:
        lines.append("overshoot: " + " ".join(map(str, report.overshoot)))
    _emit({"command": "verify", **_report_payload(report)}, args.json, lines)
    return _VERDICT_EXIT[report.verdict]


def cmd_search(args) -> int:
    g, info = _resolve_graph(args, args.inputs)
    cfg = SearchConfig(
        mode=Mode.ALMOST if args.almost else Mode.LEECH,
        max_label=args.max_label,
        forced_label_sum=args.sum,
        time_limit=args.time_limit,
        find_all=args.all,
        node_limit=args.node_limit,
    )
    out = search(g, cfg, workers=args.workers, derive_bounds=not args.seedless)
    payload = {
        "command": "search",
        "status": out.status.value,
        "mode": out.mode.value,
        "t_gp": out.t_gp,
        "max_label": out.max_label,
        "forced_label_sum": out.forced_label_sum,
        "nodes": out.nodes_explored,
        "elapsed_s": round(out.elapsed, 6),
        "pruning": out.pruning_stats,
        "witnesses": [list(w.labels) for w in out.witnesses],
    }
    if args.json:
        print(json.dumps({"schema": SCHEMA, **payload}))
        return _STATUS_EXIT[out.status]
    # text output doubles as a labeling file: comments around the bare labels
    src = args.family if args.family else args.inputs[0]
    print(f"# search {src}: {out.status.value} (mode={out.mode.value}, t_gp={out.t_gp})")
    print(
        f"# bounds: max_label={out.max_label}"
        + (f", label_sum={out.forced_label_sum}" if out.forced_label_sum is not None else "")
    )
    print(f"# nodes={out.nodes_explored} elapsed={out.elapsed:.3f}s")
    if out.pruning_stats:
        print("# pruning: " + ", ".join(f"{k}={v}" for k, v in sorted(out.pruning_stats.items())))
    if out.witnesses:
        report = classify(g, out.witnesses[0])
        print(format_labeling(out.witnesses[0]), end="")
        print(f"# verifies: {report.verdict.value}")
        for extra in out.witnesses[1:]:
            print(f"# also: {format_labeling(extra)}", end="")
    return _STATUS_EXIT[out.status]


def _feasibility_payload(res) -> dict:
    return {
        "feasible": res.feasible,
        "per_edge_count": res.per_edge_count,
        "required_total": res.required_total,
        "required_label_sum": [
            res.required_label_sum.numerator,
            res.required_label_sum.denominator,
        ],
        "reason": res.reason,
    }


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise _CliError(f"--range wants A..B, got {text!r}", EXIT_USAGE)
    try:
        return int(lo), int(hi)
    except ValueError:
        raise _CliError(f"--range wants integers, got {text!r}", EXIT_USAGE) from None


def cmd_feasible(args) -> int:
    if args.range:
        if not args.family:
            raise _CliError("--range needs --family cycle or knn", EXIT_USAGE)
        name = args.family.partition(":")[0].lower()
        if name not in ("cycle", "knn"):
            raise _CliError(f"--range supports cycle and knn, not {name!r}", EXIT_USAGE)
        lo, hi = _parse_range(args.range)
        fn = formulas.cycle_feasibility if name == "cycle" else formulas.knn_feasibility
        feasible_ns = []
        rows = []
        for n in range(lo, hi + 1):
            res = fn(n)
            rows.append({"n": n, **_feasibility_payload(res)})
            if res.feasible:
                feasible_ns.append(n)
            if not args.json:
                print(f"n={n}: {'feasible' if res.feasible else 'infeasible'} ({res.reason})")
        if args.json:
            print(json.dumps({
                "schema": SCHEMA,
                "command": "feasible",
                "family": name,
                "range": [lo, hi],
                "rows": rows,
                "feasible_at": feasible_ns,
            }))
        else:
            print(f"feasible at: {' '.join(map(str, feasible_ns)) if feasible_ns else 'none'}")
        return 0

    if args.family:
        name, _, param = args.family.partition(":")
        name = name.lower()
        if name in ("cycle", "knn"):
            try:
                n = int(param)
            except ValueError:
                raise _CliError(
                    f"family {name} needs an integer parameter, got {args.family!r}",
                    EXIT_USAGE,
                ) from None
            res = (formulas.cycle_feasibility if name == "cycle" else formulas.knn_feasibility)(n)
            _emit(
                {"command": "feasible", "family": args.family, **_feasibility_payload(res)},
                args.json,
                [f"{'feasible' if res.feasible else 'infeasible'}: {res.reason}"],
            )
            return EXIT_LEECH if res.feasible else EXIT_NEITHER
        g, _ = parse_family(args.family)
    else:
        if not args.inputs:
            raise _CliError("a graph file or --family spec is required", EXIT_USAGE)
        g = load_graph(args.inputs[0])
    c = census(g)
    coeffs, total = formulas.general_weighted_sum_identity(c)
    payload = {
        "command": "feasible",
        "t_gp": c.total,
        "required_total": total,
        "per_edge": list(coeffs),
    }
    lines = [
        f"t_gp: {c.total}",
        f"weighted-sum identity: sum k_e*a_e = {total}",
        "per edge: " + " ".join(map(str, coeffs)),
    ]
    if len(set(coeffs)) == 1:
        res = formulas.edge_transitive_feasibility(coeffs[0], c.total, g.edge_count)
        payload.update(_feasibility_payload(res))
        lines.append(f"{'feasible' if res.feasible else 'infeasible'}: {res.reason}")
        _emit(payload, args.json, lines)
        return EXIT_LEECH if res.feasible else EXIT_NEITHER
    payload["applicable"] = False
    lines.append("divisibility test not applicable: edges lie on unequal geodesic counts")
    _emit(payload, args.json, lines)
    return EXIT_NOT_APPLICABLE


def _census_line_row(job):
    index, line, time_limit, node_limit = job
    try:
        g = graph6_decode(line)
    except LeechLabError as exc:
        return {
            "index": index, "n": None, "m": None, "t_gp": None,
            "verdict": "error", "nodes": 0, "millis": 0.0, "error": str(exc),
        }
    row = _corpus_row((index, g, time_limit, node_limit))
    out = {
        "index": row.index, "n": row.n, "m": row.m, "t_gp": row.t_gp,
        "verdict": row.verdict, "nodes": row.nodes, "millis": round(row.millis, 3),
    }
    if row.witness is not None:
        out["witness"] = list(row.witness.labels)
    if row.error is not None:
        out["error"] = row.error
    return out


def cmd_census(args) -> int:
    if not args.inputs:
        raise _CliError("census needs a graph6 file ('-' for stdin)", EXIT_USAGE)
    path = args.inputs[0]
    stream = sys.stdin if path == "-" else open(path, "r", encoding="ascii")
    counts: dict[str, int] = {}

    def jobs():
        index = 0
        for raw in stream:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            yield (index, line, args.time_limit, args.node_limit)
            index += 1

    def rows():
        if args.workers <= 1:
            for job in jobs():
                yield _census_line_row(job)
        else:
            # bounded submission window keeps the input streaming
            with ProcessPoolExecutor(max_workers=args.workers) as pool:
                pending = deque()
                for job in jobs():
                    pending.append(pool.submit(_census_line_row, job))
                    if len(pending) >= args.workers * 4:
                        yield pending.popleft().result()
                while pending:
                    yield pending.popleft().result()

    try:
        for row in rows():
            counts[row["verdict"]] = counts.get(row["verdict"], 0) + 1
            print(json.dumps(row), flush=True)
    finally:
        if stream is not sys.stdin:
            stream.close()
    summary = {
        key: counts.get(key, 0) for key in ("leech", "almost", "neither", "timeout", "error")
    }
    print(json.dumps({"schema": SCHEMA, "command": "census", "summary": summary}))
    print(
        " ".join(f"{key}={value}" for key, value in summary.items()),
        file=sys.stderr,
    )
    return 0


def _default_workers() -> int:
    raw = os.environ.get("LEECHLAB_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leechlab",
        description="Geodesic Leech labeling toolkit: census, verification, and exhaustive search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_json=True):
        p.add_argument("inputs", nargs="*", help="input file(s)")
        p.add_argument("--family", help="family spec such as cycle:10, knn:5, kmn:3x4, wheel:6, complete:4, path:5, prism")
        if with_json:
            p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("tgp", help="geodesic census of a graph")
    add_common(p)
    p.add_argument("--closed-form", action="store_true", help="cross-check the census against the family's closed form")
    p.set_defaults(fn=cmd_tgp)

    p = sub.add_parser("verify", help="classify a labeling file against a graph")
    add_common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("search", help="search for a (almost) geodesic Leech labeling")
    add_common(p)
    p.add_argument("--almost", action="store_true", help="search for an almost labeling instead")
    p.add_argument("--max-label", type=int, default=None, help="largest label to try (default: proven bound)")
    p.add_argument("--sum", type=int, default=None, help="force the label sum (default: derived when valid)")
    p.add_argument("--time-limit", type=float, default=None, help="wall-clock limit in seconds")
    p.add_argument("--node-limit", type=int, default=None, help="stop after this many assignments")
    p.add_argument("--all", action="store_true", help="collect every witness instead of stopping at the first")
    p.add_argument("--workers", type=int, default=_default_workers(), help="parallel workers (default from LEECHLAB_WORKERS)")
    p.add_argument("--seedless", action="store_true", help="do not derive bounds from counting arguments; search labels up to t_gp")
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("feasible", help="divisibility necessary condition")
    add_common(p)
    p.add_argument("--range", help="evaluate a parameter range A..B (family cycle or knn)")
    p.set_defaults(fn=cmd_feasible)

    p = sub.add_parser("census", help="stream a graph6 corpus through the search")
    add_common(p, with_json=False)
    p.add_argument("--workers", type=int, default=_default_workers(), help="parallel workers (default from LEECHLAB_WORKERS)")
    p.add_argument("--time-limit", type=float, default=None, help="per-graph wall-clock limit in seconds")
    p.add_argument("--node-limit", type=int, default=None, help="per-graph node limit")
    p.set_defaults(fn=cmd_census)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, LabelCountMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except LeechLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
