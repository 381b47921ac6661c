"""Command-line interface: index tables, decompositions, and evaluation reports.

Subcommands
    compute       per-node temporal H-index values (all orders with the
                  streaming engine, a single order with the recursive one)
    decompose     pseudocore numbers plus a summary block
    reach-scores  global/local reachability of every core level
    sir-eval      Kendall correlation of heuristic rankings against
                  simulated spreading influence, per infection probability
    bench         wall-time / memory sweep over orders for both engines

Outputs are CSV (LF line endings) or JSON; JSON embeds the run
configuration.  Analysis outputs are byte-deterministic given the input
file, flags, and RNG seed.  Nothing is written on error.

Exit codes: 0 success, 1 I/O or parse failure, 2 engine precondition
violated, 3 degenerate analysis escalated by --strict.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import statistics
import sys
import time

from .compute import hindex_table, hindex_vector
from .errors import (DegenerateRankingError, EdgeListParseError, ThindexError,
                     UnsupportedInputError)
from .evaluation import (DEFAULT_RECOVERY_MEAN, SirParams, heuristic_rankings,
                         kendall_tau_b, sir_ranking)
from .graph import INFINITY, TemporalGraph, load_edge_stream, restrict_interval
from .pseudocore import decomposition_from_values, temporal_pseudo_degeneracy
from .reachability import reach_scores
from .recurs import recurs_compute_with_stats
from .stream import stream_compute, stream_compute_inward

EXIT_OK = 0
EXIT_IO = 1
EXIT_PRECONDITION = 2
EXIT_DEGENERATE = 3

DEFAULT_BETA_SWEEP = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8"


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        graph = _load_graph(args)
        result = args.handler(graph, args)
        columns, rows, warnings = result[:3]
        summary = result[3] if len(result) > 3 else None
    except (OSError, EdgeListParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except UnsupportedInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ThindexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO

    for message in warnings:
        print(f"warning: {message}", file=sys.stderr)

    text = _render(args, columns, rows, summary)
    try:
        _emit(args.output, text)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO

    if warnings and args.strict:
        return EXIT_DEGENERATE
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thindex",
        description="Temporal H-index analytics over edge-stream files.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--input", required=True, help="edge-list file (u v t [lambda])")
        p.add_argument("--undirected", action="store_true",
                       help="expand each line into both directions")
        p.add_argument("--interval", metavar="A:B",
                       help="restrict to edges starting and arriving in [A, B]")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--output", help="output file (default: stdout)")
        p.add_argument("--strict", action="store_true",
                       help="exit 3 when the analysis degenerates")

    p = sub.add_parser("compute", help="per-node index values")
    common(p)
    p.add_argument("--n", type=int, required=True, help="maximum order")
    p.add_argument("--direction", choices=("in", "out"), default="out")
    p.add_argument("--algorithm", choices=("stream", "recurs"), default="stream")
    p.set_defaults(handler=_cmd_compute)

    p = sub.add_parser("decompose", help="pseudocore numbers and summary")
    common(p)
    p.add_argument("--n", type=int, required=True, help="order of the decomposition")
    p.add_argument("--direction", choices=("in", "out"), default="out")
    p.add_argument("--algorithm", choices=("stream", "recurs"), default="stream")
    p.add_argument("--k", type=int, help="list only the members of the level-k core")
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("reach-scores", help="reachability scores per core level")
    common(p)
    p.add_argument("--n", type=int, required=True, help="order of the decomposition")
    p.add_argument("--direction", choices=("in", "out"), default="out")
    p.add_argument("--algorithm", choices=("stream", "recurs"), default="stream")
    p.set_defaults(handler=_cmd_reach_scores)

    p = sub.add_parser("sir-eval", help="heuristic-vs-spreading rank correlations")
    common(p)
    p.add_argument("--n", default="32,64", metavar="N[,N...]",
                   help="temporal index orders to rank with (default: 32,64)")
    p.add_argument("--beta-sweep", default=DEFAULT_BETA_SWEEP, metavar="B[,B...]",
                   help="infection probabilities to sweep")
    p.add_argument("--trials", type=int, default=100,
                   help="simulations per seed node (default: 100)")
    p.add_argument("--recovery-mean", type=float, default=DEFAULT_RECOVERY_MEAN,
                   help="mean exponential recovery delay in network time units")
    p.add_argument("--rng-seed", type=int, default=0)
    p.set_defaults(handler=_cmd_sir_eval)

    p = sub.add_parser("bench", help="engine timing and memory sweep")
    common(p)
    p.add_argument("--n", default="1,2,4,8,16", metavar="N[,N...]",
                   help="orders to benchmark")
    p.add_argument("--direction", choices=("in", "out"), default="out")
    p.add_argument("--algorithm", choices=("both", "stream", "recurs"), default="both")
    p.add_argument("--reps", type=int, default=3,
                   help="repetitions per measurement; the median is reported")
    p.set_defaults(handler=_cmd_bench)

    return parser


def _load_graph(args) -> TemporalGraph:
    g = load_edge_stream(args.input, directed=not args.undirected)
    interval = getattr(args, "interval", None)
    if interval:
        a_text, _, b_text = interval.partition(":")
        try:
            a = int(a_text)
            b = INFINITY if b_text in ("", "inf") else int(b_text)
        except ValueError:
            raise EdgeListParseError(0, f"malformed interval {interval!r}") from None
        g = restrict_interval(g, a, b)
    return g


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError:
        raise ThindexError(f"{flag} expects comma-separated integers, got {text!r}") from None


# ---------------------------------------------------------------------------
# Subcommand handlers: return (columns, rows, warnings)
# ---------------------------------------------------------------------------

def _cmd_compute(g: TemporalGraph, args):
    if args.algorithm == "stream":
        table = hindex_table(g, args.n, args.direction)
        columns = ["node"] + [f"h{i}" for i in range(args.n + 1)]
        rows = [[g.labels[v]] + [int(x) for x in table.values[v]]
                for v in range(g.num_nodes)]
    else:
        values = hindex_vector(g, args.n, args.direction, "recurs")
        columns = ["node", f"h{args.n}"]
        rows = [[g.labels[v], int(values[v])] for v in range(g.num_nodes)]
    return columns, rows, []


def _core_values(g: TemporalGraph, args):
    if args.algorithm == "stream":
        return hindex_table(g, args.n, args.direction).order(args.n)
    return hindex_vector(g, args.n, args.direction, "recurs")


def _cmd_decompose(g: TemporalGraph, args):
    values = _core_values(g, args)
    decomposition = decomposition_from_values(values, args.n, args.direction)
    if args.k is not None:
        columns = ["node"]
        rows = [[g.labels[v]] for v in decomposition.members(args.k)]
    else:
        columns = ["node", "core_number"]
        rows = [[g.labels[v], int(values[v])] for v in range(g.num_nodes)]
    tau = int(values.max()) if len(values) else 0
    summary = {"tau_n": tau, "distinct_levels": len(decomposition.distinct_levels)}
    return columns, rows, [], summary


def _cmd_reach_scores(g: TemporalGraph, args):
    values = _core_values(g, args)
    decomposition = decomposition_from_values(values, args.n, args.direction)
    columns = ["rank", "k", "core_size", "rho_global", "rho_local"]
    rows = []
    for rank, k in enumerate(decomposition.levels_descending()):
        members = decomposition.members(k)
        rho_g, rho_l = reach_scores(g, members)
        rows.append([rank, k, len(members), rho_g, rho_l])
    return columns, rows, []


def _cmd_sir_eval(g: TemporalGraph, args):
    n_values = _parse_int_list(args.n, "--n")
    betas = [float(part) for part in args.beta_sweep.split(",") if part]
    heuristics = heuristic_rankings(g, n_values)
    columns = ["beta", "heuristic", "kendall_tau_b"]
    rows = []
    warnings = []
    for beta in betas:
        params = SirParams(beta=beta, recovery_mean=args.recovery_mean,
                           trials=args.trials, rng_seed=args.rng_seed)
        influence = sir_ranking(g, params)
        for name, scores in heuristics.items():
            try:
                tau = kendall_tau_b(scores, influence)
            except DegenerateRankingError:
                tau = float("nan")
                warnings.append(
                    f"beta={beta:g}: ranking {name!r} or the influence "
                    f"ranking is all-tied; correlation undefined")
            rows.append([beta, name, tau])
    return columns, rows, warnings


def _cmd_bench(g: TemporalGraph, args):
    n_values = _parse_int_list(args.n, "--n")
    algorithms = ("stream", "recurs") if args.algorithm == "both" else (args.algorithm,)
    columns = ["algorithm", "n", "wall_seconds", "peak_entries"]
    rows = []
    for algorithm in algorithms:
        for n in n_values:
            walls = []
            peak = 0
            for _ in range(max(1, args.reps)):
                begin = time.perf_counter()
                if algorithm == "stream":
                    table = (stream_compute(g, n) if args.direction == "out"
                             else stream_compute_inward(g, n))
                    peak = table.entries
                else:
                    _, peak = recurs_compute_with_stats(g, n, args.direction)
                walls.append(time.perf_counter() - begin)
            rows.append([algorithm, n, f"{statistics.median(walls):.6f}", peak])
    return columns, rows, []


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def _config_dict(args) -> dict:
    skip = {"handler", "output"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _render(args, columns, rows, summary=None) -> str:
    if args.format == "json":
        payload = {
            "config": _config_dict(args),
            "columns": columns,
            "rows": [[_json_value(x) for x in row] for row in rows],
        }
        if summary:
            payload["summary"] = summary
        return json.dumps(payload, indent=2, allow_nan=True) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_csv_value(x) for x in row])
    if summary:
        for key, value in summary.items():
            buf.write(f"# {key}={value}\n")
    return buf.getvalue()


def _csv_value(x):
    if isinstance(x, float):
        return repr(x)
    return x


def _json_value(x):
    if isinstance(x, float) and x != x:
        return None  # JSON has no NaN; null marks degenerate entries
    return x


def _emit(path, text: str) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    raise SystemExit(main())
