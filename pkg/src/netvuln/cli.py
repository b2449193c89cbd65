"""Command-line driver: ``netvuln {generate,stats,attack,sweep}``.

Exit status is 0 on success, 1 for invalid input (bad arguments, unreadable
or malformed graph files, disconnected graphs) and 2 for other I/O failures.
"""
import argparse
import json
import logging
import os
import sys
from pathlib import Path

from .attack import mean_destruction, parse_strategies, run_attack, summarize, sweep
from .chart import render_chart
from .errors import NetVulnError
from .generators import DEFAULT_BETA, GeneratorSpec, Model, extract_giant
from .graph import is_connected
from .io import READERS, read_graph, write_edge_list, write_trace_csv
from .metrics import network_stats

log = logging.getLogger("netvuln")

_EXT_FORMAT = {".gml": "gml", ".net": "pajek", ".paj": "pajek"}


class UsageError(Exception):
    pass


def _default_seed():
    raw = os.environ.get("NETVULN_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"NETVULN_SEED must be an integer, got {raw!r}") from None


def _add_model_args(p):
    p.add_argument("--model", required=True, choices=[m.value for m in Model])
    p.add_argument("--n", type=int, default=500)
    p.add_argument("--avg-degree", type=float, default=6.0,
                   help="target mean degree, used when --p/--k/--m is not given")
    p.add_argument("--p", type=float, help="ER edge probability")
    p.add_argument("--k", type=int, help="WS lattice degree (even)")
    p.add_argument("--beta", type=float, default=DEFAULT_BETA, help="WS rewiring probability")
    p.add_argument("--m", type=int, help="BA edges per new node")
    p.add_argument("--seed", type=int, default=None, help="default: $NETVULN_SEED or 0")


def _spec_from_args(args, seed):
    model = Model(args.model)
    spec = GeneratorSpec.with_average_degree(model, args.n, args.avg_degree, seed, args.beta)
    if model is Model.ERDOS_RENYI and args.p is not None:
        spec = GeneratorSpec(model, args.n, args.p, seed)
    elif model is Model.WATTS_STROGATZ and args.k is not None:
        spec = GeneratorSpec(model, args.n, (args.k, args.beta), seed)
    elif model is Model.BARABASI_ALBERT and args.m is not None:
        spec = GeneratorSpec(model, args.n, args.m, seed)
    return spec


def _load(args):
    fmt = args.format or _EXT_FORMAT.get(Path(args.input).suffix.lower(), "edgelist")
    if not Path(args.input).is_file():
        raise UsageError(f"input file not found: {args.input}")
    g = read_graph(args.input, fmt)
    if args.giant:
        g = extract_giant(g)
    return g


def _write(path, fn, *payload):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        return fn(*payload, fh)


def cmd_generate(args):
    seed = _default_seed() if args.seed is None else args.seed
    g = _spec_from_args(args, seed).build()
    if args.out:
        _write(args.out, write_edge_list, g)
    else:
        write_edge_list(g, sys.stdout)
    return 0


def cmd_stats(args):
    g = _load(args)
    stats = network_stats(g)
    print(json.dumps(stats.to_dict(), indent=2))
    return 0


def cmd_attack(args):
    strategies = parse_strategies(args.strategy)
    g = _load(args)
    if not is_connected(g):
        raise UsageError("input graph is disconnected; pass --giant to attack its giant component")
    name = Path(args.input).stem
    traces = [run_attack(g, s, source=name) for s in strategies]
    _write(args.csv, write_trace_csv, traces)
    if args.svg:
        _write(args.svg, lambda tr, fh: render_chart(tr, fh, title=name), traces)
    for tr in traces:
        s = summarize(tr)
        print(f"{tr.strategy.code}: destruction f={s.destruction_f:.4f} "
              f"robustness={s.robustness_index:.4f} iterations={s.iterations}")
    return 0


def cmd_sweep(args):
    seed = _default_seed() if args.seed is None else args.seed
    strategies = parse_strategies(args.strategy)
    spec = _spec_from_args(args, seed)
    results = sweep(spec, strategies, args.runs, seed, workers=args.workers)
    failed = [r for r in results if not r.ok]
    for r in failed:
        log.error("%s seed %s failed: %s", r.strategy.code, r.seed, r.error)
    traces = [r.trace for r in results if r.ok]
    _write(args.csv, write_trace_csv, traces)
    if args.svg and traces:
        _write(args.svg, lambda tr, fh: render_chart(tr, fh, title=spec.name), traces)
    for code, f in mean_destruction(results).items():
        print(f"{code}: mean destruction f={f:.4f}")
    return 1 if failed else 0


def build_parser():
    parser = argparse.ArgumentParser(prog="netvuln", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a synthetic network as an edge list")
    _add_model_args(p)
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_generate)

    def add_input(p):
        p.add_argument("--in", dest="input", required=True)
        p.add_argument("--format", choices=sorted(READERS), help="default: from file extension")
        p.add_argument("--giant", action="store_true", help="use the giant component only")

    p = sub.add_parser("stats", help="print network statistics as JSON")
    add_input(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("attack", help="attack a network read from a file")
    add_input(p)
    p.add_argument("--strategy", required=True, help="comma-separated codes (IB,...,RM) or 'all'")
    p.add_argument("--csv", required=True)
    p.add_argument("--svg")
    p.set_defaults(func=cmd_attack)

    p = sub.add_parser("sweep", help="attack many generated networks")
    _add_model_args(p)
    p.add_argument("--runs", type=int, default=10)
    p.add_argument("--strategy", default="all")
    p.add_argument("--csv", required=True)
    p.add_argument("--svg")
    p.add_argument("--workers", type=int, default=1, help="processes; 0 = one per CPU")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, NetVulnError) as exc:
        print(f"netvuln: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"netvuln: I/O error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
