"""Command-line interface.

Exit status: 0 on success, 1 when a certificate or check fails, 2 on parse
errors and exhausted search budgets.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import bounds
from .certificate import CoverCertificate, validate_cover
from .cover import build_cover
from .exact import BudgetExceeded, exact_min_cover
from .graph import EdgeListError, format_edge_list, read_edge_list, turan_graph
from .partition import greedy_partition, verify_partition
from .sequence import reduce, sequence_of, value_f
from .sweep import cmd_sweep

EXIT_OK, EXIT_INVALID, EXIT_ERROR = 0, 1, 2


def _emit(payload, out: str | None) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _node_limit(args) -> int | None:
    if args.node_limit is not None:
        return args.node_limit
    env = os.environ.get("CCL_NODE_LIMIT")
    return int(env) if env else None


def cmd_turan(args) -> int:
    _emit(format_edge_list(turan_graph(args.n, args.t)), args.out)
    return EXIT_OK


def cmd_partition(args) -> int:
    G = read_edge_list(args.input)
    P = greedy_partition(G)
    payload = {"partition": P.to_json(), "sizes": list(P.sizes), "valid": bool(verify_partition(P))}
    if max(P.sizes) <= 4:
        A = sequence_of(P)
        payload["f"] = value_f(A).f
        payload["reduction"] = reduce(A).to_json()
    _emit(payload, args.out)
    return EXIT_OK


def cmd_cover(args) -> int:
    G = read_edge_list(args.input)
    cert = build_cover(G, args.t)
    _emit(cert.to_json(), args.out)
    return EXIT_OK


def cmd_exact(args) -> int:
    G = read_edge_list(args.input)
    try:
        size, cert = exact_min_cover(G, args.t, node_limit=_node_limit(args))
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        if exc.best is not None:
            print(f"best known upper bound: {exc.best.size}", file=sys.stderr)
            if args.out:
                exc.best.save(args.out)
        return EXIT_ERROR
    if args.out:
        cert.save(args.out)
        print(f"size {size}")
    else:
        _emit(cert.to_json(), None)
    return EXIT_OK


def cmd_verify(args) -> int:
    G = read_edge_list(args.input)
    try:
        cert = CoverCertificate.load(args.cert)
    except (ValueError, KeyError, TypeError) as exc:
        print(f"{args.cert}: malformed certificate: {exc}", file=sys.stderr)
        return EXIT_ERROR
    report = validate_cover(G, cert)
    _emit({"valid": report.ok, "reason": report.reason, "witness": list(report.witness),
           "size": cert.size, "t": cert.t}, None)
    return EXIT_OK if report.ok else EXIT_INVALID


def _parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}")
    return range(int(lo), int(hi) + 1)


def cmd_bounds(args) -> int:
    ns = list(args.n or [])
    if args.range is not None:
        ns.extend(args.range)
    fn = bounds.CHECKS[args.check]
    report = fn(ns) if ns else fn()
    _emit(report, args.out)
    return EXIT_OK if report["status"] == "pass" else EXIT_INVALID


def cmd_sweep_cli(args) -> int:
    report = cmd_sweep(args.n, args.t, args.mode, samples=args.samples, seed=args.seed,
                       k6_free=args.k6_free, node_limit=_node_limit(args))
    _emit(report.to_json(), args.out)
    return EXIT_INVALID if report.failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cliquecover", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("turan", help="write the Turán graph T(n, t) as an edge list")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_turan)

    p = sub.add_parser("partition", help="greedy partition, greedy sequence and its reduction")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("cover", help="constructive t-clique cover (t = 3 or 4)")
    p.add_argument("--t", type=int, required=True, choices=(3, 4))
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("exact", help="minimum t-clique cover by branch and bound")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--node-limit", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("verify", help="validate a certificate against a graph")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--cert", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="exact checks of the clique-count bounds")
    p.add_argument("--check", required=True, choices=sorted(bounds.CHECKS))
    p.add_argument("--n", type=int, nargs="+")
    p.add_argument("--range", type=_parse_range)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("sweep", help="compare cover numbers with the Turán value")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int)
    p.add_argument("--k6-free", action="store_true")
    p.add_argument("--node-limit", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep_cli)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EdgeListError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
