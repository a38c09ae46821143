"""Command-line interface.

Exit codes: 0 ok, 2 usage or parse error, 3 certification failure,
4 incomplete (timed-out) search.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .bounds import (
    C2kBoundInputs,
    KabBoundParams,
    RegimeError,
    as_bound,
    thm1_lower,
    thm1_upper,
    thm2_lower,
    thm2_upper,
)
from .cliques import clique_profile, count_cliques
from .constructions import lower_bound_c2k, lower_bound_kab, random_c2kfree
from .graph import GraphSizeError
from .graph6 import Graph6Error, from_graph6, read_graph6_stream, to_graph6
from .norm_graph import norm_graph
from .oracle import SearchCapError, extremal_number, extremal_number_naive
from .patterns import CertificationError, EvenCycle, PatternError, contains, parse_pattern

EXIT_OK, EXIT_USAGE, EXIT_CERT, EXIT_INCOMPLETE = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _dump(payload, pretty: bool) -> str:
    if pretty and isinstance(payload, dict):
        width = max((len(k) for k in payload), default=0)
        return "\n".join(f"{k:<{width}}  {json.dumps(v, sort_keys=True)}" for k, v in payload.items())
    return json.dumps(payload, sort_keys=True, indent=2 if pretty else None)


def _emit(payload, args) -> None:
    print(_dump(payload, args.pretty))


def _record(args, payload, seeds=(), started=0.0) -> dict:
    return {
        "command": sys.argv[:] if args.argv is None else args.argv,
        "version": __version__,
        "seeds": list(seeds),
        "wall_time": round(time.perf_counter() - started, 6),
        "result": payload,
    }


def _input_graphs(args):
    stream = sys.stdin.buffer if args.input == "-" else open(args.input, "rb")
    try:
        yield from read_graph6_stream(stream)
    finally:
        if stream is not sys.stdin.buffer:
            stream.close()


# -- commands ---------------------------------------------------------------------


def cmd_gen(args) -> int:
    started = time.perf_counter()
    seeds: list[int] = []
    extra: dict = {}
    if args.kind == "norm":
        g = norm_graph(args.q, args.a)
        extra["certificate"] = "construction only (use `check` to certify)"
    elif args.kind == "join-kab":
        g = lower_bound_kab(args.t, args.q, args.a)
        extra["certificate"] = f"{args.t + 1}-fold K_(a,(a-1)!+1) free"
    elif args.kind == "join-c2k":
        if args.host is not None:
            h = from_graph6(args.host)
        elif args.host_n is not None:
            h = extremal_number(args.host_n, args.host_r, EvenCycle(2 * args.k)).witness
        else:
            raise UsageError("join-c2k needs --host or --host-n")
        g = lower_bound_c2k(args.t, h, args.k)
        extra["certificate"] = f"{args.t + 1}*C{2 * args.k} free"
    elif args.kind == "rand-c2kfree":
        g, trace = random_c2kfree(args.n, args.k, args.p, args.seed)
        seeds.append(args.seed)
        extra["trace"] = trace.to_dict()
        extra["certificate"] = f"C{2 * args.k} free"
    else:
        if args.pattern is None:
            raise UsageError("basic needs --pattern")
        g = parse_pattern(args.pattern).graph()
    sys.stdout.buffer.write(to_graph6(g) + b"\n")
    sys.stdout.flush()
    payload = {"kind": args.kind, "n": g.n, "edges": g.edge_count, **extra}
    print(_dump(_record(args, payload, seeds, started), False), file=sys.stderr)
    return EXIT_OK


def cmd_count(args) -> int:
    for g in _input_graphs(args):
        _emit({"k": args.r, "count": count_cliques(g, args.r)}, args)
    return EXIT_OK


def cmd_profile(args) -> int:
    for g in _input_graphs(args):
        _emit(clique_profile(g, args.rmax).as_list(), args)
    return EXIT_OK


def cmd_check(args) -> int:
    pat = parse_pattern(args.pattern)
    for g in _input_graphs(args):
        w = contains(g, pat)
        payload: dict = {"pattern": str(pat), "free": w is None}
        if w is not None:
            payload["witness"] = [list(e) for e in w.embeddings]
        _emit(payload, args)
    return EXIT_OK


def _ex_values(args) -> list[int]:
    if args.ex_values is not None:
        text = args.ex_values
    elif args.ex_values_file is not None:
        with open(args.ex_values_file) as fh:
            text = fh.read()
    else:
        raise UsageError("thm2 bounds need --ex-values or --ex-values-file")
    try:
        values = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"ex-values are not a JSON list: {exc}") from None
    if not isinstance(values, list) or not all(isinstance(v, int) for v in values):
        raise UsageError("ex-values must be a JSON list of integers")
    return values


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.which} needs {' '.join(missing)}")


def cmd_bound(args) -> int:
    which = args.which
    if which in ("thm1-upper", "thm1-lower"):
        _need(args, "n", "t", "r", "a", "b")
        p = KabBoundParams(args.n, args.t, args.r, args.a, args.b)
        fn = thm1_upper if which == "thm1-upper" else thm1_lower
        payload = {"bound": which, **fn(p, override=args.override).to_json()}
    elif which == "as":
        _need(args, "n", "r", "a", "b")
        payload = {"bound": which, **as_bound(args.n, args.r, args.a, args.b, args.override).to_json()}
    else:
        _need(args, "t", "r")
        try:
            c = C2kBoundInputs(args.t, args.r, tuple(_ex_values(args)))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        value = thm2_upper(c) if which == "thm2-upper" else thm2_lower(c)
        payload = {
            "bound": which,
            "value": value,
            "asymptotic-envelope": False,
            "regime": "in theorem regime" if c.in_regime else "out of theorem regime",
        }
    _emit(payload, args)
    return EXIT_OK


def cmd_search(args) -> int:
    pat = parse_pattern(args.forbid)
    if args.naive:
        res = extremal_number_naive(args.n, args.r, pat, timeout=args.timeout)
    else:
        res = extremal_number(args.n, args.r, pat, timeout=args.timeout)
    _emit(res.to_json(), args)
    return EXIT_OK if res.complete else EXIT_INCOMPLETE


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gturan", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--pretty", action="store_true", help="human-readable rendering of the JSON payload")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[common], help="emit a construction as graph6")
    gen.add_argument("kind", choices=["norm", "join-kab", "join-c2k", "rand-c2kfree", "basic"])
    gen.add_argument("--q", type=int, default=3)
    gen.add_argument("--a", type=int, default=3)
    gen.add_argument("--t", type=int, default=1)
    gen.add_argument("--k", type=int, default=2)
    gen.add_argument("--n", type=int, default=100)
    gen.add_argument("--p", type=float, default=None)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--host", default=None, help="graph6 of a C_2k-free host for join-c2k")
    gen.add_argument("--host-n", type=int, default=None, help="use the oracle witness on this many vertices")
    gen.add_argument("--host-r", type=int, default=2, help="clique size the oracle host maximises")
    gen.add_argument("--pattern", default=None)
    gen.set_defaults(func=cmd_gen)

    for name, func in (("count", cmd_count), ("profile", cmd_profile)):
        p = sub.add_parser(name, parents=[common], help=f"clique {name} of graph6 input")
        if name == "count":
            p.add_argument("--r", type=int, required=True)
        else:
            p.add_argument("--rmax", type=int, default=8)
        p.add_argument("--input", default="-", help="graph6 file, '-' for stdin")
        p.set_defaults(func=func)

    check = sub.add_parser("check", parents=[common], help="test graph6 input for a pattern")
    check.add_argument("pattern")
    check.add_argument("--input", default="-")
    check.set_defaults(func=cmd_check)

    bound = sub.add_parser("bound", parents=[common], help="evaluate a bound expression")
    bound.add_argument("which", choices=["thm1-upper", "thm1-lower", "as", "thm2-upper", "thm2-lower"])
    for name in ("n", "t", "r", "a", "b"):
        bound.add_argument(f"--{name}", type=int, default=None)
    bound.add_argument("--ex-values", default=None, help="JSON list ex(n-t, K_i, C_2k), i = 0..r")
    bound.add_argument("--ex-values-file", default=None)
    bound.add_argument("--override", action="store_true", help="evaluate outside the theorem regime")
    bound.set_defaults(func=cmd_bound)

    search = sub.add_parser("search", parents=[common], help="exact ex(n, K_r, F)")
    search.add_argument("--n", type=int, required=True)
    search.add_argument("--r", type=int, required=True)
    search.add_argument("--forbid", required=True)
    search.add_argument("--naive", action="store_true")
    search.add_argument("--timeout", type=float, default=None)
    search.set_defaults(func=cmd_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.argv = argv
    try:
        return args.func(args)
    except CertificationError as exc:
        print(f"gturan: certification failed: {exc}", file=sys.stderr)
        return EXIT_CERT
    except (UsageError, PatternError, Graph6Error, RegimeError, SearchCapError, GraphSizeError, ValueError) as exc:
        print(f"gturan: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
