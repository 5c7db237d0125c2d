"""Command-line front end: ``binedge {depth,primes,poset,lctable,check,survey}``.

Exit codes: 0 success, 1 an invariant check failed, 2 unreadable input,
3 a resource cap was hit.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds as bnd
from .errors import ResourceLimitExceeded
from .graphcore import GraphParseError, all_labeled_graphs, parse_edge_list, parse_graph6
from .harness import RunConfig, check_graph, compute_table, field_comparison, survey
from .ideals import cut_sets, minimal_primes_of_graph, render
from .poset import A, Q, build_poset, poset_to_json, prime_to_json, to_dot

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_RESOURCE = 0, 1, 2, 3


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _load_graph(args):
    text = _read_text(args.input)
    if args.input_format == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphParseError(f"expected one graph6 word, got {len(lines)} lines")
        return parse_graph6(lines[0])
    return parse_edge_list(text)


def _config(args) -> RunConfig:
    variant = {"q": Q, "a": A, "both": "both"}[args.variant]
    return RunConfig(args.field, variant, args.max_n, args.max_elements, args.max_chains, args.timeout_s)


def _variants(cfg: RunConfig) -> list[str]:
    return [Q, A] if cfg.variant == "both" else [cfg.variant]


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)


def cmd_depth(args) -> int:
    g, cfg = _load_graph(args), _config(args)
    tables = {v: compute_table(build_poset(g, v, cfg.limits), cfg) for v in _variants(cfg)}
    rep = bnd.bounds_report(g)
    payload = {
        "n": g.n,
        "results": {v: {"depth": t.depth, "dim": t.dim, "cohen_macaulay": t.cm}
                    for v, t in tables.items()},
        "field": cfg.characteristic,
        "bounds": rep.to_json(),
    }
    lines = []
    for v, t in tables.items():
        cm = "Cohen-Macaulay" if t.cm else "not Cohen-Macaulay"
        lines.append(f"[{v}] depth {t.depth}, dim {t.dim}, {cm} (field {cfg.field})")
    lines += ["bounds:", rep.render()]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_primes(args) -> int:
    g = _load_graph(args)
    ts = cut_sets(g)
    primes = minimal_primes_of_graph(g)
    payload = {
        "n": g.n,
        "cut_sets": [sorted(t) for t in ts],
        "primes": [dict(prime_to_json(q), height=q.height) for q in primes],
    }
    lines = [f"{len(ts)} cut sets"]
    for t, q in zip(ts, primes):
        lines.append(f"  T={{{','.join(map(str, sorted(t)))}}}  height {q.height}  {render(q)}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_poset(args) -> int:
    g, cfg = _load_graph(args), _config(args)
    posets = {v: build_poset(g, v, cfg.limits) for v in _variants(cfg)}
    if args.dot:
        p = posets[_variants(cfg)[0]]
        Path(args.dot).write_text(to_dot(p))
    payload = {v: poset_to_json(p) for v, p in posets.items()}
    lines = []
    for v, p in posets.items():
        lines.append(f"{v}_G: {len(p)} elements")
        lines += [f"  [{i}] d={q.dim}  {render(q)}" for i, q in enumerate(p.elements)]
        lines.append("  hasse: " + " ".join(f"{a}<{b}" for a, b in payload[v]["hasse"]))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_lctable(args) -> int:
    g, cfg = _load_graph(args), _config(args)
    tables = {v: compute_table(build_poset(g, v, cfg.limits), cfg) for v in _variants(cfg)}
    _emit(args, {v: t.to_json() for v, t in tables.items()},
          "\n".join(t.render() for t in tables.values()))
    return EXIT_OK


def cmd_check(args) -> int:
    g, cfg = _load_graph(args), _config(args)
    rep = check_graph(g, cfg)
    _emit(args, rep.to_json(), rep.render())
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_survey(args) -> int:
    cfg = _config(args)
    if args.source.isdigit():
        n = int(args.source)
        if n > cfg.max_n:
            raise ResourceLimitExceeded(f"survey capped at n={cfg.max_n}", n=n)
        graphs = list(all_labeled_graphs(n))
    else:
        graphs = [parse_graph6(ln) for ln in _read_text(args.source).splitlines() if ln.strip()]
    summary = survey(graphs, cfg)
    payload = summary.to_json()
    text = summary.render()
    if args.fields:
        chars = tuple(int(c) for c in args.fields.split(","))
        comp = field_comparison(graphs, chars, cfg)
        payload["field_comparison"] = comp.to_json()
        text += "\n" + comp.render()
    _emit(args, payload, text)
    return EXIT_OK if summary.failed == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=int, default=0, help="0 for QQ or a prime p")
    common.add_argument("--variant", choices=["q", "a", "both"], default="q")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--max-n", type=int, default=8)
    common.add_argument("--max-elements", type=int, default=200_000)
    common.add_argument("--max-chains", type=int, default=5_000_000)
    common.add_argument("--timeout-s", type=float, default=600.0)

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("input", nargs="?", default="-", help="graph file, or - for stdin")
    graph_in.add_argument("--input-format", choices=["edge-list", "graph6"], default="edge-list")

    parser = argparse.ArgumentParser(
        prog="binedge",
        description="Depth and local cohomology of binomial edge ideals, computed combinatorially.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn, help_ in [
        ("depth", cmd_depth, "depth, dimension, Cohen-Macaulayness and bounds"),
        ("primes", cmd_primes, "cut sets and minimal primes of J_G"),
        ("poset", cmd_poset, "elements and Hasse diagram of Q_G / A_G"),
        ("lctable", cmd_lctable, "local cohomology support table"),
        ("check", cmd_check, "run every invariant check on one graph"),
    ]:
        sp = sub.add_parser(name, parents=[common, graph_in], help=help_)
        sp.set_defaults(func=fn)
        if name == "poset":
            sp.add_argument("--dot", help="also write a DOT file of the Hasse diagram")
    sp = sub.add_parser("survey", parents=[common], help="check all labeled graphs on n vertices, or a graph6 file")
    sp.add_argument("source", help="vertex count n, or a file with one graph6 word per line")
    sp.add_argument("--fields", help="comma-separated characteristics to compare depths over, e.g. 0,2,3")
    sp.set_defaults(func=cmd_survey)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphParseError, OSError) as exc:
        print(f"binedge {args.command}: input error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceLimitExceeded as exc:
        print(f"binedge {args.command}: resource limit: {exc} {exc.stats}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"binedge {args.command}: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
