"""Command-line front end: ``tfik <command> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
import warnings
from pathlib import Path

from . import kernels
from .catalog import build, canonical_name
from .enumeration import ANY_PROFILE, PROFILES, Regime, enumerate_regime
from .errors import OutOfRegime, ParseError, TfikError
from .graph import SimpleGraph, graph6_decode, graph6_encode, read_graph6_file
from .moves import ALL_MOVES, export_family, family_closure, triangle_free_members
from .planarity import classify_reduced, is_planar
from .prover import ALL_RULES, eliminate, positive_certificate, standard_families, verify_theorem
from .reduction import check_pair, pair_ledger, reduce_pair_detail


def _out_stream(path: str | None):
    if path is None or path == "-":
        return sys.stdout
    return open(path, "w")


def _check_parent(path: str | None) -> None:
    if path and path != "-" and not Path(path).resolve().parent.is_dir():
        raise SystemExit(f"error: directory for {path} does not exist")


def cmd_enumerate(args) -> int:
    _check_parent(args.out)
    regime = Regime(
        args.edges,
        min_degree=args.min_degree,
        triangle_free=args.triangle_free,
        connected=not args.allow_disconnected,
        profile=args.profile,
        orders=tuple(args.orders) if args.orders else None,
    )
    res = enumerate_regime(regime, jobs=args.jobs, budget=args.budget)
    if args.out and args.out != "-":
        with open(args.out, "wb") as fh:
            for f in res.forms:
                fh.write(f + b"\n")
    else:
        out = sys.stdout.buffer
        for f in res.forms:
            out.write(f + b"\n")
        out.flush()
    print(
        json.dumps({"graphs": len(res), "by_order": res.by_order, "nodes": res.nodes, "truncated": res.truncated}),
        file=sys.stderr,
    )
    if res.truncated:
        print("error: enumeration truncated by --budget", file=sys.stderr)
        return 3
    return 0


def _parse_rules(text: str) -> tuple[str, ...]:
    rules = tuple(r.strip() for r in text.split(",") if r.strip())
    bad = [r for r in rules if r not in ALL_RULES]
    if bad:
        raise SystemExit(f"error: unknown rule(s) {bad}; choose from {list(ALL_RULES)}")
    return rules


def cmd_prove(args) -> int:
    _check_parent(args.out)
    rules = _parse_rules(args.rules)
    graphs = read_graph6_file(args.input)
    fams = standard_families()
    stream = _out_stream(args.out)
    summary: dict[str, int] = {}
    try:
        for g in graphs:
            cert = eliminate(g, rules)
            rec = cert.to_dict()
            if not cert.eliminated:
                pos = positive_certificate(g, fams)
                rec["positive"] = pos.to_dict() if pos else None
            summary[cert.kind.value] = summary.get(cert.kind.value, 0) + 1
            stream.write(json.dumps(rec, sort_keys=True) + "\n")
    finally:
        if stream is not sys.stdout:
            stream.close()
    print(json.dumps({"graphs": len(graphs), "rules": list(rules), "outcomes": summary}), file=sys.stderr)
    return 0


def cmd_theorem(args) -> int:
    _check_parent(args.report)
    _check_parent(args.certificates)
    rules = _parse_rules(args.rules)
    sink = open(args.certificates, "w") if args.certificates else None
    try:
        rep = verify_theorem(jobs=args.jobs, budget=args.budget, sink=sink, rules=rules)
    finally:
        if sink is not None:
            sink.close()
    text = rep.to_json(with_timing=not args.no_timing)
    if args.report:
        Path(args.report).write_text(text + "\n")
    print(text)
    for c in rep.failures():
        print(f"FAILED: {c.name}: expected {c.expected!r}, got {c.actual!r}", file=sys.stderr)
    return 0 if rep.ok else 1


def _seed_graph(text: str) -> SimpleGraph:
    kind, _, value = text.partition(":")
    if kind == "named":
        return build(value, with_witness=False).graph
    if kind == "g6":
        return graph6_decode(value)
    raise SystemExit("error: --seed must be named:<name> or g6:<graph6>")


def _parse_moves(text: str) -> frozenset:
    moves = frozenset(m.strip() for m in text.split(",") if m.strip())
    if not moves or not moves <= ALL_MOVES:
        raise SystemExit(f"error: --moves takes a comma list from {sorted(ALL_MOVES)}")
    return moves


def cmd_family(args) -> int:
    _check_parent(args.out)
    fam = family_closure(_seed_graph(args.seed), _parse_moves(args.moves), budget=args.budget)
    print(len(fam))
    print(
        json.dumps(
            {
                "members": len(fam),
                "triangle_free": len(triangle_free_members(fam)),
                "by_order": {str(k): len(v) for k, v in sorted(fam.by_order().items())},
            }
        ),
        file=sys.stderr,
    )
    if args.out:
        export_family(fam, args.out)
    return 0


def cmd_catalog(args) -> int:
    ng = build(canonical_name(args.name))
    print(graph6_encode(ng.graph).decode())
    print(json.dumps(ng.descriptor(), sort_keys=True))
    return 0


def cmd_reduce(args) -> int:
    g = graph6_decode(args.graph)
    try:
        a, b = (int(x) for x in args.pair.split(","))
    except ValueError:
        raise SystemExit("error: --pair takes two comma-separated vertex indices") from None
    check_pair(g, (a, b))
    red = reduce_pair_detail(g, a, b)
    h = red.graph
    out = {
        "pair": [a, b],
        "reduced": graph6_encode(h).decode(),
        "reduced_order": h.order,
        "actual": h.edge_count,
        "planar": is_planar(h),
        "clause": classify_reduced(h).kind.value,
        "merged": red.merged,
    }
    if args.ledger:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", OutOfRegime)
            led = pair_ledger(g, a, b)
        out.update(led.to_dict())
        out["in_regime"] = not any(issubclass(w.category, OutOfRegime) for w in caught)
    print(json.dumps(out, sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tfik", description="Triangle-free intrinsic knottedness verification engine")
    p.add_argument("-v", "--verbose", action="store_true", help="progress messages on standard error")
    p.add_argument("--backend", choices=["python", "compiled"], help="kernel implementation (default: compiled if built)")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="write every regime graph once as graph6 lines")
    e.add_argument("--edges", type=int, required=True)
    e.add_argument("--min-degree", type=int, default=3)
    e.add_argument("--triangle-free", action=argparse.BooleanOptionalAction, default=True)
    e.add_argument("--allow-disconnected", action="store_true")
    e.add_argument("--profile", choices=sorted(PROFILES), default=ANY_PROFILE)
    e.add_argument("--orders", type=int, nargs="+", help="restrict to these vertex counts")
    e.add_argument("--out", help="graph6 output file (default: standard output)")
    e.add_argument("--jobs", type=int, default=1)
    e.add_argument("--budget", type=int, help="node limit per order; exceeding it exits nonzero")
    e.set_defaults(func=cmd_enumerate)

    pr = sub.add_parser("prove", help="certificate for each graph in a graph6 file")
    pr.add_argument("--in", dest="input", required=True)
    pr.add_argument("--rules", default=",".join(ALL_RULES), help="comma list of planar-reduction,two-cut")
    pr.add_argument("--out", help="JSON-lines output (default: standard output)")
    pr.set_defaults(func=cmd_prove)

    t = sub.add_parser("theorem", help="run the full classification and check its outcome")
    t.add_argument("--jobs", type=int, default=1)
    t.add_argument("--budget", type=int)
    t.add_argument("--rules", default=",".join(ALL_RULES))
    t.add_argument("--report", help="also write the JSON report here")
    t.add_argument("--certificates", help="JSON-lines certificate stream for every candidate")
    t.add_argument("--no-timing", action="store_true", help="omit wall-clock fields from the report")
    t.set_defaults(func=cmd_theorem)

    f = sub.add_parser("family", help="closure of a seed under triangle/Y moves")
    f.add_argument("--seed", required=True, help="named:<name> or g6:<graph6>")
    f.add_argument("--moves", default="ty,yt", help="comma list of ty (triangle to Y) and yt (Y to triangle)")
    f.add_argument("--budget", type=int)
    f.add_argument("--out", help="graph6 export; provenance goes to <out>.json")
    f.set_defaults(func=cmd_family)

    c = sub.add_parser("catalog", help="print a named graph and its descriptor")
    c.add_argument("name")
    c.set_defaults(func=cmd_catalog)

    r = sub.add_parser("reduce", help="reduce a graph at a vertex pair")
    r.add_argument("--graph", required=True, help="graph6 string")
    r.add_argument("--pair", required=True, help="a,b")
    r.add_argument("--ledger", action="store_true", help="include the edge-count ledger")
    r.set_defaults(func=cmd_reduce)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(name)s: %(message)s")
    if args.backend:
        kernels.set_backend(args.backend)
    try:
        return args.func(args)
    except (TfikError, ParseError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
