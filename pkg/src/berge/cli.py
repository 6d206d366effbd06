"""Command-line entry point.

Exit codes: 0 success / property holds, 1 property false, 2 usage or input
error. When ``-o`` is given the artifact goes to that file and the
human-readable report to stderr.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .extract import extract_long_cycle
from .extremal import (BlockTreePlan, Flavor, certify_extremal, chain_plan, generate_block_tree, star_plan,
                       theorem6_component_certify)
from .hypergraph import HypergraphError, cut_hyperedges, dump_hypergraph, hypergraph_blocks, is_connected, load_hypergraph
from .injections import DeficientSet, PreconditionError, find_dense_terminal_set, hall_injection
from .oracle import CapExceeded, TheoremViolation, max_edges_no_long_cycle, verify_theorem
from .search import SearchBudgetExceeded, find_berge_cycle_at_least, longest_berge_cycle, longest_berge_path
from .witness import BergeCycle, format_witness

OK, FALSE, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _node_cap(args) -> int | None:
    if getattr(args, "node_cap", None):
        return args.node_cap
    env = os.environ.get("BERGE_NODE_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"BERGE_NODE_CAP must be an integer, got {env!r}") from None
    return None


def _read_input(args):
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input) as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    return load_hypergraph(text, args.format)


class _Out:
    """Artifact and report streams, per the -o convention."""

    def __init__(self, path):
        self.path = path
        self.report = sys.stderr if path else sys.stdout

    def say(self, line=""):
        print(line, file=self.report)

    def artifact(self, text):
        if self.path:
            with open(self.path, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)


def cmd_gen(args) -> int:
    flavor = Flavor(args.flavor)
    if args.plan:
        try:
            with open(args.plan) as fh:
                plan = BlockTreePlan.from_json(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read plan {args.plan}: {exc.strerror}") from None
    else:
        if args.r is None or args.blocks is None:
            raise UsageError("gen needs --r and --blocks (or --plan)")
        if args.blocks < 1:
            raise UsageError("--blocks must be >= 1")
        plan = (star_plan if args.star else chain_plan)(args.r, args.blocks, flavor)
    h = generate_block_tree(plan)
    out = _Out(args.output)
    out.artifact(dump_hypergraph(h, "json" if args.format == "json" else "text"))
    if args.output:
        out.say(f"wrote {h} to {args.output}")
    return OK


def cmd_check(args) -> int:
    h = _read_input(args)
    cap = _node_cap(args)
    if args.cycle_at_least is not None:
        if args.cycle_at_least < 2:
            raise UsageError("--cycle-at-least must be >= 2")
        c = find_berge_cycle_at_least(h, args.cycle_at_least, cap)
        if c is None:
            print(f"no Berge cycle of length >= {args.cycle_at_least}")
            return FALSE
        print(f"cycle length {c.length}: {format_witness(c)}")
        return OK
    if args.longest_cycle:
        res = longest_berge_cycle(h, cap)
        if res is None:
            print("no Berge cycle")
            return FALSE
        print(f"longest cycle {res[0]}: {format_witness(res[1])}")
        return OK
    res = longest_berge_path(h, cap)
    if res is None:
        print("no vertices")
        return FALSE
    print(f"longest path {res[0]}: {format_witness(res[1])}")
    return OK


def cmd_blocks(args) -> int:
    h = _read_input(args)
    dec = hypergraph_blocks(h)
    for i, block in enumerate(dec.blocks):
        print(f"block {i}: {' '.join(map(str, sorted(block)))}")
    print(f"cut vertices: {' '.join(map(str, sorted(dec.cut_vertices))) or '-'}")
    connected = is_connected(h)
    print(f"connected: {'yes' if connected else 'no'}")
    if connected:
        cuts = cut_hyperedges(h)
        print("cut hyperedges: " + (", ".join(" ".join(map(str, e)) for e in cuts) or "-"))
    return OK


def cmd_inject(args) -> int:
    h = _read_input(args)
    res = hall_injection(h, 1 if args.allow_miss else 0)
    if isinstance(res, DeficientSet):
        print(f"deficient set: {' '.join(map(str, sorted(res.s)))} meets {res.incident_count} edges")
        return FALSE
    for v in sorted(res.mapping):
        print(f"{v} -> {' '.join(map(str, res.mapping[v]))}")
    if res.missed:
        print(f"missed: {' '.join(map(str, sorted(res.missed)))}")
    return OK


def cmd_dense_set(args) -> int:
    h = _read_input(args)
    if args.k not in (h.r + 1, h.r + 2):
        raise UsageError(f"--k must be r+1={h.r + 1} or r+2={h.r + 2}")
    if args.extract:
        ex = extract_long_cycle(h, args.k, _node_cap(args))
        for line in ex.trace:
            print(line)
        if ex.cycle is None:
            print(f"no Berge cycle of length >= {args.k}")
            return FALSE
        tag = " (exhaustive fallback)" if ex.fallback else ""
        print(f"cycle length {ex.cycle.length}{tag}: {format_witness(ex.cycle)}")
        return OK
    try:
        res = find_dense_terminal_set(h, args.k)
    except PreconditionError as exc:
        print(f"precondition failed: {exc}")
        return FALSE
    if isinstance(res, BergeCycle):
        print(f"cycle length {res.length}: {format_witness(res)}")
        return OK
    print(f"dense set: {' '.join(map(str, res.s))}")
    print("inside edges: " + ", ".join(" ".join(map(str, e)) for e in res.inside_edges))
    print(f"anchor walk: {format_witness(res.anchor_path)}")
    return OK


def cmd_certify(args) -> int:
    h = _read_input(args)
    if args.path:
        cert = theorem6_component_certify(h)
        for comp in cert.components:
            print(f"component {' '.join(map(str, comp.component))}: {comp.reason}")
        print("valid" if cert.valid else "invalid")
        return OK if cert.valid else FALSE
    if args.k is None:
        raise UsageError("certify needs --k (or --path)")
    if args.k not in (h.r + 1, h.r + 2):
        raise UsageError(f"--k must be r+1={h.r + 1} or r+2={h.r + 2}")
    cert = certify_extremal(h, args.k)
    print(cert.summary())
    return OK if cert.valid else FALSE


def cmd_census(args) -> int:
    report = max_edges_no_long_cycle(args.n, args.r, args.k, args.mode, args.jobs)
    out = _Out(args.output)
    out.artifact(report.to_json())
    if args.output:
        out.say(f"n={report.n} r={report.r} k={report.k} mode={report.mode}: max_edges={report.max_edges} "
                f"extremal={report.extremal_count} bound={report.bound} agreement={report.agreement}")
    return OK if report.agreement in (True, None) else FALSE


def cmd_verify(args) -> int:
    if args.n_min > args.n_max:
        raise UsageError("--n-min exceeds --n-max")
    try:
        report = verify_theorem(args.theorem, args.r, args.n_min, args.n_max, args.jobs)
    except TheoremViolation as exc:
        print(str(exc), file=sys.stderr)
        return FALSE
    out = _Out(args.output)
    if args.output:
        out.artifact(json.dumps(report.to_dict(), indent=2) + "\n")
    for line in report.lines():
        out.say(line)
    out.say("max_edges: " + " ".join(map(str, report.max_edges)))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="berge", description="Berge cycles and paths in uniform hypergraphs")
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(sp):
        sp.add_argument("--input", "-i", required=True, help="hypergraph file ('-' for stdin)")
        sp.add_argument("--format", choices=["auto", "text", "json"], default="auto")
        return sp

    g = sub.add_parser("gen", help="generate an extremal block tree")
    g.add_argument("--r", type=int)
    g.add_argument("--blocks", type=int)
    g.add_argument("--flavor", choices=["full", "minus"], default="full")
    shape = g.add_mutually_exclusive_group()
    shape.add_argument("--chain", action="store_true", help="each block hangs off the previous one (default)")
    shape.add_argument("--star", action="store_true", help="all blocks share vertex 1")
    shape.add_argument("--plan", help="JSON plan file")
    g.add_argument("--format", choices=["text", "json"], default="text")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    c = with_input(sub.add_parser("check", help="search for Berge cycles or paths"))
    what = c.add_mutually_exclusive_group(required=True)
    what.add_argument("--cycle-at-least", type=int, metavar="K")
    what.add_argument("--longest-cycle", action="store_true")
    what.add_argument("--longest-path", action="store_true")
    c.add_argument("--node-cap", type=int, help="node-expansion budget (default: unlimited)")
    c.set_defaults(func=cmd_check)

    b = with_input(sub.add_parser("blocks", help="block decomposition of the 2-shadow"))
    b.set_defaults(func=cmd_blocks)

    j = with_input(sub.add_parser("inject", help="vertex-to-edge injection or a deficient set"))
    j.add_argument("--allow-miss", action="store_true", help="tolerate one unmatched vertex")
    j.set_defaults(func=cmd_inject)

    d = with_input(sub.add_parser("dense-set", help="rotation procedure: long cycle or dense terminal set"))
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--extract", action="store_true", help="reduce and fall back to search until a cycle is found")
    d.add_argument("--node-cap", type=int)
    d.set_defaults(func=cmd_dense_set)

    f = with_input(sub.add_parser("certify", help="certify the extremal structure"))
    f.add_argument("--k", type=int)
    f.add_argument("--path", action="store_true", help="component check for the Berge-path bound")
    f.set_defaults(func=cmd_certify)

    o = sub.add_parser("oracle", help="exhaustive censuses")
    osub = o.add_subparsers(dest="oracle_command", required=True)
    oc = osub.add_parser("census")
    oc.add_argument("--n", type=int, required=True)
    oc.add_argument("--r", type=int, required=True)
    oc.add_argument("--k", type=int, required=True)
    oc.add_argument("--mode", choices=["cycle", "path"], default="cycle")
    oc.add_argument("--jobs", type=int)
    oc.add_argument("-o", "--output")
    oc.set_defaults(func=cmd_census)
    ov = osub.add_parser("verify")
    ov.add_argument("--theorem", type=int, choices=[4, 5, 6], required=True)
    ov.add_argument("--r", type=int, required=True)
    ov.add_argument("--n-min", type=int, required=True)
    ov.add_argument("--n-max", type=int, required=True)
    ov.add_argument("--jobs", type=int)
    ov.add_argument("-o", "--output")
    ov.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, HypergraphError, CapExceeded, ValueError) as exc:
        print(f"berge: error: {exc}", file=sys.stderr)
        return USAGE
    except SearchBudgetExceeded as exc:
        print(f"berge: {exc}", file=sys.stderr)
        return FALSE


if __name__ == "__main__":
    sys.exit(main())
