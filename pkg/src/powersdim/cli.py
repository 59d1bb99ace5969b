"""Command-line front end.

Commands: compute, oracle, compare, table, witness, classify, export.
Group targets use the spec grammar (Z12, D12, Q8, E2^3, Ab[2,6], S4, A5,
Z3xQ8, cayley:<path>, perm:<path>); the oracle command also accepts
edgelist:<path> (edge-list JSON) and graph6:<path> graph files.

Errors go to stderr with greppable prefixes: ERROR:PARSE (exit 2),
ERROR:MISMATCH (exit 3), ERROR:CAP (exit 2).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .graphs import (Disconnected, from_edge_list, graph6_decode, graph6_encode,
                     power_graph, reduced_graph, to_dot, to_edge_list)
from .groups import (Group, InvalidSpec, NotAGroup, ClosureTooLarge, build_group,
                     element_orders, parse_spec, spec_string)
from .sdim import (DEFAULT_ORACLE_CAP, InternalInconsistency, Method,
                   OracleCapExceeded, SdimResult, _closed_form, classify_n_minus_2,
                   is_strong_resolving_set, omega_reduced_group, sdim_group,
                   sdim_oracle, sdim_via_reduction)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_MISMATCH = 3


def _err(prefix: str, message: str) -> None:
    print(f"ERROR:{prefix} {message}", file=sys.stderr)


def _result_dict(group_name: str, order: int, res: SdimResult,
                 include_witness: bool) -> dict:
    witness = sorted(res.witness) if (include_witness and res.witness is not None) else None
    return {
        "group": group_name,
        "order": order,
        "sdim": res.value,
        "omega_reduced": res.omega_reduced,
        "method": res.method.value,
        "closed_form": res.closed_form.value if res.closed_form else None,
        "witness": witness,
        "verified": res.verified,
    }


def _print_result(group_name: str, order: int, res: SdimResult, args) -> None:
    include_witness = getattr(args, "witness", False)
    if args.json:
        print(json.dumps(_result_dict(group_name, order, res, include_witness)))
        return
    print(f"group: {group_name}")
    print(f"order: {order}")
    print(f"sdim: {res.value}")
    print(f"omega_reduced: {res.omega_reduced if res.omega_reduced is not None else '-'}")
    print(f"method: {res.method.value}")
    print(f"closed_form: {res.closed_form.value if res.closed_form else '-'}")
    if include_witness:
        print(f"witness: {sorted(res.witness) if res.witness is not None else '-'}")
    print(f"verified: {'true' if res.verified else 'false'}")


def _build(target: str) -> Group:
    return build_group(parse_spec(target))


def _load_graph_target(target: str):
    """Return (name, graph) for a group spec or a prefixed graph file."""
    if target.startswith("edgelist:"):
        path = target[len("edgelist:"):]
        with open(path) as fh:
            return target, from_edge_list(json.load(fh))
    if target.startswith("graph6:"):
        path = target[len("graph6:"):]
        with open(path) as fh:
            return target, graph6_decode(fh.read())
    g = _build(target)
    return spec_string(g.spec), power_graph(g)


# ---------------------------------------------------------------------------
# Commands


def cmd_compute(args) -> int:
    g = _build(args.spec)
    name = spec_string(g.spec)
    t0 = time.perf_counter()
    res = sdim_group(g)
    elapsed = (time.perf_counter() - t0) * 1000.0
    _print_result(name, g.n, res, args)
    if not args.json and not args.no_timing:
        print(f"time_ms: {elapsed:.1f}")
    if args.check:
        if res.witness is None or len(res.witness) != res.value or \
                not is_strong_resolving_set(power_graph(g), res.witness):
            _err("MISMATCH", f"witness check failed for {name}")
            return EXIT_MISMATCH
        if g.n <= args.oracle_cap:
            oracle = sdim_oracle(power_graph(g), oracle_cap=args.oracle_cap)
            if oracle.value != res.value:
                _err("MISMATCH", f"oracle gives {oracle.value}, formulas give {res.value}")
                return EXIT_MISMATCH
    return EXIT_OK


def cmd_oracle(args) -> int:
    name, graph = _load_graph_target(args.target)
    t0 = time.perf_counter()
    res = sdim_oracle(graph, oracle_cap=args.oracle_cap)
    elapsed = (time.perf_counter() - t0) * 1000.0
    _print_result(name, graph.n, res, args)
    if not args.json and not args.no_timing:
        print(f"time_ms: {elapsed:.1f}")
    return EXIT_OK


def cmd_compare(args) -> int:
    g = _build(args.spec)
    name = spec_string(g.spec)
    graph = power_graph(g)
    rows: list[tuple[str, int, float]] = []

    t0 = time.perf_counter()
    cf = _closed_form(g)
    ms = (time.perf_counter() - t0) * 1000.0
    if cf is not None:
        rows.append((cf[0].value, cf[1], ms))
    t0 = time.perf_counter()
    theorem = g.n - omega_reduced_group(g) if g.n > 1 else 0
    rows.append((Method.GROUP_THEOREM.value, theorem,
                 (time.perf_counter() - t0) * 1000.0))
    t0 = time.perf_counter()
    reduction = sdim_via_reduction(graph)
    rows.append((Method.DIAMETER2_REDUCTION.value, reduction.value,
                 (time.perf_counter() - t0) * 1000.0))
    if g.n <= args.oracle_cap:
        t0 = time.perf_counter()
        oracle = sdim_oracle(graph, oracle_cap=args.oracle_cap)
        rows.append((Method.GENERIC_ORACLE.value, oracle.value,
                     (time.perf_counter() - t0) * 1000.0))

    values = {v for _, v, _ in rows}
    agree = len(values) == 1
    if args.json:
        payload = {
            "group": name,
            "order": g.n,
            "rows": [{"method": m, "sdim": v} for m, v, _ in rows],
            "agree": agree,
        }
        print(json.dumps(payload))
    else:
        print(f"group: {name}  order: {g.n}")
        for m, v, ms in rows:
            if args.no_timing:
                print(f"{m:<28} {v}")
            else:
                print(f"{m:<28} {v:>6}  {ms:.1f}ms")
        print(f"agreement: {'ok' if agree else 'MISMATCH'}")
    if not agree:
        _err("MISMATCH", f"methods disagree on {name}: {sorted(values)}")
        return EXIT_MISMATCH
    return EXIT_OK


_FAMILY_BUILDERS = {
    # family -> (parameter meaning, spec for parameter value, minimum parameter)
    "cyclic": ("n (group Z_n)", lambda k: f"Z{k}", 1),
    "dihedral": ("n (group of order 2n)", lambda k: f"D{2 * k}", 3),
    "quaternion": ("n (group of order 4n)", lambda k: f"Q{4 * k}", 2),
    "elementary": ("k (group Z_2^k)", lambda k: f"E2^{k}", 1),
}


def cmd_table(args) -> int:
    try:
        lo_s, hi_s = args.range.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        _err("PARSE", f"bad range {args.range!r}, expected lo..hi")
        return EXIT_PARSE
    if lo > hi:
        _err("PARSE", f"empty range {args.range!r}")
        return EXIT_PARSE
    _, make_spec, minimum = _FAMILY_BUILDERS[args.family]
    if lo < minimum:
        _err("PARSE", f"family {args.family} needs parameter >= {minimum}")
        return EXIT_PARSE
    rows = []
    for k in range(lo, hi + 1):
        g = _build(make_spec(k))
        res = sdim_group(g)
        rows.append((k, g.n, res.value, res.omega_reduced, res.method.value))
    if args.csv:
        print("param,order,sdim,omega_reduced,method")
        for row in rows:
            print(",".join(str(x) for x in row))
    else:
        print(f"{'param':>5} {'order':>6} {'sdim':>6} {'omega':>6}  method")
        for k, order, value, omega, method in rows:
            print(f"{k:>5} {order:>6} {value:>6} {omega:>6}  {method}")
    return EXIT_OK


def cmd_witness(args) -> int:
    g = _build(args.spec)
    name = spec_string(g.spec)
    res = sdim_group(g)
    if args.json:
        print(json.dumps(_result_dict(name, g.n, res, include_witness=True)))
        return EXIT_OK
    witness = sorted(res.witness)
    print(f"group: {name}")
    print(f"sdim: {res.value}")
    print(f"witness ({len(witness)} elements): {witness}")
    print(f"verified: {'true' if res.verified else 'false'}")
    return EXIT_OK


def cmd_classify(args) -> int:
    g = _build(args.spec)
    name = spec_string(g.spec)
    res = sdim_group(g)
    hit, label = classify_n_minus_2(g)
    if hit != (res.value == g.n - 2):
        _err("MISMATCH", f"classification disagrees with sdim for {name}")
        return EXIT_MISMATCH
    if args.json:
        print(json.dumps({"group": name, "order": g.n, "sdim": res.value,
                          "n_minus_2": hit, "class": label}))
    else:
        print(f"group: {name}  order: {g.n}  sdim: {res.value}")
        if hit:
            print(f"sdim = n-2: yes ({label})")
        else:
            print("sdim = n-2: no")
    return EXIT_OK


def cmd_export(args) -> int:
    g = _build(args.spec)
    graph = power_graph(g)
    if args.reduced:
        red = reduced_graph(graph)
        out_graph = red.quotient
        sizes = [len(m) for m in red.class_members()]
        labels = [f"class {c} (size {s})" for c, s in enumerate(sizes)]
    else:
        out_graph = graph
        orders = element_orders(g)
        labels = [f"{v} (ord {orders[v]})" for v in range(g.n)]
    if args.format == "dot":
        sys.stdout.write(to_dot(out_graph, labels))
    elif args.format == "graph6":
        try:
            print(graph6_encode(out_graph))
        except ValueError as exc:
            _err("CAP", str(exc))
            return EXIT_PARSE
    else:  # json
        print(json.dumps(to_edge_list(out_graph)))
    return EXIT_OK


# ---------------------------------------------------------------------------
# Argument parsing


def _add_common(p: argparse.ArgumentParser, *, oracle_cap: bool = False) -> None:
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--no-timing", action="store_true",
                   help="omit timings for byte-reproducible output")
    if oracle_cap:
        p.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP,
                       metavar="N", help="vertex cap for the generic oracle")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powersdim",
        description="Exact strong metric dimension of power graphs of finite groups.",
    )
    parser.add_argument("--version", action="version", version=f"powersdim {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute sdim of a group's power graph")
    p.add_argument("spec", help="group spec, e.g. Z12, D12, Q8, Ab[2,6], cayley:t.txt")
    p.add_argument("--witness", action="store_true", help="include a minimum witness set")
    p.add_argument("--check", action="store_true",
                   help="re-verify the witness and cross-check the oracle when within cap")
    _add_common(p, oracle_cap=True)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("oracle", help="run only the generic oracle")
    p.add_argument("target", help="group spec, edgelist:<path>, or graph6:<path>")
    p.add_argument("--witness", action="store_true", help="include the witness set")
    _add_common(p, oracle_cap=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("compare", help="run every applicable method and compare")
    p.add_argument("spec")
    _add_common(p, oracle_cap=True)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("table", help="tabulate a parametric family")
    p.add_argument("--family", required=True, choices=sorted(_FAMILY_BUILDERS))
    p.add_argument("--range", required=True, metavar="LO..HI")
    p.add_argument("--csv", action="store_true", help="CSV output")
    _add_common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("witness", help="print a verified minimum witness set")
    p.add_argument("spec")
    _add_common(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("classify", help="test whether sdim equals n-2, with the class")
    p.add_argument("spec")
    _add_common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("export", help="serialize the power graph (or its reduction)")
    p.add_argument("spec")
    p.add_argument("--format", required=True, choices=["dot", "graph6", "json"])
    p.add_argument("--reduced", action="store_true", help="export the closed-twin quotient")
    p.set_defaults(func=cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad flags, 0 on --help/--version
        return int(exc.code or 0)
    try:
        return args.func(args)
    except OracleCapExceeded as exc:  # before ValueError: it is a subclass
        _err("CAP", str(exc))
        return EXIT_PARSE
    except (InvalidSpec, NotAGroup, ClosureTooLarge, Disconnected, ValueError,
            OSError, json.JSONDecodeError) as exc:
        _err("PARSE", str(exc))
        return EXIT_PARSE
    except InternalInconsistency as exc:
        _err("MISMATCH", str(exc))
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
