"""Command line interface.

Exit codes: 0 success, 1 domain failure (bad moduli, mismatch found, parse
error in a netlist), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import harness
from .circuit import (
    PAPER_GROUPS,
    BitLayout,
    LayoutWidthMismatchError,
    NetlistError,
    SearchSpaceTooLargeError,
    check_equivalence,
    default_layout,
    format_netlist,
    paper_circuit_235,
    parse_netlist,
    search_bit_layouts,
    simulate,
    synthesize_cluster_circuit,
)
from .cluster import build_subgroup_table, cluster_of, subgroup_index
from .comparator import compare, compare_crt, compare_mrc, explain_compare
from .errors import RnsError
from .moduli import ModuliSet, decode, encode, mrc_digits

COMPARATORS = {"cluster": compare, "crt": compare_crt, "mrc": compare_mrc}

DOMAIN_ERRORS = (
    RnsError,
    NetlistError,
    LayoutWidthMismatchError,
    SearchSpaceTooLargeError,
    harness.RangeTooLargeError,
    OSError,
)


class UsageError(Exception):
    pass


def _int_list(text: str, n: int | None = 3) -> list[int]:
    try:
        values = [int(t) for t in text.replace(" ", "").split(",") if t != ""]
    except ValueError:
        raise UsageError(f"expected comma separated integers, got {text!r}") from None
    if n is not None and len(values) != n:
        raise UsageError(f"expected {n} comma separated integers, got {text!r}")
    return values


def _config(args) -> dict:
    if not getattr(args, "config", None):
        return {}
    try:
        cfg = json.loads(Path(args.config).read_text())
    except json.JSONDecodeError as e:
        raise UsageError(f"config {args.config}: {e}") from None
    if not isinstance(cfg, dict):
        raise UsageError("config file must hold a JSON object")
    return cfg


def _moduli(args, default=None) -> ModuliSet:
    if getattr(args, "moduli", None):
        ps = _int_list(args.moduli)
    else:
        ps = _config(args).get("moduli", default)
        if ps is None:
            raise UsageError("no moduli given; use --moduli p1,p2,p3 or --config FILE")
        if not isinstance(ps, list) or len(ps) != 3:
            raise UsageError("config 'moduli' must be a list of three integers")
    return ModuliSet(*ps)


def _number(ms: ModuliSet, text: str):
    return ms.number(_int_list(text))


def _fmt(x) -> str:
    return ",".join(map(str, x.residues))


def cmd_encode(args) -> int:
    ms = _moduli(args)
    print(_fmt(encode(args.value, ms)))
    return 0


def cmd_decode(args) -> int:
    ms = _moduli(args)
    print(decode(_number(ms, args.residues)))
    return 0


def cmd_mrc(args) -> int:
    ms = _moduli(args)
    print(",".join(map(str, mrc_digits(_number(ms, args.residues)))))
    return 0


def cmd_cluster(args) -> int:
    ms = _moduli(args)
    x = _number(ms, args.residues)
    if args.explain:
        table = build_subgroup_table(ms)
        i = subgroup_index(table, x.x2, x.x3)
        print(f"group r={x.x2}")
        print(f"subgroup row S({x.x2},.) = {list(table.row(x.x2))}")
        print(f"x3 mod p2 = {x.x3 % ms.p2} -> i={i}")
        print(f"cluster {cluster_of(x)}")
    else:
        print(cluster_of(x))
    return 0


def cmd_compare(args) -> int:
    ms = _moduli(args)
    x, y = _number(ms, args.x), _number(ms, args.y)
    if args.explain and args.method == "cluster":
        t = explain_compare(x, y)
        print(f"Z = {t.z}  CL(X)={t.cl_x}  CL(Y)={t.cl_y}  CL(Z)={t.cl_z}")
        print(t.result)
    else:
        print(COMPARATORS[args.method](x, y))
    return 0


def cmd_verify(args) -> int:
    cfg = _config(args)
    if args.grid:
        sets = [ModuliSet(*p) for p in harness.DEFAULT_GRID]
    else:
        sets = [_moduli(args)]
    ceiling = cfg.get("exhaustive_ceiling", harness.CLUSTER_CEILING)
    if args.exhaustive_ceiling is not None:
        ceiling = args.exhaustive_ceiling
    reports = [
        harness.verify(
            ms,
            mode=args.mode,
            seed=args.seed,
            samples=args.samples,
            cluster_ceiling=ceiling,
            pair_ceiling=ceiling,
        )
        for ms in sets
    ]
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], indent=2))
    else:
        for r in reports:
            print(r.summary())
    return 0 if all(r.ok for r in reports) else 1


def cmd_bench(args) -> int:
    ms = _moduli(args)
    if args.pairs < 1:
        raise UsageError("--pairs must be at least 1")
    records = harness.bench(ms, args.pairs, args.seed)
    text = harness.bench_csv(records)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    digests = {r.outcome_digest for r in records}
    if len(digests) != 1:
        print("comparators disagree on the operand stream", file=sys.stderr)
        return 1
    return 0


def _load_net(args):
    if args.paper_235:
        return paper_circuit_235()
    if not args.netlist:
        raise UsageError("give --netlist FILE or --paper-235")
    return parse_netlist(Path(args.netlist).read_text())


def _circuit_moduli(args) -> ModuliSet:
    return _moduli(args, default=[2, 3, 5] if args.paper_235 else None)


def _layout(args, ms):
    if args.layout:
        return BitLayout.parse(args.layout, ms)
    return default_layout(ms)


def cmd_circuit_synth(args) -> int:
    ms = _moduli(args)
    layout = _layout(args, ms)
    net = synthesize_cluster_circuit(ms, layout)
    header = f"SOP cluster finder for moduli {ms}\nlayout {layout.spec()}"
    text = format_netlist(net, header=header)
    if args.output:
        Path(args.output).write_text(text)
        print(f"{args.output}: {len(net.gates)} gates, {len(net.inputs)} inputs, {len(net.outputs)} outputs")
    else:
        sys.stdout.write(text)
    return 0


def cmd_circuit_sim(args) -> int:
    net = _load_net(args)
    if "=" in args.inputs:
        assignment = {}
        for item in args.inputs.split(","):
            name, _, v = item.partition("=")
            assignment[name.strip()] = _int_list(v, 1)[0]
    else:
        bits = _int_list(args.inputs, len(net.inputs))
        assignment = dict(zip(net.inputs, bits))
    out = simulate(net, assignment)
    for name in net.outputs:
        print(f"{name}={out[name]}")
    return 0


def cmd_circuit_check(args) -> int:
    net = _load_net(args)
    ms = _circuit_moduli(args)
    report = check_equivalence(net, ms, _layout(args, ms), held_value=args.held_value)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.summary())
        for n, want, got in report.mismatches:
            print(f"  n={n} expected cluster {want}, circuit says {got}")
    return 0 if report.full else 1


def cmd_circuit_search(args) -> int:
    net = _load_net(args)
    ms = _circuit_moduli(args)
    groups = None
    if args.paper_groups:
        groups = PAPER_GROUPS
    elif args.groups:
        groups = [tuple(g.split(",")) for g in args.groups.split(";")]
    results = search_bit_layouts(
        net, ms, groups=groups, max_layouts=args.max_layouts, held_value=args.held_value
    )
    shown = results if args.top is None else results[: args.top]
    if args.json:
        print(json.dumps(
            {
                "moduli": list(ms.moduli),
                "layouts": len(results),
                "full": sum(r.full for _, r in results),
                "best": results[0][1].agree if results else 0,
                "ranked": [r.to_dict() for _, r in shown],
            },
            indent=2,
        ))
    else:
        full = sum(r.full for _, r in results)
        best = results[0][1].agree if results else 0
        print(f"{len(results)} layouts searched, {full} with full agreement, best {best}/{ms.M}")
        for rank, (_, r) in enumerate(shown, start=1):
            print(f"{rank:5d}  {r.summary()}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--moduli", help="moduli as p1,p2,p3")
    common.add_argument("--config", help="JSON file with {\"moduli\": [p1, p2, p3]}")

    parser = argparse.ArgumentParser(
        prog="rnscluster", description="Cluster-based RNS magnitude comparison."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", parents=[common], help="integer to residues")
    p.add_argument("--value", type=int, required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", parents=[common], help="residues to integer (CRT)")
    p.add_argument("--residues", required=True)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("mrc", parents=[common], help="mixed-radix digits, least significant first")
    p.add_argument("--residues", required=True)
    p.set_defaults(func=cmd_mrc)

    p = sub.add_parser("cluster", parents=[common], help="cluster index of a residue triple")
    p.add_argument("--residues", required=True)
    p.add_argument("--explain", action="store_true")
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser("compare", parents=[common], help="compare two residue triples")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--method", choices=sorted(COMPARATORS), default="cluster")
    p.add_argument("--explain", action="store_true")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify", parents=[common], help="sweep cluster finder and comparators")
    p.add_argument("--grid", action="store_true", help="run the default moduli grid")
    p.add_argument("--mode", choices=["auto", "exhaustive", "random"], default="auto")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--exhaustive-ceiling", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="time comparators on one operand stream")
    p.add_argument("--pairs", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("circuit", help="gate-level cluster finders")
    csub = p.add_subparsers(dest="circuit_command", required=True)
    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--netlist")
    source.add_argument("--paper-235", action="store_true", help="use the embedded (2,3,5) circuit")

    c = csub.add_parser("synth", parents=[common], help="sum-of-products synthesis")
    c.add_argument("--layout")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_circuit_synth)

    c = csub.add_parser("sim", parents=[source], help="simulate one input vector")
    c.add_argument("--inputs", required=True, help="bits in input order, or name=bit pairs")
    c.set_defaults(func=cmd_circuit_sim)

    c = csub.add_parser("check", parents=[common, source], help="exhaustive equivalence check")
    c.add_argument("--layout", help="wire=residue.bit,... (default x<r>_<bit>)")
    c.add_argument("--held-value", type=int, choices=[0, 1], default=0)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_circuit_check)

    c = csub.add_parser("search", parents=[common, source], help="rank all bit layouts")
    c.add_argument("--groups", help="three wire groups, e.g. a,b;c,d;e,f,g")
    c.add_argument("--paper-groups", action="store_true")
    c.add_argument("--top", type=int)
    c.add_argument("--held-value", type=int, choices=[0, 1], default=0)
    c.add_argument("--max-layouts", type=int, default=200_000)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_circuit_search)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"rnscluster: error: {e}", file=sys.stderr)
        return 2
    except (*DOMAIN_ERRORS, ValueError) as e:
        print(f"rnscluster: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
