"""Command-line front end.

Subcommands mirror the two spaces: `cm ...` for the Calogero-Moser side,
`hilb ...` for the Hilbert scheme, `part info` for raw partition data and
`verify` for the named invariant checks.  Exit codes: 0 success, 1 a
verification or computation failure, 2 a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .exactalg import NonPolynomialError
from .orbits import (
    CALOGERO_MOSER,
    HILBERT,
    closure_graph,
    cm_orbit,
    hilb_orbit,
    is_borel_stable,
    monomial_ideal,
)
from .partitions import (
    CapExceededError,
    Partition,
    all_hooks_odd,
    diagonals,
    dim_irrep,
    enumerate_partitions,
    hook_lengths,
    hook_polynomial,
    is_staircase,
    is_steep,
    n_stat,
    parse_partition,
    transpose,
    u_map,
)
from .sl2 import (
    NotACharacterError,
    exponent_string,
    exponents,
    sl2_fixed_set,
    tangent_character,
    weights_all_odd,
)
from .symfun import NonTriangularSizeError, regular_fiber_character
from .verify import CHECKS, Limits, run_checks


def _json_dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _print_kv(pairs):
    width = max(len(k) for k, _ in pairs)
    for key, value in pairs:
        print(f"{key:<{width}}  {value}")


def _partition_arg(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cmhilb",
        description="Exact hook, character and orbit computations for "
        "torus-fixed points on Hilbert schemes and Calogero-Moser spaces.",
    )
    sub = parser.add_subparsers(dest="group", required=True)

    def add_format(p, choices=("text", "json")):
        p.add_argument("--format", choices=choices, default="text",
                       help="output format (default text)")

    part = sub.add_parser("part", help="partition combinatorics")
    part_sub = part.add_subparsers(dest="command", required=True)
    p = part_sub.add_parser("info", help="hooks, diagonals, rectification and statistics")
    p.add_argument("partition", type=_partition_arg, help='comma form, e.g. "4,3,3,1,1"')
    add_format(p)

    cm = sub.add_parser("cm", help="Calogero-Moser space")
    cm_sub = cm.add_subparsers(dest="command", required=True)

    p = cm_sub.add_parser("tangent", help="tangent-space character at a fixed point")
    p.add_argument("partition", type=_partition_arg)
    add_format(p)

    p = cm_sub.add_parser("orbit", help="orbit and stabilizer of a fixed point")
    p.add_argument("partition", type=_partition_arg)
    add_format(p)

    p = cm_sub.add_parser("exponents", help="exponent table for all partitions of n")
    p.add_argument("n", type=int)
    p.add_argument("--max-n", type=int, default=20, help="size cap (default 20)")
    add_format(p, ("text", "json", "csv"))

    p = cm_sub.add_parser("char-L", help="graded character of the staircase fiber")
    p.add_argument("m", type=int)
    p.add_argument("--max-m", type=int, default=4, help="staircase cap (default 4)")
    add_format(p)

    p = cm_sub.add_parser("fixed", help="partitions of n fixed by the full group action")
    p.add_argument("n", type=int)
    p.add_argument("--max-n", type=int, default=20, help="size cap (default 20)")
    add_format(p)

    hilb = sub.add_parser("hilb", help="Hilbert scheme of points in the plane")
    hilb_sub = hilb.add_subparsers(dest="command", required=True)

    p = hilb_sub.add_parser("orbit", help="orbit, stabilizer and boundary of a fixed point")
    p.add_argument("partition", type=_partition_arg)
    add_format(p)

    p = hilb_sub.add_parser("ideal", help="monomial ideal generators and graded dimensions")
    p.add_argument("partition", type=_partition_arg)
    add_format(p)

    p = hilb_sub.add_parser("closure", help="orbit-closure graph over all partitions of n")
    p.add_argument("n", type=int)
    p.add_argument("--space", choices=("hilbert", "calogero-moser"), default="hilbert")
    p.add_argument("--max-n", type=int, default=20, help="size cap (default 20)")
    add_format(p, ("text", "json", "dot"))

    ver = sub.add_parser("verify", help="run named invariant checks")
    ver.add_argument("checks", nargs="*", default=["all"],
                     help='check names, or "all" (default)')
    ver.add_argument("--max-n", type=int, default=20,
                     help="combinatorial size bound (default 20)")
    ver.add_argument("--max-m", type=int, default=4,
                     help="staircase bound for character identities (default 4)")
    ver.add_argument("--list", action="store_true", help="list check names and exit")
    return parser


def _laurent_json(p) -> list:
    return p.to_json()


def _cmd_part_info(args) -> int:
    lam = args.partition
    data = {
        "partition": lam.to_json(),
        "size": lam.size,
        "length": len(lam),
        "transpose": transpose(lam).to_json(),
        "is_steep": is_steep(lam),
        "is_staircase": is_staircase(lam),
        "all_hooks_odd": all_hooks_odd(lam),
        "hooks": list(hook_lengths(lam)),
        "hook_polynomial": _laurent_json(hook_polynomial(lam)),
        "n_stat": n_stat(lam),
        "dim_irrep": dim_irrep(lam),
        "diagonals": list(diagonals(lam)),
        "u_map": u_map(lam).to_json(),
        "is_borel_stable": is_borel_stable(lam),
    }
    if args.format == "json":
        print(_json_dump(data))
    else:
        _print_kv([
            ("partition", str(lam)),
            ("size", lam.size),
            ("transpose", str(transpose(lam))),
            ("steep", is_steep(lam)),
            ("staircase", is_staircase(lam)),
            ("all hooks odd", all_hooks_odd(lam)),
            ("hooks", ",".join(str(h) for h in hook_lengths(lam))),
            ("hook polynomial", hook_polynomial(lam).to_text()),
            ("n statistic", n_stat(lam)),
            ("irreducible dim", dim_irrep(lam)),
            ("diagonals", ",".join(str(d) for d in diagonals(lam))),
            ("u_map", str(u_map(lam))),
            ("Borel stable", is_borel_stable(lam)),
        ])
    return 0


def _cmd_cm_tangent(args) -> int:
    lam = args.partition
    chi = tangent_character(lam)
    if args.format == "json":
        print(_json_dump({
            "partition": lam.to_json(),
            "character": _laurent_json(chi),
            "weights_all_odd": weights_all_odd(chi),
        }))
    else:
        print(chi.to_text())
        print(f"all weights odd: {weights_all_odd(chi)}")
    return 0


def _report_lines(rep):
    lines = [
        ("space", rep.space),
        ("partition", str(rep.partition)),
        ("stabilizer", rep.stabilizer),
        ("orbit model", rep.orbit_model),
        ("closed", rep.closed),
    ]
    if rep.boundary is not None:
        lines.append(("boundary", f"{rep.boundary} (model P1)"))
    if rep.partner is not None:
        lines.append(("partner", str(rep.partner)))
    return lines


def _cmd_orbit(args, space) -> int:
    rep = cm_orbit(args.partition) if space == CALOGERO_MOSER else hilb_orbit(args.partition)
    if args.format == "json":
        print(_json_dump(rep.to_json_obj()))
    else:
        _print_kv(_report_lines(rep))
    return 0


def _cmd_cm_exponents(args) -> int:
    if args.n < 0:
        raise CapExceededError("n must be nonnegative")
    if args.n > args.max_n:
        raise CapExceededError(f"n={args.n} exceeds --max-n {args.max_n}")
    rows = [(lam, exponents(lam)) for lam in enumerate_partitions(args.n, cap=args.max_n)]
    if args.format == "json":
        print(_json_dump({
            "n": args.n,
            "rows": [
                {"partition": lam.to_json(), "exponents": list(exps)}
                for lam, exps in rows
            ],
        }))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["partition", "exponents"])
        for lam, exps in rows:
            writer.writerow([str(lam), " ".join(str(e) for e in exps)])
        print(buf.getvalue(), end="")
    else:
        width = max(len(str(lam)) for lam, _ in rows)
        for lam, exps in rows:
            print(f"{str(lam):<{width}} | {exponent_string(exps)}")
    return 0


def _cmd_cm_char_l(args) -> int:
    if args.m < 1:
        raise CapExceededError("m must be at least 1")
    if args.m > args.max_m:
        raise CapExceededError(f"m={args.m} exceeds --max-m {args.max_m}")
    chi = regular_fiber_character(args.m)
    if args.format == "json":
        print(_json_dump({
            "m": args.m,
            "character": _laurent_json(chi),
            "dimension": chi.evaluate(1),
        }))
    else:
        print(chi.to_text())
        print(f"dimension: {chi.evaluate(1)}")
    return 0


def _cmd_cm_fixed(args) -> int:
    if args.n < 0:
        raise CapExceededError("n must be nonnegative")
    fixed = sorted(sl2_fixed_set(args.n, cap=args.max_n), key=lambda p: p.parts)
    if args.format == "json":
        print(_json_dump({"n": args.n, "fixed": [lam.to_json() for lam in fixed]}))
    else:
        if fixed:
            for lam in fixed:
                print(lam)
        else:
            print("(empty)")
    return 0


def _cmd_hilb_ideal(args) -> int:
    ideal = monomial_ideal(args.partition)
    if args.format == "json":
        print(_json_dump(ideal.to_json_obj()))
    else:
        _print_kv([
            ("partition", str(ideal.shape)),
            ("generators", ", ".join(ideal.generator_strings())),
            ("graded dims", ",".join(str(d) for d in ideal.graded_dims)),
        ])
    return 0


def _cmd_hilb_closure(args) -> int:
    if args.n < 1:
        raise CapExceededError("n must be positive")
    if args.n > args.max_n:
        raise CapExceededError(f"n={args.n} exceeds --max-n {args.max_n}")
    graph = closure_graph(args.n, args.space, cap=args.max_n)
    if args.format == "json":
        print(_json_dump(graph.to_json_obj()))
    elif args.format == "dot":
        print(graph.to_dot())
    else:
        text = graph.to_text()
        print(text if text else "(no edges)")
    return 0


def _cmd_verify(args) -> int:
    if args.list:
        for name in CHECKS:
            print(name)
        return 0
    unknown = [c for c in args.checks if c != "all" and c not in CHECKS]
    if unknown:
        raise UsageError(
            f"unknown check {unknown[0]!r}; run `cmhilb verify --list` for names"
        )
    limits = Limits(max_n=args.max_n, max_m=args.max_m)
    ok = run_checks(args.checks, limits, out=print)
    return 0 if ok else 1


class UsageError(Exception):
    pass


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.group == "part":
            return _cmd_part_info(args)
        if args.group == "cm":
            if args.command == "tangent":
                return _cmd_cm_tangent(args)
            if args.command == "orbit":
                return _cmd_orbit(args, CALOGERO_MOSER)
            if args.command == "exponents":
                return _cmd_cm_exponents(args)
            if args.command == "char-L":
                return _cmd_cm_char_l(args)
            if args.command == "fixed":
                return _cmd_cm_fixed(args)
        if args.group == "hilb":
            if args.command == "orbit":
                return _cmd_orbit(args, HILBERT)
            if args.command == "ideal":
                return _cmd_hilb_ideal(args)
            if args.command == "closure":
                return _cmd_hilb_closure(args)
        if args.group == "verify":
            return _cmd_verify(args)
    except UsageError as exc:
        parser.error(str(exc))
    except CapExceededError as exc:
        parser.error(str(exc))
    except NonTriangularSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (NonPolynomialError, NotACharacterError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    raise AssertionError("unhandled command")


if __name__ == "__main__":
    sys.exit(main())
