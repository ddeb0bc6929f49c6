"""Command-line front end.

Usage:
    latpath count --model uq --l 3 --n 8
    latpath decompose --l 3 --n 6 --dims
    latpath enumerate --model wall --n 3 --m 1
    latpath verify --suite closed-form,f1 --l 3,5,7 --n-max 40
    latpath boundary --model auxiliary --l 3 --strip 2 --n-max 8

Exit status: 0 on success, 1 when a verification suite finds a mismatch,
2 on a usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import lattice as lat
from .errors import LatpathError
from .identities import CERTIFICATES
from .paths import boundary, count_paths, enumerate_paths, strip_region
from .tilting import decompose, dimension_total
from .verify import SUITES, run_suite

MODEL_CHOICES = ("unrestricted", "wall", "filter", "auxiliary", "uq")
FORMATS = ("json", "csv", "pretty")


class UsageError(Exception):
    pass


def build_model(name: str, l: int, d: int | None, ftype: int) -> lat.ModelSpec:
    if name == "unrestricted":
        return lat.unrestricted(l)
    if name == "wall":
        return lat.wall_only(0 if d is None else d, l)
    if name == "filter":
        if d is None:
            raise UsageError("--model filter needs --d")
        return lat.single_filter(d, ftype, l)
    if name == "auxiliary":
        return lat.auxiliary(l)
    return lat.uq(l)


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def _row(row) -> dict:
    return {str(x): row[x] for x in sorted(row)}


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["l", "model", "N", "M", "count"])
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def cmd_count(args) -> int:
    if args.n is None:
        args.n = args.n_max
    if args.n is None:
        raise UsageError("count needs --n")
    model = build_model(args.model, args.l, args.d, args.type)
    table = count_paths(model, args.n)
    wanted = range(args.n + 1) if args.all_levels else [args.n]
    if args.format == "csv":
        print(_csv((args.l, args.model, N, M, c) for N in wanted for M, c in sorted(table.level(N).items())))
    elif args.format == "pretty":
        for N in wanted:
            row = table.level(N)
            print(f"N={N:>3}  " + "  ".join(f"{M}:{row[M]}" for M in sorted(row)))
    elif args.all_levels:
        print(_dump({"l": args.l, "N": args.n, "levels": {str(N): _row(table.level(N)) for N in wanted}}))
    else:
        print(_dump({"l": args.l, "N": args.n, "counts": _row(table.level(args.n))}))
    return 0


def cmd_decompose(args) -> int:
    if args.n is None:
        raise UsageError("decompose needs --n")
    dec = decompose(args.n, args.l)
    if args.format == "csv":
        print(_csv((args.l, "uq", args.n, k, m) for k, m in dec.mult.items()))
        return 0
    if args.format == "pretty":
        print(" + ".join(f"{m}*T({k})" for k, m in dec.mult.items()))
        if args.dims:
            print(f"dim check: {dimension_total(dec, args.l)} = 2^{args.n} = {2 ** args.n}")
        return 0
    out: dict = {"mults": _row(dec.mult)}
    if args.dims:
        out["dim_check"] = str(dimension_total(dec, args.l))
        out["pow2"] = str(2 ** args.n)
    print(_dump(out))
    return 0


def cmd_enumerate(args) -> int:
    if args.n is None:
        raise UsageError("enumerate needs --n")
    model = build_model(args.model, args.l, args.d, args.type)
    paths = enumerate_paths(model, args.m, args.n, guard=args.seed_guard)
    paths.sort(key=lambda p: (p.positions[-1], p.word))
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["M", "N", "word", "weight"])
        w.writerows((p.positions[-1], args.n, p.word, p.weight) for p in paths)
        print(buf.getvalue().rstrip("\n"))
    elif args.format == "pretty":
        for p in paths:
            print(f"{p.word}  -> {p.positions[-1]}  weight {p.weight}")
        print(f"total weight {sum(p.weight for p in paths)}")
    else:
        print(_dump({
            "N": args.n,
            "M": args.m,
            "paths": [{"M": p.positions[-1], "word": p.word, "weight": p.weight} for p in paths],
            "total": sum(p.weight for p in paths),
        }))
    return 0


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite in (None, "all") else [s.strip() for s in args.suite.split(",") if s.strip()]
    for name in names:
        if name not in SUITES:
            raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    results = [run_suite(name, args.l_list, args.n_max, certificate=args.wz_certificate) for name in names]
    ok = all(r.passed for r in results)
    if args.format == "pretty":
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<12} checks={r.checks} failures={r.failures}")
    else:
        print(_dump({"passed": ok, "suites": [r.to_dict() for r in results]}))
    if not ok:
        ce = next(r.counterexample for r in results if not r.passed)
        head = [ce[k] for k in ("suite", "l", "M", "N") if k in ce]
        rest = [v for k, v in ce.items() if k not in ("suite", "l", "M", "N", "expected", "got")]
        fields = head + rest + [ce["expected"], ce["got"]]
        print("first counterexample: (" + ", ".join(str(v) for v in fields) + ")", file=sys.stderr)
        return 1
    return 0


def cmd_boundary(args) -> int:
    model = build_model(args.model, args.l, args.d, args.type)
    n_max = 12 if args.n_max is None else args.n_max
    region = strip_region(model, args.strip, n_max)
    pts = sorted(boundary(region), key=lambda p: (p.n, p.x))
    if args.format == "json":
        print(_dump({"l": args.l, "strip": args.strip, "n_max": n_max, "boundary": [[p.x, p.n] for p in pts]}))
    else:
        for p in pts:
            print(f"{p.x},{p.n}")
    return 0


def _l_list(text: str) -> list[int]:
    try:
        vals = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid modulus list {text!r}") from None
    if not vals:
        raise argparse.ArgumentTypeError("empty modulus list")
    return vals


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="latpath", description="Exact weighted lattice path counts.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--model", choices=MODEL_CHOICES, default="uq")
    common.add_argument("--l", type=_l_list, default=[3], dest="l_list", help="modulus (comma list for verify)")
    common.add_argument("--n", type=int)
    common.add_argument("--n-max", type=int, dest="n_max")
    common.add_argument("--d", type=int, help="filter position (filter model) or wall position (wall model)")
    common.add_argument("--type", type=int, default=1, help="filter type")
    common.add_argument("--format", choices=FORMATS, default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="weighted counts at level N")
    p.add_argument("--all-levels", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("decompose", parents=[common], help="multiplicities of T(k) in T(1)^N")
    p.add_argument("--dims", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("enumerate", parents=[common], help="list every path (small N only)")
    p.add_argument("--m", type=int, help="endpoint; omit to list all endpoints")
    p.add_argument("--seed-guard", type=int, dest="seed_guard", help="enumeration cap on N")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="run cross-validation suites")
    p.add_argument("--suite", help=f"comma list from: {', '.join(SUITES)} (default: all)")
    p.add_argument("--wz-certificate", choices=CERTIFICATES, default="printed")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("boundary", parents=[common], help="boundary points of a strip region")
    p.add_argument("--strip", type=int, default=2)
    p.set_defaults(func=cmd_boundary)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.l = args.l_list[0]
    try:
        if args.command != "verify" and len(args.l_list) != 1:
            raise UsageError("--l takes a single modulus outside verify")
        if any(l < 3 for l in args.l_list):
            raise UsageError("modulus l must be >= 3")
        for name in ("n", "n_max"):
            v = getattr(args, name)
            if v is not None and v < 0:
                raise UsageError(f"--{name.replace('_', '-')} must be non-negative")
        return args.func(args)
    except (UsageError, LatpathError) as exc:
        print(f"latpath: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
