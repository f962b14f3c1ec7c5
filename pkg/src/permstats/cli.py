"""Command-line entry point: ``permstats <subcommand>``.

Exit status: 0 on success, 1 if any check fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import codes
from .bijections import descent_class, lemma4_tau, lemma5_sort_prefix, theorem2_map
from .checks import CHECKS, run_suite
from .harness import compare_distributions, eval_tuple, resolve
from .perm import PositionSet, format_perm, parse_perm
from .table import emit_table, load_golden_fixture

ENCODERS = {"invcode": codes.invcode, "majcode": codes.majcode, "lc": codes.lc,
            "ic": codes.ic, "mc": codes.mc}
DECODERS = {"invcode": codes.invcode_inv, "majcode": codes.majcode_inv, "lc": codes.lc_inv,
            "ic": codes.ic_inv, "mc": codes.mc_inv}


class UsageError(Exception):
    pass


def _lines(stream):
    for line in stream:
        line = line.strip()
        if line and not line.startswith("#"):
            yield line


def _perm_out(p, args) -> str:
    return format_perm(p, compact=args.compact and len(p) <= 9)


def cmd_code(args, out):
    enc = ENCODERS[args.name]
    for line in _lines(args.stdin):
        print(codes.format_code(enc(parse_perm(line))), file=out)


def cmd_decode(args, out):
    dec = DECODERS[args.name]
    for line in _lines(args.stdin):
        print(_perm_out(dec(codes.parse_code(line)), args), file=out)


def cmd_stat(args, out):
    specs = [resolve(s) for s in args.specs]
    for line in _lines(args.stdin):
        print("\t".join(eval_tuple(parse_perm(line), specs)), file=out)


def cmd_map(args, out):
    if args.which in ("lemma4", "lemma5") and args.k is None:
        raise UsageError(f"map {args.which} needs --k")
    for line in _lines(args.stdin):
        p = parse_perm(line)
        if args.which == "theorem2":
            q = theorem2_map(p)
        elif args.which == "lemma4":
            q = lemma4_tau(p, args.k)
        else:
            q = lemma5_sort_prefix(p, args.k)
        print(_perm_out(q, args), file=out)


def cmd_table(args, out):
    out.write(emit_table(load_golden_fixture(args.fixture)))


def cmd_class(args, out):
    positions = PositionSet.parse(args.iligne, args.n)
    for p in descent_class(args.n, positions, strict=args.strict):
        print(_perm_out(p, args), file=out)


def cmd_compare(args, out):
    lhs = [resolve(s) for s in args.lhs.split(",")]
    rhs = [resolve(s) for s in args.rhs.split(",")]
    cmp = compare_distributions(args.n, lhs, rhs, workers=args.workers)
    print(cmp.describe(), file=out)
    return 0 if cmp.equal else 1


def cmd_check(args, out):
    if args.list:
        for c in CHECKS.values():
            n = "4" if c.default_n is None else f"1..{c.default_n}"
            print(f"{c.id:14} {n:6} {c.summary}", file=out)
        return 0
    selection = [s.strip() for s in args.only.split(",")] if args.only else None
    if selection:
        unknown = [s for s in selection if s not in CHECKS]
        if unknown:
            raise UsageError(f"unknown check(s): {', '.join(unknown)}")

    def emit(r):
        if args.json:
            print(json.dumps(r.to_record(), ensure_ascii=False), file=out, flush=True)
            return
        verdict = "PASS" if r.passed else "FAIL"
        extra = "".join(f"  {x}" for x in (r.note, r.witness) if x)
        print(f"{verdict}  {r.id:14} n={r.n_range:6} {r.elapsed_ms:9.1f} ms{extra}", file=out, flush=True)

    results = run_suite(args.max_n, selection, extended=args.extended, on_result=emit)
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="permstats", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("code", help="permutations on stdin -> code words")
    p.add_argument("name", choices=sorted(ENCODERS))
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("decode", help="code words on stdin -> permutations")
    p.add_argument("name", choices=sorted(DECODERS))
    p.add_argument("--compact", action="store_true", help="digit-string output for n <= 9")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("stat", help="evaluate statistics on permutations from stdin")
    p.add_argument("specs", nargs="+", help="e.g. iligne sort.mc el.mc")
    p.set_defaults(func=cmd_stat)

    p = sub.add_parser("map", help="apply a descent-set map to permutations from stdin")
    p.add_argument("which", choices=["theorem2", "lemma4", "lemma5"])
    p.add_argument("--k", type=int)
    p.add_argument("--compact", action="store_true")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("table", help="regenerate the S_4 table")
    p.add_argument("--fixture", help="alternative fixture file")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("class", help="list a descent class by inverse descent set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--iligne", required=True, help='e.g. "13", "1,3" or "-"')
    p.add_argument("--strict", action="store_true", help="equality instead of containment")
    p.add_argument("--compact", action="store_true")
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("compare", help="compare two statistic tuples on S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lhs", required=True, help="comma-separated statistics")
    p.add_argument("--rhs", required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("check", help="run the exhaustive verification suite")
    p.add_argument("--max-n", type=int, help="override every check's default range")
    p.add_argument("--only", help="comma-separated check ids")
    p.add_argument("--json", action="store_true", help="one JSON record per check")
    p.add_argument("--extended", action="store_true", help="push set-valued checks one size further")
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_check)
    return ap


def main(argv=None, out=None, stdin=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    args.stdin = stdin or sys.stdin
    try:
        rc = args.func(args, out)
    except (UsageError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"permstats: error: {msg}", file=sys.stderr)
        return 2
    return rc or 0


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
