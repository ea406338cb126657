"""Command-line front end.

Exit codes: 0 success, 1 a ``check`` found a counterexample, 2 bad input,
3 a concrete label was demanded (``--concrete``) for rank above 2.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks, tables
from .charring import demazure_character, dimension
from .modweights import modular_profile
from .rootsys import ConfigurationError, RootDomainError, parse_type
from .supports import Variety, classify, g_saturate
from .weyl import parse_word, reduced_word

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED_RANK = 3


class UsageError(Exception):
    pass


def _int_list(text: str, field: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(" ", "").split(",") if t != "")
    except ValueError:
        raise UsageError(f"--{field}: cannot parse {text!r} as comma-separated integers") from None


def _query(args):
    try:
        rs = parse_type(args.type)
    except ConfigurationError as exc:
        raise UsageError(f"--type: {exc}") from None
    try:
        w = parse_word(args.w, rs.rank)
    except ValueError as exc:
        raise UsageError(f"--w: {exc}") from None
    lam = _int_list(args.lam, "lambda")
    if len(lam) != rs.rank:
        raise UsageError(f"--lambda: expected {rs.rank} entries, got {len(lam)}")
    if any(c < 0 for c in lam):
        raise UsageError(f"--lambda: {lam} is not dominant")
    return rs, w, lam


def cmd_support(args) -> int:
    rs, w, lam = _query(args)
    if args.p is None:
        raise UsageError("--p is required")
    try:
        result = classify(rs, w, lam, args.p)
        profile = modular_profile(rs, lam, args.p)
    except RootDomainError as exc:
        raise UsageError(str(exc)) from None
    concrete = isinstance(result.variety, Variety)
    if args.concrete and not concrete:
        print(f"no concrete classification for {rs.name}; symbolic: {result.variety}", file=sys.stderr)
        return EXIT_UNSUPPORTED_RANK
    try:
        saturation = str(g_saturate(result.variety))
    except TypeError:
        saturation = None
    out = {
        "type": rs.name,
        "p": args.p,
        "w": reduced_word(w),
        "lambda": list(lam),
        "variety": str(result.variety),
        "concrete": concrete,
        "saturation": saturation,
        "branch": result.branch,
        "profile": profile.to_json_obj(),
    }
    if args.json:
        print(json.dumps(out))
        return EXIT_OK
    print(f"variety:    {out['variety']}")
    print(f"saturation: {out['saturation']}")
    print(f"branch:     {out['branch']}")
    prof = out["profile"]
    print(f"profile:    Phi_lam,p={prof['phi_lambda_p']} regular={prof['regular']} "
          f"J_lam={prof['j_lambda']} conjugation={prof['conjugation']}")
    return EXIT_OK


def cmd_table(args) -> int:
    if args.name not in tables.TABLES:
        raise UsageError(f"unknown table {args.name!r}; choose from {sorted(tables.TABLES)}")
    p = 2 if args.name == "a2p2" else args.p
    if p is None:
        raise UsageError("--p is required for this table")
    rows = tables.build_table(args.name, p)
    sys.stdout.write(tables.render_json(rows) if args.json else tables.render_text(args.name, rows))
    return EXIT_OK


def cmd_check(args) -> int:
    primes = _int_list(args.primes, "primes")
    if args.name == "saturation":
        rank = parse_type(args.type).rank if args.type else 2
        report = checks.check_saturation(args.lmax, primes, rank=rank, order=args.order)
    elif args.name in ("parabolic", "lemma531"):
        report = checks.check_parabolic_bounds(parse_type(args.type or "A3").rank)
    elif args.name == "dimension":
        report = checks.check_dimension(args.lmax)
    elif args.name == "words":
        report = checks.check_words(args.lmax, parse_type(args.type or "A2").rank)
    else:
        raise UsageError(f"unknown check {args.name!r}")
    print(report.summary())
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_character(args) -> int:
    rs, w, lam = _query(args)
    ch = demazure_character(rs, w, lam)
    if args.json:
        print(json.dumps({"character": ch.to_json_obj(), "dimension": dimension(ch)}))
        return EXIT_OK
    print(f"dimension: {dimension(ch)}")
    for mu, m in ch.items():
        print(f"  {mu}  {m}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="demazure-support",
        description="Demazure characters and B_1-support varieties of Demazure modules.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def query_args(sp, with_p=True):
        sp.add_argument("--type", default="A2", help="root system, e.g. A1, A2, A3")
        if with_p:
            sp.add_argument("--p", type=int, help="prime characteristic")
        sp.add_argument("--w", default="e", help='Weyl word such as "1 2 1", or e / w0')
        sp.add_argument("--lambda", dest="lam", required=True, help="dominant weight, e.g. 2,0")
        sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("support", help="classify the support variety of H^0(w, lambda)")
    query_args(sp)
    sp.add_argument("--concrete", action="store_true", help="fail with exit 3 unless a concrete label exists")
    sp.set_defaults(func=cmd_support)

    sp = sub.add_parser("table", help="print one of the support tables")
    sp.add_argument("name", help="steinberg | a1 | a2 | a2p2")
    sp.add_argument("--p", type=int)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("check", help="run an exhaustive property sweep")
    sp.add_argument("name", choices=["saturation", "parabolic", "lemma531", "dimension", "words"])
    sp.add_argument("--lmax", type=int, default=8)
    sp.add_argument("--primes", default="2,3,5,7")
    sp.add_argument("--type", default=None)
    sp.add_argument("--order", choices=["bruhat", "left-weak"], default="bruhat")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("character", help="Demazure character of H^0(w, lambda)")
    query_args(sp, with_p=False)
    sp.set_defaults(func=cmd_character)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ConfigurationError, RootDomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
