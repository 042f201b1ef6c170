"""Command-line driver.

Exit status: 0 when every check passes, 1 when any check fails (the failing
record and its witness are printed), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import chains as ch
from . import injections as inj
from . import operators as op
from . import sperner as sp
from . import suites
from . import zpoly as zp
from .binomial import binomial_pascal
from .export import export_dot
from .linalg import check_modulus
from .records import check
from .report import VerificationReport, document, dumps, format_record, format_summary
from .subsets import Subset


def _emit(reports: list[VerificationReport], as_json: bool, out=None, **meta) -> int:
    out = out or sys.stdout
    if as_json:
        out.write(dumps(document(reports, **meta), indent=2) + "\n")
    else:
        for rep in reports:
            for r in rep.records:
                out.write(format_record(rep.suite, r) + "\n")
            out.write(format_summary(rep) + "\n")
    return 0 if all(rep.passed for rep in reports) else 1


def _timed_report(name: str, ranges: dict, fn) -> VerificationReport:
    rep = VerificationReport(name, ranges)
    t0 = time.perf_counter()
    rep.records.extend(fn())
    rep.wall_time = time.perf_counter() - t0
    return rep


# -- subcommands -----------------------------------------------------------------

def cmd_binomial(args) -> int:
    return _emit([suites.binomial_suite(args.n_max)], args.json)


def cmd_inject(args, parser) -> int:
    try:
        s = Subset.parse(args.n, args.set)
    except ValueError as e:
        parser.error(str(e))
    if args.rule == "prefix-swap":
        if 2 * len(s) >= s.n:
            parser.error(f"prefix swap needs |S| < n/2 (|S|={len(s)}, n={s.n})")
        t, r = inj.prefix_swap(s)
        result = {"rule": args.rule, "n": s.n, "input": str(s), "output": str(t), "r": r,
                  "contains_input": s.issubset(t)}
        text = f"{s} -> {t} r={r}"
    else:
        t = inj.gk_successor(s)
        a = inj.gk_analyze(s)
        result = {"rule": args.rule, "n": s.n, "input": str(s), "word": s.word(),
                  "output": None if t is None else str(t),
                  "pairs": list(a.pairs), "unmatched_close": list(a.unmatched_close),
                  "unmatched_open": list(a.unmatched_open)}
        text = f"{s} -> {'none' if t is None else t} word={s.word()}"
    if args.json:
        sys.stdout.write(dumps(result, indent=2) + "\n")
    else:
        sys.stdout.write(text + "\n")
    return 0


def cmd_chains_build(args) -> int:
    dec = suites.METHODS[args.method](args.n)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(export_dot(dec))
    rep = _timed_report("chains", {"n": args.n, "method": args.method}, lambda: ch.validate_scd(dec))
    if not args.json:
        for c in dec.chains:
            sys.stdout.write(str(c) + "\n")
    return _emit([rep], args.json, chains=[str(c) for c in dec.chains])


def cmd_chains_compare(args) -> int:
    def run():
        recs = []
        for name, build in suites.METHODS.items():
            for r in ch.validate_scd(build(args.n)):
                r.params["method"] = name
                recs.append(r)
        return recs + suites.compare_decompositions(args.n)
    return _emit([_timed_report("chains", {"n": args.n}, run)], args.json)


def cmd_sperner(args, parser) -> int:
    limit = sp.EXHAUSTIVE_MAX_N if args.exhaustive else 5

    def run():
        recs = []
        if args.n <= limit:
            best = sp.max_antichain_exhaustive(args.n)
            a, b = sp.count_antichains(args.n), sp.count_antichains_split(args.n)
            recs.append(check("sperner.max_antichain", best == binomial_pascal(args.n, args.n // 2), n=args.n,
                              info={"max": best}))
            recs.append(check("sperner.antichain_count", a == b, n=args.n,
                              witness={"recursion": a, "split": b}, info={"count": a}))
        if args.n >= 1:
            recs.extend(sp.verify_random(args.n, args.samples, seed=args.seed))
        return recs

    if args.n < 0 or args.n > 16:
        parser.error("sperner verify supports 0 <= n <= 16")
    if args.exhaustive and args.n > sp.EXHAUSTIVE_MAX_N:
        parser.error(f"--exhaustive supports n <= {sp.EXHAUSTIVE_MAX_N}")
    return _emit([_timed_report("sperner", {"n": args.n, "samples": args.samples}, run)], args.json)


def cmd_zpoly(args, parser) -> int:
    if args.dice is None and args.mixed is None:
        return _emit([suites.zpoly_suite(seed=args.seed)], args.json)

    def run():
        recs = []
        if args.dice is not None:
            p = zp.gambling_gf(0, args.dice, 0)
            top = max(p.coeffs) if p.coeffs else 0
            peak = [p.low + i for i, c in enumerate(p.coeffs) if c == top]
            recs.append(check("zpoly.dice", zp.is_z(p) and zp.darga(p) == 7 * args.dice, n=args.dice,
                              info={"darga": zp.darga(p), "peak": [peak[0], peak[-1]]}))
        if args.mixed is not None:
            m, n, k = args.mixed
            p = zp.gambling_gf(m, n, k)
            recs.append(check("zpoly.gambling", zp.is_z(p) and zp.darga(p) == m + 7 * n + 5 * k,
                              m=m, n=n, k=k, info={"darga": zp.darga(p), "poly": str(p) if p.high <= 40 else None}))
        return recs

    return _emit([_timed_report("zpoly", {"dice": args.dice, "mixed": args.mixed}, run)], args.json)


def _parse_field(text: str, n: int, parser) -> int | None:
    if text == "rational":
        return None
    if not text.startswith("gfp:"):
        parser.error("--field must be 'rational' or 'gfp:P'")
    try:
        p = int(text[4:])
        check_modulus(p, n)
    except ValueError as e:
        parser.error(str(e))
    return p


def cmd_operators(args, parser) -> int:
    if not 0 <= args.n <= 14:
        parser.error("operators verify supports 0 <= n <= 14")
    p = _parse_field(args.field, args.n, parser)
    n = args.n

    def run():
        recs = [op.check_eq1(n, k, p) for k in range(n + 1)]
        recs += [op.check_eq2(n, k, r, p) for k in range(1, n + 1) for r in range(1, k + 1)]
        recs += [op.check_injectivity(n, k, p) for k in range(n)]
        recs += [op.check_kernel_scalar(n, k, r, p) for k in range(n + 1) for r in range(1, k + 2)]
        return recs

    return _emit([_timed_report("operators", {"n": n, "field": args.field}, run)], args.json)


def cmd_chebyshev(args, parser) -> int:
    if args.limit < 3:
        parser.error("--limit must be at least 3")
    rep = suites.chebyshev_suite(exact_n_max=min(2000, args.limit // 2 or 1), theta_n_max=args.limit,
                                 pi_limit=args.limit, primorial_n_max=min(10_000, args.limit))
    return _emit([rep], args.json)


def cmd_all(args) -> int:
    profile = suites.PROFILES[args.profile]
    reports = []
    # stream suite by suite in line mode so progress is visible
    for name in suites.SUITES:
        rep = suites.run_profile(profile, only=(name,))[0]
        reports.append(rep)
        if not args.json:
            _emit([rep], False)
            sys.stdout.flush()
    ok = all(r.passed for r in reports)
    if args.json:
        _emit(reports, True, profile=args.profile, parameters=suites.profile_dict(profile))
    else:
        total = sum(r.summary["total"] for r in reports)
        failed = sum(r.summary["failed"] for r in reports)
        sys.stdout.write(f"# all ({args.profile}): {total - failed}/{total} passed\n")
    return 0 if ok else 1


# -- parser --------------------------------------------------------------------------

def _triple(text: str) -> tuple[int, int, int]:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected m,n,k, got {text!r}")
    if len(parts) != 3 or min(parts) < 0:
        raise argparse.ArgumentTypeError(f"expected three nonnegative integers m,n,k, got {text!r}")
    return parts


def _ground(text: str) -> int:
    n = int(text)
    if not 1 <= n <= 63:
        raise argparse.ArgumentTypeError("n must be between 1 and 63")
    return n


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document instead of lines")

    parser = argparse.ArgumentParser(prog="unimodal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("binomial", help="binomial coefficients")
    bsub = b.add_subparsers(dest="action", required=True)
    bv = bsub.add_parser("verify", parents=[common])
    bv.add_argument("--n-max", type=int, default=60)

    i = sub.add_parser("inject", parents=[common], help="apply a successor rule to one set")
    i.add_argument("--n", type=_ground, required=True)
    i.add_argument("--set", default="", help="comma separated 1-based elements, e.g. 1,2,4")
    i.add_argument("--rule", choices=("prefix-swap", "gk"), default="prefix-swap")

    c = sub.add_parser("chains", help="symmetric chain decompositions")
    csub = c.add_subparsers(dest="action", required=True)
    cb_ = csub.add_parser("build", parents=[common])
    cb_.add_argument("--n", type=_positive, required=True)
    cb_.add_argument("--method", choices=tuple(suites.METHODS), default="recursive")
    cb_.add_argument("--dot", metavar="FILE")
    cc = csub.add_parser("compare", parents=[common])
    cc.add_argument("--n", type=_positive, required=True)

    s = sub.add_parser("sperner", help="Sperner / LYM checks")
    ssub = s.add_subparsers(dest="action", required=True)
    sv = ssub.add_parser("verify", parents=[common])
    sv.add_argument("--n", type=int, required=True)
    sv.add_argument("--exhaustive", action="store_true", help="allow exhaustive enumeration at n = 6")
    sv.add_argument("--samples", type=int, default=10_000)
    sv.add_argument("--seed", type=int, default=0)

    z = sub.add_parser("zpoly", help="Z-polynomial algebra")
    zsub = z.add_subparsers(dest="action", required=True)
    zv = zsub.add_parser("verify", parents=[common])
    zv.add_argument("--dice", type=int, metavar="N")
    zv.add_argument("--mixed", type=_triple, metavar="m,n,k")
    zv.add_argument("--seed", type=int, default=0)

    o = sub.add_parser("operators", help="raising/lowering operator identities")
    osub = o.add_subparsers(dest="action", required=True)
    ov = osub.add_parser("verify", parents=[common])
    ov.add_argument("--n", type=int, required=True)
    ov.add_argument("--field", default="rational", help="rational or gfp:P (P prime, P > 2n)")

    ch_ = sub.add_parser("chebyshev", help="Chebyshev bounds")
    chsub = ch_.add_subparsers(dest="action", required=True)
    chv = chsub.add_parser("verify", parents=[common])
    chv.add_argument("--limit", type=int, default=1_000_000)

    a = sub.add_parser("all", parents=[common], help="run every suite")
    a.add_argument("--profile", choices=tuple(suites.PROFILES), default="desk")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "binomial":
        if args.n_max < 0:
            parser.error("--n-max must be nonnegative")
        return cmd_binomial(args)
    if args.command == "inject":
        return cmd_inject(args, parser)
    if args.command == "chains":
        return cmd_chains_build(args) if args.action == "build" else cmd_chains_compare(args)
    if args.command == "sperner":
        return cmd_sperner(args, parser)
    if args.command == "zpoly":
        return cmd_zpoly(args, parser)
    if args.command == "operators":
        return cmd_operators(args, parser)
    if args.command == "chebyshev":
        return cmd_chebyshev(args, parser)
    return cmd_all(args)


if __name__ == "__main__":
    sys.exit(main())
