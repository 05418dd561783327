"""Command-line front end: evaluate, multiply symbolically, sweep-verify.

Index arguments use comma-separated positive integers ("2,3"); the empty
index is the literal "-".  Verify commands run over an inclusive prime
range "a..b" (default 5..199) and can write machine-readable JSON or CSV
reports.  Exit status: 0 all primes pass (skips allowed), 1 any failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from .identities import shuffle_correction
from .evaluate import eval_fmp, eval_fmp_triple, eval_zeta, eval_zeta_variant
from .modular import is_prime
from .sweep import CHECKS, SweepInterrupted, SweepReport, run_sweep
from .words import Index, shuffle, stuffle


def _index(text: str) -> Index:
    try:
        return Index.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _prime(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not is_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not a prime in the supported range")
    return p


def _prime_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected a range like 5..199, got {text!r}")
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a range like 5..199, got {text!r}") from None
    if a < 2 or b < a:
        raise argparse.ArgumentTypeError(f"invalid prime range {text!r}")
    return a, b


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fmpl", description=__doc__)
    top = parser.add_subparsers(dest="command", required=True)

    ev = top.add_parser("eval", help="evaluate a sum family at one prime")
    ev_kinds = ev.add_subparsers(dest="kind", required=True)
    for kind in ("fmp", "zeta", "zeta-variant", "fmp3"):
        sub = ev_kinds.add_parser(kind)
        sub.add_argument("-p", type=_prime, required=True, help="prime modulus")
        if kind == "fmp3":
            sub.add_argument("-L", type=_index, required=True, help="first block index")
            sub.add_argument("-M", type=_index, required=True, help="second block index")
            sub.add_argument("-N", type=_index, required=True, help="third block index")
        else:
            sub.add_argument("-k", type=_index, required=True, help="index, e.g. 2,3 or -")
        if kind == "zeta-variant":
            sub.add_argument("-i", type=_positive, required=True, help="band selector")
        if kind in ("fmp", "fmp3"):
            sub.add_argument("--at", type=int, default=None, help="evaluate the polynomial at T = AT")

    pr = top.add_parser("product", help="symbolic products of two indices")
    pr_kinds = pr.add_subparsers(dest="kind", required=True)
    for kind in ("shuffle", "stuffle", "correction"):
        sub = pr_kinds.add_parser(kind)
        sub.add_argument("-l", type=_index, required=True, help="left index")
        sub.add_argument("-r", type=_index, required=True, help="right index")

    vf = top.add_parser("verify", help="sweep a check over a prime range")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--primes", type=_prime_range, default=(5, 199), help="inclusive range a..b (default 5..199)")
    common.add_argument("--out", default=None, help="write a machine-readable report to this path")
    common.add_argument("--format", choices=("json", "csv"), default="json", help="report format")
    common.add_argument("--jobs", type=_positive, default=None, help="worker count (default: FMP_JOBS or all cores)")
    vf_kinds = vf.add_subparsers(dest="check", required=True)
    check_flags = {
        "eq7": [("-L", _index), ("-M", _index), ("-N", _index)],
        "main": [("-l", _index), ("-r", _index)],
        "prop24": [("-i", _positive), ("-k", _index)],
        "stuffle": [("-l", _index), ("-r", _index)],
        "pfd": [("--alpha", _positive), ("--beta", _positive)],
        "bijection": [("-r", _positive)],
        "reversal": [("-k", _index)],
        "li-at-1": [("-k", _index)],
    }
    for check, flags in check_flags.items():
        sub = vf_kinds.add_parser(check, parents=[common])
        for flag, typ in flags:
            sub.add_argument(flag, type=typ, required=True)
    return parser


def _resolve_jobs(args: argparse.Namespace) -> int:
    if args.jobs is not None:
        return args.jobs
    env = os.environ.get("FMP_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            print(f"fmpl: ignoring malformed FMP_JOBS={env!r}", file=sys.stderr)
    return os.cpu_count() or 1


def _verify_params(args: argparse.Namespace) -> dict:
    check = args.check
    if check == "eq7":
        if not args.L or not args.M:
            raise ValueError("eq7 requires nonempty -L and -M")
        return {"L": args.L, "M": args.M, "N": args.N}
    if check in ("main", "stuffle"):
        return {"l": args.l, "r": args.r}
    if check == "prop24":
        if not 1 <= args.i <= args.k.depth:
            raise ValueError(f"-i {args.i} outside [1, dep(k)={args.k.depth}]")
        return {"i": args.i, "k": args.k}
    if check == "pfd":
        return {"alpha": args.alpha, "beta": args.beta}
    if check == "bijection":
        from .surjections import MAX_R

        if args.r > MAX_R:
            raise ValueError(f"-r {args.r} exceeds the supported maximum {MAX_R}")
        return {"r": args.r}
    if check in ("reversal", "li-at-1"):
        if not args.k:
            raise ValueError(f"{check} requires a nonempty -k")
        return {"k": args.k}
    raise ValueError(f"unknown check {check!r}")


def _write_report(report: SweepReport, path: Optional[str], fmt: str) -> None:
    if path is None:
        return
    text = report.to_json() if fmt == "json" else report.to_csv()
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _print_report(report: SweepReport) -> None:
    for res in report.results:
        if res.status == "pass" and res.detail:
            print(f"p={res.p}: pass {res.detail}")
        elif res.status != "pass":
            print(f"p={res.p}: {res.status} {res.detail or ''}".rstrip(), file=sys.stderr)
    s = report.summary
    params = " ".join(f"{k}={v}" for k, v in report.params.items())
    print(
        f"check={report.check} {params} primes={report.prime_from}..{report.prime_to}: "
        f"pass={s['pass']} fail={s['fail']} skip={s['skip']} ({report.duration_ms} ms)"
    )


def _cmd_eval(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    try:
        if args.kind == "fmp":
            value = eval_fmp(args.k, args.p)
        elif args.kind == "fmp3":
            value = eval_fmp_triple(args.L, args.M, args.N, args.p)
        elif args.kind == "zeta":
            print(eval_zeta(args.k, args.p))
            return 0
        else:
            print(eval_zeta_variant(args.i, args.k, args.p))
            return 0
    except ValueError as exc:
        parser.error(str(exc))
    if args.at is not None:
        print(value.evaluate(args.at))
    else:
        print(value)
    return 0


def _cmd_product(args: argparse.Namespace) -> int:
    if args.kind == "shuffle":
        print(shuffle(args.l, args.r))
    elif args.kind == "stuffle":
        print(stuffle(args.l, args.r))
    else:
        expr = shuffle_correction(args.l, args.r)
        impure = expr.impure_terms()
        print(f"pure: {expr.pure_part()}")
        print(f"impure: {' + '.join(str(t) for t in impure) if impure else '0'}")
    return 0


def _cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    try:
        params = _verify_params(args)
    except ValueError as exc:
        parser.error(str(exc))
    lo, hi = args.primes
    jobs = _resolve_jobs(args)
    try:
        report = run_sweep(args.check, params, lo, hi, jobs=jobs)
    except SweepInterrupted as exc:
        print("fmpl: interrupted, writing partial report", file=sys.stderr)
        _write_report(exc.report, args.out, args.format)
        _print_report(exc.report)
        return 130
    _write_report(report, args.out, args.format)
    _print_report(report)
    return report.exit_code


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "eval":
        return _cmd_eval(args, parser)
    if args.command == "product":
        return _cmd_product(args)
    return _cmd_verify(args, parser)


if __name__ == "__main__":
    sys.exit(main())
