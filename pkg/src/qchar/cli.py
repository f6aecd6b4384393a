"""Command line interface.

Subcommands:
  chi     the character polynomial of c_{2m+1} for q(N)
  series  all characters up to a maximal m from one series expansion
  eval    exact rational value of a character at a given lambda point
  hc      the same character recomputed by the brute-force rewriter
  verify  named suites of exact identity checks

Exit codes: 0 success, 1 verification or mathematical failure, 2 usage
error. Data goes to stdout; diagnostics (cache hits, timings) to stderr,
so identical invocations produce byte-identical stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .characters import (
    ChiResult,
    SingularPointError,
    chi_closed_numeric,
    chi_cn_recurrence,
    chi_polynomial,
    chi_series,
)
from .errors import VerificationError
from .pbw import hc_of_cn
from .poly import MultiPoly
from .suites import SUITE_NAMES, run_suite

_HC_GUARD_N = 2
_HC_GUARD_RANK = 5


def _poly_json(poly: MultiPoly) -> list[dict]:
    return [{"exps": list(e), "coeff": str(c)} for e, c in poly.sorted_terms()]


def _poly_from_json(coeffs: list[dict], nvars: int) -> MultiPoly:
    return MultiPoly({tuple(d["exps"]): Fraction(d["coeff"]) for d in coeffs}, nvars)


def _chi_json(res: ChiResult) -> dict:
    return {"N": res.N, "m": res.m, "engine": res.engine, "coeffs": _poly_json(res.poly)}


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


def _note(text: str) -> None:
    sys.stderr.write(text + "\n")


def _parse_lambda(raw: str, parser: argparse.ArgumentParser) -> list[Fraction]:
    try:
        vals = [Fraction(tok.strip()) for tok in raw.split(",") if tok.strip() != ""]
    except (ValueError, ZeroDivisionError):
        parser.error(f"malformed lambda list: {raw!r} (expected e.g. '3,1' or '1/2,-2')")
    if not vals:
        parser.error("lambda list is empty")
    return vals


def _cache_dir(args, parser: argparse.ArgumentParser) -> Path | None:
    if args.cache is None:
        return None
    if args.cache != "":
        return Path(args.cache)
    env = os.environ.get("QCHAR_CACHE_DIR", "")
    if not env:
        parser.error("--cache given without a directory and QCHAR_CACHE_DIR is not set")
    return Path(env)


def cmd_chi(args, parser) -> int:
    cache = _cache_dir(args, parser)
    res: ChiResult | None = None
    path = None
    if cache is not None and args.engine is None:
        path = cache / f"chi_N{args.N}_m{args.m}.json"
        if path.exists():
            payload = json.loads(path.read_text())
            res = ChiResult(payload["N"], payload["m"],
                            _poly_from_json(payload["coeffs"], payload["N"]),
                            payload["engine"])
            _note(f"cache hit: {path}")
    if res is None:
        if args.engine == "recurrence":
            res = chi_cn_recurrence(args.m, args.N)
        elif args.engine == "series":
            res = chi_series(args.m, args.N)[args.m]
        else:
            res = chi_polynomial(args.m, args.N)
        if path is not None:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(json.dumps(_chi_json(res), indent=2) + "\n")
    if args.format == "json":
        _emit(json.dumps(_chi_json(res), indent=2))
    else:
        _emit(res.poly.render())
    return 0


def cmd_series(args, parser) -> int:
    results = chi_series(args.max_m, args.N)
    if args.format == "json":
        _emit(json.dumps([_chi_json(r) for r in results], indent=2))
    else:
        for r in results:
            _emit(r.poly.render())
    return 0


def cmd_eval(args, parser) -> int:
    vals = _parse_lambda(args.lam, parser)
    N = len(vals)
    if args.engine == "closed":
        value = chi_closed_numeric(args.m, vals)
        engine = "closed_numeric"
    else:
        value = chi_polynomial(args.m, N).poly.eval(vals)
        engine = "poly"
    if args.format == "json":
        _emit(json.dumps({"N": N, "m": args.m, "engine": engine,
                          "lambda": [str(v) for v in vals],
                          "value": str(value)}, indent=2))
    else:
        _emit(str(value))
    return 0


def cmd_hc(args, parser) -> int:
    if args.n < 1:
        parser.error("n must be an odd positive integer")
    if args.n % 2 == 0:
        parser.error(f"n must be odd (c_{args.n} vanishes identically)")
    if not args.force and (args.N > _HC_GUARD_N or args.n > _HC_GUARD_RANK):
        parser.error(
            f"rewriting c_{args.n} for q({args.N}) exceeds the default budget "
            f"(N <= {_HC_GUARD_N}, n <= {_HC_GUARD_RANK}); pass --force to try anyway")
    poly = hc_of_cn(args.n, args.N)
    if args.format == "json":
        payload = {"N": args.N, "m": (args.n - 1) // 2, "engine": "pbw",
                   "coeffs": _poly_json(poly)}
        _emit(json.dumps(payload, indent=2))
    else:
        _emit(poly.render())
    return 0


def cmd_verify(args, parser) -> int:
    if args.jobs < 1:
        parser.error("--jobs must be >= 1")
    report = run_suite(args.suite, N=args.N, max_m=args.max_m,
                       max_n=args.max_n, long=args.long, jobs=args.jobs)
    _emit(report.render())
    _note(f"elapsed: {report.elapsed:.2f}s")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qchar",
        description="Exact central characters of the strange Lie superalgebra q(N).")
    sub = parser.add_subparsers(dest="command", required=True)

    p_chi = sub.add_parser("chi", help="character polynomial of c_{2m+1}")
    p_chi.add_argument("--N", type=int, required=True, help="rank of q(N)")
    p_chi.add_argument("--m", type=int, required=True, help="index: the element is c_{2m+1}")
    p_chi.add_argument("--engine", choices=["recurrence", "series"],
                       help="use a single engine instead of the cross-checked default")
    p_chi.add_argument("--format", choices=["text", "json"], default="text")
    p_chi.add_argument("--cache", nargs="?", const="", metavar="DIR",
                       help="cache results as JSON files; directory defaults to $QCHAR_CACHE_DIR")
    p_chi.set_defaults(handler=cmd_chi)

    p_series = sub.add_parser("series", help="characters of c_1, c_3, ... from one expansion")
    p_series.add_argument("--N", type=int, required=True)
    p_series.add_argument("--max-m", type=int, default=3, dest="max_m")
    p_series.add_argument("--format", choices=["text", "json"], default="text")
    p_series.set_defaults(handler=cmd_series)

    p_eval = sub.add_parser("eval", help="evaluate a character at a rational point")
    p_eval.add_argument("--lambda", dest="lam", required=True, metavar="L1,L2,...",
                        help="comma-separated rational values; length fixes N")
    p_eval.add_argument("--m", type=int, required=True)
    p_eval.add_argument("--engine", choices=["poly", "closed"], default="poly")
    p_eval.add_argument("--format", choices=["text", "json"], default="text")
    p_eval.set_defaults(handler=cmd_eval)

    p_hc = sub.add_parser("hc", help="recompute a character with the brute-force rewriter")
    p_hc.add_argument("--N", type=int, required=True)
    p_hc.add_argument("--n", type=int, required=True, help="odd word length of c_n")
    p_hc.add_argument("--force", action="store_true",
                      help="ignore the default size guard")
    p_hc.add_argument("--format", choices=["text", "json"], default="text")
    p_hc.set_defaults(handler=cmd_hc)

    p_verify = sub.add_parser("verify", help="run a named suite of exact checks")
    p_verify.add_argument("--suite", choices=list(SUITE_NAMES), required=True)
    p_verify.add_argument("--N", type=int, default=None, help="cap the rank")
    p_verify.add_argument("--max-m", type=int, default=None, dest="max_m")
    p_verify.add_argument("--max-n", type=int, default=None, dest="max_n")
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--long", action="store_true",
                          help="include the slow gated cases")
    p_verify.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, parser)
    except SingularPointError as e:
        _note(f"error: {e}")
        return 1
    except VerificationError as e:
        _note(f"verification failure: {e}")
        return 1
    except ValueError as e:
        _note(f"error: {e}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
