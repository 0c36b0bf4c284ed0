"""Command-line front end.

Subcommands: stieltjes, zeta, hurwitz, lerch, lambda, table, verify,
bernoulli.  Global flags: --digits (10..200, default 30), --max-terms,
--format {text|json|csv}.  Exit codes: 0 ok, 1 verification failure,
2 usage error, 3 numeric non-convergence.

Payload output is deterministic; wall-clock timing goes to a separate
metadata header (text) or meta object (json).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

import mpmath

from .precision import DomainError, NonConvergedError, parse_rational
from . import harness, likeiper, stieltjes, zeta
from .hasse import set_term_budget

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_NON_CONVERGED = 3

DIGITS_MIN, DIGITS_MAX = 10, 200


class UsageError(Exception):
    pass


def _check_config(args):
    if not (DIGITS_MIN <= args.digits <= DIGITS_MAX):
        raise UsageError(f"--digits must be in [{DIGITS_MIN}, {DIGITS_MAX}]")
    if getattr(args, "max_terms", 20000) < 100:
        raise UsageError("--max-terms must be >= 100")


def _num(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse number {text!r}: {exc}")


def _nstr(value, digits: int) -> str:
    return mpmath.nstr(value, digits, strip_zeros=False)


def _emit_value(args, payload: dict, seconds: float):
    fmt = args.format
    if fmt == "json":
        print(json.dumps({"meta": {"seconds": round(seconds, 3)},
                          "result": payload}, indent=2))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(list(payload.keys()))
        writer.writerow([payload[k] for k in payload])
        sys.stdout.write(buf.getvalue())
    else:
        print(f"# seconds: {seconds:.3f}")
        for k, v in payload.items():
            print(f"{k}: {v}")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_stieltjes(args) -> int:
    p = args.p
    u = _num(args.u)
    if p < 0 or u <= 0:
        raise UsageError("need p >= 0 and u > 0")
    t0 = time.time()
    if args.method == "hasse":
        val = stieltjes.stieltjes_hasse(p, u, args.digits)
    elif args.method == "em":
        val = stieltjes.stieltjes_em(p, u, args.digits)
    else:
        raise UsageError(f"unknown method {args.method!r}")
    payload = {
        "p": p, "u": str(u), "method": val.method, "digits": args.digits,
        "value": _nstr(val.value.value, args.digits),
    }
    _emit_value(args, payload, time.time() - t0)
    return EXIT_OK


def _cmd_zeta(args) -> int:
    s = _num(args.s)
    t0 = time.time()
    if args.deriv == 0:
        v = zeta.riemann_zeta(s, args.digits).value
    else:
        v = zeta.riemann_zeta_deriv(args.deriv, s, args.digits).value
    payload = {"s": str(s), "deriv": args.deriv, "digits": args.digits,
               "value": _nstr(v, args.digits)}
    _emit_value(args, payload, time.time() - t0)
    return EXIT_OK


def _cmd_hurwitz(args) -> int:
    s = _num(args.s)
    u = _num(args.u)
    t0 = time.time()
    v = zeta.hurwitz_zeta(s, u, args.digits).value
    payload = {"s": str(s), "u": str(u), "digits": args.digits,
               "value": _nstr(v, args.digits)}
    _emit_value(args, payload, time.time() - t0)
    return EXIT_OK


def _cmd_lerch(args) -> int:
    x, s, y = _num(args.x), _num(args.s), _num(args.y)
    t0 = time.time()
    v = zeta.lerch_phi(x, s, y, args.digits).value
    payload = {"x": str(x), "s": str(s), "y": str(y), "digits": args.digits,
               "value": _nstr(v, args.digits)}
    _emit_value(args, payload, time.time() - t0)
    return EXIT_OK


def _cmd_lambda(args) -> int:
    n = args.n
    digits = max(args.digits, likeiper.MIN_DIGITS_DEEP) if n > 15 else args.digits
    t0 = time.time()
    v = likeiper.lambda_val(n, digits)
    payload = {"n": n, "digits": digits, "value": _nstr(v.value, digits)}
    _emit_value(args, payload, time.time() - t0)
    return EXIT_OK


def _cmd_bernoulli(args) -> int:
    t0 = time.time()
    if args.u is not None:
        u = _num(args.u)
        v = zeta.bernoulli_poly_hasse(args.N, u)
        payload = {"N": args.N, "u": str(u), "value": str(v)}
    else:
        from .precision import bernoulli_numbers

        B = bernoulli_numbers(args.N)
        payload = {"N": args.N, "values": " ".join(str(b) for b in B)}
    _emit_value(args, payload, time.time() - t0)
    return EXIT_OK


_TABLE_KINDS = ("stieltjes", "lambda", "sigma", "eta")


def _cmd_table(args) -> int:
    kind = args.kind
    N = args.N
    if kind not in _TABLE_KINDS:
        raise UsageError(f"table kind must be one of {_TABLE_KINDS}")
    digits = args.digits
    t0 = time.time()
    if kind == "stieltjes":
        vals = stieltjes.stieltjes_all_hasse(N, 1, digits)
        rows = [(p, _nstr(v.value, digits)) for p, v in enumerate(vals)]
        index_name = "p"
    else:
        if N > likeiper.MAX_DEPTH:
            raise UsageError(f"depth capped at {likeiper.MAX_DEPTH}")
        digits = max(digits, likeiper.MIN_DIGITS_DEEP) if N > 15 else digits
        if kind == "lambda":
            vals = likeiper.lambda_list(N, digits)
            rows = [(n + 1, _nstr(v.value, digits)) for n, v in enumerate(vals)]
        elif kind == "sigma":
            vals = likeiper.sigma_coeffs(N, digits)
            rows = [(n + 1, _nstr(v.value, digits)) for n, v in enumerate(vals)]
        else:
            vals = likeiper.eta_coeffs(N, digits)
            rows = [(n, _nstr(v.value, digits)) for n, v in enumerate(vals)]
        index_name = "n"
    seconds = time.time() - t0
    if args.format == "json":
        print(json.dumps({"meta": {"seconds": round(seconds, 3)},
                          "kind": kind, "digits": digits,
                          "rows": [{index_name: i, "value": v} for i, v in rows]},
                         indent=2))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow([index_name, kind])
        for i, v in rows:
            w.writerow([i, v])
        sys.stdout.write(buf.getvalue())
    else:
        print(f"# {kind} table, digits={digits}, seconds={seconds:.3f}")
        for i, v in rows:
            print(f"{i:4d}  {v}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    known = set(harness.registry_ids())
    if not args.all:
        if not args.ids:
            raise UsageError("verify needs --all or at least one identity id")
        unknown = [i for i in args.ids if i not in known]
        if unknown:
            raise UsageError(f"unknown identity ids: {', '.join(unknown)}")
    t0 = time.time()
    if args.all:
        report = harness.run_all(args.digits, args.filter)
    else:
        rows = [harness.run_identity(i, args.digits) for i in args.ids]
        report = harness.Report(args.digits, rows, time.time() - t0)
    if args.format == "json":
        print(report.to_json())
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["id", "verdict", "residual_log10", "slack", "description", "detail"])
        for r in report.rows:
            w.writerow([r.id, r.verdict,
                        "" if r.residual_log10 is None else f"{r.residual_log10:.1f}",
                        r.slack, r.description, r.detail])
        sys.stdout.write(buf.getvalue())
    else:
        print(report.to_text())
    return EXIT_OK if report.all_passed() else EXIT_VERIFY_FAIL


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    # global flags accepted both before and after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--digits", type=int, default=argparse.SUPPRESS,
                        help="decimal digits of working precision (10..200)")
    common.add_argument("--max-terms", type=int, default=argparse.SUPPRESS,
                        dest="max_terms",
                        help="series term budget before reporting non-convergence")
    common.add_argument("--format", choices=("text", "json", "csv"),
                        default=argparse.SUPPRESS)

    ap = argparse.ArgumentParser(
        prog="zetakit",
        parents=[common],
        description="High-precision Stieltjes constants, Hurwitz/Lerch zeta "
                    "values, Li/Keiper sequences, and an identity verifier.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stieltjes", parents=[common],
                       help="generalized Stieltjes constant gamma_p(u)")
    p.add_argument("p", type=int)
    p.add_argument("u", type=str)
    p.add_argument("--method", choices=("hasse", "em"), default="hasse")
    p.set_defaults(fn=_cmd_stieltjes)

    p = sub.add_parser("zeta", parents=[common],
                       help="Riemann zeta and derivatives at real s != 1")
    p.add_argument("s", type=str)
    p.add_argument("--deriv", type=int, default=0)
    p.set_defaults(fn=_cmd_zeta)

    p = sub.add_parser("hurwitz", parents=[common], help="Hurwitz zeta(s, u)")
    p.add_argument("s", type=str)
    p.add_argument("u", type=str)
    p.set_defaults(fn=_cmd_hurwitz)

    p = sub.add_parser("lerch", parents=[common], help="Hurwitz-Lerch Phi(x, s, y)")
    p.add_argument("x", type=str)
    p.add_argument("s", type=str)
    p.add_argument("y", type=str)
    p.set_defaults(fn=_cmd_lerch)

    p = sub.add_parser("lambda", parents=[common], help="Li/Keiper lambda_n")
    p.add_argument("n", type=int)
    p.set_defaults(fn=_cmd_lambda)

    p = sub.add_parser("table", parents=[common],
                       help="tables of stieltjes/lambda/sigma/eta")
    p.add_argument("kind", type=str)
    p.add_argument("N", type=int)
    p.set_defaults(fn=_cmd_table)

    p = sub.add_parser("verify", parents=[common], help="run the identity catalogue")
    p.add_argument("ids", nargs="*", help="identity ids (or use --all)")
    p.add_argument("--all", action="store_true")
    p.add_argument("--filter", type=str, default=None,
                   help="glob pattern applied with --all")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("bernoulli", parents=[common],
                       help="Bernoulli numbers B_0..B_N or B_N(u)")
    p.add_argument("N", type=int)
    p.add_argument("--u", type=str, default=None)
    p.set_defaults(fn=_cmd_bernoulli)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    # global flags use SUPPRESS defaults so they can sit on either side of
    # the subcommand; fill the gaps here
    for name, default in (("digits", 30), ("max_terms", 20000), ("format", "text")):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        _check_config(args)
        set_term_budget(args.max_terms)
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NonConvergedError as exc:
        print(f"non-convergence: {exc}", file=sys.stderr)
        return EXIT_NON_CONVERGED


if __name__ == "__main__":
    sys.exit(main())
