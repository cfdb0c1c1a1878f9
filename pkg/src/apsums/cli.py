"""Command-line entry point: ``apsums <subcommand> [options]``.

Subcommands: bernoulli, euler, powersum, lemma-check, certify, solve.
``--json`` switches any subcommand to a single JSON document on stdout.
Parameter errors exit with status 2; mathematical verdicts always exit 0.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .classical import bernoulli_poly, euler_poly
from .errors import ApsumsError, ParameterError
from .poly import poly_eval
from .power_sums import (
    PowerSumFamily,
    ProgressionParams,
    family_poly,
    oracle_value,
    parity_branch,
)
from .reduction import PowerRHS, QuadraticRHS, certify
from .roots import check_lemma3, check_lemma4, check_lemma5_rational, check_lemma6
from .search import SearchBox, solve_power_rhs, solve_quadratic_rhs


def rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def rational_list(text: str) -> list[Fraction]:
    return [rational(t) for t in text.split(",") if t.strip()]


def exponent(text: str):
    if text.strip().lower() == "unknown":
        return None
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"exponent must be an integer or 'unknown': {text!r}")


def _power_triple(text: str):
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected c,d,l")
    return rational(parts[0]), rational(parts[1]), exponent(parts[2])


def _quad_triple(text: str):
    parts = rational_list(text)
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected A,B,C")
    return tuple(parts)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="cap on scan workers")

    parser = argparse.ArgumentParser(prog="apsums", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="emit JSON")
    parser.add_argument("--threads", type=int, default=1, help="cap on scan workers")
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("bernoulli", "euler"):
        p = sub.add_parser(name, parents=[common], help=f"print the {name} polynomial of index k")
        p.add_argument("--k", type=int, required=True)

    def progression(p):
        p.add_argument("--a", type=int, required=True)
        p.add_argument("--b", type=int, required=True)
        p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("powersum", parents=[common], help="print a power-sum polynomial")
    p.add_argument("--family", type=PowerSumFamily.parse, required=True, help="S, T+ or T-")
    progression(p)
    p.add_argument("--eval", type=int, dest="eval_at", metavar="N")

    p = sub.add_parser("lemma-check", parents=[common], help="sweep a root-structure lemma")
    p.add_argument("--lemma", type=int, choices=(3, 4, 5, 6), required=True)
    p.add_argument("--kmax", type=int, default=20)
    p.add_argument("--k", type=int)
    p.add_argument("--shifts", type=rational_list)

    p = sub.add_parser("certify", parents=[common], help="build a finiteness certificate")
    p.add_argument("--theorem", type=int, choices=range(1, 7), required=True)
    progression(p)
    p.add_argument("--A", type=rational)
    p.add_argument("--B", type=rational, default=Fraction(0))
    p.add_argument("--C", type=rational, default=Fraction(0))
    p.add_argument("--c", type=rational)
    p.add_argument("--d", type=rational, default=Fraction(0))
    p.add_argument("--l", type=exponent, default=None, dest="ell", metavar="L|unknown")

    p = sub.add_parser("solve", parents=[common], help="enumerate integer solutions in a box")
    p.add_argument("--family", type=PowerSumFamily.parse, required=True, help="S, T+ or T-")
    progression(p)
    rhs = p.add_mutually_exclusive_group(required=True)
    rhs.add_argument("--rhs-quad", type=_quad_triple, metavar="A,B,C")
    rhs.add_argument("--rhs-power", type=_power_triple, metavar="c,d,l|unknown")
    p.add_argument("--xmin", type=int, required=True)
    p.add_argument("--xmax", type=int, required=True)
    p.add_argument("--ellmax", type=int, default=10)
    p.add_argument("--allow-small-y", action="store_true", help="keep solutions with |y| <= 1")
    p.add_argument("--require-large-y", action="store_true", help="drop solutions with |y| <= 1")
    return parser


def _cmd_classical(args):
    poly = bernoulli_poly(args.k) if args.command == "bernoulli" else euler_poly(args.k)
    return {"k": args.k, "poly": poly.to_text()}, poly.to_text()


def _cmd_powersum(args):
    params = ProgressionParams(args.a, args.b, args.k)
    poly = family_poly(args.family, params)
    payload = {"family": args.family.value, "a": args.a, "b": args.b, "k": args.k, "poly": poly.to_text()}
    text = poly.to_text()
    if args.eval_at is not None:
        n = args.eval_at
        value = poly_eval(poly, n)
        payload["eval"] = {"n": n, "value": str(value)}
        text += f"\n{args.family.value}({n}) = {value}"
        if n >= 1:
            oracle = oracle_value(args.family, params, n)
            applies = args.family is PowerSumFamily.S or args.family is parity_branch(n)
            payload["eval"].update(oracle=str(oracle), oracle_applies=applies)
            text += f"\ndirect sum = {oracle}"
            if not applies:
                text += f" (alternating sum at n={n} matches {parity_branch(n).value}, not {args.family.value})"
    return payload, text


def _cmd_lemma(args):
    if args.lemma in (3, 6):
        fn = check_lemma3 if args.lemma == 3 else check_lemma6
        rows = fn(args.k if args.k is not None else args.kmax)
        if args.k is not None:
            rows = rows[-1:]
    else:
        check = check_lemma4 if args.lemma == 4 else check_lemma5_rational
        if args.k is not None:
            ks = [args.k]
        elif args.lemma == 4:
            ks = [k for k in range(3, args.kmax + 1) if k not in (4, 6)]
        else:
            ks = list(range(7, args.kmax + 1))
        rows = [r for k in ks for r in check(k, args.shifts)]
    lines = []
    for r in rows:
        c = r.counts
        shift = f" s={r.s}" if r.s is not None else ""
        mf = f" m={r.multiple_factor}" if r.multiple_factor is not None else " m=1"
        lines.append(
            f"lemma {r.lemma} k={r.k}{shift} distinct={c['distinct']} odd={c['odd']} "
            f"simple={c['simple']}{mf} {r.verdict}"
        )
    return [r.to_json() for r in rows], "\n".join(lines)


def _cmd_certify(args):
    params = ProgressionParams(args.a, args.b, args.k)
    if args.theorem <= 3:
        if args.A is None:
            raise ParameterError(f"theorem {args.theorem} needs --A (and optionally --B, --C)")
        rhs = QuadraticRHS(args.A, args.B, args.C)
    else:
        if args.c is None:
            raise ParameterError(f"theorem {args.theorem} needs --c (and optionally --d, --l)")
        rhs = PowerRHS(args.c, args.d, args.ell)
    cert = certify(args.theorem, params, rhs)
    lines = [
        f"theorem {cert.theorem_id} ({cert.family.value}) a={args.a} b={args.b} k={args.k}",
        f"reduced polynomial: {cert.reduced_poly}",
        "shift constants: "
        + ", ".join(f"{k}={v}" for k, v in cert.shift_constants.items() if v is not None),
    ]
    for h in cert.hypothesis_checks:
        w = h.witness
        counts = f"distinct={w['distinct']} odd={w['odd']} simple={w['simple']}"
        coprime = " ".join(f"coprime[{p}]={n}" for p, n in w["coprime"].items())
        lines.append(f"  lemma {h.lemma_id}: {h.claim}: {'PASS' if h.passed else 'FAIL'} ({counts} {coprime})")
    lines.append(f"verdict: {cert.verdict.value}")
    return cert.to_json(), "\n".join(lines)


def _cmd_solve(args, threads):
    params = ProgressionParams(args.a, args.b, args.k)
    if args.allow_small_y and args.require_large_y:
        raise ParameterError("--allow-small-y and --require-large-y are mutually exclusive")
    flag = True if args.require_large_y else (False if args.allow_small_y else None)
    box = SearchBox(args.xmin, args.xmax, args.ellmax, flag)
    if args.rhs_quad is not None:
        sols = solve_quadratic_rhs(args.family, params, QuadraticRHS(*args.rhs_quad), box, threads)
    else:
        c, d, ell = args.rhs_power
        sols = solve_power_rhs(args.family, params, PowerRHS(c, d, ell), box, threads)
    lines = []
    for s in sols:
        ell = f" ell={s.ell}" if s.ell is not None else ""
        lines.append(f"x={s.x} y={s.y}{ell} lhs={s.lhs_value} (last summand index {s.x - 1})")
    lines.append(f"{len(sols)} solution(s) for x in [{args.xmin}, {args.xmax}]")
    return [s.to_json() for s in sols], "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    threads = max(1, args.threads)
    try:
        if args.command in ("bernoulli", "euler"):
            if args.k < 0:
                raise ParameterError("k must be non-negative")
            payload, text = _cmd_classical(args)
        elif args.command == "powersum":
            payload, text = _cmd_powersum(args)
        elif args.command == "lemma-check":
            payload, text = _cmd_lemma(args)
        elif args.command == "certify":
            payload, text = _cmd_certify(args)
        else:
            payload, text = _cmd_solve(args, threads)
    except ApsumsError as exc:
        print(f"apsums {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
