"""Command line front end.

Subcommands: character, kerov, stanley, positivity, shiftschur, psharp,
verify.  Exit status is 0 on success, 1 when a verification or positivity
check fails, 2 on usage errors (including budget violations without --force).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import MultiPoly, render_poly
from .errors import BudgetExceededError
from .characters import mn_character, normalized_character
from .kerov import c_expansion, kerov_polynomial
from .partitions import Partition, parse_partition
from .shifted import p_sharp, shift_schur
from .stanley import (M2_ALIASES, negate_q, positivity_report,
                      render_shape_poly, stanley_polynomial)
from .verify import render_expansion, run_suite

MAX_K = 9
MAX_M = 3
MAX_N = 25


def _budget(condition: bool, message: str, force: bool):
    if not condition:
        return
    if force:
        print(f"warning: {message}; proceeding because --force was given "
              "(runtime grows steeply)", file=sys.stderr)
        return
    raise BudgetExceededError(f"{message} (use --force to override)")


def _parse_partition_arg(text: str, what: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise SystemExit(f"error: bad {what}: {exc}")


def cmd_character(args) -> int:
    shape = _parse_partition_arg(args.shape, "--shape")
    _budget(shape.n > MAX_N, f"shape has {shape.n} boxes, cap is {MAX_N}", args.force)
    if args.normalized:
        if args.k is None:
            print("error: --normalized needs --k", file=sys.stderr)
            return 2
        _budget(args.k > MAX_K, f"k={args.k}, cap is {MAX_K}", args.force)
        value = normalized_character(shape, args.k)
    else:
        if args.cls is None:
            print("error: need --class (or --normalized --k)", file=sys.stderr)
            return 2
        cls = _parse_partition_arg(args.cls, "--class")
        value = mn_character(shape, cls)
    print(value)
    return 0


def _poly_payload(poly: MultiPoly, text: str) -> dict:
    return {"text": text, "poly": poly.to_json()}


def cmd_kerov(args) -> int:
    _budget(args.k > MAX_K, f"k={args.k}, cap is {MAX_K}", args.force)
    expansion = kerov_polynomial(args.k) if args.basis == "R" else c_expansion(args.k)
    text = render_expansion(expansion)
    if args.format == "json":
        payload = {"k": args.k, "basis": args.basis} | _poly_payload(expansion.body, text)
        print(json.dumps(payload, indent=2))
    else:
        print(text)
    return 0


def cmd_stanley(args) -> int:
    _budget(args.k > MAX_K, f"k={args.k}, cap is {MAX_K}", args.force)
    _budget(args.m > MAX_M, f"m={args.m}, cap is {MAX_M}", args.force)
    poly = stanley_polynomial(args.k, args.m)
    if args.negate_q:
        poly = negate_q(poly, args.k)
    text = render_shape_poly(poly, args.m)
    if args.format == "json":
        payload = {"k": args.k, "m": args.m, "negated": bool(args.negate_q)}
        payload |= _poly_payload(poly, text)
        if args.m == 2:
            payload["aliases"] = M2_ALIASES
        print(json.dumps(payload, indent=2))
    else:
        print(text)
    return 0


def cmd_positivity(args) -> int:
    _budget(args.kmax > MAX_K, f"kmax={args.kmax}, cap is {MAX_K}", args.force)
    _budget(args.m > MAX_M, f"m={args.m}, cap is {MAX_M}", args.force)
    degrees = {"all": "all", "top": "top", "k-1": "k-1", "k-3": "k-3"}[args.degrees]
    rows = positivity_report(args.kmax, args.m, degrees)
    failed = [row for row in rows if not row.all_ok]
    if args.format == "json":
        payload = []
        for row in rows:
            payload.append({
                "k": row.k, "m": row.m, "ok": row.all_ok,
                "checks": [{
                    "name": c.name, "positive": c.positive, "consistent": c.consistent,
                    "monomials": c.monomials,
                    "min_coeff": None if c.min_coeff is None else str(c.min_coeff),
                    "witness": c.witness, "detail": c.detail,
                } for c in row.checks],
            })
        print(json.dumps(payload, indent=2))
    else:
        for row in rows:
            for check in row.checks:
                mark = "ok" if check.ok else "FAIL"
                extra = f"  [{check.witness}]" if check.witness else ""
                print(f"k={row.k:<2d} {check.name:<6s} {mark:<5s} "
                      f"monomials={check.monomials:<5d}{extra}")
        print(f"{'all positive' if not failed else 'FAILURES PRESENT'} "
              f"for k <= {args.kmax}, m = {args.m}")
    if args.outdir:
        from .report import write_positivity_report
        for path in write_positivity_report(rows, args.outdir):
            print(f"wrote {path}", file=sys.stderr)
    return 1 if failed else 0


def cmd_shiftschur(args) -> int:
    lam = _parse_partition_arg(args.shape, "--lambda")
    try:
        xs = [Fraction(tok) for tok in args.x.split(",")] if args.x.strip() else []
    except ValueError as exc:
        print(f"error: bad --x: {exc}", file=sys.stderr)
        return 2
    if len(xs) < len(lam):
        print(f"error: need at least {len(lam)} evaluation points", file=sys.stderr)
        return 2
    print(shift_schur(lam, xs))
    return 0


def cmd_psharp(args) -> int:
    mu = _parse_partition_arg(args.mu, "--mu")
    lam = _parse_partition_arg(args.shape, "--lambda")
    _budget(lam.n > MAX_N, f"lambda has {lam.n} boxes, cap is {MAX_N}", args.force)
    if mu.n > lam.n:
        print(f"error: need |mu| <= |lambda|, got {mu.n} > {lam.n}", file=sys.stderr)
        return 2
    print(p_sharp(mu, lam))
    return 0


def cmd_verify(args) -> int:
    if args.suite != "paper":
        print(f"error: unknown suite {args.suite!r} (only 'paper' exists)", file=sys.stderr)
        return 2
    results = run_suite(args.items)
    if args.format == "json":
        print(json.dumps([{
            "index": r.index, "item": r.name, "statement": r.statement,
            "status": "pass" if r.ok else "fail", "detail": r.detail,
        } for r in results], indent=2))
    else:
        width = max((len(r.name) for r in results), default=4)
        for r in results:
            mark = "pass" if r.ok else "FAIL"
            print(f"[{r.index:02d}] {mark}  {r.name:<{width}s}  {r.statement}")
            if not r.ok:
                print(f"     -> {r.detail}")
    failed = [r for r in results if not r.ok]
    if args.outdir:
        from .report import write_verify_report
        for path in write_verify_report(results, args.outdir):
            print(f"wrote {path}", file=sys.stderr)
    if not results:
        print("error: no items matched", file=sys.stderr)
        return 2
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="snchar",
        description="Exact symmetric-group character toolkit: normalized "
                    "characters, free cumulants, character polynomials in the "
                    "R/C bases, multi-rectangular character polynomials, shift "
                    "Schur evaluations and the verification suite.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("character", help="irreducible or normalized character values")
    p.add_argument("--shape", required=True, help="partition, e.g. 4,3,3,3,1")
    p.add_argument("--class", dest="cls", help="cycle type, e.g. 2,1,1,...")
    p.add_argument("--normalized", action="store_true",
                   help="print the normalized character on (k, 1, 1, ...)")
    p.add_argument("--k", type=int, help="cycle length for --normalized")
    p.add_argument("--force", action="store_true", help="ignore size caps")
    p.set_defaults(fn=cmd_character)

    p = sub.add_parser("kerov", help="character polynomial Sigma_k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--basis", choices=("R", "C"), default="R")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--force", action="store_true", help="ignore size caps")
    p.set_defaults(fn=cmd_kerov)

    p = sub.add_parser("stanley", help="multi-rectangular character polynomial F_k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True, help="number of rectangle groups")
    p.add_argument("--negate-q", action="store_true",
                   help="print (-1)^k F_k with q replaced by -q")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--force", action="store_true", help="ignore size caps")
    p.set_defaults(fn=cmd_stanley)

    p = sub.add_parser("positivity", help="positivity report for (-1)^k F_k(p; -q)")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--degrees", choices=("all", "top", "k-1", "k-3"), default="all")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--outdir", help="write positivity.csv and figures here")
    p.add_argument("--force", action="store_true", help="ignore size caps")
    p.set_defaults(fn=cmd_positivity)

    p = sub.add_parser("shiftschur", help="evaluate a shift Schur polynomial")
    p.add_argument("--lambda", dest="shape", required=True, help="partition")
    p.add_argument("--x", required=True, help="evaluation points, e.g. 2,2 or 1/2,3")
    p.set_defaults(fn=cmd_shiftschur)

    p = sub.add_parser("psharp", help="p-sharp evaluation of the normalized character")
    p.add_argument("--mu", required=True, help="partition of k")
    p.add_argument("--lambda", dest="shape", required=True, help="partition of n >= k")
    p.add_argument("--force", action="store_true", help="ignore size caps")
    p.set_defaults(fn=cmd_psharp)

    p = sub.add_parser("verify", help="run the reference-identity suite")
    p.add_argument("--suite", default="paper")
    p.add_argument("--items", help="only run items whose name contains this substring")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--outdir", help="write verify.csv and a status figure here")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
