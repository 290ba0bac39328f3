"""Command-line interface.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 corrupt cache.
"""

from __future__ import annotations

import argparse
import json
import sys
from functools import reduce
from operator import mul
from typing import Callable, Iterable, Sequence

from . import cache, chebyshev, factor
from .poly import IntPoly
from .psi import divisors, psi
from .render import coeff_strings, to_latex, to_plain

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_CORRUPT = 0, 1, 2, 3

FORMATS = ("plain", "json", "latex")
VARIANT_SIGN = {"plus": "+ 1", "minus": "- 1", "square": "^2 - 1"}


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _nonneg(s: str) -> int:
    try:
        v = int(s, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def _positive(s: str) -> int:
    v = _nonneg(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _kind_label(kind: str, n: int, latex: bool = False) -> str:
    if latex:
        base = {"Xbar": r"\bar{X}", "Ybar": r"\bar{Y}"}.get(kind, kind)
        return f"{base}_{{{n}}}(x)"
    return f"{kind}_{n}(x)"


def _target_label(kind: str, n: int, variant: str, latex: bool = False) -> str:
    label = _kind_label(kind, n, latex)
    if variant == "square":
        return f"{label}^2 - 1"
    return f"{label} {VARIANT_SIGN[variant]}"


def _psi_label(d: int, latex: bool = False) -> str:
    return rf"\Psi_{{{d}}}(x)" if latex else f"Psi_{d}"


def _render_poly(p, fmt: str) -> str:
    return to_latex(p) if fmt == "latex" else to_plain(p)


# -- gen ---------------------------------------------------------------------

def cmd_gen(args) -> int:
    p = chebyshev.gen(args.kind, args.n)
    if args.format == "json":
        print(_dumps({"kind": args.kind, "n": args.n, "coeffs": coeff_strings(p)}))
    else:
        print(_render_poly(p, args.format))
    return EXIT_OK


# -- psi ---------------------------------------------------------------------

def cmd_psi(args) -> int:
    q = psi(args.d)
    if args.format == "json":
        print(_dumps({"d": q.d, "degree": q.degree, "coeffs": coeff_strings(q.poly)}))
    else:
        print(_render_poly(q.poly, args.format))
    return EXIT_OK


# -- factor ------------------------------------------------------------------

def _factor_json(f: factor.Factorization, report: factor.VerifyReport) -> dict:
    return {
        "kind": f.kind,
        "n": f.n,
        "variant": f.variant.value,
        "factors": [
            {
                "d": fac.d,
                "source": fac.source.value,
                "quotient": fac.term.quotient if fac.term else None,
                "coeffs": coeff_strings(fac.psi.poly),
            }
            for fac in f.factors
        ],
        "expanded": coeff_strings(f.expanded),
        "verified": report.ok,
        "checks": report.checks,
    }


def cmd_factor(args) -> int:
    f = factor.factor_variant(args.kind, args.n, args.variant)
    report = factor.verify(f)
    fmt = args.format
    if fmt == "json":
        print(_dumps(_factor_json(f, report)))
    elif fmt == "latex":
        lhs = _target_label(f.kind, f.n, f.variant.value, latex=True)
        print(f"{lhs} = " + " ".join(_psi_label(d, True) for d in f.indices))
        print("  = " + "".join(f"({to_latex(fac.psi.poly)})" for fac in f.factors))
        print("% verified: exact" if report.ok else "% verified: FAILED")
    else:
        print(" * ".join(_psi_label(d) for d in f.indices))
        for fac in f.factors:
            print(f"  {_psi_label(fac.d)} = {to_plain(fac.psi.poly)}")
        print(f"  {_target_label(f.kind, f.n, f.variant.value)} = {to_plain(f.expanded)}")
        print("verified: exact" if report.ok else "verified: FAILED")
    if not report.ok:
        for name, ok in report.checks.items():
            if not ok:
                print(f"check failed: {name}: {report.details.get(name, '')}", file=sys.stderr)
        print(f"expected: {to_plain(report.target)}", file=sys.stderr)
        print(f"got:      {to_plain(report.product)}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


# -- scan --------------------------------------------------------------------

SCAN_KINDS = ("U", "V", "W", "X", "Y")


def scan_row(kind: str, n: int, variant: str) -> dict:
    p = factor.target(kind, n, variant)
    row = {"n": n, "degree": p.degree}
    if p.is_zero():
        row.update(zero=True, divisors=[], multiplicities=[], complete=False)
        return row
    split = factor.psi_split(p)
    row.update(
        zero=False,
        divisors=list(split.divisors),
        multiplicities=list(split.multiplicities),
        complete=split.complete,
    )
    return row


def _divisor_text(row: dict) -> str:
    if row["zero"]:
        return "n/a (zero polynomial)"
    if not row["divisors"]:
        return "none"
    return ", ".join(
        f"Psi_{d}" + (f"^{k}" if k > 1 else "")
        for d, k in zip(row["divisors"], row["multiplicities"])
    )


def cmd_scan(args) -> int:
    if args.n_min > args.n_max:
        args.parser.error(f"n_min ({args.n_min}) exceeds n_max ({args.n_max})")
    rows = [scan_row(args.kind, n, args.variant) for n in range(args.n_min, args.n_max + 1)]
    if args.format == "json":
        print(_dumps({"kind": args.kind, "variant": args.variant, "rows": rows}))
    elif args.format == "latex":
        print(r"\begin{tabular}{rll}")
        print(r"$n$ & $\Psi$-divisors & complete \\ \hline")
        for r in rows:
            divs = ", ".join(
                _psi_label(d, True) + (f"^{{{k}}}" if k > 1 else "")
                for d, k in zip(r["divisors"], r["multiplicities"])
            ) or "none"
            divs = f"${divs}$" if r["divisors"] else divs
            print(f"{r['n']} & {divs} & {'yes' if r['complete'] else 'no'} \\\\")
        print(r"\end{tabular}")
    else:
        width = len(str(args.n_max))
        for r in rows:
            label = _target_label(args.kind, r["n"], args.variant)
            print(f"n={r['n']:<{width}}  {label}  divisors: {_divisor_text(r)}  "
                  f"complete: {'yes' if r['complete'] else 'no'}")
    return EXIT_OK


# -- verify-identities -------------------------------------------------------

def _turan(n: int) -> bool:
    u = chebyshev.gen_U
    return u(n) * u(n) - 1 == u(n - 1) * u(n + 1)


def _gurtas(n: int) -> bool:
    prod = reduce(mul, (psi(d).poly for d in divisors(2 * n) if d > 2), IntPoly.one())
    return prod == chebyshev.gen_U(n - 1)


def _squared(kind: str) -> Callable[[int], bool]:
    def check(n: int) -> bool:
        f = factor.factor_squared_minus_one(kind, n)
        return factor.verify(f).ok
    return check


def _split(kind: str) -> Callable[[int], bool]:
    def check(n: int) -> bool:
        plus = factor.factor_variant(kind, n, +1)
        minus = factor.factor_variant(kind, n, -1)
        square = factor.factor_squared_minus_one(kind, n)
        return (
            factor.verify(plus).ok
            and factor.verify(minus).ok
            and plus.expanded * minus.expanded == square.expanded
            and sorted(plus.indices + minus.indices) == sorted(square.indices)
            and not set(plus.indices) & set(minus.indices)
        )
    return check


IDENTITY_FAMILIES: Sequence[tuple[str, Callable[[int], bool]]] = (
    ("turan", _turan),
    ("gurtas-product", _gurtas),
    ("V-squared-minus-one", _squared("V")),
    ("W-squared-minus-one", _squared("W")),
    ("V-split", _split("V")),
    ("W-split", _split("W")),
)


def run_identities(n_max: int, families=IDENTITY_FAMILIES) -> list[dict]:
    results = []
    for name, check in families:
        first = next((n for n in range(1, n_max + 1) if not check(n)), None)
        results.append({"name": name, "n_max": n_max, "passed": first is None,
                        "first_failure": first})
    return results


def cmd_verify_identities(args) -> int:
    results = run_identities(args.n_max)
    ok = all(r["passed"] for r in results)
    if args.format == "json":
        print(_dumps({"n_max": args.n_max, "ok": ok, "families": results}))
    else:
        for r in results:
            if r["passed"]:
                print(f"PASS  {r['name']}  n=1..{args.n_max}")
            else:
                print(f"FAIL  {r['name']}  first failing n={r['first_failure']}")
        print("all identities hold" if ok else "identity check failed")
    return EXIT_OK if ok else EXIT_VERIFY


# -- parser ------------------------------------------------------------------

def _add_globals(p: argparse.ArgumentParser, top: bool) -> None:
    kw = {} if top else {"default": argparse.SUPPRESS}
    p.add_argument("--format", choices=FORMATS, **({"default": "plain"} if top else kw))
    p.add_argument("--cache", metavar="PATH", **({"default": None} if top else kw))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chebfactor",
        description="Exact Chebyshev polynomials, psi_d minimal polynomials and "
                    "factorizations of V_n +/- 1 and W_n +/- 1.",
    )
    _add_globals(parser, top=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a Chebyshev polynomial")
    p.add_argument("kind", choices=[k.value for k in chebyshev.ChebKind])
    p.add_argument("n", type=_nonneg)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("psi", help="scaled minimal polynomial of cos(2pi/d)")
    p.add_argument("d", type=_positive)
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("factor", help="factor V_n or W_n plus/minus 1 (or squared minus 1)")
    p.add_argument("kind", choices=("V", "W"))
    p.add_argument("n", type=_positive)
    p.add_argument("variant", choices=("plus", "minus", "square"))
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("scan", help="find psi divisors of kind_n +/- 1 over a range of n")
    p.add_argument("kind", choices=SCAN_KINDS)
    p.add_argument("n_min", type=_nonneg)
    p.add_argument("n_max", type=_nonneg)
    p.add_argument("variant", choices=("plus", "minus", "square"))
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify-identities", help="check all identity families up to n_max")
    p.add_argument("n_max", type=_positive)
    p.set_defaults(func=cmd_verify_identities)

    for action in sub.choices.values():
        _add_globals(action, top=False)
        action.set_defaults(parser=action)
    return parser


def main(argv: Iterable[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(None if argv is None else list(argv))
    loaded = None
    if args.cache:
        try:
            loaded = cache.seed_from(args.cache)
        except cache.CacheCorrupt as exc:
            print(f"chebfactor: corrupt cache: {exc}", file=sys.stderr)
            return EXIT_CORRUPT
    code = args.func(args)
    if args.cache:
        cache.write_back(args.cache, loaded)
    return code


if __name__ == "__main__":
    sys.exit(main())
