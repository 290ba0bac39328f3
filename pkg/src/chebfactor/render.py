"""Plain-text, LaTeX and JSON-ready renderings of polynomials."""

from __future__ import annotations

from fractions import Fraction

from .poly import IntPoly, RatPoly


def _coeff_str(c: Fraction | int) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def parse_coeff(s: str) -> Fraction | int:
    if "/" in s:
        return Fraction(s)
    return int(s)


def to_plain(p: IntPoly | RatPoly) -> str:
    """Descending-degree ASCII form, e.g. ``64x^6 + 32x^5 - 80x^4 - 1``."""
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = Fraction(p.coeffs[i])
        if not c:
            continue
        a = abs(c)
        mag = _coeff_str(a)
        if i == 0:
            body = mag
        else:
            var = "x" if i == 1 else f"x^{i}"
            if a == 1:
                body = var
            elif a.denominator != 1:
                body = f"({mag}){var}"
            else:
                body = mag + var
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def to_latex(p: IntPoly | RatPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = Fraction(p.coeffs[i])
        if not c:
            continue
        a = abs(c)
        if a.denominator != 1:
            mag = rf"\frac{{{a.numerator}}}{{{a.denominator}}}"
        else:
            mag = str(a.numerator)
        if i == 0:
            body = mag
        else:
            var = "x" if i == 1 else f"x^{{{i}}}"
            body = var if a == 1 else f"{mag} {var}"
        sign = "-" if c < 0 else "+"
        parts.append((sign if sign == "-" else "") + body if not parts else f"{sign} {body}")
    return " ".join(parts)


def coeff_strings(p: IntPoly | RatPoly) -> list[str]:
    return [_coeff_str(c) for c in p.coeffs]


def from_coeff_strings(strings: list[str], rational: bool = False) -> IntPoly | RatPoly:
    values = [parse_coeff(s) for s in strings]
    return RatPoly(values) if rational else IntPoly(values)
