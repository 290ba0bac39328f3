"""Chebyshev polynomials of the second through sixth kinds.

``U`` comes from the three-term recurrence, ``V`` and ``W`` from
``U_n -/+ U_{n-1}``, and the fifth/sixth kinds from the monic recurrence
``G_{n,m}`` with ``m = 3`` (``X``) and ``m = 5`` (``Y``).
"""

from __future__ import annotations

import enum
import threading
from fractions import Fraction

from .poly import IntPoly, RatPoly, clear_denominators


class ChebKind(str, enum.Enum):
    U = "U"
    V = "V"
    W = "W"
    X = "X"
    Y = "Y"
    XBAR = "Xbar"
    YBAR = "Ybar"

    @property
    def rational(self) -> bool:
        return self in (ChebKind.XBAR, ChebKind.YBAR)


class DenominatorZero(ZeroDivisionError):
    """A recurrence coefficient ``A_{k,m}`` has a vanishing denominator."""


# m parameter of the G recurrence for each kind
G_PARAM = {"X": 3, "Y": 5, "Xbar": 3, "Ybar": 5}

_u_lock = threading.Lock()
_u_table: list[IntPoly] = [IntPoly([1]), IntPoly([0, 2])]


def _check_n(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")


def gen_U(n: int) -> IntPoly:
    """Chebyshev polynomial of the second kind, ``U_n``."""
    _check_n(n)
    if n < len(_u_table):
        return _u_table[n]
    with _u_lock:
        two_x = IntPoly([0, 2])
        while len(_u_table) <= n:
            _u_table.append(two_x * _u_table[-1] - _u_table[-2])
    return _u_table[n]


def _u_prev(n: int) -> IntPoly:
    # U_{-1} = 0
    return gen_U(n - 1) if n >= 1 else IntPoly.zero()


def gen_V(n: int) -> IntPoly:
    """Third kind: ``V_n = U_n - U_{n-1}``."""
    _check_n(n)
    return gen_U(n) - _u_prev(n)


def gen_W(n: int) -> IntPoly:
    """Fourth kind: ``W_n = U_n + U_{n-1}``."""
    _check_n(n)
    return gen_U(n) + _u_prev(n)


def recurrence_coeff(k: int, m: int) -> Fraction:
    """``A_{k,m}`` in ``G_{n,m} = x G_{n-1,m} + A_{n-1,m} G_{n-2,m}``."""
    den = (2 * k + m - 1) * (2 * k + m - 3)
    if den == 0:
        raise DenominatorZero(f"A_{{{k},{m}}} has zero denominator")
    sign = -1 if k % 2 else 1
    num = (2 * k + m - 2) * sign + (2 * k - (m - 2)) - k * m - k * k
    return Fraction(num, den)


def gen_G(n: int, m: int) -> RatPoly:
    """Monic ``G_{n,m}`` of degree ``n``, evaluated bottom-up in exact rationals."""
    _check_n(n)
    if m not in (3, 5):
        raise ValueError(f"m must be 3 or 5, got {m!r}")
    prev, cur = RatPoly([1]), RatPoly([0, 1])
    if n == 0:
        return prev
    x = RatPoly.x()
    for k in range(2, n + 1):
        prev, cur = cur, x * cur + prev.scale(recurrence_coeff(k - 1, m))
    return cur


def gen_XY(kind: str, n: int) -> IntPoly:
    """Integer fifth (``X``) or sixth (``Y``) kind polynomial.

    This is the primitive, positive-leading integer multiple of the monic form.
    """
    kind = ChebKind(kind)
    if kind not in (ChebKind.X, ChebKind.Y):
        raise ValueError(f"kind must be X or Y, got {kind.value}")
    return clear_denominators(gen_G(n, G_PARAM[kind.value]))


def gen(kind: str, n: int) -> IntPoly | RatPoly:
    """Dispatch on kind; ``Xbar``/``Ybar`` return the monic rational forms."""
    kind = ChebKind(kind)
    if kind is ChebKind.U:
        return gen_U(n)
    if kind is ChebKind.V:
        return gen_V(n)
    if kind is ChebKind.W:
        return gen_W(n)
    if kind.rational:
        return gen_G(n, G_PARAM[kind.value])
    return gen_XY(kind.value, n)
