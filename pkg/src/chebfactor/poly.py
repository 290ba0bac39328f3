"""Dense univariate polynomials with exact integer or rational coefficients.

Coefficients are stored in ascending degree order: ``coeffs[i]`` multiplies
``x**i``. The zero polynomial has no coefficients, and any other polynomial
has a nonzero last coefficient. Instances are immutable.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


class NotDivisible(ArithmeticError):
    """Raised by :func:`div_exact` when the divisor does not divide exactly."""


class ZeroPolynomial(ValueError):
    """Raised when an operation is undefined for the zero polynomial."""


def _strip(coeffs: Sequence[Number]) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class _DensePoly:
    __slots__ = ("coeffs",)

    coeffs: tuple

    def __init__(self, coeffs: Iterable[Number] = ()):
        object.__setattr__(self, "coeffs", _strip([self._coerce(c) for c in coeffs]))

    @staticmethod
    def _coerce(c):
        raise NotImplementedError

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple):
        # Skip coercion for coefficients already known to be the right type.
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", _strip(coeffs))
        return obj

    @classmethod
    def zero(cls):
        return cls._raw(())

    @classmethod
    def one(cls):
        return cls([1])

    @classmethod
    def x(cls):
        return cls([0, 1])

    @classmethod
    def monomial(cls, degree: int, coeff: Number = 1):
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Number:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Number:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __eq__(self, other) -> bool:
        if isinstance(other, _DensePoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.coeffs)!r})"

    def _check(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, int) or (isinstance(other, Fraction) and isinstance(self, RatPoly)):
            return type(self)([other])
        return None

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return self._raw(tuple(out))

    __radd__ = __add__

    def __neg__(self):
        return self._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        other = self._check(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self.zero()
        if len(a) < len(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        # Schoolbook; Chebyshev polynomials are half zeros, so skip them.
        for j, bj in enumerate(b):
            if not bj:
                continue
            for i, ai in enumerate(a, j):
                if ai:
                    out[i] += ai * bj
        return self._raw(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result, base = self.one(), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c: Number):
        if isinstance(self, IntPoly) and not isinstance(c, int):
            raise TypeError("IntPoly can only be scaled by an int")
        return self._raw(tuple(a * c for a in self.coeffs))

    def __call__(self, t):
        return horner(self.coeffs, t)


class IntPoly(_DensePoly):
    """Polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ()

    @staticmethod
    def _coerce(c) -> int:
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise TypeError(f"non-integral coefficient {c}")
            return c.numerator
        if isinstance(c, bool) or not isinstance(c, int):
            raise TypeError(f"IntPoly coefficients must be int, got {type(c).__name__}")
        return c

    def content(self) -> int:
        """Positive gcd of the coefficients (0 for the zero polynomial)."""
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def to_rat(self) -> RatPoly:
        return RatPoly._raw(tuple(Fraction(c) for c in self.coeffs))


class RatPoly(_DensePoly):
    """Polynomial with arbitrary-precision rational coefficients."""

    __slots__ = ()

    @staticmethod
    def _coerce(c) -> Fraction:
        if isinstance(c, bool) or not isinstance(c, (int, Fraction)):
            raise TypeError(f"RatPoly coefficients must be int or Fraction, got {type(c).__name__}")
        return Fraction(c)

    @classmethod
    def _raw(cls, coeffs: tuple):
        return super()._raw(tuple(c if type(c) is Fraction else Fraction(c) for c in coeffs))

    def is_monic(self) -> bool:
        return self.lead == 1


def horner(coeffs: Sequence, t):
    acc = t * 0
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def add(p, q):
    return p + q


def sub(p, q):
    return p - q


def neg(p):
    return -p


def mul(p, q):
    return p * q


def div_exact(p: _DensePoly, q: _DensePoly) -> _DensePoly:
    """Return ``r`` with ``q * r == p``.

    Over the integers every step of the long division must divide exactly;
    otherwise, or if a remainder is left, :class:`NotDivisible` is raised.
    """
    if type(p) is not type(q):
        raise TypeError("div_exact operands must have the same coefficient domain")
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return p
    dq = q.degree
    shift = p.degree - dq
    if shift < 0:
        raise NotDivisible(f"degree {p.degree} dividend, degree {dq} divisor")
    integral = isinstance(p, IntPoly)
    rem = list(p.coeffs)
    lq = q.lead
    quot = [0] * (shift + 1)
    qc = q.coeffs
    for k in range(shift, -1, -1):
        top = rem[k + dq]
        if not top:
            continue
        if integral:
            c, r = divmod(top, lq)
            if r:
                raise NotDivisible(f"coefficient {top} of x^{k + dq} not divisible by {lq}")
        else:
            c = top / lq
        quot[k] = c
        for i, qi in enumerate(qc):
            if qi:
                rem[k + i] -= c * qi
    if any(rem[:dq]):
        raise NotDivisible("nonzero remainder")
    return type(p)._raw(tuple(quot))


def eval_real(p: _DensePoly, t: float) -> float:
    """Evaluate ``p`` at the float ``t`` in double precision (Horner)."""
    acc = 0.0
    for c in reversed(p.coeffs):
        acc = acc * t + float(c)
    return acc


def eval_rat(p: _DensePoly, t: Number) -> Fraction:
    """Evaluate ``p`` exactly at a rational point."""
    return Fraction(horner(p.coeffs, Fraction(t)))


def abs_eval_bound(p: _DensePoly, t: float) -> float:
    """Sum of ``|c_i| |t|^i``; scale for relative residual checks."""
    acc, at = 0.0, abs(t)
    for c in reversed(p.coeffs):
        acc = acc * at + abs(float(c))
    return acc


def clear_denominators(p: RatPoly) -> IntPoly:
    """Primitive integer multiple of ``p`` with positive leading coefficient."""
    if p.is_zero():
        raise ZeroPolynomial("cannot clear denominators of the zero polynomial")
    den = math.lcm(*(Fraction(c).denominator for c in p.coeffs))
    ints = [int(Fraction(c) * den) for c in p.coeffs]
    g = math.gcd(*ints)
    if ints[-1] < 0:
        g = -g
    return IntPoly._raw(tuple(c // g for c in ints))
