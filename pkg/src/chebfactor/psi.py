"""Scaled minimal polynomials of cos(2*pi/d) and the number theory they need.

``psi(d)`` is ``2**(phi(d)/2)`` times the minimal polynomial of
``cos(2*pi/d)`` for ``d > 2``; ``psi(1) = 2(x - 1)`` and ``psi(2) = 2(x + 1)``.
It is computed exactly by folding the palindromic cyclotomic polynomial
``Phi_d(z) = z**m * P(z + 1/z)`` and substituting ``z + 1/z -> 2x``.
"""

from __future__ import annotations

import math
import sys
import threading
from dataclasses import dataclass

from .poly import IntPoly, abs_eval_bound, div_exact, eval_real


class InternalInconsistency(AssertionError):
    """An algebraic identity that must hold did not; indicates a bug."""


def _check_positive(n: int, name: str = "n") -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n!r}")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division, ``{prime: exponent}``."""
    _check_positive(n)
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in ascending order."""
    _check_positive(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def totient(n: int) -> int:
    """Euler's totient function."""
    result = n
    for p in factorize(n):
        result -= result // p
    return result


_sieve_lock = threading.Lock()
_sieve: list[int] = [0, 1]


def totients_upto(limit: int) -> list[int]:
    """``phi(0..limit)`` as a list (``phi(0)`` is 0), from a cached sieve."""
    global _sieve
    if limit < len(_sieve):
        return _sieve[: limit + 1]
    with _sieve_lock:
        if limit >= len(_sieve):
            size = max(limit + 1, 2 * len(_sieve))
            phi = list(range(size))
            for p in range(2, size):
                if phi[p] == p:
                    for k in range(p, size, p):
                        phi[k] -= phi[k] // p
            _sieve = phi
    return _sieve[: limit + 1]


def psi_degree(d: int) -> int:
    """Degree of ``psi(d)``."""
    _check_positive(d, "d")
    return 1 if d <= 2 else totient(d) // 2


# Write-once caches: a key, once set, always maps to the same value.
_cache_lock = threading.Lock()
_cyclotomic_cache: dict[int, IntPoly] = {}
_psi_cache: dict[int, "PsiPoly"] = {}


def cyclotomic(d: int) -> IntPoly:
    """``Phi_d = (x**d - 1) / prod(Phi_e for e | d, e < d)``, memoized."""
    _check_positive(d, "d")
    hit = _cyclotomic_cache.get(d)
    if hit is not None:
        return hit
    num = IntPoly.monomial(d) - 1
    for e in divisors(d)[:-1]:
        num = div_exact(num, cyclotomic(e))
    with _cache_lock:
        return _cyclotomic_cache.setdefault(d, num)


def _fold_palindrome(phi: IntPoly) -> IntPoly:
    """Return ``P`` with ``phi(z) = z**m * P(z + 1/z)``, ``deg phi = 2m``.

    ``phi`` is peeled from the top using ``B_j(y)``, the polynomial in
    ``y = z + 1/z`` equal to ``z**j + z**-j``.
    """
    c = list(phi.coeffs)
    if len(c) % 2 != 1:
        raise InternalInconsistency(f"odd-degree polynomial {phi!r} cannot be folded")
    m = (len(c) - 1) // 2
    # B_0 = 2, B_1 = y, B_j = y B_{j-1} - B_{j-2}
    basis = [IntPoly([2]), IntPoly([0, 1])]
    y = IntPoly.x()
    for _ in range(2, m + 1):
        basis.append(y * basis[-1] - basis[-2])
    result = IntPoly.zero()
    # c[m + j] multiplies z**j; palindromic means c[m - j] == c[m + j].
    for j in range(m, 0, -1):
        hi, lo = c[m + j], c[m - j]
        if hi != lo:
            raise InternalInconsistency(f"not palindromic at z^{j}: {hi} != {lo}")
        if hi:
            result = result + basis[j].scale(hi)
    return result + c[m]


def _substitute_2x(p: IntPoly) -> IntPoly:
    return IntPoly([c << i for i, c in enumerate(p.coeffs)])


@dataclass(frozen=True)
class PsiPoly:
    d: int
    poly: IntPoly

    @property
    def degree(self) -> int:
        return self.poly.degree

    def __str__(self) -> str:
        return f"Psi_{self.d}"


def _build_psi(d: int) -> IntPoly:
    if d == 1:
        return IntPoly([-2, 2])
    if d == 2:
        return IntPoly([2, 2])
    out = _substitute_2x(_fold_palindrome(cyclotomic(d)))
    half = totient(d) // 2
    if out.degree != half or out.lead != 1 << half:
        raise InternalInconsistency(f"psi({d}) has degree {out.degree}, lead {out.lead}")
    return out


def psi(d: int) -> PsiPoly:
    """``Psi_d`` tagged with its index."""
    _check_positive(d, "d")
    hit = _psi_cache.get(d)
    if hit is not None:
        return hit
    value = PsiPoly(d, _build_psi(d))
    with _cache_lock:
        return _psi_cache.setdefault(d, value)


def check_psi_entry(d: int, poly: IntPoly) -> str | None:
    """Reason ``poly`` cannot be ``psi(d)`` judged by its shape, or None.

    Checks degree and leading coefficient; for ``d > 2`` also that
    ``cos(2*pi/d)`` is numerically a root.
    """
    if d <= 2:
        expected = IntPoly([-2, 2]) if d == 1 else IntPoly([2, 2])
        return None if poly == expected else f"expected {list(expected.coeffs)}"
    half = totient(d) // 2
    if poly.degree != half:
        return f"degree {poly.degree}, expected {half}"
    if poly.lead != 1 << half:
        return f"leading coefficient {poly.lead}, expected 2^{half}"
    if not root_residual_ok(poly, math.cos(2 * math.pi / d)):
        return f"cos(2pi/{d}) is not a root"
    return None


def seed_psi(d: int, poly: IntPoly) -> None:
    """Pre-populate the cache (e.g. from a cache file) after validating shape."""
    _check_positive(d, "d")
    reason = check_psi_entry(d, poly)
    if reason:
        raise ValueError(f"psi({d}): {reason}")
    with _cache_lock:
        _psi_cache.setdefault(d, PsiPoly(d, poly))


def cached_psi() -> dict[int, PsiPoly]:
    with _cache_lock:
        return dict(sorted(_psi_cache.items()))


def clear_caches() -> None:
    with _cache_lock:
        _cyclotomic_cache.clear()
        _psi_cache.clear()


# Residual policy for a double-precision root x~ = fl(cos theta):
#   |p(x~)| <= rtol * sum |c_i| |x~|^i  +  4 eps * sum i |c_i| |x~|^(i-1)
# The first term is Horner's relative error, the second the effect of the
# (<= 1 ulp) rounding of the root itself, which dominates when x~ ~ 0.
ROOT_RTOL = 1e-6


def root_residual_ok(p: IntPoly, t: float, rtol: float = ROOT_RTOL) -> bool:
    at = abs(t)
    slope = 0.0
    for i in range(len(p.coeffs) - 1, 0, -1):
        slope = slope * at + i * abs(float(p.coeffs[i]))
    allowed = rtol * abs_eval_bound(p, t) + 4 * sys.float_info.epsilon * slope
    return abs(eval_real(p, t)) <= allowed


@dataclass(frozen=True)
class RootSpec:
    """Root ``cos(2*pi*k/d)`` of ``psi(d)``."""

    d: int
    k: int

    def __post_init__(self):
        _check_positive(self.d, "d")
        _check_positive(self.k, "k")
        if self.d > 2 and not (math.gcd(self.k, self.d) == 1 and 2 * self.k < self.d):
            raise ValueError(f"k={self.k} is not coprime to d={self.d} and below d/2")
        if self.d <= 2 and self.k != 1:
            raise ValueError("d in {1, 2} takes k = 1")

    @property
    def theta(self) -> float:
        return 2 * math.pi * self.k / self.d

    @property
    def value(self) -> float:
        return math.cos(self.theta)


def psi_roots(d: int) -> list[RootSpec]:
    """Roots of ``psi(d)``: k coprime to d with ``1 <= k < d/2``."""
    _check_positive(d, "d")
    if d <= 2:
        return [RootSpec(d, 1)]
    return [RootSpec(d, k) for k in range(1, (d + 1) // 2) if math.gcd(k, d) == 1]
