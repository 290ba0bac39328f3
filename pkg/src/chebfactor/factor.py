"""Psi-factorizations of V_n**2 - 1, W_n**2 - 1, V_n +/- 1 and W_n +/- 1.

Each factor ``psi(d)`` comes from a divisor ``d`` of ``2n`` or of ``2n + 2``.
The parity of the quotient decides whether it belongs to ``poly + 1`` or
``poly - 1``. Everything returned here can be checked by exact expansion
with :func:`verify`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from functools import reduce
from operator import mul

from . import chebyshev
from .poly import IntPoly, NotDivisible, div_exact
from .psi import PsiPoly, RootSpec, divisors, psi, totients_upto


class PreconditionViolation(ValueError):
    pass


class Source(str, enum.Enum):
    OF_2N = "2n"
    OF_2N_PLUS_2 = "2n+2"
    SPECIAL = "special"


class Variant(str, enum.Enum):
    PLUS = "plus"
    MINUS = "minus"
    SQUARE = "square"

    @property
    def sign(self) -> int:
        return {"plus": 1, "minus": -1}[self.value]


@dataclass(frozen=True)
class DivisorTerm:
    """Divisor ``d`` of ``2n`` or ``2n + 2`` with its quotient."""

    d: int
    source: Source
    quotient: int

    @property
    def odd(self) -> bool:
        return self.quotient % 2 == 1

    @property
    def parity(self) -> str:
        return "odd" if self.odd else "even"


@dataclass(frozen=True)
class PsiFactor:
    psi: PsiPoly
    term: DivisorTerm | None = None

    @property
    def d(self) -> int:
        return self.psi.d

    @property
    def source(self) -> Source:
        return self.term.source if self.term else Source.SPECIAL

    def __post_init__(self):
        if self.term is not None and self.term.d != self.psi.d:
            raise ValueError(f"term index {self.term.d} != psi index {self.psi.d}")


@dataclass(frozen=True)
class Factorization:
    kind: str
    n: int
    variant: Variant
    factors: tuple[PsiFactor, ...]
    expanded: IntPoly

    @property
    def indices(self) -> list[int]:
        return [f.d for f in self.factors]

    def __str__(self) -> str:
        return " * ".join(str(f.psi) for f in self.factors) or "1"


def target(kind: str, n: int, variant: Variant | str) -> IntPoly:
    """The polynomial a factorization claims, generated from scratch."""
    variant = Variant(variant)
    p = chebyshev.gen(kind, n)
    if variant is Variant.SQUARE:
        return p * p - 1
    return p + variant.sign


def _check_args(kind: str, n: int) -> str:
    kind = chebyshev.ChebKind(kind).value
    if kind not in ("V", "W"):
        raise ValueError(f"kind must be V or W, got {kind}")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    return kind


def divisor_terms(n: int, min_2n: int = 3) -> list[DivisorTerm]:
    """Terms for ``d | 2n, d >= min_2n`` then ``d | 2n + 2, d > 2``."""
    terms = [DivisorTerm(d, Source.OF_2N, 2 * n // d) for d in divisors(2 * n) if d >= min_2n]
    terms += [DivisorTerm(d, Source.OF_2N_PLUS_2, (2 * n + 2) // d)
              for d in divisors(2 * n + 2) if d > 2]
    return terms


def _canonical(factors: list[PsiFactor]) -> tuple[PsiFactor, ...]:
    order = {Source.SPECIAL: 0, Source.OF_2N: 1, Source.OF_2N_PLUS_2: 2}
    return tuple(sorted(factors, key=lambda f: (f.d, order[f.source])))


def _expand(factors) -> IntPoly:
    return reduce(mul, (f.psi.poly for f in factors), IntPoly.one())


def factor_squared_minus_one(kind: str, n: int) -> Factorization:
    """``V_n**2 - 1`` (with ``psi(1)``) or ``W_n**2 - 1`` (with ``psi(2)``)."""
    kind = _check_args(kind, n)
    special = PsiFactor(psi(1 if kind == "V" else 2))
    factors = [special] + [PsiFactor(psi(t.d), t) for t in divisor_terms(n)]
    factors = _canonical(factors)
    return Factorization(kind, n, Variant.SQUARE, factors, _expand(factors))


def in_plus_factor(kind: str, term: DivisorTerm) -> bool:
    """Whether ``psi(term.d)`` divides ``kind_n + 1`` (else ``kind_n - 1``).

    V: odd quotients of both 2n and 2n+2 go to the +1 side.
    W: odd quotients of 2n and even quotients of 2n+2 go to the +1 side.
    """
    if kind == "W" and term.source is Source.OF_2N_PLUS_2:
        return not term.odd
    return term.odd


def factor_variant(kind: str, n: int, sign: int | str | Variant) -> Factorization:
    """Factor ``V_n + sign`` or ``W_n + sign`` into distinct psi's."""
    kind = _check_args(kind, n)
    if isinstance(sign, int) and not isinstance(sign, bool):
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign}")
        variant = Variant.PLUS if sign == 1 else Variant.MINUS
    else:
        variant = Variant(sign)
        if variant is Variant.SQUARE:
            return factor_squared_minus_one(kind, n)
    plus = variant is Variant.PLUS
    factors = []
    if kind == "V" and not plus:
        factors.append(PsiFactor(psi(1)))
    # W admits d = 2 among divisors of 2n; V does not.
    for t in divisor_terms(n, min_2n=3 if kind == "V" else 2):
        if in_plus_factor(kind, t) == plus:
            factors.append(PsiFactor(psi(t.d), t))
    factors = _canonical(factors)
    return Factorization(kind, n, variant, factors, _expand(factors))


def assign_root(kind: str, n: int, root: RootSpec, source: Source | str) -> int:
    """Value (+1 or -1) of ``kind_n`` at the root ``cos(2*pi*k/d)``.

    ``psi(d)`` then divides ``kind_n - value``. The value depends only on the
    parity of the quotient ``a = 2n/d`` or ``b = (2n+2)/d``, because ``a*k``
    and ``a`` have the same parity for admissible ``k``:
    ``V_n = cos(pi a)``, ``V_n = cos(pi b)``, ``W_n = cos(pi a)``,
    ``W_n = -cos(pi b)``. ``Source.SPECIAL`` covers ``psi(1)`` for V
    (``V_n(1) = 1``) and ``psi(2)`` for W (``W_n(-1) = (-1)**n``).
    """
    kind = _check_args(kind, n)
    source = Source(source)
    d = root.d
    if source is Source.SPECIAL:
        if kind == "V" and d == 1:
            return 1
        if kind == "W" and d == 2:
            return -1 if n % 2 else 1
        raise PreconditionViolation(f"no special root d={d} for {kind}")
    total = 2 * n if source is Source.OF_2N else 2 * n + 2
    if total % d:
        raise PreconditionViolation(f"{d} does not divide {total}")
    lowest = 1 if (kind == "W" and source is Source.OF_2N) else 2
    if d <= lowest:
        raise PreconditionViolation(f"d={d} not admissible for {kind}, source {source.value}")
    q = total // d
    value = -1 if q % 2 else 1
    if kind == "W" and source is Source.OF_2N_PLUS_2:
        value = -value
    return value


@dataclass
class VerifyReport:
    """Outcome of re-checking a factorization; failures are data."""

    checks: dict[str, bool] = field(default_factory=dict)
    details: dict[str, str] = field(default_factory=dict)
    product: IntPoly | None = None
    target: IntPoly | None = None

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def __bool__(self) -> bool:
        return self.ok


def verify(f: Factorization) -> VerifyReport:
    """Re-expand ``f`` and compare with an independently generated target."""
    report = VerifyReport()
    want = target(f.kind, f.n, f.variant)
    got = _expand(f.factors)
    report.product, report.target = got, want

    def check(name: str, ok: bool, detail: str = "") -> None:
        report.checks[name] = ok
        if not ok and detail:
            report.details[name] = detail

    check("product_matches_target", got == want, "expansion of the factors differs from the target")
    check("expanded_field", f.expanded == want, "stored expansion differs from the target")
    idx = f.indices
    check("distinct_indices", len(set(idx)) == len(idx), f"repeated indices in {idx}")
    check("psi_consistent", all(fac.psi == psi(fac.d) for fac in f.factors),
          "a factor is not the psi polynomial its index names")
    deg = sum(fac.psi.degree for fac in f.factors)
    check("degree", deg == want.degree, f"factor degrees sum to {deg}, target has {want.degree}")
    lead = reduce(mul, (fac.psi.poly.lead for fac in f.factors), 1)
    check("leading_coefficient", lead == want.lead, f"{lead} != {want.lead}")
    return report


def tamper(f: Factorization, old: int, new: int) -> Factorization:
    """Copy of ``f`` with factor ``psi(old)`` replaced by ``psi(new)``."""
    factors = tuple(PsiFactor(psi(new), None) if fac.d == old else fac for fac in f.factors)
    return replace(f, factors=factors)


def scan_limit(degree: int) -> int:
    """Largest ``d`` that can have ``deg psi(d) <= degree``.

    ``phi(d) >= sqrt(d/2)`` for every ``d``, so ``phi(d)/2 <= D`` forces
    ``d <= 8 D**2``.
    """
    return max(2, 8 * degree * degree)


def _candidates(degree: int) -> list[int]:
    limit = scan_limit(degree)
    phi = totients_upto(limit)
    return [d for d in range(1, limit + 1) if (1 if d <= 2 else phi[d] // 2) <= degree]


def _divides(p: IntPoly, q: IntPoly) -> bool:
    # Leading and constant coefficients of a product multiply.
    if q.degree > p.degree or p.lead % q.lead:
        return False
    if q.coeffs[0] and p.coeffs[0] % q.coeffs[0]:
        return False
    try:
        div_exact(p, q)
    except NotDivisible:
        return False
    return True


def psi_divisor_scan(p: IntPoly) -> list[tuple[int, PsiPoly]]:
    """Every ``(d, psi(d))`` such that ``psi(d)`` divides ``p`` over the integers."""
    if p.is_zero():
        raise ValueError("psi_divisor_scan needs a nonzero polynomial")
    if p.degree < 1:
        return []
    out = []
    for d in _candidates(p.degree):
        q = psi(d)
        if _divides(p, q.poly):
            out.append((d, q))
    return out


@dataclass(frozen=True)
class SplitResult:
    """Psi-divisors of a polynomial, with multiplicity, and what is left."""

    divisors: tuple[int, ...]
    multiplicities: tuple[int, ...]
    residual: IntPoly

    @property
    def complete(self) -> bool:
        return self.residual == 1


def psi_split(p: IntPoly) -> SplitResult:
    """Divide out every psi divisor of ``p`` as often as it goes."""
    found = psi_divisor_scan(p)
    rest = p
    mults = []
    for _, q in found:
        k = 0
        while rest.degree >= q.degree:
            try:
                rest = div_exact(rest, q.poly)
            except NotDivisible:
                break
            k += 1
        mults.append(k)
    return SplitResult(tuple(d for d, _ in found), tuple(mults), rest)
