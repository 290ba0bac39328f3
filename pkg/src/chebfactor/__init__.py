"""Exact Chebyshev polynomials of kinds two to six and their psi-factorizations."""

from .chebyshev import ChebKind, gen, gen_G, gen_U, gen_V, gen_W, gen_XY
from .factor import (
    Factorization,
    assign_root,
    factor_squared_minus_one,
    factor_variant,
    psi_divisor_scan,
    psi_split,
    verify,
)
from .poly import IntPoly, NotDivisible, RatPoly, ZeroPolynomial, clear_denominators, div_exact
from .psi import PsiPoly, RootSpec, cyclotomic, divisors, psi, psi_roots, totient

__version__ = "0.1.0"
