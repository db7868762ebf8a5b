"""Independent cross-checks for the character pipeline.

Everything here works straight from a multiplicity table or a character
polynomial and deliberately never touches the pole-decomposition modules,
so the two routes share no failure modes beyond the base ring.  Floating
point appears only in the quadrature check; all other arithmetic is exact.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .polyring import FactoredRational, LaurentPoly
from .rootsys import Weight, weight_diff, weight_scale
from .weightsys import MultiplicityTable

__all__ = [
    "GradedTruncation",
    "truncated_molien",
    "adams_symmetric",
    "hsym_character",
    "truncated_exterior",
    "tensor_char",
    "quadrature_check",
]


@dataclass(frozen=True)
class GradedTruncation:
    """Coefficients of z^0..z^degree_bound of a graded character series."""

    degree_bound: int
    coefficients: tuple[LaurentPoly, ...]

    def coefficient(self, n: int) -> LaurentPoly:
        return self.coefficients[n]


def _truncated_product(
    table: MultiplicityTable, n_max: int, factor_series
) -> GradedTruncation:
    if not isinstance(n_max, int) or n_max < 0:
        raise ValueError("truncation bound must be a non-negative integer")
    rank = table.rank
    acc = [LaurentPoly.one(rank)] + [LaurentPoly.zero(rank) for _ in range(n_max)]
    for mu in table.support():
        series = factor_series(mu, table.multiplicity(mu))
        out = [LaurentPoly.zero(rank) for _ in range(n_max + 1)]
        for degree, coeff_poly in enumerate(series):
            if coeff_poly.is_zero:
                continue
            for base in range(n_max + 1 - degree):
                if not acc[base].is_zero:
                    out[base + degree] = out[base + degree] + acc[base] * coeff_poly
        acc = out
    return GradedTruncation(degree_bound=n_max, coefficients=tuple(acc))


def truncated_molien(table: MultiplicityTable, n_max: int) -> GradedTruncation:
    """Expand prod_mu (1 - q^mu z)^(-m(mu)) through degree n_max in z.

    The degree-n coefficient is the character of the n-th symmetric power,
    obtained here purely by truncated geometric-series multiplication.
    """

    def geometric(mu: Weight, count: int):
        return [
            LaurentPoly.monomial(weight_scale(t, mu), comb(t + count - 1, t))
            for t in range(n_max + 1)
        ]

    return _truncated_product(table, n_max, geometric)


def truncated_exterior(table: MultiplicityTable, n_max: int) -> GradedTruncation:
    """Expand prod_mu (1 + q^mu z)^m(mu) through degree n_max in z."""

    def binomial_series(mu: Weight, count: int):
        return [
            LaurentPoly.monomial(weight_scale(t, mu), comb(count, t))
            for t in range(min(count, n_max) + 1)
        ]

    return _truncated_product(table, n_max, binomial_series)


def adams_symmetric(char_v: LaurentPoly, n: int) -> LaurentPoly:
    """Character of the n-th symmetric power via the Newton-style recursion.

    With psi_k the exponent-scaling operation e -> k*e, the characters h_t
    of the symmetric powers satisfy t*h_t = sum_(k=1..t) psi_k(char) h_(t-k).
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError("symmetric-power degree must be a non-negative integer")
    powers = [char_v.scale_exponents(k) for k in range(1, n + 1)]
    hs = [LaurentPoly.one(char_v.rank)]
    for t in range(1, n + 1):
        acc = LaurentPoly.zero(char_v.rank)
        for k in range(1, t + 1):
            acc = acc + powers[k - 1] * hs[t - k]
        h = acc * Fraction(1, t)
        if any(c.denominator != 1 for c in h.terms.values()):
            raise ArithmeticError("non-integral intermediate symmetric-power character")
        hs.append(h)
    return hs[n]


def hsym_character(weights: list[Weight], n: int) -> LaurentPoly:
    """Character of the n-th symmetric power of a multiplicity-free module.

    Plugs the weight monomials into the complete homogeneous symmetric
    polynomial identity h_n(x_1..x_k) = sum_i x_i^n / prod_(j!=i) (1 - x_j/x_i)
    and recovers the Laurent polynomial by exact division.
    """
    weights = [tuple(mu) for mu in weights]
    if len(set(weights)) != len(weights):
        raise ValueError("weights must be pairwise distinct (multiplicity-free module)")
    if not weights:
        raise ValueError("empty weight list")
    if not isinstance(n, int) or n < 0:
        raise ValueError("symmetric-power degree must be a non-negative integer")
    rank = len(weights[0])
    parts = [
        FactoredRational(
            LaurentPoly.monomial(weight_scale(n, mu)),
            [(weight_diff(nu, mu), 1) for j, nu in enumerate(weights) if j != i],
        )
        for i, mu in enumerate(weights)
    ]
    return FactoredRational.sum(parts, rank).as_laurent()


def tensor_char(char_v: LaurentPoly, n: int) -> LaurentPoly:
    """Character of the n-th tensor power: the n-th power of the character."""
    if not isinstance(n, int) or n < 0:
        raise ValueError("tensor-power degree must be a non-negative integer")
    return char_v**n


def quadrature_check(
    table: MultiplicityTable,
    mu: Weight,
    z,
    n_max: int,
    samples: int = 512,
) -> tuple[float, Fraction, float]:
    """Numeric check of the generating function sum_n z^n m_n(mu) at rank 1.

    The left side is the circle integral of q^(-mu) times the graded
    character, integrated by the trapezoid rule on `samples` uniform points
    (spectrally accurate for this smooth periodic integrand); the right
    side is the exact series truncated at n_max.  Returns (numeric value,
    exact truncated series, absolute gap).  The gap is dominated by the
    geometric tail of the series, so it shrinks as n_max grows while
    |z| <= 1/2 keeps the evaluation away from the unit radius of
    convergence.
    """
    if table.rank != 1:
        raise ValueError("quadrature check is implemented for rank 1 only")
    z = Fraction(z)
    if abs(z) > Fraction(1, 2):
        raise ValueError("|z| must be at most 1/2")
    mu = tuple(mu)

    truncation = truncated_molien(table, n_max)
    series = Fraction(0)
    for n in range(n_max + 1):
        series += z**n * truncation.coefficient(n).coefficient(mu)

    weights = [(nu[0], table.multiplicity(nu)) for nu in table.support()]
    z_f = float(z)
    target = mu[0]
    total = 0j
    for t in range(samples):
        x = 2.0 * math.pi * t / samples
        value = 1.0 + 0j
        for exponent, count in weights:
            value *= (1.0 - cmath.exp(1j * exponent * x) * z_f) ** (-count)
        total += cmath.exp(-1j * target * x) * value
    numeric = (total / samples).real
    return numeric, series, abs(numeric - float(series))
