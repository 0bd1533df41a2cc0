"""The Rogers-Ramanujan products and the Garrett-Ismail-Stanton identity.

The two classical Rogers-Ramanujan products,

    P1 = prod 1 / ((1 - q^(5n+1)) (1 - q^(5n+4))),
    P2 = prod 1 / ((1 - q^(5n+2)) (1 - q^(5n+3))),

are the limits of the Schur polynomial families ``D_m`` and ``E_m``.  The
Garrett-Ismail-Stanton identity expresses the shifted sum

    sum_{n>=0} q^(n^2 + mn) / ((1-q)...(1-q^n))

as the signed combination

    (-1)^m q^(-binomial(m, 2)) (E_{m-2} P1 - D_{m-2} P2),

which at m = 0 and m = 1 degenerates (via ``D_{-2} = 0`` and ``E_{-1} = 0``)
to the two classical identities.  Everything here is verified coefficient by
coefficient to a requested truncation order, with zero tolerance.
"""

from __future__ import annotations

import threading
from math import comb

from .determinant import schur_x1_series
from .reports import CheckSuiteResult, VerificationReport, compare_series
from .schur import schur_D, schur_E
from .series import (
    LaurentPoly,
    QSeries,
    monomial,
    poly_to_series,
    series_inverse,
)

__all__ = [
    "rr_product_first",
    "rr_product_second",
    "gis_lhs",
    "gis_rhs",
    "verify_gis",
    "verify_schur_limits",
    "VerificationReport",
    "CheckSuiteResult",
]


# Highest-order product computed so far, per residue class.  A factor with
# k > order is 1 + O(q^(order+1)), so a longer product truncates to exactly
# the shorter one; requests at or below the cached order are served by
# truncation.  The lock only guards the dict; values are immutable.
_product_lock = threading.Lock()
_product_cache: dict[frozenset[int], QSeries] = {}


def _inverse_factor_product(residues: frozenset[int], order: int) -> QSeries:
    """Product of ``1/(1 - q^k)`` over ``k <= order`` with ``k mod 5`` allowed."""
    with _product_lock:
        cached = _product_cache.get(residues)
    if cached is not None and cached.order >= order:
        return cached.truncated(order)
    acc = QSeries.one(order)
    for k in range(1, order + 1):
        if k % 5 in residues:
            factor = LaurentPoly(0, (1,)) - monomial(1, k)
            acc = acc * series_inverse(poly_to_series(factor, order))
    with _product_lock:
        held = _product_cache.get(residues)
        if held is None or held.order < order:
            _product_cache[residues] = acc
    return acc


def rr_product_first(order: int) -> QSeries:
    """The product over exponents congruent to 1 or 4 mod 5, truncated.

    Generating function of partitions into such parts.
    """
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    return _inverse_factor_product(frozenset({1, 4}), order)


def rr_product_second(order: int) -> QSeries:
    """The product over exponents congruent to 2 or 3 mod 5, truncated."""
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    return _inverse_factor_product(frozenset({2, 3}), order)


def gis_lhs(m: int, order: int) -> QSeries:
    """Sum side ``sum q^(n^2+mn) / ((1-q)...(1-q^n))``, truncated at ``order``.

    Identical by construction to :func:`qschur.determinant.schur_x1_series`;
    this is the identity-facing name.
    """
    return schur_x1_series(m, order)


def gis_rhs(m: int, order: int) -> QSeries:
    """Product side ``(-1)^m q^(-binomial(m,2)) (E_{m-2} P1 - D_{m-2} P2)``.

    The leading monomial shifts exponents down by ``binomial(m, 2)`` while the
    polynomial factors shift information up by at most their degree, so the
    two products are computed at a padded working order that keeps the result
    exact through ``order``.
    """
    if m < 0 or order < 0:
        raise ValueError(f"gis_rhs requires m, order >= 0, got ({m}, {order})")
    e_poly = schur_E(m - 2)
    d_poly = schur_D(m - 2)
    shift = comb(m, 2)
    working = order + shift + max(e_poly.degree, d_poly.degree, 0)
    first = rr_product_first(working) * e_poly
    second = rr_product_second(working) * d_poly
    sign = -1 if m % 2 else 1
    combined = (first - second) * monomial(sign, -shift)
    return combined.truncated(order)


def verify_gis(m: int, order: int) -> VerificationReport:
    """Compare both sides of the identity coefficient by coefficient."""
    lhs = gis_lhs(m, order)
    rhs = gis_rhs(m, order)
    return compare_series("gis", {"m": m, "order": order}, lhs, rhs, order)


def verify_schur_limits(M: int) -> CheckSuiteResult:
    """Check that ``D_M`` and ``E_M`` match their limit products.

    Successive polynomials differ by ``q^M X_{M-2}``, so ``X_M`` already
    agrees with its limit on every exponent ``<= M - 1``; that finite window
    is what gets compared, for each of the two families.
    """
    if M < 2:
        raise ValueError(f"verify_schur_limits requires M >= 2, got {M}")
    order = M - 1
    reports = (
        compare_series(
            "schur-limit-D",
            {"M": M, "order": order},
            poly_to_series(schur_D(M), order),
            rr_product_first(order),
            order,
        ),
        compare_series(
            "schur-limit-E",
            {"M": M, "order": order},
            poly_to_series(schur_E(M), order),
            rr_product_second(order),
            order,
        ),
    )
    return CheckSuiteResult(reports=reports)
