"""The finite Schur determinant and the expansion coefficients of its limit.

The finite determinant ``Schur_n`` is the ``(n+1) x (n+1)`` tridiagonal
determinant with unit diagonal, ``-1`` subdiagonal, and superdiagonal entry
``q^(k+m)`` in row ``k`` (1-based).  Expanding along the last row gives the
three-term recursion

    Schur_n = Schur_{n-1} + q^(n+m) Schur_{n-2},    Schur_0 = 1,
                                                    Schur_1 = 1 + q^(1+m),

which is how :func:`schur_finite` computes it; :func:`schur_finite_direct`
evaluates the same determinant by generic cofactor expansion as an
independent oracle.

Expanding the *infinite* determinant along its first column instead yields,
for the coefficients ``a_n`` of its grading by superdiagonal entries used,
``(1 - q^n) a_n = q^(2n-1+m) a_{n-1}`` and hence the closed form

    a_n = q^(n^2 + mn) / ((1-q)(1-q^2)...(1-q^n)).

The specialization summing all ``a_n`` (:func:`schur_x1_series`) is the
common value both identity sides converge to.
"""

from __future__ import annotations

import threading

from .reports import Mismatch, VerificationReport, compare_series
from .series import (
    LaurentPoly,
    QSeries,
    monomial,
    poly_first_mismatch,
    poly_to_series,
    series_inverse,
)
from .schur import lambda_coeff, mu_coeff, schur_D, schur_E

__all__ = [
    "TooLargeError",
    "DIRECT_ORACLE_MAX_N",
    "schur_finite",
    "schur_finite_direct",
    "schur_coefficient",
    "check_coefficient_recurrence",
    "schur_x1_series",
    "decompose",
]


class TooLargeError(ValueError):
    """The direct cofactor-expansion oracle refuses matrices past its bound."""


#: Largest n accepted by :func:`schur_finite_direct`.
DIRECT_ORACLE_MAX_N = 14

_finite_tables: dict[int, list[LaurentPoly]] = {}
_finite_lock = threading.Lock()


def schur_finite(n: int, m: int) -> LaurentPoly:
    """``Schur_n`` for shift ``m``, via the three-term recursion (memoized per m)."""
    if n < 0 or m < 0:
        raise ValueError(f"schur_finite requires n, m >= 0, got ({n}, {m})")
    with _finite_lock:
        table = _finite_tables.setdefault(
            m, [LaurentPoly(0, (1,)), LaurentPoly(0, (1,)) + monomial(1, 1 + m)]
        )
        while len(table) <= n:
            k = len(table)
            table.append(table[k - 1] + monomial(1, k + m) * table[k - 2])
        return table[n]


def _det_cofactor(rows: list[list[LaurentPoly]]) -> LaurentPoly:
    """Determinant by cofactor expansion along the first row, skipping zeros.

    Generic over any square matrix of polynomials; exponential in the worst
    case, which is why the public oracle caps its input size.
    """
    if len(rows) == 1:
        return rows[0][0]
    total = LaurentPoly()
    for j, entry in enumerate(rows[0]):
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        term = entry * _det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def schur_finite_direct(n: int, m: int) -> LaurentPoly:
    """``Schur_n`` evaluated straight from the matrix, no three-term recursion.

    Builds the explicit ``(n+1) x (n+1)`` tridiagonal matrix and runs generic
    cofactor expansion over the polynomial ring.  Oracle use only: cost grows
    quickly, so ``n`` is capped at :data:`DIRECT_ORACLE_MAX_N`.
    """
    if n < 0 or m < 0:
        raise ValueError(f"schur_finite_direct requires n, m >= 0, got ({n}, {m})")
    if n > DIRECT_ORACLE_MAX_N:
        raise TooLargeError(
            f"direct determinant oracle is capped at n <= {DIRECT_ORACLE_MAX_N}, "
            f"got n = {n}"
        )
    size = n + 1
    zero, one = LaurentPoly(), LaurentPoly(0, (1,))
    rows = [[zero] * size for _ in range(size)]
    for i in range(size):
        rows[i][i] = one
        if i + 1 < size:
            rows[i + 1][i] = -one
            rows[i][i + 1] = monomial(1, (i + 1) + m)  # row i+1, 1-based
    return _det_cofactor(rows)


def schur_coefficient(n: int, m: int, order: int) -> QSeries:
    """The expansion coefficient ``a_n = q^(n^2+mn) / ((1-q)...(1-q^n))``.

    Truncated at ``order``; built as the monomial times the product of the
    geometric inverses of ``1 - q^j``.
    """
    if n < 0 or m < 0:
        raise ValueError(f"schur_coefficient requires n, m >= 0, got ({n}, {m})")
    acc = QSeries.one(order)
    for j in range(1, n + 1):
        factor = LaurentPoly(0, (1,)) - monomial(1, j)
        acc = acc * series_inverse(poly_to_series(factor, order))
    return (acc * monomial(1, n * n + m * n)).truncated(order)


def check_coefficient_recurrence(n: int, m: int, order: int) -> VerificationReport:
    """Verify ``(1 - q^n) a_n = q^(2n-1+m) a_{n-1}`` up to ``order``.

    Both sides are computed from the closed form for the coefficients, so
    this ties the closed form back to the first-column expansion relation
    it was iterated from.
    """
    if n < 1:
        raise ValueError(f"coefficient recurrence needs n >= 1, got {n}")
    lhs = schur_coefficient(n, m, order) * (LaurentPoly(0, (1,)) - monomial(1, n))
    rhs = schur_coefficient(n - 1, m, order) * monomial(1, 2 * n - 1 + m)
    return compare_series(
        "coefficient-recurrence",
        {"n": n, "m": m, "order": order},
        lhs.truncated(order),
        rhs.truncated(order),
        order,
    )


def schur_x1_series(m: int, order: int) -> QSeries:
    """Sum of all ``a_n`` truncated at ``order``.

    Only terms with ``n^2 + mn <= order`` contribute: every later ``a_n``
    has its lowest exponent above the truncation.
    """
    if m < 0 or order < 0:
        raise ValueError(f"schur_x1_series requires m, order >= 0, got ({m}, {order})")
    # Same construction as schur_coefficient, but the inverse-Pochhammer
    # product is extended one factor at a time and shared across terms.
    total = QSeries.one(order)  # n = 0 term
    poch_inv = QSeries.one(order)
    n = 1
    while n * n + m * n <= order:
        factor = LaurentPoly(0, (1,)) - monomial(1, n)
        poch_inv = poch_inv * series_inverse(poly_to_series(factor, order))
        total = total + (poch_inv * monomial(1, n * n + m * n)).truncated(order)
        n += 1
    return total


def decompose(n: int, m: int) -> VerificationReport:
    """Check ``Schur_n = lambda(m) D_{n+m} + mu(m) E_{n+m}`` exactly.

    The right side is assembled in Laurent arithmetic; the combination must
    come out to a genuine polynomial (no negative exponents survive) equal to
    the recursion-built determinant.
    """
    if n < 0 or m < 0:
        raise ValueError(f"decompose requires n, m >= 0, got ({n}, {m})")
    lhs = schur_finite(n, m)
    rhs = lambda_coeff(m) * schur_D(n + m) + mu_coeff(m) * schur_E(n + m)
    # Equality with lhs (a polynomial with constant term 1) already implies no
    # negative exponent survives; any stray q^(-k) term shows up as a mismatch.
    found = poly_first_mismatch(lhs, rhs)
    mismatch = None if found is None else Mismatch(*found)
    return VerificationReport(
        label="decomposition", params={"n": n, "m": m}, mismatch=mismatch
    )
