"""Exact arithmetic for Laurent polynomials and truncated Laurent series in q.

Coefficients are plain Python integers, so all arithmetic is exact with
unbounded magnitude.  Two value types are provided:

* :class:`LaurentPoly` -- a finite Laurent polynomial, stored densely as a
  lowest exponent plus a coefficient tuple.  An exact ring element.
* :class:`QSeries` -- a Laurent series truncated at an inclusive ``order``:
  every coefficient of ``q^e`` with ``e <= order`` is exact, coefficients
  above ``order`` are unknown.

Both types are immutable and safe to share across threads.  The formal
variable q is never evaluated at a number; it exists only through exponents.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


class NotInvertibleError(ArithmeticError):
    """Series inversion requires the lowest known coefficient to be +1 or -1."""


class OrderTooHighError(ValueError):
    """A comparison was requested beyond the known truncation order."""


def _nonzero_count(coeffs: Sequence[int]) -> int:
    return sum(1 for c in coeffs if c)


def _convolve(a: Sequence[int], b: Sequence[int], length: int) -> list[int]:
    """Plain convolution of coefficient lists, keeping the first ``length`` slots.

    Iterates over the operand with fewer nonzero entries; the inner loop is a
    slice-wise list comprehension, which is the fastest pure-Python form.
    """
    out = [0] * length
    if length == 0 or not a or not b:
        return out
    if _nonzero_count(a) > _nonzero_count(b):
        a, b = b, a
    for i, ca in enumerate(a):
        if i >= length:
            break
        if not ca:
            continue
        chunk = b[: length - i]
        out[i : i + len(chunk)] = [
            u + ca * v for u, v in zip(out[i : i + len(chunk)], chunk)
        ]
    return out


@dataclass(frozen=True)
class LaurentPoly:
    """A Laurent polynomial over the integers.

    ``coeffs[i]`` is the coefficient of ``q^(min_exp + i)``.  Instances are
    normalized on construction: a nonzero polynomial has nonzero first and
    last coefficients, and the zero polynomial is ``(0, ())``.

    >>> LaurentPoly(0, (1, 1))
    LaurentPoly('1 + q')
    >>> LaurentPoly(-1, (0, 0, 3))
    LaurentPoly('3q')
    >>> LaurentPoly(2, (0,))
    LaurentPoly('0')
    """

    min_exp: int
    coeffs: tuple[int, ...]

    def __init__(self, min_exp: int = 0, coeffs: Sequence[int] = ()):
        lo, hi = 0, len(coeffs)
        while lo < hi and coeffs[lo] == 0:
            lo += 1
        while lo < hi and coeffs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            object.__setattr__(self, "min_exp", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "min_exp", min_exp + lo)
            object.__setattr__(self, "coeffs", tuple(coeffs[lo:hi]))

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Highest exponent with a nonzero coefficient (-1 + min_exp if zero)."""
        return self.min_exp + len(self.coeffs) - 1

    def coefficient(self, exponent: int) -> int:
        """The exact coefficient of ``q^exponent``."""
        i = exponent - self.min_exp
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    # -- ring operations --------------------------------------------------

    def __add__(self, other: int | LaurentPoly) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly(0, (other,))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.degree, other.degree)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.min_exp + i - lo] += c
        for i, c in enumerate(other.coeffs):
            out[other.min_exp + i - lo] += c
        return LaurentPoly(lo, out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.min_exp, tuple(-c for c in self.coeffs))

    def __sub__(self, other: int | LaurentPoly) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly(0, (other,))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int | LaurentPoly) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: int | LaurentPoly) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly(self.min_exp, tuple(c * other for c in self.coeffs))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return LaurentPoly()
        length = len(self.coeffs) + len(other.coeffs) - 1
        out = _convolve(self.coeffs, other.coeffs, length)
        return LaurentPoly(self.min_exp + other.min_exp, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative powers of a general Laurent polynomial")
        result = LaurentPoly(0, (1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shifted(self, k: int) -> LaurentPoly:
        """Multiply by ``q^k`` (shift every exponent by ``k``)."""
        if self.is_zero():
            return self
        return LaurentPoly(self.min_exp + k, self.coeffs)

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        return _format_terms(self.min_exp, self.coeffs)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"


def _format_terms(min_exp: int, coeffs: Sequence[int]) -> str:
    """Sum notation, ascending exponents: ``1 + q + 2q^2``, ``q^-1 - q``."""
    parts: list[str] = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        e = min_exp + i
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "q" if e == 1 else f"q^{e}"
            body = var if mag == 1 else f"{mag}{var}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


#: The formal variable q as a polynomial, for building expressions in code.
Q = LaurentPoly(1, (1,))

#: The constant polynomial 1.
ONE = LaurentPoly(0, (1,))


def monomial(c: int, k: int) -> LaurentPoly:
    """The monomial ``c * q^k`` (the zero polynomial when ``c == 0``)."""
    return LaurentPoly(k, (c,))


def poly_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact sum of two Laurent polynomials."""
    return a + b


def poly_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact product of two Laurent polynomials."""
    return a * b


def poly_first_mismatch(
    a: LaurentPoly, b: LaurentPoly
) -> tuple[int, int, int] | None:
    """Smallest exponent where two polynomials differ, with both coefficients."""
    if a == b:
        return None
    lo = min(a.min_exp, b.min_exp)
    hi = max(a.degree, b.degree)
    for e in range(lo, hi + 1):
        ca, cb = a.coefficient(e), b.coefficient(e)
        if ca != cb:
            return (e, ca, cb)
    return None


@dataclass(frozen=True)
class QSeries:
    """A Laurent series truncated at an inclusive order.

    ``coeffs`` covers exponents ``min_exp .. order``; exponents below
    ``min_exp`` are exactly zero and exponents above ``order`` are unknown.
    Normalization strips leading zeros (raising ``min_exp``), so a nonzero
    series has ``coeffs[0] != 0``; the zero series has ``min_exp == order + 1``
    and an empty tuple.
    """

    order: int
    min_exp: int
    coeffs: tuple[int, ...]

    def __init__(self, order: int, min_exp: int, coeffs: Sequence[int] = ()):
        if len(coeffs) != order - min_exp + 1:
            raise ValueError(
                f"coefficient window mismatch: {len(coeffs)} entries for "
                f"exponents {min_exp}..{order}"
            )
        lo = 0
        while lo < len(coeffs) and coeffs[lo] == 0:
            lo += 1
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "min_exp", min_exp + lo)
        object.__setattr__(self, "coeffs", tuple(coeffs[lo:]))

    @classmethod
    def zero(cls, order: int) -> QSeries:
        """The zero series, known exactly up to ``order``."""
        return cls(order, order + 1, ())

    @classmethod
    def one(cls, order: int) -> QSeries:
        """The constant series 1, known exactly up to ``order``."""
        return poly_to_series(ONE, order)

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        """True when no nonzero coefficient is known (all known terms vanish)."""
        return not self.coeffs

    def coefficient(self, exponent: int) -> int:
        """The coefficient of ``q^exponent``; requires ``exponent <= order``."""
        if exponent > self.order:
            raise OrderTooHighError(
                f"coefficient of q^{exponent} unknown beyond order {self.order}"
            )
        i = exponent - self.min_exp
        return self.coeffs[i] if i >= 0 else 0

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: QSeries) -> QSeries:
        if not isinstance(other, QSeries):
            return NotImplemented
        order = min(self.order, other.order)
        lo = min(self.min_exp, other.min_exp, order + 1)
        out = [0] * (order - lo + 1)
        for i, c in enumerate(self.coeffs):
            e = self.min_exp + i
            if e > order:
                break
            out[e - lo] += c
        for i, c in enumerate(other.coeffs):
            e = other.min_exp + i
            if e > order:
                break
            out[e - lo] += c
        return QSeries(order, lo, out)

    def __neg__(self) -> QSeries:
        return QSeries(self.order, self.min_exp, tuple(-c for c in self.coeffs))

    def __sub__(self, other: QSeries) -> QSeries:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: QSeries | LaurentPoly | int) -> QSeries:
        if isinstance(other, int):
            if other == 0:
                return QSeries.zero(self.order)
            return QSeries(
                self.order, self.min_exp, tuple(c * other for c in self.coeffs)
            )
        if isinstance(other, LaurentPoly):
            return self.times_poly(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        # Tightest sound truncation: a term q^(i+j) is exact only when both
        # factor windows cover it, i.e. i <= a.order and j <= b.order.
        order = min(self.order + other.min_exp, other.order + self.min_exp)
        lo = self.min_exp + other.min_exp
        if lo > order:
            return QSeries.zero(order)
        out = _convolve(self.coeffs, other.coeffs, order - lo + 1)
        return QSeries(order, lo, out)

    __rmul__ = __mul__

    def times_poly(self, p: LaurentPoly) -> QSeries:
        """Multiply by an exact polynomial.

        Unlike series-series multiplication, ``p`` is known at every order, so
        the result is exact up to ``order + p.min_exp``.
        """
        if p.is_zero():
            return QSeries.zero(self.order + p.min_exp)
        order = self.order + p.min_exp
        lo = self.min_exp + p.min_exp
        if lo > order:
            return QSeries.zero(order)
        out = _convolve(self.coeffs, p.coeffs, order - lo + 1)
        return QSeries(order, lo, out)

    def truncated(self, order: int) -> QSeries:
        """Restrict knowledge to a lower order (never extends)."""
        if order > self.order:
            raise OrderTooHighError(
                f"cannot extend a series of order {self.order} to {order}"
            )
        if order == self.order:
            return self
        keep = order - self.min_exp + 1
        if keep <= 0:
            return QSeries.zero(order)
        return QSeries(order, self.min_exp, self.coeffs[:keep])

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        terms = _format_terms(self.min_exp, self.coeffs)
        tail = f"O(q^{self.order + 1})"
        return tail if self.is_zero() else f"{terms} + {tail}"

    def __repr__(self) -> str:
        return f"QSeries('{self}')"


def poly_to_series(a: LaurentPoly, order: int) -> QSeries:
    """Truncate an exact polynomial at ``order`` (terms above are discarded)."""
    if a.is_zero() or a.min_exp > order:
        return QSeries.zero(order)
    window = a.coeffs[: order - a.min_exp + 1]
    pad = (order - a.min_exp + 1) - len(window)
    return QSeries(order, a.min_exp, window + (0,) * pad)


def series_add(a: QSeries, b: QSeries) -> QSeries:
    """Exact sum; the result order is the smaller of the operand orders."""
    return a + b


def series_mul(a: QSeries, b: QSeries) -> QSeries:
    """Exact product up to ``min(a.order + b.min_exp, b.order + a.min_exp)``."""
    return a * b


def series_inverse(a: QSeries) -> QSeries:
    """Multiplicative inverse of a series whose lowest coefficient is a unit.

    Writes ``a = u q^s (1 + higher terms)`` with ``u = +-1`` and solves the
    convolution triangularly.  The result has ``min_exp = -s`` and
    ``order = a.order - 2 s``, so ``a * inverse(a) == 1`` up to their common
    product order.
    """
    if a.is_zero():
        raise NotInvertibleError("the zero series has no inverse")
    unit = a.coeffs[0]
    if unit not in (1, -1):
        raise NotInvertibleError(
            f"lowest coefficient {unit} at q^{a.min_exp} is not a unit"
        )
    s = a.min_exp
    rel = a.coeffs  # relative coefficients, rel[0] = unit
    n = len(rel)  # a.order - s + 1 slots
    inv = [0] * n
    inv[0] = unit
    for k in range(1, n):
        acc = 0
        for j in range(1, k + 1):
            c = rel[j]
            if c:
                acc += c * inv[k - j]
        inv[k] = -unit * acc
    return QSeries(a.order - 2 * s, -s, inv)


def series_first_mismatch(
    a: QSeries, b: QSeries, up_to: int
) -> tuple[int, int, int] | None:
    """Smallest exponent ``e <= up_to`` where the coefficients differ.

    Returns ``(e, a_coeff, b_coeff)``, or None when the series agree on every
    exponent up to ``up_to``.
    """
    if up_to > min(a.order, b.order):
        raise OrderTooHighError(
            f"comparison up to q^{up_to} exceeds known orders "
            f"({a.order}, {b.order})"
        )
    for e in range(min(a.min_exp, b.min_exp), up_to + 1):
        ca, cb = a.coefficient(e), b.coefficient(e)
        if ca != cb:
            return (e, ca, cb)
    return None
