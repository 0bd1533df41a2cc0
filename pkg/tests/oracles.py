"""Brute-force combinatorial oracles used to check series coefficients.

Everything here counts integer partitions by recursive enumeration; no series
arithmetic is involved, so these values are independent of the code under
test.
"""

from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=None)
def partitions_max_part(n: int, k: int) -> int:
    """Number of partitions of ``n`` into parts each at most ``k``."""
    if n == 0:
        return 1
    if n < 0 or k <= 0:
        return 0
    return partitions_max_part(n - k, k) + partitions_max_part(n, k - 1)


@lru_cache(maxsize=None)
def partitions_residue_parts(n: int, max_part: int, residues: frozenset[int]) -> int:
    """Partitions of ``n`` into parts ``<= max_part`` with part % 5 in ``residues``."""
    if n == 0:
        return 1
    if n < 0 or max_part <= 0:
        return 0
    without = partitions_residue_parts(n, max_part - 1, residues)
    if max_part % 5 in residues:
        return without + partitions_residue_parts(n - max_part, max_part, residues)
    return without


def rr_coefficients(residues: set[int], up_to: int) -> list[int]:
    """Coefficients of the product over (1-q^k)^-1, k % 5 in ``residues``."""
    frozen = frozenset(residues)
    return [partitions_residue_parts(n, n, frozen) for n in range(up_to + 1)]


def sum_side_coefficients(m: int, up_to: int) -> list[int]:
    """Coefficients of sum over n of q^(n^2+mn)/(q;q)_n, by partition counting.

    The coefficient of q^N in q^(n^2+mn)/(q;q)_n counts partitions of
    N - n^2 - mn into parts at most n.
    """
    out = []
    for big_n in range(up_to + 1):
        total = 0
        n = 0
        while n * n + m * n <= big_n:
            total += partitions_max_part(big_n - n * n - m * n, n)
            n += 1
        out.append(total)
    return out
