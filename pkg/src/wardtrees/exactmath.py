"""Exact integer kernels: factorials, binomials, Stirling and Lah triangles.

Integers are Python ints and rationals are :class:`fractions.Fraction`, so
nothing here can overflow or round.  Triangle functions return 0 for
out-of-range or negative indices instead of raising, which keeps the
alternating sums in :mod:`wardtrees.ward` free of range bookkeeping.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

__all__ = [
    "Fraction",
    "factorial",
    "double_factorial_odd",
    "binomial",
    "stirling2",
    "stirling1_unsigned",
    "lah",
]


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    return math.factorial(n)


def double_factorial_odd(n: int) -> int:
    """Return (2n-1)!! = 1*3*5*...*(2n-1), with the empty product 1 at n = 0."""
    if n < 0:
        raise ValueError(f"double_factorial_odd of negative number {n}")
    out = 1
    for j in range(1, 2 * n, 2):
        out *= j
    return out


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise ValueError(f"binomial with negative top index {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


class _Triangle:
    """Lazily grown lower-triangular table T(n, k), 0 <= k <= n.

    ``step(prev_row, n)`` builds row n from row n-1.  Growth happens under a
    lock so concurrent readers never see a half-built row.
    """

    def __init__(self, row0, step):
        self._rows = [row0]
        self._step = step
        self._lock = threading.Lock()

    def __call__(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n:
            return 0
        if n >= len(self._rows):
            with self._lock:
                while len(self._rows) <= n:
                    m = len(self._rows)
                    self._rows.append(self._step(self._rows[-1], m))
        return self._rows[n][k]


def _stirling2_step(prev, n):
    # S(n,k) = k S(n-1,k) + S(n-1,k-1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = (k * prev[k] if k < n else 0) + prev[k - 1]
    return row


def _stirling1_step(prev, n):
    # c(n,k) = (n-1) c(n-1,k) + c(n-1,k-1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = ((n - 1) * prev[k] if k < n else 0) + prev[k - 1]
    return row


def _lah_step(prev, n):
    # L(n,k) = (n-1+k) L(n-1,k) + L(n-1,k-1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = ((n - 1 + k) * prev[k] if k < n else 0) + prev[k - 1]
    return row


_S2 = _Triangle([1], _stirling2_step)
_S1 = _Triangle([1], _stirling1_step)
_LAH = _Triangle([1], _lah_step)


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into k nonempty blocks."""
    return _S2(n, k)


def stirling1_unsigned(n: int, k: int) -> int:
    """Number of permutations of an n-set with exactly k cycles."""
    return _S1(n, k)


def lah(n: int, k: int) -> int:
    """Unsigned Lah number: partitions of an n-set into k nonempty linear orders."""
    return _LAH(n, k)
