"""Truncated power series over the rationals and compositional inversion.

A :class:`TruncatedSeries` holds ``c_0 .. c_N`` exactly and stands for
``sum c_n x^n  mod x^(N+1)``.  Products track valuations, so multiplying
series that vanish to high order yields a correspondingly *longer* exact
result; this is what lets the inversion formula below differentiate
``(x - h)^k`` ``k - 1`` times without running out of known coefficients.

Three independent routes to ``h^{<-1>}`` are provided:

* :func:`invert_newton` -- Newton iteration with precision doubling;
* :func:`invert_variant` -- ``x + sum_k (1/k!) [(x - h)^k]^{(k-1)}``;
* :func:`lagrange_classical` -- single EGF coefficients from
  ``[x^{n-1}/(n-1)!] (x/f)^n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import exactmath as em

__all__ = [
    "SeriesError",
    "TruncatedSeries",
    "compose",
    "derivative",
    "invert_newton",
    "invert_variant",
    "lagrange_classical",
    "ward_functional_check",
    "ward_double_sum",
    "ward_tail_sum",
    "ward_h_series",
    "ward_f_series",
]


class SeriesError(ValueError):
    """A series operation's precondition does not hold."""


def _mul_raw(a: Sequence[Fraction], b: Sequence[Fraction], upto: int) -> list[Fraction]:
    out = [Fraction(0)] * (upto + 1)
    nb = len(b)
    for i, ai in enumerate(a[: upto + 1]):
        if not ai:
            continue
        for j in range(min(nb, upto - i + 1)):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


@dataclass(frozen=True)
class TruncatedSeries:
    """Exact coefficients ``c_0 .. c_N``; ``N = order``."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, order: int | None = None) -> TruncatedSeries:
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        return cls(tuple(cs))

    @classmethod
    def from_egf(cls, egf: Iterable, order: int | None = None) -> TruncatedSeries:
        """Series with ``c_n = egf[n] / n!``."""
        cs = [Fraction(a) / math.factorial(n) for n, a in enumerate(egf)]
        return cls.from_coeffs(cs, order)

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls((Fraction(0),) * (order + 1))

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls.from_coeffs([1], order)

    @classmethod
    def x(cls, order: int) -> TruncatedSeries:
        return cls.from_coeffs([0, 1], order)

    # -- accessors ----------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        if n > self.order:
            raise IndexError(f"coefficient {n} is beyond truncation order {self.order}")
        return self.coeffs[n]

    def egf(self, n: int) -> Fraction:
        return self[n] * math.factorial(n)

    def egf_coeffs(self) -> list[Fraction]:
        return [self.egf(n) for n in range(self.order + 1)]

    @property
    def valuation(self) -> int:
        """Index of the first nonzero coefficient, or ``order + 1`` if none is known."""
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return self.order + 1

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise SeriesError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> TruncatedSeries | None:
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.from_coeffs([other], self.order)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return TruncatedSeries(tuple(self.coeffs[i] + o.coeffs[i] for i in range(n + 1)))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(tuple(c * other for c in self.coeffs))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        # coefficients past either order only enter at index >= order + other's valuation
        n = min(self.order + other.valuation, other.order + self.valuation)
        return TruncatedSeries(tuple(_mul_raw(self.coeffs, other.coeffs, n)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if isinstance(other, TruncatedSeries):
            return self * other.reciprocal()
        return NotImplemented

    def __pow__(self, m: int):
        if m < 0:
            return self.reciprocal() ** (-m)
        result = TruncatedSeries.one(self.order + max(m - 1, 0) * self.valuation)
        for _ in range(m):
            result = result * self
        return result

    def reciprocal(self) -> TruncatedSeries:
        c0 = self.coeffs[0]
        if not c0:
            raise SeriesError("reciprocal needs a nonzero constant term")
        out = [Fraction(0)] * (self.order + 1)
        out[0] = 1 / c0
        for n in range(1, self.order + 1):
            acc = sum((self.coeffs[j] * out[n - j] for j in range(1, n + 1)), Fraction(0))
            out[n] = -acc / c0
        return TruncatedSeries(tuple(out))

    def derivative(self, times: int = 1) -> TruncatedSeries:
        return derivative(self, times)

    def __call__(self, inner: TruncatedSeries) -> TruncatedSeries:
        return compose(self, inner)

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if n == 0 else f"({c})x^{n}")
        return (" + ".join(terms) or "0") + f" + O(x^{self.order + 1})"

    # -- JSON ---------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coefficients": [[str(c.numerator), str(c.denominator)] for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data) -> TruncatedSeries:
        try:
            order = int(data["order"])
            cs = [Fraction(int(p), int(q)) for p, q in data["coefficients"]]
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed series JSON: {exc}") from None
        if len(cs) != order + 1:
            raise ValueError("coefficient count does not match order")
        return cls(tuple(cs))


def derivative(s: TruncatedSeries, times: int = 1) -> TruncatedSeries:
    """Formal derivative applied ``times`` times; the order drops by ``times``."""
    if times < 0 or times > s.order:
        raise SeriesError(f"cannot differentiate order-{s.order} series {times} times")
    cs = list(s.coeffs)
    for _ in range(times):
        cs = [j * cs[j] for j in range(1, len(cs))]
    return TruncatedSeries(tuple(cs))


def compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """``outer(inner(x))`` by Horner's rule; ``inner`` must have no constant term."""
    if inner.coeffs[0]:
        raise SeriesError("inner series of a composition must have zero constant term")
    v = inner.valuation
    # terms of outer past its order contribute at index >= (order+1)*v
    n = min(inner.order, (outer.order + 1) * v - 1)
    inn = inner.coeffs[: n + 1]
    acc = [outer.coeffs[min(outer.order, n)]] + [Fraction(0)] * n
    for j in range(min(outer.order, n) - 1, -1, -1):
        acc = _mul_raw(acc, inn, n)
        acc[0] += outer.coeffs[j]
    return TruncatedSeries(tuple(acc))


def _check_invertible(h: TruncatedSeries) -> None:
    if h.order < 1:
        raise SeriesError("need order >= 1 to invert")
    if h.coeffs[0]:
        raise SeriesError(f"coefficient 0 must vanish, got {h.coeffs[0]}")
    if not h.coeffs[1]:
        raise SeriesError("coefficient 1 must be nonzero")


def invert_newton(h: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse of ``h`` by Newton iteration, doubling precision each step."""
    _check_invertible(h)
    N = h.order
    g = TruncatedSeries.from_coeffs([0, 1 / h.coeffs[1]], N)
    dh = derivative(h)
    p = 1
    while p < N:
        p = min(2 * p + 1, N)
        gp = g.truncate(p)
        err = compose(h.truncate(p), gp) - TruncatedSeries.x(p)
        if p == 1:
            step = err * (1 / h.coeffs[1])
        else:
            # err vanishes to order 2, so an order p-1 slope still gives p exact terms
            slope = compose(dh.truncate(p - 1), gp.truncate(p - 1))
            step = err * slope.reciprocal()
        g = TruncatedSeries.from_coeffs((gp - step.truncate(p)).coeffs, N)
    return g


def invert_variant(h: TruncatedSeries) -> TruncatedSeries:
    """``h^{<-1>} = x + sum_{k>=1} (1/k!) [(x - h)^k]^{(k-1)}`` for ``h(0)=0, h'(0)=1``.

    Scale ``h`` first if ``h'(0) != 1``.
    """
    if h.order < 1 or h.coeffs[0] != 0:
        raise SeriesError("coefficient 0 must vanish")
    if h.coeffs[1] != 1:
        raise SeriesError(f"coefficient 1 must equal 1, got {h.coeffs[1]}")
    N = h.order
    f = TruncatedSeries.x(N) - h
    total = TruncatedSeries.x(N)
    power = TruncatedSeries.one(N)
    for k in range(1, N + 1):
        # (k-1) derivatives of f^k need it through index N + k - 1
        power = (power * f).truncate(N + k - 1)
        term = derivative(power, k - 1) * Fraction(1, math.factorial(k))
        total = total + term.truncate(N)
    return total


def lagrange_classical(f: TruncatedSeries, n: int) -> Fraction:
    """EGF coefficient ``b_n`` of ``f^{<-1>}``, i.e. ``[x^{n-1}/(n-1)!] (x/f(x))^n``."""
    _check_invertible(f)
    if n < 1:
        raise SeriesError("n must be at least 1")
    if f.order < n:
        raise SeriesError(f"need f through x^{n}, have order {f.order}")
    q = TruncatedSeries(f.coeffs[1 : n + 1])
    r = q.reciprocal() ** n
    return r[n - 1] * math.factorial(n - 1)


# ---------------------------------------------------------------------------
# Ward generating functions
# ---------------------------------------------------------------------------


def ward_f_series(weights, order: int) -> TruncatedSeries:
    """``f(x) = sum_{n>=2} g_{n-1} x^n / n!``."""
    egf = [0, 0] + [weights(n - 1) for n in range(2, order + 1)]
    return TruncatedSeries.from_egf(egf, order)


def ward_h_series(weights, order: int) -> TruncatedSeries:
    """``h(x) = x - f(x)``, whose inverse is the tree generating function ``W(x)``."""
    return TruncatedSeries.x(order) - ward_f_series(weights, order)


def _residual(s: TruncatedSeries, index: int | None) -> dict:
    # first nonzero coefficient of a residual series, or an explicit zero
    if index is None:
        return {"index": None, "value": "0"}
    return {"index": index, "value": str(s[index])}


def ward_functional_check(weights, N: int) -> dict:
    """Check ``W - f(W) = x`` and ``W' (1 - f'(W)) = 1`` modulo ``x^(N+1)``.

    ``W`` is built from the tree recurrences of :func:`wardtrees.ward.wv_sequences`,
    not from any inversion routine.
    """
    from .ward import wv_sequences

    if N < 1:
        raise SeriesError("N must be at least 1")
    Ws, _ = wv_sequences(weights, N)
    W = TruncatedSeries.from_egf([0] + list(Ws), N)
    f = ward_f_series(weights, N)
    first = W - compose(f, W) - TruncatedSeries.x(N)
    dW = derivative(W)
    second = dW * (1 - compose(derivative(f), W.truncate(N - 1))) - 1

    def offending(s):
        return next((i for i, c in enumerate(s.coeffs) if c), None)

    bad1, bad2 = offending(first), offending(second)
    return {
        "N": N,
        "weights": getattr(weights, "name", repr(weights)),
        "W_egf": [str(w) for w in Ws],
        "residual_equation": _residual(first, bad1),
        "residual_derivative": _residual(second, bad2),
        "ok": bad1 is None and bad2 is None,
    }


def ward_double_sum(n: int) -> int:
    """Number of increasing Schroeder trees on n vertices (all g_i = 1), as a finite double sum."""
    if n < 1:
        raise ValueError("n must be at least 1")
    total = 0
    for k in range(1, n + 1):
        for i in range(1, k + 1):
            total += (-1) ** (k - i) * em.stirling2(n + i - 1, i) * em.binomial(n + k - 1, n + i - 1)
    return total


def ward_tail_sum(n: int, tolerance) -> tuple[Fraction, Fraction]:
    """Partial sum of ``sum_{k>=0} S(n+k-1, k) / 2^(n+k)`` and the last term added.

    Summation stops at the first term below ``tolerance`` once the term ratio
    has dropped to 3/4 or less, so the neglected tail is below three times
    that term.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    tol = Fraction(tolerance)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    total = Fraction(0)
    prev = Fraction(0)
    k = 0
    while True:
        term = Fraction(em.stirling2(n + k - 1, k), 2 ** (n + k))
        total += term
        if term and prev and term < tol and term <= prev * Fraction(3, 4):
            return total, term
        prev = term
        k += 1
