"""Ward numbers, weighted Ward numbers and their closed-form specializations.

``W(n, k)`` counts partitions of ``[n+k]`` into ``k`` blocks of size at
least two.  Under a weight system ``g``, a block of size ``i+1`` carries
``g_i`` and ``W^g(n, k)`` is the total weight.
"""

from __future__ import annotations

import math
import re
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from . import exactmath as em
from .series import TruncatedSeries, lagrange_classical, ward_double_sum

__all__ = [
    "IncompleteWeightsError",
    "WeightSystem",
    "parse_weights",
    "WardTable",
    "ward_recurrence_table",
    "s2_recurrence",
    "weighted_ward",
    "weighted_ward_table",
    "ward_closed_form",
    "schroeder_tree_count",
    "little_schroeder",
    "specialization_suite",
    "wv_sequences",
]


class IncompleteWeightsError(ValueError):
    """A weight g_i was requested that the weight system does not define."""


@dataclass(frozen=True)
class WeightSystem:
    """Weights ``g_1, g_2, ...`` given by a rule or by a finite explicit list.

    Explicit lists refuse indices past their end instead of padding with 0.
    """

    name: str
    rule: Callable[[int], Fraction] | None = field(default=None, compare=False)
    values: tuple[Fraction, ...] | None = None

    def __call__(self, i: int) -> Fraction:
        if i < 1:
            raise IncompleteWeightsError(f"weights are indexed from 1, got g_{i}")
        if self.values is not None:
            if i > len(self.values):
                raise IncompleteWeightsError(
                    f"weight system {self.name!r} defines g_1..g_{len(self.values)}, asked for g_{i}"
                )
            return self.values[i - 1]
        return Fraction(self.rule(i))

    @classmethod
    def from_list(cls, values: Sequence) -> WeightSystem:
        vals = tuple(Fraction(v) for v in values)
        return cls("list:" + ",".join(str(v) for v in vals), values=vals)

    @classmethod
    def preset(cls, name: str) -> WeightSystem:
        rules = {
            "ones": lambda i: 1,
            "i_plus_1": lambda i: i + 1,
            "factorial_i": math.factorial,
            "factorial_i_plus_1": lambda i: math.factorial(i + 1),
            "factorial_i_minus_1": lambda i: math.factorial(i - 1),
        }
        if name not in rules:
            raise ValueError(f"unknown weight preset {name!r}")
        return cls(name, rules[name])

    @classmethod
    def delta(cls, j: int, scale=1) -> WeightSystem:
        """``g_j = scale`` and every other weight 0."""
        if j < 1:
            raise ValueError("delta index must be >= 1")
        s = Fraction(scale)
        return cls(f"delta:{j}:{s}", lambda i: s if i == j else 0)

    def signed(self) -> WeightSystem:
        """``(-1)^(i+1) g_i``: odd-size blocks positive, even-size blocks negative."""
        return WeightSystem(f"signed:{self.name}", lambda i: (-1) ** (i + 1) * self(i))


PRESETS = ("ones", "i_plus_1", "factorial_i", "factorial_i_plus_1", "factorial_i_minus_1")


def parse_weights(spec: str) -> WeightSystem:
    """Parse ``ones | i_plus_1 | ... | delta:<j>:<scale> | list:<g1>,<g2>,... | signed:<spec>``.

    ``delta1`` and ``delta2`` are shorthands for ``delta:1:1`` and ``delta:1:2``.
    """
    spec = spec.strip()
    if spec.startswith("signed:"):
        return parse_weights(spec[len("signed:"):]).signed()
    if spec in PRESETS:
        return WeightSystem.preset(spec)
    m = re.fullmatch(r"delta(\d)", spec)
    if m:
        return WeightSystem.delta(1, int(m.group(1)))
    if spec.startswith("delta:"):
        parts = spec.split(":")
        if len(parts) != 3:
            raise ValueError(f"bad delta spec {spec!r}; expected delta:<j>:<scale>")
        try:
            return WeightSystem.delta(int(parts[1]), Fraction(parts[2]))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad delta spec {spec!r}: {exc}") from None
    if spec.startswith("list:"):
        items = [s for s in spec[len("list:"):].split(",") if s.strip()]
        if not items:
            raise ValueError("empty weight list")
        try:
            return WeightSystem.from_list([Fraction(s.strip()) for s in items])
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad weight list {spec!r}: {exc}") from None
    if re.fullmatch(r"[-+0-9/ ]+(,[-+0-9/ ]+)*,?", spec):
        return parse_weights("list:" + spec)
    raise ValueError(f"unrecognised weight spec {spec!r}")


# ---------------------------------------------------------------------------
# Tables
# ---------------------------------------------------------------------------


@dataclass
class WardTable:
    """``W^g(n, k)`` for ``0 <= k <= n <= N`` with row sums and alternating sums."""

    weights: str
    entries: list[list[Fraction]]

    @property
    def N(self) -> int:
        return len(self.entries) - 1

    def __call__(self, n: int, k: int):
        if k < 0 or k > n or n > self.N:
            return 0
        return self.entries[n][k]

    def row_sum(self, n: int):
        return sum(self.entries[n], 0)

    def alternating_sum(self, n: int):
        return sum(((-1) ** (n + k) * v for k, v in enumerate(self.entries[n])), 0)

    def to_csv(self) -> str:
        lines = ["n,k,value"]
        for n, row in enumerate(self.entries):
            for k, v in enumerate(row):
                lines.append(f"{n},{k},{v}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "weights": self.weights,
            "N": self.N,
            "rows": [[str(v) for v in row] for row in self.entries],
            "row_sums": [str(self.row_sum(n)) for n in range(self.N + 1)],
            "alternating_sums": [str(self.alternating_sum(n)) for n in range(self.N + 1)],
        }


def ward_recurrence_table(N: int) -> WardTable:
    """Unweighted Ward numbers from ``W(n,k) = k W(n-1,k) + (n+k-1) W(n-1,k-1)``."""
    if N < 0:
        raise ValueError("N must be >= 0")
    rows = [[1]]
    for n in range(1, N + 1):
        prev = rows[-1]
        row = [0] * (n + 1)
        for k in range(1, n + 1):
            same = k * prev[k] if k < n else 0
            row[k] = same + (n + k - 1) * prev[k - 1]
        rows.append(row)
    return WardTable("ones", rows)


_S2_ROWS: list[list[int]] = [[1], [0]]
_S2_LOCK = threading.Lock()


def s2_recurrence(n: int, k: int) -> int:
    """Partitions of an n-set into k blocks of size >= 2.

    Built from ``S2(n,k) = k S2(n-1,k) + (n-1) S2(n-2,k-1)``.
    """
    if n < 0 or k < 0:
        return 0
    with _S2_LOCK:
        while len(_S2_ROWS) <= n:
            m = len(_S2_ROWS)
            row = [0] * (m // 2 + 1)
            for j in range(1, len(row)):
                a = _S2_ROWS[m - 1]
                b = _S2_ROWS[m - 2]
                row[j] = j * (a[j] if j < len(a) else 0) + (m - 1) * (b[j - 1] if j - 1 < len(b) else 0)
            _S2_ROWS.append(row)
    row = _S2_ROWS[n]
    return row[k] if k < len(row) else 0


def _block_series(weights, N: int) -> TruncatedSeries:
    # sum_{i=1}^{N} g_i x^(i+1)/(i+1)!, exact through x^(N+1)
    egf = [0, 0] + [weights(i) for i in range(1, N + 1)]
    return TruncatedSeries.from_egf(egf, N + 1)


def weighted_ward_table(N: int, weights: WeightSystem) -> WardTable:
    """All ``W^g(n, k)`` with ``n <= N``, via powers of the block generating function."""
    if N < 0:
        raise ValueError("N must be >= 0")
    rows: list[list[Fraction]] = [[Fraction(0)] * (n + 1) for n in range(N + 1)]
    rows[0][0] = Fraction(1)
    if N == 0:
        return WardTable(weights.name, rows)
    block = _block_series(weights, N)
    power = block
    for k in range(1, N + 1):
        if k > 1:
            power = power * block
        scale = Fraction(1, math.factorial(k))
        for n in range(k, N + 1):
            rows[n][k] = power[n + k] * math.factorial(n + k) * scale
    return WardTable(weights.name, rows)


def weighted_ward(n: int, k: int, weights: WeightSystem) -> Fraction:
    """``W^g(n,k) = [x^(n+k)/(n+k)!] (1/k!) (sum_i g_i x^(i+1)/(i+1)!)^k``."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    if k == 0:
        return Fraction(1 if n == 0 else 0)
    if k > n:
        return Fraction(0)
    power = _block_series(weights, n) ** k
    return power[n + k] * math.factorial(n + k) / math.factorial(k)


def ward_closed_form(n: int, k: int, kind: str) -> int:
    """Closed forms for g = 1 (``set``), i+1 (``enriched``), i! (``cycle``), (i+1)! (``lah``)."""
    if kind == "enriched":
        return em.factorial(k) * em.binomial(n + k, k) * em.stirling2(n, k)
    kernels = {"set": em.stirling2, "cycle": em.stirling1_unsigned, "lah": em.lah}
    if kind not in kernels:
        raise ValueError(f"unknown closed-form kind {kind!r}")
    inner = kernels[kind]
    return sum(
        (-1) ** (m + k) * em.binomial(n + k, n + m) * inner(n + m, m) for m in range(k + 1)
    )


def little_schroeder(n: int) -> int:
    """Little Schroeder numbers 1, 1, 3, 11, 45, ... as sum_k Narayana(n, k) 2^(k-1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 1
    return sum(em.binomial(n, k) * em.binomial(n, k - 1) // n * 2 ** (k - 1) for k in range(1, n + 1))


def schroeder_tree_count(m: int) -> int:
    """Number of Schroeder trees on ``m`` labeled vertices.

    Trees satisfy ``T = x * P(T)`` with ``P(y) = 1/(2 - e^y)`` the ordered
    partition EGF, so the count is the inverse coefficient of ``x / P(x)``.
    """
    x_over_p = TruncatedSeries.from_egf([0, 1] + [-n for n in range(2, m + 1)], m)
    return int(lagrange_classical(x_over_p, m))


# ---------------------------------------------------------------------------
# Increasing Schroeder tree weights
# ---------------------------------------------------------------------------


def wv_sequences(weights, N: int) -> tuple[list[Fraction], list[Fraction]]:
    """Total weights ``W_1..W_N`` of increasing Schroeder trees and ``V_2..V_N``.

    ``V_n`` restricts to trees whose root has a single block.  A tree on
    n+1 vertices is an ordered partition of {2..n+1} into root blocks, each
    block with its descendants forming a one-block tree; a one-block tree on
    n+1 vertices is a set of c subtrees hanging from one block of size c.
    Block sizes carry ``g_size``.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    W = {1: Fraction(1)}
    V: dict[int, Fraction] = {}
    for m in range(1, N):
        # V_{m+1}: set partitions of an m-set, block of the smallest element first
        by_parts = [[Fraction(0)] * (m + 1) for _ in range(m + 1)]
        by_parts[0][0] = Fraction(1)
        for size in range(1, m + 1):
            for parts in range(1, size + 1):
                by_parts[parts][size] = sum(
                    (em.binomial(size - 1, c - 1) * W[c] * by_parts[parts - 1][size - c]
                     for c in range(1, size - parts + 2)),
                    Fraction(0),
                )
        V[m + 1] = sum((weights(j) * by_parts[j][m] for j in range(1, m + 1)), Fraction(0))
        # W_{m+1}: ordered partitions of an m-set, first block chosen freely
        ordered = [Fraction(1)] + [Fraction(0)] * m
        for size in range(1, m + 1):
            ordered[size] = sum(
                (em.binomial(size, b) * V[b + 1] * ordered[size - b] for b in range(1, size + 1)),
                Fraction(0),
            )
        W[m + 1] = ordered[m]
    return [W[n] for n in range(1, N + 1)], [V[n] for n in range(2, N + 1)]


# ---------------------------------------------------------------------------
# Specialization suite
# ---------------------------------------------------------------------------


@dataclass
class _Row:
    name: str
    weights: WeightSystem
    checks: list = field(default_factory=list)

    def expect(self, what: str, n: int, expected, got):
        self.checks.append({"what": what, "n": n, "expected": str(expected), "got": str(got),
                            "ok": Fraction(expected) == Fraction(got)})


def specialization_suite(N: int = 8) -> dict:
    """Check every specialization row against its closed forms for ``n <= N``."""
    if N > 9:
        raise ValueError("specialization suite is budgeted for N <= 9")
    rows: list[_Row] = []
    base = ward_recurrence_table(N)

    def table(w):
        return weighted_ward_table(N, w)

    r = _Row("g_i = 1", WeightSystem.preset("ones"))
    t = table(r.weights)
    for n in range(N + 1):
        for k in range(n + 1):
            r.expect(f"W({n},{k}) vs recurrence", n, base(n, k), t(n, k))
            r.expect(f"W({n},{k}) vs set closed form", n, ward_closed_form(n, k, "set"), t(n, k))
        r.expect("row sum = total partitions of [n+1]", n, ward_double_sum(n + 1), t.row_sum(n))
        r.expect("alternating sum = n!", n, math.factorial(n), t.alternating_sum(n))
    rows.append(r)

    r = _Row("g_i = i+1", WeightSystem.preset("i_plus_1"))
    t = table(r.weights)
    for n in range(N + 1):
        for k in range(n + 1):
            r.expect(f"W({n},{k}) vs enriched closed form", n, ward_closed_form(n, k, "enriched"), t(n, k))
        r.expect("row sum = Schroeder trees on n+1 vertices", n, schroeder_tree_count(n + 1), t.row_sum(n))
        r.expect("alternating sum = (n+1)^n", n, (n + 1) ** n, t.alternating_sum(n))
    rows.append(r)

    r = _Row("g_i = i!", WeightSystem.preset("factorial_i"))
    t = table(r.weights)
    for n in range(N + 1):
        for k in range(n + 1):
            r.expect(f"W({n},{k}) vs cycle closed form", n, ward_closed_form(n, k, "cycle"), t(n, k))
        r.expect("alternating sum = 1", n, 1, t.alternating_sum(n))
    rows.append(r)

    r = _Row("g_i = (i+1)!", WeightSystem.preset("factorial_i_plus_1"))
    t = table(r.weights)
    for n in range(N + 1):
        for k in range(n + 1):
            r.expect(f"W({n},{k}) vs Lah closed form", n, ward_closed_form(n, k, "lah"), t(n, k))
        r.expect("row sum = (n+1)! * little Schroeder s_n", n,
                 math.factorial(n + 1) * little_schroeder(n), t.row_sum(n))
        r.expect("alternating sum = (n+1)!", n, math.factorial(n + 1), t.alternating_sum(n))
    rows.append(r)

    r = _Row("g_i = (i-1)!", WeightSystem.preset("factorial_i_minus_1"))
    t = table(r.weights)
    for n in range(N + 1):
        r.expect("row sum = n^n", n, n ** n, t.row_sum(n))
    rows.append(r)

    r = _Row("g_i = delta_{i,1}", WeightSystem.delta(1, 1))
    t = table(r.weights)
    for n in range(N + 1):
        r.expect("row sum = (2n-1)!!", n, em.double_factorial_odd(n), t.row_sum(n))
        r.expect("alternating sum = row sum", n, t.row_sum(n), t.alternating_sum(n))
    rows.append(r)

    r = _Row("g_i = 2 delta_{i,1}", WeightSystem.delta(1, 2))
    t = table(r.weights)
    for n in range(N + 1):
        r.expect("row sum = (2n)!/n!", n, math.factorial(2 * n) // math.factorial(n), t.row_sum(n))
        r.expect("alternating sum = row sum", n, t.row_sum(n), t.alternating_sum(n))
    rows.append(r)

    for j in (1, 2, 3):
        for scale in (Fraction(1), Fraction(3, 2), Fraction(-2)):
            r = _Row(f"g_i = g_j delta_(i,j), j={j}, g_j={scale}", WeightSystem.delta(j, scale))
            t = table(r.weights)
            for n in range(N + 1):
                if n % j == 0:
                    i = n // j
                    expected = Fraction(
                        math.factorial(i * (j + 1)), math.factorial(i) * math.factorial(j + 1) ** i
                    ) * scale ** i
                    alt = (-1) ** (n + i) * expected
                else:
                    expected = alt = 0
                r.expect("row sum = partition coefficient", n, expected, t.row_sum(n))
                r.expect("alternating sum = (-1)^(n+i) row sum", n, alt, t.alternating_sum(n))
            rows.append(r)

    out_rows = []
    failures = []
    for r in rows:
        bad = [c for c in r.checks if not c["ok"]]
        out_rows.append({"row": r.name, "weights": r.weights.name, "checks": len(r.checks),
                         "failures": bad, "ok": not bad})
        failures.extend({"row": r.name, **c} for c in bad)
    return {"N": N, "rows": out_rows, "ok": not failures, "failures": failures}
