"""Explicit bijections, sign-reversing involutions and count-level checkers.

The constructive maps here are

* :func:`total_to_increasing` / :func:`increasing_to_total`: type-preserving
  bijection between total partition trees and increasing Schroeder trees;
* :func:`psi_prime`: involution on ordered partitions of ``[n]`` whose only
  fixed point is ``[{1},{2},...,{n}]``;
* :func:`psi_n`: involution on Schroeder trees that keeps the parent function
  and flips the sign.

Maps whose construction is not reproduced (the meadow decompositions and the
semi-labeled tree correspondence) are checked only as equalities of
type-refined tallies; see :func:`check_chen_counts` and friends.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from . import exactmath as em
from .structures import (
    OrderedPartition,
    SchroederTree,
    TotalPartitionTree,
    TypeVector,
    enumerate_enriched_trees,
    enumerate_increasing_schroeder_trees,
    enumerate_meadows,
    enumerate_ordered_partitions,
    enumerate_schroeder_trees,
    enumerate_semilabeled_trees,
    enumerate_set_partitions,
    enumerate_total_partition_trees,
    _compositions,
    sign_of,
    to_json,
    type_of,
)

__all__ = [
    "FixedPointError",
    "InvolutionReport",
    "EqualityReport",
    "total_to_increasing",
    "increasing_to_total",
    "psi_prime",
    "psi_n",
    "is_psi_fixed_point",
    "check_psi_prime",
    "check_psi_n",
    "check_chen_counts",
    "check_semilabeled_counts",
    "check_weight_transfer",
    "check_enriched_counts",
    "enriched_signed_count",
    "verify_alternating_stirling_identity",
]


class FixedPointError(ValueError):
    """Raised when an involution is applied to one of its fixed points."""


# ---------------------------------------------------------------------------
# Total partition trees <-> increasing Schroeder trees
# ---------------------------------------------------------------------------


def total_to_increasing(t: TotalPartitionTree) -> SchroederTree:
    """Increasing Schroeder tree with one block per internal vertex of ``t``.

    The children of the root, ordered by minimum leaf, give subtrees
    T_1, ..., T_k with minima m_1 < ... < m_k.  The image has root m_1, a
    leftmost block {m_2, ..., m_k} carrying T_2, ..., T_k, followed by the
    root blocks of T_1.
    """
    if t.leaf is not None:
        return SchroederTree(t.leaf)
    images = [total_to_increasing(c) for c in t.children]
    first, rest = images[0], images[1:]
    return SchroederTree(first.label, (tuple(rest),) + first.blocks)


def increasing_to_total(s: SchroederTree) -> TotalPartitionTree:
    """Inverse of :func:`total_to_increasing`."""
    if not s.blocks:
        return TotalPartitionTree(leaf=s.label)
    leftmost, remainder = s.blocks[0], s.blocks[1:]
    parts = [SchroederTree(s.label, remainder)] + list(leftmost)
    kids = sorted((increasing_to_total(p) for p in parts), key=lambda c: c.min_leaf)
    return TotalPartitionTree(children=tuple(kids))


# ---------------------------------------------------------------------------
# psi' on ordered partitions
# ---------------------------------------------------------------------------


def psi_prime(op: OrderedPartition) -> OrderedPartition:
    """Merge-or-split involution on ordered partitions of ``[n]``.

    Let i be the length of the prefix [{1},...,{i}] and let B_s hold i+1.  If
    B_s = {i+1} it is merged into B_{s-1}; otherwise i+1 is split off into a
    new singleton block right after B_s.
    """
    blocks = [tuple(b) for b in op.blocks]
    n = op.n
    i = 0
    while i < len(blocks) and blocks[i] == (i + 1,):
        i += 1
    if i == n:
        raise FixedPointError(f"{op} is the unique fixed point")
    target = i + 1
    s = next(j for j, b in enumerate(blocks) if target in b)
    if blocks[s] == (target,):
        merged = tuple(sorted(blocks[s - 1] + blocks[s]))
        blocks[s - 1 : s + 1] = [merged]
    else:
        rest = tuple(x for x in blocks[s] if x != target)
        blocks[s : s + 1] = [rest, (target,)]
    return OrderedPartition(tuple(blocks))


# ---------------------------------------------------------------------------
# psi_n on Schroeder trees
# ---------------------------------------------------------------------------


def _root_partition_is_identity(t: SchroederTree) -> bool:
    labels = [c.label for b in t.blocks for c in b]
    return all(len(b) == 1 for b in t.blocks) and labels == sorted(labels)


def is_psi_fixed_point(t: SchroederTree) -> bool:
    """True iff all blocks are singletons listed in increasing label order."""
    if not _root_partition_is_identity(t):
        return False
    return all(is_psi_fixed_point(c) for b in t.blocks for c in b)


def psi_n(t: SchroederTree) -> SchroederTree:
    """Sign-reversing involution on Schroeder trees that keeps the parent function.

    Subtrees are scanned by ascending root label; the first one that is not
    fixed is replaced by its image.  When every subtree is fixed, the root's
    block structure is rewritten by :func:`psi_prime` after ranking the
    children 1..s.
    """
    kids = t.children()
    for kid in kids:
        if not is_psi_fixed_point(kid):
            image = psi_n(kid)
            blocks = tuple(
                tuple(image if c.label == kid.label else c for c in b) for b in t.blocks
            )
            return SchroederTree(t.label, blocks)
    if not kids:
        raise FixedPointError("single-vertex tree is fixed")
    rank = {c.label: r for r, c in enumerate(kids, start=1)}
    op = OrderedPartition(tuple(tuple(sorted(rank[c.label] for c in b)) for b in t.blocks))
    try:
        image = psi_prime(op)
    except FixedPointError:
        raise FixedPointError("tree is a fixed point of psi_n") from None
    blocks = tuple(tuple(kids[r - 1] for r in b) for b in image.blocks)
    return SchroederTree(t.label, blocks)


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


@dataclass
class InvolutionReport:
    family: str
    n: int
    pairs_checked: int = 0
    fixed_points: int = 0
    expected_fixed_points: int | None = None
    violations: int = 0
    signed_sum: int = 0
    expected_signed_sum: int | None = None
    first_violation: object = None

    @property
    def ok(self) -> bool:
        return (
            self.violations == 0
            and (self.expected_fixed_points is None or self.fixed_points == self.expected_fixed_points)
            and (self.expected_signed_sum is None or self.signed_sum == self.expected_signed_sum)
        )

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "pairs_checked": self.pairs_checked,
            "fixed_points": self.fixed_points,
            "expected_fixed_points": self.expected_fixed_points,
            "violations": self.violations,
            "signed_sum": self.signed_sum,
            "expected_signed_sum": self.expected_signed_sum,
            "first_violation": self.first_violation,
            "ok": self.ok,
        }


@dataclass
class EqualityReport:
    """Per-key tallies of two enumerations that are supposed to agree."""

    name: str
    params: dict
    left: dict = field(default_factory=dict)
    right: dict = field(default_factory=dict)

    @property
    def left_total(self):
        return sum(self.left.values(), 0)

    @property
    def right_total(self):
        return sum(self.right.values(), 0)

    @property
    def mismatches(self) -> list:
        keys = sorted(set(self.left) | set(self.right), key=str)
        return [k for k in keys if self.left.get(k, 0) != self.right.get(k, 0)]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        def enc(d):
            return {str(k): str(v) for k, v in sorted(d.items(), key=lambda kv: str(kv[0]))}

        return {
            "name": self.name,
            "params": self.params,
            "left": enc(self.left),
            "right": enc(self.right),
            "left_total": str(self.left_total),
            "right_total": str(self.right_total),
            "mismatches": [str(k) for k in self.mismatches],
            "ok": self.ok,
        }


def check_psi_prime(n: int) -> InvolutionReport:
    rep = InvolutionReport("oppart", n, expected_fixed_points=1, expected_signed_sum=1)
    for op in enumerate_ordered_partitions(n):
        rep.signed_sum += op.sign
        try:
            image = psi_prime(op)
        except FixedPointError:
            rep.fixed_points += 1
            if op.blocks != tuple((j,) for j in range(1, n + 1)):
                rep.violations += 1
                rep.first_violation = rep.first_violation or to_json(op)
            continue
        rep.pairs_checked += 1
        if psi_prime(image) != op or image.sign != -op.sign or image == op:
            rep.violations += 1
            rep.first_violation = rep.first_violation or to_json(op)
    return rep


def check_psi_n(n: int, increasing: bool = False) -> InvolutionReport:
    """Exhaustive check of :func:`psi_n` on all (or all increasing) trees on ``[n]``."""
    if increasing:
        trees = enumerate_increasing_schroeder_trees(n)
        expected = math.factorial(n - 1)
        family = "inc-schroeder"
    else:
        trees = enumerate_schroeder_trees(n)
        expected = n ** (n - 1)
        family = "schroeder"
    rep = InvolutionReport(family, n, expected_fixed_points=expected, expected_signed_sum=expected)
    for t in trees:
        sign = sign_of(t)
        rep.signed_sum += sign
        if is_psi_fixed_point(t):
            rep.fixed_points += 1
            if sign != 1:
                rep.violations += 1
            continue
        image = psi_n(t)
        rep.pairs_checked += 1
        bad = (
            psi_n(image) != t
            or sign_of(image) != -sign
            or image.parent_map() != t.parent_map()
            or (increasing and not image.is_increasing())
            or is_psi_fixed_point(image)
        )
        if bad:
            rep.violations += 1
            rep.first_violation = rep.first_violation or to_json(t)
    return rep


def enriched_signed_count(n: int) -> int:
    return sum(sign_of(t) for t in enumerate_enriched_trees(n))


# ---------------------------------------------------------------------------
# Count-level checks
# ---------------------------------------------------------------------------


def check_chen_counts(n: int, k: int | None = None, increasing: bool = False):
    """Type tallies of Schroeder trees on [n] with k blocks vs meadows on [n+k-1] with k small trees.

    With ``k=None`` the trees are enumerated once and a list of reports for
    every k in 0..n is returned.
    """
    trees = enumerate_increasing_schroeder_trees(n) if increasing else enumerate_schroeder_trees(n)
    ks = range(n + 1) if k is None else [k]
    left: dict[int, Counter] = {j: Counter() for j in ks}
    for t in trees:
        if t.num_blocks in left:
            left[t.num_blocks][type_of(t)] += 1
    reports = []
    for j in ks:
        m = n + j - 1
        right = Counter(type_of(md) for md in enumerate_meadows(m, j, increasing)) if m >= 2 * j else Counter()
        reports.append(EqualityReport(
            "tree-meadow-increasing" if increasing else "tree-meadow",
            {"n": n, "k": j, "increasing": increasing},
            dict(left[j]),
            dict(right),
        ))
    return reports if k is None else reports[0]


def check_semilabeled_counts(n: int, k: int) -> EqualityReport:
    """Semi-labeled trees with n+1 leaves and k internal vertices vs partitions of [n+k] into k blocks.

    Both sides are tallied by type: an internal vertex with c children and a
    block of size c both contribute c-1.
    """
    left = Counter(type_of(t) for t in enumerate_semilabeled_trees(n + 1, k))
    right = Counter(type_of(p) for p in enumerate_set_partitions(n + k, k))
    return EqualityReport("semilabeled", {"n": n, "k": k}, dict(left), dict(right))


def check_weight_transfer(n: int, weights: Callable[[int], Fraction] | Sequence) -> EqualityReport | list:
    """Schroeder trees under g_i vs increasing Schroeder trees under (i+1) g_i, by block count.

    Weights depend only on (blocks, type), so both families are tallied once
    and every weight system in a sequence is checked against the same tallies.
    """
    systems = list(weights) if isinstance(weights, (list, tuple)) else [weights]
    plain = Counter((t.num_blocks, type_of(t)) for t in enumerate_schroeder_trees(n))
    inc = Counter((t.num_blocks, type_of(t)) for t in enumerate_increasing_schroeder_trees(n))
    reports = []
    for g in systems:
        left: Counter = Counter()
        right: Counter = Counter()
        for (k, tv), count in plain.items():
            left[k] += count * _type_weight(tv, g)
        for (k, tv), count in inc.items():
            right[k] += count * _type_weight(tv, lambda i: (i + 1) * Fraction(g(i)))
        reports.append(EqualityReport(
            "weight-transfer", {"n": n, "weights": getattr(g, "name", repr(g))}, dict(left), dict(right)
        ))
    return reports if isinstance(weights, (list, tuple)) else reports[0]


def _type_weight(tv: TypeVector, g) -> Fraction:
    out = Fraction(1)
    for size, mult in tv.items:
        out *= Fraction(g(size)) ** mult
    return out


def check_enriched_counts(n: int) -> EqualityReport:
    """Enriched increasing vs plain Schroeder trees on [n], tallied by (blocks, type)."""
    left = Counter((t.num_blocks, TypeVector.from_sizes(t.block_sizes())) for t in enumerate_enriched_trees(n))
    right = Counter((t.num_blocks, type_of(t)) for t in enumerate_schroeder_trees(n))
    return EqualityReport("enriched", {"n": n}, dict(left), dict(right))


def _psi_prime_orbit_representatives(n: int):
    """Orbit representatives of non-fixed ordered partitions of ``[n]``, with orbit sizes.

    With prefix length i, psi' only looks at the labels 1..i+1; it commutes
    with every permutation of the passive labels i+2..n.  An orbit is fixed by
    the block sequence, the block holding i+1 and the number of passive
    labels per block.  The representative fills passive labels in ascending
    order block by block.
    """
    for i in range(n - 1):
        target = i + 1
        passive = n - i - 1
        for r in range(1, passive + 2):
            for s in range(r):
                lows = [0 if b == s else 1 for b in range(r)]
                for counts in _compositions(passive, lows):
                    if s == 0 and counts[0] == 0:
                        continue  # first block {i+1} would lengthen the prefix
                    nxt = target + 1
                    blocks = [(j,) for j in range(1, i + 1)]
                    for b, c in enumerate(counts):
                        block = tuple(range(nxt, nxt + c))
                        nxt += c
                        blocks.append(((target,) + block) if b == s else block)
                    size = math.factorial(passive)
                    for c in counts:
                        size //= math.factorial(c)
                    yield OrderedPartition(tuple(blocks)), size


def _paired_signed_sum(n: int, exhaustive_limit: int) -> int | None:
    """Signed sum of OP(n) left after cancelling psi' pairs; None if pairing fails."""
    if n <= exhaustive_limit:
        total = 0
        for op in enumerate_ordered_partitions(n):
            try:
                image = psi_prime(op)
            except FixedPointError:
                total += op.sign
                continue
            if image.sign == op.sign or psi_prime(image) != op:
                return None
        return total
    fixed = OrderedPartition(tuple((j,) for j in range(1, n + 1)))
    cancelled = 0
    covered = 1
    for rep, size in _psi_prime_orbit_representatives(n):
        image = psi_prime(rep)
        if image.sign == rep.sign or psi_prime(image) != rep:
            return None
        cancelled += size * (rep.sign + image.sign)
        covered += size
    if covered != sum(em.factorial(k) * em.stirling2(n, k) for k in range(n + 1)):
        return None
    return fixed.sign + cancelled // 2


def verify_alternating_stirling_identity(n: int, exhaustive_limit: int = 7) -> bool:
    """sum_k (-1)^k k! S(n,k) == (-1)^n, by formula and by cancelling psi' pairs.

    Up to ``exhaustive_limit`` every ordered partition is paired; beyond it
    the pairing runs on orbit representatives under relabeling of the labels
    psi' never inspects.
    """
    formula = sum((-1) ** k * em.factorial(k) * em.stirling2(n, k) for k in range(n + 1))
    signed = _paired_signed_sum(n, exhaustive_limit)
    if signed is None:
        return False
    # sign(op) = (-1)^(n+k), so the alternating sum is (-1)^n times the signed sum
    return formula == (-1) ** n and (-1) ** n * signed == (-1) ** n
