"""Combinatorial families behind the Ward numbers, with exhaustive generators.

Every family has one canonical encoding so that equality of objects is plain
``==`` on frozen dataclasses:

* :class:`SchroederTree` -- labeled rooted tree whose children at each vertex
  are grouped into an ordered sequence of blocks.  Block order matters; inside
  a block the subtrees are stored by ascending root label.
* :class:`EnrichedTree` -- increasing Schroeder tree with one star per block.
* :class:`TotalPartitionTree` -- leaves labeled, internal vertices unlabeled,
  children sorted by their minimum leaf.  Also used for semi-labeled trees,
  which additionally allow internal vertices with a single child.
* :class:`SetPartition`, :class:`OrderedPartition`, :class:`SmallTree`,
  :class:`Meadow`.

Generators stream their output in a deterministic order.  Shapes on
``[m]`` for small ``m`` are cached and relabeled, which is what keeps the
seven-vertex Schroeder enumeration tractable.
"""

from __future__ import annotations

import functools
import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence

__all__ = [
    "TypeVector",
    "SetPartition",
    "OrderedPartition",
    "SchroederTree",
    "EnrichedTree",
    "TotalPartitionTree",
    "SmallTree",
    "Meadow",
    "enumerate_set_partitions",
    "enumerate_ordered_partitions",
    "enumerate_schroeder_trees",
    "enumerate_increasing_schroeder_trees",
    "enumerate_enriched_trees",
    "enumerate_total_partition_trees",
    "enumerate_meadows",
    "enumerate_semilabeled_trees",
    "type_of",
    "weight_of",
    "sign_of",
    "canonicalize",
    "to_json",
    "from_json",
]


# ---------------------------------------------------------------------------
# TypeVector
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TypeVector:
    """Multiset of block sizes, stored as sorted ``(size, multiplicity)`` pairs.

    Size 0 is admitted: it arises from singleton blocks of plain set
    partitions and from unary vertices of semi-labeled trees.
    """

    items: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        prev = None
        for size, mult in self.items:
            if size < 0 or mult <= 0:
                raise ValueError(f"bad type entry {(size, mult)}")
            if prev is not None and size <= prev:
                raise ValueError("type entries must be strictly increasing in size")
            prev = size

    @classmethod
    def from_sizes(cls, sizes: Iterable[int]) -> TypeVector:
        return cls(tuple(sorted(Counter(sizes).items())))

    def as_dict(self) -> dict[int, int]:
        return dict(self.items)

    @property
    def total(self) -> int:
        return sum(size * mult for size, mult in self.items)

    @property
    def num_parts(self) -> int:
        return sum(mult for _, mult in self.items)

    def __str__(self) -> str:
        if not self.items:
            return "()"
        return " ".join(f"{s}^{m}" for s, m in self.items)


# ---------------------------------------------------------------------------
# Partitions
# ---------------------------------------------------------------------------


def _check_cover(blocks: Sequence[Sequence[int]], n: int) -> None:
    seen: list[int] = []
    for b in blocks:
        if not b:
            raise ValueError("empty block")
        if list(b) != sorted(set(b)):
            raise ValueError(f"block {list(b)} is not strictly ascending")
        seen.extend(b)
    if sorted(seen) != list(range(1, n + 1)):
        raise ValueError(f"blocks do not partition [1..{n}]")


@dataclass(frozen=True)
class SetPartition:
    """Partition of ``[n]`` with blocks ascending and ordered by minimum."""

    blocks: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def k(self) -> int:
        return len(self.blocks)

    def validate(self) -> None:
        _check_cover(self.blocks, self.n)
        mins = [b[0] for b in self.blocks]
        if mins != sorted(mins):
            raise ValueError("set partition blocks must be ordered by minimum")


@dataclass(frozen=True)
class OrderedPartition:
    """Sequence of disjoint nonempty blocks covering ``[n]``; block order matters."""

    blocks: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def sign(self) -> int:
        return -1 if (self.n + self.k) % 2 else 1

    def validate(self) -> None:
        _check_cover(self.blocks, self.n)

    @classmethod
    def of(cls, *blocks: Iterable[int]) -> OrderedPartition:
        return cls(tuple(tuple(sorted(b)) for b in blocks))

    def __str__(self) -> str:
        return "[" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "]"


# ---------------------------------------------------------------------------
# Schroeder trees
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SchroederTree:
    """Vertex ``label`` with its children grouped into ordered ``blocks``.

    Each block is a tuple of subtrees in ascending root-label order.
    """

    label: int
    blocks: tuple[tuple[SchroederTree, ...], ...] = ()

    @property
    def num_vertices(self) -> int:
        return 1 + sum(c.num_vertices for b in self.blocks for c in b)

    @property
    def num_blocks(self) -> int:
        return len(self.blocks) + sum(c.num_blocks for b in self.blocks for c in b)

    def children(self) -> list[SchroederTree]:
        """Subtrees of the root sorted by root label."""
        return sorted((c for b in self.blocks for c in b), key=lambda c: c.label)

    def labels(self) -> list[int]:
        out = [self.label]
        for b in self.blocks:
            for c in b:
                out.extend(c.labels())
        return out

    def block_sizes(self) -> Iterator[int]:
        for b in self.blocks:
            yield len(b)
            for c in b:
                yield from c.block_sizes()

    def parent_map(self) -> dict[int, int | None]:
        out: dict[int, int | None] = {self.label: None}
        stack = [self]
        while stack:
            t = stack.pop()
            for b in t.blocks:
                for c in b:
                    out[c.label] = t.label
                    stack.append(c)
        return out

    def is_increasing(self) -> bool:
        return all(
            c.label > self.label and c.is_increasing() for b in self.blocks for c in b
        )

    def is_canonical(self) -> bool:
        for b in self.blocks:
            if not b:
                return False
            if any(b[i].label >= b[i + 1].label for i in range(len(b) - 1)):
                return False
            if not all(c.is_canonical() for c in b):
                return False
        return True

    def validate(self) -> None:
        if not self.is_canonical():
            raise ValueError("Schroeder tree has an empty or unsorted block")
        labels = self.labels()
        if len(set(labels)) != len(labels):
            raise ValueError("Schroeder tree repeats a label")

    def relabel(self, mapping: Callable[[int], int] | Sequence[int] | dict) -> SchroederTree:
        f = mapping if callable(mapping) else mapping.__getitem__
        return _relabel_schroeder(self, f)


def _relabel_schroeder(t: SchroederTree, f) -> SchroederTree:
    blocks = tuple(
        tuple(sorted((_relabel_schroeder(c, f) for c in b), key=lambda c: c.label))
        for b in t.blocks
    )
    return SchroederTree(f(t.label), blocks)


@dataclass(frozen=True)
class EnrichedTree:
    """Increasing Schroeder tree with a star in every block.

    ``stars[j]`` is the star slot of ``blocks[j]``: 0 is before the first
    vertex, ``p`` is immediately right of the p-th vertex in ascending order.
    """

    label: int
    blocks: tuple[tuple[EnrichedTree, ...], ...] = ()
    stars: tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.stars) != len(self.blocks):
            raise ValueError("need exactly one star per block")
        for b, s in zip(self.blocks, self.stars):
            if not 0 <= s <= len(b):
                raise ValueError(f"star position {s} out of range for block of size {len(b)}")

    def base(self) -> SchroederTree:
        return SchroederTree(
            self.label, tuple(tuple(c.base() for c in b) for b in self.blocks)
        )

    @property
    def num_vertices(self) -> int:
        return 1 + sum(c.num_vertices for b in self.blocks for c in b)

    @property
    def num_blocks(self) -> int:
        return len(self.blocks) + sum(c.num_blocks for b in self.blocks for c in b)

    def block_sizes(self) -> Iterator[int]:
        for b in self.blocks:
            yield len(b)
            for c in b:
                yield from c.block_sizes()


# ---------------------------------------------------------------------------
# Total partition / semi-labeled trees
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TotalPartitionTree:
    """Either a labeled leaf or an unlabeled vertex with children.

    Children are ordered by minimum leaf.  Total partition trees require at
    least two children per internal vertex; semi-labeled trees allow one.
    """

    leaf: int | None = None
    children: tuple[TotalPartitionTree, ...] = ()

    def __post_init__(self):
        if (self.leaf is None) == (not self.children):
            raise ValueError("a vertex is either a labeled leaf or has children")

    @property
    def is_leaf(self) -> bool:
        return self.leaf is not None

    @functools.cached_property
    def min_leaf(self) -> int:
        if self.leaf is not None:
            return self.leaf
        return self.children[0].min_leaf

    def leaves(self) -> list[int]:
        if self.leaf is not None:
            return [self.leaf]
        return [x for c in self.children for x in c.leaves()]

    def internal_degrees(self) -> Iterator[int]:
        if self.leaf is None:
            yield len(self.children)
            for c in self.children:
                yield from c.internal_degrees()

    @property
    def num_internal(self) -> int:
        return sum(1 for _ in self.internal_degrees())

    def is_canonical(self) -> bool:
        if self.leaf is not None:
            return True
        mins = [c.min_leaf for c in self.children]
        return mins == sorted(mins) and all(c.is_canonical() for c in self.children)

    def is_total(self) -> bool:
        return all(d >= 2 for d in self.internal_degrees())

    def validate(self, total: bool = True) -> None:
        if not self.is_canonical():
            raise ValueError("children are not ordered by minimum leaf")
        if total and not self.is_total():
            raise ValueError("total partition tree has an internal vertex with one child")
        leaves = self.leaves()
        if len(set(leaves)) != len(leaves):
            raise ValueError("leaf label repeated")

    def relabel(self, mapping) -> TotalPartitionTree:
        f = mapping if callable(mapping) else mapping.__getitem__
        return _relabel_tpt(self, f)


def _relabel_tpt(t: TotalPartitionTree, f) -> TotalPartitionTree:
    if t.leaf is not None:
        return TotalPartitionTree(leaf=f(t.leaf))
    kids = sorted((_relabel_tpt(c, f) for c in t.children), key=lambda c: c.min_leaf)
    return TotalPartitionTree(children=tuple(kids))


# ---------------------------------------------------------------------------
# Meadows
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SmallTree:
    root: int
    leaves: tuple[int, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted((self.root,) + self.leaves))

    def is_increasing(self) -> bool:
        return all(self.root < x for x in self.leaves)


@dataclass(frozen=True)
class Meadow:
    """Small trees ordered by their minimum vertex."""

    trees: tuple[SmallTree, ...]

    @property
    def num_vertices(self) -> int:
        return sum(1 + len(s.leaves) for s in self.trees)

    def is_increasing(self) -> bool:
        return all(s.is_increasing() for s in self.trees)


# ---------------------------------------------------------------------------
# Low-level generators on arbitrary label tuples
# ---------------------------------------------------------------------------


def _partitions(items: tuple[int, ...], k: int | None = None, min_block: int = 1):
    """Set partitions of ``items`` (ascending) into blocks of size >= min_block.

    ``k=None`` means any number of blocks.  Blocks come out ascending and
    ordered by minimum.
    """
    if not items:
        if k is None or k == 0:
            yield ()
        return
    if k is not None and (k == 0 or len(items) < k * min_block):
        return
    first, rest = items[0], items[1:]
    for r in range(min_block - 1, len(rest) + 1):
        for chosen in itertools.combinations(rest, r):
            chosen_set = set(chosen)
            remaining = tuple(x for x in rest if x not in chosen_set)
            for tail in _partitions(remaining, None if k is None else k - 1, min_block):
                yield ((first,) + chosen,) + tail


def _ordered_partitions(items: tuple):
    """All ordered partitions of ``items``; blocks keep the input order inside."""
    for part in _partitions(tuple(range(len(items)))):
        for perm in itertools.permutations(part):
            yield tuple(tuple(items[i] for i in b) for b in perm)


@functools.lru_cache(maxsize=None)
def _schroeder_shapes(m: int, increasing: bool) -> tuple[SchroederTree, ...]:
    return tuple(_schroeder_on(tuple(range(1, m + 1)), increasing, cached=False))


def _schroeder_on(labels: tuple[int, ...], increasing: bool, cached: bool = True):
    if cached and len(labels) <= 6:
        if labels == tuple(range(1, len(labels) + 1)):
            yield from _schroeder_shapes(len(labels), increasing)
        else:
            for t in _schroeder_shapes(len(labels), increasing):
                yield t.relabel(lambda x: labels[x - 1])
        return
    roots = labels[:1] if increasing else labels
    for r in roots:
        rest = tuple(x for x in labels if x != r)
        for part in _partitions(rest):
            # subtrees sorted by root label once the combination is formed
            for subtrees in itertools.product(*(tuple(_schroeder_on(b, increasing)) for b in part)):
                kids = tuple(sorted(subtrees, key=lambda c: c.label))
                for op in _ordered_partitions(kids):
                    yield SchroederTree(r, op)


@functools.lru_cache(maxsize=None)
def _total_shapes(m: int) -> tuple[TotalPartitionTree, ...]:
    return tuple(_total_on(tuple(range(1, m + 1)), cached=False))


def _total_on(labels: tuple[int, ...], cached: bool = True):
    if cached and len(labels) <= 6:
        if labels == tuple(range(1, len(labels) + 1)):
            yield from _total_shapes(len(labels))
        else:
            for t in _total_shapes(len(labels)):
                yield t.relabel(lambda x: labels[x - 1])
        return
    if len(labels) == 1:
        yield TotalPartitionTree(leaf=labels[0])
        return
    for part in _partitions(labels):
        if len(part) < 2:
            continue
        for kids in itertools.product(*(tuple(_total_on(b)) for b in part)):
            yield TotalPartitionTree(children=kids)


def _compositions(total: int, lows: Sequence[int]):
    """Tuples ``c`` with ``c[i] >= lows[i]`` and ``sum(c) == total``."""
    if not lows:
        if total == 0:
            yield ()
        return
    spare = total - sum(lows)
    if spare < 0:
        return
    head, tail = lows[0], lows[1:]
    for extra in range(spare + 1):
        for rest in _compositions(total - head - extra, tail):
            yield (head + extra,) + rest


def _semilabeled_on(labels: tuple[int, ...], internal: int):
    """Semi-labeled trees on ``labels`` whose root is internal."""
    if internal < 1:
        return
    for part in _partitions(labels):
        lows = [0 if len(b) == 1 else 1 for b in part]
        for counts in _compositions(internal - 1, lows):
            options = []
            for b, c in zip(part, counts):
                if c == 0:
                    options.append((TotalPartitionTree(leaf=b[0]),))
                else:
                    options.append(tuple(_semilabeled_on(b, c)))
            for kids in itertools.product(*options):
                yield TotalPartitionTree(children=kids)


# ---------------------------------------------------------------------------
# Public generators
# ---------------------------------------------------------------------------


def enumerate_set_partitions(n: int, k: int, min_block: int = 1) -> Iterator[SetPartition]:
    """Partitions of ``[n]`` into ``k`` blocks, each of size at least ``min_block``."""
    if n < 0 or k < 0 or min_block < 1:
        raise ValueError("need n >= 0, k >= 0, min_block >= 1")
    for p in _partitions(tuple(range(1, n + 1)), k, min_block):
        yield SetPartition(p)


def enumerate_ordered_partitions(n: int) -> Iterator[OrderedPartition]:
    if n < 1:
        raise ValueError("need n >= 1")
    for part in _partitions(tuple(range(1, n + 1))):
        for perm in itertools.permutations(part):
            yield OrderedPartition(perm)


def enumerate_schroeder_trees(n: int) -> Iterator[SchroederTree]:
    if n < 1:
        raise ValueError("need n >= 1")
    yield from _schroeder_on(tuple(range(1, n + 1)), False)


def enumerate_increasing_schroeder_trees(n: int) -> Iterator[SchroederTree]:
    if n < 1:
        raise ValueError("need n >= 1")
    yield from _schroeder_on(tuple(range(1, n + 1)), True)


def enrichments(t: SchroederTree) -> Iterator[EnrichedTree]:
    """All ways to place one star in every block of ``t``."""
    child_options = {c.label: tuple(enrichments(c)) for b in t.blocks for c in b}
    star_ranges = [range(len(b) + 1) for b in t.blocks]
    flat = [c.label for b in t.blocks for c in b]
    for picks in itertools.product(*(child_options[x] for x in flat)):
        chosen = dict(zip(flat, picks))
        blocks = tuple(tuple(chosen[c.label] for c in b) for b in t.blocks)
        for stars in itertools.product(*star_ranges):
            yield EnrichedTree(t.label, blocks, stars)


def enumerate_enriched_trees(n: int) -> Iterator[EnrichedTree]:
    for t in enumerate_increasing_schroeder_trees(n):
        yield from enrichments(t)


def enumerate_total_partition_trees(n: int) -> Iterator[TotalPartitionTree]:
    if n < 1:
        raise ValueError("need n >= 1")
    yield from _total_on(tuple(range(1, n + 1)))


def enumerate_meadows(m: int, k: int, increasing: bool = False) -> Iterator[Meadow]:
    """Meadows on ``[m]`` made of ``k`` small trees (each with >= 2 vertices)."""
    if m < 0 or k < 0:
        raise ValueError("need m >= 0, k >= 0")
    for part in _partitions(tuple(range(1, m + 1)), k, 2):
        choices = []
        for b in part:
            roots = b[:1] if increasing else b
            choices.append([SmallTree(r, tuple(x for x in b if x != r)) for r in roots])
        for trees in itertools.product(*choices):
            yield Meadow(trees)


def enumerate_semilabeled_trees(num_leaves: int, num_internal: int) -> Iterator[TotalPartitionTree]:
    """Semi-labeled rooted trees: leaves ``[num_leaves]``, ``num_internal`` unlabeled vertices."""
    if num_leaves < 1 or num_internal < 1:
        raise ValueError("need num_leaves >= 1 and num_internal >= 1")
    yield from _semilabeled_on(tuple(range(1, num_leaves + 1)), num_internal)


# ---------------------------------------------------------------------------
# Type, weight, sign
# ---------------------------------------------------------------------------


def _sizes(obj) -> Iterator[int]:
    if isinstance(obj, (SchroederTree, EnrichedTree)):
        return obj.block_sizes()
    if isinstance(obj, OrderedPartition):
        return (len(b) for b in obj.blocks)
    if isinstance(obj, SetPartition):
        return (len(b) - 1 for b in obj.blocks)
    if isinstance(obj, TotalPartitionTree):
        return (d - 1 for d in obj.internal_degrees())
    if isinstance(obj, Meadow):
        return (len(s.leaves) for s in obj.trees)
    if isinstance(obj, SmallTree):
        return iter((len(obj.leaves),))
    raise TypeError(f"no type defined for {type(obj).__name__}")


def type_of(obj) -> TypeVector:
    """Type of ``obj`` in the weight convention matching its family.

    Schroeder-family trees and ordered partitions count block sizes; a small
    tree on i+1 vertices, a set-partition block of size i+1 and an internal
    vertex with i+1 children all count as size i.
    """
    return TypeVector.from_sizes(_sizes(obj))


def weight_of(obj, weights: Callable[[int], Fraction]) -> Fraction:
    """Product of ``weights(size)`` over the type of ``obj``."""
    out = Fraction(1)
    for size, mult in type_of(obj).items:
        out *= Fraction(weights(size)) ** mult
    return out


def sign_of(obj) -> int:
    """Product of (-1)^(|B|+1) over blocks, for Schroeder-family trees and ordered partitions."""
    if isinstance(obj, (SchroederTree, EnrichedTree, OrderedPartition)):
        odd = sum(1 for s in _sizes(obj) if s % 2 == 0)
        return -1 if odd % 2 else 1
    raise TypeError(f"no sign defined for {type(obj).__name__}")


def canonicalize(obj):
    """Return ``obj`` with every unordered collection put in canonical order."""
    if isinstance(obj, SchroederTree):
        return obj.relabel(lambda x: x)
    if isinstance(obj, EnrichedTree):
        # re-sorting a block would move the star's meaning, so only recurse
        return EnrichedTree(
            obj.label,
            tuple(tuple(canonicalize(c) for c in b) for b in obj.blocks),
            obj.stars,
        )
    if isinstance(obj, TotalPartitionTree):
        return obj.relabel(lambda x: x)
    if isinstance(obj, SetPartition):
        return SetPartition(tuple(sorted(tuple(sorted(b)) for b in obj.blocks)))
    if isinstance(obj, OrderedPartition):
        return OrderedPartition(tuple(tuple(sorted(b)) for b in obj.blocks))
    if isinstance(obj, Meadow):
        trees = [SmallTree(s.root, tuple(sorted(s.leaves))) for s in obj.trees]
        return Meadow(tuple(sorted(trees, key=lambda s: min(s.vertices))))
    raise TypeError(f"cannot canonicalize {type(obj).__name__}")


# ---------------------------------------------------------------------------
# JSON encodings
# ---------------------------------------------------------------------------


def to_json(obj):
    """Plain JSON-ready structure for any family member."""
    if isinstance(obj, EnrichedTree):
        return {
            "label": obj.label,
            "blocks": [[to_json(c) for c in b] for b in obj.blocks],
            "star": list(obj.stars),
        }
    if isinstance(obj, SchroederTree):
        return {"label": obj.label, "blocks": [[to_json(c) for c in b] for b in obj.blocks]}
    if isinstance(obj, TotalPartitionTree):
        if obj.leaf is not None:
            return {"leaf": obj.leaf}
        return {"children": [to_json(c) for c in obj.children]}
    if isinstance(obj, (SetPartition, OrderedPartition)):
        return [list(b) for b in obj.blocks]
    if isinstance(obj, Meadow):
        return [{"root": s.root, "leaves": list(s.leaves)} for s in obj.trees]
    raise TypeError(f"no JSON encoding for {type(obj).__name__}")


def _int(x) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ValueError(f"expected an integer label, got {x!r}")
    return x


def _schroeder_from(data) -> SchroederTree:
    if not isinstance(data, dict) or set(data) - {"label", "blocks"} or "label" not in data:
        raise ValueError(f"not a Schroeder tree node: {data!r}")
    blocks = data.get("blocks", [])
    if not isinstance(blocks, list):
        raise ValueError("'blocks' must be a list")
    return SchroederTree(
        _int(data["label"]),
        tuple(tuple(_schroeder_from(c) for c in _list(b)) for b in blocks),
    )


def _enriched_from(data) -> EnrichedTree:
    if not isinstance(data, dict) or set(data) - {"label", "blocks", "star"} or "label" not in data:
        raise ValueError(f"not an enriched tree node: {data!r}")
    blocks = _list(data.get("blocks", []))
    stars = tuple(_int(s) for s in _list(data.get("star", [])))
    return EnrichedTree(
        _int(data["label"]),
        tuple(tuple(_enriched_from(c) for c in _list(b)) for b in blocks),
        stars,
    )


def _tpt_from(data) -> TotalPartitionTree:
    if isinstance(data, dict) and set(data) == {"leaf"}:
        return TotalPartitionTree(leaf=_int(data["leaf"]))
    if isinstance(data, dict) and set(data) == {"children"}:
        kids = _list(data["children"])
        if not kids:
            raise ValueError("internal vertex without children")
        return TotalPartitionTree(children=tuple(_tpt_from(c) for c in kids))
    raise ValueError(f"not a total partition tree node: {data!r}")


def _list(x) -> list:
    if not isinstance(x, list):
        raise ValueError(f"expected a list, got {x!r}")
    return x


FAMILIES = ("setpart", "oppart", "schroeder", "inc-schroeder", "enriched", "total", "semilabeled")


def from_json(data, family: str):
    """Decode and validate ``data`` as a member of ``family``.

    Raises ``ValueError`` for malformed or non-canonical input.
    """
    if family in ("schroeder", "inc-schroeder"):
        t = _schroeder_from(data)
        t.validate()
        if family == "inc-schroeder" and not t.is_increasing():
            raise ValueError("tree is not increasing")
        return t
    if family == "enriched":
        t = _enriched_from(data)
        base = t.base()
        base.validate()
        if not base.is_increasing():
            raise ValueError("enriched tree is not increasing")
        return t
    if family in ("total", "semilabeled"):
        t = _tpt_from(data)
        t.validate(total=family == "total")
        return t
    if family in ("setpart", "oppart"):
        blocks = tuple(tuple(_int(x) for x in _list(b)) for b in _list(data))
        obj = SetPartition(blocks) if family == "setpart" else OrderedPartition(blocks)
        obj.validate()
        return obj
    raise ValueError(f"unknown family {family!r}")
