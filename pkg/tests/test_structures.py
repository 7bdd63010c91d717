from __future__ import annotations

import itertools
import json
from collections import Counter
from math import prod

import pytest
from hypothesis import given, strategies as hst

from wardtrees import exactmath as em
from wardtrees import structures as st


# ---------------------------------------------------------------------------
# brute-force oracles
# ---------------------------------------------------------------------------


def fubini(m):
    return sum(em.factorial(k) * em.stirling2(m, k) for k in range(m + 1))


def parent_functions(n, increasing=False):
    """Rooted labeled trees on [n] as parent maps (root has parent 0)."""
    for root in ([1] if increasing else range(1, n + 1)):
        others = [v for v in range(1, n + 1) if v != root]
        for parents in itertools.product(range(1, n + 1), repeat=len(others)):
            par = dict(zip(others, parents))
            if increasing and any(p >= v for v, p in par.items()):
                continue
            ok = True
            for v in others:
                seen, u = set(), v
                while u != root:
                    if u in seen:
                        ok = False
                        break
                    seen.add(u)
                    u = par[u]
                if not ok:
                    break
            if ok:
                yield root, par


def schroeder_count_bruteforce(n, increasing=False):
    total = 0
    for _, par in parent_functions(n, increasing):
        kids = Counter(par.values())
        total += prod(fubini(c) for c in kids.values())
    return total


def restricted_growth_count(n, k, min_block):
    count = 0
    for word in itertools.product(range(k), repeat=n):
        if any(word[i] > max(word[:i], default=-1) + 1 for i in range(n)):
            continue
        sizes = Counter(word)
        if len(sizes) == k and min(sizes.values(), default=min_block) >= min_block:
            count += 1
    return count


# ---------------------------------------------------------------------------
# enumeration counts
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 6))
def test_schroeder_counts(n):
    trees = list(st.enumerate_schroeder_trees(n))
    assert len(trees) == len(set(trees)) == schroeder_count_bruteforce(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_increasing_schroeder_counts(n):
    trees = list(st.enumerate_increasing_schroeder_trees(n))
    assert len(trees) == len(set(trees)) == schroeder_count_bruteforce(n, increasing=True)
    assert all(t.is_increasing() for t in trees)


def test_known_prefixes():
    assert [sum(1 for _ in st.enumerate_schroeder_trees(n)) for n in range(1, 6)] == [1, 2, 15, 184, 3155]
    assert [sum(1 for _ in st.enumerate_total_partition_trees(n)) for n in range(1, 7)] == [1, 1, 4, 26, 236, 2752]
    assert [sum(1 for _ in st.enumerate_ordered_partitions(n)) for n in range(1, 7)] == [fubini(n) for n in range(1, 7)]


@pytest.mark.parametrize("n,k,m", [(n, k, m) for n in range(0, 7) for k in range(0, n + 1) for m in (1, 2, 3)])
def test_set_partition_counts(n, k, m):
    parts = list(st.enumerate_set_partitions(n, k, m))
    assert len(parts) == restricted_growth_count(n, k, m)
    for p in parts:
        p.validate()
        assert min((len(b) for b in p.blocks), default=m) >= m


def test_set_partition_example_listing():
    got = [st.to_json(p) for p in st.enumerate_set_partitions(4, 2, 2)]
    assert got == [[[1, 2], [3, 4]], [[1, 3], [2, 4]], [[1, 4], [2, 3]]]


def test_enriched_counts_follow_star_slots():
    for n in range(1, 6):
        expected = sum(prod(s + 1 for s in t.block_sizes()) for t in st.enumerate_increasing_schroeder_trees(n))
        assert sum(1 for _ in st.enumerate_enriched_trees(n)) == expected


def test_meadows():
    ms = list(st.enumerate_meadows(5, 2))
    # blocks {2,3}: 10 splits, 2*3 roots each
    assert len(ms) == 60
    inc = list(st.enumerate_meadows(5, 2, increasing=True))
    assert len(inc) == 10 and all(m.is_increasing() for m in inc)
    assert all(m.num_vertices == 5 for m in ms)


@pytest.mark.parametrize("leaves,internal", [(a, b) for a in range(1, 5) for b in range(1, 5) if a + b <= 7])
def test_semilabeled_counts(leaves, internal):
    trees = list(st.enumerate_semilabeled_trees(leaves, internal))
    assert len(trees) == len(set(trees)) == em.stirling2(leaves + internal - 1, internal)
    for t in trees:
        t.validate(total=False)
        assert t.num_internal == internal
        assert sorted(t.leaves()) == list(range(1, leaves + 1))


def test_semilabeled_small_listing():
    assert sum(1 for _ in st.enumerate_semilabeled_trees(2, 2)) == 3
    assert sum(1 for _ in st.enumerate_semilabeled_trees(3, 2)) == 7


def test_total_partition_trees_are_total():
    for n in range(1, 6):
        for t in st.enumerate_total_partition_trees(n):
            t.validate()
            assert sorted(t.leaves()) == list(range(1, n + 1))


# ---------------------------------------------------------------------------
# types, weights, signs
# ---------------------------------------------------------------------------


def test_type_totals():
    for n in range(1, 6):
        for t in st.enumerate_schroeder_trees(n):
            assert st.type_of(t).total == n - 1
            assert st.type_of(t).num_parts == t.num_blocks
        for t in st.enumerate_total_partition_trees(n):
            assert st.type_of(t).total == n - 1
            assert st.type_of(t).num_parts == t.num_internal
    for p in st.enumerate_set_partitions(6, 2, 2):
        assert st.type_of(p).total == 4


def test_type_vector_rendering_and_validation():
    tv = st.TypeVector.from_sizes([1, 2, 1, 1])
    assert str(tv) == "1^3 2^1"
    assert tv.total == 5 and tv.num_parts == 4
    assert str(st.TypeVector()) == "()"
    with pytest.raises(ValueError):
        st.TypeVector(((2, 1), (1, 1)))
    with pytest.raises(ValueError):
        st.TypeVector(((1, 0),))


def test_weight_and_sign():
    t = st.from_json({"label": 1, "blocks": [[{"label": 2, "blocks": []}, {"label": 3, "blocks": []}]]}, "schroeder")
    assert st.weight_of(t, lambda i: i + 5) == 7
    assert st.sign_of(t) == -1
    op = st.OrderedPartition.of([1], [2, 3])
    assert st.sign_of(op) == op.sign == -1
    with pytest.raises(TypeError):
        st.sign_of(st.TotalPartitionTree(leaf=1))


# ---------------------------------------------------------------------------
# JSON round trip and canonical forms
# ---------------------------------------------------------------------------

SAMPLES = {
    "schroeder": list(st.enumerate_schroeder_trees(4)),
    "inc-schroeder": list(st.enumerate_increasing_schroeder_trees(5)),
    "enriched": list(st.enumerate_enriched_trees(4)),
    "total": list(st.enumerate_total_partition_trees(5)),
    "oppart": list(st.enumerate_ordered_partitions(4)),
    "setpart": list(st.enumerate_set_partitions(6, 3)),
    "semilabeled": list(st.enumerate_semilabeled_trees(3, 3)),
}


@given(hst.sampled_from(sorted(SAMPLES)), hst.data())
def test_json_round_trip(family, data):
    obj = data.draw(hst.sampled_from(SAMPLES[family]))
    text = json.dumps(st.to_json(obj))
    assert st.from_json(json.loads(text), family) == obj
    assert st.canonicalize(obj) == obj


@given(hst.sampled_from(SAMPLES["schroeder"]), hst.permutations([1, 2, 3, 4]))
def test_relabel_preserves_shape(t, perm):
    r = t.relabel(lambda x: perm[x - 1])
    assert r.is_canonical()
    assert st.type_of(r) == st.type_of(t)
    assert st.canonicalize(r) == r
    back = r.relabel(lambda x: perm.index(x) + 1)
    assert back == t


@pytest.mark.parametrize(
    "data,family",
    [
        ({"label": 1, "blocks": [[{"label": 3, "blocks": []}, {"label": 2, "blocks": []}]]}, "schroeder"),
        ({"label": 1, "blocks": [[]]}, "schroeder"),
        ({"label": 1, "blocks": [[{"label": 1, "blocks": []}]]}, "schroeder"),
        ({"label": 2, "blocks": [[{"label": 1, "blocks": []}]]}, "inc-schroeder"),
        ({"children": [{"leaf": 1}]}, "total"),
        ({"children": [{"leaf": 2}, {"leaf": 1}]}, "total"),
        ({"children": []}, "semilabeled"),
        ([[1], [3]], "oppart"),
        ([[2, 1]], "setpart"),
        ([[2], [1]], "setpart"),
        ({"label": "1"}, "schroeder"),
        ({"leaf": True}, "total"),
    ],
)
def test_from_json_rejects(data, family):
    with pytest.raises(ValueError):
        st.from_json(data, family)


def test_canonicalize_sorts():
    p = st.SetPartition(((3, 2), (1,)))
    assert st.canonicalize(p) == st.SetPartition(((1,), (2, 3)))
    t = st.TotalPartitionTree(children=(st.TotalPartitionTree(leaf=2), st.TotalPartitionTree(leaf=1)))
    assert st.to_json(st.canonicalize(t)) == {"children": [{"leaf": 1}, {"leaf": 2}]}
