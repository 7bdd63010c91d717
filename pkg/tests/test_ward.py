from __future__ import annotations

from fractions import Fraction
from math import prod

import pytest
from hypothesis import given, strategies as hst

from wardtrees import exactmath as em
from wardtrees import structures as st
from wardtrees import ward as wd


def partitions_min2(n, k):
    """Brute force: restricted growth words with k letters, each used >= 2 times."""

    def words(prefix, top):
        if len(prefix) == n:
            yield prefix
            return
        for letter in range(min(top + 2, k)):
            yield from words(prefix + (letter,), max(top, letter))

    return sum(1 for w in words((), -1) if all(w.count(j) >= 2 for j in range(k)))


def weighted_by_trees(n, k, g):
    return sum(
        (prod((g(s) for s in t.block_sizes()), start=Fraction(1))
         for t in st.enumerate_increasing_schroeder_trees(n + 1) if t.num_blocks == k),
        Fraction(0),
    )


# ---------------------------------------------------------------------------
# unweighted table
# ---------------------------------------------------------------------------


def test_first_rows():
    t = wd.ward_recurrence_table(4)
    assert t.entries == [[1], [0, 1], [0, 1, 3], [0, 1, 10, 15], [0, 1, 25, 105, 105]]
    assert [t.row_sum(n) for n in range(5)] == [1, 1, 4, 26, 236]
    assert [t.alternating_sum(n) for n in range(5)] == [1, 1, 2, 6, 24]


@pytest.mark.parametrize("n", range(0, 6))
def test_recurrence_matches_brute_force(n):
    t = wd.ward_recurrence_table(n)
    for k in range(n + 1):
        assert t(n, k) == partitions_min2(n + k, k)
        assert t(n, k) == wd.s2_recurrence(n + k, k)


def test_boundary_columns():
    t = wd.ward_recurrence_table(20)
    for n in range(1, 21):
        assert t(n, 1) == 1
        assert t(n, n) == em.double_factorial_odd(n)
        if n >= 2:
            assert t(n, 2) == 2 ** (n + 1) - n - 3
    assert t(3, 7) == 0 and t(25, 1) == 0


def test_closed_form_set_kernel():
    t = wd.ward_recurrence_table(12)
    for n in range(13):
        for k in range(n + 1):
            assert wd.ward_closed_form(n, k, "set") == t(n, k)
    with pytest.raises(ValueError):
        wd.ward_closed_form(3, 1, "nope")


def test_table_serialisation():
    t = wd.ward_recurrence_table(2)
    assert t.to_csv() == "n,k,value\n0,0,1\n1,0,0\n1,1,1\n2,0,0\n2,1,1\n2,2,3\n"
    js = t.to_json()
    assert js["rows"] == [["1"], ["0", "1"], ["0", "1", "3"]]
    assert js["row_sums"] == ["1", "1", "4"]
    with pytest.raises(ValueError):
        wd.ward_recurrence_table(-1)


# ---------------------------------------------------------------------------
# weights
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "spec,values",
    [
        ("ones", [1, 1, 1, 1]),
        ("i_plus_1", [2, 3, 4, 5]),
        ("factorial_i", [1, 2, 6, 24]),
        ("factorial_i_plus_1", [2, 6, 24, 120]),
        ("factorial_i_minus_1", [1, 1, 2, 6]),
        ("delta:2:3/2", [0, Fraction(3, 2), 0, 0]),
        ("delta1", [1, 0, 0, 0]),
        ("delta2", [2, 0, 0, 0]),
        ("list:1,1/2,-3,4", [1, Fraction(1, 2), -3, 4]),
        ("1,1/2,-3,4", [1, Fraction(1, 2), -3, 4]),
        ("signed:ones", [1, -1, 1, -1]),
    ],
)
def test_parse_weights(spec, values):
    g = wd.parse_weights(spec)
    assert [g(i) for i in range(1, 5)] == values


@pytest.mark.parametrize("spec", ["", "bogus", "delta:x:1", "delta:1", "list:", "list:1,a", "delta:0:1"])
def test_parse_weights_rejects(spec):
    with pytest.raises(ValueError):
        wd.parse_weights(spec)


def test_weight_list_does_not_pad():
    g = wd.WeightSystem.from_list([1, 2])
    with pytest.raises(wd.IncompleteWeightsError):
        g(3)
    with pytest.raises(wd.IncompleteWeightsError):
        g(0)
    with pytest.raises(wd.IncompleteWeightsError):
        wd.weighted_ward_table(4, g)
    assert wd.weighted_ward_table(2, g)(2, 1) == 2


GENERIC = [
    wd.WeightSystem.preset("ones"),
    wd.WeightSystem.preset("i_plus_1"),
    wd.WeightSystem.delta(2, Fraction(-3, 4)),
    wd.WeightSystem.from_list([Fraction(2, 3), -1, 5, Fraction(1, 7), 3]),
    wd.WeightSystem.preset("factorial_i").signed(),
]


@pytest.mark.parametrize("g", GENERIC, ids=lambda g: g.name)
def test_weighted_table_matches_tree_weights(g):
    t = wd.weighted_ward_table(4, g)
    for n in range(5):
        for k in range(n + 1):
            if n == 0:
                assert t(0, 0) == 1
                continue
            assert t(n, k) == weighted_by_trees(n, k, g)
            assert wd.weighted_ward(n, k, g) == t(n, k)


@pytest.mark.parametrize("g", GENERIC, ids=lambda g: g.name)
def test_weighted_table_matches_set_partition_weights(g):
    t = wd.weighted_ward_table(4, g)
    for n in range(1, 5):
        for k in range(1, n + 1):
            direct = sum(
                (prod((g(len(b) - 1) for b in p.blocks), start=Fraction(1))
                 for p in st.enumerate_set_partitions(n + k, k, 2)),
                Fraction(0),
            )
            assert t(n, k) == direct


@given(hst.lists(hst.fractions(max_denominator=20), min_size=8, max_size=8))
def test_weighted_entries_are_homogeneous(vals):
    g = wd.WeightSystem.from_list(vals)
    t = wd.weighted_ward_table(6, g)
    # each entry is homogeneous of degree k in the weights
    g2 = wd.WeightSystem.from_list([2 * v for v in vals])
    t2 = wd.weighted_ward_table(6, g2)
    for n in range(7):
        for k in range(n + 1):
            assert t2(n, k) == 2 ** k * t(n, k)


def test_weighted_ones_equals_unweighted():
    a = wd.weighted_ward_table(12, wd.WeightSystem.preset("ones"))
    b = wd.ward_recurrence_table(12)
    assert a.entries == b.entries


@pytest.mark.parametrize("kind,preset", [("enriched", "i_plus_1"), ("cycle", "factorial_i"), ("lah", "factorial_i_plus_1")])
def test_closed_forms_against_weighted_tables(kind, preset):
    t = wd.weighted_ward_table(9, wd.WeightSystem.preset(preset))
    for n in range(10):
        for k in range(n + 1):
            assert wd.ward_closed_form(n, k, kind) == t(n, k)


# ---------------------------------------------------------------------------
# counts and sequences
# ---------------------------------------------------------------------------


def test_schroeder_tree_count():
    assert [wd.schroeder_tree_count(m) for m in range(1, 8)] == [1, 2, 15, 184, 3155, 69516, 1871583]
    for m in range(1, 5):
        assert wd.schroeder_tree_count(m) == sum(1 for _ in st.enumerate_schroeder_trees(m))


@pytest.mark.parametrize("g", GENERIC, ids=lambda g: g.name)
def test_wv_sequences_against_enumeration(g):
    W, V = wd.wv_sequences(g, 5)
    for n in range(1, 6):
        trees = list(st.enumerate_increasing_schroeder_trees(n))
        weight = lambda t: prod((g(s) for s in t.block_sizes()), start=Fraction(1))
        assert W[n - 1] == sum((weight(t) for t in trees), Fraction(0))
        if n >= 2:
            one_block = [t for t in trees if len(t.blocks) == 1]
            assert V[n - 2] == sum((weight(t) for t in one_block), Fraction(0))


def test_wv_sequences_ones():
    W, V = wd.wv_sequences(wd.WeightSystem.preset("ones"), 6)
    assert W == [1, 1, 4, 26, 236, 2752]
    assert V == [1, 2, 8, 52, 472]


def test_specialization_suite():
    rep = wd.specialization_suite(8)
    assert rep["ok"], rep["failures"][:1]
    assert rep["N"] == 8 and len(rep["rows"]) >= 8
    with pytest.raises(ValueError):
        wd.specialization_suite(10)


def test_little_schroeder():
    assert [wd.little_schroeder(n) for n in range(9)] == [1, 1, 3, 11, 45, 197, 903, 4279, 20793]
    t = wd.weighted_ward_table(8, wd.WeightSystem.preset("factorial_i_plus_1"))
    assert [t.row_sum(n) for n in range(1, 6)] == [2, 18, 264, 5400, 141840]
