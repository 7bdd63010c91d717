"""Verification suites driven by ``wardtrees verify``.

Each suite is a list of named checks.  A check returns ``(ok, detail)``
where ``detail`` is JSON-ready and, on failure, carries the first
counterexample found.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from fractions import Fraction
from typing import Callable

from . import bijections as bj
from . import exactmath as em
from . import series as sr
from . import structures as st
from . import ward as wd

SUITES = ("recurrences", "bijections", "involutions", "chen-counts", "table2", "series")

# the pair drawn for the total partition {1,2,5 | 3 | 4,6} example
EXAMPLE_TOTAL = {"children": [
    {"children": [{"leaf": 1}, {"children": [{"leaf": 2}, {"leaf": 5}]}]},
    {"leaf": 3},
    {"children": [{"leaf": 4}, {"leaf": 6}]},
]}
EXAMPLE_INCREASING = {"label": 1, "blocks": [
    [{"label": 3, "blocks": []}, {"label": 4, "blocks": [[{"label": 6, "blocks": []}]]}],
    [{"label": 2, "blocks": [[{"label": 5, "blocks": []}]]}],
]}


def _fail(what, **detail):
    return False, {"counterexample": what, **detail}


# ---------------------------------------------------------------------------
# recurrences
# ---------------------------------------------------------------------------


def check_boundary_values(N: int = 10):
    t = wd.ward_recurrence_table(N)
    for n in range(1, N + 1):
        for k, expected in ((1, 1), (2, 2 ** (n + 1) - n - 3), (n, em.double_factorial_odd(n)), (0, 0)):
            if n == 1 and k == 2:
                continue
            if t(n, k) != expected:
                return _fail({"n": n, "k": k}, expected=str(expected), got=str(t(n, k)))
    return True, {"N": N}


def check_three_interpretations(N: int = 5):
    """Recurrence values against set partitions, total partition trees and increasing trees."""
    t = wd.ward_recurrence_table(N)
    for n in range(N + 1):
        setpart: Counter = Counter()
        for k in range(n + 1):
            for p in st.enumerate_set_partitions(n + k, k, 2):
                setpart[(k, st.type_of(p))] += 1
        total = Counter((tr.num_internal, st.type_of(tr)) for tr in st.enumerate_total_partition_trees(n + 1))
        inc = Counter((tr.num_blocks, st.type_of(tr)) for tr in st.enumerate_increasing_schroeder_trees(n + 1))
        # a lone leaf has no internal vertex; the single-vertex tree has no blocks
        if setpart != total or setpart != inc:
            return _fail({"n": n}, setpart=_enc(setpart), total=_enc(total), increasing=_enc(inc))
        by_k = Counter()
        for (k, _), c in setpart.items():
            by_k[k] += c
        for k in range(n + 1):
            if by_k.get(k, 0) != t(n, k):
                return _fail({"n": n, "k": k}, expected=str(t(n, k)), got=str(by_k.get(k, 0)))
    return True, {"N": N}


def check_s2_and_closed_forms(N: int = 8):
    t = wd.ward_recurrence_table(N)
    ones = wd.weighted_ward_table(9, wd.WeightSystem.preset("ones"))
    for n in range(N + 1):
        for k in range(n + 1):
            vals = {
                "s2": wd.s2_recurrence(n + k, k),
                "closed_set": wd.ward_closed_form(n, k, "set"),
            }
            for name, v in vals.items():
                if v != t(n, k):
                    return _fail({"n": n, "k": k, "via": name}, expected=str(t(n, k)), got=str(v))
    t9 = wd.ward_recurrence_table(9)
    for n in range(10):
        for k in range(n + 1):
            if ones(n, k) != t9(n, k):
                return _fail({"n": n, "k": k, "via": "weighted"}, expected=str(t9(n, k)), got=str(ones(n, k)))
    return True, {"N": N}


def _enc(counter):
    return {f"{k[0]}|{k[1]}": v for k, v in sorted(counter.items(), key=str)}


# ---------------------------------------------------------------------------
# bijections
# ---------------------------------------------------------------------------


def check_total_increasing(N: int = 6):
    for n in range(1, N + 1):
        images = set()
        for t in st.enumerate_total_partition_trees(n):
            s = bj.total_to_increasing(t)
            ok = (
                s.is_increasing()
                and s.is_canonical()
                and sorted(s.labels()) == list(range(1, n + 1))
                and s.num_blocks == t.num_internal
                and st.type_of(s) == st.type_of(t)
                and bj.increasing_to_total(s) == t
            )
            if not ok:
                return _fail(st.to_json(t), n=n)
            images.add(s)
        count = sum(1 for _ in st.enumerate_increasing_schroeder_trees(n))
        if len(images) != count:
            return _fail({"n": n}, images=len(images), increasing_trees=count)
    left = st.from_json(EXAMPLE_TOTAL, "total")
    right = st.from_json(EXAMPLE_INCREASING, "inc-schroeder")
    if bj.total_to_increasing(left) != right or bj.increasing_to_total(right) != left:
        return _fail("worked example", got=st.to_json(bj.total_to_increasing(left)))
    return True, {"N": N}


# ---------------------------------------------------------------------------
# involutions
# ---------------------------------------------------------------------------

TABLE_PAIRS = [
    ([[1], [3], [2]], [[1], [2, 3]]),
    ([[2], [1], [3]], [[1, 2], [3]]),
    ([[2], [3], [1]], [[2], [1, 3]]),
    ([[3], [1], [2]], [[1, 3], [2]]),
    ([[3], [2], [1]], [[3], [1, 2]]),
    ([[1, 2, 3]], [[2, 3], [1]]),
]


def check_psi_prime(N: int = 7):
    for n in range(1, N + 1):
        rep = bj.check_psi_prime(n)
        if not rep.ok:
            return False, rep.to_dict()
    for a, b in TABLE_PAIRS:
        op = st.from_json(a, "oppart")
        img = bj.psi_prime(op)
        if st.to_json(img) != b or op.sign != 1 or img.sign != -1:
            return _fail(a, expected=b, got=st.to_json(img))
    return True, {"N": N}


def check_stirling_identity(N: int = 10):
    for n in range(1, N + 1):
        if not bj.verify_alternating_stirling_identity(n):
            return _fail({"n": n})
    return True, {"N": N}


def check_psi_n(N: int = 5):
    for n in range(1, N + 1):
        for increasing in (False, True):
            rep = bj.check_psi_n(n, increasing)
            if not rep.ok:
                return False, rep.to_dict()
        if bj.enriched_signed_count(n) != n ** (n - 1):
            return _fail({"n": n, "family": "enriched"})
    return True, {"N": N}


# ---------------------------------------------------------------------------
# count-level checks
# ---------------------------------------------------------------------------


def check_tree_meadow(N: int = 6):
    for n in range(1, N + 1):
        for increasing in (False, True):
            for rep in bj.check_chen_counts(n, None, increasing):
                if not rep.ok:
                    return False, rep.to_dict()
    return True, {"N": N}


def check_enriched(N: int = 6):
    for n in range(1, N + 1):
        rep = bj.check_enriched_counts(n)
        if not rep.ok:
            return False, rep.to_dict()
    return True, {"N": N}


def check_weight_transfer(N: int = 6):
    systems = [wd.WeightSystem.preset(p) for p in wd.PRESETS]
    systems += [wd.WeightSystem.preset("i_plus_1").signed(), wd.WeightSystem.delta(2, Fraction(3, 2)),
                wd.WeightSystem.from_list([Fraction(1, 3), -2, 5, Fraction(7, 11), 4, -1])]
    for n in range(1, N + 1):
        for rep in bj.check_weight_transfer(n, systems):
            if not rep.ok:
                return False, rep.to_dict()
    return True, {"N": N, "weight_systems": [g.name for g in systems]}


def check_semilabeled(max_total: int = 8):
    for n in range(0, max_total):
        for k in range(1, max_total - n + 1):
            rep = bj.check_semilabeled_counts(n, k)
            if not rep.ok or rep.left_total != em.stirling2(n + k, k):
                return False, rep.to_dict()
    return True, {"n_plus_k_max": max_total}


# ---------------------------------------------------------------------------
# table2 and series
# ---------------------------------------------------------------------------


def check_table2(N: int = 8):
    rep = wd.specialization_suite(N)
    if not rep["ok"]:
        return False, {"first_failure": rep["failures"][0]}
    return True, {"N": N, "rows": len(rep["rows"])}


def random_series(rng: random.Random, order: int) -> sr.TruncatedSeries:
    coeffs = [0, 1] + [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(order - 1)]
    return sr.TruncatedSeries.from_coeffs(coeffs, order)


def check_inversion_routes(count: int = 20, order: int = 12, seed: int = 20240601):
    rng = random.Random(seed)
    x = sr.TruncatedSeries.x(order)
    for trial in range(count):
        h = random_series(rng, order)
        a = sr.invert_newton(h)
        b = sr.invert_variant(h)
        if a != b or sr.compose(h, b) != x:
            return _fail(h.to_json(), trial=trial)
        for n in range(1, order + 1):
            if sr.lagrange_classical(h, n) != a.egf(n):
                return _fail(h.to_json(), trial=trial, n=n)
    return True, {"count": count, "order": order, "seed": seed}


def check_ward_egf(N: int = 9):
    h = sr.ward_h_series(wd.WeightSystem.preset("ones"), N)
    W = sr.invert_variant(h)
    if W.egf_coeffs()[1:6] != [1, 1, 4, 26, 236]:
        return _fail("leading EGF coefficients", got=[str(c) for c in W.egf_coeffs()[1:6]])
    t = wd.ward_recurrence_table(N - 1)
    for n in range(1, N + 1):
        if W.egf(n) != t.row_sum(n - 1):
            return _fail({"n": n}, expected=str(t.row_sum(n - 1)), got=str(W.egf(n)))
    return True, {"N": N}


def check_functional_equations(order: int = 12):
    systems = [wd.WeightSystem.preset(p) for p in wd.PRESETS] + [wd.WeightSystem.delta(1, 1), wd.WeightSystem.delta(1, 2)]
    for g in systems:
        rep = sr.ward_functional_check(g, order)
        if not rep["ok"]:
            return False, rep
        Ws, _ = wd.wv_sequences(g, order)
        inv = sr.invert_newton(sr.ward_h_series(g, order))
        if [inv.egf(n) for n in range(1, order + 1)] != Ws:
            return _fail({"weights": g.name, "via": "newton"})
    return True, {"order": order, "weight_systems": [g.name for g in systems]}


def check_sum_formulas(N: int = 9, tail_N: int = 7):
    t = wd.ward_recurrence_table(N)
    for n in range(1, N + 1):
        if sr.ward_double_sum(n) != t.row_sum(n - 1):
            return _fail({"n": n, "via": "double sum"})
    for n in range(1, tail_N + 1):
        partial, _ = sr.ward_tail_sum(n, Fraction(1, 10 ** 12))
        if abs(partial - t.row_sum(n - 1)) >= Fraction(1, 10 ** 6):
            return _fail({"n": n, "via": "tail sum"}, got=float(partial))
    return True, {"N": N, "tail_N": tail_N}


CHECKS: dict[str, list[tuple[str, Callable]]] = {
    "recurrences": [
        ("boundary-values", check_boundary_values),
        ("three-interpretations", check_three_interpretations),
        ("s2-closed-form-weighted", check_s2_and_closed_forms),
    ],
    "bijections": [("total-increasing", check_total_increasing)],
    "involutions": [
        ("psi-prime", check_psi_prime),
        ("stirling-identity", check_stirling_identity),
        ("psi-n", check_psi_n),
    ],
    "chen-counts": [
        ("tree-meadow", check_tree_meadow),
        ("enriched", check_enriched),
        ("weight-transfer", check_weight_transfer),
        ("semilabeled", check_semilabeled),
    ],
    "table2": [("specializations", check_table2)],
    "series": [
        ("inversion-routes", check_inversion_routes),
        ("ward-egf", check_ward_egf),
        ("functional-equations", check_functional_equations),
        ("sum-formulas", check_sum_formulas),
    ],
}


def run_suite(suite: str, timings: bool = False) -> dict:
    """Run one suite (or ``all``) and return a JSON-ready report."""
    names = SUITES if suite == "all" else (suite,)
    results = []
    first_failure = None
    for name in names:
        if name not in CHECKS:
            raise ValueError(f"unknown suite {name!r}")
        for check_name, fn in CHECKS[name]:
            t0 = time.perf_counter()
            try:
                ok, detail = fn()
            except Exception as exc:  # a crash is a failed check, not a crashed run
                ok, detail = False, {"error": f"{type(exc).__name__}: {exc}"}
            entry = {"suite": name, "check": check_name, "ok": ok, "detail": detail}
            if timings:
                entry["seconds"] = round(time.perf_counter() - t0, 3)
            results.append(entry)
            if not ok and first_failure is None:
                first_failure = entry
    return {"suite": suite, "ok": first_failure is None, "checks": results, "first_failure": first_failure}
