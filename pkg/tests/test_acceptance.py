"""Acceptance gate: every release criterion at its stated scale.

Each test prints one [acceptance] PASS/FAIL line (visible with -s).
Exact equalities throughout; the only tolerances are the two wall-clock
budgets of the performance criterion.
"""

import time

from singover.distribution import build_sequence, parity_census
from singover.oracle import enumerate_overpartitions
from singover.params import SingularParams
from singover.parity import (
    convolution_parity_check,
    exclusion_counterexamples,
    find_even_in_interval,
    find_odd_in_interval,
    first_convolution_mismatch,
)
from singover.qseries import generalized_pentagonals, reduce_mod2
from singover.tables import (
    clear_caches,
    coefficients_product,
    coefficients_theta,
    parity_table,
    special_form,
)

NINE_PARAMS = [
    (3, 1), (4, 1), (5, 1), (5, 2), (6, 2), (7, 1), (7, 3), (11, 1), (13, 1),
]
EQUIV_DEGREE = 2000
PRIMES_EXCLUSION = (5, 7, 11, 13, 17, 19)
PRIMES_INTERVALS = (5, 7, 11)


def report(tag, ok, detail=""):
    line = f"[acceptance] {tag}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    print(line)
    assert ok, line


def test_c01_worked_example():
    start = time.perf_counter()
    params = SingularParams(3, 1)
    values = {
        "product": coefficients_product(params, 4)[4],
        "theta": coefficients_theta(params, 4)[4],
        "oracle": enumerate_overpartitions(params, 4).count,
    }
    elapsed = time.perf_counter() - start
    ok = set(values.values()) == {10} and elapsed < 1.0
    report("C01 worked-example C(3,1;4)=10 three ways", ok, f"{elapsed:.3f}s {values}")


def test_c02_pipeline_equivalence():
    bad = []
    for k, i in NINE_PARAMS:
        params = SingularParams(k, i)
        prod = coefficients_product(params, EQUIV_DEGREE)
        theta = coefficients_theta(params, EQUIV_DEGREE)
        if prod.values != theta.values:
            bad.append((k, i))
    report(
        f"C02 product==theta for {len(NINE_PARAMS)} params at N={EQUIV_DEGREE}",
        not bad,
        f"mismatches={bad}",
    )


def test_c03_special_form_equivalence():
    bad = []
    for family in ("3k", "4k", "6k"):
        for scale in (1, 2, 3):
            table = special_form(family, scale, 1000)
            general = coefficients_product(table.params, 1000)
            if table.values != general.values:
                bad.append((family, scale))
    report("C03 special eta-quotients == general product at N=1000", not bad, f"{bad}")


def test_c04_oracle_equivalence():
    bad = []
    for k, i in NINE_PARAMS:
        params = SingularParams(k, i)
        table = coefficients_theta(params, EQUIV_DEGREE)
        for n in range(31):
            if table[n] != enumerate_overpartitions(params, n).count:
                bad.append((k, i, n))
    report("C04 series values == enumeration for n<=30", not bad, f"{bad[:5]}")


def test_c05_cited_parity_facts():
    n = EQUIV_DEGREE
    t31 = coefficients_theta(SingularParams(3, 1), n)
    t41 = coefficients_theta(SingularParams(4, 1), n)
    t62 = coefficients_theta(SingularParams(6, 2), n)
    pents = generalized_pentagonals(n)
    ok31 = all(t31.parity(e) == 0 for e in range(1, n + 1))
    ok41 = all(t41.parity(e) == 0 for e in range(1, n + 1, 2))
    ok62 = all(t62.parity(e) == (1 if e in pents else 0) for e in range(1, n + 1))
    report(
        f"C05 parity facts (3,1)/(4,1)/(6,2) to N={n}",
        ok31 and ok41 and ok62,
        f"c31={ok31} c41={ok41} c62={ok62}",
    )


def test_c06_convolution_identity():
    bad = []
    for k, i in NINE_PARAMS:
        params = SingularParams(k, i)
        table = coefficients_theta(params, EQUIV_DEGREE).truncate(1000)
        if first_convolution_mismatch(params, table) is not None:
            bad.append((k, i, "wholesale"))
        for n in range(1, 1001):
            if not convolution_parity_check(params, n, table):
                bad.append((k, i, n))
                break
    report("C06 pentagonal convolution parity for n<=1000", not bad, f"{bad[:5]}")


def test_c07_form_exclusions():
    start = time.perf_counter()
    bad = []
    for p in PRIMES_EXCLUSION:
        for variant in ("even", "odd"):
            cases = exclusion_counterexamples(p, 10_000, variant)
            if cases:
                bad.append((p, variant, cases[:3]))
    elapsed = time.perf_counter() - start
    report(
        "C07 form exclusions for p in {5..19}, l<=10^4",
        not bad and elapsed < 30.0,
        f"{elapsed:.2f}s {bad}",
    )


def test_c08_interval_witnesses():
    top = 80 * (3 * 80 + 1) // 2  # covers every interval for l <= 80
    bad = []
    for p in PRIMES_INTERVALS:
        params = SingularParams(p, 1)
        packed = parity_table(params, top)
        exact = coefficients_theta(params, top)
        for ell in range(4, 81, 3):
            w = find_even_in_interval(params, ell, packed)
            if not (w.lo <= w.n <= w.hi and exact[w.n] % 2 == 0):
                bad.append((p, "even", ell))
        for ell in range(2, 81, 3):
            w = find_odd_in_interval(params, ell, packed)
            if not (w.lo <= w.n <= w.hi and exact[w.n] % 2 == 1):
                bad.append((p, "odd", ell))
    report("C08 interval witnesses for p in {5,7,11}, l<=80", not bad, f"{bad[:5]}")


def test_c09_distribution():
    params = SingularParams(5, 1)
    table = parity_table(params, 10_000)
    ok = True
    details = []
    for x in (100, 1000, 10_000):
        rep = parity_census(5, x, table)
        ok &= rep.even_dominates and rep.odd_dominates
        ok &= rep.even_count + rep.odd_count == x
        details.append(
            f"X={x}: even {rep.even_count}>={rep.even_lower_bound}, "
            f"odd {rep.odd_count}>={rep.odd_lower_bound}"
        )
        for variant, seed in (("even", 4), ("odd", 2)):
            seq = build_sequence(variant, seed, x)
            ok &= seq.mod3_invariant_holds()
            ok &= seq.chain_inequalities_hold()
            ok &= seq.power_chain_bound_holds()
    report("C09 census dominance and sequence invariants", ok, "; ".join(details))


def test_c10_performance():
    clear_caches()
    params = SingularParams(5, 1)

    start = time.perf_counter()
    packed = parity_table(params, 100_000)
    parity_time = time.perf_counter() - start

    start = time.perf_counter()
    exact = coefficients_theta(params, 10_000)
    exact_time = time.perf_counter() - start

    mask = (1 << 10_001) - 1
    agree = (packed.bits & mask) == reduce_mod2(exact.series()).bits
    ok = parity_time <= 10.0 and exact_time <= 60.0 and agree and exact[0] == 1
    report(
        "C10 performance budgets",
        ok,
        f"parity 10^5 in {parity_time:.2f}s (<=10s), "
        f"exact 10^4 in {exact_time:.2f}s (<=60s), paths agree={agree}",
    )
