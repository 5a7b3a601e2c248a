"""Acceptance gate: the nine headline guarantees, one pass/fail line each.

Each criterion is evaluated end to end through the public surface and then
reported as `CRITERION n: PASS` or `CRITERION n: FAIL`.  Runtime targets are
asserted where a bound is part of the guarantee.
"""

import time

from k3family import (
    DEFAULT_PRIME,
    CheckSpec,
    classify,
    OrderTriple,
    default_specs,
    run_checks,
)


def _timed(specs):
    t0 = time.perf_counter()
    rep = run_checks(specs)
    return rep, time.perf_counter() - t0


def _verdict(n, ok):
    print(f"CRITERION {n}: {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {n} failed"


def test_criterion_1_slice_factorization():
    rep, elapsed = _timed([CheckSpec(name="slice-factorization", slice_weights=(4, 42))])
    (chk,) = rep.checks
    final = chk.witnesses["attempts"][-1]
    ok = (
        chk.status == "pass"
        and final["deg_k"] == 1092
        and final["deg_r"] == 196
        and final["r_cubed_divides_k"]
        and final["deg_cofactor"] == 504
        and chk.witnesses["multiplicity"] == 3
        and elapsed < 60
    )
    _verdict(1, ok)


def test_criterion_2_univariate_restriction_divisibility():
    rep, elapsed = _timed([CheckSpec(name="univariate-divisibility")])
    (chk,) = rep.checks
    w = chk.witnesses
    ok = (
        chk.status == "pass"
        and set(w) == {"t4", "t42"}  # two different free variables
        and w["t4"]["interp_bound_k"] == 273
        and w["t4"]["interp_bound_r"] == 49
        and all(case["r_cubed_divides_k"] for case in w.values())
        and all(case["cofactor_degree_identity"] for case in w.values())
        and elapsed < 120
    )
    _verdict(2, ok)


def test_criterion_3_scaling_degree_probes():
    rep, elapsed = _timed([CheckSpec(name="scaling-degree-probes")])
    (chk,) = rep.checks
    w = chk.witnesses
    trials = w["probe-trials"]
    # aggregate false-accept probability: trials independent probes, each
    # fooled with chance <= degree/prime
    aggregate = trials * 1092 / DEFAULT_PRIME
    ok = (
        chk.status == "pass"
        and w["k-scales-as-degree-1092"]
        and w["r-scales-as-degree-196"]
        and w["false-claim-1091-rejected"]
        and trials == 20
        and aggregate < 2**-40
        and w["h-ambient-degree-84"]
        and w["h-u-degree-14"]
        and elapsed < 10
    )
    _verdict(3, ok)


def test_criterion_4_lemma_and_remark_orders():
    t0 = time.perf_counter()
    rep = run_checks([CheckSpec(name="lemma-order"), CheckSpec(name="remark-orders")])
    elapsed = time.perf_counter() - t0
    by_name = {c.name: c for c in rep.checks}
    lemma = by_name["lemma-order"]
    remark = by_name["remark-orders"]
    pairs = {"(2,2)", "(3,2)", "(3,3)", "(4,3)", "(5,2)", "(4,4)"}
    ok = (
        rep.all_pass()
        and lemma.witnesses["order"] == 3
        and lemma.witnesses["weierstrass-form-order"] == 3
        and set(remark.witnesses) == pairs
        and all(case["order"] == case["expected"] for case in remark.witnesses.values())
        and elapsed < 30
    )
    _verdict(4, ok)


def test_criterion_5_nonrdp_parametrization():
    rep, elapsed = _timed([CheckSpec(name="nonrdp-parametrization")])
    (chk,) = rep.checks
    w = chk.witnesses
    ok = (
        chk.status == "pass"
        and w["points_per_field"] == 100
        and w["identities"]
        and w["detector_exact"]
        and w["r_and_k_vanish"]
        and elapsed < 10
    )
    _verdict(5, ok)


def test_criterion_6_kodaira_suite():
    rep, elapsed = _timed([CheckSpec(name="kodaira-fibers")])
    (chk,) = rep.checks
    w = chk.witnesses
    ok = (
        chk.status == "pass"
        and classify(OrderTriple(4, 5, 10)).tag == "II*"
        and w["infinity-fiber-points"] == 1000
        and w["infinity-fiber-type"] == "II*"
        and w["double-root-fiber"] == "I2"
        and w["double-root-k"] == 0
        and w["double-root-r-nonzero"]
        and w["double-vanishing-fiber"] == "II"
        and w["double-vanishing-r"] == 0
        and w["euler-sum"] == 24
        and elapsed < 60
    )
    _verdict(6, ok)


def test_criterion_7_lattice_suite():
    rep, elapsed = _timed([CheckSpec(name="lattice-invariants")])
    (chk,) = rep.checks
    w = chk.witnesses
    ok = (
        chk.status == "pass"
        and w["t237-determinant"] == -1
        and tuple(w["t237-signature"]) == (1, 9)
        and w["t237-even"]
        and w["basis-changes-stable"] == 20
        and elapsed < 5
    )
    _verdict(7, ok)


def test_criterion_8_degree_ledger():
    rep, elapsed = _timed([CheckSpec(name="degree-ledger")])
    (chk,) = rep.checks
    rows = {r["identity"]: r for r in chk.witnesses["identities"]}
    ok = (
        chk.status == "pass"
        and rows["parameter-weight-sum"]["computed"] == 242
        and rows["moduli-dimension"]["computed"] == 10 == -242 + 504 // 2
        and rows["k-degree-arithmetic"]["computed"] == 1092 == 14 * 13 * 6
        and rows["cofactor-degree-arithmetic"]["computed"] == 504 == 1092 - 3 * 196
        and elapsed < 1
    )
    _verdict(8, ok)


def test_criterion_9_full_suite_deterministic():
    first = run_checks(default_specs(seed=0)).to_json()
    second = run_checks(default_specs(seed=0)).to_json()
    ok = first == second and '"status": "fail"' not in first
    _verdict(9, ok)
