"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with  pytest tests/test_acceptance.py -v -s  to see the per-criterion
lines and timings.  The scan-wide criteria raise the factorization cap to
2^256: the verification grid goes up to q=13, m=64, where q^m - 1 has 237
bits, and full factorization (a few seconds there) is required for exact
orders.
"""

import random
import time
from contextlib import contextmanager

import pytest

from binord import (build_spec, check_binomial_irreducible, count_S_dp,
                    exact_element_order, frobenius_orbit, scan,
                    theorem7_distinct_count, verify_instance,
                    verify_order_certificate)
from binord.construction import binomial_family
from binord.counting import FLAG_LEMMA8_BELOW_BOUND
from binord.oracle import SKIPPED_BUDGET

from conftest import brute_force_irreducible, count_S_gray

SCAN_PRIMES = (5, 7, 11, 13)
SCAN_M_MAX = 64
SCAN_FACTOR_CAP = 1 << 256
PAIRS_PER_SPEC = 10_000


@contextmanager
def criterion(number: int, budget_seconds: float | None):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"\ncriterion {number}: FAIL "
              f"({time.perf_counter() - start:.2f}s)")
        raise
    elapsed = time.perf_counter() - start
    budget = "" if budget_seconds is None else f" (budget {budget_seconds:g}s)"
    print(f"\ncriterion {number}: PASS in {elapsed:.2f}s{budget}")
    if budget_seconds is not None:
        assert elapsed < budget_seconds, \
            f"criterion {number} took {elapsed:.2f}s, over its budget"


@pytest.fixture(scope="module")
def scan_data():
    start = time.perf_counter()
    reports = list(scan(SCAN_PRIMES, SCAN_M_MAX, "one",
                        factor_cap=SCAN_FACTOR_CAP))
    return reports, time.perf_counter() - start


def test_criterion_1_instance_5_8():
    with criterion(1, budget_seconds=1.0):
        spec = build_spec(5, 8, b=1)
        assert (spec.a.value, spec.e, spec.k, spec.l, spec.t) == (2, 4, 4, 2, 3)

        elems = [member.to_element(spec) for member in binomial_family(spec)]
        assert len(elems) == 8 and len(set(elems)) == 8
        field = spec.field
        expected = {field.monomial(c, d) + field.one()
                    for c in (1, 2, 3, 4) for d in (1, 5)}
        assert set(elems) == expected
        assert set(elems) == set(frobenius_orbit(spec))

        assert count_S_dp(spec.k, spec.l, spec.m) == 60
        assert theorem7_distinct_count(spec) == 60

        order = exact_element_order(spec, spec.theta_plus_b())
        assert 390624 % order == 0
        assert order >= 1131 == (29 ** 4) // (5 ** 4)


def test_criterion_2_instance_5_32():
    with criterion(2, budget_seconds=30.0):
        report = verify_instance(5, 32, 1)
        spec, bounds = report.spec, report.bound_report
        assert (spec.k, spec.l) == (4, 8)
        assert bounds.case_id == 2
        assert bounds.theorem1_bound == 256
        assert (bounds.lemma8_w, bounds.lemma8_count) == (1, 256)
        assert report.exact_order >= 256
        assert report.all_checks_pass


def test_criterion_3_instance_7_27():
    with criterion(3, budget_seconds=60.0):
        report = verify_instance(7, 27, 1)
        spec, bounds = report.spec, report.bound_report
        assert (spec.k, spec.l) == (3, 9)
        assert bounds.case_id == 2
        assert bounds.theorem1_bound == 163
        assert report.exact_order >= 163
        # integrality finding: the constructive family alone gives only
        # 2^6 = 64 < 163; logged as a flag, not a failure
        assert bounds.lemma8_count == 64
        assert FLAG_LEMMA8_BELOW_BOUND in bounds.flags
        assert report.all_checks_pass


def test_criterion_4_full_scan(scan_data):
    reports, elapsed = scan_data
    try:
        assert elapsed < 600.0, f"scan took {elapsed:.1f}s, over 10 minutes"
        assert len(reports) == 21
        for report in reports:
            assert report.error is None, (report.q, report.m, report.error)
            for name, value in report.checks.items():
                assert value is True or value == SKIPPED_BUDGET, \
                    (report.q, report.m, name, value)
            # scan-wide order inequalities, all exact: the case-applicable
            # bound, the linear-binomial bound floor((29/5)^k), the certified
            # ceil(2^sqrt(2m)), and |S| itself where it was enumerated
            bounds = report.bound_report
            assert (report.q ** report.m - 1) % report.exact_order == 0, \
                (report.q, report.m)
            assert report.exact_order >= bounds.order_bound(), \
                (report.q, report.m)
            assert report.exact_order >= bounds.lemma5_floor, \
                (report.q, report.m)
            assert report.exact_order >= bounds.theorem1_bound, \
                (report.q, report.m)
            if report.checks["theorem7_distinct"] is True:
                assert report.exact_order >= bounds.s_count, \
                    (report.q, report.m)
    except BaseException:
        print(f"\ncriterion 4: FAIL ({elapsed:.2f}s)")
        raise
    enumerated = sum(1 for r in reports
                     if r.checks["theorem7_distinct"] is True)
    print(f"\ncriterion 4: PASS in {elapsed:.2f}s (budget 600s); "
          f"{len(reports)} instances, theorem7 enumerated on "
          f"{enumerated}/{len(reports)}")


def test_criterion_5_property_suites(scan_data):
    reports, _ = scan_data
    with criterion(5, budget_seconds=None):
        # (a) ring/field axioms and Frobenius homomorphism, >= 10^4 random
        #     element pairs per scanned spec, exact equality
        for report in reports:
            spec = report.spec
            field = spec.field
            rng = random.Random(spec.q * 1009 + spec.m)
            one, zero = field.one(), field.zero()
            for _ in range(PAIRS_PER_SPEC):
                x, y, z = (field.random(rng) for _ in range(3))
                assert x + y == y + x
                assert x * y == y * x
                assert (x * y) * z == x * (y * z)
                assert x * (y + z) == x * y + x * z
                assert x * one == x and x + zero == x
                fx, fy = x.frobenius(), y.frobenius()
                assert (x + y).frobenius() == fx + fy
                assert (x * y).frobenius() == fx * fy

        # (b) irreducibility criterion vs brute force, whole grid
        for q in (5, 7, 11, 13):
            for m in range(2, 13):
                for a in range(1, q):
                    assert check_binomial_irreducible(q, m, a) == \
                        brute_force_irreducible(q, m, a), (q, m, a)

        # (c) DP count vs exhaustive Gray-code walk for every k*l <= 20
        for k in range(1, 21):
            for l in range(1, 21):
                if k * l <= 20:
                    assert count_S_dp(k, l, k * l) == \
                        count_S_gray(k, l, k * l), (k, l)


def test_criterion_6_order_certificates(scan_data):
    reports, _ = scan_data
    with criterion(6, budget_seconds=None):
        # every exact order computed by the scan, re-verified independently
        for report in reports:
            spec = report.spec
            assert verify_order_certificate(
                spec, spec.theta_plus_b(), report.exact_order,
                factor_cap=SCAN_FACTOR_CAP), (report.q, report.m)

        # additional tested elements on a small instance
        spec = build_spec(5, 8, b=1)
        rng = random.Random(0xCE)
        extras = [spec.field.theta(), spec.field.constant(2),
                  spec.field.constant(4)]
        extras += [x for x in (spec.field.random(rng) for _ in range(10)) if x]
        for x in extras:
            order = exact_element_order(spec, x)
            assert verify_order_certificate(spec, x, order)
