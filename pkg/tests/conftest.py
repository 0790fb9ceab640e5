"""Shared test helpers: independent oracles kept deliberately naive."""

import math

import pytest

from binord.extension_field import ExtField


def trial_division_is_prime(n: int) -> bool:
    """Ground-truth primality by trial division (small n only)."""
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def brute_force_irreducible(q: int, m: int, a: int) -> bool:
    """Irreducibility of x^m - a by the divisor-power test.

    theta^(q^d) must differ from theta for every proper divisor d of m and
    equal theta at d = m.  Runs in the quotient ring, which exists whether or
    not the binomial is irreducible.
    """
    ring = ExtField(q, m, a)
    theta = ring.theta()
    current = theta
    powers = {}
    for d in range(1, m + 1):
        current = current ** q
        if m % d == 0:
            powers[d] = current
    if any(powers[d] == theta for d in range(1, m) if m % d == 0):
        return False
    return powers[m] == theta


def brute_force_order(value: int, q: int) -> int:
    """Multiplicative order in F_q^* by explicit cycle walking."""
    assert value % q != 0
    x = value % q
    order = 1
    while x != 1:
        x = x * value % q
        order += 1
    return order


def count_S_gray(k: int, l: int, bound: int) -> int:
    """|S| by exhaustive walk over all 2^(k*l) vectors in Gray-code order,
    so each step flips one bit and updates the weight in O(1)."""
    weights = [i * k + 1 for i in range(l) for _ in range(k)]
    n = k * l
    count = 1 if 0 < bound else 0  # the zero vector
    weight = 0
    state = 0
    for step in range(1, 1 << n):
        bit = (step & -step).bit_length() - 1
        state ^= 1 << bit
        weight += weights[bit] if state >> bit & 1 else -weights[bit]
        if weight < bound:
            count += 1
    return count


@pytest.fixture(scope="session")
def spec_5_8():
    from binord import build_spec
    return build_spec(5, 8, b=1)
