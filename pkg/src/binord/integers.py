"""Exact unbounded-integer number theory: primality, factorization, orders.

Everything is deterministic.  The Miller-Rabin witness schedule is fixed and
the Pollard rho restart parameters derive from the number being factored, so
repeated runs take identical paths.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import NotCoprime, SizeCapExceeded

#: Inputs above this cap are rejected by factorize(); it marks the boundary of
#: "desk scale", where a full factorization finishes in seconds.
DEFAULT_FACTOR_CAP = 1 << 128

_TRIAL_LIMIT = 10 ** 6

# The first 13 primes are a complete Miller-Rabin witness set for every
# n < 3317044064679887385961981 (Sorenson & Webster), which covers 2^64
# with plenty of margin.  Above that, 64 fixed pseudo-random rounds keep the
# error rate below 2^-128 while staying reproducible.
_DETERMINISTIC_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_DETERMINISTIC_BELOW = 3_317_044_064_679_887_385_961_981
_PROBABILISTIC_ROUNDS = 64

_trial_primes_cache: list[int] | None = None


def _trial_primes() -> list[int]:
    global _trial_primes_cache
    if _trial_primes_cache is None:
        sieve = bytearray([1]) * _TRIAL_LIMIT
        sieve[0] = sieve[1] = 0
        for i in range(2, math.isqrt(_TRIAL_LIMIT) + 1):
            if sieve[i]:
                sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
        _trial_primes_cache = [i for i, flag in enumerate(sieve) if flag]
    return _trial_primes_cache


def _strong_probable_prime(n: int, a: int, d: int, s: int) -> bool:
    # n - 1 = d * 2^s with d odd
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Whether n is prime.

    Deterministic for n < 3.3e24 (covers all 64-bit inputs) via a fixed
    13-prime witness set; beyond that, 64 Miller-Rabin rounds with witnesses
    drawn from a PRNG seeded by n itself.
    """
    if n < 2:
        return False
    for p in _DETERMINISTIC_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    if n < _DETERMINISTIC_BELOW:
        witnesses = _DETERMINISTIC_WITNESSES
    else:
        rng = random.Random(n)
        witnesses = tuple(rng.randrange(2, n - 1) for _ in range(_PROBABILISTIC_ROUNDS))
    return all(_strong_probable_prime(n, a, d, s) for a in witnesses)


@dataclass(frozen=True)
class Factorization:
    """Complete prime factorization as (prime, exponent) pairs, ascending."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise ValueError("factor primes must be strictly increasing")
        if any(e < 1 for _, e in self.factors):
            raise ValueError("factor exponents must be >= 1")

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def value(self) -> int:
        """The factored integer (empty factorization is 1)."""
        return math.prod(p ** e for p, e in self.factors)

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def totient(self) -> int:
        """Euler phi of the factored value."""
        return math.prod(p ** (e - 1) * (p - 1) for p, e in self.factors)


def _iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0."""
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + k - 1) // k)  # upper estimate
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _pollard_brent(n: int, attempt: int) -> int:
    """One Brent-cycle rho attempt on odd composite n; may return n on failure.

    Start point and polynomial increment come from a PRNG seeded by
    (n, attempt), so the whole factorization is reproducible.
    """
    rng = random.Random(n ^ (attempt * 0x9E3779B97F4A7C15))
    y = rng.randrange(1, n)
    c = rng.randrange(1, n)
    batch = 128
    g = r = q = 1
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(batch, r - k)):
                y = (y * y + c) % n
                q = q * (x - y) % n
            g = math.gcd(q, n)
            k += batch
        r <<= 1
    if g == n:
        # batched gcd overshot; replay one step at a time
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(x - ys, n)
    return g


def _split(n: int, out: dict[int, int], multiplicity: int) -> None:
    """Accumulate the factorization of n (no factors below the trial limit)."""
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + multiplicity
        return
    # perfect powers first: rho behaves poorly on p^2
    for k in range(2, n.bit_length() + 1):
        r = _iroot(n, k)
        if r ** k == n:
            _split(r, out, multiplicity * k)
            return
        if r < _TRIAL_LIMIT:
            break
    attempt = 0
    while True:
        d = _pollard_brent(n, attempt)
        if 1 < d < n:
            break
        attempt += 1
    _split(d, out, multiplicity)
    _split(n // d, out, multiplicity)


def factorize(n: int, *, cap: int = DEFAULT_FACTOR_CAP) -> Factorization:
    """Complete prime factorization of n >= 1; n = 1 gives the empty product.

    Trial division up to 10^6 followed by Brent-variant Pollard rho.  Raises
    SizeCapExceeded when n is above the configured cap, signalling that the
    instance is beyond desk scale.
    """
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    if n > cap:
        raise SizeCapExceeded(f"n has {n.bit_length()} bits, above the cap of "
                              f"{cap.bit_length() - 1} bits")
    out: dict[int, int] = {}
    for p in _trial_primes():
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n > 1:
        if n < _TRIAL_LIMIT * _TRIAL_LIMIT:
            out[n] = out.get(n, 0) + 1  # no divisor below sqrt(n), so prime
        else:
            _split(n, out, 1)
    return Factorization(tuple(sorted(out.items())))


def multiplicative_order_mod(g: int, n: int) -> int:
    """Smallest d >= 1 with g^d = 1 (mod n), for g coprime to n >= 2.

    Computed exactly by stripping primes from Euler phi of n, never by
    linear search.
    """
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    g %= n
    if math.gcd(g, n) != 1:
        raise NotCoprime(f"gcd({g}, {n}) != 1")
    d = factorize(n).totient()
    for p, _ in factorize(d):
        while d % p == 0 and pow(g, d // p, n) == 1:
            d //= p
    return d
