"""Arithmetic in the prime field F_q for prime q >= 5.

Elements carry their modulus, so mixing fields is caught immediately.  The
primitive-element search always returns the smallest generator, which makes
every derived quantity reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidField, ModulusMismatch, ZeroElement
from .integers import factorize, is_prime


@dataclass(frozen=True, slots=True)
class PrimeFieldElement:
    """A residue in [0, q); q is validated once at field construction."""

    value: int
    q: int

    def _coerce(self, other) -> "PrimeFieldElement":
        if isinstance(other, int):
            return PrimeFieldElement(other % self.q, self.q)
        if not isinstance(other, PrimeFieldElement):
            raise TypeError(f"cannot operate on {type(other).__name__}")
        if other.q != self.q:
            raise ModulusMismatch(f"moduli differ: {self.q} vs {other.q}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return PrimeFieldElement((self.value + other.value) % self.q, self.q)

    def __sub__(self, other):
        other = self._coerce(other)
        return PrimeFieldElement((self.value - other.value) % self.q, self.q)

    def __mul__(self, other):
        other = self._coerce(other)
        return PrimeFieldElement(self.value * other.value % self.q, self.q)

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElement(-self.value % self.q, self.q)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return PrimeFieldElement(pow(self.value, n, self.q), self.q)

    def inverse(self) -> "PrimeFieldElement":
        if self.value == 0:
            raise ZeroElement("zero has no inverse")
        return PrimeFieldElement(pow(self.value, self.q - 2, self.q), self.q)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def order(self) -> int:
        return element_order(self)


@dataclass(frozen=True, slots=True)
class PrimeField:
    """Element factory for F_q; rejects non-prime or too-small moduli."""

    q: int

    def __post_init__(self):
        if self.q < 5 or not is_prime(self.q):
            raise InvalidField(f"q must be a prime >= 5, got {self.q}")

    def element(self, value: int) -> PrimeFieldElement:
        return PrimeFieldElement(value % self.q, self.q)

    def zero(self) -> PrimeFieldElement:
        return PrimeFieldElement(0, self.q)

    def one(self) -> PrimeFieldElement:
        return PrimeFieldElement(1, self.q)

    def random(self, rng) -> PrimeFieldElement:
        return PrimeFieldElement(rng.randrange(self.q), self.q)

    def nonzero_elements(self):
        return (PrimeFieldElement(v, self.q) for v in range(1, self.q))


def element_order(x: PrimeFieldElement) -> int:
    """Exact multiplicative order of nonzero x; always divides q - 1."""
    if x.value == 0:
        raise ZeroElement("the zero element has no multiplicative order")
    d = x.q - 1
    for p, _ in factorize(d):
        while d % p == 0 and pow(x.value, d // p, x.q) == 1:
            d //= p
    return d


def find_primitive_element(q: int) -> PrimeFieldElement:
    """Smallest g >= 2 generating F_q^* (determinism contract).

    Candidates are accepted when g^((q-1)/p) != 1 for every prime p | q - 1,
    which is exactly order q - 1.
    """
    field = PrimeField(q)  # validates q
    primes = factorize(q - 1).primes()
    for g in range(2, q):
        if all(pow(g, (q - 1) // p, q) != 1 for p in primes):
            return field.element(g)
    raise InvalidField(f"no generator found for q={q}")  # unreachable for prime q
