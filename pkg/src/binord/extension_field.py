"""Arithmetic in the quotient ring F_q[x]/(x^m - a).

theta denotes the coset of x, so theta^m = a.  When the binomial is
irreducible the ring is the field F_{q^m}.  Nothing here assumes
irreducibility: the same arithmetic drives the brute-force irreducibility
cross-checks, which deliberately run in reducible quotients too.

Elements are immutable dense coefficient tuples (index d holds the
coefficient of theta^d) and are hashable by that canonical encoding, so
exact distinctness checks can use ordinary sets.
"""

from __future__ import annotations

from . import _kernels
from .errors import InvalidField, SpecMismatch, ZeroElement
from .integers import is_prime


class ExtField:
    """The ring F_q[x]/(x^m - a) with a fixed coefficient-kernel backend."""

    __slots__ = ("q", "m", "a", "backend", "_kernel")

    def __init__(self, q: int, m: int, a: int, *, backend: str | None = None):
        if q < 5 or not is_prime(q):
            raise InvalidField(f"q must be a prime >= 5, got {q}")
        if m < 2:
            raise InvalidField(f"extension degree must be >= 2, got {m}")
        a %= q
        if a == 0:
            raise ZeroElement("the binomial constant a must be nonzero")
        self.q = q
        self.m = m
        self.a = a
        self._kernel = _kernels.select(q, m, backend)
        self.backend = self._kernel.NAME

    def __eq__(self, other):
        if not isinstance(other, ExtField):
            return NotImplemented
        return (self.q, self.m, self.a) == (other.q, other.m, other.a)

    def __hash__(self):
        return hash((ExtField, self.q, self.m, self.a))

    def __repr__(self):
        return f"ExtField(q={self.q}, m={self.m}, a={self.a})"

    # -- element constructors -------------------------------------------------

    def element(self, coeffs) -> "ExtElement":
        """Element from an iterable of m coefficients (index = power of theta)."""
        vec = tuple(c % self.q for c in coeffs)
        if len(vec) != self.m:
            raise ValueError(f"expected {self.m} coefficients, got {len(vec)}")
        return ExtElement(self, vec)

    def constant(self, c: int) -> "ExtElement":
        return ExtElement(self, (c % self.q,) + (0,) * (self.m - 1))

    def zero(self) -> "ExtElement":
        return self.constant(0)

    def one(self) -> "ExtElement":
        return self.constant(1)

    def theta(self) -> "ExtElement":
        return ExtElement(self, (0, 1) + (0,) * (self.m - 2))

    def monomial(self, coeff: int, degree: int) -> "ExtElement":
        """coeff * theta^degree for 0 <= degree < m."""
        if not 0 <= degree < self.m:
            raise ValueError(f"degree must be in [0, {self.m}), got {degree}")
        vec = [0] * self.m
        vec[degree] = coeff % self.q
        return ExtElement(self, tuple(vec))

    def random(self, rng) -> "ExtElement":
        return ExtElement(self, tuple(rng.randrange(self.q) for _ in range(self.m)))

    # -- raw kernels (hot paths operate on bare tuples) -----------------------

    def mul_coeffs(self, xs: tuple, ys: tuple) -> tuple:
        return self._kernel.mul(xs, ys, self.q, self.a)

    def pow_coeffs(self, xs: tuple, n: int) -> tuple:
        return self._kernel.power(xs, n, self.q, self.a)

    def encode_coeffs(self, xs: tuple) -> bytes:
        """Canonical byte encoding of a coefficient vector (exact, injective)."""
        if self.q <= 256:
            return bytes(xs)
        width = (self.q.bit_length() + 7) // 8
        return b"".join(c.to_bytes(width, "little") for c in xs)

    # -- parsing the canonical text form --------------------------------------

    def element_from_text(self, text: str) -> "ExtElement":
        """Inverse of ExtElement.canonical_text()."""
        vec = [0] * self.m
        for term in text.replace(" ", "").split("+"):
            if "*t^" in term:
                c, d = term.split("*t^")
                degree = int(d)
            elif term.endswith("*t"):
                c, degree = term[:-2], 1
            else:
                c, degree = term, 0
            if not 0 <= degree < self.m:
                raise ValueError(f"degree {degree} out of range in {text!r}")
            vec[degree] = (vec[degree] + int(c)) % self.q
        return ExtElement(self, tuple(vec))


class ExtElement:
    """Immutable element of an ExtField, stored as m residues."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: ExtField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def _check(self, other) -> "ExtElement":
        if not isinstance(other, ExtElement):
            raise TypeError(f"cannot operate on {type(other).__name__}")
        if other.field != self.field:
            raise SpecMismatch(f"operands from different rings: "
                               f"{self.field!r} vs {other.field!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        q = self.field.q
        return ExtElement(self.field, tuple(
            (x + y) % q for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        other = self._check(other)
        q = self.field.q
        return ExtElement(self.field, tuple(
            (x - y) % q for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        q = self.field.q
        return ExtElement(self.field, tuple(-x % q for x in self.coeffs))

    def __mul__(self, other):
        other = self._check(other)
        return ExtElement(self.field, self.field.mul_coeffs(self.coeffs, other.coeffs))

    def __pow__(self, n: int):
        return ExtElement(self.field, self.field.pow_coeffs(self.coeffs, n))

    def frobenius(self) -> "ExtElement":
        """The q-th power map; agrees with self ** q by construction."""
        return self ** self.field.q

    def __eq__(self, other):
        if not isinstance(other, ExtElement):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.q, self.field.m, self.field.a, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def constant_term(self) -> int:
        return self.coeffs[0]

    def canonical_text(self) -> str:
        """Dense descending form c_{m-1}*t^{m-1}+...+c_1*t+c_0."""
        parts = []
        for d in range(self.field.m - 1, -1, -1):
            c = self.coeffs[d]
            if d == 0:
                parts.append(f"{c}")
            elif d == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{d}")
        return "+".join(parts)

    def canonical_bytes(self) -> bytes:
        return self.field.encode_coeffs(self.coeffs)

    def __repr__(self):
        return f"<{self.canonical_text()} in {self.field!r}>"
