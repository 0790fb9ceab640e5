"""Instance setup for extensions F_q[x]/(x^m - a).

This module owns every derived parameter of an instance: the irreducibility
criterion, the canonical constant a of order e, the decomposition m = k*l
(k = part of m dividing q - 1, l = order of q modulo m), the integer t with
q^l = 1 + t*m, and the Frobenius exponent table mapping each target degree
i*k + 1 to the power alpha_i with q^alpha_i = (i*k + 1) + r_i * m.

All derivations are double-checked at construction time: l is computed both
as a multiplicative order and by the valuation product formula, and every
exactness identity is verified with unbounded integers.  A violation raises
FormulaMismatch and means a bug, never bad input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (FormulaMismatch, IrreducibilityFailure, NoBinomialExists,
                     UnsupportedField, ZeroElement)
from .extension_field import ExtElement, ExtField
from .integers import factorize, is_prime, multiplicative_order_mod
from .prime_field import (PrimeField, PrimeFieldElement, element_order,
                          find_primitive_element)

WARN_DEGENERATE = "m-divides-q-1"
WARN_SMALL_PARAMETERS = "small-parameters"


def _valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _require_supported_q(q: int) -> None:
    if q < 5 or not is_prime(q):
        raise UnsupportedField(f"base field must have prime order q >= 5, got q={q}")


def _as_field_value(q: int, a) -> int:
    if isinstance(a, PrimeFieldElement):
        if a.q != q:
            raise UnsupportedField(f"element carries modulus {a.q}, expected {q}")
        return a.value
    return a % q


def binomial_exists(q: int, m: int) -> bool:
    """Existence of some irreducible x^m - a over F_q: every prime factor of m
    divides q - 1, and if 4 | m then 4 | q - 1."""
    _require_supported_q(q)
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    if any((q - 1) % p != 0 for p in factorize(m).primes()):
        return False
    if m % 4 == 0 and (q - 1) % 4 != 0:
        return False
    return True


def check_binomial_irreducible(q: int, m: int, a) -> bool:
    """Whether x^m - a is irreducible over F_q, for the specific nonzero a.

    Criterion: every prime factor of m divides e = ord(a) and does not divide
    (q - 1)/e, and if 4 | m then 4 | q - 1.
    """
    _require_supported_q(q)
    value = _as_field_value(q, a)
    if value == 0:
        raise ZeroElement("a must be nonzero")
    e = element_order(PrimeFieldElement(value, q))
    cofactor = (q - 1) // e
    for p in factorize(m).primes():
        if e % p != 0 or cofactor % p == 0:
            return False
    if m % 4 == 0 and (q - 1) % 4 != 0:
        return False
    return True


def construct_a(q: int, m: int) -> PrimeFieldElement:
    """The canonical constant a = alpha^((q-1)/e) with alpha the smallest
    primitive element and e the product of p^v_p(q-1) over primes p | m."""
    if not binomial_exists(q, m):
        raise NoBinomialExists(
            f"no irreducible binomial of degree {m} exists over F_{q}")
    e = math.prod(p ** _valuation(q - 1, p) for p in factorize(m).primes())
    alpha = find_primitive_element(q)
    a = alpha ** ((q - 1) // e)
    if not check_binomial_irreducible(q, m, a):
        raise FormulaMismatch(
            f"constructed a={a.value} fails the irreducibility criterion "
            f"for q={q}, m={m}")
    return a


def decompose(q: int, m: int) -> tuple[int, int]:
    """The decomposition m = k*l with l = ord_m(q) and k dividing q - 1.

    l is computed twice: directly as a multiplicative order, and by the
    valuation product over the prime factors of m.  Disagreement raises
    FormulaMismatch (an implementation bug, never expected).
    """
    if not binomial_exists(q, m):
        raise NoBinomialExists(
            f"no irreducible binomial of degree {m} exists over F_{q}")
    l_order = multiplicative_order_mod(q, m) if m >= 2 else 1
    l_formula = 1
    k_formula = 1
    for p, s in factorize(m):
        t = _valuation(q - 1, p)
        l_formula *= p ** (s - t) if s > t else 1
        k_formula *= p ** min(s, t)
    if l_order != l_formula:
        raise FormulaMismatch(
            f"ord_{m}({q}) = {l_order} but the valuation formula gives "
            f"{l_formula}")
    k = m // l_order
    if k != k_formula:
        raise FormulaMismatch(
            f"m/l = {k} but the valuation formula gives {k_formula}")
    return k, l_order


@dataclass(frozen=True)
class ExtensionSpec:
    """Single source of truth for one instance (q, m, a, b).

    Derived fields: e = ord(a); m = k*l with l = ord_m(q); t with
    q^l = 1 + t*m (stored exactly and reduced mod q - 1); and the exponent
    table whose i-th entry (alpha_i, r_i) satisfies
    q^alpha_i = (i*k + 1) + r_i*m exactly.
    """

    q: int
    m: int
    a: PrimeFieldElement
    b: PrimeFieldElement
    e: int
    k: int
    l: int
    t: int
    t_mod: int
    exponent_table: tuple[tuple[int, int], ...]
    warnings: tuple[str, ...]
    field: ExtField

    def theta_plus_b(self) -> ExtElement:
        return self.field.theta() + self.field.constant(self.b.value)

    def prime_field(self) -> PrimeField:
        return PrimeField(self.q)

    def to_json_dict(self) -> dict:
        """Canonical key-ordered serialization; unbounded integers as strings."""
        return {
            "q": self.q,
            "m": self.m,
            "a": self.a.value,
            "b": self.b.value,
            "e": self.e,
            "k": self.k,
            "l": self.l,
            "t": str(self.t),
            "alpha": [alpha for alpha, _ in self.exponent_table],
            "r": [str(r) for _, r in self.exponent_table],
        }


def spec_from_json_dict(data: dict) -> ExtensionSpec:
    """Rebuild a spec from its serialized form and re-verify every field."""
    spec = build_spec(data["q"], data["m"], b=data["b"], a_override=data["a"])
    stored = spec.to_json_dict()
    mismatched = [key for key in stored if stored[key] != data.get(key)]
    if mismatched:
        raise FormulaMismatch(
            f"serialized spec disagrees with reconstruction on {mismatched}")
    return spec


def build_spec(q: int, m: int, b: int = 1, a_override=None) -> ExtensionSpec:
    """Fully populated ExtensionSpec for (q, m, b), with every invariant checked.

    a defaults to construct_a's deterministic value; a_override must pass the
    irreducibility criterion.  Degenerate instances (m | q - 1, so l = 1) and
    instances below the usual parameter range (l >= 2, k >= 3, m >= 8) are
    constructible but flagged in warnings.
    """
    _require_supported_q(q)
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    base = PrimeField(q)
    b_elem = base.element(b if isinstance(b, int) else b.value)
    if b_elem.value == 0:
        raise ZeroElement("b must be a nonzero element of F_q")

    if a_override is not None:
        a_value = _as_field_value(q, a_override)
        if a_value == 0:
            raise ZeroElement("a must be nonzero")
        if not check_binomial_irreducible(q, m, a_value):
            raise IrreducibilityFailure(
                f"x^{m} - {a_value} is not irreducible over F_{q}")
        a_elem = base.element(a_value)
    else:
        a_elem = construct_a(q, m)

    e = element_order(a_elem)
    k, l = decompose(q, m)

    power = q ** l
    if power % m != 1:
        raise FormulaMismatch(f"q^l = {power} is not 1 mod m={m}")
    t = (power - 1) // m
    t_mod = t % (q - 1)

    # discrete log of each target degree i*k + 1 in the subgroup <q> of Z_m^*
    dlog = {}
    pw = 1
    for s in range(l):
        dlog.setdefault(pw, s)
        pw = pw * q % m
    table = []
    for i in range(l):
        degree = (i * k + 1) % m
        if degree not in dlog:
            raise FormulaMismatch(
                f"{degree} is not a power of q modulo {m}; subgroup identity broken")
        alpha_i = dlog[degree]
        numerator = q ** alpha_i - (i * k + 1)
        if numerator % m != 0 or numerator < 0:
            raise FormulaMismatch(
                f"q^{alpha_i} - ({i}*{k}+1) = {numerator} is not a "
                f"non-negative multiple of m={m}")
        table.append((alpha_i, numerator // m))
    if sorted(alpha for alpha, _ in table) != list(range(l)):
        raise FormulaMismatch("exponent table is not a permutation of 0..l-1")

    # structural facts guaranteed by the decomposition
    if math.gcd((q - 1) // k, l) != 1:
        raise FormulaMismatch(f"(q-1)/k = {(q - 1) // k} shares a factor with l = {l}")
    if e % k != 0 or (q - 1) % k != 0:
        raise FormulaMismatch(f"k = {k} must divide e = {e} and q-1 = {q - 1}")
    if element_order(a_elem ** t_mod) != k:
        raise FormulaMismatch(
            f"ord(a^t) != k for q={q}, m={m}: a={a_elem.value}, t={t}")

    warnings = []
    if (q - 1) % m == 0:
        warnings.append(WARN_DEGENERATE)
    if not (l >= 2 and k >= 3 and m >= 8):
        warnings.append(WARN_SMALL_PARAMETERS)

    return ExtensionSpec(
        q=q, m=m, a=a_elem, b=b_elem, e=e, k=k, l=l, t=t, t_mod=t_mod,
        exponent_table=tuple(table), warnings=tuple(warnings),
        field=ExtField(q, m, a_elem.value),
    )


def verify_lemma3(spec: ExtensionSpec) -> bool:
    """ord(a^(t mod (q-1))) == k, independently recomputed."""
    return element_order(spec.a ** spec.t_mod) == spec.k
