"""The conjugate-binomial family of theta + b and its pairwise-distinct products.

Repeatedly raising theta + b to the power q^l multiplies the theta
coefficient by a^t (order k), giving k linear binomials; raising each to the
powers q^alpha_i turns degree 1 into degree i*k + 1 and multiplies the
coefficient by a^{r_i}.  The family therefore consists of the k*l elements

    a^((j*t + r_i) mod (q-1)) * theta^(i*k+1) + b,   0 <= i < l, 0 <= j < k,

which is exactly the Frobenius orbit of theta + b.  Products of sub-families
selected by vectors in S are pairwise distinct; theorem7_distinct_count
verifies that exactly, with a hash set over canonical encodings.
"""

from __future__ import annotations

from dataclasses import dataclass

from .counting import DEFAULT_ENUM_BUDGET, SelectionVector, count_S_dp
from .errors import BoundsTooLarge, BudgetExceeded, LengthMismatch
from .extension_field import ExtElement
from .parameters import ExtensionSpec
from .prime_field import PrimeFieldElement

#: check_lemma6 refuses to visit more candidate tuples than this.
LEMMA6_TUPLE_BUDGET = 10 ** 7


@dataclass(frozen=True)
class ConjugateBinomial:
    """One family member: coefficient * theta^degree + constant.

    The exponent (j*t + r_i) is stored reduced mod q - 1; (i, j) is kept so
    callers can reconstruct the indexing.
    """

    i: int
    j: int
    degree: int
    exponent: int
    coefficient: PrimeFieldElement
    constant: PrimeFieldElement

    def to_element(self, spec: ExtensionSpec) -> ExtElement:
        vec = [0] * spec.m
        vec[0] = self.constant.value
        vec[self.degree] = (vec[self.degree] + self.coefficient.value) % spec.q
        return spec.field.element(vec)


def _binomial(spec: ExtensionSpec, i: int, j: int) -> ConjugateBinomial:
    alpha_i, r_i = spec.exponent_table[i]
    exponent = (j * spec.t_mod + r_i) % (spec.q - 1)
    return ConjugateBinomial(
        i=i, j=j, degree=i * spec.k + 1, exponent=exponent,
        coefficient=spec.a ** exponent, constant=spec.b,
    )


def linear_binomials(spec: ExtensionSpec) -> list[ConjugateBinomial]:
    """The k degree-one members, j-th equal to (theta + b)^(q^(j*l)).

    Coefficients are the k distinct powers a^(j*t); distinct because a^t has
    order k.
    """
    return [_binomial(spec, 0, j) for j in range(spec.k)]


def binomial_family(spec: ExtensionSpec) -> list[ConjugateBinomial]:
    """All k*l members, row-major (index i*k + j).

    As a set of ring elements this equals the Frobenius orbit
    {(theta + b)^(q^s) : 0 <= s < m}; entry (i, j) is the s = j*l + alpha_i
    conjugate.
    """
    return [_binomial(spec, i, j) for i in range(spec.l) for j in range(spec.k)]


def frobenius_orbit(spec: ExtensionSpec) -> list[ExtElement]:
    """[x, x^q, x^(q^2), ...] for x = theta + b, all m conjugates.

    Independent route used to cross-check binomial_family: computed by
    iterated Frobenius, not from the coefficient formula.
    """
    orbit = [spec.theta_plus_b()]
    for _ in range(spec.m - 1):
        orbit.append(orbit[-1].frobenius())
    return orbit


def check_lemma6(k: int, l: int, u_cap: int, *,
                 budget: int = LEMMA6_TUPLE_BUDGET) -> tuple | None:
    """Exhaustive counterexample search for the degree-combination identity
    u0*d0 = v0*d0 + u1*d1 + ... + ur*dr over degrees from {i*k + 1}.

    Searches every d0, every u0 in [1, min(k, u_cap)] (beyond k the identity
    trivially has solutions and nothing is claimed), every assignment of
    positive multiplicities to larger degrees, and every non-negative v0.
    Returns None when no solution exists -- the asserted outcome -- or the
    counterexample (d0, u0, v0, ((d, u), ...)).  Raises BoundsTooLarge when
    the search would visit more than `budget` candidate tuples.
    """
    if k < 1 or l < 1:
        raise ValueError(f"need k, l >= 1, got k={k}, l={l}")
    degrees = [i * k + 1 for i in range(l)]
    visited = 0

    def search(start: int, remaining: int, d0: int):
        nonlocal visited
        for idx in range(start, l):
            d = degrees[idx]
            if d > remaining:
                break  # degrees ascend, nothing further fits
            for u in range(1, remaining // d + 1):
                visited += 1
                if visited > budget:
                    raise BoundsTooLarge(
                        f"candidate tuples exceed the budget of {budget}")
                rest = remaining - u * d
                if rest % d0 == 0:
                    return ((d, u),), rest // d0
                deeper = search(idx + 1, rest, d0)
                if deeper is not None:
                    picks, v0 = deeper
                    return ((d, u),) + picks, v0
        return None

    for pos, d0 in enumerate(degrees):
        for u0 in range(1, min(k, u_cap) + 1):
            found = search(pos + 1, u0 * d0, d0)
            if found is not None:
                picks, v0 = found
                return (d0, u0, v0, picks)
    return None


def product_for_vector(spec: ExtensionSpec, sel: SelectionVector) -> ExtElement:
    """Product of the family members selected by sel; empty selection is 1."""
    if sel.rows != spec.l or sel.cols != spec.k:
        raise LengthMismatch(
            f"selection is {sel.rows}x{sel.cols}, instance needs "
            f"{spec.l}x{spec.k}")
    result = spec.field.one()
    for i, row in enumerate(sel.bits):
        for j, bit in enumerate(row):
            if bit:
                result = result * _binomial(spec, i, j).to_element(spec)
    return result


def theorem7_distinct_count(spec: ExtensionSpec, *,
                            budget: int = DEFAULT_ENUM_BUDGET) -> int:
    """Number of distinct products over all of S; must equal |S|.

    Every selection in S is visited once (depth-first over rows, with
    precomputed subset products per row so each step costs one ring
    multiplication) and its product is inserted into an exact set keyed by
    the canonical coefficient encoding.  No probabilistic fingerprinting.
    Raises BudgetExceeded when |S| is above the budget.
    """
    k, l, m = spec.k, spec.l, spec.m
    expected = count_S_dp(k, l, m)
    if expected > budget:
        raise BudgetExceeded(f"|S| = {expected} exceeds the budget of {budget}")

    field = spec.field
    mul = field.mul_coeffs
    encode = field.encode_coeffs

    # per-row subset products, indexed by column bitmask (doubling over masks)
    row_tables = []
    for i in range(l):
        table = [field.one().coeffs]
        for j in range(k):
            member = _binomial(spec, i, j).to_element(spec).coeffs
            table += [mul(prefix, member) for prefix in table]
        row_tables.append(table)
    masks_by_count = [[] for _ in range(k + 1)]
    for mask in range(1 << k):
        masks_by_count[bin(mask).count("1")].append(mask)

    seen: set[bytes] = set()

    def walk(i: int, allowance: int, acc: tuple):
        # allowance = largest extra weight still permitted (total must be < m)
        if i == l or allowance < i * k + 1:
            seen.add(encode(acc))  # all remaining rows are forced empty
            return
        walk(i + 1, allowance, acc)
        w = i * k + 1
        table = row_tables[i]
        for c in range(1, min(k, allowance // w) + 1):
            left = allowance - c * w
            for mask in masks_by_count[c]:
                walk(i + 1, left, mul(acc, table[mask]))

    walk(0, m - 1, field.one().coeffs)
    return len(seen)
