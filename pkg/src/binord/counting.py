"""Exact counting of weighted 0/1 selection vectors and certified bound values.

The central object is the set S of 0/1 matrices e (l rows, k columns) whose
weighted sum  sum_{i,j} (i*k + 1) * e[i][j]  stays below a bound (the degree
m in normal use).  |S| lower-bounds the multiplicative order of theta + b,
so everything here is computed with exact unbounded integers, and the one
irrational quantity, ceil(2^sqrt(2m)), is evaluated with dyadic interval
arithmetic until the ceiling is certified.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceeded, NoSolution

#: Enumeration is refused when |S| exceeds this (overridable per call).
DEFAULT_ENUM_BUDGET = 1 << 22

FLAG_S_COUNT_BELOW_BOUND = "s-count-below-theorem1-bound"
FLAG_LEMMA8_BELOW_BOUND = "lemma8-constructive-below-theorem1-bound"
FLAG_LEMMA8_HYPOTHESIS_UNMET = "lemma8-hypothesis-unmet"
FLAG_LEMMA8_UNAVAILABLE = "lemma8-unavailable"


@dataclass(frozen=True)
class SelectionVector:
    """0/1 choices indexed (row i, column j); a row-i pick weighs i*k + 1."""

    bits: tuple[tuple[int, ...], ...]

    @property
    def rows(self) -> int:
        return len(self.bits)

    @property
    def cols(self) -> int:
        return len(self.bits[0]) if self.bits else 0

    def weight(self) -> int:
        k = self.cols
        return sum((i * k + 1) * bit
                   for i, row in enumerate(self.bits)
                   for bit in row if bit)

    def in_S(self, bound: int) -> bool:
        return self.weight() < bound

    def flat(self) -> tuple[int, ...]:
        return tuple(bit for row in self.bits for bit in row)


def _max_weight(k: int, l: int) -> int:
    return k * sum(i * k + 1 for i in range(l))


def count_S_dp(k: int, l: int, bound: int) -> int:
    """Exact |{e in {0,1}^(l x k) : sum (i*k+1)*e_ij < bound}|.

    Dynamic programming over partial sums in [0, bound), with binomial
    multiplicities C(k, c) for choosing c cells in a row of weight i*k + 1.
    """
    if k < 1 or l < 1 or bound < 1:
        raise ValueError(f"need k, l, bound >= 1, got k={k}, l={l}, bound={bound}")
    if bound > _max_weight(k, l):
        return 1 << (k * l)  # every matrix qualifies
    ways = [0] * bound
    ways[0] = 1
    for i in range(l):
        w = i * k + 1
        if w >= bound:
            break  # this row and all later ones are forced to zero
        new = ways[:]
        for c in range(1, k + 1):
            shift = c * w
            if shift >= bound:
                break
            mult = math.comb(k, c)
            for s in range(bound - shift):
                if ways[s]:
                    new[s + shift] += ways[s] * mult
        ways = new
    return sum(ways)


def enumerate_S(k: int, l: int, bound: int, *,
                budget: int = DEFAULT_ENUM_BUDGET):
    """Yield every member of S exactly once, in lexicographic bit order
    (row-major flattening, 0 before 1, so the zero vector comes first).

    Raises BudgetExceeded up front when |S| (from count_S_dp) is above the
    budget.  The generator's total length always equals count_S_dp.
    """
    expected = count_S_dp(k, l, bound)
    if expected > budget:
        raise BudgetExceeded(f"|S| = {expected} exceeds the budget of {budget}")
    weights = [i * k + 1 for i in range(l) for _ in range(k)]
    n = k * l
    bits = [0] * n
    weight = 0
    pos = 0
    # explicit depth-first walk, trying 0 before 1 at every position
    while True:
        if pos == n:
            yield SelectionVector(tuple(
                tuple(bits[i * k:(i + 1) * k]) for i in range(l)))
            pos -= 1
            while pos >= 0:
                if bits[pos]:
                    weight -= weights[pos]   # 1 already tried, unwind
                    bits[pos] = 0
                elif weight + weights[pos] < bound:
                    bits[pos] = 1            # promote this 0 to 1, descend
                    weight += weights[pos]
                    pos += 1
                    break
                pos -= 1
            if pos < 0:
                return
        else:
            bits[pos] = 0
            pos += 1


def lemma8_constructive(k: int, l: int) -> tuple[int, int]:
    """Constructive solution count: the largest w with
    sum_{0<=i<=w} (i*k + 1) < l, and the 2^((w+1)*k) selections obtained by
    letting every column choose rows 0..w freely.

    Meaningful as a lower bound for |S| when l > k; callers outside that
    range get the same arithmetic for diagnostics.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if l <= 1:
        raise NoSolution(f"need l >= 2 for even w = 0 to qualify, got l={l}")
    w = 0
    while ((w + 1) * k + 2) * (w + 2) // 2 < l:
        w += 1
    return w, 1 << ((w + 1) * k)


# -- certified ceil(2^sqrt(n)) -------------------------------------------------

def _sqrt_fixed(v: int, prec: int, round_up: bool) -> int:
    """Directed fixed-point sqrt: v and the result are scaled by 2^prec."""
    s = math.isqrt(v << prec)
    if round_up and s * s != v << prec:
        s += 1
    return s


def _pow2_fraction_fixed(frac: int, prec: int, round_up: bool) -> int:
    """Directed 2^(frac / 2^prec) for 0 <= frac < 2^prec, scaled by 2^prec.

    Walks the square-root chain r_j = 2^(1/2^j), multiplying in the factors
    selected by the bits of frac, with every operation rounded in the
    requested direction so the result brackets the true value.
    """
    one = 1 << prec
    result = one
    root = _sqrt_fixed(2 << prec, prec, round_up)  # 2^(1/2)
    for j in range(1, prec + 1):
        if (frac >> (prec - j)) & 1:
            product = result * root
            result = (product + one - 1) >> prec if round_up else product >> prec
        if j < prec:
            root = _sqrt_fixed(root, prec, round_up)
    return result


def ceil_pow2_sqrt(n: int) -> int:
    """Certified ceil(2^sqrt(n)) for integer n >= 0.

    Exact when n is a perfect square.  Otherwise the value is evaluated as a
    dyadic interval whose endpoints are rounded outward, starting at 128
    fractional bits and doubling the precision until both endpoints share
    the same ceiling (sqrt(n) is irrational then, so this terminates).
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    s = math.isqrt(n)
    if s * s == n:
        return 1 << s
    prec = 128
    while True:
        one = 1 << prec
        lo = math.isqrt(n << (2 * prec))     # floor(sqrt(n) * 2^prec), strict
        for_ceil = []
        for scaled, round_up in ((lo, False), (lo + 1, True)):
            whole, frac = divmod(scaled, one)
            mantissa = _pow2_fraction_fixed(frac, prec, round_up)
            for_ceil.append(-((-(mantissa << whole)) >> prec))
        if for_ceil[0] == for_ceil[1]:
            return for_ceil[0]
        prec *= 2


@dataclass(frozen=True)
class BoundReport:
    """All bound values for one decomposition m = k*l.

    case_id 1 means k >= l (the linear-binomial product bound floor((29/5)^k)
    applies); case_id 2 means l > k (the selection-vector count carries the
    2^sqrt(2m) bound).  lemma8_w/lemma8_count hold the constructive solution
    family, or None when l = 1 makes it unavailable.
    """

    case_id: int
    k: int
    l: int
    m: int
    lemma5_bound: Fraction
    lemma5_floor: int
    theorem1_bound: int
    s_count: int
    lemma8_w: int | None
    lemma8_count: int | None
    flags: tuple[str, ...]

    def order_bound(self) -> int:
        """The case-applicable lower bound on the order of theta + b."""
        return self.lemma5_floor if self.case_id == 1 else self.theorem1_bound

    def count_s_json_dict(self) -> dict:
        """The fixed count-s output schema (key order is part of the contract)."""
        return {
            "k": self.k,
            "l": self.l,
            "s_count": str(self.s_count),
            "theorem1_bound": str(self.theorem1_bound),
            "lemma8_w": self.lemma8_w,
            "lemma8_count": None if self.lemma8_count is None else str(self.lemma8_count),
            "case": self.case_id,
            "flags": list(self.flags),
        }

    def to_json_dict(self) -> dict:
        return {
            "case": self.case_id,
            "k": self.k,
            "l": self.l,
            "m": self.m,
            "lemma5_bound": f"{self.lemma5_bound.numerator}/{self.lemma5_bound.denominator}",
            "lemma5_floor": str(self.lemma5_floor),
            "theorem1_bound": str(self.theorem1_bound),
            "s_count": str(self.s_count),
            "lemma8_w": self.lemma8_w,
            "lemma8_count": None if self.lemma8_count is None else str(self.lemma8_count),
            "flags": list(self.flags),
        }


def theorem1_bound(k: int, l: int, m: int) -> BoundReport:
    """Bound report for the decomposition m = k*l.

    (29/5)^k is carried as an exact rational (5.8 never touches floating
    point) and ceil(2^sqrt(2m)) comes from the certified interval evaluation.
    Flags record the findings that matter downstream: an |S| or constructive
    count below the 2^sqrt(2m) bound, and a constructive family computed
    outside its l > k hypothesis.
    """
    if k * l != m:
        raise ValueError(f"m must equal k*l, got {k}*{l} != {m}")
    case_id = 1 if k >= l else 2
    lemma5 = Fraction(29, 5) ** k
    lemma5_floor = 29 ** k // 5 ** k
    bound = ceil_pow2_sqrt(2 * m)
    s_count = count_S_dp(k, l, m)

    flags = []
    try:
        lemma8_w, lemma8_count = lemma8_constructive(k, l)
        if l <= k:
            flags.append(FLAG_LEMMA8_HYPOTHESIS_UNMET)
    except NoSolution:
        lemma8_w = lemma8_count = None
        flags.append(FLAG_LEMMA8_UNAVAILABLE)
    if s_count < bound:
        flags.append(FLAG_S_COUNT_BELOW_BOUND)
    if lemma8_count is not None and lemma8_count < bound:
        flags.append(FLAG_LEMMA8_BELOW_BOUND)

    return BoundReport(
        case_id=case_id, k=k, l=l, m=m,
        lemma5_bound=lemma5, lemma5_floor=lemma5_floor,
        theorem1_bound=bound, s_count=s_count,
        lemma8_w=lemma8_w, lemma8_count=lemma8_count,
        flags=tuple(flags),
    )
