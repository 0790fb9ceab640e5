"""Pure-Python coefficient kernels for F_q[x]/(x^m - a).

Reference implementation and import-time fallback for the compiled kernel in
_speedups.pyx.  Same contract: length-m tuples of residues in, tuple out.
Works for any modulus since Python integers never overflow.
"""

NAME = "python"


def supports(q: int, m: int) -> bool:
    return True


def mul(xs, ys, q, a):
    """Schoolbook product reduced by the substitution x^(m+d) -> a*x^d."""
    m = len(xs)
    full = [0] * (2 * m - 1)
    for i, xi in enumerate(xs):
        if xi:
            for j, yj in enumerate(ys):
                full[i + j] += xi * yj
    for d in range(2 * m - 2, m - 1, -1):
        full[d - m] += a * full[d]
    return tuple(c % q for c in full[:m])


def power(xs, n, q, a):
    """xs**n by binary exponentiation; n is any non-negative integer."""
    if n < 0:
        raise ValueError("exponent must be non-negative")
    m = len(xs)
    acc = (1,) + (0,) * (m - 1)
    if n == 0:
        return acc
    base = tuple(c % q for c in xs)
    while True:
        if n & 1:
            acc = mul(acc, base, q, a)
        n >>= 1
        if not n:
            return acc
        base = mul(base, base, q, a)
