"""Backend parity: the compiled kernel must match the pure-Python one exactly."""

import random

import pytest

from binord import _kernels
from binord._kernels import pykernel
from binord.extension_field import ExtField

compiled = _kernels.compiled

needs_compiled = pytest.mark.skipif(compiled is None,
                                    reason="compiled kernel not built")


def random_vec(rng, m, q):
    return tuple(rng.randrange(q) for _ in range(m))


@needs_compiled
@pytest.mark.parametrize("q,m", [(5, 2), (5, 8), (7, 9), (13, 64), (101, 33),
                                 (2 ** 31 - 1, 6)])
def test_mul_parity(q, m):
    rng = random.Random(q * 1000 + m)
    a = rng.randrange(1, q)
    for _ in range(25):
        xs, ys = random_vec(rng, m, q), random_vec(rng, m, q)
        assert compiled.mul(xs, ys, q, a) == pykernel.mul(xs, ys, q, a)


@needs_compiled
@pytest.mark.parametrize("q,m", [(5, 8), (13, 27), (2 ** 31 - 1, 4)])
def test_power_parity(q, m):
    rng = random.Random(q + m)
    a = rng.randrange(1, q)
    for _ in range(10):
        xs = random_vec(rng, m, q)
        n = rng.randrange(0, 1 << 80)
        assert compiled.power(xs, n, q, a) == pykernel.power(xs, n, q, a)


@needs_compiled
def test_power_zero_exponent():
    assert compiled.power((2, 3, 4), 0, 5, 2) == (1, 0, 0)
    assert pykernel.power((2, 3, 4), 0, 5, 2) == (1, 0, 0)


@needs_compiled
def test_guarded_path_matches_fast_path():
    # q large enough that (m+1)(q-1)^2 overflows 64 bits, forcing per-term mod
    q = (1 << 31) - 1
    m = 40
    assert (m + 1) * (q - 1) ** 2 >= 1 << 63
    rng = random.Random(7)
    a = 12345
    xs, ys = random_vec(rng, m, q), random_vec(rng, m, q)
    assert compiled.mul(xs, ys, q, a) == pykernel.mul(xs, ys, q, a)


def test_dispatcher_prefers_compiled_when_available():
    kernel = _kernels.select(13, 8, None)
    if compiled is not None:
        assert kernel is compiled
    else:
        assert kernel is pykernel


def test_dispatcher_forces_python():
    assert _kernels.select(13, 8, "python") is pykernel


def test_dispatcher_rejects_unknown_backend():
    with pytest.raises(ValueError):
        _kernels.select(13, 8, "fortran")


def test_huge_modulus_falls_back_to_python():
    # 2^89 - 1 is prime and far beyond the compiled kernel's 64-bit range
    q = (1 << 89) - 1
    field = ExtField(q, 3, 7)
    assert field.backend == "python"
    x = field.element((1, 2, 3))
    y = field.element((q - 1, 5, 11))
    assert (x * y).coeffs == pykernel.mul(x.coeffs, y.coeffs, q, 7)


def test_field_backend_override():
    fast = ExtField(5, 8, 2)
    slow = ExtField(5, 8, 2, backend="python")
    assert slow.backend == "python"
    rng = random.Random(3)
    x = tuple(rng.randrange(5) for _ in range(8))
    y = tuple(rng.randrange(5) for _ in range(8))
    assert fast.mul_coeffs(x, y) == slow.mul_coeffs(x, y)
    assert fast.pow_coeffs(x, 12345) == slow.pow_coeffs(x, 12345)
