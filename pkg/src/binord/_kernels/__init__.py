"""Coefficient-kernel backends.

The compiled Cython kernel is preferred when it imported successfully and the
modulus fits its 64-bit arithmetic; otherwise the pure-Python kernel is used.
Both expose the same two functions: mul(xs, ys, q, a) and power(xs, n, q, a).
"""

from . import pykernel

try:
    from . import _speedups as compiled
except ImportError:
    compiled = None


def active_backend() -> str:
    """Name of the backend the dispatcher prefers ("compiled" or "python")."""
    return "compiled" if compiled is not None else "python"


def select(q: int, m: int, backend: str | None = None):
    """Pick the kernel module for a ring with modulus q and degree m.

    backend forces a specific choice ("compiled" or "python"); None picks the
    fastest one that supports the parameters.
    """
    if backend == "python":
        return pykernel
    if backend == "compiled":
        if compiled is None:
            raise RuntimeError("compiled kernel is not available in this build")
        if not compiled.supports(q, m):
            raise RuntimeError(f"compiled kernel does not support q={q}")
        return compiled
    if backend is not None:
        raise ValueError(f"unknown backend {backend!r}")
    if compiled is not None and compiled.supports(q, m):
        return compiled
    return pykernel
