"""Kernel backend selection.

The hot series kernels in ``_kernels`` are written once, in plain loops, and
compiled with numba's ``@njit`` when available.  Setting ``QMU_BACKEND=numpy``
forces the pure Python/NumPy fallback (same source, uncompiled);
``QMU_BACKEND=numba`` requires the compiled path and fails loudly if numba is
missing.  The default (``auto``) uses numba when importable.

Results are backend-independent: both paths execute the same statements in
the same order on IEEE doubles (no fastmath).
"""

import os


def _choose() -> str:
    choice = os.environ.get("QMU_BACKEND", "auto").strip().lower()
    if choice in ("", "auto"):
        try:
            import numba  # noqa: F401
        except ImportError:
            return "numpy"
        return "numba"
    if choice in ("numba", "jit"):
        import numba  # noqa: F401  -- raise ImportError if unavailable
        return "numba"
    if choice in ("numpy", "python", "nojit"):
        return "numpy"
    raise ValueError(
        f"QMU_BACKEND={choice!r} not recognized (use 'numba', 'numpy' or 'auto')"
    )


BACKEND = _choose()

if BACKEND == "numba":
    from numba import njit as _njit

    def jit(func):
        return _njit(cache=True)(func)

else:

    def jit(func):
        return func
