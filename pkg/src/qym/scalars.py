"""Exact rational scalar backend.

Every coefficient in this package is an arbitrary-precision rational, so all
identity checks are exact equality with no tolerances.  Two interchangeable
backends are supported:

* ``gmpy2.mpq`` -- GMP-backed, considerably faster (default when installed),
* ``fractions.Fraction`` -- pure-Python fallback.

The backend is chosen once at import time.  Set ``QYM_SCALAR_BACKEND`` to
``gmpy2`` or ``fractions`` to force one (``benchmarks/bench_scalars.py``
compares them).
"""

from __future__ import annotations

import os
from fractions import Fraction

__all__ = ["BACKEND", "rat", "is_zero", "rat_str", "rat_decimal"]


def _pick_backend() -> str:
    forced = os.environ.get("QYM_SCALAR_BACKEND", "").strip().lower()
    if forced in ("gmpy2", "fractions"):
        if forced == "gmpy2":
            import gmpy2  # noqa: F401  raise loudly if forced but absent
        return forced
    if forced:
        raise ValueError(f"unknown QYM_SCALAR_BACKEND {forced!r}")
    try:
        import gmpy2  # noqa: F401
        return "gmpy2"
    except ImportError:
        return "fractions"


BACKEND = _pick_backend()

if BACKEND == "gmpy2":
    from gmpy2 import mpq as rat
else:
    rat = Fraction

_ZERO = rat(0)


def is_zero(x) -> bool:
    return x == _ZERO


def rat_str(x) -> str:
    """Render a rational as ``p/q`` in lowest terms, denominator always shown."""
    return f"{x.numerator}/{x.denominator}"


def rat_decimal(x) -> str:
    """17-significant-digit decimal rendering, for human scanning only."""
    return format(float(x), ".17g")
