"""Backend selection for the combinatorial hot loops.

Two interchangeable implementations exist:

* ``monoclose._speedups``: Cython, fixed-width int64 arithmetic, fast;
* ``monoclose._kernels_py``: pure Python, arbitrary precision, always present.

The compiled backend is used when it imported successfully, the inputs fit
comfortably inside int64, and the environment variable ``MONOCLOSE_BACKEND``
does not force the pure one.  Oversized inputs are routed to the pure
backend silently: exactness is never traded for speed.
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    from . import _speedups
except ImportError:
    _speedups = None

_FORCED = os.environ.get("MONOCLOSE_BACKEND", "").strip().lower()
if _FORCED not in ("", "c", "python"):
    raise RuntimeError(
        f"MONOCLOSE_BACKEND must be 'c' or 'python', got {_FORCED!r}"
    )
if _FORCED == "c" and _speedups is None:
    raise RuntimeError("MONOCLOSE_BACKEND=c but the compiled kernel is not built")

_ACTIVE = _kernels_py if (_FORCED == "python" or _speedups is None) else _speedups

# Compiled kernels do coordinate arithmetic (sums, dot products against
# separator functionals) in int64; staying far below 2**62 keeps every
# intermediate safe.
_COORD_LIMIT = 1 << 30


def backend_name() -> str:
    return _ACTIVE.BACKEND_NAME


def available_backends() -> dict:
    out = {"python": _kernels_py}
    if _speedups is not None:
        out["c"] = _speedups
    return out


def _coords_fit(vectors) -> bool:
    return all(c <= _COORD_LIMIT for v in vectors for c in v)


def minimal_antichain(vectors):
    vectors = list(vectors)
    impl = _ACTIVE if _coords_fit(vectors) else _kernels_py
    return impl.minimal_antichain(vectors)


def pair_sums_antichain(left, right):
    left, right = list(left), list(right)
    impl = _ACTIVE
    if not (_coords_fit(left) and _coords_fit(right)):
        impl = _kernels_py
    return impl.pair_sums_antichain(left, right)


def dominates_any(gens, v):
    gens = list(gens)
    impl = _ACTIVE if (_coords_fit(gens) and _coords_fit([v])) else _kernels_py
    return impl.dominates_any(gens, v)


def box_closure_scan(bounds, seeds, member, budget=None):
    seeds = list(seeds)
    impl = _ACTIVE
    if not (_coords_fit([bounds]) and _coords_fit(seeds)):
        impl = _kernels_py
    return impl.box_closure_scan(tuple(bounds), seeds, member, budget)
