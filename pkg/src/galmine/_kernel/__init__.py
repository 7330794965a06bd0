"""Bitset kernel selection.

The hot mining loops have two interchangeable implementations: the
compiled Cython extension ``_bitcore`` (built optionally at install
time) and the pure-Python twin ``_pybits``.  The compiled one is picked
automatically when importable; ``GALMINE_KERNEL=python`` or ``=c`` in
the environment forces a choice, and :func:`use_backend` switches at
runtime (used by the benchmark and the parity tests).
"""

import os

from galmine._kernel import _pybits

try:
    from galmine._kernel import _bitcore
except ImportError:
    _bitcore = None

_BACKENDS = {"python": _pybits}
if _bitcore is not None:
    _BACKENDS["c"] = _bitcore

_forced = os.environ.get("GALMINE_KERNEL")
if _forced is not None and _forced not in _BACKENDS:
    raise ImportError(
        f"GALMINE_KERNEL={_forced!r} requested but that backend is unavailable "
        f"(available: {sorted(_BACKENDS)})"
    )

_active_name = _forced or ("c" if "c" in _BACKENDS else "python")


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def active_backend() -> str:
    return _active_name


def use_backend(name: str) -> None:
    global _active_name
    if name not in _BACKENDS:
        raise ValueError(f"unknown kernel backend {name!r} (available: {sorted(_BACKENDS)})")
    _active_name = name


def mine_vertical(col_masks, n_objects, minsup):
    return _BACKENDS[_active_name].mine_vertical(col_masks, n_objects, minsup)


def count_containing_rows(row_masks, candidate_masks, n_attributes):
    return _BACKENDS[_active_name].count_containing_rows(row_masks, candidate_masks, n_attributes)
