"""Kernel dispatch: compiled sweep if the extension built, pure python otherwise.

Set SEMIGROUP_LD_PURE=1 to force the fallback (used by differential tests and
the kernel benchmark).
"""
import os
from dataclasses import dataclass, field

import numpy as np

from . import _dp_py
from .config import PURE_ENV

try:
    from . import _speedups as _impl
except ImportError:  # extension not built
    _impl = _dp_py
if os.environ.get(PURE_ENV):
    _impl = _dp_py

KERNEL = _impl.IMPL


@dataclass(frozen=True)
class SweepStats:
    """Per-element length-set statistics over [0, hi].

    member[n] truthy iff n in S; count[n] = |L(n)|; minlen/maxlen are -1 for
    non-elements; maxgap[n] = max Δ(n) (0 when |L(n)| <= 1).  gap_values /
    gap_first describe the union of all Δ(n) with first witnesses; deltas maps
    each element n of the requested window to its sorted distinct-gap tuple.
    """

    hi: int
    member: np.ndarray
    count: np.ndarray
    minlen: np.ndarray
    maxlen: np.ndarray
    maxgap: np.ndarray | None = field(repr=False, default=None)
    gap_values: list | None = None
    gap_first: dict | None = field(repr=False, default=None)
    deltas: dict | None = field(repr=False, default=None)


def sweep(gens, hi, *, want_maxgap=False, want_gap_union=False, delta_window=None):
    """Run the selected kernel; delta_window is a half-open (lo, hi) range."""
    dlo, dhi = delta_window if delta_window is not None else (-1, -1)
    raw = _impl.sweep(
        list(gens), int(hi), bool(want_maxgap), bool(want_gap_union), int(dlo), int(dhi)
    )
    return SweepStats(int(hi), *raw)
