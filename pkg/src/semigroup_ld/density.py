"""Length density: per-element values, certified periodic windows, LD(S).

LD(n) = (|L(n)| - 1)/(max L(n) - min L(n)) for elements with at least two
lengths; LD(S) is the minimum over all such elements.  For large n the length
set is quasilinear: |L(n+p)| = |L(n)| + L with p = lcm(n_1, n_k), max L grows
by p/n_1 per period, min L by p/n_k, and Δ(n+p) = Δ(n).  A
PeriodicityCertificate pins an empirically verified start M for those shift
rules, which reduces LD(S) to a finite scan over n < M + p and makes LD(n)
an O(1) recurrence beyond the window.
"""
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import factor
from ._kernel import SweepStats, sweep
from .config import CERT_MAX_ESCALATIONS, CERT_SPANS, SWEEP_CAP
from .errors import (
    CertificationFailed,
    CapExceeded,
    DomainError,
    UniqueLength,
    WrongEmbeddingDimension,
)

__all__ = [
    "Classification",
    "PeriodicityCertificate",
    "certify_periodicity",
    "ld_large_n",
    "ld_of_element",
    "ld_of_semigroup",
    "ld_profile",
    "partition_lengths",
]


@dataclass(frozen=True)
class PeriodicityCertificate:
    """Verified window: for M <= n < M + checked_spans*p the shift rules hold.

    stats carries the sweep backing the verification (elements 0..M + (spans+1)*p),
    including max-gap and gap-union data, so downstream consumers reuse it.
    """

    start: int
    period: int
    growth: int
    checked_spans: int
    stats: SweepStats = field(repr=False, compare=False)


@dataclass(frozen=True)
class Classification:
    """Verdict for a semigroup: tasty iff LD(S) > 1/maxΔ(S)."""

    verdict: str
    witness: int
    max_delta: int
    ld: Fraction
    certificate: PeriodicityCertificate = field(repr=False, compare=False, default=None)


def certify_periodicity(S, *, ns_bound=None, spans=CERT_SPANS):
    """Find the smallest verified period-aligned start M >= max(n_k², F+1).

    Verification checks, for `spans` consecutive periods, that |L|, max L,
    min L shift by (growth, p/n_1, p/n_k) and that delta tuples repeat.  On
    failure the start escalates by one period, up to a configured ceiling.
    ns_bound replaces the default floor (the window is still verified).
    """
    gens = S.generators
    if len(gens) < 2:
        raise WrongEmbeddingDimension("certification needs at least 2 generators")
    n1, nk = gens[0], gens[-1]
    p, growth = S.period_constants()
    if ns_bound is None:
        floor = max(nk * nk, S.frobenius() + 1)
    else:
        floor = max(int(ns_bound), 1)
    M = -(-floor // p) * p
    for _ in range(CERT_MAX_ESCALATIONS):
        hi = M + (spans + 1) * p
        if hi > SWEEP_CAP:
            raise CertificationFailed(
                f"window [0, {hi}] exceeds the sweep cap; pass a smaller ns_bound"
            )
        st = sweep(
            gens, hi, want_maxgap=True, want_gap_union=True, delta_window=(M, hi + 1)
        )
        a = slice(M, M + spans * p)
        b = slice(M + p, M + (spans + 1) * p)
        ok = (
            np.array_equal(st.count[b], st.count[a] + growth)
            and np.array_equal(st.maxlen[b], st.maxlen[a] + p // n1)
            and np.array_equal(st.minlen[b], st.minlen[a] + p // nk)
            and all(
                st.deltas[n + p] == st.deltas[n] for n in range(M, M + spans * p)
            )
        )
        if ok:
            return PeriodicityCertificate(M, p, growth, spans, st)
        M += p
    raise CertificationFailed(
        f"no verified window within {CERT_MAX_ESCALATIONS} period escalations"
    )


def ld_of_element(S, n):
    """LD(n) as an exact reduced Fraction."""
    lengths = factor.length_set(S, n)
    if len(lengths) < 2:
        raise UniqueLength(f"L({n}) = {{{lengths[0]}}} has a single length")
    return Fraction(len(lengths) - 1, lengths[-1] - lengths[0])


def _min_ld(st, upper):
    """Exact minimum of (count-1)/spread over elements below `upper`.

    Float ratios pick a candidate band, exact fractions settle it; ties go to
    the smallest element.
    """
    counts = st.count[:upper]
    spreads = st.maxlen[:upper] - st.minlen[:upper]
    idx = np.flatnonzero(counts >= 2)
    if idx.size == 0:
        return None
    r = (counts[idx] - 1.0) / spreads[idx]
    cand = idx[r <= r.min() * (1.0 + 1e-9)]
    best = None
    witness = -1
    for n in cand:
        f = Fraction(int(counts[n]) - 1, int(spreads[n]))
        if best is None or f < best:
            best, witness = f, int(n)
    return witness, best


def ld_of_semigroup(S, *, ns_bound=None):
    """Exact LD(S) with witness, max Δ(S), and the tasty/bland verdict.

    The minimum of LD(n) over n < M + p equals the global minimum once the
    certificate verifies the shift rules (each later element reduces to a
    window element with no smaller LD); max Δ(S) is read off the same sweep.
    """
    cert = certify_periodicity(S, ns_bound=ns_bound)
    st = cert.stats
    upper = cert.start + cert.period
    found = _min_ld(st, upper)
    if found is None:
        raise UniqueLength(f"no element of {S} below {upper} has two lengths")
    witness, ld = found
    max_delta = int(st.maxgap[:upper].max())
    verdict = "tasty" if ld > Fraction(1, max_delta) else "bland"
    return Classification(
        verdict=verdict, witness=witness, max_delta=max_delta, ld=ld, certificate=cert
    )


def ld_large_n(S, cert, n):
    """LD(n) for n >= cert.start in O(1) via the per-period growth rules."""
    n = int(n)
    if n < cert.start:
        raise DomainError(f"{n} is below the certified window start {cert.start}")
    st = cert.stats
    base = cert.start + (n - cert.start) % cert.period
    j = (n - base) // cert.period
    c = int(st.count[base]) + j * cert.growth
    if c < 2:
        raise UniqueLength(f"L({n}) has a single length")
    spread = int(st.maxlen[base]) - int(st.minlen[base]) + j * S.min_delta() * cert.growth
    return Fraction(c - 1, spread)


def ld_profile(S, N):
    """All (n, LD(n)) pairs for elements n <= N with at least two lengths."""
    N = int(N)
    if N > SWEEP_CAP:
        raise CapExceeded(f"profile to {N} exceeds sweep cap {SWEEP_CAP}")
    st = sweep(S.generators, max(N, 0))
    out = []
    for n in np.flatnonzero(st.count >= 2):
        n = int(n)
        out.append(
            (n, Fraction(int(st.count[n]) - 1, int(st.maxlen[n] - st.minlen[n])))
        )
    return out


def partition_lengths(S, n, N):
    """Split L(n) into (L1, L2, L3) by the window-N threshold inequalities.

    L1 holds lengths above n/n_1 + N(1/n_2 - 1/n_1), L3 those below
    n/n_k + N(1/n_{k-1} - 1/n_k), L2 the closed middle band; each length is
    assigned to exactly one part (L1 wins over L3 if the bands ever touch).
    """
    gens = S.generators
    if len(gens) < 2:
        raise WrongEmbeddingDimension("partition needs at least 2 generators")
    lengths = factor.length_set(S, n)
    n1, nk = gens[0], gens[-1]
    t_hi = Fraction(n, n1) + N * (Fraction(1, gens[1]) - Fraction(1, n1))
    t_lo = Fraction(n, nk) + N * (Fraction(1, gens[-2]) - Fraction(1, nk))
    l1 = tuple(l for l in lengths if l > t_hi)
    l3 = tuple(l for l in lengths if l <= t_hi and l < t_lo)
    l2 = tuple(l for l in lengths if t_lo <= l <= t_hi)
    return l1, l2, l3
