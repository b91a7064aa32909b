# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled sweep kernel: same contract as _dp_py.sweep, uint64 ring buffer.

Length-set bitsets live in a (n_k+1) x W ring of 64-bit words; each element
ORs the 1-shifted rows of its generator predecessors.  Per-row word spans are
tracked so stats and gap scans touch only the populated window, and runs of
all-ones words (dense length sets) are collapsed without per-bit iteration.
"""
from libc.stdint cimport int64_t, uint8_t, uint64_t
from libc.string cimport memset

import numpy as np

IMPL = "compiled"

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_clzll(unsigned long long) nogil

cdef uint64_t ALLONES = <uint64_t>0xFFFFFFFFFFFFFFFFULL


def sweep(gens_in, long long hi, bint want_maxgap=False, bint want_gap_union=False,
          long long delta_lo=-1, long long delta_hi=-1):
    """DP over [0, hi]; returns the raw stats tuple (see _kernel.SweepStats)."""
    gens_list = sorted(set(int(g) for g in gens_in))
    cdef Py_ssize_t k = len(gens_list)
    gens_np = np.array(gens_list, dtype=np.int64)
    cdef int64_t[::1] gens = gens_np
    cdef long long n1 = gens[0]
    cdef long long nk = gens[k - 1]
    if hi < 0:
        raise ValueError("hi must be >= 0")

    cdef long long maxbit = hi // n1 + 1
    cdef long long W = maxbit // 64 + 2
    cdef long long R = nk + 1

    ring_np = np.zeros((R, W), dtype=np.uint64)
    cdef uint64_t[:, ::1] ring = ring_np
    span_lo_np = np.zeros(R, dtype=np.int64)
    span_hi_np = np.full(R, -1, dtype=np.int64)
    cdef int64_t[::1] span_lo = span_lo_np
    cdef int64_t[::1] span_hi = span_hi_np

    member_np = np.zeros(hi + 1, dtype=np.uint8)
    count_np = np.zeros(hi + 1, dtype=np.int64)
    minlen_np = np.full(hi + 1, -1, dtype=np.int64)
    maxlen_np = np.full(hi + 1, -1, dtype=np.int64)
    cdef uint8_t[::1] member = member_np
    cdef int64_t[::1] count = count_np
    cdef int64_t[::1] minlen = minlen_np
    cdef int64_t[::1] maxlen = maxlen_np

    cdef bint has_window = delta_hi > delta_lo
    cdef bint want_gaps = want_maxgap or want_gap_union or has_window
    maxgap_np = np.zeros(hi + 1, dtype=np.int64) if want_maxgap else None
    cdef int64_t[::1] maxgap = maxgap_np if want_maxgap else None
    seen_np = np.zeros(maxbit + 2, dtype=np.uint8) if want_gap_union else None
    first_np = np.full(maxbit + 2, -1, dtype=np.int64) if want_gap_union else None
    cdef uint8_t[::1] seen = seen_np if want_gap_union else None
    cdef int64_t[::1] first = first_np if want_gap_union else None
    deltas = {} if has_window else None

    # distinct-gap scratch for delta-window rows (spill to a set if ever full)
    cdef int64_t dvals[64]
    cdef int ndv
    cdef bint in_window, overflow

    cdef long long n, g, slot, s, w, base, pos, last, gp, mg, acc_lo, acc_hi
    cdef long long slo, shi, c
    cdef Py_ssize_t i
    cdef uint64_t v, x
    spill = None

    for n in range(hi + 1):
        slot = n % R
        if span_hi[slot] >= span_lo[slot]:
            memset(&ring[slot, span_lo[slot]], 0,
                   <size_t>((span_hi[slot] - span_lo[slot] + 1) * 8))
        span_lo[slot] = 0
        span_hi[slot] = -1

        if n == 0:
            ring[0, 0] = 1
            span_hi[0] = 0
            member[0] = 1
            count[0] = 1
            minlen[0] = 0
            maxlen[0] = 0
            if has_window and delta_lo <= 0 < delta_hi:
                deltas[0] = ()
            continue

        acc_lo = W
        acc_hi = -1
        for i in range(k):
            g = gens[i]
            if g > n:
                break
            if not member[n - g]:
                continue
            s = (n - g) % R
            slo = span_lo[s]
            shi = span_hi[s]
            for w in range(slo, shi + 1):
                v = ring[s, w]
                ring[slot, w] |= v << 1
                ring[slot, w + 1] |= v >> 63
            if slo < acc_lo:
                acc_lo = slo
            if shi + 1 > acc_hi:
                acc_hi = shi + 1
        if acc_hi < 0:
            continue  # not an element
        while acc_hi > acc_lo and ring[slot, acc_hi] == 0:
            acc_hi -= 1
        while acc_lo < acc_hi and ring[slot, acc_lo] == 0:
            acc_lo += 1
        span_lo[slot] = acc_lo
        span_hi[slot] = acc_hi

        member[n] = 1
        c = 0
        for w in range(acc_lo, acc_hi + 1):
            v = ring[slot, w]
            if v:
                c += __builtin_popcountll(v)
        count[n] = c
        minlen[n] = acc_lo * 64 + __builtin_ctzll(ring[slot, acc_lo])
        maxlen[n] = acc_hi * 64 + 63 - __builtin_clzll(ring[slot, acc_hi])

        if not want_gaps:
            continue
        in_window = has_window and delta_lo <= n < delta_hi
        if not (want_maxgap or want_gap_union or in_window):
            continue
        mg = 0
        ndv = 0
        overflow = False
        last = -1
        for w in range(acc_lo, acc_hi + 1):
            v = ring[slot, w]
            if v == 0:
                continue
            base = w << 6
            if v == ALLONES:
                # 64 consecutive lengths: one boundary gap plus unit gaps
                if last >= 0:
                    gp = base - last
                    if gp > mg:
                        mg = gp
                    if want_gap_union and not seen[gp]:
                        seen[gp] = 1
                        first[gp] = n
                    if in_window:
                        if ndv < 64:
                            for i in range(ndv):
                                if dvals[i] == gp:
                                    break
                            else:
                                dvals[ndv] = gp
                                ndv += 1
                        else:
                            overflow = True
                gp = 1
                if mg < 1:
                    mg = 1
                if want_gap_union and not seen[1]:
                    seen[1] = 1
                    first[1] = n
                if in_window:
                    if ndv < 64:
                        for i in range(ndv):
                            if dvals[i] == 1:
                                break
                        else:
                            dvals[ndv] = 1
                            ndv += 1
                    else:
                        overflow = True
                last = base + 63
                continue
            x = v
            while x:
                pos = base + __builtin_ctzll(x)
                if last >= 0:
                    gp = pos - last
                    if gp > mg:
                        mg = gp
                    if want_gap_union and not seen[gp]:
                        seen[gp] = 1
                        first[gp] = n
                    if in_window:
                        if ndv < 64:
                            for i in range(ndv):
                                if dvals[i] == gp:
                                    break
                            else:
                                dvals[ndv] = gp
                                ndv += 1
                        else:
                            overflow = True
                last = pos
                x &= x - 1
        if want_maxgap:
            maxgap[n] = mg
        if in_window:
            if overflow:
                # rebuild exactly via python ints (effectively unreachable)
                if spill is None:
                    spill = set()
                spill.clear()
                last = -1
                for w in range(acc_lo, acc_hi + 1):
                    x = ring[slot, w]
                    base = w << 6
                    while x:
                        pos = base + __builtin_ctzll(x)
                        if last >= 0:
                            spill.add(pos - last)
                        last = pos
                        x &= x - 1
                deltas[n] = tuple(sorted(spill))
            else:
                deltas[n] = tuple(sorted(dvals[i] for i in range(ndv)))

    gap_values = None
    gap_first = None
    if want_gap_union:
        idx = np.flatnonzero(seen_np)
        gap_values = [int(t) for t in idx]
        gap_first = {int(t): int(first_np[t]) for t in idx}
    return member_np, count_np, minlen_np, maxlen_np, maxgap_np, gap_values, gap_first, deltas
