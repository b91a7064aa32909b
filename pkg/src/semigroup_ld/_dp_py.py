"""Pure-python sweep kernel.

One DP pass over n = 0..hi computes, for every element, the bitset of its
factorization lengths (bit l set iff l in L(n)) in a ring buffer of python
ints, recording per-element stats (|L(n)|, min, max) and, on request,
gap statistics (max gap per element, global gap union with first witnesses,
and exact delta tuples on a subrange).  Gap extraction is vectorized by
dumping bitset rows into byte chunks and running numpy diff over set-bit
positions.

The compiled kernel in _speedups.pyx implements the same contract; the
dispatcher in _kernel.py picks one at import time.
"""
import numpy as np

IMPL = "python"

_CHUNK_BITS = 2_000_000  # target unpacked bits per numpy chunk


class _GapChunker:
    """Accumulates bitset rows and flushes gap statistics chunk-by-chunk."""

    def __init__(self, hi, rowbits, want_maxgap, want_union, dlo, dhi):
        self.rowbits = rowbits
        self.rowbytes = (rowbits + 7) // 8
        self.rows_cap = max(1, min(_CHUNK_BITS // max(rowbits, 1), 16384))
        self.buf = bytearray(self.rows_cap * self.rowbytes)
        self.start = 0  # n of the first row in the buffer
        self.nrows = 0
        self.maxgap = np.zeros(hi + 1, dtype=np.int64) if want_maxgap else None
        self.want_union = want_union
        self.first = {}  # gap value -> smallest n exhibiting it
        self.dlo, self.dhi = dlo, dhi
        self.deltas = {} if dhi > dlo else None

    def push(self, n, bs):
        if self.nrows == self.rows_cap:
            self.flush()
            self.start = n
        if bs:
            off = self.nrows * self.rowbytes
            self.buf[off : off + self.rowbytes] = bs.to_bytes(self.rowbytes, "little")
        self.nrows += 1

    def flush(self):
        rows = self.nrows
        if rows == 0:
            return
        arr = np.frombuffer(
            memoryview(self.buf)[: rows * self.rowbytes], dtype=np.uint8
        ).reshape(rows, self.rowbytes)
        bits = np.unpackbits(arr, axis=1, bitorder="little")
        rr, cc = np.nonzero(bits)
        if rr.size:
            same = rr[1:] == rr[:-1]
            gaps = (cc[1:] - cc[:-1])[same]
            grow = rr[1:][same]
        else:
            gaps = grow = np.empty(0, dtype=np.int64)
        if gaps.size:
            if self.maxgap is not None:
                starts = np.flatnonzero(np.r_[True, grow[1:] != grow[:-1]])
                self.maxgap[self.start + grow[starts]] = np.maximum.reduceat(
                    gaps, starts
                )
            if self.want_union:
                for g in np.unique(gaps):
                    g = int(g)
                    if g not in self.first:
                        self.first[g] = self.start + int(grow[np.argmax(gaps == g)])
            if self.deltas is not None:
                lo = max(self.start, self.dlo)
                hi = min(self.start + rows, self.dhi)
                for n in range(lo, hi):
                    r = n - self.start
                    i0 = np.searchsorted(grow, r)
                    i1 = np.searchsorted(grow, r + 1)
                    if i1 > i0:
                        self.deltas[n] = tuple(
                            int(v) for v in np.unique(gaps[i0:i1])
                        )
        # reset buffer
        self.buf[: rows * self.rowbytes] = bytes(rows * self.rowbytes)
        self.nrows = 0


def sweep(gens, hi, want_maxgap=False, want_gap_union=False, delta_lo=-1, delta_hi=-1):
    """DP over [0, hi]; returns the raw stats tuple (see _kernel.SweepStats)."""
    gens = sorted({int(g) for g in gens})
    hi = int(hi)
    n1, nk = gens[0], gens[-1]
    ring = [0] * (nk + 1)
    member = np.zeros(hi + 1, dtype=np.uint8)
    count = np.zeros(hi + 1, dtype=np.int64)
    minlen = np.full(hi + 1, -1, dtype=np.int64)
    maxlen = np.full(hi + 1, -1, dtype=np.int64)

    want_gaps = want_maxgap or want_gap_union or delta_hi > delta_lo
    chunker = None
    if want_gaps:
        chunker = _GapChunker(
            hi, hi // n1 + 1, want_maxgap, want_gap_union, delta_lo, delta_hi
        )

    R = nk + 1
    for n in range(hi + 1):
        if n == 0:
            bs = 1
        else:
            bs = 0
            for g in gens:
                if g > n:
                    break
                prev = ring[(n - g) % R]
                if prev:
                    bs |= prev << 1
        ring[n % R] = bs
        if bs:
            member[n] = 1
            count[n] = bs.bit_count()
            maxlen[n] = bs.bit_length() - 1
            minlen[n] = (bs & -bs).bit_length() - 1
        if chunker is not None:
            chunker.push(n, bs)

    gap_values = None
    gap_first = None
    deltas = None
    maxgap = None
    if chunker is not None:
        chunker.flush()
        maxgap = chunker.maxgap
        if want_gap_union:
            gap_first = dict(sorted(chunker.first.items()))
            gap_values = sorted(gap_first)
        if chunker.deltas is not None:
            deltas = chunker.deltas
            for n in range(max(delta_lo, 0), min(delta_hi, hi + 1)):
                if member[n] and n not in deltas:
                    deltas[n] = ()
    return member, count, minlen, maxlen, maxgap, gap_values, gap_first, deltas
