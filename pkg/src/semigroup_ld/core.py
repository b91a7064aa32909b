"""Numerical semigroups: membership, Apéry tables, Frobenius numbers, periods.

A numerical semigroup S = <n_1, ..., n_k> is the set of non-negative integer
combinations of generators with gcd 1.  Instances are immutable and hashable;
construction reduces the input to the unique minimal generating set.  The
Apéry table (least element of S in each residue class mod n_1) is built lazily
on the first membership query and makes contains() an O(1) lookup.
"""
import heapq
import math

from .config import MAX_ELEMENT, MAX_GENERATOR
from .errors import (
    CapExceeded,
    EmptyInput,
    GcdNotOne,
    InvalidGenerator,
    WrongEmbeddingDimension,
)


def _membership_bits(gens, hi):
    """Bitset of <gens> ∩ [0, hi]: bit n set iff n is a combination of gens."""
    mask = (1 << (hi + 1)) - 1
    ok = 1
    for g in gens:
        sh = g
        while sh <= hi:
            ok |= (ok << sh) & mask
            sh <<= 1
    return ok


def _minimal_generators(gens):
    """Drop every generator expressible as a sum of two nonzero elements."""
    hi = gens[-1]
    ok = _membership_bits(gens, hi)
    atoms = []
    for g in gens:
        if not any(g > h and (ok >> (g - h)) & 1 for h in gens if h < g):
            atoms.append(g)
    return tuple(atoms)


class NumericalSemigroup:
    """Immutable numerical semigroup with lazy Apéry-table membership."""

    __slots__ = ("generators", "_apery")

    def __init__(self, generators):
        gens = sorted({int(g) for g in generators})
        if not gens:
            raise EmptyInput("at least one generator is required")
        if gens[0] < 1:
            raise InvalidGenerator(f"generators must be positive, got {gens[0]}")
        if gens[-1] > MAX_GENERATOR:
            raise CapExceeded(f"generator {gens[-1]} exceeds cap {MAX_GENERATOR}")
        if math.gcd(*gens) != 1:
            raise GcdNotOne(f"gcd of generators is {math.gcd(*gens)}, not 1")
        if gens[0] == 1:
            self.generators = (1,)
        else:
            self.generators = _minimal_generators(gens)
        self._apery = None

    # -- construction / identity ------------------------------------------

    def __repr__(self):
        return f"NumericalSemigroup({self.generators})"

    def __str__(self):
        return "<" + ", ".join(str(g) for g in self.generators) + ">"

    def __eq__(self, other):
        return (
            isinstance(other, NumericalSemigroup)
            and self.generators == other.generators
        )

    def __hash__(self):
        return hash(self.generators)

    # -- basic invariants ---------------------------------------------------

    @property
    def multiplicity(self):
        """Smallest nonzero element."""
        return self.generators[0]

    @property
    def embedding_dimension(self):
        """Number of minimal generators k."""
        return len(self.generators)

    @property
    def is_trivial(self):
        """True for <1>, where every element factors uniquely."""
        return self.generators == (1,)

    def apery(self):
        """Least element of S in each residue class mod the multiplicity.

        Computed once via shortest paths on the residue graph (edges r -> r+g
        weighted g); a fully built tuple is assigned atomically, so a
        constructed instance is safe to share across threads.
        """
        if self._apery is None:
            m = self.generators[0]
            dist = [0] + [None] * (m - 1)
            heap = [(0, 0)]
            while heap:
                d, r = heapq.heappop(heap)
                if dist[r] is not None and d > dist[r]:
                    continue
                for g in self.generators[1:]:
                    v = d + g
                    r2 = v % m
                    if dist[r2] is None or v < dist[r2]:
                        dist[r2] = v
                        heapq.heappush(heap, (v, r2))
            self._apery = tuple(dist)
        return self._apery

    def contains(self, n):
        """True iff n is a non-negative integer combination of the generators."""
        n = int(n)
        if n < 0:
            return False
        if n > MAX_ELEMENT:
            raise CapExceeded(f"element {n} exceeds cap {MAX_ELEMENT}")
        ap = self.apery()
        return n >= ap[n % self.generators[0]]

    def __contains__(self, n):
        return self.contains(n)

    def elements_upto(self, hi):
        """Sorted list of elements of S in [0, hi]."""
        return [n for n in range(int(hi) + 1) if self.contains(n)]

    def frobenius(self):
        """Largest integer not in S (-1 for <1>)."""
        return max(self.apery()) - self.generators[0]

    def min_delta(self):
        """d = gcd of consecutive generator differences; equals min Δ(S)."""
        gens = self.generators
        if len(gens) < 2:
            raise WrongEmbeddingDimension("min_delta needs at least 2 generators")
        return math.gcd(*(b - a for a, b in zip(gens, gens[1:])))

    def period_constants(self):
        """(p, L): period p = lcm(n_1, n_k) and per-period length-count growth L.

        L = (n_k - n_1) / (d * gcd(n_1, n_k)) is integral: d divides
        (n_k - n_1)/gcd(n_1, n_k) because every generator difference is a
        multiple of d and gcd(n_1, n_k) is coprime to the cofactor.
        """
        gens = self.generators
        if len(gens) < 2:
            raise WrongEmbeddingDimension("period_constants needs at least 2 generators")
        n1, nk = gens[0], gens[-1]
        d = self.min_delta()
        g = math.gcd(n1, nk)
        p = n1 * nk // g
        growth, rem = divmod(nk - n1, d * g)
        if rem:
            raise AssertionError(f"period growth not integral for {self}")
        return p, growth


def from_generators(raw):
    """Build a NumericalSemigroup from any iterable of positive integers."""
    return NumericalSemigroup(raw)
