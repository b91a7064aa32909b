"""Factorizations, length sets, delta sets, Betti elements, minimal presentations.

Factorizations of n are exponent vectors z with z·gens = n, kept as plain
tuples ordered like S.generators.  Length sets are sorted tuples of ints.
"""
from dataclasses import dataclass, field

from .config import FACTORIZATION_BUDGET, LENGTH_TABLE_CAP, SWEEP_CAP
from .errors import BudgetExceeded, CapExceeded, NotAnElement

__all__ = [
    "BettiData",
    "SemigroupDelta",
    "betti_elements",
    "delta_of",
    "delta_of_semigroup",
    "factorization_graph_components",
    "factorizations",
    "length_set",
    "length_set_table",
    "minimal_presentation",
]


def factorizations(S, n, budget=None):
    """All of Z(n) = {z >= 0 : z·gens = n}, sorted lexicographically.

    Empty iff n is not an element.  Enumeration assigns exponents from the
    largest generator down, pruning remainders that leave S.
    """
    n = int(n)
    if n < 0 or not S.contains(n):
        return []
    cap = FACTORIZATION_BUDGET if budget is None else int(budget)
    gens = S.generators
    k = len(gens)
    out = []
    z = [0] * k

    def rec(i, rem):
        if i == 0:
            q, r = divmod(rem, gens[0])
            if r == 0:
                z[0] = q
                out.append(tuple(z))
                z[0] = 0
                if len(out) > cap:
                    raise BudgetExceeded(f"more than {cap} factorizations of {n}")
            return
        g = gens[i]
        for c in range(rem // g, -1, -1):
            rest = rem - c * g
            if S.contains(rest):
                z[i] = c
                rec(i - 1, rest)
        z[i] = 0

    rec(k - 1, n)
    return sorted(out)


def _bit_positions(x):
    out = []
    while x:
        out.append((x & -x).bit_length() - 1)
        x &= x - 1
    return out


def length_bitsets(gens, hi):
    """tab[n] = int bitset of L(n) (bit l set iff l in L(n)); 0 off-semigroup."""
    tab = [0] * (hi + 1)
    tab[0] = 1
    for n in range(1, hi + 1):
        bs = 0
        for g in gens:
            if g > n:
                break
            prev = tab[n - g]
            if prev:
                bs |= prev << 1
        tab[n] = bs
    return tab


def length_set(S, n):
    """L(n) as a sorted tuple of factorization lengths."""
    n = int(n)
    if n < 0 or not S.contains(n):
        raise NotAnElement(f"{n} is not an element of {S}")
    if n > SWEEP_CAP:
        raise CapExceeded(f"length-set DP to {n} exceeds sweep cap {SWEEP_CAP}")
    gens = S.generators
    ring = [0] * (gens[-1] + 1)
    R = len(ring)
    ring[0] = 1
    for m in range(1, n + 1):
        bs = 0
        for g in gens:
            if g > m:
                break
            prev = ring[(m - g) % R]
            if prev:
                bs |= prev << 1
        ring[m % R] = bs
    return tuple(_bit_positions(ring[n % R]))


def length_set_table(S, N):
    """{n: L(n)} for every element n <= N, from one DP sweep."""
    N = int(N)
    if N > LENGTH_TABLE_CAP:
        raise CapExceeded(f"table to {N} exceeds cap {LENGTH_TABLE_CAP}")
    tab = length_bitsets(S.generators, max(N, 0))
    return {n: tuple(_bit_positions(bs)) for n, bs in enumerate(tab) if bs}


def _delta_of_lengths(lengths):
    return tuple(sorted({b - a for a, b in zip(lengths, lengths[1:])}))


def delta_of(S, n):
    """Δ(n): sorted distinct gaps between consecutive lengths of L(n)."""
    return _delta_of_lengths(length_set(S, n))


def _components_of(facts, k):
    """Partition factorizations into connected components (shared support)."""
    parent = list(range(len(facts)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for col in range(k):
        anchor = -1
        for idx, zz in enumerate(facts):
            if zz[col]:
                if anchor < 0:
                    anchor = idx
                else:
                    ra, rb = find(anchor), find(idx)
                    if ra != rb:
                        parent[rb] = ra
    groups = {}
    for idx in range(len(facts)):
        groups.setdefault(find(idx), []).append(facts[idx])
    # facts are sorted, so each group is sorted and groups order by lex-least member
    return tuple(tuple(g) for g in sorted(groups.values()))


def factorization_graph_components(S, n):
    """Connected components of the factorization graph of n.

    Two factorizations are adjacent iff they share a generator with positive
    exponent; computed by union–find keyed on generator columns.
    """
    facts = factorizations(S, n)
    if not facts:
        raise NotAnElement(f"{n} is not an element of {S}")
    return _components_of(facts, len(S.generators))


@dataclass(frozen=True)
class BettiData:
    """A Betti element: its component partition, length set, and delta set."""

    element: int
    components: tuple
    lengths: tuple
    delta: tuple


def betti_elements(S):
    """All Betti elements (disconnected factorization graph), ascending.

    The search stops at frobenius + 2*n_k: past that point n - n_i - n_j lies
    in S for every generator pair, so any two factorizations are linked
    through a common refinement and the graph is connected.
    """
    gens = S.generators
    k = len(gens)
    if k < 2:
        return []
    F = S.frobenius()
    out = []
    for b in range(2 * gens[0], F + 2 * gens[-1] + 1):
        if not S.contains(b):
            continue
        # a disconnected graph needs some pair with b - n_i - n_j off S
        if all(
            S.contains(b - gens[i] - gens[j])
            for i in range(k)
            for j in range(i, k)
        ):
            continue
        facts = factorizations(S, b)
        if len(facts) < 2:
            continue
        comps = _components_of(facts, k)
        if len(comps) < 2:
            continue
        lengths = tuple(sorted({sum(zz) for zz in facts}))
        out.append(
            BettiData(
                element=b,
                components=comps,
                lengths=lengths,
                delta=_delta_of_lengths(lengths),
            )
        )
    return out


def minimal_presentation(S):
    """Minimal relation pairs: at each Betti element, link every component to
    the first (components ordered by lexicographically smallest member)."""
    rels = []
    for bd in betti_elements(S):
        first = bd.components[0][0]
        for comp in bd.components[1:]:
            rels.append((comp[0], first))
    return rels


@dataclass(frozen=True)
class SemigroupDelta:
    """Δ(S) with, for each gap value, the smallest element exhibiting it."""

    gaps: tuple
    attained_at: dict = field(repr=False)
    certificate: object = field(repr=False, compare=False, default=None)


def delta_of_semigroup(S, *, ns_bound=None):
    """Δ(S) = union of Δ(n) over a certified periodic window, with witnesses."""
    from . import density  # deferred: density builds on this module

    cert = density.certify_periodicity(S, ns_bound=ns_bound)
    st = cert.stats
    return SemigroupDelta(
        gaps=tuple(st.gap_values),
        attained_at=dict(st.gap_first),
        certificate=cert,
    )
