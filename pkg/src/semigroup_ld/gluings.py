"""Gluings G = μS₁ + λS₂: construction, structure formulas, and scans.

For non-atoms λ ∈ S₁, μ ∈ S₂ with gcd(λ, μ) = 1 the gluing is generated by
μ·gens(S₁) ∪ λ·gens(S₂), and its structure reduces to the factors:
Betti(G) = μBetti(S₁) ∪ λBetti(S₂) ∪ {λμ}, and every length set decomposes as
L_G(n) = ⋃ L_{S₁}(a) + L_{S₂}(b) over the splittings n = μa + λb.

Scans classify thousands of (λ, μ) cells, so they avoid the window pipeline:
max Δ(G) is attained at a Betti element, and G is bland exactly when some
Betti element's delta set is the singleton {max Δ(G)}.  Each cell therefore
needs only the length sets at its ≤ |Betti(S₁)| + |Betti(S₂)| + 1 Betti
elements, read off precomputed length tables of the two factors.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from multiprocessing import Pool

from . import density, factor
from .core import NumericalSemigroup
from .errors import DomainError, InvalidGluing, WrongEmbeddingDimension

__all__ = [
    "GluingSpec",
    "ProportionResult",
    "RegionBounds",
    "ScanResult",
    "betti_of_gluing",
    "classify_gluing",
    "glue",
    "glued_length_set",
    "lambda_mu_length_set",
    "scan_gluings",
    "self_glue_region_bounds",
    "tasty_proportion",
]


@dataclass(frozen=True)
class GluingSpec:
    """A valid gluing datum: non-atoms λ ∈ S₁, μ ∈ S₂ with gcd(λ, μ) = 1."""

    s1: NumericalSemigroup
    s2: NumericalSemigroup
    lam: int
    mu: int

    def __post_init__(self):
        for value, S, side in ((self.lam, self.s1, "λ"), (self.mu, self.s2, "μ")):
            if not S.contains(value):
                raise InvalidGluing(f"{side} = {value} is not an element of {S}")
            if value in S.generators:
                raise InvalidGluing(f"{side} = {value} is an atom of {S}")
        if gcd(self.lam, self.mu) != 1:
            raise InvalidGluing(f"gcd({self.lam}, {self.mu}) > 1")


def glue(spec):
    """The gluing μS₁ + λS₂ on the scaled generator union (checked minimal)."""
    gens = tuple(spec.mu * n for n in spec.s1.generators) + tuple(
        spec.lam * n for n in spec.s2.generators
    )
    S = NumericalSemigroup(gens)
    assert set(S.generators) == set(gens), "scaled generating set lost minimality"
    return S


def betti_of_gluing(spec):
    """Betti(G) = μ·Betti(S₁) ∪ λ·Betti(S₂) ∪ {λμ}, as a set."""
    b1 = {bd.element for bd in factor.betti_elements(spec.s1)}
    b2 = {bd.element for bd in factor.betti_elements(spec.s2)}
    return {spec.mu * b for b in b1} | {spec.lam * b for b in b2} | {spec.lam * spec.mu}


def lambda_mu_length_set(spec):
    """L_G(λμ) = L_{S₁}(λ) ∪ L_{S₂}(μ)."""
    merged = set(factor.length_set(spec.s1, spec.lam))
    merged.update(factor.length_set(spec.s2, spec.mu))
    return tuple(sorted(merged))


def _length_bits_at(lam, mu, n, t1, t2, mu_inv=None):
    """Length set of n in the gluing, as an int bitset.

    Walks the splittings n = μa + λb (b fixed mod μ by coprimality) and ORs
    the sumsets L_{S₁}(a) + L_{S₂}(b) computed as shifted bitset unions.
    t1/t2 are factor length tables at least n//mu and n//lam long.
    """
    if mu_inv is None:
        mu_inv = pow(lam, -1, mu)
    acc = 0
    for b in range((n * mu_inv) % mu, n // lam + 1, mu):
        xb = t2[b]
        if not xb:
            continue
        xa = t1[(n - lam * b) // mu]
        if not xa:
            continue
        while xb:
            low = xb & -xb
            acc |= xa << (low.bit_length() - 1)
            xb ^= low
    return acc


def glued_length_set(spec, n):
    """L_G(n) via the splitting formula (no DP over the glued semigroup)."""
    t1 = factor.length_bitsets(spec.s1.generators, n // spec.mu)
    t2 = factor.length_bitsets(spec.s2.generators, n // spec.lam)
    bits = _length_bits_at(spec.lam, spec.mu, n, t1, t2)
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return tuple(out)


def _distinct_gaps(bits):
    prev = None
    gaps = set()
    while bits:
        low = bits & -bits
        pos = low.bit_length() - 1
        if prev is not None:
            gaps.add(pos - prev)
        prev = pos
        bits ^= low
    return gaps


def _betti_verdict(lam, mu, betti1, betti2, t1, t2):
    """Fast tasty/bland verdict from delta sets at the gluing's Betti elements.

    Returns None when every Betti delta set is empty (the generic pipeline
    must then decide; does not occur for real gluings).
    """
    elements = {mu * b for b in betti1} | {lam * b for b in betti2} | {lam * mu}
    mu_inv = pow(lam, -1, mu)
    gap_sets = [
        _distinct_gaps(_length_bits_at(lam, mu, b, t1, t2, mu_inv))
        for b in elements
    ]
    maxd = max((max(g) for g in gap_sets if g), default=0)
    if maxd == 0:
        return None
    if any(g == {maxd} for g in gap_sets):
        return "bland"
    return "tasty"


def classify_gluing(spec):
    """Full window-pipeline classification of the glued semigroup."""
    return density.ld_of_semigroup(glue(spec))


def _scan_tables(s1, s2, lam_list, mu_list):
    """Factor length tables covering every Betti element of every scanned cell."""
    betti1 = tuple(bd.element for bd in factor.betti_elements(s1))
    betti2 = tuple(bd.element for bd in factor.betti_elements(s2))
    lam_hi, mu_lo = max(lam_list), min(mu_list)
    mu_hi, lam_lo = max(mu_list), min(lam_list)
    h1 = max(max(betti1, default=0), lam_hi * max(betti2, default=0) // mu_lo, lam_hi)
    h2 = max(max(betti2, default=0), mu_hi * max(betti1, default=0) // lam_lo, mu_hi)
    t1 = factor.length_bitsets(s1.generators, h1)
    t2 = factor.length_bitsets(s2.generators, h2)
    return betti1, betti2, t1, t2


def _scan_chunk(payload):
    pairs, betti1, betti2, t1, t2 = payload
    return [_betti_verdict(lam, mu, betti1, betti2, t1, t2) for lam, mu in pairs]


def _run_pairs(pairs, betti1, betti2, t1, t2, jobs):
    if jobs <= 1 or len(pairs) < 64:
        return _scan_chunk((pairs, betti1, betti2, t1, t2))
    step = -(-len(pairs) // jobs)
    payloads = [
        (pairs[i : i + step], betti1, betti2, t1, t2)
        for i in range(0, len(pairs), step)
    ]
    with Pool(len(payloads)) as pool:
        chunks = pool.map(_scan_chunk, payloads)
    return [v for chunk in chunks for v in chunk]


@dataclass(frozen=True)
class ScanResult:
    """Classified (λ, μ, verdict) grid plus counts of skipped invalid cells."""

    rows: tuple
    skipped_atom: int
    skipped_noncoprime: int

    @property
    def bland(self):
        return tuple(r for r in self.rows if r[2] == "bland")


def scan_gluings(s1, s2, lam_max, mu_max, jobs=1):
    """Classify every valid gluing with λ ≤ λ_max, μ ≤ μ_max.

    Atom and non-coprime cells are skipped and counted, not errors.  Rows
    come back sorted by (λ, μ).
    """
    lam_all = [n for n in s1.elements_upto(lam_max) if n >= 2]
    mu_all = [n for n in s2.elements_upto(mu_max) if n >= 2]
    atoms1, atoms2 = set(s1.generators), set(s2.generators)
    skipped_atom = skipped_noncoprime = 0
    pairs = []
    for lam in lam_all:
        for mu in mu_all:
            if lam in atoms1 or mu in atoms2:
                skipped_atom += 1
            elif gcd(lam, mu) != 1:
                skipped_noncoprime += 1
            else:
                pairs.append((lam, mu))
    if not pairs:
        return ScanResult((), skipped_atom, skipped_noncoprime)
    betti1, betti2, t1, t2 = _scan_tables(
        s1, s2, [p[0] for p in pairs], [p[1] for p in pairs]
    )
    verdicts = _run_pairs(pairs, betti1, betti2, t1, t2, jobs)
    rows = []
    for (lam, mu), v in zip(pairs, verdicts):
        if v is None:
            v = classify_gluing(GluingSpec(s1, s2, lam, mu)).verdict
        rows.append((lam, mu, v))
    return ScanResult(tuple(rows), skipped_atom, skipped_noncoprime)


@dataclass(frozen=True)
class RegionBounds:
    """Self-gluing verdict regions for ⟨n₁, n₂⟩, valid above the pair floor.

    Above the floor (λ > μ > floor), λ > slope·μ + offset with
    (slope, offset) = tasty_line forces tasty, and λ < slope·μ + offset with
    (slope, offset) = bland_line forces bland.
    """

    floor: int
    tasty_line: tuple
    bland_line: tuple


def self_glue_region_bounds(S):
    """Exact floor and affine verdict boundaries for gluing ⟨n₁,n₂⟩ with itself."""
    if S.embedding_dimension != 2:
        raise WrongEmbeddingDimension(f"{S} has {S.embedding_dimension} generators, need 2")
    n1, n2 = S.generators
    slope = Fraction(n2, n1)
    offset = Fraction(n2 * (n2 - n1))
    return RegionBounds(
        floor=2 * n1 * n2 - n1 - n2,
        tasty_line=(slope, offset),
        bland_line=(slope, -offset),
    )


@dataclass(frozen=True)
class ProportionResult:
    """Tasty share among the valid self-gluing pairs λ > μ below a bound."""

    tasty: int
    total: int
    ratio: Fraction


def tasty_proportion(S, N, jobs=1):
    """Exhaustive tasty count over self-gluings of ⟨n₁,n₂⟩ with λ > μ, both < N.

    Pairs are unordered (counted once, larger value as λ) and must be valid:
    non-atom elements of S, coprime.  The ratio tends to n₁/n₂ as N grows.
    """
    bounds = self_glue_region_bounds(S)
    N = int(N)
    if N <= bounds.floor:
        raise DomainError(f"N = {N} is not above the pair floor {bounds.floor}")
    atoms = set(S.generators)
    candidates = [n for n in S.elements_upto(N - 1) if n >= 2 and n not in atoms]
    pairs = [
        (lam, mu)
        for i, lam in enumerate(candidates)
        for mu in candidates[:i]
        if gcd(lam, mu) == 1
    ]
    if not pairs:
        return ProportionResult(0, 0, Fraction(0))
    betti1, betti2, t1, t2 = _scan_tables(
        S, S, [p[0] for p in pairs], [p[1] for p in pairs]
    )
    verdicts = _run_pairs(pairs, betti1, betti2, t1, t2, jobs)
    tasty = 0
    for (lam, mu), v in zip(pairs, verdicts):
        if v is None:
            v = classify_gluing(GluingSpec(S, S, lam, mu)).verdict
        tasty += v == "tasty"
    return ProportionResult(tasty, len(pairs), Fraction(tasty, len(pairs)))
