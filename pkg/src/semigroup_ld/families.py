"""Closed-form constructors and classifiers for structured semigroup families.

Three families admit fast tasty/bland rules that bypass the generic window
pipeline: supersymmetric semigroups ⟨s/t₁, …, s/t_k⟩ (LD(S) = (k−1)/(t₁−t_k),
tasty iff the tᵢ are not an arithmetic progression), 3-generated semigroups
(dispatch on the number of Betti elements), and maximal-embedding-dimension
(MED) semigroups, where multiplicity-4 instances split into two rule regions
plus an exact middle band.  Every rule here is differentially tested against
the generic classifier.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, prod

from . import density, factor
from .core import NumericalSemigroup
from .errors import (
    InvalidGenerator,
    NotComposite,
    NotCoprime,
    NotMed,
    NotMed4,
    NotPrimeMultiplicity,
    WrongEmbeddingDimension,
)

__all__ = [
    "Med4Result",
    "MedBettiRecord",
    "ThreegenReport",
    "classify_med4",
    "classify_threegen",
    "med4_grid",
    "med_check",
    "med_composite_construct",
    "med_prime_bland",
    "med_small_betti_check",
    "supersymmetric",
]


def _is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def _is_arithmetic(t):
    return len({t[i] - t[i + 1] for i in range(len(t) - 1)}) <= 1


def supersymmetric(t):
    """Build ⟨s/t₁, …, s/t_k⟩ from pairwise coprime t₁ > … > t_k ≥ 2.

    Returns (S, LD(S), verdict) with LD(S) = (k−1)/(t₁−t_k) and verdict tasty
    exactly when the tᵢ do not form an arithmetic progression.
    """
    t = tuple(sorted((int(x) for x in t), reverse=True))
    if len(t) < 2:
        raise InvalidGenerator("need at least two parameters")
    if t[-1] < 2:
        raise InvalidGenerator(f"parameters must be >= 2, got {t[-1]}")
    for i in range(len(t)):
        for j in range(i + 1, len(t)):
            if gcd(t[i], t[j]) != 1:
                raise NotCoprime(f"gcd({t[i]}, {t[j]}) > 1")
    s = prod(t)
    gens = tuple(s // x for x in t)
    S = NumericalSemigroup(gens)
    assert set(S.generators) == set(gens), "parameters lost minimality"
    ld = Fraction(len(t) - 1, t[0] - t[-1])
    verdict = "bland" if _is_arithmetic(t) else "tasty"
    return S, ld, verdict


@dataclass(frozen=True)
class ThreegenReport:
    """Verdict for a 3-generated semigroup, with the rule that decided it."""

    verdict: str
    betti: tuple
    rule: str


def classify_threegen(S):
    """Classify a 3-generated semigroup by its Betti element count.

    One Betti element s means S = ⟨s/t₁, s/t₂, s/t₃⟩ and the arithmetic
    progression test applies; two Betti b₁ < b₂ are tasty exactly when
    maxΔ(b₂) > maxΔ(b₁) and b₂ − b₁ ∈ S; three Betti elements force bland.
    """
    if S.embedding_dimension != 3:
        raise WrongEmbeddingDimension(f"{S} has {S.embedding_dimension} generators, need 3")
    betti = factor.betti_elements(S)
    elems = tuple(bd.element for bd in betti)
    assert 1 <= len(elems) <= 3, f"unexpected Betti count {len(elems)}"
    if len(elems) == 1:
        s = elems[0]
        assert all(s % n == 0 for n in S.generators)
        t = tuple(sorted((s // n for n in S.generators), reverse=True))
        verdict = "bland" if _is_arithmetic(t) else "tasty"
        return ThreegenReport(verdict=verdict, betti=elems, rule="unique-betti")
    if len(elems) == 2:
        d1 = max(betti[0].delta, default=0)
        d2 = max(betti[1].delta, default=0)
        tasty = d2 > d1 and S.contains(elems[1] - elems[0])
        verdict = "tasty" if tasty else "bland"
        return ThreegenReport(verdict=verdict, betti=elems, rule="two-betti")
    return ThreegenReport(verdict="bland", betti=elems, rule="three-betti")


def med_check(S):
    """True iff S has maximal embedding dimension (e(S) = m(S))."""
    return S.embedding_dimension == S.multiplicity


@dataclass(frozen=True)
class MedBettiRecord:
    """Smallest Betti element in one residue class, with its length set."""

    residue: int
    element: int
    lengths: tuple


def med_small_betti_check(S):
    """For each qualifying residue class of an MED semigroup, check |L(b)| ≤ 2.

    A class r qualifies when r = 0 or r is a unit mod m; for those, the
    smallest Betti element in the class must have at most two lengths.
    Returns the checked records.
    """
    if not med_check(S):
        raise NotMed(f"{S} is not maximal embedding dimension")
    m = S.multiplicity
    smallest = {}
    for bd in factor.betti_elements(S):
        r = bd.element % m
        if r not in smallest:
            smallest[r] = bd
    out = []
    for r in sorted(smallest):
        if r != 0 and gcd(r, m) != 1:
            continue
        bd = smallest[r]
        if len(bd.lengths) > 2:
            raise AssertionError(
                f"class {r}: smallest Betti {bd.element} has {len(bd.lengths)} lengths"
            )
        out.append(MedBettiRecord(residue=r, element=bd.element, lengths=bd.lengths))
    return tuple(out)


@dataclass(frozen=True)
class Med4Result:
    """Multiplicity-4 MED verdict plus which rule produced it."""

    verdict: str
    provenance: str
    semigroup: NumericalSemigroup


def _med4_validate(n1, n2, n3):
    for i, n in enumerate((n1, n2, n3), start=1):
        if n <= 4:
            raise NotMed4(f"n{i} = {n} must exceed 4")
        if n % 4 != i:
            raise NotMed4(f"n{i} = {n} is not congruent to {i} mod 4")
    if not (2 * n1 > n2 and n1 + n2 > n3 and n2 + n3 > n1 and 2 * n3 > n2):
        raise NotMed4(f"({n1}, {n2}, {n3}) fails the multiplicity-4 inequalities")


def classify_med4(n1, n2, n3):
    """Classify S = ⟨4, n₁, n₂, n₃⟩ (nᵢ ≡ i mod 4, MED inequalities).

    Region rules: min(n₁,n₂,n₃) ≠ n₂ forces bland; otherwise 2n₁ + 2n₃ > n₂²
    forces tasty; the remaining band is classified exactly.
    """
    n1, n2, n3 = int(n1), int(n2), int(n3)
    _med4_validate(n1, n2, n3)
    S = NumericalSemigroup((4, n1, n2, n3))
    assert med_check(S), f"{S} is not MED despite the inequalities"
    if min(n1, n2, n3) != n2:
        return Med4Result(verdict="bland", provenance="min-rule", semigroup=S)
    if 2 * n1 + 2 * n3 > n2 * n2:
        return Med4Result(verdict="tasty", provenance="threshold-rule", semigroup=S)
    verdict = density.ld_of_semigroup(S).verdict
    return Med4Result(verdict=verdict, provenance="exact", semigroup=S)


def med4_grid(n2, max_n):
    """Classify every admissible (n₁, n₃) pair for a fixed n₂, up to max_n.

    Yields (n₁, n₃, verdict, provenance) rows for CSV emission.
    """
    n2 = int(n2)
    if n2 <= 4 or n2 % 4 != 2:
        raise NotMed4(f"n2 = {n2} must exceed 4 and be congruent to 2 mod 4")
    rows = []
    for a in range(5, max_n + 1, 4):
        for b in range(7, max_n + 1, 4):
            if not (2 * a > n2 and a + n2 > b and n2 + b > a and 2 * b > n2):
                continue
            r = classify_med4(a, n2, b)
            rows.append((a, b, r.verdict, r.provenance))
    return rows


def med_prime_bland(S):
    """Verdict for an MED semigroup of prime multiplicity ≥ 3 (always bland)."""
    if not med_check(S):
        raise NotMed(f"{S} is not maximal embedding dimension")
    m = S.multiplicity
    if m < 3 or not _is_prime(m):
        raise NotPrimeMultiplicity(f"multiplicity {m} is not an odd prime")
    return "bland"


def med_composite_construct(p, q):
    """Both verdicts at composite multiplicity m = pq (p prime, q ≥ 2).

    Returns (bland, tasty): the arithmetical semigroup ⟨m, m+1, …, 2m−1⟩ and
    the instance with nᵢ = m+i when p | i, 2qm+i otherwise.  Both are MED.
    """
    p, q = int(p), int(q)
    if not _is_prime(p):
        raise NotComposite(f"p = {p} is not prime")
    if q < 2:
        raise NotComposite(f"q = {q} must be at least 2")
    m = p * q
    bland = NumericalSemigroup(range(m, 2 * m))
    gens = [m] + [m + i if i % p == 0 else 2 * q * m + i for i in range(1, m)]
    tasty = NumericalSemigroup(gens)
    assert med_check(bland) and med_check(tasty)
    return bland, tasty
