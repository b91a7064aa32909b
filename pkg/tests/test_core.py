"""Construction, membership, Apéry tables, Frobenius numbers, period data."""
import random

import pytest

import oracles
from semigroup_ld import NumericalSemigroup, from_generators
from semigroup_ld.config import MAX_ELEMENT, MAX_GENERATOR
from semigroup_ld.errors import (
    CapExceeded,
    EmptyInput,
    GcdNotOne,
    InvalidGenerator,
    WrongEmbeddingDimension,
)


def test_minimal_generating_set_is_extracted():
    assert NumericalSemigroup([6, 9, 20]).generators == (6, 9, 20)
    # 13 = 4 + 9 and 17 = 4 + 13 are redundant
    assert NumericalSemigroup([4, 6, 9, 13, 17]).generators == (4, 6, 9)
    # duplicates collapse
    assert NumericalSemigroup([5, 5, 7, 9]).generators == (5, 7, 9)
    # order does not matter
    assert NumericalSemigroup([20, 9, 6]) == NumericalSemigroup([6, 9, 20])


def test_trivial_semigroup():
    S = NumericalSemigroup([3, 1, 7])
    assert S.generators == (1,)
    assert S.is_trivial
    assert S.frobenius() == -1
    assert S.contains(0) and S.contains(1) and S.contains(10**6)


def test_construction_errors():
    with pytest.raises(EmptyInput):
        NumericalSemigroup([])
    with pytest.raises(InvalidGenerator):
        NumericalSemigroup([0, 5])
    with pytest.raises(InvalidGenerator):
        NumericalSemigroup([-3, 7])
    with pytest.raises(GcdNotOne):
        NumericalSemigroup([4, 6])
    with pytest.raises(CapExceeded):
        NumericalSemigroup([2, MAX_GENERATOR + 1])


def test_identity_and_hash():
    a = NumericalSemigroup([6, 9, 20])
    b = from_generators((9, 20, 6))
    assert a == b and hash(a) == hash(b)
    assert str(a) == "<6, 9, 20>"
    assert repr(a) == "NumericalSemigroup((6, 9, 20))"
    assert a != NumericalSemigroup([2, 3])


def test_basic_invariants():
    S = NumericalSemigroup([6, 9, 20])
    assert S.multiplicity == 6
    assert S.embedding_dimension == 3
    assert not S.is_trivial


def test_apery_table_mcnugget():
    # least element in each class mod 6: directly checkable by hand
    assert NumericalSemigroup([6, 9, 20]).apery() == (0, 49, 20, 9, 40, 29)


def test_frobenius_golden_values():
    cases = {
        (2, 3): 1,
        (6, 9, 20): 43,
        (6, 9, 26): 55,
        (6, 10, 15): 29,
        (20, 28, 42, 73): 207,
        (24, 36, 54, 80, 81): 307,
    }
    for gens, frob in cases.items():
        assert NumericalSemigroup(gens).frobenius() == frob
        assert oracles.frobenius(list(gens)) == frob


def test_membership_around_frobenius():
    S = NumericalSemigroup([6, 9, 20])
    assert not S.contains(43)
    assert S.contains(44)
    assert all(S.contains(n) for n in range(44, 200))
    assert not S.contains(-6)
    assert 60 in S and 43 not in S
    with pytest.raises(CapExceeded):
        S.contains(MAX_ELEMENT + 1)


def test_membership_matches_sieve_on_random_semigroups():
    rng = random.Random(411)
    for _ in range(25):
        gens = oracles.random_semigroup_gens(rng)
        S = NumericalSemigroup(gens)
        ok = oracles.sieve(list(gens), 300)
        assert [n for n in range(301) if S.contains(n)] == [
            n for n in range(301) if ok[n]
        ]
        assert S.elements_upto(300) == [n for n in range(301) if ok[n]]


def test_min_delta():
    assert NumericalSemigroup([6, 9, 20]).min_delta() == 1
    assert NumericalSemigroup([15, 21, 35]).min_delta() == 2
    assert NumericalSemigroup([20, 28, 42, 73]).min_delta() == 1
    assert NumericalSemigroup([4, 6, 9]).min_delta() == 1
    with pytest.raises(WrongEmbeddingDimension):
        NumericalSemigroup([1]).min_delta()


def test_period_constants():
    assert NumericalSemigroup([6, 9, 20]).period_constants() == (60, 7)
    assert NumericalSemigroup([2, 3]).period_constants() == (6, 1)
    assert NumericalSemigroup([20, 28, 42, 73]).period_constants() == (1460, 53)
    assert NumericalSemigroup([15, 21, 35]).period_constants() == (105, 2)
