"""Factorizations, length/delta sets, Betti elements, minimal presentations."""
import random

import pytest

import oracles
from semigroup_ld import (
    BettiData,
    betti_elements,
    delta_of,
    delta_of_semigroup,
    factorization_graph_components,
    factorizations,
    from_generators,
    length_set,
    length_set_table,
    minimal_presentation,
)
from semigroup_ld.config import LENGTH_TABLE_CAP, SWEEP_CAP
from semigroup_ld.errors import BudgetExceeded, CapExceeded, NotAnElement

S6920 = from_generators((6, 9, 20))
S6926 = from_generators((6, 9, 26))
BIG = from_generators((20, 28, 42, 73))

# (gens -> (element, lengths, delta) per Betti element); frozen after checking
# both the component-scan implementation and a from-the-definition recount.
BETTI_GOLDEN = {
    (2, 3): [(6, (2, 3), (1,))],
    (6, 9, 20): [(18, (2, 3), (1,)), (60, (3, 7, 8, 9, 10), (1, 4))],
    (6, 10, 15): [(30, (2, 3, 5), (1, 2))],
    (6, 9, 26): [(18, (2, 3), (1,)), (78, (3, 9, 10, 11, 12, 13), (1, 6))],
    (20, 28, 42, 73): [
        (84, (2, 3), (1,)),
        (140, (4, 5, 7), (1, 2)),
        (146, (2, 4, 5), (1, 2)),
    ],
}


def test_factorizations_golden():
    assert factorizations(S6920, 60) == [
        (0, 0, 3),
        (1, 6, 0),
        (4, 4, 0),
        (7, 2, 0),
        (10, 0, 0),
    ]
    assert factorizations(S6920, 0) == [(0, 0, 0)]


def test_factorizations_non_elements_and_budget():
    assert factorizations(S6920, 43) == []
    assert factorizations(S6920, -6) == []
    with pytest.raises(BudgetExceeded):
        factorizations(S6920, 60, budget=2)


def test_factorizations_match_oracle_on_random_semigroups():
    rng = random.Random(5523)
    for _ in range(20):
        gens = oracles.random_semigroup_gens(rng)
        S = from_generators(gens)
        hi = 2 * gens[-1] + rng.randint(0, 60)
        reach = oracles.suffix_sieves(list(S.generators), hi)
        for n in rng.sample(range(hi + 1), 12):
            assert factorizations(S, n) == oracles.factorizations(
                list(S.generators), n, reach
            )


def test_length_set_goldens():
    assert length_set(S6920, 18) == (2, 3)
    assert length_set(S6926, 78) == (3, 9, 10, 11, 12, 13)
    assert length_set(BIG, 84) == (2, 3)
    assert length_set(BIG, 140) == (4, 5, 7)
    assert length_set(BIG, 146) == (2, 4, 5)
    assert length_set(BIG, 202) == (4, 6, 7, 9)
    assert length_set(S6920, 0) == (0,)


def test_length_set_errors():
    with pytest.raises(NotAnElement):
        length_set(S6920, 43)
    with pytest.raises(NotAnElement):
        length_set(S6920, -1)
    with pytest.raises(CapExceeded):
        length_set(S6920, SWEEP_CAP + 1)  # element (past frobenius), past the cap


def test_length_set_table_matches_pointwise():
    tab = length_set_table(S6920, 300)
    assert set(tab) == set(S6920.elements_upto(300))
    for n in list(tab)[::7]:
        assert tab[n] == length_set(S6920, n)
    with pytest.raises(CapExceeded):
        length_set_table(S6920, LENGTH_TABLE_CAP + 1)


def test_delta_goldens():
    assert delta_of(S6920, 60) == (1, 4)
    assert delta_of(S6926, 78) == (1, 6)
    assert delta_of(S6920, 18) == (1,)
    assert delta_of(S6920, 6) == ()


def test_graph_components_goldens():
    assert factorization_graph_components(S6920, 18) == (((0, 2, 0),), ((3, 0, 0),))
    S = from_generators((6, 10, 15))
    assert factorization_graph_components(S, 30) == (
        ((0, 0, 2),),
        ((0, 3, 0),),
        ((5, 0, 0),),
    )
    # connected example: one component holding every factorization
    comps = factorization_graph_components(S6920, 120)
    assert len(comps) == 1
    assert sum(len(c) for c in comps) == len(factorizations(S6920, 120))
    with pytest.raises(NotAnElement):
        factorization_graph_components(S6920, 43)


def test_graph_components_match_oracle():
    rng = random.Random(20901)
    for _ in range(12):
        gens = oracles.random_semigroup_gens(rng)
        S = from_generators(gens)
        hi = 3 * gens[-1]
        reach = oracles.suffix_sieves(list(S.generators), hi)
        for n in rng.sample(range(2 * gens[0], hi + 1), 8):
            facts = oracles.factorizations(list(S.generators), n, reach)
            if not facts:
                continue
            got = factorization_graph_components(S, n)
            want = oracles.graph_components(facts)
            assert [sorted(c) for c in got] == [sorted(c) for c in want]


def test_betti_elements_goldens():
    for gens, want in BETTI_GOLDEN.items():
        got = betti_elements(from_generators(gens))
        assert [(b.element, b.lengths, b.delta) for b in got] == want
        assert all(isinstance(b, BettiData) and len(b.components) >= 2 for b in got)


def test_betti_elements_match_oracle_on_randoms():
    rng = random.Random(7714)
    for _ in range(10):
        gens = oracles.random_semigroup_gens(rng)
        S = from_generators(gens)
        hi = S.frobenius() + 2 * S.generators[-1]
        assert [b.element for b in betti_elements(S)] == oracles.betti_upto(
            list(S.generators), hi
        )


def test_betti_elements_trivial_cases():
    assert betti_elements(from_generators((1,))) == []
    assert [b.element for b in betti_elements(from_generators((2, 3)))] == [6]


def test_minimal_presentation_goldens():
    assert minimal_presentation(from_generators((2, 3))) == [((3, 0), (0, 2))]
    assert minimal_presentation(from_generators((6, 10, 15))) == [
        ((0, 3, 0), (0, 0, 2)),
        ((5, 0, 0), (0, 0, 2)),
    ]


def test_minimal_presentation_relations_are_valid():
    rng = random.Random(3307)
    for _ in range(10):
        gens = oracles.random_semigroup_gens(rng)
        S = from_generators(gens)
        bettis = {b.element for b in betti_elements(S)}
        rels = minimal_presentation(S)
        assert len(rels) >= len(S.generators) - 1
        for a, b in rels:
            va = sum(c * g for c, g in zip(a, S.generators))
            vb = sum(c * g for c, g in zip(b, S.generators))
            assert va == vb and va in bettis
            assert a != b


def test_delta_of_semigroup_golden():
    sd = delta_of_semigroup(S6920)
    assert sd.gaps == (1, 2, 3, 4)
    assert sd.attained_at == {1: 18, 2: 90, 3: 72, 4: 60}
    assert sd.certificate is not None


def test_delta_of_semigroup_witnesses_are_minimal():
    sd = delta_of_semigroup(BIG)
    for gap, first in sd.attained_at.items():
        assert gap in delta_of(BIG, first)
        for m in range(2 * BIG.generators[0], first):
            if BIG.contains(m):
                assert gap not in delta_of(BIG, m)
