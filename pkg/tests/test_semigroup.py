from math import gcd
from functools import reduce

import pytest
from hypothesis import given, settings, strategies as st

from oracles import frobenius_of, semigroup_set

from kunzlattice import (
    KunzLatticeError,
    NotCoFinite,
    NotMinimalGenerator,
    enumerate_by_genus,
    from_generators,
    iter_by_genus,
    natural_numbers,
    ordinary,
)
from kunzlattice.semigroup import contains, leq_S, remove_generator

generator_lists = (
    st.lists(st.integers(2, 23), min_size=1, max_size=5)
    .filter(lambda g: reduce(gcd, g) == 1)
)


def test_4_9_invariants():
    S = from_generators([4, 9])
    assert S.multiplicity == 4
    assert S.frobenius == 23
    assert S.conductor == 24
    assert S.genus == 12
    assert S.kunz == (2, 4, 6)
    assert S.apery == (0, 9, 18, 27)
    assert str(S) == "<4,9>"


def test_minimal_generators_are_reduced():
    assert from_generators([3, 6, 7, 9, 10]).minimal_generators == (3, 7)
    assert from_generators([5, 6, 7, 8, 9, 10, 11]).minimal_generators == (5, 6, 7, 8, 9)


def test_ordinary():
    H4 = ordinary(4)
    assert H4.gaps == (1, 2, 3)
    assert H4.kunz == (1, 1, 1)
    assert H4.minimal_generators == (4, 5, 6, 7)
    assert H4.is_ordinary
    assert ordinary(1) == natural_numbers()
    assert natural_numbers().frobenius == -1
    assert natural_numbers().kunz == ()


def test_membership_and_order():
    S = from_generators([4, 9])
    assert 23 not in S and not contains(S, 23)
    assert 13 in S and 10**9 in S and -1 not in S
    assert leq_S(S, 0, 13)
    assert not leq_S(S, 1, 2)
    assert S.leq(5, 18)


def test_errors():
    with pytest.raises(NotCoFinite):
        from_generators([4, 6])
    with pytest.raises(ValueError):
        from_generators([])
    with pytest.raises(ValueError):
        from_generators([0, -3])
    assert issubclass(NotCoFinite, KunzLatticeError)
    with pytest.raises(NotMinimalGenerator):
        from_generators([4, 9]).remove_generator(6)
    with pytest.raises(NotMinimalGenerator):
        from_generators([4, 9]).remove_generator(13)


def test_remove_generator():
    H4 = ordinary(4)
    T = remove_generator(H4, 5)
    assert T.minimal_generators == (4, 6, 7, 9)
    assert T.kunz == (2, 1, 1)
    assert from_generators([3, 4, 5]).remove_generator(3) == ordinary(4)


def test_genus_counts():
    counts = [0] * 9
    for S in iter_by_genus(8):
        counts[S.genus] += 1
    assert counts == [1, 1, 2, 4, 7, 12, 23, 39, 67]
    assert [str(S) for S in enumerate_by_genus(2)] == ["<1>", "<2,3>", "<3,4,5>", "<2,5>"]


def test_tree_has_no_duplicates():
    seen = [S.minimal_generators for S in iter_by_genus(8)]
    assert len(seen) == len(set(seen))


@settings(max_examples=150, deadline=None)
@given(generator_lists)
def test_against_sieve(gens):
    S = from_generators(gens)
    assert S.frobenius == frobenius_of(gens)
    bound = S.conductor + max(gens) + 1
    assert {n for n in range(bound) if n in S} == set(semigroup_set(gens, bound))
    assert S.genus == bound - len(semigroup_set(gens, bound))
    m = S.multiplicity
    assert m == min(gens)
    for i, w in enumerate(S.apery):
        assert w in S and w % m == i and (w - m) not in S
    assert all(S.kunz[i - 1] == (S.apery[i] - i) // m for i in range(1, m))
    # the minimal generators regenerate S and none is redundant
    assert from_generators(S.minimal_generators) == S
    for g in S.minimal_generators:
        rest = [h for h in S.minimal_generators if h != g]
        assert g not in semigroup_set(rest, g + 1)


@settings(max_examples=60, deadline=None)
@given(generator_lists, st.data())
def test_remove_generator_matches_sieve(gens, data):
    S = from_generators(gens)
    a = data.draw(st.sampled_from(S.minimal_generators))
    if S.multiplicity == 1:
        return
    T = S.remove_generator(a)
    bound = S.conductor + a + 2
    expected = set(semigroup_set(S.minimal_generators, bound)) - {a}
    assert {n for n in range(bound) if n in T} == expected
