import math
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from bruteforce import BFIdeal, BFSemigroup, bf_canonical, bf_colon, bf_sum, members_in
from invariants import check_ideal_pair, check_ideal_single, check_ideal_triple
from numdup.errors import AmbientMismatch, EmptyGenerators, NotAnIdeal, NotNested
from numdup.ideals import (
    ambient_ideal,
    canonical_ideal,
    enumerate_normalized_ideals,
    ideal_from_generators,
    ideal_from_members,
    lambda_between,
    maximal_ideal,
    semigroup_as_ideal,
)
from numdup.semigroup import from_generators

S = from_generators([4, 5, 11])


def I(*gens, s=S):
    return ideal_from_generators(s, gens)


def test_generators_reduced():
    assert I(5, 8).min_gens == (5, 8)
    assert I(5, 8, 9).min_gens == (5, 8)
    assert I(0) == ambient_ideal(S)
    with pytest.raises(EmptyGenerators):
        ideal_from_generators(S, [])


def test_membership_and_max_gap():
    e = I(5, 8)
    assert not e.contains(11)
    assert e.max_gap() == 11
    assert e.min() == 5
    assert ambient_ideal(S).max_gap() == S.frobenius
    assert not I(4, 5, 6).contains(7)


def test_add():
    e = I(5, 8)
    assert e.add(ambient_ideal(S)) == e
    # 12 = 8 + 4 is not in 6 + S or 9 + S, so it stays a generator
    assert e.add(I(1, 4)) == I(6, 9, 12)
    assert I(3).add(I(7)) == I(10)


def test_colon():
    e = I(5, 8)
    assert e.colon(ambient_ideal(S)) == e
    a = semigroup_as_ideal(S, from_generators([4, 5, 7]))
    assert a == I(0, 4, 5, 7)
    assert canonical_ideal(S).colon(a) == I(1, 4)
    c = I(4, 5, 6).colon(maximal_ideal(S))
    assert c == I(0, 1, 7)
    assert lambda_between(c, I(4, 5, 6)) == 3


def test_canonical_ideal():
    assert canonical_ideal(S) == I(0, 1)
    assert canonical_ideal(from_generators([4, 6, 9])) == ambient_ideal(from_generators([4, 6, 9]))
    s = from_generators([3, 5, 7])
    assert canonical_ideal(s) == I(0, 2, s=s)
    assert canonical_ideal(from_generators([1])) == ambient_ideal(from_generators([1]))


def test_dual():
    k = canonical_ideal(S)
    assert ambient_ideal(S).dual() == k
    assert k.dual() == ambient_ideal(S)
    # A - 4 with A = <4,5,7>; as an S-ideal A is generated by 0 and 7
    assert I(5, 8).dual() == I(-4, 3)
    assert I(5, 8).dual() == semigroup_as_ideal(S, from_generators([4, 5, 7])).translate(-4)
    assert I(4, 5, 6).dual() == semigroup_as_ideal(S, S.m_minus_m())


def test_translation_helpers():
    assert I(5, 8).normalize() == I(0, 3)
    assert I(5, 8).is_translate_of(I(8, 11))
    assert not I(5, 8).is_translate_of(I(4, 5))
    assert not canonical_ideal(S).is_principal()
    assert I(7).is_principal()


def test_lambda_between():
    a = semigroup_as_ideal(S, from_generators([4, 5, 7]))
    assert lambda_between(a, ambient_ideal(S)) == 1
    assert lambda_between(I(5, 8), I(5, 8)) == 0
    assert lambda_between(canonical_ideal(S), I(4, 5, 6)) == 2
    with pytest.raises(NotNested):
        lambda_between(ambient_ideal(S), a)


def test_ambient_mismatch():
    other = from_generators([3, 5, 7])
    with pytest.raises(AmbientMismatch):
        I(0).add(ambient_ideal(other))
    with pytest.raises(AmbientMismatch):
        I(0).colon(ambient_ideal(other))


def test_ideal_from_members_checks_stability():
    with pytest.raises(NotAnIdeal):
        ideal_from_members(S, 0, 8, lambda z: z in (0, 7))  # 0 + 4 missing
    assert ideal_from_members(S, 0, 8, lambda z: S.contains(z)) == ambient_ideal(S)


def test_enumerate_small():
    s = from_generators([3, 4, 5])
    found = [e.min_gens for e in enumerate_normalized_ideals(s)]
    assert len(found) == 4
    assert set(found) == {(0,), (0, 1), (0, 2), (0, 1, 2)}
    assert [e for e in enumerate_normalized_ideals(from_generators([1]))] == [ambient_ideal(from_generators([1]))]
    assert I(0, 3) in list(enumerate_normalized_ideals(S))


def _bf_normalized_ideals(s):
    gaps = s.gaps
    out = set()
    for k in range(len(gaps) + 1):
        for sub in combinations(gaps, k):
            members = set(s.small_elements()) | set(sub)
            if all(x + y in members or x + y > s.frobenius for x in sub for y in s.small_elements() if y):
                out.add(frozenset(members))
    return out


def test_enumerate_matches_brute_force(corpus6):
    for s in corpus6:
        found = list(enumerate_normalized_ideals(s))
        assert len(found) == len(set(found)) <= 2 ** s.genus
        views = {frozenset(x for x in range(s.frobenius + 2) if e.contains(x)) for e in found}
        assert views == _bf_normalized_ideals(s)
        for e in found:
            assert e.min() == 0 and ambient_ideal(s).issubset(e)


def test_enumeration_is_lexicographic():
    found = list(enumerate_normalized_ideals(S))
    keys = [tuple(g for g in S.gaps if e.contains(g)) for e in found]
    assert keys == sorted(keys)


semigroups = st.lists(st.integers(2, 11), min_size=2, max_size=3).filter(lambda g: math.gcd(*g) == 1)
ideal_gens = st.lists(st.integers(-6, 18), min_size=1, max_size=4)


@settings(max_examples=120, deadline=None)
@given(semigroups, ideal_gens, ideal_gens)
def test_operations_match_brute_force(sg, ga, gb):
    s = from_generators(sg)
    bs = BFSemigroup(sg)
    a, b = ideal_from_generators(s, ga), ideal_from_generators(s, gb)
    ba, bb = BFIdeal(bs, ga), BFIdeal(bs, gb)
    lo, hi = -30, 80
    assert members_in(a, lo, hi) == members_in(ba, lo, hi)
    assert members_in(a.add(b), lo, hi) == members_in(bf_sum(ba, bb), lo, hi)
    assert members_in(a.colon(b), lo, hi) == members_in(bf_colon(ba, bb), lo, hi)
    assert members_in(a.dual(), lo, hi) == members_in(bf_colon(bf_canonical(bs), ba), lo, hi)
    assert members_in(a.intersect(b), lo, hi) == members_in(ba, lo, hi) & members_in(bb, lo, hi)


@settings(max_examples=120, deadline=None)
@given(semigroups, ideal_gens, ideal_gens, ideal_gens)
def test_invariants_random(sg, ga, gb, gc):
    s = from_generators(sg)
    a, b, c = (ideal_from_generators(s, g) for g in (ga, gb, gc))
    check_ideal_single(s, a)
    check_ideal_pair(s, a, b)
    check_ideal_triple(s, a, b, c)
