import math

import pytest
from hypothesis import given, settings, strategies as st

from bruteforce import BFSemigroup, bf_pseudo_frobenius, count_by_genus
from invariants import check_semigroup
from numdup.errors import BudgetExceeded, EmptyGenerators, GcdNotOne, NotMember, Overflow
from numdup.semigroup import NumericalSemigroup, enumerate_by_genus, from_generators, parse_generators

gen_lists = st.lists(st.integers(1, 17), min_size=1, max_size=4).filter(lambda g: math.gcd(*g) == 1)


def test_worked_example_semigroup():
    s = from_generators([4, 5, 11])
    assert s.gaps == (1, 2, 3, 6, 7)
    assert s.frobenius == 7
    assert s.min_gens == (4, 5, 11)
    assert s.genus == 5


def test_naturals():
    n = from_generators([1])
    assert n.gaps == () and n.frobenius == -1
    assert n.type() == 1 and n.pseudo_frobenius() == ()
    assert n.is_symmetric() and n.is_almost_symmetric()
    assert n.m_minus_m() == n
    assert n.apery(1) == (0,)


def test_redundant_generator_dropped():
    assert from_generators([4, 5, 6, 7, 10]).min_gens == (4, 5, 6, 7)


@pytest.mark.parametrize("z, expected", [(7, False), (0, True), (13, True), (-1, False), (6, False)])
def test_contains(z, expected):
    assert from_generators([4, 5, 11]).contains(z) is expected


@pytest.mark.parametrize("gens, n, ap", [
    ([4, 5, 11], 4, (0, 5, 10, 11)),
    ([3, 5, 7], 3, (0, 5, 7)),
    ([4, 5, 11], 5, (0, 4, 8, 11, 12)),
])
def test_apery(gens, n, ap):
    assert from_generators(gens).apery(n) == ap


def test_apery_needs_member():
    with pytest.raises(NotMember):
        from_generators([4, 5, 11]).apery(6)


@pytest.mark.parametrize("gens, pf", [([4, 5, 11], (6, 7)), ([3, 5, 7], (2, 4)), ([4, 6, 9], (11,))])
def test_pseudo_frobenius(gens, pf):
    s = from_generators(gens)
    assert s.pseudo_frobenius() == pf
    assert s.type() == len(pf)


def test_symmetry_classes():
    assert from_generators([4, 6, 9]).is_symmetric()
    assert not from_generators([4, 5, 11]).is_symmetric()
    assert from_generators([3, 5, 7]).is_almost_symmetric()
    assert not from_generators([4, 5, 11]).is_almost_symmetric()
    assert from_generators([4, 6, 9]).is_almost_symmetric()


def test_m_minus_m():
    assert from_generators([4, 5, 11]).m_minus_m() == from_generators([4, 5, 6, 7])
    assert from_generators([3, 5, 7]).m_minus_m() == from_generators([2, 3])


def test_errors():
    with pytest.raises(EmptyGenerators):
        from_generators([])
    with pytest.raises(GcdNotOne):
        from_generators([4, 6])
    with pytest.raises(Overflow):
        from_generators([2, 2**62 + 1])
    with pytest.raises(ValueError):
        from_generators([0, 1])


def test_parse_generators():
    assert parse_generators("4,5,11") == [4, 5, 11]
    assert parse_generators(" 4, 5 ,11 ") == [4, 5, 11]
    with pytest.raises(EmptyGenerators):
        parse_generators(" ")


def test_from_gaps_round_trip():
    s = from_generators([4, 5, 11])
    assert NumericalSemigroup.from_gaps(s.gaps) == s
    with pytest.raises(ValueError):
        NumericalSemigroup.from_gaps([1, 4])  # 2 + 2 = 4


def test_genus_counts_match_brute_force():
    expected = count_by_genus(8)
    assert expected == [1, 1, 2, 4, 7, 12, 23, 39, 67]
    found = [0] * 9
    seen = set()
    for s in enumerate_by_genus(8):
        found[s.genus] += 1
        assert s not in seen
        seen.add(s)
    assert found == expected
    assert sum(found) == 156


def test_genus_order_and_membership():
    order = list(enumerate_by_genus(5))
    assert order[0] == from_generators([1])
    assert [s.genus for s in order] == sorted(s.genus for s in order)
    assert from_generators([4, 5, 11]) in order
    assert list(enumerate_by_genus(0)) == [from_generators([1])]


def test_genus_budget():
    with pytest.raises(BudgetExceeded):
        list(enumerate_by_genus(21))


@settings(max_examples=150, deadline=None)
@given(gen_lists)
def test_matches_brute_force(gens):
    s = from_generators(gens)
    bf = BFSemigroup(gens)
    assert s.frobenius == bf.frobenius
    assert list(s.gaps) == bf.gaps
    assert list(s.min_gens) == bf.minimal_gens()
    assert list(s.pseudo_frobenius()) == bf_pseudo_frobenius(bf)
    for z in range(-3, bf.limit + 3):
        assert s.contains(z) == (z in bf)


@settings(max_examples=100, deadline=None)
@given(gen_lists)
def test_invariants_random(gens):
    check_semigroup(from_generators(gens))


def test_invariants_exhaustive(corpus6):
    assert sum(check_semigroup(s) for s in corpus6) > 1000


def test_nari_almost_symmetric_criterion(corpus8):
    # almost symmetric iff 2 * genus = F + type
    for s in corpus8:
        assert s.is_almost_symmetric() == (2 * s.genus == s.frobenius + s.type())
