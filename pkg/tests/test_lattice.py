from itertools import combinations

import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import antichain, chain
from latcuts import (
    MeetClosedSet,
    enumerate_meet_closed_subsets,
    is_iota_embedded,
    meet_closure,
    meet_of_set,
    validate_complete_lattice,
)
from latcuts.errors import NotALattice, SizeOutOfRange, UnknownElement
from strategies import lattices


def test_fig1_is_a_lattice(fig1_poset):
    l = validate_complete_lattice(fig1_poset)
    assert l.meet("s", "t") == "r"
    assert l.join("q", "p") == "1"
    assert (l.bottom, l.top) == ("0", "1")


def test_fig1_tables_match_bound_scan(fig1_poset):
    l = validate_complete_lattice(fig1_poset)
    for x in l:
        for y in l:
            assert l.meet(x, y) == oracles.glb(fig1_poset, [x, y])
            assert l.join(x, y) == oracles.lub(fig1_poset, [x, y])


def test_antichain_is_not_a_lattice():
    with pytest.raises(NotALattice) as info:
        validate_complete_lattice(antichain(2))
    assert info.value.witness == ("a0", "a1")


def test_missing_join_is_reported():
    # bottom with two maximal elements: meets exist, the join of the tops does not
    from latcuts import build_poset

    p = build_poset(["0", "a", "b"], [("0", "a"), ("0", "b")])
    with pytest.raises(NotALattice, match="least upper bound"):
        validate_complete_lattice(p)


def test_chain_meet_is_min():
    l = validate_complete_lattice(chain(3))
    assert l.meet("c0", "c2") == "c0" and l.join("c0", "c2") == "c2"
    assert l.meet("c1", "c2") == "c1" and l.join("c0", "c1") == "c1"


class TestMeetOfSet:
    def test_fig1(self, fig1):
        assert meet_of_set(fig1, {"s", "t"}) == "r"

    def test_empty_is_top(self, fig1):
        assert meet_of_set(fig1, set()) == fig1.top

    def test_singleton(self, fig1):
        assert all(meet_of_set(fig1, {x}) == x for x in fig1)

    def test_unknown(self, fig1):
        with pytest.raises(UnknownElement):
            meet_of_set(fig1, {"z"})

    @given(lattices(), st.data())
    def test_is_greatest_lower_bound(self, l, data):
        s = data.draw(st.sets(st.sampled_from(l.elements)))
        m = meet_of_set(l, s)
        assert all(l.le(m, x) for x in s)
        for z in l:
            if all(l.le(z, x) for x in s):
                assert l.le(z, m)


class TestMeetClosure:
    def test_fig1(self, fig1):
        assert meet_closure(fig1, {"r", "t", "p"}).members == {"0", "p", "r", "t", "1"}

    def test_empty(self, fig1):
        assert meet_closure(fig1, set()).members == {"1"}

    def test_carrier(self, fig1):
        assert meet_closure(fig1, fig1.elements).members == set(fig1.elements)

    @given(lattices(), st.data())
    def test_matches_subset_meets(self, l, data):
        s = data.draw(st.sets(st.sampled_from(l.elements)))
        assert meet_closure(l, s).members == oracles.meet_closure(l.poset, s)

    @given(lattices(), st.data())
    def test_closure_operator(self, l, data):
        a = data.draw(st.sets(st.sampled_from(l.elements)))
        b = data.draw(st.sets(st.sampled_from(l.elements)))
        ca = meet_closure(l, a).members
        assert a <= ca
        assert meet_closure(l, ca).members == ca
        assert ca <= meet_closure(l, a | b).members
        assert is_iota_embedded(l, ca)


class TestIotaEmbedded:
    def test_example_member(self, fig1):
        assert is_iota_embedded(fig1, {"0", "q", "r", "s", "1"})

    def test_missing_meet(self, fig1):
        assert not is_iota_embedded(fig1, {"r", "t", "p"})

    def test_top_alone(self, fig1):
        assert is_iota_embedded(fig1, {"1"})

    def test_needs_top(self, fig1):
        assert not is_iota_embedded(fig1, {"0", "r"})

    @given(lattices(6), st.data())
    def test_pairwise_check_equals_all_subsets(self, l, data):
        s = data.draw(st.sets(st.sampled_from(l.elements), min_size=1))
        assert is_iota_embedded(l, s) == oracles.is_meet_closed_with_top(l.poset, s)

    def test_meet_closed_set_rejects_open_sets(self, fig1):
        with pytest.raises(ValueError):
            MeetClosedSet(fig1, frozenset({"r", "p", "1"}))


class TestEnumerateMeetClosedSubsets:
    def test_size_one(self, fig1):
        assert [m.members for m in enumerate_meet_closed_subsets(fig1, 1)] == [{"1"}]

    def test_range(self, fig1):
        with pytest.raises(SizeOutOfRange):
            enumerate_meet_closed_subsets(fig1, 0)
        with pytest.raises(SizeOutOfRange):
            enumerate_meet_closed_subsets(fig1, 8)

    @pytest.mark.parametrize("n", [1, 2, 4, 6])
    def test_chain_counts(self, n):
        from math import comb

        l = validate_complete_lattice(chain(n))
        for k in range(1, n + 1):
            assert len(enumerate_meet_closed_subsets(l, k)) == comb(n - 1, k - 1)

    @given(lattices(7), st.data())
    def test_matches_filtered_combinations(self, l, data):
        k = data.draw(st.integers(1, len(l)))
        got = [m.members for m in enumerate_meet_closed_subsets(l, k)]
        expected = [
            set(c) for c in combinations(l.elements, k) if oracles.is_meet_closed_with_top(l.poset, c)
        ]
        assert got == expected

    @given(lattices(7), st.data())
    def test_members_are_lattices(self, l, data):
        k = data.draw(st.integers(1, len(l)))
        for m in enumerate_meet_closed_subsets(l, k):
            sub = m.as_lattice()
            assert sub.top == l.top
            for x in sub:
                for y in sub:
                    assert sub.meet(x, y) == l.meet(x, y)


@given(lattices(7))
def test_lattice_axioms(l):
    els = l.elements
    for x in els:
        assert l.meet(x, x) == x == l.join(x, x)
        assert l.le(l.bottom, x) and l.le(x, l.top)
        for y in els:
            assert l.meet(x, y) == l.meet(y, x)
            assert l.join(x, y) == l.join(y, x)
            assert l.meet(x, l.join(x, y)) == x
            assert l.join(x, l.meet(x, y)) == x
            for z in els:
                assert l.meet(l.meet(x, y), z) == l.meet(x, l.meet(y, z))
                assert l.join(l.join(x, y), z) == l.join(x, l.join(y, z))
