from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tatwist import ChordDiagram, TatTwist, elementary, new_twist, parse_twist
from tatwist.errors import CapExceeded, EmptyDiagram, NotASymmetry, ParseError
from tatwist.factory import random_symmetric, torus_knot
from tatwist.twist import (
    all_diagrams,
    brute_force_order_check,
    compose_permutation_power,
    edge_orbits,
    enumerate_elementary,
    enumerate_symmetric_diagrams,
    is_elementary,
    predicted_maximizer,
    order,
    permutation_cycle_type,
    power,
    verify_order_bounds,
    vertex_permutation,
)

from oracles import all_pairings, rotation_class

E33 = elementary(3, 3)
E22 = elementary(2, 2)


def test_new_twist():
    assert new_twist(E33, 1).walk_length == 1
    assert new_twist(elementary(12, 7), 2).walk_length == 2
    with pytest.raises(NotASymmetry) as info:
        new_twist(elementary(12, 7), 1)
    assert info.value.minimal_walk_length == 2
    d = parse_twist("0-1,2-4,3-5;l=6").diagram
    assert new_twist(d, 0).walk_length == 0
    with pytest.raises(EmptyDiagram):
        new_twist(ChordDiagram.empty(), 0)


def test_twist_text():
    t = parse_twist("0-3,1-4,2-5;l=1")
    assert t == TatTwist(E33, 1)
    assert t.serialize() == "0-3,1-4,2-5;l=1"
    assert parse_twist("0-2,1-3;l=-3").walk_length == -3
    with pytest.raises(ParseError):
        parse_twist("0-3,1-4,2-5")
    with pytest.raises(ParseError):
        parse_twist("0-3,1-4,2-5;l=x")


def test_order():
    assert order(TatTwist(E33, 1)) == 6
    assert order(TatTwist(elementary(12, 7), 2)) == 12
    assert order(TatTwist(E33, 6)) == 1
    assert order(TatTwist(E33, 0)) == 1
    assert order(TatTwist(E33, -1)) == 6


def test_power():
    assert power(TatTwist(E33, 1), 5) == TatTwist(E33, 5)
    assert power(TatTwist(E33, 1), 0) == TatTwist(E33, 0)
    assert power(TatTwist(E22, 1), -1) == TatTwist(E22, -1)


@given(st.integers(1, 12), st.integers(-40, 40), st.integers(-30, 30))
def test_order_of_power(n, l, k):
    t = TatTwist(elementary(n, n), l)
    o = order(t)
    assert order(power(t, k)) == o // gcd(k, o)


def test_edge_orbits_examples():
    orbits = edge_orbits(TatTwist(elementary(5, 3), 2))
    assert len(orbits) == 1 and len(orbits[0].chords) == 5 and not orbits[0].reversed
    orbits = edge_orbits(TatTwist(E33, 1))
    assert len(orbits) == 1 and len(orbits[0].chords) == 3 and orbits[0].reversed
    d = elementary(4, 3)
    assert [o.chords for o in edge_orbits(TatTwist(d, 0))] == [(0,), (1,), (2,), (3,)]


def test_vertex_permutation_examples():
    assert permutation_cycle_type(vertex_permutation(TatTwist(E33, 1))) == [2]
    assert permutation_cycle_type(vertex_permutation(TatTwist(elementary(12, 7), 2))) == [3, 4]
    d = elementary(6, 3)
    assert vertex_permutation(TatTwist(d, 0)) == (0, 1, 2)


@given(st.integers(1, 12), st.data())
def test_orbit_chords_share_length(n, data):
    a = data.draw(st.sampled_from(list(range(1, n, 2)) + [n]))
    d = elementary(n, a)
    t = TatTwist(d, d.symmetry_order() * data.draw(st.integers(1, 3)))
    chords = d.chords()
    for orb in edge_orbits(t):
        assert len({d.chord_length(chords[c][0]) for c in orb.chords}) == 1


@given(st.integers(1, 8), st.integers(0, 10**6), st.integers(-6, 6), st.data())
def test_vertex_permutation_of_power(n, seed, k, data):
    divisors = [l for l in range(1, 2 * n + 1) if (2 * n) % l == 0]
    l = data.draw(st.sampled_from(divisors))
    t = TatTwist(random_symmetric(n, l, seed), l)
    assert vertex_permutation(power(t, k)) == compose_permutation_power(vertex_permutation(t), k)


def test_torus_knot_orbits_and_vertices():
    for p in range(2, 13):
        for q in range(p + 1, 13):
            if gcd(p, q) != 1:
                continue
            d, l = torus_knot(p, q)
            t = TatTwist(d, l)
            orbits = edge_orbits(t)
            assert len(orbits) == 1 and len(orbits[0].chords) == p * q
            assert permutation_cycle_type(vertex_permutation(t)) == sorted([p, q])
            assert order(t) == p * q


def test_enumerate_elementary():
    assert set(enumerate_elementary(1)) == {(2, 2), (3, 3), (4, 3), (6, 5)}
    assert enumerate_elementary(0) == [(1, 1), (2, 1), (3, 1)]
    g4 = [(n, a) for n, a in enumerate_elementary(4) if 3 <= a <= n - 2 and n == 15]
    assert g4 == [(15, 11)]


def test_enumerate_elementary_is_complete_against_formula():
    # every (n, a) of genus g has n within the scan bound: brute over a wide range
    from oracles import gcd_vertex_formula
    for g in range(0, 6):
        listed = set(enumerate_elementary(g))
        bound = max(4 * g + 2, 3 * g + 3)
        for n in range(1, 80):
            for a in list(range(1, n, 2)) + [n]:
                if (1 + n - gcd_vertex_formula(n, a)) // 2 == g:
                    if g == 0 and a == 1:
                        continue
                    assert n <= bound and (n, a) in listed


def test_verify_order_bounds_examples():
    r5 = verify_order_bounds(5)
    assert r5.max_order == 15 and r5.maximizers == [(15, 9)] and r5.passed
    r3 = verify_order_bounds(3)
    assert r3.max_order == 12 and (12, 7) in r3.maximizers
    assert r3.same_order_diameters == [(6, 6)]
    r2 = verify_order_bounds(2)
    assert r2.diameter_orders[(5, 5)] == 10
    assert r2.maximizers == [(6, 3)] and r2.max_order == 6
    with pytest.raises(CapExceeded):
        verify_order_bounds(1)


def test_predicted_maximizer_table():
    assert predicted_maximizer(4) == (15, 11)
    assert predicted_maximizer(5) == (15, 9)
    assert predicted_maximizer(6) == (21, 13)


def test_enumerate_symmetric_small():
    assert [d.serialize() for d in enumerate_symmetric_diagrams(1)] == ["0-1"]
    assert any(d.equivalent(E22) for d in enumerate_symmetric_diagrams(2))
    with pytest.raises(CapExceeded):
        list(enumerate_symmetric_diagrams(11))


@pytest.mark.parametrize("n", range(1, 6))
def test_enumerate_symmetric_matches_brute_force(n):
    expected = set()
    for p in all_pairings(2 * n):
        if ChordDiagram(p).symmetry_order() < 2 * n:
            expected.add(rotation_class(p))
    got = [d.pairing for d in enumerate_symmetric_diagrams(n)]
    assert len(got) == len(set(got))
    assert set(got) == expected


def test_all_diagrams_count():
    assert [sum(1 for _ in all_diagrams(n)) for n in range(1, 6)] == [1, 3, 15, 105, 945]


def test_walk_length_one_or_two_means_elementary():
    for n in range(1, 9):
        for d in enumerate_symmetric_diagrams(n):
            if d.symmetry_order() > 2:
                continue
            t = TatTwist(d, d.symmetry_order())
            assert is_elementary(t)
            a = d.chord_length(0)
            assert d.equivalent(elementary(n, a))


def test_brute_force_order_bound_small():
    res = brute_force_order_check(6)
    for g, entry in res.items():
        assert entry["violations"] == []
