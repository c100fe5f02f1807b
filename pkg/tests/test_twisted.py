from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from chordal.catalog import TWISTED_THREE_BARS
from chordal.gauss import parse_gauss_code, rotate
from chordal.index import affine_index_polynomial
from chordal.laurent import LaurentPoly
from chordal.moves import random_walk
from chordal.twisted import (S_invariant, T_e, T_o, TwistedBiquandle, affine_twisted, chord_bar_parity,
                             check_twisted_biquandle, coloring_from_formula, colorings_mod,
                             count_twisted_colorings, crossing_indices_for, edge_stats,
                             integer_coloring_exists, linear_coloring, unique_coloring)

from conftest import diagrams, twisted_knots

odd_knots = twisted_knots.filter(lambda d: d.num_bars % 2 == 1)
even_knots = twisted_knots.filter(lambda d: d.num_bars % 2 == 0)


def test_three_bar_example():
    d = parse_gauss_code(TWISTED_THREE_BARS)
    assert T_o(d) == LaurentPoly.from_powers({2: 2, -4: 1, 0: -3})
    assert str(T_o(d)) == "2*t^2 - 3 + t^-4"
    assert sorted(crossing_indices_for(d, unique_coloring(d)).values()) == [-4, 2, 2]


def test_two_bars_around_a_kink():
    d = parse_gauss_code("B O1+ B U1+")
    assert S_invariant(d) == 2
    te = T_e(d)
    assert (te.s0, te.s1, te.t_poly(), te.const) == (1, 0, {0: -1}, -1)


def test_parity_guards():
    with pytest.raises(ValueError):
        T_o("B O1+ B U1+")
    with pytest.raises(ValueError):
        T_e("B O1+ U1+")
    with pytest.raises(ValueError):
        S_invariant("B O1+ U1+")


@given(twisted_knots)
def test_edge_statistics_sum_to_zero(d):
    assert sum(edge_stats(d).stats) == 0
    assert len(edge_stats(d).stats) == max(d.num_bars, 1)


@given(odd_knots)
def test_odd_bars_unique_coloring(d):
    assert linear_coloring(d).closure[0] == -1
    assert unique_coloring(d) == coloring_from_formula(d)


@given(even_knots, st.integers(0, 50))
def test_S_even_and_basepoint_free(d, k):
    S = S_invariant(d)
    assert S % 2 == 0
    n = len(d.components[0])
    if n:
        assert S_invariant(rotate(d, 0, k % n)) == S


@given(even_knots)
def test_integer_coloring_iff_S_zero(d):
    S = S_invariant(d)
    assert integer_coloring_exists(d) == (S == 0)
    if S:
        assert len(colorings_mod(d, S)) == S


@given(even_knots)
def test_index_classes(d):
    S = S_invariant(d)
    cols = colorings_mod(d, S) if S else [linear_coloring(d).at(k) for k in range(-3, 4)]
    parity = chord_bar_parity(d)
    seen = {lab: set() for lab in parity}
    for c in cols:
        for lab, v in crossing_indices_for(d, c, S).items():
            seen[lab].add(v)
    for lab, vals in seen.items():
        if parity[lab] == 0:
            assert len(vals) == 1
        else:
            assert len({v % 2 for v in vals}) == 1
            if S:
                assert len(vals) == S // 2


@given(even_knots, st.integers(-5, 5))
def test_Te_independent_of_coloring(d, shift):
    assert T_e(d, shift) == T_e(d)


@given(diagrams(max_chords=6))
def test_bar_free_Te_is_affine_polynomial(d):
    te = T_e(d)
    assert te.modulus == 0 and te.s0 == te.s1 == 0
    assert LaurentPoly.from_powers(te.t_poly()) == affine_index_polynomial(d)


def test_affine_twisted_axioms_and_corruption():
    for n in range(2, 9):
        assert check_twisted_biquandle(affine_twisted(n)) == []
    rng = random.Random(5)
    for _ in range(30):
        TB = affine_twisted(rng.randrange(3, 9))
        f = list(TB.f)
        a, b = rng.sample(range(TB.size), 2)
        f[a] = f[b]
        assert any(v[0] in ("involution", "bar-star", "bar-circ") for v in
                   check_twisted_biquandle(TwistedBiquandle(TB.biquandle, tuple(f))))
    TB = affine_twisted(4)
    assert TwistedBiquandle.from_json(TB.to_json()) == TB


@given(diagrams(max_chords=5, max_bars=4))
def test_affine_twisted_count_matches_closed_form(d):
    for n in (2, 3, 4):
        assert count_twisted_colorings(d, affine_twisted(n)) == len(colorings_mod(d, n))


@given(diagrams(max_chords=5, max_bars=5, triangle=True), st.integers(0, 2 ** 16))
def test_twisted_invariants_survive_walks(d, seed):
    e = random_walk(d, 30, seed, cap=10, twisted=True)
    assert e.num_bars % 2 == d.num_bars % 2
    if d.num_bars % 2:
        assert T_o(e) == T_o(d)
    else:
        assert S_invariant(e) == S_invariant(d)
        assert T_e(e) == T_e(d)
    for n in (3, 4):
        assert count_twisted_colorings(e, affine_twisted(n)) == count_twisted_colorings(d, affine_twisted(n))
