from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from chordal.gauss import (GaussCodeError, crossing_change, from_json, mirror, parse_gauss_code,
                           relabel, reverse, rotate, serialize, to_json, writhe)

from conftest import diagrams, knots

VT = "O1+ O2+ U1+ U2+"


def test_parse_basic():
    d = parse_gauss_code(VT)
    assert d.num_chords == 2 and d.is_knot and writhe(d) == 2
    assert d.chords[1].over == (0, 0) and d.chords[1].under == (0, 2)


def test_separators_and_unicode_minus():
    assert parse_gauss_code("O1-,U1-") == parse_gauss_code("O1− U1−")


def test_empty_code_is_unknot():
    d = parse_gauss_code("")
    assert d.num_chords == 0 and d.num_components == 1
    assert serialize(d) == ""


def test_links_and_bars():
    d = parse_gauss_code("O1+ B U2- / U1+ O2-")
    assert d.num_components == 2 and d.num_bars == 1


@pytest.mark.parametrize("code, msg", [
    ("O1+ O1+", "two Over"),
    ("O1+", "occurs 1"),
    ("O1+ U1-", "sign mismatch"),
    ("O1+ X2", "syntax"),
    ("O1+U1+", "syntax"),
])
def test_validation_errors(code, msg):
    with pytest.raises(GaussCodeError, match=msg):
        parse_gauss_code(code)


def test_mirror_and_crossing_change():
    d = parse_gauss_code(VT)
    assert serialize(mirror(d)) == "O1- O2- U1- U2-"
    assert serialize(crossing_change(d, 1)) == "O1+ O2- U1+ U2-"
    assert writhe(crossing_change(d, 1)) == 0


@given(knots)
def test_serialize_roundtrip(d):
    assert parse_gauss_code(serialize(d)) == d


@given(diagrams(components=2, max_bars=3))
def test_json_roundtrip(d):
    assert from_json(to_json(d)) == d


@given(knots, st.integers(0, 50))
def test_canonical_form_ignores_rotation_and_labels(d, k):
    if d.num_chords == 0:
        return
    shuffled = relabel(d, {lab: 100 - lab for lab in d.labels})
    assert serialize(rotate(shuffled, 0, k)) == serialize(d)


@given(knots)
def test_involutions(d):
    assert mirror(mirror(d)) == d
    assert reverse(reverse(d)) == d
    for lab in d.labels:
        assert crossing_change(crossing_change(d, lab), lab) == d
