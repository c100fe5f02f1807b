from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from chordal.finite_type import (SingularSelection, a_tuple, a_tuple_bruteforce, parallel_witness,
                                 vassiliev_sum)
from chordal.generate import random_diagram
from chordal.index import affine_index_polynomial, chord_indices
from chordal.laurent import LaurentPoly

from conftest import knots

TUPLES = [(1,), (-1,), (2,), (1, -1), (2, 1), (3, -1), (2, 1, -1), (1, -1, -2)]


@given(knots, st.sampled_from(TUPLES))
def test_product_formula_matches_enumeration(d, xs):
    assert a_tuple(d, xs) == a_tuple_bruteforce(d, xs)


@pytest.mark.parametrize("xs", [(0,), (1, 2), (1, 1)])
def test_tuple_validation(xs):
    with pytest.raises(ValueError):
        a_tuple("O1+ U1+", xs)


def test_virtual_trefoil_values():
    vt = "O1+ O2+ U1+ U2+"
    assert a_tuple(vt, (1,)) == 1 and a_tuple(vt, (-1,)) == 1 and a_tuple(vt, (1, -1)) == 1


def _selection(rng, k):
    d = random_diagram(rng, rng.randint(k, 8))
    return SingularSelection(d, tuple(rng.sample(d.labels, k)))


def test_affine_polynomial_has_degree_one():
    rng = random.Random(11)
    for _ in range(200):
        assert vassiliev_sum(affine_index_polynomial, _selection(rng, 2)).is_zero()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_tuple_invariants_have_degree_at_most_n(n):
    rng = random.Random(n)
    for _ in range(150):
        s = _selection(rng, n + 1)
        for xs in TUPLES:
            if len(xs) == n:
                assert vassiliev_sum(lambda e: a_tuple(e, xs), s) == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_parallel_witness(n):
    d, c = parallel_witness(n)
    ind = chord_indices(d)
    assert ind[c] == n and all(v == -1 for lab, v in ind.items() if lab != c)
    s = SingularSelection(d, (c,))
    got = vassiliev_sum(affine_index_polynomial, s)
    # difference of the two resolutions: a crossing change negates the transversal's index
    assert got == LaurentPoly.from_powers({n: 1, -n: 1, 0: -2})
    assert vassiliev_sum(lambda e: a_tuple(e, (n,)), s) == 1
