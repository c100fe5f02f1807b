from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, strategies as st

from chordal.abelian import FgAbelianGroup, GroupRingElement
from chordal.catalog import (CLASSICAL_TREFOIL, VIRTUAL_TREFOIL, VIRTUALIZED_TREFOIL, dihedral3,
                             indexed_dihedral3, parity_cocycle, parity_quandle, periodic_families)
from chordal.index import chord_indices, writhe_polynomial
from chordal.moves import random_walk
from chordal.quandle import (CocycleFamily, IndexedQuandle, abelian_extension, all_indexed_quandles,
                             check_cocycle, check_indexed_quandle, cocycle_invariant, count_colorings,
                             dihedral, enumerate_colorings, quandle_arcs, writhe_cocycle_invariant)

from conftest import diagrams, knots


def brute_force_count(d, Q: IndexedQuandle) -> int:
    n, xs = quandle_arcs(d)
    total = 0
    for col in itertools.product(range(Q.size), repeat=n):
        ok = True
        for x in xs:
            src, dst = (x.under_in, x.under_out) if x.sign > 0 else (x.under_out, x.under_in)
            if Q.op(x.index, col[src], col[x.over]) != col[dst]:
                ok = False
                break
        total += ok
    return total


def test_examples_pass_axioms():
    for Q in (dihedral3(), indexed_dihedral3(), parity_quandle(), *periodic_families().values()):
        assert check_indexed_quandle(Q) == []
    assert check_cocycle(parity_quandle(), parity_cocycle()) == []


def test_coloring_counts_of_the_trefoils():
    assert count_colorings(CLASSICAL_TREFOIL, dihedral3()) == 9
    assert count_colorings(VIRTUALIZED_TREFOIL, indexed_dihedral3()) == 0
    assert sorted(chord_indices(VIRTUALIZED_TREFOIL).values()) == [-2, 0, 2]


def test_cocycle_invariant_examples():
    Q, phi = parity_quandle(), parity_cocycle()
    assert cocycle_invariant(VIRTUAL_TREFOIL, Q, phi) == GroupRingElement({(1,): 2})
    assert cocycle_invariant(VIRTUALIZED_TREFOIL, Q, phi) == GroupRingElement({(0,): 2})


def test_invalid_cocycle_rejected():
    bad = CocycleFamily.from_function(FgAbelianGroup((2,)), 2, 1, lambda i, a, b: (1,))
    assert ("normalised", 0) in check_cocycle(parity_quandle(), bad)
    with pytest.raises(ValueError):
        cocycle_invariant(VIRTUAL_TREFOIL, parity_quandle(), bad)


@given(diagrams(max_chords=5))
def test_count_matches_brute_force(d):
    for Q in (indexed_dihedral3(), parity_quandle(), periodic_families()["alexander"]):
        assert count_colorings(d, Q) == brute_force_count(d, Q) == len(enumerate_colorings(d, Q))


@given(knots)
def test_trivial_cocycle_counts_colorings(d):
    Q = indexed_dihedral3()
    psi = CocycleFamily.trivial(FgAbelianGroup((3,)), 3, 3)
    assert cocycle_invariant(d, Q, psi) == GroupRingElement({(0,): count_colorings(d, Q)})
    assert count_colorings(d, IndexedQuandle.constant([[0]])) == 1


@given(knots)
def test_zero_index_diagrams_see_only_the_base_quandle(d):
    if any(chord_indices(d).values()):
        return
    for Q in periodic_families().values():
        assert count_colorings(d, Q) == count_colorings(d, Q.restrict())


@given(knots)
def test_writhe_as_cocycle_invariant(d):
    assert writhe_cocycle_invariant(d) == writhe_polynomial(d)


@given(diagrams(max_chords=5, triangle=True), st.integers(0, 2 ** 16))
def test_counts_survive_move_walks(d, seed):
    e = random_walk(d, 20, seed, cap=10)
    for Q in (indexed_dihedral3(), *periodic_families().values()):
        assert count_colorings(d, Q) == count_colorings(e, Q)
    assert cocycle_invariant(d, parity_quandle(), parity_cocycle()) == \
        cocycle_invariant(e, parity_quandle(), parity_cocycle())


def test_enumeration_of_small_indexed_quandles():
    assert [len(all_indexed_quandles(q, m)) for q, m in ((2, 1), (2, 2), (3, 1))] == [1, 2, 5]


def extension_report(Q: IndexedQuandle, psi: CocycleFamily):
    """Project extension axiom violations down to cocycle instances."""
    E, _ = abelian_extension(Q, psi)
    q = Q.size
    got = set()
    for v in check_indexed_quandle(E):
        if v[0] == "idempotent":
            got.add(("normalised", v[1] % q))
        elif v[0] == "distributive":
            _, i, j, a, b, c = v
            got.add(("cocycle", i, j, a % q, b % q, c % q))
        else:
            got.add(v)
    return got


def test_extension_of_the_parity_data():
    E, elems = abelian_extension(parity_quandle(), parity_cocycle())
    assert E.size == 4 and len(elems) == 2 and check_indexed_quandle(E) == []


@pytest.mark.parametrize("q,m,n", [(2, 2, 2), (2, 1, 3), (3, 1, 2)])
def test_extension_iff_cocycle_exhaustive(q, m, n):
    G = FgAbelianGroup((n,))
    for Q in all_indexed_quandles(q, m):
        for vals in itertools.product(range(n), repeat=m * q * q):
            psi = CocycleFamily.from_function(G, q, m, lambda i, a, b: (vals[(i * q + a) * q + b],))
            assert extension_report(Q, psi) == set(check_cocycle(Q, psi))


def test_extension_iff_cocycle_random():
    rng = random.Random(7)
    Qs = all_indexed_quandles(3, 2)
    for _ in range(60):
        Q = rng.choice(Qs)
        G = FgAbelianGroup((rng.choice((2, 3)),))
        psi = CocycleFamily.from_function(G, 3, 2, lambda i, a, b: (rng.randrange(G.torsion[0]),))
        assert extension_report(Q, psi) == set(check_cocycle(Q, psi))


def test_corrupted_tables_rejected():
    rng = random.Random(3)
    base = [dihedral(5), indexed_dihedral3(), parity_quandle(), *periodic_families().values()]
    for _ in range(100):
        Q = rng.choice(base)
        tabs = [list(map(list, t)) for t in Q.tables]
        if rng.random() < 0.5:
            a = rng.randrange(Q.size)
            tabs[0][a][a] = (a + 1 + rng.randrange(Q.size - 1)) % Q.size
            kind = "idempotent"
        else:
            i, b = rng.randrange(Q.period), rng.randrange(Q.size)
            a1, a2 = rng.sample(range(Q.size), 2)
            tabs[i][a1][b] = tabs[i][a2][b]
            kind = "bijective"
        bad = check_indexed_quandle(IndexedQuandle(Q.size, Q.period, tabs))
        assert any(v[0] == kind for v in bad)


def test_json_round_trip():
    Q = indexed_dihedral3()
    assert IndexedQuandle.from_json(Q.to_json()) == Q
    psi = parity_cocycle()
    assert CocycleFamily.from_json(psi.to_json()) == psi
