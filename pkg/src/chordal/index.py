"""Chord index of a knot diagram and the polynomials built from it.

Two independent computations of the index are provided: a signed count of
chords crossing ``c`` and the difference of linking numbers after oriented
smoothing at ``c``.  They must agree on every chord.
"""
from __future__ import annotations

from collections import Counter

from .gauss import GaussDiagram, diagram
from .laurent import LaurentPoly


def _forward_open(n: int, start: int, stop: int) -> list[int]:
    """Offsets strictly between ``start`` and ``stop`` going forward on a circle of ``n`` tokens."""
    out = []
    k = (start + 1) % n
    while k != stop:
        out.append(k)
        k = (k + 1) % n
    return out


def chord_index_intersection(d: GaussDiagram | str, label: int) -> int:
    """r+ - r- - l+ + l- over chords intersecting ``label``.

    Orient ``c`` from its under endpoint forward to its over endpoint; a chord
    crossing ``c`` counts as right-going when its head (under endpoint) lies on
    that arc.
    """
    d = diagram(d)
    d.require_knot()
    d.require_label(label)
    c = d.chords[label]
    comp = d.components[0]
    inside = _forward_open(len(comp), c.under[1], c.over[1])
    heads, tails = set(), set()
    for k in inside:
        tok = comp[k]
        (heads if not tok.over else tails).add(tok.label)
    total = 0
    for lab in heads ^ tails:
        w = d.chords[lab].sign
        total += w if lab in heads else -w
    return total


def linking_numbers(link: GaussDiagram, first: int = 0, second: int = 1) -> tuple[int, int]:
    """(lk_O, lk_U): signed counts of crossings where ``first`` passes over / under ``second``."""
    lk_o = lk_u = 0
    for ch in link.chords.values():
        if ch.over[0] == first and ch.under[0] == second:
            lk_o += ch.sign
        elif ch.over[0] == second and ch.under[0] == first:
            lk_u += ch.sign
    return lk_o, lk_u


def smooth_at(d: GaussDiagram, label: int) -> GaussDiagram:
    """Oriented smoothing at one chord of a knot: returns the 2-component link (K1, K2).

    K1 runs from the over passage to the under passage, K2 from the under
    passage back to the over passage.
    """
    d.require_knot()
    d.require_label(label)
    c = d.chords[label]
    comp = d.components[0]
    n = len(comp)
    k1 = [comp[k] for k in _forward_open(n, c.over[1], c.under[1])]
    k2 = [comp[k] for k in _forward_open(n, c.under[1], c.over[1])]
    return d.replace_components([k1, k2])


def chord_index_linking(d: GaussDiagram | str, label: int) -> int:
    """lk_O(L) - lk_U(L) for the link obtained by smoothing ``label``."""
    d = diagram(d)
    d.require_knot()
    lk_o, lk_u = linking_numbers(smooth_at(d, label))
    return lk_o - lk_u


def chord_indices(d: GaussDiagram | str) -> dict[int, int]:
    """Index of every chord, computed in one pass per chord along the circle."""
    d = diagram(d)
    d.require_knot()
    comp = d.components[0]
    out = {}
    for lab, c in d.chords.items():
        total = 0
        for k in _forward_open(len(comp), c.under[1], c.over[1]):
            tok = comp[k]
            w = d.chords[tok.label].sign
            total += -w if tok.over else w
        out[lab] = total
    return out


def index_coefficients(d: GaussDiagram | str) -> Counter:
    """a_n for every n that occurs (n = 0 includes the -w(K) correction)."""
    d = diagram(d)
    ind = chord_indices(d)
    a: Counter = Counter()
    for lab, n in ind.items():
        a[n] += d.chords[lab].sign
    a[0] -= sum(c.sign for c in d.chords.values())
    return Counter({n: v for n, v in a.items() if v})


def coefficient(d: GaussDiagram | str, n: int) -> int:
    """a_n(d); 0 when no chord has index n."""
    return index_coefficients(d).get(n, 0)


def writhe_polynomial(d: GaussDiagram | str) -> LaurentPoly:
    a = index_coefficients(d)
    return LaurentPoly.from_powers({n: v for n, v in a.items() if n != 0})


def affine_index_polynomial(d: GaussDiagram | str) -> LaurentPoly:
    """W(t) - W(1); its value at t = 1 is 0."""
    return LaurentPoly.from_powers(dict(index_coefficients(d)))


def odd_writhe(d: GaussDiagram | str) -> int:
    return sum(v for n, v in index_coefficients(d).items() if n % 2)


def flat_invariant(d: GaussDiagram | str) -> LaurentPoly:
    """W(t) - W(1/t), unchanged by crossing changes."""
    w = writhe_polynomial(d)
    return w - w.invert_variable()


def zero_index_chords(d: GaussDiagram | str) -> list[int]:
    return [lab for lab, n in chord_indices(d).items() if n == 0]
