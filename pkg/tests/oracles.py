"""Independent oracles shared by several test modules."""
from __future__ import annotations

import itertools

from chordal.bracket import A, LOOP, index_class
from chordal.gauss import ChordEnd, parse_gauss_code
from chordal.laurent import LaurentPoly


def oracle_bracket(code, n: int = 1) -> LaurentPoly:
    """Count state circles with a half-edge graph built directly from the Gauss word."""
    d = parse_gauss_code(code) if isinstance(code, str) else code
    comp = d.components[0]
    smoothed = index_class(d, n)
    marks = [k for k, t in enumerate(comp) if isinstance(t, ChordEnd) and t.label in smoothed]
    total = LaurentPoly(unit=1, var="A")
    for bits in itertools.product((0, 1), repeat=len(smoothed)):
        choice = dict(zip(smoothed, bits))
        parent = {}

        def find(x):
            while parent.setdefault(x, x) != x:
                x = parent[x]
            return x

        def join(x, y):
            parent[find(x)] = find(y)

        # arcs of the circle between consecutive smoothed endpoints: out(k) -- in(next)
        for i, k in enumerate(marks):
            join(("out", k), ("in", marks[(i + 1) % len(marks)]))
        for lab in smoothed:
            p = next(k for k in marks if comp[k].label == lab and comp[k].over)
            q = next(k for k in marks if comp[k].label == lab and not comp[k].over)
            oriented = (choice[lab] == 0) == (d.sign(lab) > 0)
            if oriented:
                join(("in", p), ("out", q))
                join(("in", q), ("out", p))
            else:
                join(("in", p), ("in", q))
                join(("out", p), ("out", q))
        circles = len({find(x) for x in list(parent)}) if marks else 1
        bal = sum(1 if b == 0 else -1 for b in bits)
        total = total + (A ** bal) * (LOOP ** (circles - 1))
    return total


def braid_closure(word: list[int], strands: int) -> str | None:
    """Gauss code of the closure of a braid word (generator i > 0 is sigma_i, -i its inverse).

    Strands run upward; in sigma_i the strand at position i crosses over to i + 1,
    which makes the crossing positive.  Returns None unless the closure is a knot.
    """
    perm = list(range(strands))
    for g in word:
        i = abs(g) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    # follow position 0 through the braid until it returns
    toks = []
    p = 0
    for _ in range(strands):
        for k, g in enumerate(word, 1):
            i = abs(g) - 1
            if p not in (i, i + 1):
                continue
            sign = 1 if g > 0 else -1
            over = (p == i) if g > 0 else (p == i + 1)
            toks.append(f"{'O' if over else 'U'}{k}{'+' if sign > 0 else '-'}")
            p = i + 1 if p == i else i
        if p == 0:
            break
    if len(toks) != 2 * len(word):
        return None
    return " ".join(toks)
