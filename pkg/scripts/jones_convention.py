#!/usr/bin/env python3
"""Which substitution for A reproduces the published V^0 example?

Enumerates every knot diagram with four chords whose indices are {0, 0, 1, -1}
and whose writhe polynomial is t + t^-1, tallies V^0 under A = t^(-1/4) and
under the mirrored choice A = t^(1/4), and reports whether the target
-t^4 + t^3 + t^(5/2) occurs under each.
"""
from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction

from chordal.bracket import indexed_jones
from chordal.gauss import ChordEnd, GaussDiagram
from chordal.index import chord_indices, writhe_polynomial
from chordal.laurent import LaurentPoly

TARGET = LaurentPoly.monomial(4, -1) + LaurentPoly.monomial(3) + LaurentPoly.monomial(Fraction(5, 2))
W = LaurentPoly.from_powers({1: 1, -1: 1})


def _matchings(points: list[int]):
    if not points:
        yield []
        return
    a, rest = points[0], points[1:]
    for k, b in enumerate(rest):
        for m in _matchings(rest[:k] + rest[k + 1:]):
            yield [(a, b), *m]


def diagrams(chords: int = 4):
    """Every one-component word on ``chords`` chords: matchings x directions x signs."""
    n = 2 * chords
    for pairs in _matchings(list(range(n))):
        for dirs in itertools.product((True, False), repeat=chords):
            for signs in itertools.product((1, -1), repeat=chords):
                word = [None] * n
                for lab, ((a, b), first_over, s) in enumerate(zip(pairs, dirs, signs), 1):
                    word[a] = ChordEnd(lab, first_over, s)
                    word[b] = ChordEnd(lab, not first_over, s)
                yield GaussDiagram((tuple(word),))


def main() -> None:
    tally: Counter = Counter()
    mirrored: Counter = Counter()
    examples: dict[str, str] = {}
    for d in diagrams():
        if sorted(chord_indices(d).values()) != [-1, 0, 0, 1] or writhe_polynomial(d) != W:
            continue
        v = indexed_jones(d, 0)
        tally[str(v)] += 1
        mirrored[str(v.invert_variable())] += 1
        examples.setdefault(str(v), str(d))
    print("V^0 with A = t^(-1/4):")
    for k, c in tally.most_common():
        print(f"  {c:6d}  {k}   e.g. {examples[k]}")
    print("target present with A = t^(-1/4):", str(TARGET) in tally)
    print("target present with A = t^(1/4): ", str(TARGET) in mirrored)


if __name__ == "__main__":
    main()
