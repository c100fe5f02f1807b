"""Alternating sums over resolutions of marked crossings, and the invariants a_(x1..xn)."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Sequence, TypeVar

from .gauss import ChordEnd, GaussDiagram, crossing_change, diagram
from .index import chord_indices, index_coefficients

V = TypeVar("V")


@dataclass(frozen=True)
class SingularSelection:
    base: GaussDiagram
    marked: tuple[int, ...]

    def __post_init__(self):
        for lab in self.marked:
            self.base.require_label(lab)
        if len(set(self.marked)) != len(self.marked):
            raise ValueError("marked chords must be distinct")

    def resolution(self, sigma: Sequence[int]) -> GaussDiagram:
        """K_sigma: marked chord i is positive when sigma[i] = 0 and negative when 1."""
        d = self.base
        for lab, s in zip(self.marked, sigma):
            want = 1 if s == 0 else -1
            if d.sign(lab) != want:
                d = crossing_change(d, lab)
        return d


def vassiliev_sum(invariant: Callable[[GaussDiagram], V], s: SingularSelection) -> V:
    """Sum over sigma in {0,1}^k of (-1)^|sigma| invariant(K_sigma)."""
    total = None
    for sigma in itertools.product((0, 1), repeat=len(s.marked)):
        v = invariant(s.resolution(sigma))
        if sum(sigma) % 2:
            v = -v
        total = v if total is None else total + v
    return total


def _check_tuple(xs: Sequence[int]) -> None:
    if any(x == 0 for x in xs):
        raise ValueError("index tuple entries must be nonzero")
    if any(a <= b for a, b in zip(xs, xs[1:])):
        raise ValueError("index tuple must be strictly decreasing")


def a_tuple(d: GaussDiagram | str, xs: Sequence[int]) -> int:
    """Sum over chord selections c1..cn with Ind(ci) = xi of the product of signs."""
    _check_tuple(xs)
    a = index_coefficients(diagram(d))
    out = 1
    for x in xs:
        out *= a.get(x, 0)
    return out


def a_tuple_bruteforce(d: GaussDiagram | str, xs: Sequence[int]) -> int:
    """Enumerate ordered chord selections directly (test oracle)."""
    _check_tuple(xs)
    d = diagram(d)
    ind = chord_indices(d)
    total = 0
    for sel in itertools.permutations(d.chords, len(xs)):
        if all(ind[c] == x for c, x in zip(sel, xs)):
            p = 1
            for c in sel:
                p *= d.sign(c)
            total += p
    return total


def parallel_witness(n: int) -> tuple[GaussDiagram, int]:
    """n parallel positive chords all crossed by one transversal chord; returns (diagram, transversal)."""
    c = n + 1
    word = [ChordEnd(c, True, 1)] + [ChordEnd(i, True, 1) for i in range(1, n + 1)]
    word += [ChordEnd(c, False, 1)] + [ChordEnd(i, False, 1) for i in range(n, 0, -1)]
    return GaussDiagram((tuple(word),)), c
