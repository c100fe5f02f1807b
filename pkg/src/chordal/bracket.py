"""Indexed Kauffman bracket.

Only chords whose index is a multiple of ``n`` are smoothed; the others ride
along on the state curves.  For a positive chord choice 0 (A-smoothing) is
the orientation-respecting reconnection, for a negative chord it is the
orientation-reversing one.  This is the convention forced by
<positive kink> = -A^3 <unknot>.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Mapping

from .gauss import ChordEnd, GaussDiagram, diagram
from .index import chord_indices
from .laurent import LaurentPoly
from .limits import ResourceLimitError, state_cap

A = LaurentPoly.monomial(1, unit=1, var="A")
LOOP = -(A ** 2) - (A ** -2)  # value of a free circle


def index_class(d: GaussDiagram | str, n: int) -> list[int]:
    """C_n: chords whose index is k*n for some integer k."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    ind = chord_indices(d)
    return [lab for lab, i in ind.items() if (i == 0 if n == 0 else i % n == 0)]


# --------------------------------------------------------------------------
# arcs between smoothed endpoints

@dataclass(frozen=True)
class _Cut:
    """Circles cut at the endpoints of the smoothed chords."""
    arcs: list[list[tuple[int, int]]]          # retained tokens (label, end) per arc
    port: dict[tuple[int, bool], tuple[int, int]]  # (label, over) -> (arc arriving, arc leaving)
    free: int                                   # circles with no smoothed endpoint
    free_tokens: list[list[tuple[int, int]]]    # retained tokens on those circles


def _cut(d: GaussDiagram, smoothed: set[int]) -> _Cut:
    arcs: list[list] = []
    port: dict = {}
    free = 0
    free_tokens = []
    for comp in d.components:
        cuts = [k for k, t in enumerate(comp) if isinstance(t, ChordEnd) and t.label in smoothed]
        if not cuts:
            free += 1
            free_tokens.append([(t.label, int(t.over)) for t in comp if isinstance(t, ChordEnd)])
            continue
        base = len(arcs)
        m = len(cuts)
        n = len(comp)
        for j, k in enumerate(cuts):
            nxt = cuts[(j + 1) % m]
            seg = []
            i = (k + 1) % n
            while i != nxt:
                t = comp[i]
                if isinstance(t, ChordEnd):
                    seg.append((t.label, int(t.over)))
                i = (i + 1) % n
            arcs.append(seg)
            t = comp[k]
            port[(t.label, t.over)] = (base + (j - 1) % m, base + j)
        # the token list of an arc starting at cut j is arcs[base + j]
    return _Cut(arcs, port, free, free_tokens)


def _joins(cut: _Cut, label: int, oriented: bool) -> tuple[tuple, tuple]:
    """Arc-end pairs glued by a smoothing.  Arc ends are (arc, is_head)."""
    in_p, out_p = cut.port[(label, True)]
    in_q, out_q = cut.port[(label, False)]
    if oriented:
        return ((in_p, True), (out_q, False)), ((in_q, True), (out_p, False))
    return ((in_p, True), (in_q, True)), ((out_p, False), (out_q, False))


def _is_oriented(sign: int, choice: int) -> bool:
    return (choice == 0) == (sign > 0)


class _RollbackUF:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n
        self.log: list = []

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        a, b = self.find(a), self.find(b)
        if a == b:
            self.log.append(None)
            return False
        if self.rank[a] < self.rank[b]:
            a, b = b, a
        self.parent[b] = a
        bumped = self.rank[a] == self.rank[b]
        if bumped:
            self.rank[a] += 1
        self.log.append((b, a, bumped))
        return True

    def undo(self) -> None:
        entry = self.log.pop()
        if entry is not None:
            b, a, bumped = entry
            self.parent[b] = b
            if bumped:
                self.rank[a] -= 1


def _check_cap(k: int) -> None:
    cap = state_cap()
    if 2 ** k > cap:
        raise ResourceLimitError(f"{2 ** k} states exceed the cap of {cap} (set CHORDAL_STATE_CAP)")


def state_counts(d: GaussDiagram, smoothed: list[int]) -> Counter:
    """Counter {(#0 - #1, |S|): number of states} by depth-first search with a rollback union-find."""
    _check_cap(len(smoothed))
    cut = _cut(d, set(smoothed))
    uf = _RollbackUF(len(cut.arcs))
    signs = [d.sign(lab) for lab in smoothed]
    joins = [(_joins(cut, lab, True), _joins(cut, lab, False)) for lab in smoothed]
    out: Counter = Counter()
    k = len(smoothed)

    def rec(i: int, balance: int, comps: int):
        if i == k:
            out[(balance, comps + cut.free)] += 1
            return
        for choice in (0, 1):
            pairs = joins[i][0] if _is_oriented(signs[i], choice) else joins[i][1]
            merged = 0
            for (x, _), (y, _) in pairs:
                merged += uf.union(x, y)
            rec(i + 1, balance + (1 if choice == 0 else -1), comps - merged)
            uf.undo()
            uf.undo()

    rec(0, 0, len(cut.arcs))
    return out


@dataclass(frozen=True)
class State:
    choices: Mapping[int, int]
    curves: tuple[tuple[tuple[int, int], ...], ...]  # retained (label, end) tokens per curve
    num0: int
    num1: int

    @property
    def size(self) -> int:
        return len(self.curves)


def smooth_state(d: GaussDiagram | str, choices: Mapping[int, int], n: int | None = None) -> State:
    """Trace the curves of one state.  ``choices`` must cover exactly C_n when ``n`` is given."""
    d = diagram(d)
    if n is not None and set(choices) != set(index_class(d, n)):
        raise ValueError("choices must cover exactly the chords of C_n")
    for lab, c in choices.items():
        d.require_label(lab)
        if c not in (0, 1):
            raise ValueError("choices are 0 or 1")
    cut = _cut(d, set(choices))
    partner: dict = {}
    for lab, c in choices.items():
        for a, b in _joins(cut, lab, _is_oriented(d.sign(lab), c)):
            partner[a] = b
            partner[b] = a
    seen = [False] * len(cut.arcs)
    curves = [tuple(t) for t in cut.free_tokens]
    for start in range(len(cut.arcs)):
        if seen[start]:
            continue
        curve = []
        arc, forward = start, True
        while not seen[arc]:
            seen[arc] = True
            curve += cut.arcs[arc] if forward else cut.arcs[arc][::-1]
            # leave through the head when moving forward, else through the tail
            nxt_arc, nxt_head = partner[(arc, forward)]
            arc, forward = nxt_arc, not nxt_head
        curves.append(tuple(curve))
    num0 = sum(1 for c in choices.values() if c == 0)
    return State(dict(choices), tuple(curves), num0, len(choices) - num0)


def _assemble(counts: Mapping[tuple[int, int], int]) -> LaurentPoly:
    total = LaurentPoly(unit=1, var="A")
    for (bal, size), mult in counts.items():
        total = total + (A ** bal) * (LOOP ** (size - 1)) * mult
    return total


def _normalise(bracket: LaurentPoly, w: int) -> LaurentPoly:
    """(-A^3)^(-w) * bracket, then A = t^(-1/4)."""
    factor = LaurentPoly({-3 * w: (-1) ** (w % 2)}, unit=1, var="A")
    return (factor * bracket).substitute_power(-1, 4)


def indexed_bracket(d: GaussDiagram | str, n: int) -> LaurentPoly:
    d = diagram(d)
    d.require_knot()
    return _assemble(state_counts(d, index_class(d, n)))


def indexed_jones(d: GaussDiagram | str, n: int = 1) -> LaurentPoly:
    d = diagram(d)
    d.require_knot()
    w = sum(c.sign for c in d.chords.values())
    return _normalise(indexed_bracket(d, n), w)


def bracket_bruteforce(d: GaussDiagram | str, n: int = 1) -> LaurentPoly:
    """Test oracle: every state traced explicitly."""
    d = diagram(d)
    smoothed = index_class(d, n)
    _check_cap(len(smoothed))
    counts: Counter = Counter()
    for bits in itertools.product((0, 1), repeat=len(smoothed)):
        st = smooth_state(d, dict(zip(smoothed, bits)))
        counts[(st.num0 - st.num1, st.size)] += 1
    return _assemble(counts)


def span(p: LaurentPoly):
    return p.span()


def span_bound_check(d: GaussDiagram | str, n: int) -> bool:
    """|C_n| >= span V^n."""
    return len(index_class(d, n)) >= span(indexed_jones(d, n))


# --------------------------------------------------------------------------
# graphical version: states kept as flat diagrams

def _canon_flat(curves: list[tuple[int, ...]]) -> tuple:
    """Canonical key over circle order, rotation, reversal and label names."""
    beam = [((), {}, tuple(sorted(curves)))]
    while beam[0][2]:
        best = None
        nxt = []
        for prefix, mapping, left in beam:
            for idx in sorted(set(range(len(left))), key=lambda i: left[i]):
                if idx and left[idx] == left[idx - 1]:
                    continue  # identical circle already tried
                c = left[idx]
                rest = left[:idx] + left[idx + 1:]
                for seq in (c, c[::-1]):
                    for r in range(max(len(seq), 1)):
                        m = dict(mapping)
                        key = []
                        for lab in seq[r:] + seq[:r]:
                            if lab not in m:
                                m[lab] = len(m) + 1
                            key.append(m[lab])
                        cand = prefix + (tuple(key),)
                        if best is None or cand < best:
                            best, nxt = cand, [(cand, m, rest)]
                        elif cand == best:
                            nxt.append((cand, m, rest))
        uniq = {}
        for e in nxt:
            uniq.setdefault((tuple(sorted(e[1].items())), e[2]), e)
        beam = list(uniq.values())
    return beam[0][0]


def _flat_reduce(curves: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Greedy flat first/second move reduction on a canonical key; deterministic."""
    free = sum(1 for c in curves if not c)
    curves = [tuple(c) for c in _canon_flat([c for c in curves if c])] + [()] * free
    while True:
        pos = {}
        for ci, c in enumerate(curves):
            for k, lab in enumerate(c):
                pos.setdefault(lab, []).append((ci, k))

        def adj(p, q):
            if p[0] != q[0]:
                return False
            n = len(curves[p[0]])
            return n > 1 and ((p[1] + 1) % n == q[1] or (q[1] + 1) % n == p[1])

        drop = None
        for lab, (p, q) in sorted(pos.items()):
            if adj(p, q):
                drop = {lab}
                break
        if drop is None:
            labs = sorted(pos)
            for a, b in itertools.combinations(labs, 2):
                pa, pb = pos[a], pos[b]
                if (adj(pa[0], pb[0]) and adj(pa[1], pb[1])) or (adj(pa[0], pb[1]) and adj(pa[1], pb[0])):
                    drop = {a, b}
                    break
        if drop is None:
            return curves
        curves = [tuple(x for x in c if x not in drop) for c in curves]
        free = sum(1 for c in curves if not c)
        curves = [tuple(c) for c in _canon_flat([c for c in curves if c])] + [()] * free


def flat_key(curves, reduce: bool = False) -> tuple[str, int]:
    """(serialised flat state without free circles, number of free circles).

    With ``reduce`` the state is first simplified by flat first/second moves,
    which merges keys of equivalent flat states.
    """
    labelled = [tuple(lab for lab, _ in c) for c in curves]
    reduced = _flat_reduce(labelled) if reduce else labelled
    busy = [c for c in reduced if c]
    free = len(reduced) - len(busy)
    if not busy:
        return "", free - 1
    text = " / ".join(" ".join(f"F{x}" for x in c) for c in _canon_flat(busy))
    return text, free


def graphical_indexed_jones(d: GaussDiagram | str, n: int, reduce: bool = False) -> dict[str, LaurentPoly]:
    """{flat state key: coefficient in t}; the key "" is a single trivial circle."""
    d = diagram(d)
    d.require_knot()
    smoothed = index_class(d, n)
    _check_cap(len(smoothed))
    w = sum(c.sign for c in d.chords.values())
    acc: dict[str, LaurentPoly] = {}
    for bits in itertools.product((0, 1), repeat=len(smoothed)):
        st = smooth_state(d, dict(zip(smoothed, bits)))
        key, free = flat_key(st.curves, reduce)
        term = (A ** (st.num0 - st.num1)) * (LOOP ** free)
        acc[key] = acc.get(key, LaurentPoly(unit=1, var="A")) + term
    out = {}
    for key in sorted(acc):
        v = _normalise(acc[key], w)
        if not v.is_zero():
            out[key] = v
    return out


def specialise_graphical(g: Mapping[str, LaurentPoly]) -> LaurentPoly:
    """Replace each flat state by LOOP^(circles - 1); reproduces V^n."""
    loop_t = LOOP.substitute_power(-1, 4)
    total = LaurentPoly()
    for key, coeff in g.items():
        circles = key.count("/") + 1
        total = total + coeff * (loop_t ** (circles - 1))
    return total
