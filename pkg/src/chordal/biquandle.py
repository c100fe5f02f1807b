"""Finite biquandles, semiarc colorings and chord indices valued in the abelianised index groups.

Semiarcs are cut at every token (chord endpoint or bar).  Crossing rule,
with ``x`` and ``y`` the pair recorded as the crossing's weight:

* positive crossing: x = under incoming, y = over outgoing;
  under outgoing = x * y, over incoming = y o x;
* negative crossing: x = under outgoing, y = over incoming;
  under incoming = x * y, over outgoing = y o x.

With x * y = x o y = x + 1 on the integers this is the rule "+w at an under
passage, -w at an over passage", and y - x is the chord index.
"""
from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .abelian import GroupRingElement, Presentation
from .coloring import ColoringProblem, inverse_table
from .gauss import Bar, ChordEnd, GaussDiagram, diagram


@dataclass(frozen=True)
class FiniteBiquandle:
    size: int
    star: tuple[tuple[int, ...], ...]
    circ: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for name in ("star", "circ"):
            t = tuple(tuple(int(v) for v in row) for row in getattr(self, name))
            if len(t) != self.size or any(len(r) != self.size for r in t):
                raise ValueError(f"{name} table must be size x size")
            if any(not 0 <= v < self.size for r in t for v in r):
                raise ValueError(f"{name} table entry out of range")
            object.__setattr__(self, name, t)

    @classmethod
    def from_functions(cls, size: int, star, circ) -> "FiniteBiquandle":
        rng = range(size)
        return cls(size, tuple(tuple(star(x, y) for y in rng) for x in rng),
                   tuple(tuple(circ(x, y) for y in rng) for x in rng))

    @classmethod
    def from_quandle(cls, table: Sequence[Sequence[int]]) -> "FiniteBiquandle":
        """x * y from the quandle, x o y = x."""
        q = len(table)
        return cls(q, tuple(map(tuple, table)), tuple(tuple(x for _ in range(q)) for x in range(q)))

    @cached_property
    def star_inv(self) -> list[list[int]]:
        return inverse_table(self.star)

    @cached_property
    def circ_inv(self) -> list[list[int]]:
        return inverse_table(self.circ)

    @cached_property
    def crossing_inverse(self) -> dict[tuple[int, int], tuple[int, int]]:
        """(x * y, y o x) -> (x, y)."""
        out = {}
        for x in range(self.size):
            for y in range(self.size):
                out[(self.star[x][y], self.circ[y][x])] = (x, y)
        if len(out) != self.size ** 2:
            raise ValueError("the crossing map is not invertible")
        return out

    def to_json(self) -> dict:
        return {"size": self.size, "star": [list(r) for r in self.star], "circ": [list(r) for r in self.circ]}

    @classmethod
    def from_json(cls, data) -> "FiniteBiquandle":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["size"]), data["star"], data["circ"])


def check_biquandle(B: FiniteBiquandle) -> list[tuple]:
    """Every violated axiom instance; empty means B is a biquandle."""
    s, c, q = B.star, B.circ, B.size
    bad = []
    for x in range(q):
        if s[x][x] != c[x][x]:
            bad.append(("diagonal", x))
    for x in range(q):
        if len({s[z][x] for z in range(q)}) != q:
            bad.append(("star_bijective", x))
        if len({c[w][x] for w in range(q)}) != q:
            bad.append(("circ_bijective", x))
    if len({(c[y][x], s[x][y]) for x in range(q) for y in range(q)}) != q * q:
        bad.append(("S_invertible",))
    for x, y, z in itertools.product(range(q), repeat=3):
        if c[c[z][y]][s[x][y]] != c[c[z][x]][c[y][x]]:
            bad.append(("exchange_1", x, y, z))
        if s[c[y][x]][c[z][x]] != c[s[y][z]][s[x][z]]:
            bad.append(("exchange_2", x, y, z))
        if s[s[x][y]][c[z][y]] != s[s[x][z]][s[y][z]]:
            bad.append(("exchange_3", x, y, z))
    return bad


def lemma_pairs(B: FiniteBiquandle) -> list[tuple[int, int]]:
    """Pairs with x * y = y o x; for a biquandle these are exactly the diagonal."""
    return [(x, y) for x in range(B.size) for y in range(B.size) if B.star[x][y] == B.circ[y][x]]


# --------------------------------------------------------------------------
# semiarcs

@dataclass(frozen=True)
class CrossingSemiarcs:
    label: int
    sign: int
    over_in: int
    over_out: int
    under_in: int
    under_out: int

    @property
    def weight_vars(self) -> tuple[int, int]:
        """Variables holding the weight pair (x, y)."""
        if self.sign > 0:
            return self.under_in, self.over_out
        return self.under_out, self.over_in

    @property
    def image_vars(self) -> tuple[int, int]:
        """Variables equal to (x * y, y o x)."""
        if self.sign > 0:
            return self.under_out, self.over_in
        return self.under_in, self.over_out


@dataclass(frozen=True)
class Semiarcs:
    count: int
    crossings: tuple[CrossingSemiarcs, ...]
    bars: tuple[tuple[int, int], ...]  # (semiarc before, semiarc after)
    component_of: tuple[int, ...]


def semiarcs(d: GaussDiagram) -> Semiarcs:
    inc: dict = {}
    out: dict = {}
    bars = []
    comp_of = []
    count = 0
    for ci, comp in enumerate(d.components):
        n = len(comp)
        if n == 0:
            comp_of.append(ci)
            count += 1
            continue
        for k, tok in enumerate(comp):
            i, o = count + (k - 1) % n, count + k
            if isinstance(tok, Bar):
                bars.append((i, o))
            else:
                inc[(tok.label, tok.over)] = i
                out[(tok.label, tok.over)] = o
        comp_of += [ci] * n
        count += n
    xs = tuple(CrossingSemiarcs(lab, ch.sign, inc[(lab, True)], out[(lab, True)],
                                inc[(lab, False)], out[(lab, False)]) for lab, ch in d.chords.items())
    return Semiarcs(count, xs, tuple(bars), tuple(comp_of))


def add_crossing_rules(prob: ColoringProblem, B: FiniteBiquandle, xs: Sequence[CrossingSemiarcs]) -> None:
    s, c = B.star, B.circ
    s_inv, c_inv, S_inv = B.star_inv, B.circ_inv, B.crossing_inverse
    for x in xs:
        (vx, vy), (vs, vc) = x.weight_vars, x.image_vars
        prob.add((vx, vy), (vs, vc), lambda a, b: (s[a][b], c[b][a]))
        prob.add((vs, vc), (vx, vy), lambda p, r: S_inv[(p, r)])
        prob.add((vs, vy), (vx,), lambda p, b: (s_inv[p][b],))
        prob.add((vc, vx), (vy,), lambda r, a: (c_inv[r][a],))


def biquandle_problem(d: GaussDiagram, B: FiniteBiquandle) -> tuple[ColoringProblem, Semiarcs]:
    sa = semiarcs(d)
    if sa.bars:
        raise ValueError("diagram has bars; use the twisted coloring")
    prob = ColoringProblem(sa.count, B.size)
    add_crossing_rules(prob, B, sa.crossings)
    return prob, sa


def enumerate_biquandle_colorings(d: GaussDiagram | str, B: FiniteBiquandle) -> list[tuple[int, ...]]:
    prob, _ = biquandle_problem(diagram(d), B)
    return list(prob.solutions())


def count_biquandle_colorings(d: GaussDiagram | str, B: FiniteBiquandle) -> int:
    prob, _ = biquandle_problem(diagram(d), B)
    return prob.count()


# --------------------------------------------------------------------------
# index groups

def index_group(B: FiniteBiquandle, which: str = "frak") -> Presentation:
    """Abelianisation of the index group on pairs (x, y).

    ``which="frak"``: (x,x) = 0, (x,y) = (x*z, y*z), (y,z) = (y o x, z o x), (x,z) = (x*y, z o y).
    ``which="G"``: (x,x) = 0, (x,y)+(y,z)+(x*y, z o y) = (x*z, y*z)+(y o x, z o x)+(x,z).
    """
    q = B.size
    s, c = B.star, B.circ
    gens = [(x, y) for x in range(q) for y in range(q)]
    col = {g: k for k, g in enumerate(gens)}
    rows = []

    def rel(plus, minus):
        r = [0] * len(gens)
        for g in plus:
            r[col[g]] += 1
        for g in minus:
            r[col[g]] -= 1
        rows.append(r)

    for x in range(q):
        rel([(x, x)], [])
    for x, y, z in itertools.product(range(q), repeat=3):
        if which == "frak":
            rel([(x, y)], [(s[x][z], s[y][z])])
            rel([(y, z)], [(c[y][x], c[z][x])])
            rel([(x, z)], [(s[x][y], c[z][y])])
        elif which == "G":
            rel([(x, y), (y, z), (s[x][y], c[z][y])], [(s[x][z], s[y][z]), (c[y][x], c[z][x]), (x, z)])
        else:
            raise ValueError("which must be 'frak' or 'G'")
    return Presentation(gens, rows)


def crossing_indices(d: GaussDiagram | str, B: FiniteBiquandle,
                     group: Presentation | None = None) -> dict[int, GroupRingElement]:
    """Per chord, the formal sum over colorings of the image of its weight pair in Ab(frak G)."""
    d = diagram(d)
    pres = group or index_group(B, "frak")
    prob, sa = biquandle_problem(d, B)
    acc = {x.label: Counter() for x in sa.crossings}
    for col in prob.solutions():
        for x in sa.crossings:
            vx, vy = x.weight_vars
            acc[x.label][pres.image((col[vx], col[vy]))] += 1
    return {lab: GroupRingElement(c) for lab, c in acc.items()}


def a_g(d: GaussDiagram | str, B: FiniteBiquandle) -> dict[GroupRingElement, int]:
    """Signed count of chords per index value; the all-identity value is corrected by -w."""
    d = diagram(d)
    pres = index_group(B, "frak")
    ind = crossing_indices(d, B, pres)
    ncol = count_biquandle_colorings(d, B)
    trivial = GroupRingElement({pres.group.zero(): ncol})
    out: Counter = Counter()
    for lab, g in ind.items():
        out[g] += d.sign(lab)
    out[trivial] -= sum(ch.sign for ch in d.chords.values())
    return {g: v for g, v in out.items() if v}


def universal_cocycle_invariant(d: GaussDiagram | str, B: FiniteBiquandle) -> GroupRingElement:
    """Formal sum over colorings of sum_x w(x) (x, y) in Ab(G_BQ).

    Only the total per coloring is preserved by moves, so per-crossing values
    in G_BQ are not reported.
    """
    d = diagram(d)
    pres = index_group(B, "G")
    G = pres.group
    prob, sa = biquandle_problem(d, B)
    out = []
    for col in prob.solutions():
        total = G.zero()
        for x in sa.crossings:
            vx, vy = x.weight_vars
            total = G.add(total, G.scale(pres.image((col[vx], col[vy])), x.sign))
        out.append(total)
    return GroupRingElement(out)


def render_a_g(values: dict[GroupRingElement, int]) -> dict[str, int]:
    return {str(g): v for g, v in sorted(values.items(), key=lambda kv: str(kv[0]))}


# --------------------------------------------------------------------------
# the integer affine biquandle x * y = x o y = x + 1

def affine_coloring(d: GaussDiagram | str) -> list[int] | None:
    """Propagate colors along each component from 0: +w at an under passage, -w at an over passage.

    Returns per-semiarc colors, or None when some component does not close up.
    """
    d = diagram(d)
    sa = semiarcs(d)
    colors = [0] * sa.count
    base = 0
    for comp in d.components:
        n = len(comp)
        if n == 0:
            base += 1
            continue
        v = 0
        for k, tok in enumerate(comp):
            if isinstance(tok, ChordEnd):
                v += tok.sign if not tok.over else -tok.sign
            elif isinstance(tok, Bar):
                raise ValueError("bars negate colors; use the twisted module")
            colors[base + k] = v
        if v != 0:
            return None
        base += n
    return colors


def affine_indices(d: GaussDiagram | str) -> dict[int, int]:
    """y - x at each crossing for one integer coloring."""
    d = diagram(d)
    colors = affine_coloring(d)
    if colors is None:
        raise ValueError("no integer coloring exists")
    sa = semiarcs(d)
    out = {}
    for x in sa.crossings:
        vx, vy = x.weight_vars
        out[x.label] = colors[vy] - colors[vx]
    return out


# --------------------------------------------------------------------------
# small structures

def flip_biquandle() -> FiniteBiquandle:
    """Two elements, x * y = x o y = the other element."""
    return FiniteBiquandle.from_functions(2, lambda x, y: 1 - x, lambda x, y: 1 - x)


def all_biquandles(size: int) -> list[FiniteBiquandle]:
    """Every biquandle on {0..size-1} whose operations have bijective right translations."""
    perms = list(itertools.permutations(range(size)))
    cols = list(itertools.product(perms, repeat=size))  # one permutation per right argument y
    tables = [tuple(tuple(cp[y][x] for y in range(size)) for x in range(size)) for cp in cols]
    out = []
    for st in tables:
        for ci in tables:
            if any(st[x][x] != ci[x][x] for x in range(size)):
                continue
            B = FiniteBiquandle(size, st, ci)
            if not check_biquandle(B):
                out.append(B)
    return out
