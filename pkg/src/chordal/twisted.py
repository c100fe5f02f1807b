"""Twisted diagrams: colorings by twisted biquandles and the bar-sensitive index invariants.

Bars are ``B`` tokens.  The integer coloring used throughout is the twisted
biquandle (Z, a*b = a o b = a + 1, f(a) = -a): walking along the diagram the
color moves by +w at an under passage, by -w at an over passage, and is
negated at a bar.  A crossing's index is y - x for its weight pair, exactly
as in :mod:`chordal.biquandle`.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .biquandle import FiniteBiquandle, add_crossing_rules, check_biquandle, semiarcs
from .coloring import ColoringProblem
from .gauss import Bar, GaussDiagram, diagram
from .laurent import LaurentPoly
from .limits import DEFAULT_NODE_CAP


# --------------------------------------------------------------------------
# twisted biquandles

@dataclass(frozen=True)
class TwistedBiquandle:
    biquandle: FiniteBiquandle
    f: tuple[int, ...]

    @property
    def size(self) -> int:
        return self.biquandle.size

    def to_json(self) -> dict:
        return {"biquandle": self.biquandle.to_json(), "f": list(self.f)}

    @classmethod
    def from_json(cls, data) -> "TwistedBiquandle":
        return cls(FiniteBiquandle.from_json(data["biquandle"]), tuple(data["f"]))


def check_twisted_biquandle(TB: TwistedBiquandle) -> list[tuple]:
    """Biquandle violations plus failures of the two bar-compatibility laws and f^2 = id."""
    B, f = TB.biquandle, TB.f
    if len(f) != B.size or any(not 0 <= v < B.size for v in f):
        return [("f", "not a map on the carrier")]
    bad = list(check_biquandle(B))
    s, c = B.star, B.circ
    for x in range(B.size):
        if f[f[x]] != x:
            bad.append(("involution", x))
        for y in range(B.size):
            xy, yx = s[x][y], c[y][x]
            if s[f[yx]][f[xy]] != f[y]:
                bad.append(("bar-star", x, y))
            if c[f[xy]][f[yx]] != f[x]:
                bad.append(("bar-circ", x, y))
    return bad


def affine_twisted(n: int) -> TwistedBiquandle:
    """Z_n with a*b = a o b = a + 1 and f(a) = -a."""
    B = FiniteBiquandle.from_functions(n, lambda x, y: (x + 1) % n, lambda y, x: (y + 1) % n)
    return TwistedBiquandle(B, tuple((-a) % n for a in range(n)))


def twisted_problem(d: GaussDiagram, TB: TwistedBiquandle) -> ColoringProblem:
    sa = semiarcs(d)
    prob = ColoringProblem(sa.count, TB.size)
    add_crossing_rules(prob, TB.biquandle, sa.crossings)
    f = TB.f
    for before, after in sa.bars:
        prob.add((before,), (after,), lambda a: (f[a],))
        prob.add((after,), (before,), lambda a: (f[a],))
    return prob


def count_twisted_colorings(d: GaussDiagram | str, TB: TwistedBiquandle,
                            node_cap: int = DEFAULT_NODE_CAP) -> int:
    return twisted_problem(diagram(d), TB).count(node_cap)


# --------------------------------------------------------------------------
# edges between bars

def _step(tok) -> int:
    """Color increment across a chord endpoint (before any negation)."""
    return tok.sign if not tok.over else -tok.sign


@dataclass(frozen=True)
class Edge:
    o_plus: int = 0
    o_minus: int = 0
    u_plus: int = 0
    u_minus: int = 0

    @property
    def s(self) -> int:
        return self.u_plus + self.o_minus - self.u_minus - self.o_plus


@dataclass(frozen=True)
class EdgeDecomposition:
    """Edges in orientation order; edge 1 starts right after the first bar."""
    edges: tuple[Edge, ...]
    start: int  # token offset of the first bar (-1 when there are none)

    @property
    def stats(self) -> list[int]:
        return [e.s for e in self.edges]


def _knot(d) -> GaussDiagram:
    d = diagram(d)
    d.require_knot(allow_bars=True)
    return d


def edge_stats(d: GaussDiagram | str) -> EdgeDecomposition:
    d = _knot(d)
    comp = d.components[0]
    bars = [k for k, t in enumerate(comp) if isinstance(t, Bar)]
    start = bars[0] if bars else -1
    n = len(comp)
    edges: list[Counter] = []
    cur: Counter = Counter()
    for j in range(1, n + 1):
        tok = comp[(start + j) % n]
        if isinstance(tok, Bar):
            edges.append(cur)
            cur = Counter()
        else:
            cur[("o" if tok.over else "u") + ("+" if tok.sign > 0 else "-")] += 1
    if not bars:
        edges.append(cur)
    return EdgeDecomposition(tuple(Edge(c["o+"], c["o-"], c["u+"], c["u-"]) for c in edges), start)


def S_invariant(d: GaussDiagram | str) -> int:
    """|sum of s over odd edges - sum over even edges| for an even number of bars."""
    d = _knot(d)
    if d.num_bars % 2:
        raise ValueError("S is defined for an even number of bars")
    s = edge_stats(d).stats
    return abs(sum(s[0::2]) - sum(s[1::2]))


# --------------------------------------------------------------------------
# integer colorings

@dataclass(frozen=True)
class LinearColoring:
    """Semiarc colors as a*k + b in the color k of the base semiarc."""
    base: int
    coeffs: tuple[tuple[int, int], ...]
    closure: tuple[int, int]  # the base color returns as a*k + b

    def at(self, k: int, modulus: int = 0) -> list[int]:
        vals = [a * k + b for a, b in self.coeffs]
        return [v % modulus for v in vals] if modulus else vals


def linear_coloring(d: GaussDiagram | str) -> LinearColoring:
    """Propagate the integer coloring around the knot from the semiarc after the first bar."""
    d = _knot(d)
    comp = d.components[0]
    n = len(comp)
    if n == 0:
        return LinearColoring(0, ((1, 0),), (1, 0))
    bars = [k for k, t in enumerate(comp) if isinstance(t, Bar)]
    s = bars[0] if bars else n - 1
    coeffs: list = [None] * n
    a, b = 1, 0
    coeffs[s] = (a, b)
    for j in range(1, n + 1):
        k = (s + j) % n
        tok = comp[k]
        if isinstance(tok, Bar):
            a, b = -a, -b
        else:
            b += _step(tok)
        if j < n:
            coeffs[k] = (a, b)
    return LinearColoring(s, tuple(coeffs), (a, b))


def unique_coloring(d: GaussDiagram | str) -> list[int]:
    """The only integer coloring of an odd-bar diagram, solved from the propagation closure."""
    lc = linear_coloring(d)
    a, b = lc.closure
    if a != -1:
        raise ValueError("unique coloring needs an odd number of bars")
    if b % 2:
        raise AssertionError("closure offset is odd; bar parity bookkeeping is broken")
    return lc.at(b // 2)


def half_sum_color(d: GaussDiagram | str) -> int:
    """Color of the semiarc after the first bar from edge statistics alone (odd bars)."""
    d = _knot(d)
    if d.num_bars % 2 == 0:
        raise ValueError("needs an odd number of bars")
    s = edge_stats(d).stats
    twice = sum(s[1::2]) - sum(s[0::2])
    return twice // 2


def coloring_from_formula(d: GaussDiagram | str) -> list[int]:
    """Walk the knot once from the half-sum color; no closure equation is solved."""
    d = _knot(d)
    comp = d.components[0]
    n = len(comp)
    s = next(k for k, t in enumerate(comp) if isinstance(t, Bar))
    colors = [0] * n
    v = half_sum_color(d)
    colors[s] = v
    for j in range(1, n):
        k = (s + j) % n
        tok = comp[k]
        v = -v if isinstance(tok, Bar) else v + _step(tok)
        colors[k] = v
    return colors


def integer_coloring_exists(d: GaussDiagram | str) -> bool:
    """Whether some integer coloring closes up (checked by propagation, not via S)."""
    a, b = linear_coloring(d).closure
    return a == -1 and b % 2 == 0 or a == 1 and b == 0


def colorings_mod(d: GaussDiagram | str, modulus: int) -> list[list[int]]:
    """Every coloring over Z_modulus (modulus > 0), by brute force over the base color."""
    lc = linear_coloring(d)
    a, b = lc.closure
    return [lc.at(k, modulus) for k in range(modulus) if (a * k + b - k) % modulus == 0]


def crossing_indices_for(d: GaussDiagram | str, colors: Sequence[int], modulus: int = 0) -> dict[int, int]:
    """y - x at each crossing (reduced mod ``modulus`` when it is positive)."""
    d = diagram(d)
    sa = semiarcs(d)
    out = {}
    for x in sa.crossings:
        vx, vy = x.weight_vars
        v = colors[vy] - colors[vx]
        out[x.label] = v % modulus if modulus else v
    return out


# --------------------------------------------------------------------------
# invariants

def T_o(d: GaussDiagram | str) -> LaurentPoly:
    d = _knot(d)
    if d.num_bars % 2 == 0:
        raise ValueError("T_o is defined for an odd number of bars")
    ind = crossing_indices_for(d, unique_coloring(d))
    a: Counter = Counter()
    for lab, n in ind.items():
        a[n] += d.chords[lab].sign
    a[0] -= sum(c.sign for c in d.chords.values())
    return LaurentPoly.from_powers({n: v for n, v in a.items() if v})


def chord_bar_parity(d: GaussDiagram | str) -> dict[int, int]:
    """Bars strictly between the two endpoints of each chord, mod 2 (same on both sides for even totals)."""
    d = _knot(d)
    comp = d.components[0]
    prefix = [0]
    for t in comp:
        prefix.append(prefix[-1] + isinstance(t, Bar))
    out = {}
    for lab, c in d.chords.items():
        p, q = sorted((c.over[1], c.under[1]))
        out[lab] = (prefix[q] - prefix[p + 1]) % 2
    return out


@dataclass(frozen=True)
class TePolynomial:
    """s0/s1 weights of odd-class chords and the t-part mod S with -w folded into t^0."""
    modulus: int
    s0: int
    s1: int
    t_terms: tuple[tuple[int, int], ...]
    const: int = field(compare=False)

    def t_poly(self) -> dict[int, int]:
        return dict(self.t_terms)

    def to_json(self) -> dict:
        return {
            "S": self.modulus,
            "Te": {"s0": self.s0, "s1": self.s1,
                   "t_mod_S": {str(e): v for e, v in self.t_terms}},
            "const": self.const,
        }

    def __str__(self) -> str:
        parts = [f"{v}·t^{e}" for e, v in sorted(self.t_terms, reverse=True)]
        parts += [f"{v}·s{i}" for i, v in ((0, self.s0), (1, self.s1)) if v]
        body = " + ".join(parts) or "0"
        return f"{body} (mod {self.modulus})" if self.modulus else body


def T_e(d: GaussDiagram | str, shift: int = 0) -> TePolynomial:
    """T_e from the coloring whose base semiarc has color ``shift``; the result does not depend on it."""
    d = _knot(d)
    if d.num_bars % 2:
        raise ValueError("T_e is defined for an even number of bars")
    S = S_invariant(d)
    lc = linear_coloring(d)
    a, b = lc.closure
    if a != 1 or (b != 0 if S == 0 else b % S != 0):
        raise AssertionError("integer coloring existence disagrees with S")
    ind = crossing_indices_for(d, lc.at(shift, S), S)
    parity = chord_bar_parity(d)
    s = [0, 0]
    t: Counter = Counter()
    for lab, n in ind.items():
        w = d.chords[lab].sign
        if parity[lab]:
            s[n % 2] += w
        else:
            t[n] += w
    w = sum(c.sign for c in d.chords.values())
    t[0] -= w
    terms = tuple(sorted((e, v) for e, v in t.items() if v))
    return TePolynomial(S, s[0], s[1], terms, -w)
