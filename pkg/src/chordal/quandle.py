"""Finite indexed quandles: axioms, colorings, indexed 2-cocycles and abelian extensions.

Operations are stored periodically: ``tables[i % period][a][b] = a *_i b``.
Arcs of a knot diagram are cut at under passages only.  At a crossing of
index ``i`` with over arc ``o``: positive crossings give
``under_out = under_in *_i o``, negative ones ``under_in = under_out *_i o``.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Sequence

from .abelian import FgAbelianGroup, GroupRingElement
from .coloring import ColoringProblem, inverse_table
from .gauss import ChordEnd, GaussDiagram, diagram
from .index import chord_indices
from .laurent import LaurentPoly


@dataclass(frozen=True)
class IndexedQuandle:
    size: int
    period: int
    tables: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        tabs = tuple(tuple(tuple(int(x) for x in row) for row in t) for t in self.tables)
        object.__setattr__(self, "tables", tabs)
        if self.period < 1 or len(tabs) != self.period:
            raise ValueError("need one table per residue")
        for t in tabs:
            if len(t) != self.size or any(len(r) != self.size for r in t):
                raise ValueError("tables must be size x size")
            if any(not 0 <= x < self.size for r in t for x in r):
                raise ValueError("table entries out of range")

    def op(self, i: int, a: int, b: int) -> int:
        return self.tables[i % self.period][a][b]

    @classmethod
    def from_function(cls, size: int, period: int, fn) -> "IndexedQuandle":
        return cls(size, period, tuple(tuple(tuple(fn(i, a, b) for b in range(size)) for a in range(size))
                                       for i in range(period)))

    @classmethod
    def constant(cls, table: Sequence[Sequence[int]], period: int = 1) -> "IndexedQuandle":
        """An ordinary quandle with the same operation at every index."""
        return cls(len(table), period, tuple(tuple(map(tuple, table)) for _ in range(period)))

    def restrict(self) -> "IndexedQuandle":
        """The index-0 quandle as a one-residue family."""
        return IndexedQuandle(self.size, 1, (self.tables[0],))

    def to_json(self) -> dict:
        return {"size": self.size, "period": self.period, "tables": [list(map(list, t)) for t in self.tables]}

    @classmethod
    def from_json(cls, data) -> "IndexedQuandle":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["size"]), int(data["period"]), data["tables"])


def check_indexed_quandle(Q: IndexedQuandle) -> list[tuple]:
    """Every violated axiom instance; empty means Q is an indexed quandle."""
    bad = []
    q, m = Q.size, Q.period
    for a in range(q):
        if Q.op(0, a, a) != a:
            bad.append(("idempotent", a))
    for i in range(m):
        for b in range(q):
            if len({Q.op(i, a, b) for a in range(q)}) != q:
                bad.append(("bijective", i, b))
    for i in range(m):
        for j in range(m):
            for a in range(q):
                for b in range(q):
                    ab = Q.op(i, a, b)
                    for c in range(q):
                        if Q.op(j, ab, c) != Q.op(i, Q.op(j, a, c), Q.op(j - i, b, c)):
                            bad.append(("distributive", i, j, a, b, c))
    return bad


# --------------------------------------------------------------------------
# colorings

@dataclass(frozen=True)
class CrossingArcs:
    label: int
    sign: int
    index: int
    over: int
    under_in: int
    under_out: int


def quandle_arcs(d: GaussDiagram) -> tuple[int, list[CrossingArcs]]:
    """Number of arcs (cut at under passages) and the arcs met at each crossing."""
    arc_of: dict[tuple[int, int], int] = {}
    crossing: dict[int, dict] = {}
    count = 0
    for ci, comp in enumerate(d.components):
        unders = [k for k, t in enumerate(comp) if isinstance(t, ChordEnd) and not t.over]
        if not unders:
            for k in range(len(comp)):
                arc_of[(ci, k)] = count
            count += 1
            continue
        m = len(unders)
        n = len(comp)
        for j, u in enumerate(unders):
            a = count + j
            k = (u + 1) % n
            while k != unders[(j + 1) % m]:
                arc_of[(ci, k)] = a
                k = (k + 1) % n
            lab = comp[u].label
            crossing.setdefault(lab, {})["in"] = count + (j - 1) % m
            crossing[lab]["out"] = a
        count += m
    ind = chord_indices(d) if d.num_chords else {}
    out = []
    for lab, ch in d.chords.items():
        out.append(CrossingArcs(lab, ch.sign, ind[lab], arc_of[ch.over],
                                crossing[lab]["in"], crossing[lab]["out"]))
    return count, out


def _problem(d: GaussDiagram, Q: IndexedQuandle) -> tuple[ColoringProblem, list[CrossingArcs]]:
    d.require_knot()
    n, xs = quandle_arcs(d)
    prob = ColoringProblem(n, Q.size)
    for x in xs:
        tab = Q.tables[x.index % Q.period]
        inv = inverse_table(tab)
        src, dst = (x.under_in, x.under_out) if x.sign > 0 else (x.under_out, x.under_in)
        prob.add((src, x.over), (dst,), lambda s, o, tab=tab: (tab[s][o],))
        prob.add((dst, x.over), (src,), lambda t, o, inv=inv: (inv[t][o],))
    return prob, xs


def enumerate_colorings(d: GaussDiagram | str, Q: IndexedQuandle) -> list[tuple[int, ...]]:
    prob, _ = _problem(diagram(d), Q)
    return list(prob.solutions())


def count_colorings(d: GaussDiagram | str, Q: IndexedQuandle) -> int:
    prob, _ = _problem(diagram(d), Q)
    return prob.count()


# --------------------------------------------------------------------------
# cocycles

@dataclass(frozen=True)
class CocycleFamily:
    """phi_i(a, b) in additive coordinates of ``group``; ``values[i % period][a][b]``."""
    group: FgAbelianGroup
    period: int
    values: tuple

    def __post_init__(self):
        vals = tuple(tuple(tuple(self.group.reduce(v) for v in row) for row in t) for t in self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) != self.period:
            raise ValueError("need one value table per residue")

    def phi(self, i: int, a: int, b: int) -> tuple[int, ...]:
        return self.values[i % self.period][a][b]

    @classmethod
    def from_function(cls, group: FgAbelianGroup, size: int, period: int, fn) -> "CocycleFamily":
        return cls(group, period, tuple(tuple(tuple(group.reduce(fn(i, a, b)) for b in range(size))
                                              for a in range(size)) for i in range(period)))

    @classmethod
    def trivial(cls, group: FgAbelianGroup, size: int, period: int = 1) -> "CocycleFamily":
        return cls.from_function(group, size, period, lambda i, a, b: group.zero())

    def to_json(self) -> dict:
        return {"group": self.group.to_json(), "period": self.period,
                "values": [[[list(v) for v in row] for row in t] for t in self.values]}

    @classmethod
    def from_json(cls, data) -> "CocycleFamily":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(FgAbelianGroup.from_json(data["group"]), int(data["period"]), data["values"])


def _residues(Q: IndexedQuandle, psi: CocycleFamily) -> int:
    # common period of the two families
    from math import lcm
    return lcm(Q.period, psi.period)


def check_cocycle(Q: IndexedQuandle, psi: CocycleFamily) -> list[tuple]:
    """Violated instances of phi_I(x,y) + phi_J(x *_I y, z) = phi_J(x,z) + phi_I(x *_J z, y *_{J-I} z)
    and of phi_0(x, x) = 0."""
    G = psi.group
    bad = []
    q = Q.size
    for x in range(q):
        if any(psi.phi(0, x, x)):
            bad.append(("normalised", x))
    m = _residues(Q, psi)
    for I in range(m):
        for J in range(m):
            for x in range(q):
                for y in range(q):
                    xy = Q.op(I, x, y)
                    for z in range(q):
                        lhs = G.add(psi.phi(I, x, y), psi.phi(J, xy, z))
                        rhs = G.add(psi.phi(J, x, z), psi.phi(I, Q.op(J, x, z), Q.op(J - I, y, z)))
                        if lhs != rhs:
                            bad.append(("cocycle", I, J, x, y, z))
    return bad


def coloring_weights(d: GaussDiagram | str, Q: IndexedQuandle, psi: CocycleFamily) -> list[tuple[int, ...]]:
    """Per coloring, the sum over crossings of w * phi_i(source, over)."""
    d = diagram(d)
    prob, xs = _problem(d, Q)
    G = psi.group
    out = []
    for col in prob.solutions():
        total = G.zero()
        for x in xs:
            src = col[x.under_in] if x.sign > 0 else col[x.under_out]
            total = G.add(total, G.scale(psi.phi(x.index, src, col[x.over]), x.sign))
        out.append(total)
    return out


def cocycle_invariant(d: GaussDiagram | str, Q: IndexedQuandle, psi: CocycleFamily) -> GroupRingElement:
    """Formal sum over colorings of the product of crossing weights (additively: the sum)."""
    if check_cocycle(Q, psi):
        raise ValueError("psi is not an indexed quandle 2-cocycle for Q")
    return GroupRingElement(coloring_weights(d, Q, psi))


def abelian_extension(Q: IndexedQuandle, psi: CocycleFamily) -> tuple[IndexedQuandle, list[tuple]]:
    """E(Q, A, psi) on A x Q; element (a, x) has number index(a) * |Q| + x.  Returns (quandle, A elements)."""
    G = psi.group
    if not G.is_finite:
        raise ValueError("abelian extension needs a finite coefficient group")
    elems = G.elements()
    pos = {e: k for k, e in enumerate(elems)}
    q = Q.size
    m = _residues(Q, psi)

    def op(i, u, v):
        a1, x1 = divmod(u, q)
        _, x2 = divmod(v, q)
        a = G.add(elems[a1], psi.phi(i, x1, x2))
        return pos[a] * q + Q.op(i, x1, x2)

    return IndexedQuandle.from_function(len(elems) * q, m, op), elems


# --------------------------------------------------------------------------
# the writhe polynomial as a cocycle invariant

def writhe_cocycle_invariant(d: GaussDiagram | str) -> LaurentPoly:
    """One-element quandle, phi_i(a, a) = t^i (i != 0), phi_0 = 0: the single coloring's weight.

    The coefficient group Z[t, 1/t] is infinite and the family is not periodic,
    so this case is evaluated directly from the crossing data.
    """
    d = diagram(d)
    _, xs = quandle_arcs(d)
    total = LaurentPoly()
    for x in xs:
        if x.index:
            total = total + LaurentPoly.from_powers({x.index: x.sign})
    return total


# --------------------------------------------------------------------------
# standard families

def dihedral(n: int, period: int = 1, shift: bool = False) -> IndexedQuandle:
    """a *_i b = 2b - a (+ i when ``shift``) mod n."""
    return IndexedQuandle.from_function(n, period, lambda i, a, b: (2 * b - a + (i if shift else 0)) % n)


def alexander_family(n: int, t: int, period: int | None = None) -> IndexedQuandle:
    """a *_i b = t a + (1 - t) b + i mod n; ``t`` must be a unit mod n."""
    m = period or n
    return IndexedQuandle.from_function(n, m, lambda i, a, b: (t * a + (1 - t) * b + i) % n)


def zero_only_family(table: Sequence[Sequence[int]], period: int) -> IndexedQuandle:
    """*_0 is the given quandle operation, *_i (i not 0 mod period) is the trivial action."""
    q = len(table)
    return IndexedQuandle.from_function(q, period, lambda i, a, b: table[a][b] if i % period == 0 else a)


def group_family(elements: Sequence, mul, inv, aut, z, period: int) -> IndexedQuandle:
    """a *_i b = aut(a b^-1) b z^i over a finite group; ``z`` central of order dividing ``period``."""
    idx = {e: k for k, e in enumerate(elements)}

    def zpow(i):
        out = elements[0]
        for _ in range(i % period):
            out = mul(out, z)
        return out

    def op(i, a, b):
        A, B = elements[a], elements[b]
        return idx[mul(mul(aut(mul(A, inv(B))), B), zpow(i))]

    return IndexedQuandle.from_function(len(elements), period, op)


def is_connected(Q: IndexedQuandle) -> bool:
    """Connectivity of the index-0 quandle (one orbit of the inner action)."""
    seen = {0}
    stack = [0]
    while stack:
        a = stack.pop()
        for b in range(Q.size):
            for c in (Q.op(0, a, b),):
                if c not in seen:
                    seen.add(c)
                    stack.append(c)
        # inverse translations too
        for b in range(Q.size):
            for c in range(Q.size):
                if Q.op(0, c, b) == a and c not in seen:
                    seen.add(c)
                    stack.append(c)
    return len(seen) == Q.size


def all_indexed_quandles(size: int, period: int) -> list[IndexedQuandle]:
    """Every indexed quandle on {0..size-1} with the given period."""
    perms = list(itertools.permutations(range(size)))
    tables = [tuple(tuple(cols[b][a] for b in range(size)) for a in range(size))
              for cols in itertools.product(perms, repeat=size)]
    out = []
    for ts in itertools.product(tables, repeat=period):
        Q = IndexedQuandle(size, period, ts)
        if not check_indexed_quandle(Q):
            out.append(Q)
    return out
