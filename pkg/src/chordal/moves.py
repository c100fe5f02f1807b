"""Reidemeister moves on Gauss diagrams, plus the bar moves of twisted diagrams.

Moves that only involve virtual crossings (and sliding a bar through a
virtual crossing) do not change a Gauss diagram, so they are not modelled.

Insertion points are ``(component, offset)``: new tokens are placed before
the token currently at ``offset``.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator

from .gauss import BAR, Bar, ChordEnd, GaussDiagram

InsertionPoint = tuple[int, int]


class MoveError(ValueError):
    """The requested move does not match the diagram locally."""


# --------------------------------------------------------------------------
# helpers

def _comps(d: GaussDiagram) -> list[list]:
    return [list(c) for c in d.components]


def _insert_many(comps: list[list], items: list[tuple[InsertionPoint, int, list]]) -> None:
    """Insert token runs; ``items`` are (point, tie-break order, tokens)."""
    # later offsets first so earlier offsets stay valid
    for (ci, k), _, toks in sorted(items, key=lambda x: (x[0][0], x[0][1], x[1]), reverse=True):
        comps[ci][k:k] = toks


def adjacent(d: GaussDiagram, p, q) -> bool:
    """True when position ``q`` immediately follows ``p`` on the same circle."""
    if p[0] != q[0]:
        return False
    n = len(d.components[p[0]])
    return n > 1 and (p[1] + 1) % n == q[1]


def insertion_points(d: GaussDiagram) -> list[InsertionPoint]:
    return [(ci, k) for ci, comp in enumerate(d.components) for k in range(max(len(comp), 1))]


# --------------------------------------------------------------------------
# first move

def r1_insert(d: GaussDiagram, at: InsertionPoint, passage: str = "O", sign: int = 1) -> GaussDiagram:
    """Add a kink: both endpoints of a new chord consecutively at ``at``; ``passage`` is met first."""
    if passage not in ("O", "U") or sign not in (1, -1):
        raise MoveError("passage must be 'O' or 'U' and sign +1 or -1")
    lab = d.fresh_label()
    first = passage == "O"
    comps = _comps(d)
    _insert_many(comps, [(at, 0, [ChordEnd(lab, first, sign), ChordEnd(lab, not first, sign)])])
    return d.replace_components(comps)


def r1_sites(d: GaussDiagram) -> list[int]:
    out = []
    for lab, c in d.chords.items():
        if adjacent(d, c.over, c.under) or adjacent(d, c.under, c.over):
            out.append(lab)
    return out


def r1_remove(d: GaussDiagram, label: int) -> GaussDiagram:
    d.require_label(label)
    if label not in r1_sites(d):
        raise MoveError(f"chord {label} is not isolated (endpoints not adjacent)")
    comps = [[t for t in comp if not (isinstance(t, ChordEnd) and t.label == label)] for comp in d.components]
    return d.replace_components(comps)


# --------------------------------------------------------------------------
# second move

@dataclass(frozen=True)
class R2Variant:
    """``parallel``: both strands run the same way; ``sign``: sign of the first chord
    met on the over strand; ``over_first``: order when both pairs share one insertion point."""
    parallel: bool = True
    sign: int = 1
    over_first: bool = True


def r2_insert(d: GaussDiagram, over_at: InsertionPoint, under_at: InsertionPoint,
              variant: R2Variant = R2Variant()) -> GaussDiagram:
    s = variant.sign
    if s not in (1, -1):
        raise MoveError("sign must be +1 or -1")
    a = d.fresh_label()
    b = a + 1
    overs = [ChordEnd(a, True, s), ChordEnd(b, True, -s)]
    unders = [ChordEnd(a, False, s), ChordEnd(b, False, -s)]
    if not variant.parallel:
        unders.reverse()
    comps = _comps(d)
    _insert_many(comps, [(over_at, 1 if variant.over_first else 0, overs),
                         (under_at, 0 if variant.over_first else 1, unders)])
    return d.replace_components(comps)


def r2_sites(d: GaussDiagram) -> list[tuple[int, int]]:
    """Pairs (a, b) removable by the second move; ``a`` is met first on the over strand."""
    out = []
    ch = d.chords
    for a, b in itertools.permutations(ch, 2):
        ca, cb = ch[a], ch[b]
        if ca.sign == cb.sign or not adjacent(d, ca.over, cb.over):
            continue
        if adjacent(d, ca.under, cb.under) or adjacent(d, cb.under, ca.under):
            out.append((a, b))
    return out


def r2_remove(d: GaussDiagram, label1: int, label2: int) -> GaussDiagram:
    d.require_label(label1)
    d.require_label(label2)
    sites = r2_sites(d)
    if (label1, label2) not in sites and (label2, label1) not in sites:
        if d.sign(label1) == d.sign(label2):
            raise MoveError(f"chords {label1}, {label2} have the same sign")
        raise MoveError(f"chords {label1}, {label2} do not form a cancelling pair")
    drop = {label1, label2}
    comps = [[t for t in comp if not (isinstance(t, ChordEnd) and t.label in drop)] for comp in d.components]
    return d.replace_components(comps)


# --------------------------------------------------------------------------
# third move
#
# Strands are named by height: T (top), M (middle), B (bottom).  Chords are
# TM, TB, MB.  A local picture is the key
#   (TM first on T, TM first on M, TB first on B, sign TM, sign TB, sign MB)
# and the table lists every key realised by three straight lines.

def _cross(u, v) -> float:
    return u[0] * v[1] - u[1] * v[0]


def _line_picture(h: int, heights: tuple[int, int, int], dirs: tuple[int, int, int]):
    """Three lines; returns the key for the configuration, heights indexed by line."""
    base = [(0.0, 0.0), (0.0, 0.0), (float(h), 0.0)]
    vec = [(1.0, 0.0), (1.0, 1.0), (-1.0, 1.0)]
    vec = [(e * x, e * y) for e, (x, y) in zip(dirs, vec)]
    meet = {frozenset((0, 1)): (0.0, 0.0), frozenset((0, 2)): (float(h), 0.0),
            frozenset((1, 2)): (h / 2, h / 2)}
    # role -> line index
    role = {r: heights.index(r) for r in range(3)}  # 0 = T, 1 = M, 2 = B
    T, M, B = role[0], role[1], role[2]

    def param(line, pt):
        return (pt[0] - base[line][0]) * vec[line][0] + (pt[1] - base[line][1]) * vec[line][1]

    def first(line, a, b):
        return param(line, meet[frozenset((line, a))]) < param(line, meet[frozenset((line, b))])

    def sign(over, under):
        return 1 if _cross(vec[over], vec[under]) > 0 else -1

    return (first(T, M, B), first(M, T, B), first(B, T, M), sign(T, M), sign(T, B), sign(M, B))


def _build_r3_table() -> frozenset:
    keys = set()
    for h in (1, -1):
        for heights in itertools.permutations(range(3)):
            for dirs in itertools.product((1, -1), repeat=3):
                before = _line_picture(h, heights, dirs)
                after = _line_picture(-h, heights, dirs)
                # sliding across the triple point reverses every strand's order
                assert after == (not before[0], not before[1], not before[2]) + before[3:]
                keys.add(before)
    return frozenset(keys)


R3_TABLE = _build_r3_table()


@dataclass(frozen=True)
class R3Site:
    tm: int
    tb: int
    mb: int


def _r3_pairs(d: GaussDiagram, tm: int, tb: int, mb: int):
    """Adjacent position pairs on strands T, M, B with the possible "first" flags, or None.

    On a circle carrying only the two endpoints both orders are possible.
    """
    c = d.chords
    pairs = []
    for p, q in ((c[tm].over, c[tb].over), (c[tm].under, c[mb].over), (c[tb].under, c[mb].under)):
        flags = [f for f, (x, y) in ((True, (p, q)), (False, (q, p))) if adjacent(d, x, y)]
        if not flags:
            return None
        pairs.append((p, q, flags))
    return pairs


def _r3_match(d: GaussDiagram, tm: int, tb: int, mb: int):
    """The pairs to transpose when (tm, tb, mb) is a valid triangle reading, else None."""
    pairs = _r3_pairs(d, tm, tb, mb)
    if pairs is None:
        return None
    signs = (d.sign(tm), d.sign(tb), d.sign(mb))
    for flags in itertools.product(*(p[2] for p in pairs)):
        if flags + signs in R3_TABLE:
            return [(p, q) for p, q, _ in pairs]
    return None


def r3_sites(d: GaussDiagram) -> list[R3Site]:
    return [R3Site(*t) for t in itertools.permutations(d.chords, 3) if _r3_match(d, *t) is not None]


def r3_apply(d: GaussDiagram, label1: int, label2: int, label3: int, side=None) -> GaussDiagram:
    """Slide one strand across the crossing of the other two.

    Labels are tried first as (TM, TB, MB), then in every other role order.
    Small diagrams can carry several triangle readings of the same three
    chords; each is a legal move.  ``side`` is accepted for interface
    symmetry: a role assignment determines the move uniquely.
    """
    labels = (label1, label2, label3)
    if len(set(labels)) != 3:
        raise MoveError("third move needs three distinct chords")
    for lab in labels:
        d.require_label(lab)
    for roles in itertools.permutations(labels):
        pairs = _r3_match(d, *roles)
        if pairs is not None:
            comps = _comps(d)
            for p, q in pairs:
                comps[p[0]][p[1]], comps[q[0]][q[1]] = comps[q[0]][q[1]], comps[p[0]][p[1]]
            return d.replace_components(comps)
    raise MoveError(f"chords {labels} do not form a third-move configuration")


def r3_insert_triangle(d: GaussDiagram, key: tuple, at_t: InsertionPoint, at_m: InsertionPoint,
                       at_b: InsertionPoint) -> tuple[GaussDiagram, R3Site]:
    """Plant three new chords realising table entry ``key`` at the given points."""
    if key not in R3_TABLE:
        raise MoveError("key is not a third-move picture")
    t_first, m_first, b_first, s_tm, s_tb, s_mb = key
    tm = d.fresh_label()
    tb, mb = tm + 1, tm + 2
    T = [ChordEnd(tm, True, s_tm), ChordEnd(tb, True, s_tb)]
    M = [ChordEnd(tm, False, s_tm), ChordEnd(mb, True, s_mb)]
    B = [ChordEnd(tb, False, s_tb), ChordEnd(mb, False, s_mb)]
    for run, f in ((T, t_first), (M, m_first), (B, b_first)):
        if not f:
            run.reverse()
    comps = _comps(d)
    _insert_many(comps, [(at_t, 2, T), (at_m, 1, M), (at_b, 0, B)])
    return d.replace_components(comps), R3Site(tm, tb, mb)


# --------------------------------------------------------------------------
# twisted moves

def bar_pair_insert(d: GaussDiagram, at: InsertionPoint) -> GaussDiagram:
    comps = _comps(d)
    _insert_many(comps, [(at, 0, [BAR, BAR])])
    return d.replace_components(comps)


def bar_pair_sites(d: GaussDiagram) -> list[tuple[int, int]]:
    """(component, offset) of the first bar of each adjacent bar pair."""
    out = []
    for ci, comp in enumerate(d.components):
        n = len(comp)
        if n == 2 and all(isinstance(t, Bar) for t in comp):
            out.append((ci, 0))
            continue
        for k in range(n):
            if n > 1 and isinstance(comp[k], Bar) and isinstance(comp[(k + 1) % n], Bar):
                out.append((ci, k))
    return out


def bar_pair_cancel(d: GaussDiagram, site: tuple[int, int]) -> GaussDiagram:
    ci, k = site
    if site not in bar_pair_sites(d):
        raise MoveError(f"no adjacent bar pair at {site}")
    comp = list(d.components[ci])
    n = len(comp)
    drop = {k, (k + 1) % n}
    comps = _comps(d)
    comps[ci] = [t for j, t in enumerate(comp) if j not in drop]
    return d.replace_components(comps)


def _flanked(d: GaussDiagram, pos) -> bool:
    comp = d.components[pos[0]]
    n = len(comp)
    return n >= 3 and isinstance(comp[(pos[1] - 1) % n], Bar) and isinstance(comp[(pos[1] + 1) % n], Bar)


def _flank(d: GaussDiagram, pos) -> set:
    n = len(d.components[pos[0]])
    return {(pos[0], (pos[1] - 1) % n), (pos[0], (pos[1] + 1) % n)}


def flip_sites(d: GaussDiagram) -> list[int]:
    """Chords whose two endpoints are each flanked by bars on both sides, using four distinct bars."""
    return [lab for lab, c in d.chords.items()
            if _flanked(d, c.over) and _flanked(d, c.under) and len(_flank(d, c.over) | _flank(d, c.under)) == 4]


def flip_remove(d: GaussDiagram, label: int) -> GaussDiagram:
    """Remove the four flanking bars of a chord and swap its over/under passages (sign kept)."""
    d.require_label(label)
    if label not in flip_sites(d):
        raise MoveError(f"chord {label} is not flanked by bars")
    c = d.chords[label]
    drop = _flank(d, c.over) | _flank(d, c.under)
    comps = []
    for ci, comp in enumerate(d.components):
        out = []
        for k, t in enumerate(comp):
            if (ci, k) in drop:
                continue
            if isinstance(t, ChordEnd) and t.label == label:
                t = ChordEnd(label, not t.over, t.sign)
            out.append(t)
        comps.append(out)
    return d.replace_components(comps)


def flip_insert(d: GaussDiagram, label: int) -> GaussDiagram:
    """Inverse of :func:`flip_remove`: surround both endpoints by bars and swap passages."""
    d.require_label(label)
    comps = []
    for comp in d.components:
        out = []
        for t in comp:
            if isinstance(t, ChordEnd) and t.label == label:
                out += [BAR, ChordEnd(label, not t.over, t.sign), BAR]
            else:
                out.append(t)
        comps.append(out)
    return d.replace_components(comps)


TWISTED_KINDS = ("bar_pair_insert", "bar_pair_cancel", "flip_insert", "flip_remove")


def twisted_move(d: GaussDiagram, kind: str, site) -> GaussDiagram:
    if kind == "bar_pair_insert":
        return bar_pair_insert(d, site)
    if kind == "bar_pair_cancel":
        return bar_pair_cancel(d, site)
    if kind == "flip_insert":
        return flip_insert(d, site)
    if kind == "flip_remove":
        return flip_remove(d, site)
    raise MoveError(f"unknown twisted move {kind!r}")


# --------------------------------------------------------------------------
# random walks

@dataclass(frozen=True)
class Step:
    kind: str
    args: tuple

    def __str__(self):
        return f"{self.kind}{self.args}"


def _candidates(d: GaussDiagram, rng: random.Random, cap: int, twisted: bool) -> dict[str, list]:
    n = d.num_chords
    pts = insertion_points(d)
    kinds: dict[str, list] = {}
    if n + 1 <= cap:
        kinds["r1_insert"] = [(p, o, s) for p in pts for o in "OU" for s in (1, -1)]
    if r1s := r1_sites(d):
        kinds["r1_remove"] = [(lab,) for lab in r1s]
    if n + 2 <= cap:
        # sampled lazily: the full product is large
        a, b = rng.choice(pts), rng.choice(pts)
        kinds["r2_insert"] = [(a, b, R2Variant(rng.random() < 0.5, rng.choice((1, -1)), rng.random() < 0.5))]
    if r2s := r2_sites(d):
        kinds["r2_remove"] = r2s
    if r3s := r3_sites(d):
        kinds["r3"] = [(s.tm, s.tb, s.mb) for s in r3s]
    if twisted:
        if d.num_bars + 2 <= 2 * cap:
            kinds["bar_pair_insert"] = [(p,) for p in pts]
        if bp := bar_pair_sites(d):
            kinds["bar_pair_cancel"] = [(s,) for s in bp]
        if n and d.num_bars + 4 <= 2 * cap:
            kinds["flip_insert"] = [(lab,) for lab in d.chords]
        if fs := flip_sites(d):
            kinds["flip_remove"] = [(lab,) for lab in fs]
    return kinds


def apply_step(d: GaussDiagram, step: Step) -> GaussDiagram:
    k, a = step.kind, step.args
    if k == "r1_insert":
        return r1_insert(d, *a)
    if k == "r1_remove":
        return r1_remove(d, *a)
    if k == "r2_insert":
        return r2_insert(d, *a)
    if k == "r2_remove":
        return r2_remove(d, *a)
    if k == "r3":
        return r3_apply(d, *a)
    return twisted_move(d, k, *a)


def random_walk_trace(d: GaussDiagram, steps: int, seed: int = 0, cap: int = 16,
                      twisted: bool = False) -> Iterator[tuple[Step, GaussDiagram]]:
    """Yield (step, diagram after step); a move kind is drawn uniformly among applicable kinds."""
    rng = random.Random(seed)
    for _ in range(steps):
        kinds = _candidates(d, rng, cap, twisted)
        if not kinds:
            return
        kind = rng.choice(sorted(kinds))
        step = Step(kind, rng.choice(kinds[kind]))
        d = apply_step(d, step)
        yield step, d


def random_walk(d: GaussDiagram, steps: int, seed: int = 0, cap: int = 16, twisted: bool = False) -> GaussDiagram:
    for _, d in random_walk_trace(d, steps, seed, cap, twisted):
        pass
    return d
