"""Gauss diagrams of virtual (and twisted) knot and link diagrams.

A diagram is a tuple of components; each component is a cyclic word of
tokens.  A token is either a signed, over/under-labelled chord endpoint or a
bar.  Virtual crossings are not recorded.

Text grammar::

    code      := component ("/" component)*
    component := token ((whitespace | ",") token)*   (possibly empty)
    token     := ("O" | "U") label ("+" | "-" | "−") | "B"

Equality is syntactic up to rotation of each component and renaming of chord
labels; it is not knot equivalence.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence, Union


class GaussCodeError(ValueError):
    """Malformed or inconsistent Gauss code.  ``position`` is a character offset when known."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message if position is None else f"{message} (at offset {position})")
        self.position = position


@dataclass(frozen=True)
class ChordEnd:
    label: int
    over: bool
    sign: int

    def __str__(self):
        return f"{'O' if self.over else 'U'}{self.label}{'+' if self.sign > 0 else '-'}"

    @property
    def passage(self) -> str:
        return "O" if self.over else "U"


@dataclass(frozen=True)
class Bar:
    def __str__(self):
        return "B"


BAR = Bar()
Token = Union[ChordEnd, Bar]
Position = tuple[int, int]


@dataclass(frozen=True)
class Chord:
    label: int
    over: Position
    under: Position
    sign: int


def _token_key(tok: Token):
    if isinstance(tok, Bar):
        return (0,)
    return (1, tok.label, 0 if tok.over else 1, 0 if tok.sign > 0 else 1)


@dataclass(frozen=True, eq=False)
class GaussDiagram:
    components: tuple[tuple[Token, ...], ...]

    def __post_init__(self):
        comps = tuple(tuple(c) for c in self.components)
        if not comps:
            raise GaussCodeError("a diagram needs at least one component")
        object.__setattr__(self, "components", comps)
        seen: dict[int, list[ChordEnd]] = {}
        for comp in comps:
            for tok in comp:
                if isinstance(tok, ChordEnd):
                    if tok.sign not in (1, -1):
                        raise GaussCodeError(f"chord {tok.label}: sign must be +1 or -1")
                    seen.setdefault(tok.label, []).append(tok)
                elif not isinstance(tok, Bar):
                    raise GaussCodeError(f"unknown token {tok!r}")
        for label, ends in seen.items():
            if len(ends) != 2:
                raise GaussCodeError(f"chord {label} occurs {len(ends)} times, expected 2")
            if ends[0].over == ends[1].over:
                kind = "Over" if ends[0].over else "Under"
                raise GaussCodeError(f"chord {label} has two {kind} passages")
            if ends[0].sign != ends[1].sign:
                raise GaussCodeError(f"sign mismatch on chord {label}")

    # derived tables -------------------------------------------------------
    @cached_property
    def chords(self) -> dict[int, Chord]:
        pos: dict[int, dict] = {}
        for ci, comp in enumerate(self.components):
            for k, tok in enumerate(comp):
                if isinstance(tok, ChordEnd):
                    d = pos.setdefault(tok.label, {"sign": tok.sign})
                    d["over" if tok.over else "under"] = (ci, k)
        return {lab: Chord(lab, d["over"], d["under"], d["sign"]) for lab, d in sorted(pos.items())}

    @property
    def labels(self) -> list[int]:
        return list(self.chords)

    @property
    def num_chords(self) -> int:
        return len(self.chords)

    @property
    def num_components(self) -> int:
        return len(self.components)

    @property
    def num_bars(self) -> int:
        return sum(1 for comp in self.components for t in comp if isinstance(t, Bar))

    @property
    def is_knot(self) -> bool:
        return len(self.components) == 1

    def token(self, pos: Position) -> Token:
        return self.components[pos[0]][pos[1]]

    def sign(self, label: int) -> int:
        return self.chords[label].sign

    def positions(self) -> Iterator[tuple[Position, Token]]:
        for ci, comp in enumerate(self.components):
            for k, tok in enumerate(comp):
                yield (ci, k), tok

    def arcs(self) -> list["Arc"]:
        """Arcs between consecutive tokens; a token-free circle is one arc."""
        out = []
        for ci, comp in enumerate(self.components):
            n = len(comp)
            if n == 0:
                out.append(Arc(ci, None, None))
            for k in range(n):
                out.append(Arc(ci, k, (k + 1) % n))
        return out

    def require_knot(self, allow_bars: bool = False):
        if not self.is_knot:
            raise ValueError("operation defined for knot diagrams (one component) only")
        if not allow_bars and self.num_bars:
            raise ValueError("operation defined for bar-free diagrams only")

    def require_label(self, label: int):
        if label not in self.chords:
            raise KeyError(f"unknown chord label {label}")

    # canonical form / equality -------------------------------------------
    @cached_property
    def canonical(self) -> tuple:
        """Relabelled token keys, each component at its minimal rotation."""
        # beam of (prefix key, relabel map) kept over all tied optima
        beam = [((), {})]
        for comp in self.components:
            best = None
            nxt = []
            n = len(comp)
            for prefix, mapping in beam:
                for r in range(max(n, 1)):
                    m = dict(mapping)
                    key = []
                    for tok in comp[r:] + comp[:r]:
                        if isinstance(tok, ChordEnd):
                            if tok.label not in m:
                                m[tok.label] = len(m) + 1
                            key.append(_token_key(ChordEnd(m[tok.label], tok.over, tok.sign)))
                        else:
                            key.append(_token_key(tok))
                    cand = prefix + (tuple(key),)
                    if best is None or cand < best:
                        best, nxt = cand, [(cand, m)]
                    elif cand == best:
                        nxt.append((cand, m))
            beam = nxt
        return beam[0][0]

    def canonical_form(self) -> "GaussDiagram":
        comps = []
        for ck in self.canonical:
            comp = []
            for k in ck:
                if k[0] == 0:
                    comp.append(BAR)
                else:
                    comp.append(ChordEnd(k[1], k[2] == 0, 1 if k[3] == 0 else -1))
            comps.append(tuple(comp))
        return GaussDiagram(tuple(comps))

    def __eq__(self, other):
        if not isinstance(other, GaussDiagram):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    def __repr__(self):
        return f"GaussDiagram({serialize(self)!r})"

    def __str__(self):
        return serialize(self)

    # rebuild helpers ------------------------------------------------------
    def replace_components(self, comps: Sequence[Sequence[Token]]) -> "GaussDiagram":
        return GaussDiagram(tuple(tuple(c) for c in comps))

    def fresh_label(self) -> int:
        return max(self.chords, default=0) + 1


@dataclass(frozen=True)
class Arc:
    """Stretch of circle ``component`` from token ``start`` to token ``end`` (both None on a bare circle)."""
    component: int
    start: int | None
    end: int | None


@dataclass(frozen=True)
class FlatDiagram:
    """Gauss diagram with chords carrying neither sign nor direction."""
    components: tuple[tuple[Union[int, Bar], ...], ...]

    def __str__(self):
        return " / ".join(" ".join("B" if isinstance(t, Bar) else f"F{t}" for t in comp)
                          for comp in self.components)


# --------------------------------------------------------------------------
# parsing / serialisation

_TOKEN_RE = re.compile(r"([OU])(\d+)([+\-−])|B")
_SEP_RE = re.compile(r"[\s,]+")


def parse_gauss_code(text: str) -> GaussDiagram:
    """Parse the text grammar into a validated :class:`GaussDiagram`."""
    comps = []
    offset = 0
    for chunk in text.split("/"):
        comp = []
        i = 0
        while i < len(chunk):
            m = _SEP_RE.match(chunk, i)
            if m:
                i = m.end()
                continue
            m = _TOKEN_RE.match(chunk, i)
            if not m:
                raise GaussCodeError(f"syntax error near {chunk[i:i + 6]!r}", offset + i)
            end = m.end()
            if end < len(chunk) and not _SEP_RE.match(chunk, end):
                raise GaussCodeError(f"syntax error near {chunk[i:end + 1]!r}", offset + end)
            if m.group(0) == "B":
                comp.append(BAR)
            else:
                sign = 1 if m.group(3) == "+" else -1
                comp.append(ChordEnd(int(m.group(2)), m.group(1) == "O", sign))
            i = end
        comps.append(tuple(comp))
        offset += len(chunk) + 1
    return GaussDiagram(tuple(comps))


def serialize(d: GaussDiagram) -> str:
    """Canonical text: relabelled, each component at its minimal rotation, joined by ``' / '``."""
    c = d.canonical_form()
    return " / ".join(" ".join(str(t) for t in comp) for comp in c.components)


def to_json(d: GaussDiagram) -> dict:
    comps = []
    for comp in d.components:
        out = []
        for t in comp:
            if isinstance(t, Bar):
                out.append({"bar": True})
            else:
                out.append({"chord": t.label, "passage": t.passage, "sign": t.sign})
        comps.append(out)
    return {"components": comps}


def from_json(data: dict | str) -> GaussDiagram:
    if isinstance(data, str):
        data = json.loads(data)
    comps = []
    for comp in data["components"]:
        toks = []
        for t in comp:
            if t.get("bar"):
                toks.append(BAR)
            else:
                if t["passage"] not in ("O", "U"):
                    raise GaussCodeError(f"bad passage {t['passage']!r}")
                toks.append(ChordEnd(int(t["chord"]), t["passage"] == "O", int(t["sign"])))
        comps.append(tuple(toks))
    return GaussDiagram(tuple(comps))


def diagram(code: str | GaussDiagram) -> GaussDiagram:
    """Accept either a diagram or its Gauss code."""
    return code if isinstance(code, GaussDiagram) else parse_gauss_code(code)


# --------------------------------------------------------------------------
# elementary operations

def _map_tokens(d: GaussDiagram, fn) -> GaussDiagram:
    return d.replace_components([[fn(t) for t in comp] for comp in d.components])


def mirror(d: GaussDiagram) -> GaussDiagram:
    """Flip every sign and swap Over/Under on every chord."""
    return _map_tokens(d, lambda t: t if isinstance(t, Bar) else ChordEnd(t.label, not t.over, -t.sign))


def reverse(d: GaussDiagram) -> GaussDiagram:
    """Reverse the orientation of every component."""
    return d.replace_components([tuple(reversed(comp)) for comp in d.components])


def crossing_change(d: GaussDiagram, label: int) -> GaussDiagram:
    d.require_label(label)
    return _map_tokens(d, lambda t: ChordEnd(t.label, not t.over, -t.sign)
                       if isinstance(t, ChordEnd) and t.label == label else t)


def virtualize(d: GaussDiagram, label: int) -> GaussDiagram:
    """Flank a crossing by virtual crossings: the sign flips, the chord direction is kept."""
    d.require_label(label)
    return _map_tokens(d, lambda t: ChordEnd(t.label, t.over, -t.sign)
                       if isinstance(t, ChordEnd) and t.label == label else t)


def delete_chord(d: GaussDiagram, label: int) -> GaussDiagram:
    """Make one crossing virtual, i.e. drop both endpoints of its chord."""
    d.require_label(label)
    return d.replace_components([[t for t in comp if not (isinstance(t, ChordEnd) and t.label == label)]
                                 for comp in d.components])


def delete_chords(d: GaussDiagram, labels: Iterable[int]) -> GaussDiagram:
    drop = set(labels)
    return d.replace_components([[t for t in comp if not (isinstance(t, ChordEnd) and t.label in drop)]
                                 for comp in d.components])


def strip_bars(d: GaussDiagram) -> GaussDiagram:
    return d.replace_components([[t for t in comp if not isinstance(t, Bar)] for comp in d.components])


def flat_projection(d: GaussDiagram) -> FlatDiagram:
    return FlatDiagram(tuple(tuple(t if isinstance(t, Bar) else t.label for t in comp)
                             for comp in d.components))


def writhe(d: GaussDiagram) -> int:
    return sum(c.sign for c in d.chords.values())


def relabel(d: GaussDiagram, mapping: dict[int, int]) -> GaussDiagram:
    return _map_tokens(d, lambda t: t if isinstance(t, Bar) else ChordEnd(mapping.get(t.label, t.label), t.over, t.sign))


def rotate(d: GaussDiagram, component: int, shift: int) -> GaussDiagram:
    comps = list(d.components)
    comp = comps[component]
    if comp:
        s = shift % len(comp)
        comps[component] = comp[s:] + comp[:s]
    return d.replace_components(comps)


def unknot(components: int = 1) -> GaussDiagram:
    return GaussDiagram(tuple(() for _ in range(components)))
