#!/usr/bin/env python3
"""Enumerate small diagrams reproducing two published example values.

* knots with three positive chords and three bars whose T_o is 2t^2 + t^-4 - 3;
* two-component links with three positive chords whose flip-biquandle data are
  4 colorings, a(1+1+t+t) = 2 and a(t+t+t+t) = 1.

Diagrams are listed once per relabelling/rotation class.
"""
from __future__ import annotations

import argparse
import itertools

from chordal.biquandle import a_g, count_biquandle_colorings, flip_biquandle, render_a_g
from chordal.gauss import parse_gauss_code
from chordal.laurent import LaurentPoly
from chordal.twisted import T_o

TARGET_TO = LaurentPoly.from_powers({2: 2, -4: 1, 0: -3})


def _relabel(comps: list[list[str]]) -> tuple[tuple[str, ...], ...]:
    names: dict[str, str] = {}
    out = []
    for comp in comps:
        row = []
        for t in comp:
            if t == "B":
                row.append(t)
                continue
            lab = t[1:-1]
            names.setdefault(lab, str(len(names) + 1))
            row.append(t[0] + names[lab] + t[-1])
        out.append(tuple(row))
    return tuple(out)


def canonical(*comps: list[str]) -> tuple[tuple[str, ...], ...]:
    """Least relabelling over component orders and rotations of each component."""
    best = None
    for order in itertools.permutations(comps):
        for shifts in itertools.product(*(range(max(len(c), 1)) for c in order)):
            rot = [list(c[k:]) + list(c[:k]) for c, k in zip(order, shifts)]
            key = _relabel(rot)
            best = key if best is None or key < best else best
    return best


def _code(key) -> str:
    return " / ".join(" ".join(c) for c in key)


def twisted_readings() -> list[str]:
    toks = ["O1+", "U1+", "O2+", "U2+", "O3+", "U3+", "B", "B", "B"]
    seen, hits = set(), []
    for perm in set(itertools.permutations(toks)):
        key = canonical(list(perm))
        if key in seen:
            continue
        seen.add(key)
        if T_o(_code(key)) == TARGET_TO:
            hits.append(_code(key))
    return sorted(hits)


def link_readings() -> list[str]:
    toks = ["O1+", "U1+", "O2+", "U2+", "O3+", "U3+"]
    B = flip_biquandle()
    seen, hits = set(), []
    for perm in itertools.permutations(toks):
        for cut in range(1, len(toks)):
            key = canonical(list(perm[:cut]), list(perm[cut:]))
            if key in seen:
                continue
            seen.add(key)
            d = parse_gauss_code(_code(key))
            if count_biquandle_colorings(d, B) != 4:
                continue
            vals = render_a_g(a_g(d, B))
            if vals.get("2·0 + 2·1") == 2 and vals.get("4·1") == 1:
                hits.append(_code(key))
    return sorted(hits)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--which", choices=("twisted", "link", "both"), default="both")
    args = ap.parse_args()
    if args.which in ("twisted", "both"):
        hits = twisted_readings()
        print(f"three-bar knots with T_o = {TARGET_TO}: {len(hits)}")
        for h in hits:
            print("  ", h)
    if args.which in ("link", "both"):
        hits = link_readings()
        print(f"two-component links with the flip-biquandle values: {len(hits)}")
        for h in hits:
            print("  ", h)


if __name__ == "__main__":
    main()
