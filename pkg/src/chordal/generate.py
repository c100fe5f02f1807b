"""Random Gauss diagrams for property tests and fuzzing."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .gauss import BAR, ChordEnd, GaussDiagram
from .moves import R3_TABLE, insertion_points, r3_insert_triangle

_TABLE = sorted(R3_TABLE)


@dataclass(frozen=True)
class DiagramConfig:
    min_chords: int = 0
    max_chords: int = 8
    components: int = 1
    max_bars: int = 0
    triangles: int = 0  # third-move pictures planted after the random part


def random_diagram(rng: random.Random, chords: int, components: int = 1, bars: int = 0) -> GaussDiagram:
    """Uniformly shuffled endpoints with random signs and directions, split over components."""
    toks = []
    for lab in range(1, chords + 1):
        s = rng.choice((1, -1))
        toks += [ChordEnd(lab, True, s), ChordEnd(lab, False, s)]
    toks += [BAR] * bars
    rng.shuffle(toks)
    cuts = sorted(rng.randint(0, len(toks)) for _ in range(components - 1))
    comps, prev = [], 0
    for c in cuts + [len(toks)]:
        comps.append(tuple(toks[prev:c]))
        prev = c
    return GaussDiagram(tuple(comps))


def plant_triangle(d: GaussDiagram, rng: random.Random) -> GaussDiagram:
    pts = insertion_points(d)
    key = rng.choice(_TABLE)
    out, _ = r3_insert_triangle(d, key, rng.choice(pts), rng.choice(pts), rng.choice(pts))
    return out


def sample(rng: random.Random, cfg: DiagramConfig = DiagramConfig()) -> GaussDiagram:
    n = rng.randint(cfg.min_chords, cfg.max_chords)
    bars = rng.randint(0, cfg.max_bars) if cfg.max_bars else 0
    d = random_diagram(rng, n, cfg.components, bars)
    for _ in range(cfg.triangles):
        d = plant_triangle(d, rng)
    return d


def sample_many(seed: int, count: int, cfg: DiagramConfig = DiagramConfig()) -> list[GaussDiagram]:
    rng = random.Random(seed)
    return [sample(rng, cfg) for _ in range(count)]
