"""Shared hypothesis strategies: random Gauss diagrams driven by an integer seed."""
from __future__ import annotations

import os
import random

from hypothesis import HealthCheck, settings, strategies as st

from chordal.generate import plant_triangle, random_diagram

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=400, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def diagrams(draw, max_chords: int = 7, components: int = 1, max_bars: int = 0, triangle: bool = False):
    seed = draw(st.integers(0, 2 ** 32 - 1))
    n = draw(st.integers(0, max_chords))
    bars = draw(st.integers(0, max_bars)) if max_bars else 0
    rng = random.Random(seed)
    d = random_diagram(rng, n, components, bars)
    if triangle:
        d = plant_triangle(d, rng)
    return d


knots = diagrams()
twisted_knots = diagrams(max_chords=6, max_bars=5)


# one summary line per acceptance criterion, filled in by test_acceptance.py
CRITERIA: dict[int, list[tuple[str, bool, str]]] = {}


def record(criterion: int, part: str, ok: bool, detail: str = "") -> bool:
    CRITERIA.setdefault(criterion, []).append((part, bool(ok), detail))
    return ok


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(CRITERIA):
        parts = CRITERIA[k]
        ok = all(p[1] for p in parts)
        failed = "; ".join(f"{name}: {detail}" for name, good, detail in parts if not good)
        line = f"criterion {k}: {'PASS' if ok else 'FAIL'} ({len(parts)} checks)"
        terminalreporter.write_line(line + (f" -- {failed}" if failed else ""))
