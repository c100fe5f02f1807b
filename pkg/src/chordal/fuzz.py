"""Invariance fuzzing: random diagrams, random move walks, and a registry of invariants to compare."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .biquandle import a_g, flip_biquandle, render_a_g
from .bracket import indexed_jones
from .catalog import parity_cocycle, parity_quandle
from .finite_type import a_tuple
from .gauss import GaussDiagram, serialize
from .generate import DiagramConfig, sample
from .index import affine_index_polynomial, flat_invariant, writhe_polynomial
from .moves import Step, random_walk_trace
from .quandle import cocycle_invariant
from .twisted import S_invariant, T_e, T_o

TUPLES = ((1,), (-1,), (2,), (1, -1), (2, 1), (2, 1, -1))


@dataclass(frozen=True)
class Invariant:
    name: str
    fn: Callable[[GaussDiagram], object]
    links: bool = False  # defined on multi-component diagrams
    bars: str = "none"  # "none", "odd" or "even"

    def applies(self, d: GaussDiagram) -> bool:
        if not self.links and not d.is_knot:
            return False
        if self.bars == "none":
            return d.num_bars == 0
        return d.num_bars % 2 == (1 if self.bars == "odd" else 0)

    def value(self, d: GaussDiagram) -> str:
        """Comparable rendering of the invariant."""
        return str(self.fn(d))


def _a_tuples(d):
    return [a_tuple(d, t) for t in TUPLES]


def _phi(d):
    return cocycle_invariant(d, parity_quandle(), parity_cocycle())


def _a_g(d):
    return sorted(render_a_g(a_g(d, flip_biquandle())).items())


INVARIANTS: dict[str, Invariant] = {inv.name: inv for inv in (
    Invariant("writhe", writhe_polynomial),
    Invariant("affine", affine_index_polynomial),
    Invariant("flat", flat_invariant),
    Invariant("a_tuple", _a_tuples),
    Invariant("jones0", lambda d: indexed_jones(d, 0)),
    Invariant("jones1", lambda d: indexed_jones(d, 1)),
    Invariant("jones2", lambda d: indexed_jones(d, 2)),
    Invariant("phi", _phi),
    Invariant("a_g", _a_g, links=True),
    Invariant("To", T_o, bars="odd"),
    Invariant("S", S_invariant, bars="even"),
    Invariant("Te", T_e, bars="even"),
)}

VIRTUAL_SET = ("writhe", "affine", "flat", "a_tuple", "jones0", "jones1", "jones2", "phi", "a_g")
TWISTED_SET = ("To", "S", "Te")


@dataclass(frozen=True)
class FuzzConfig:
    trials: int = 200
    steps: int = 50
    seed: int = 0
    cap: int = 12
    check_every: int = 10
    twisted: bool = False
    diagrams: DiagramConfig = DiagramConfig(max_chords=6, triangles=1)


@dataclass
class Drift:
    invariant: str
    trial: int
    start: str
    trace: list[tuple[str, str]]  # (step, diagram after the step) up to the first drifting step
    before: str
    after: str

    def to_json(self) -> dict:
        return {"invariant": self.invariant, "trial": self.trial, "start": self.start,
                "trace": [{"step": s, "diagram": d} for s, d in self.trace],
                "before": self.before, "after": self.after}


@dataclass
class FuzzReport:
    trials: int = 0
    checks: dict[str, int] = field(default_factory=dict)
    drifts: list[Drift] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.drifts

    def to_json(self) -> dict:
        return {"trials": self.trials, "checks": dict(sorted(self.checks.items())),
                "drifts": [x.to_json() for x in self.drifts], "ok": self.ok}


def trial_seed(seed: int, trial: int) -> int:
    return random.Random(f"{seed}:{trial}").getrandbits(64)


def _witness(inv: Invariant, trial: int, d0: GaussDiagram, steps: list[tuple[Step, GaussDiagram]]) -> Drift:
    ref = inv.value(d0)
    trace = []
    for st, e in steps:
        trace.append((str(st), serialize(e)))
        v = inv.value(e)
        if v != ref:
            return Drift(inv.name, trial, serialize(d0), trace, ref, v)
    raise AssertionError("drift not reproduced on replay")


def run_trial(cfg: FuzzConfig, trial: int, names) -> tuple[dict[str, int], list[Drift]]:
    s = trial_seed(cfg.seed, trial)
    rng = random.Random(s)
    d0 = sample(rng, cfg.diagrams)
    invs = [INVARIANTS[n] for n in names if INVARIANTS[n].applies(d0)]
    ref = {inv.name: inv.value(d0) for inv in invs}
    checks = {inv.name: 0 for inv in invs}
    drifts: list[Drift] = []
    history: list[tuple[Step, GaussDiagram]] = []
    live = list(invs)
    for k, (st, e) in enumerate(random_walk_trace(d0, cfg.steps, s, cfg.cap, cfg.twisted), 1):
        history.append((st, e))
        if k % cfg.check_every and k != cfg.steps:
            continue
        for inv in list(live):
            checks[inv.name] += 1
            if inv.value(e) != ref[inv.name]:
                drifts.append(_witness(inv, trial, d0, history))
                live.remove(inv)
    return checks, drifts


def run_fuzz(cfg: FuzzConfig, names=None) -> FuzzReport:
    names = list(names or (TWISTED_SET if cfg.twisted else VIRTUAL_SET))
    unknown = [n for n in names if n not in INVARIANTS]
    if unknown:
        raise KeyError(f"unknown invariant(s): {', '.join(unknown)}")
    report = FuzzReport()
    for t in range(cfg.trials):
        checks, drifts = run_trial(cfg, t, names)
        report.trials += 1
        for n, c in checks.items():
            report.checks[n] = report.checks.get(n, 0) + c
        report.drifts += drifts
    return report
