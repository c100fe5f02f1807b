from __future__ import annotations

import pytest

from chordal.fuzz import INVARIANTS, FuzzConfig, Invariant, run_fuzz, run_trial, trial_seed
from chordal.gauss import parse_gauss_code
from chordal.generate import DiagramConfig


def test_trials_are_reproducible():
    cfg = FuzzConfig(trials=4, steps=20, seed=9)
    assert run_fuzz(cfg).to_json() == run_fuzz(cfg).to_json()
    assert trial_seed(9, 0) != trial_seed(9, 1) != trial_seed(10, 1)


def test_small_runs_are_clean():
    assert run_fuzz(FuzzConfig(trials=5, steps=20)).ok
    tw = FuzzConfig(trials=5, steps=20, twisted=True, diagrams=DiagramConfig(max_chords=5, max_bars=4, triangles=1))
    assert run_fuzz(tw).ok


def test_drift_witness_replays_to_first_change():
    fake = Invariant("chords", lambda d: d.num_chords)
    checks, drifts = run_trial(FuzzConfig(steps=30, check_every=30), 0, ["writhe"])
    assert not drifts and checks["writhe"] == 1
    INVARIANTS["chords"] = fake
    try:
        _, drifts = run_trial(FuzzConfig(steps=30, check_every=10), 0, ["chords"])
    finally:
        del INVARIANTS["chords"]
    (drift,) = drifts
    # the witness stops at the first step where the value differs
    last = parse_gauss_code(drift.trace[-1][1])
    assert str(last.num_chords) == drift.after != drift.before
    assert all(str(parse_gauss_code(d).num_chords) == drift.before for _, d in drift.trace[:-1])


def test_applicability():
    assert INVARIANTS["To"].applies(parse_gauss_code("B O1+ U1+"))
    assert not INVARIANTS["To"].applies(parse_gauss_code("B O1+ B U1+"))
    assert not INVARIANTS["writhe"].applies(parse_gauss_code("O1+ / U1+"))
    assert INVARIANTS["a_g"].applies(parse_gauss_code("O1+ / U1+"))


def test_unknown_invariant():
    with pytest.raises(KeyError):
        run_fuzz(FuzzConfig(trials=1), ["nope"])
