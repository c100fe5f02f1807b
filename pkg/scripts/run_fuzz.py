#!/usr/bin/env python3
"""Run the invariance fuzzer and write a JSON report.

    python3 scripts/run_fuzz.py --trials 200 --steps 50 --out fuzz.json
    python3 scripts/run_fuzz.py --twisted --trials 200
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from chordal.fuzz import INVARIANTS, FuzzConfig, run_fuzz
from chordal.generate import DiagramConfig


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--steps", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--twisted", action="store_true")
    ap.add_argument("--components", type=int, default=1)
    ap.add_argument("--max-chords", type=int, default=6)
    ap.add_argument("--max-bars", type=int, default=5)
    ap.add_argument("--check-every", type=int, default=10)
    ap.add_argument("--invariant", action="append", choices=sorted(INVARIANTS))
    ap.add_argument("--out", help="write the report here instead of stdout")
    args = ap.parse_args()

    cfg = FuzzConfig(trials=args.trials, steps=args.steps, seed=args.seed, twisted=args.twisted,
                     check_every=args.check_every,
                     diagrams=DiagramConfig(max_chords=args.max_chords, components=args.components,
                                            max_bars=args.max_bars if args.twisted else 0, triangles=1))
    t0 = time.perf_counter()
    report = run_fuzz(cfg, args.invariant)
    doc = report.to_json() | {"seconds": round(time.perf_counter() - t0, 2)}
    text = json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        print(f"{report.trials} trials, {len(report.drifts)} drifts -> {args.out}", file=sys.stderr)
    else:
        print(text)
    return 0 if report.ok else 3


if __name__ == "__main__":
    sys.exit(main())
