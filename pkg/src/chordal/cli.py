"""Command-line front end.  Every subcommand prints one JSON document (sorted keys) to stdout.

Exit codes: 0 success, 1 parse or validation error, 2 resource cap exceeded, 3 invariant drift.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable

from . import catalog
from .biquandle import (FiniteBiquandle, a_g, count_biquandle_colorings, crossing_indices, render_a_g,
                        universal_cocycle_invariant)
from .bracket import graphical_indexed_jones, indexed_jones
from .finite_type import SingularSelection, a_tuple, vassiliev_sum
from .fuzz import INVARIANTS, TWISTED_SET, VIRTUAL_SET, FuzzConfig, run_fuzz
from .gauss import GaussCodeError, GaussDiagram, parse_gauss_code, serialize, writhe
from .generate import DiagramConfig
from .index import affine_index_polynomial, chord_indices, flat_invariant, odd_writhe, writhe_polynomial
from .laurent import LaurentPoly
from .limits import ResourceLimitError
from .quandle import CocycleFamily, IndexedQuandle, cocycle_invariant, count_colorings
from .twisted import S_invariant, T_e, T_o, TwistedBiquandle, count_twisted_colorings

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_DRIFT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True, ensure_ascii=False))


def _poly(p: LaurentPoly, terms: bool = False):
    return p.to_json() if terms else str(p)


def _diagram(args, attr: str = "code") -> GaussDiagram:
    code = getattr(args, attr, None)
    if getattr(args, "file", None) and attr == "code":
        with open(args.file, encoding="utf-8") as fh:
            code = fh.read().strip()
    if code is None:
        raise InputError("no diagram given (positional Gauss code or --file)")
    return parse_gauss_code(code)


def _load_json(spec: str):
    if os.path.exists(spec):
        with open(spec, encoding="utf-8") as fh:
            return json.load(fh)
    try:
        return json.loads(spec)
    except json.JSONDecodeError:
        raise InputError(f"{spec!r} is neither a file nor JSON")


BUILTIN_QUANDLES: dict[str, Callable[[], IndexedQuandle]] = {
    "dihedral3": catalog.dihedral3,
    "indexed-dihedral3": catalog.indexed_dihedral3,
    "parity": catalog.parity_quandle,
    **{f"family-{k}": (lambda k=k: catalog.periodic_families()[k]) for k in catalog.periodic_families()},
}


def _quandle(spec: str) -> IndexedQuandle:
    if spec in BUILTIN_QUANDLES:
        return BUILTIN_QUANDLES[spec]()
    return IndexedQuandle.from_json(_load_json(spec))


def _cocycle(spec: str) -> CocycleFamily:
    if spec == "parity":
        return catalog.parity_cocycle()
    return CocycleFamily.from_json(_load_json(spec))


def _biquandle(spec: str) -> FiniteBiquandle:
    if spec == "flip":
        return catalog.example_biquandle()
    return FiniteBiquandle.from_json(_load_json(spec))


def _twisted_biquandle(spec: str) -> TwistedBiquandle:
    if spec.startswith("affine"):
        return catalog.example_twisted(int(spec[len("affine"):] or 6))
    return TwistedBiquandle.from_json(_load_json(spec))


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}")


# --------------------------------------------------------------------------
# subcommands

def cmd_validate(args) -> int:
    d = _diagram(args)
    _emit({"ok": True, "components": d.num_components, "chords": d.num_chords, "bars": d.num_bars,
           "writhe": writhe(d), "canonical": serialize(d), "unknot": d.num_chords == 0 and d.is_knot})
    return EXIT_OK


def _index_invariants(d: GaussDiagram, args) -> dict:
    want = [k for k in ("writhe_poly", "affine", "flat", "odd_writhe", "indices") if getattr(args, k)]
    if not want:
        want = ["writhe_poly", "affine", "flat"]
    out = {}
    if "writhe_poly" in want:
        out["W"] = _poly(writhe_polynomial(d), args.terms)
    if "affine" in want:
        out["P"] = _poly(affine_index_polynomial(d), args.terms)
    if "flat" in want:
        out["F"] = _poly(flat_invariant(d), args.terms)
    if "odd_writhe" in want:
        out["odd_writhe"] = odd_writhe(d)
    if "indices" in want:
        out["indices"] = {str(k): v for k, v in sorted(chord_indices(d).items())}
    return out


def cmd_invariants(args) -> int:
    _emit(_index_invariants(_diagram(args), args))
    return EXIT_OK


def cmd_jones(args) -> int:
    d = _diagram(args)
    if args.graphical:
        g = graphical_indexed_jones(d, args.n, reduce=args.reduce)
        _emit({"n": args.n, "graphical": {k: str(v) for k, v in sorted(g.items())}})
    else:
        _emit({"n": args.n, "V": _poly(indexed_jones(d, args.n), args.terms)})
    return EXIT_OK


def cmd_finite_type(args) -> int:
    d = _diagram(args)
    xs = _ints(args.tuple)
    _emit({"tuple": list(xs), "value": a_tuple(d, xs)})
    return EXIT_OK


VASSILIEV_INVARIANTS: dict[str, Callable[[GaussDiagram], LaurentPoly]] = {
    "affine": affine_index_polynomial,
    "writhe": writhe_polynomial,
    "flat": flat_invariant,
    "jones1": lambda d: indexed_jones(d, 1),
}


def cmd_vassiliev(args) -> int:
    d = _diagram(args)
    marked = _ints(args.mark)
    if args.invariant.startswith("a_tuple:"):
        xs = _ints(args.invariant[len("a_tuple:"):].replace(";", ","))
        fn = lambda e: LaurentPoly.from_powers({0: a_tuple(e, xs)})  # noqa: E731
    elif args.invariant in VASSILIEV_INVARIANTS:
        fn = VASSILIEV_INVARIANTS[args.invariant]
    else:
        raise InputError(f"unknown invariant {args.invariant!r}")
    try:
        sel = SingularSelection(d, marked)
    except KeyError as e:
        raise InputError(str(e))
    _emit({"marked": list(marked), "invariant": args.invariant, "sum": str(vassiliev_sum(fn, sel))})
    return EXIT_OK


def cmd_color(args) -> int:
    d = _diagram(args)
    out = {}
    if args.quandle:
        out["colorings"] = count_colorings(d, _quandle(args.quandle))
    if args.bq:
        out["biquandle_colorings"] = count_biquandle_colorings(d, _biquandle(args.bq))
    if not out:
        raise InputError("give --quandle or --bq")
    _emit(out)
    return EXIT_OK


def cmd_cocycle(args) -> int:
    d = _diagram(args)
    Q = _quandle(args.quandle)
    _emit({"Phi": str(cocycle_invariant(d, Q, _cocycle(args.phi)))})
    return EXIT_OK


def cmd_bq_index(args) -> int:
    d = _diagram(args)
    B = _biquandle(args.bq)
    if args.group == "G":
        _emit({"colorings": count_biquandle_colorings(d, B),
               "universal_cocycle": str(universal_cocycle_invariant(d, B))})
        return EXIT_OK
    idx = crossing_indices(d, B)
    _emit({"colorings": count_biquandle_colorings(d, B),
           "indices": {str(k): str(v) for k, v in sorted(idx.items())},
           "a": render_a_g(a_g(d, B))})
    return EXIT_OK


def cmd_twisted(args) -> int:
    d = _diagram(args)
    out: dict = {"bars": d.num_bars}
    to, s, te = args.To, args.S, args.Te
    if not (to or s or te or args.tb):
        # default: whatever the bar parity allows
        to, te = d.num_bars % 2 == 1, d.num_bars % 2 == 0
    if args.tb:
        out["colorings"] = count_twisted_colorings(d, _twisted_biquandle(args.tb))
    if to:
        out["To"] = _poly(T_o(d), args.terms)
    if s:
        out["S"] = S_invariant(d)
    if te:
        out.update(T_e(d).to_json())
    _emit(out)
    return EXIT_OK


def cmd_fuzz(args) -> int:
    names = args.invariant or (TWISTED_SET if args.twisted else VIRTUAL_SET)
    unknown = [n for n in names if n not in INVARIANTS]
    if unknown:
        raise InputError(f"unknown invariant(s) {unknown}; choose from {sorted(INVARIANTS)}")
    cfg = FuzzConfig(trials=args.trials, steps=args.steps, seed=args.seed, cap=args.cap,
                     check_every=args.check_every, twisted=args.twisted,
                     diagrams=DiagramConfig(max_chords=args.max_chords, components=args.components,
                                            max_bars=args.max_bars if args.twisted else 0, triangles=1))
    report = run_fuzz(cfg, names)
    _emit(report.to_json())
    return EXIT_OK if report.ok else EXIT_DRIFT


COMPARE = {
    "writhe_poly": ("W", writhe_polynomial),
    "affine": ("P", affine_index_polynomial),
    "flat": ("F", flat_invariant),
    "jones": ("V1", lambda d: indexed_jones(d, 1)),
}


def cmd_compare(args) -> int:
    a, b = _diagram(args, "first"), _diagram(args, "second")
    chosen = [k for k in COMPARE if getattr(args, k)] or list(COMPARE)
    res = {}
    for k in chosen:
        name, fn = COMPARE[k]
        res[name] = "equal" if fn(a) == fn(b) else "distinct"
    _emit({"results": res,
           "note": "distinct proves the diagrams are inequivalent; equal proves nothing"})
    return EXIT_OK


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chordal", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def diag(sp, positional=True):
        if positional:
            sp.add_argument("code", nargs="?", help="Gauss code, e.g. 'O1+ O2+ U1+ U2+'")
        sp.add_argument("--file", help="read the Gauss code from a file")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--terms", action="store_true", help="polynomials as [num, den, coeff] terms")
        return sp

    diag(sub.add_parser("validate", help="parse and report a diagram")).set_defaults(fn=cmd_validate)

    sp = diag(sub.add_parser("invariants", help="index polynomials"))
    for flag in ("--writhe-poly", "--affine", "--flat", "--odd-writhe", "--indices"):
        sp.add_argument(flag, action="store_true")
    sp.set_defaults(fn=cmd_invariants)

    sp = diag(sub.add_parser("jones", help="indexed Jones polynomial"))
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--graphical", action="store_true")
    sp.add_argument("--reduce", action="store_true", help="reduce flat states by flat R1/R2 moves")
    sp.set_defaults(fn=cmd_jones)

    sp = diag(sub.add_parser("finite-type", help="a_(x1,...,xn)"))
    sp.add_argument("--tuple", required=True)
    sp.set_defaults(fn=cmd_finite_type)

    sp = diag(sub.add_parser("vassiliev", help="alternating sum over resolutions of marked chords"))
    sp.add_argument("--mark", required=True)
    sp.add_argument("--invariant", default="affine",
                    help=f"one of {sorted(VASSILIEV_INVARIANTS)} or a_tuple:x1;x2;...")
    sp.set_defaults(fn=cmd_vassiliev)

    sp = diag(sub.add_parser("color", help="count colorings"))
    sp.add_argument("--quandle", help=f"JSON file/text or one of {sorted(BUILTIN_QUANDLES)}")
    sp.add_argument("--bq", help="biquandle JSON file/text or 'flip'")
    sp.set_defaults(fn=cmd_color)

    sp = diag(sub.add_parser("cocycle", help="indexed quandle cocycle invariant"))
    sp.add_argument("--quandle", default="parity")
    sp.add_argument("--phi", default="parity")
    sp.set_defaults(fn=cmd_cocycle)

    sp = diag(sub.add_parser("bq-index", help="biquandle chord indices and a_g"))
    sp.add_argument("--bq", default="flip")
    sp.add_argument("--group", choices=("frak", "G"), default="frak")
    sp.set_defaults(fn=cmd_bq_index)

    sp = diag(sub.add_parser("twisted", help="T_o, S and T_e of a diagram with bars"))
    sp.add_argument("--To", action="store_true")
    sp.add_argument("--S", action="store_true")
    sp.add_argument("--Te", action="store_true")
    sp.add_argument("--tb", help="count colorings by a twisted biquandle (JSON or 'affineN')")
    sp.set_defaults(fn=cmd_twisted)

    sp = sub.add_parser("fuzz", help="random move walks; exit 3 on invariant drift")
    sp.add_argument("--steps", type=int, default=50)
    sp.add_argument("--trials", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--invariant", action="append", help=f"repeatable; from {sorted(INVARIANTS)}")
    sp.add_argument("--twisted", action="store_true", help="include bars and twisted moves")
    sp.add_argument("--cap", type=int, default=12)
    sp.add_argument("--check-every", type=int, default=10)
    sp.add_argument("--max-chords", type=int, default=6)
    sp.add_argument("--max-bars", type=int, default=4)
    sp.add_argument("--components", type=int, default=1)
    sp.set_defaults(fn=cmd_fuzz)

    sp = sub.add_parser("compare", help="compare two diagrams invariant by invariant")
    sp.add_argument("first")
    sp.add_argument("second")
    for flag in ("--writhe-poly", "--affine", "--flat", "--jones"):
        sp.add_argument(flag, action="store_true")
    sp.set_defaults(fn=cmd_compare)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except GaussCodeError as e:
        print(json.dumps({"error": str(e), "position": getattr(e, "position", None)}), file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as e:
        print(json.dumps({"error": str(e)}), file=sys.stderr)
        return EXIT_CAP
    except (InputError, ValueError, KeyError) as e:
        print(json.dumps({"error": str(e)}), file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
