from __future__ import annotations

import json
import subprocess
import sys

from chordal import fuzz
from chordal.cli import main
from chordal.fuzz import Invariant

VT = "O1+ O2+ U1+ U2+"
VT_MIRROR = "U1- U2- O1- O2-"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def test_writhe_polynomial(capsys):
    assert run(capsys, "invariants", "--writhe-poly", VT)[:2] == (0, {"W": "t + t^-1"})


def test_polynomial_terms(capsys):
    code, out, _ = run(capsys, "invariants", "--writhe-poly", "--terms", VT)
    assert code == 0 and out["W"] == [[1, 1, 1], [-1, 1, 1]]


def test_compare_mirror(capsys):
    code, out, _ = run(capsys, "compare", "--writhe-poly", VT, VT_MIRROR)
    assert code == 0 and out["results"] == {"W": "distinct"}
    assert "equal proves nothing" in out["note"]


def test_validate_unknot(capsys):
    code, out, _ = run(capsys, "validate", "")
    assert code == 0 and out["ok"] and out["unknot"]


def test_file_input(capsys, tmp_path):
    f = tmp_path / "vt.txt"
    f.write_text(VT + "\n")
    assert run(capsys, "invariants", "--indices", "--file", str(f))[1] == {"indices": {"1": 1, "2": -1}}


def test_jones_and_graphical(capsys):
    assert run(capsys, "jones", "O1+ U2+ O3+ U1+ O2+ U3+")[1] == {"n": 1, "V": "-t^4 + t^3 + t"}
    out = run(capsys, "jones", "--n", "2", "--graphical", VT)[1]
    assert out == {"n": 2, "graphical": {"F1 F2 F1 F2": "t^(3/2)"}}


def test_algebra_commands(capsys):
    assert run(capsys, "color", "--quandle", "dihedral3", "O1+ U2+ O3+ U1+ O2+ U3+")[1] == {"colorings": 9}
    assert run(capsys, "color", "--quandle", "indexed-dihedral3", "O1+ U2+ O3- U1+ O2+ U3-")[1] == {"colorings": 0}
    assert run(capsys, "cocycle", VT)[1] == {"Phi": "2·1"}
    out = run(capsys, "bq-index", "O1+ O2+ / U1+ O3+ U2+ U3+")[1]
    assert out["colorings"] == 4
    assert out["a"] == {"2·0 + 2·1": 2, "4·0": -3, "4·1": 1}
    assert "universal_cocycle" in run(capsys, "bq-index", "--group", "G", VT)[1]


def test_finite_type_commands(capsys):
    assert run(capsys, "finite-type", "--tuple", "1", VT)[1] == {"tuple": [1], "value": 1}
    out = run(capsys, "vassiliev", "--mark", "1,2", "--invariant", "affine", VT)[1]
    assert out["sum"] == "0"


def test_twisted(capsys):
    out = run(capsys, "twisted", "B O1+ B O2+ O3+ B U3+ U2+ U1+")[1]
    assert out == {"bars": 3, "To": "2*t^2 - 3 + t^-4"}
    out = run(capsys, "twisted", "--S", "--Te", "--tb", "affine4", "B O1+ B U1+")[1]
    assert out["S"] == 2 and out["Te"] == {"s0": 1, "s1": 0, "t_mod_S": {"0": -1}}
    # the closure offset is -2, so only moduli dividing 2 admit colorings
    assert out["colorings"] == 0
    assert run(capsys, "twisted", "--tb", "affine2", "B O1+ B U1+")[1]["colorings"] == 2


def test_parse_error_exit_code(capsys):
    code, out, err = run(capsys, "invariants", "O1+ X2")
    assert code == 1 and out is None and "error" in json.loads(err)
    assert run(capsys, "invariants", "O1+ O1+")[0] == 1
    assert run(capsys, "finite-type", "--tuple", "a,b", VT)[0] == 1


def test_resource_cap_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("CHORDAL_STATE_CAP", "2")
    assert run(capsys, "jones", "O1+ U2+ O3+ U1+ O2+ U3+")[0] == 2


def test_fuzz_clean_and_drift(capsys, monkeypatch):
    code, out, _ = run(capsys, "fuzz", "--trials", "3", "--steps", "10")
    assert code == 0 and out["ok"] and out["trials"] == 3
    monkeypatch.setitem(fuzz.INVARIANTS, "chords", Invariant("chords", lambda d: d.num_chords))
    code, out, _ = run(capsys, "fuzz", "--trials", "3", "--steps", "10", "--invariant", "chords")
    assert code == 3 and not out["ok"]
    drift = out["drifts"][0]
    assert drift["invariant"] == "chords" and drift["before"] != drift["after"] and drift["trace"]
    assert run(capsys, "fuzz", "--invariant", "nope")[0] == 1


def test_output_is_byte_identical():
    argv = [sys.executable, "-m", "chordal.cli", "fuzz", "--trials", "2", "--steps", "8", "--seed", "5"]
    a = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    assert a == b and json.loads(a)["ok"]
