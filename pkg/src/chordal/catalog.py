"""Named diagrams and algebraic structures used by tests, scripts and the CLI."""
from __future__ import annotations

from .abelian import FgAbelianGroup
from .biquandle import FiniteBiquandle, flip_biquandle
from .gauss import GaussDiagram, parse_gauss_code
from .quandle import (CocycleFamily, IndexedQuandle, alexander_family, dihedral, group_family,
                      zero_only_family)
from .twisted import TwistedBiquandle, affine_twisted

# ----------------------------------------------------------------------------
# diagrams

VIRTUAL_TREFOIL = "O1+ O2+ U1+ U2+"
CLASSICAL_TREFOIL = "O1+ U2+ O3+ U1+ O2+ U3+"
# classical trefoil with one crossing made virtual and the diagram re-signed;
# indices are -2, 2, 0
VIRTUALIZED_TREFOIL = "O1+ U2+ O3- U1+ O2+ U3-"
# three bars, three mutually non-crossing positive chords; indices 2, 2, -4
TWISTED_THREE_BARS = "B O1+ B O2+ O3+ B U3+ U2+ U1+"
# two components, three positive crossings; flip-biquandle indices 1+1+t+t, t+t+t+t, 1+1+t+t
TWO_COMPONENT_LINK = "O1+ O2+ / U1+ O3+ U2+ U3+"
POSITIVE_KINK = "O1+ U1+"
NEGATIVE_KINK = "O1- U1-"

DIAGRAMS = {
    "unknot": "",
    "virtual-trefoil": VIRTUAL_TREFOIL,
    "classical-trefoil": CLASSICAL_TREFOIL,
    "virtualized-trefoil": VIRTUALIZED_TREFOIL,
    "twisted-three-bars": TWISTED_THREE_BARS,
    "two-component-link": TWO_COMPONENT_LINK,
    "positive-kink": POSITIVE_KINK,
}


def named(name: str) -> GaussDiagram:
    return parse_gauss_code(DIAGRAMS[name])


# ----------------------------------------------------------------------------
# algebras

def dihedral3() -> IndexedQuandle:
    """i * j = 2j - i mod 3 at every index."""
    return dihedral(3)


def indexed_dihedral3() -> IndexedQuandle:
    """i *_k j = 2j - i + k mod 3."""
    return dihedral(3, period=3, shift=True)


def parity_quandle() -> IndexedQuandle:
    """{0, 1} with a *_i b = a + i mod 2."""
    return IndexedQuandle.from_function(2, 2, lambda i, a, b: (a + i) % 2)


def parity_cocycle() -> CocycleFamily:
    """Z_2-valued phi(a, b) = 1 exactly when a != b, the same at every index."""
    return CocycleFamily.from_function(FgAbelianGroup((2,)), 2, 1, lambda i, a, b: (int(a != b),))


def d4_elements():
    """Dihedral group of order 8 as pairs (r, s) meaning r^a s^b, with r^4 = s^2 = 1, s r = r^-1 s."""
    els = [(a, b) for b in range(2) for a in range(4)]

    def mul(x, y):
        (a1, b1), (a2, b2) = x, y
        return ((a1 + (a2 if b1 == 0 else -a2)) % 4, (b1 + b2) % 2)

    def inv(x):
        a, b = x
        return ((-a) % 4, 0) if b == 0 else x

    return els, mul, inv


def periodic_families() -> dict[str, IndexedQuandle]:
    """One periodic instance of each of the four standard indexed-quandle constructions."""
    els, mul, inv = d4_elements()
    conj_s = lambda x: mul(mul((0, 1), x), (0, 1))  # conjugation by s, an automorphism
    return {
        "constant": IndexedQuandle.constant(dihedral(5).tables[0], period=1),
        "zero-only": zero_only_family(dihedral(3).tables[0], period=2),
        "alexander": alexander_family(5, 2),
        "group": group_family(els, mul, inv, conj_s, (2, 0), period=2),
    }


def example_biquandle() -> FiniteBiquandle:
    return flip_biquandle()


def example_twisted(n: int = 6) -> TwistedBiquandle:
    return affine_twisted(n)
