"""Sparse Laurent polynomials with exact integer coefficients.

Exponents are stored as integers counting quarter-units of ``t`` so that
``t^(5/2)`` is the key ``10``.  Polynomials in the bracket variable ``A``
(integer exponents) use the same class with ``unit=1``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

QUARTER = 4


class LaurentPoly:
    """Immutable ``{exponent: coefficient}`` map with no zero coefficients.

    ``unit`` is the number of stored exponent steps per whole power of the
    variable (4 for quarter powers of ``t``, 1 for integer powers).
    """

    __slots__ = ("_terms", "unit", "var")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = (),
                 unit: int = QUARTER, var: str = "t"):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[e] = acc.get(e, 0) + c
        self._terms = {e: c for e, c in acc.items() if c}
        self.unit = unit
        self.var = var

    # construction helpers -------------------------------------------------
    @classmethod
    def monomial(cls, power, coeff: int = 1, unit: int = QUARTER, var: str = "t") -> "LaurentPoly":
        """``coeff * var**power``; ``power`` may be a Fraction with denominator dividing ``unit``."""
        e = Fraction(power) * unit
        if e.denominator != 1:
            raise ValueError(f"exponent {power} not representable in 1/{unit} units")
        return cls({int(e): coeff}, unit, var)

    @classmethod
    def constant(cls, c: int, unit: int = QUARTER, var: str = "t") -> "LaurentPoly":
        return cls({0: c}, unit, var)

    @classmethod
    def from_powers(cls, powers: Mapping[int, int], unit: int = QUARTER, var: str = "t") -> "LaurentPoly":
        """Build from integer powers of the variable: ``{n: a_n}`` means ``sum a_n var^n``."""
        return cls({n * unit: c for n, c in powers.items()}, unit, var)

    def _like(self, terms) -> "LaurentPoly":
        return LaurentPoly(terms, self.unit, self.var)

    # access ---------------------------------------------------------------
    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def coeff(self, power) -> int:
        """Coefficient of ``var**power`` (0 when absent)."""
        e = Fraction(power) * self.unit
        if e.denominator != 1:
            return 0
        return self._terms.get(int(e), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def exponents(self) -> list[Fraction]:
        return [Fraction(e, self.unit) for e in sorted(self._terms)]

    def span(self) -> Fraction:
        """Max exponent minus min exponent, in whole units of the variable."""
        if not self._terms:
            raise ValueError("span of the zero polynomial is undefined")
        return Fraction(max(self._terms) - min(self._terms), self.unit)

    def evaluate_at_one(self) -> int:
        return sum(self._terms.values())

    # arithmetic -----------------------------------------------------------
    def _check(self, other: "LaurentPoly"):
        if self.unit != other.unit:
            raise ValueError("mismatched exponent units")

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.unit, self.var)
        self._check(other)
        return self._like(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return self._like({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.unit, self.var)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self._like({e: c * other for e, c in self._terms.items()})
        self._check(other)
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return self._like(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be inverted")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials can be inverted")
            return self._like({-e * -n: c ** -n})
        out = LaurentPoly.constant(1, self.unit, self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def invert_variable(self) -> "LaurentPoly":
        """Substitute ``var -> var^-1``."""
        return self._like({-e: c for e, c in self._terms.items()})

    def substitute_power(self, num: int, den: int = 1, unit: int = QUARTER, var: str = "t") -> "LaurentPoly":
        """Substitute ``var = new_var^(num/den)``; result stored with ``unit``."""
        acc = {}
        for e, c in self._terms.items():
            x = Fraction(e * num, self.unit * den) * unit
            if x.denominator != 1:
                raise ValueError("substitution leaves the exponent lattice")
            acc[int(x)] = acc.get(int(x), 0) + c
        return LaurentPoly(acc, unit, var)

    # comparison / display -------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.unit, self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._terms and not other._terms:
            return True
        return self.unit == other.unit and self._terms == other._terms

    def __hash__(self):
        return hash((self.unit, frozenset(self._terms.items())))

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            p = Fraction(e, self.unit)
            if p == 0:
                mono = ""
            elif p == 1:
                mono = self.var
            else:
                ps = str(p.numerator) if p.denominator == 1 else f"({p.numerator}/{p.denominator})"
                mono = f"{self.var}^{ps}"
            mag = abs(c)
            body = str(mag) if (mag != 1 or not mono) else ""
            if body and mono:
                body += "*"
            body += mono
            parts.append(("-" if c < 0 else "+", body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list[list[int]]:
        """``[[exp_num, exp_den, coeff], ...]`` in descending exponent order."""
        out = []
        for e in sorted(self._terms, reverse=True):
            p = Fraction(e, self.unit)
            out.append([p.numerator, p.denominator, self._terms[e]])
        return out

    @classmethod
    def from_json(cls, data, unit: int = QUARTER, var: str = "t") -> "LaurentPoly":
        acc = {}
        for num, den, c in data:
            e = Fraction(num, den) * unit
            acc[int(e)] = acc.get(int(e), 0) + c
        return cls(acc, unit, var)


def t_power(n, coeff: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial(n, coeff)


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
