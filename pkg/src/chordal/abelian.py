"""Finitely generated abelian groups via Smith normal form, and formal sums of their elements."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping, Sequence

Matrix = list[list[int]]


def _identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(R: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[Matrix, Matrix, Matrix]:
    """Return (U, D, V) with U R V = D diagonal, U and V unimodular, d_i | d_{i+1}.

    ``ncols`` is needed only when ``R`` has no rows.
    """
    D = [list(map(int, row)) for row in R]
    m = len(D)
    n = len(D[0]) if m else (ncols or 0)
    U = _identity(m)
    V = _identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):  # row dst += k * row src
        if k:
            D[dst] = [a + k * b for a, b in zip(D[dst], D[src])]
            U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, k):  # col dst += k * col src
        if k:
            for M in (D, V):
                for row in M:
                    row[dst] += k * row[src]

    t = 0
    while t < min(m, n):
        # pivot: smallest nonzero entry in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                q = D[i][t] // p
                add_row(i, t, -q)
                if D[i][t]:
                    dirty = True
            for j in range(t + 1, n):
                q = D[t][j] // p
                add_col(j, t, -q)
                if D[t][j]:
                    dirty = True
            if dirty:
                # move a smaller remainder into the pivot
                best = (t, t)
                for i in range(t, m):
                    if D[i][t] and abs(D[i][t]) < abs(D[best[0]][best[1]]):
                        best = (i, t)
                for j in range(t, n):
                    if D[t][j] and abs(D[t][j]) < abs(D[best[0]][best[1]]):
                        best = (t, j)
                swap_rows(t, best[0])
                swap_cols(t, best[1])
                continue
            # divisibility: fold a non-multiple from the block into the pivot row
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return U, D, V


def mat_mul(X: Matrix, Y: Matrix) -> Matrix:
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*Y)] for row in X]


@dataclass(frozen=True)
class FgAbelianGroup:
    """Z_{torsion[0]} x ... x Z^free_rank; elements are coordinate tuples, torsion coordinates first."""
    torsion: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        if any(k < 2 for k in self.torsion):
            raise ValueError("torsion orders must be at least 2")

    @property
    def moduli(self) -> tuple[int, ...]:
        return self.torsion + (0,) * self.free_rank

    @property
    def rank(self) -> int:
        return len(self.torsion) + self.free_rank

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        if not self.is_finite:
            return None
        out = 1
        for k in self.torsion:
            out *= k
        return out

    def reduce(self, coords: Iterable[int]) -> tuple[int, ...]:
        c = tuple(coords)
        if len(c) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(c)}")
        return tuple(x % k if k else x for x, k in zip(c, self.moduli))

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.rank

    def add(self, a, b) -> tuple[int, ...]:
        return self.reduce(x + y for x, y in zip(a, b))

    def neg(self, a) -> tuple[int, ...]:
        return self.reduce(-x for x in a)

    def scale(self, a, k: int) -> tuple[int, ...]:
        return self.reduce(k * x for x in a)

    def elements(self) -> list[tuple[int, ...]]:
        if not self.is_finite:
            raise ValueError("infinite group")
        out = [()]
        for k in self.torsion:
            out = [e + (x,) for e in out for x in range(k)]
        return out

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, data: Mapping) -> "FgAbelianGroup":
        return cls(tuple(data.get("torsion", ())), int(data.get("free_rank", 0)))


@dataclass
class Presentation:
    """Abelian group on named generators modulo integer relations."""
    generators: list[Hashable]
    relations: list[list[int]]
    group: FgAbelianGroup = field(init=False)
    images: dict = field(init=False)

    def __post_init__(self):
        g = len(self.generators)
        rows = [r for r in self.relations if any(r)]
        _, D, V = smith_normal_form(rows, g)
        diag = [D[i][i] if i < len(D) else 0 for i in range(g)]
        keep = [i for i, d in enumerate(diag) if d != 1]
        tors = [i for i in keep if diag[i] != 0]
        free = [i for i in keep if diag[i] == 0]
        order = tors + free
        self.group = FgAbelianGroup(tuple(diag[i] for i in tors), len(free))
        self.images = {}
        for k, gen in enumerate(self.generators):
            row = V[k]  # e_k V in the new basis
            self.images[gen] = self.group.reduce(row[i] for i in order)

    def image(self, gen) -> tuple[int, ...]:
        return self.images[gen]


class GroupRingElement:
    """Formal Z-linear combination of hashable keys (group elements or symbols)."""

    __slots__ = ("_c",)

    def __init__(self, terms: Mapping | Iterable = ()):
        c = Counter()
        items = terms.items() if isinstance(terms, Mapping) else ((k, 1) for k in terms)
        for k, v in items:
            c[k] += v
        self._c = {k: v for k, v in c.items() if v}

    @property
    def terms(self) -> dict:
        return dict(self._c)

    def coeff(self, key) -> int:
        return self._c.get(key, 0)

    def total(self) -> int:
        return sum(self._c.values())

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        c = Counter(self._c)
        for k, v in other._c.items():
            c[k] += v
        return GroupRingElement(c)

    def __neg__(self):
        return GroupRingElement({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        return f"GroupRingElement({self})"

    def __str__(self):
        if not self._c:
            return "0"
        return " + ".join(f"{v}·{render_key(k)}" for k, v in sorted(self._c.items(), key=_sort_key))


def _sort_key(item):
    k = item[0]
    return (str(type(k)), k) if not isinstance(k, tuple) else ("", k)


def render_key(k) -> str:
    if isinstance(k, tuple):
        return ",".join(map(str, k)) if k else "0"
    return str(k)
