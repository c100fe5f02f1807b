"""Backtracking search for colorings given as functional rules over a finite carrier.

A rule ``(ins, outs, fn)`` says that once every variable in ``ins`` has a
value, the variables in ``outs`` must equal ``fn(*values)``.  Coloring
conditions are registered in each direction in which they are solvable, so
propagation runs both ways around the diagram.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .limits import DEFAULT_NODE_CAP, ResourceLimitError


@dataclass
class Rule:
    ins: tuple[int, ...]
    outs: tuple[int, ...]
    fn: Callable[..., tuple[int, ...]]


@dataclass
class ColoringProblem:
    num_vars: int
    size: int
    rules: list[Rule] = field(default_factory=list)

    def add(self, ins: Sequence[int], outs: Sequence[int], fn: Callable[..., tuple[int, ...]]) -> None:
        self.rules.append(Rule(tuple(ins), tuple(outs), fn))

    def solutions(self, node_cap: int = DEFAULT_NODE_CAP) -> Iterator[tuple[int, ...]]:
        n = self.num_vars
        watch: list[list[Rule]] = [[] for _ in range(n)]
        for r in self.rules:
            for v in set(r.ins):
                watch[v].append(r)
        value: list[int | None] = [None] * n
        nodes = 0

        def assign(v: int, x: int, trail: list[int]) -> bool:
            stack = [(v, x)]
            while stack:
                v, x = stack.pop()
                if value[v] is not None:
                    if value[v] != x:
                        return False
                    continue
                value[v] = x
                trail.append(v)
                for r in watch[v]:
                    vals = [value[u] for u in r.ins]
                    if any(u is None for u in vals):
                        continue
                    res = r.fn(*vals)
                    if res is None:
                        return False
                    for u, y in zip(r.outs, res):
                        if value[u] is None:
                            stack.append((u, y))
                        elif value[u] != y:
                            return False
            return True

        def undo(trail: list[int]) -> None:
            for v in trail:
                value[v] = None

        def rec(start: int) -> Iterator[tuple[int, ...]]:
            nonlocal nodes
            v = start
            while v < n and value[v] is not None:
                v += 1
            if v == n:
                yield tuple(value)  # type: ignore[arg-type]
                return
            for x in range(self.size):
                nodes += 1
                if nodes > node_cap:
                    raise ResourceLimitError(f"coloring search exceeded {node_cap} nodes")
                trail: list[int] = []
                if assign(v, x, trail):
                    yield from rec(v + 1)
                undo(trail)

        if n == 0:
            # no variables: every rule is vacuous
            yield ()
            return
        yield from rec(0)

    def count(self, node_cap: int = DEFAULT_NODE_CAP) -> int:
        return sum(1 for _ in self.solutions(node_cap))


def inverse_table(table: Sequence[Sequence[int]]) -> list[list[int]]:
    """Right-translation inverses: inv[z][y] = x with table[x][y] = z; raises if not bijective."""
    q = len(table)
    inv = [[-1] * q for _ in range(q)]
    for x in range(q):
        for y in range(q):
            z = table[x][y]
            if inv[z][y] != -1:
                raise ValueError("right translation is not a bijection")
            inv[z][y] = x
    return inv
