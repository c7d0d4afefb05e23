"""Finite search for monochromatic pair sumsets {2x, 2y, x+y}.

Groups here are finite direct sums of cyclic groups, elements represented as
coordinate tuples.  ``find_mono_pair_sumset`` checks one colouring table;
``all_colourings_forced`` decides by backtracking whether *every* c-colouring
admits a monochromatic pair, and ``min_colours_avoiding`` finds the least c
for which some colouring avoids them.  Budget exhaustion is a distinct
``unknown`` verdict, never conflated with forced/not forced.

This module deliberately caps sumsets at |X| = 2 (the triple {2x, 2y, x+y}).
Forcing monochromatic X+X for larger X is known only in astronomically large
direct powers, far beyond exhaustive reach; the outputs here are finite data
points, not reproductions of any general claim.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from itertools import product
from typing import Optional

DEFAULT_GROUP_CAP = 4096
DEFAULT_BUDGET = 1_000_000

Elem = tuple[int, ...]

__all__ = [
    "DEFAULT_GROUP_CAP",
    "DEFAULT_BUDGET",
    "FiniteGroupSpec",
    "SearchResult",
    "MinColoursResult",
    "GroupTooLarge",
    "find_mono_pair_sumset",
    "all_colourings_forced",
    "min_colours_avoiding",
    "constant_colouring",
]


class GroupTooLarge(ValueError):
    """Group size exceeds the cap for exhaustive operations."""


@dataclass(frozen=True)
class FiniteGroupSpec:
    """Direct sum of cyclic groups of the given orders."""

    orders: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(int(n) for n in self.orders))
        if any(n < 2 for n in self.orders):
            raise ValueError("cyclic orders must be >= 2")

    @property
    def size(self) -> int:
        return math.prod(self.orders)

    def elements(self) -> list[Elem]:
        return [tuple(e) for e in product(*(range(n) for n in self.orders))]

    def add(self, a: Elem, b: Elem) -> Elem:
        return tuple((x + y) % n for x, y, n in zip(a, b, self.orders))

    def neg(self, a: Elem) -> Elem:
        return tuple((-x) % n for x, n in zip(a, self.orders))

    def double(self, a: Elem) -> Elem:
        return self.add(a, a)

    def order_of(self, a: Elem) -> int:
        return math.lcm(1, *(n // math.gcd(x, n) for x, n in zip(a, self.orders)))

    def describe(self) -> dict:
        return {"orders": list(self.orders), "size": self.size}


def constant_colouring(group: FiniteGroupSpec, colour: int = 0) -> dict[Elem, int]:
    return {e: colour for e in group.elements()}


def find_mono_pair_sumset(
    group: FiniteGroupSpec,
    table: dict[Elem, int],
    cap: int = DEFAULT_GROUP_CAP,
) -> Optional[tuple[Elem, Elem]]:
    """First (lex order) distinct x, y with col(2x) = col(2y) = col(x+y), or None."""
    if group.size > cap:
        raise GroupTooLarge(f"group size {group.size} exceeds cap {cap}")
    elems = group.elements()
    missing = [e for e in elems if e not in table]
    if missing:
        raise ValueError(f"colouring table is not total: missing {missing[0]}")
    doubles = {e: table[group.double(e)] for e in elems}
    for i, x in enumerate(elems):
        cx = doubles[x]
        for y in elems[i + 1 :]:
            if doubles[y] == cx and table[group.add(x, y)] == cx:
                return (x, y)
    return None


@dataclass(frozen=True)
class SearchResult:
    group: FiniteGroupSpec
    colours: int
    verdict: str  # "forced" | "not_forced" | "unknown"
    witness: Optional[tuple[int, ...]]  # colour per element, lex element order
    nodes: int
    elapsed_s: float

    def witness_table(self) -> Optional[dict[Elem, int]]:
        if self.witness is None:
            return None
        return dict(zip(self.group.elements(), self.witness))

    def describe(self) -> dict:
        witness = self.witness_table()
        return {
            "group": self.group.describe(),
            "colours": self.colours,
            "verdict": self.verdict,
            "witness": None
            if witness is None
            else {str(list(e)): c for e, c in sorted(witness.items())},
            "nodes": self.nodes,
            "elapsed_s": self.elapsed_s,
        }


def _pair_constraints(group: FiniteGroupSpec) -> tuple[list[Elem], list[list[tuple[int, int, int]]]]:
    """Unique triples (as element indices) whose monochromaticity is forbidden.

    Returns the lex-ordered element list and, per element index k, the
    constraints whose largest index is k (ready once k is coloured).
    """
    elems = group.elements()
    index = {e: i for i, e in enumerate(elems)}
    triples = set()
    for i, x in enumerate(elems):
        dx = index[group.double(x)]
        for y in elems[i + 1 :]:
            triples.add(
                tuple(sorted((dx, index[group.double(y)], index[group.add(x, y)])))
            )
    by_last = [[] for _ in elems]
    for tri in triples:
        by_last[tri[2]].append(tri)
    return elems, by_last


def all_colourings_forced(
    group: FiniteGroupSpec,
    colours: int,
    budget: int = DEFAULT_BUDGET,
    cap: int = DEFAULT_GROUP_CAP,
) -> SearchResult:
    """Does every c-colouring admit a monochromatic pair sumset?

    Backtracks over colourings in lex element order, pruning as soon as a
    forbidden triple becomes monochromatic.  Colour-class permutations are
    canonicalized away (element k may only use colours 0..used+1), which is
    sound because the monochromatic condition is permutation-invariant.  The
    witness, when one exists, is the lex-least canonical avoiding colouring.
    ``budget`` caps the number of colour assignments tried; exceeding it
    yields verdict ``unknown``.
    """
    if colours < 1:
        raise ValueError("colour count must be >= 1")
    if group.size > cap:
        raise GroupTooLarge(f"group size {group.size} exceeds cap {cap}")
    start = time.perf_counter()
    elems, cons_by_last = _pair_constraints(group)
    n = len(elems)
    assignment = [0] * n
    used = [0] * (n + 1)  # distinct colours among assignment[:k]
    next_try = [0] * n
    nodes = 0
    k = 0
    while k >= 0:
        limit = min(colours, used[k] + 1)
        col = next_try[k]
        if col >= limit:
            k -= 1
            if k >= 0:
                next_try[k] += 1
            continue
        nodes += 1
        if nodes > budget:
            return SearchResult(
                group, colours, "unknown", None, nodes - 1, time.perf_counter() - start
            )
        assignment[k] = col
        ok = True
        for a, b, c in cons_by_last[k]:
            if assignment[a] == assignment[b] == assignment[c]:
                ok = False
                break
        if not ok:
            next_try[k] += 1
            continue
        if k == n - 1:
            return SearchResult(
                group,
                colours,
                "not_forced",
                tuple(assignment),
                nodes,
                time.perf_counter() - start,
            )
        used[k + 1] = used[k] + (1 if col == used[k] else 0)
        k += 1
        next_try[k] = 0
    return SearchResult(group, colours, "forced", None, nodes, time.perf_counter() - start)


@dataclass(frozen=True)
class MinColoursResult:
    group: FiniteGroupSpec
    verdict: str  # "ok" | "unknown"
    count: Optional[int]
    witness: Optional[tuple[int, ...]]
    nodes: int
    elapsed_s: float

    def witness_table(self) -> Optional[dict[Elem, int]]:
        if self.witness is None:
            return None
        return dict(zip(self.group.elements(), self.witness))

    def describe(self) -> dict:
        witness = self.witness_table()
        return {
            "group": self.group.describe(),
            "verdict": self.verdict,
            "min_colours": self.count,
            "witness": None
            if witness is None
            else {str(list(e)): c for e, c in sorted(witness.items())},
            "nodes": self.nodes,
            "elapsed_s": self.elapsed_s,
        }


def min_colours_avoiding(
    group: FiniteGroupSpec,
    budget: int = DEFAULT_BUDGET,
    cap: int = DEFAULT_GROUP_CAP,
) -> MinColoursResult:
    """Least c such that some c-colouring avoids all monochromatic pairs.

    Terminates by c = |G|: an injective colouring always avoids, since
    col(2x) = col(2y) = col(x+y) would force 2x = 2y = x+y and hence x = y.
    """
    start = time.perf_counter()
    nodes = 0
    for c in range(1, group.size + 1):
        res = all_colourings_forced(group, c, budget=budget, cap=cap)
        nodes += res.nodes
        if res.verdict == "unknown":
            return MinColoursResult(
                group, "unknown", None, None, nodes, time.perf_counter() - start
            )
        if res.verdict == "not_forced":
            return MinColoursResult(
                group, "ok", c, res.witness, nodes, time.perf_counter() - start
            )
    raise AssertionError("injective colouring must avoid; unreachable")
