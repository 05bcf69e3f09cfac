"""Permutation monodromy of branched covers of small degree.

A degree-d cover of a genus-g surface branched over r points with local
degrees given by partitions of d exists iff there are permutations
a_1, b_1, ..., a_g, b_g, s_1, ..., s_r in S_d with s_j of cycle type
lambda_j, prod [a_i, b_i] * prod s_j = 1, generating a transitive subgroup.
:func:`is_realizable` decides this by exhaustive dynamic programming over
(partial product, generated subgroup), which is cheap for d <= 5.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import lcm
from typing import Iterable, Sequence

Perm = tuple[int, ...]


def identity(d: int) -> Perm:
    return tuple(range(d))


def compose(p: Perm, q: Perm) -> Perm:
    """p * q, acting on the left: apply q first, then p."""
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def from_cycles(cycles: Iterable[Sequence[int]], d: int) -> Perm:
    """Permutation of {0..d-1} from 1-based cycles, e.g. [(1, 2), (3, 4)]."""
    p = list(range(d))
    for cyc in cycles:
        for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
            p[a - 1] = b - 1
    return tuple(p)


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Nontrivial cycles, 1-based."""
    seen, out = set(), []
    for start in range(len(p)):
        if start in seen:
            continue
        cyc, i = [], start
        while i not in seen:
            seen.add(i)
            cyc.append(i + 1)
            i = p[i]
        if len(cyc) > 1:
            out.append(tuple(cyc))
    return out


def cycle_string(p: Perm) -> str:
    cs = cycles(p)
    return "".join("(" + "".join(map(str, c)) + ")" for c in cs) or "()"


def cycle_type(p: Perm) -> tuple[int, ...]:
    lengths = [len(c) for c in cycles(p)]
    lengths += [1] * (len(p) - sum(lengths))
    return tuple(sorted(lengths, reverse=True))


def order(p: Perm) -> int:
    return lcm(*cycle_type(p))


@lru_cache(maxsize=None)
def symmetric_group(d: int) -> tuple[Perm, ...]:
    return tuple(itertools.permutations(range(d)))


@lru_cache(maxsize=None)
def elements_of_type(d: int, partition: tuple[int, ...]) -> tuple[Perm, ...]:
    partition = tuple(sorted(partition, reverse=True))
    return tuple(p for p in symmetric_group(d) if cycle_type(p) == partition)


@lru_cache(maxsize=None)
def _closure(group: frozenset, new: Perm) -> frozenset:
    if new in group:
        return group
    gens = set(group) | {new}
    elems = set(group) | {new}
    frontier = list(elems)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = compose(x, g)
            if y not in elems:
                elems.add(y)
                frontier.append(y)
    return frozenset(elems)


def generated_subgroup(gens: Iterable[Perm], d: int) -> frozenset:
    group = frozenset({identity(d)})
    for g in gens:
        group = _closure(group, g)
    return group


def is_transitive(group: Iterable[Perm], d: int) -> bool:
    orbit = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for g in group:
            j = g[i]
            if j not in orbit:
                orbit.add(j)
                frontier.append(j)
    return len(orbit) == d


def is_realizable(d: int, genus: int, partitions: Sequence[Sequence[int]]) -> bool:
    """Whether a connected degree-d cover with the given branching data exists."""
    for lam in partitions:
        if sum(lam) != d:
            raise ValueError(f"partition {tuple(lam)} does not sum to {d}")
    e = identity(d)
    states = {(e, frozenset({e}))}
    group_elems = symmetric_group(d)
    for _ in range(genus):
        new_states = set()
        for prod, grp in states:
            for a in group_elems:
                for b in group_elems:
                    comm = compose(compose(a, b), compose(inverse(a), inverse(b)))
                    new_states.add((compose(prod, comm), _closure(_closure(grp, a), b)))
        states = new_states
    for lam in sorted(partitions, key=lambda p: len(elements_of_type(d, tuple(p)))):
        choices = elements_of_type(d, tuple(lam))
        states = {(compose(prod, s), _closure(grp, s)) for prod, grp in states for s in choices}
    return any(prod == e and is_transitive(grp, d) for prod, grp in states)


# -- the degree-4 obstruction -------------------------------------------------

DOUBLE_TRANSPOSITIONS = (
    from_cycles([(1, 2), (3, 4)], 4),
    from_cycles([(1, 3), (2, 4)], 4),
    from_cycles([(1, 4), (2, 3)], 4),
)


@dataclass(frozen=True)
class Sigma4Report:
    table: tuple[tuple[tuple[str, str, str], str, int], ...]
    product_orders: frozenset
    obstruction_confirmed: bool

    @property
    def verdict(self) -> str:
        return "cover nonexistent" if self.obstruction_confirmed else "obstruction fails"


def sigma4_obstruction() -> Sigma4Report:
    """Products of all 27 ordered triples of double transpositions in S4.

    None has order 3, so three double transpositions can never multiply to the
    inverse of a 3-cycle: the degree-4 cover with branching (2,2)^3 (3,1)
    does not exist.
    """
    rows = []
    for triple in itertools.product(DOUBLE_TRANSPOSITIONS, repeat=3):
        prod = compose(compose(triple[0], triple[1]), triple[2])
        rows.append((tuple(cycle_string(p) for p in triple), cycle_string(prod), order(prod)))
    orders = frozenset(r[2] for r in rows)
    return Sigma4Report(tuple(rows), orders, 3 not in orders)
