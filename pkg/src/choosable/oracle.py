"""Ground-truth exhaustive solver for small instances.

Plain depth-first enumeration, vertices in index order, candidate subsets of
each list in lexicographic order, pruning only on adjacent disjointness (the
wrap edge of a cycle is checked at the last vertex).  Deliberately
independent of the interval machinery so the two routes can check each
other.  A node budget turns runaway searches into an explicit error rather
than a silent wrong answer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cycles import FreeChoiceInstance
from .model import (
    BudgetExceededError,
    Certificate,
    Decision,
    Instance,
    InvalidInputError,
    Topology,
)


@dataclass(frozen=True)
class SearchBudget:
    """Cap on attempted assignments across the whole search."""

    max_nodes: int = 10_000_000

    def __post_init__(self) -> None:
        if self.max_nodes < 1:
            raise InvalidInputError("max_nodes must be positive")


def brute_force(inst: Instance, budget: SearchBudget | None = None) -> Decision:
    """Decide an instance by exhaustive search.

    Returns the lexicographically first coloring (vertex by vertex, subsets
    ordered over sorted color values) or a summary certificate covering the
    whole instance.
    """
    return _search(inst, None, budget or SearchBudget())


def brute_force_forced(
    fi: FreeChoiceInstance, budget: SearchBudget | None = None
) -> Decision:
    """Exhaustive search with the color set of v0 pinned to the forced set."""
    return _search(fi.cycle, (fi.v0, fi.forced), budget or SearchBudget())


def _search(
    inst: Instance, pinned: tuple[int, frozenset[int]] | None, budget: SearchBudget
) -> Decision:
    m = inst.n_vertices

    # color sets as bitmasks, indexed by the color value itself
    candidates = []
    for v in range(m):
        if pinned is not None and v == pinned[0]:
            combos = [tuple(sorted(pinned[1]))]
        else:
            combos = itertools.combinations(sorted(inst.lists[v]), inst.weights[v])
        row = []
        for combo in combos:
            mask = 0
            for c in combo:
                mask |= 1 << c
            row.append((mask, combo))
        candidates.append(row)

    wrap = inst.topology is Topology.CYCLE
    chosen: list[tuple[int, ...]] = [()] * m
    cap = budget.max_nodes
    nodes = 0

    def rec(v: int, prev_mask: int, first_mask: int) -> bool:
        nonlocal nodes
        last = v == m - 1
        for mask, combo in candidates[v]:
            nodes += 1
            if nodes > cap:
                raise BudgetExceededError(nodes, cap)
            if mask & prev_mask:
                continue
            if last and wrap and mask & first_mask:
                continue
            chosen[v] = combo
            if last:
                return True
            if rec(v + 1, mask, first_mask if v else mask):
                return True
        return False

    if rec(0, 0, 0):
        return Decision(True, coloring=tuple(frozenset(c) for c in chosen))
    return Decision(
        False,
        certificate=Certificate(
            0, m - 1, len(set().union(*inst.lists)), sum(inst.weights)
        ),
    )
