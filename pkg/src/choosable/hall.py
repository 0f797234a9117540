"""Colorability of weighted paths via Hall's condition.

For a connected induced subgraph H of the path, Hall's condition asks the
sum over colors k of the independence number of the vertices of H whose
lists contain k to be at least the total weight of H.  On paths the
condition over all subpaths is not only necessary but sufficient, which
turns colorability into interval counting.  On waterfall lists every color
contributes exactly one to the sum, so the alpha sum collapses to the
amplitude size and the check gets cheap; with the good-list bound it
collapses further to the prefix intervals alone.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .model import (
    Certificate,
    Coloring,
    Decision,
    InternalInvariantError,
    Instance,
    InvalidInputError,
    ListAssignment,
    NotWaterfallError,
    PreconditionError,
    Weights,
    amplitude,
    as_lists,
    as_weights,
    is_good,
    is_waterfall,
    validate_coloring,
)
from .waterfall import pull_back_coloring, to_waterfall


@dataclass(frozen=True)
class HallSummand:
    """One color's contribution to the Hall sum of a subpath."""

    color: int
    subpath: tuple[int, int]
    alpha: int


def alpha_path(lists: Iterable[Iterable[int]], i: int, j: int, k: int) -> int:
    """Independence number of the vertices of ``i..j`` whose lists contain ``k``.

    The induced subgraph is a disjoint union of subpaths, so the value is the
    sum of ``ceil(run_length / 2)`` over the maximal runs of consecutive
    vertices carrying ``k``.
    """
    L = as_lists(lists)
    if not 0 <= i <= j < len(L):
        raise InvalidInputError(f"interval ({i}, {j}) out of range for {len(L)} vertices")
    total = 0
    run = 0
    for v in range(i, j + 1):
        if k in L[v]:
            run += 1
        else:
            total += (run + 1) // 2
            run = 0
    return total + (run + 1) // 2


def hall_summands(lists: Iterable[Iterable[int]], i: int, j: int) -> tuple[HallSummand, ...]:
    """Per-color alpha contributions for the subpath ``i..j``, sorted by color."""
    L = as_lists(lists)
    return tuple(
        HallSummand(k, (i, j), alpha_path(L, i, j, k))
        for k in sorted(amplitude(L, i, j))
    )


def _checked(lists, weights) -> tuple[ListAssignment, Weights]:
    L = as_lists(lists)
    w = as_weights(weights)
    if len(L) != len(w):
        raise InvalidInputError(f"{len(w)} weights for {len(L)} lists")
    if len(L) == 0:
        raise InvalidInputError("at least one vertex required")
    return L, w


def hall_check_path(lists: Iterable[Iterable[int]], weights: Iterable[int]) -> Decision:
    """Decide colorability of a weighted path by checking every subpath.

    Colorable iff the Hall sum of every interval reaches its weight demand;
    the witness coloring comes from ``construct_coloring_general``.  On
    failure the certificate names the lexicographically smallest violating
    interval together with its alpha sum and demand.

    The alpha sums are accumulated incrementally: extending the interval by
    one vertex grows each color's current run, and a run of length r
    contributes another unit exactly when r is odd.
    """
    L, w = _checked(lists, weights)
    m = len(L)
    prefix_w = [0]
    for wv in w:
        prefix_w.append(prefix_w[-1] + wv)
    for i in range(m):
        run_len: dict[int, int] = {}
        alpha_sum = 0
        for j in range(i, m):
            prev = run_len
            run_len = {}
            for k in L[j]:
                r = prev.get(k, 0) + 1
                if r & 1:
                    alpha_sum += 1
                run_len[k] = r
            if alpha_sum < prefix_w[j + 1] - prefix_w[i]:
                return Decision(
                    False,
                    certificate=Certificate(
                        i, j, alpha_sum, prefix_w[j + 1] - prefix_w[i]
                    ),
                )
    return Decision(True, coloring=construct_coloring_general(L, w))


def decide_waterfall(lists: Iterable[Iterable[int]], weights: Iterable[int]) -> Decision:
    """Decide colorability of a waterfall list on a path.

    Colorable iff every interval's amplitude size reaches its demand.  For
    waterfall lists the amplitude size of ``i..j`` is the sum of the list
    sizes minus the overlaps of consecutive lists, so all intervals are
    checked with two prefix-sum arrays instead of set unions.
    """
    L, w = _checked(lists, weights)
    if not is_waterfall(L):
        raise NotWaterfallError("lists at distance two or more share a color")
    m = len(L)
    size_pre = [0]
    for colors in L:
        size_pre.append(size_pre[-1] + len(colors))
    ov_pre = [0]
    for k in range(m - 1):
        ov_pre.append(ov_pre[-1] + len(L[k] & L[k + 1]))
    w_pre = [0]
    for wv in w:
        w_pre.append(w_pre[-1] + wv)
    for i in range(m):
        for j in range(i, m):
            amp = size_pre[j + 1] - size_pre[i] - (ov_pre[j] - ov_pre[i])
            need = w_pre[j + 1] - w_pre[i]
            if amp < need:
                return Decision(False, certificate=Certificate(i, j, amp, need))
    coloring = _first_coloring(L, w, prefer_exclusive=True)
    if coloring is None:
        raise InternalInvariantError(
            "backtracking exhausted on a waterfall list that passed the interval checks"
        )
    return Decision(True, coloring=coloring)


def decide_waterfall_prefix(
    lists: Iterable[Iterable[int]], weights: Iterable[int]
) -> Decision:
    """Decide colorability of a good waterfall list from prefix intervals alone.

    Requires ``|L(i)| >= w(i) + w(i+1)`` at interior vertices and
    ``|L(n)| >= w(n)`` at the last one; under those hypotheses non-prefix
    intervals can never be the bottleneck, so the linear pass agrees with
    ``decide_waterfall``.
    """
    L, w = _checked(lists, weights)
    if not is_waterfall(L):
        raise NotWaterfallError("lists at distance two or more share a color")
    m = len(L)
    for i in range(1, m - 1):
        if len(L[i]) < w[i] + w[i + 1]:
            raise PreconditionError(
                f"interior vertex {i} has |L({i})| = {len(L[i])} "
                f"< w({i}) + w({i + 1}) = {w[i] + w[i + 1]}"
            )
    if len(L[m - 1]) < w[m - 1]:
        raise PreconditionError(
            f"last vertex has |L({m - 1})| = {len(L[m - 1])} < w({m - 1}) = {w[m - 1]}"
        )
    amp = 0
    demand = 0
    for j in range(m):
        amp += len(L[j]) - (len(L[j] & L[j - 1]) if j else 0)
        demand += w[j]
        if amp < demand:
            return Decision(False, certificate=Certificate(0, j, amp, demand))
    return Decision(True, coloring=construct_coloring_waterfall(L, w))


def _first_coloring(L: ListAssignment, w: Weights, prefer_exclusive: bool) -> Coloring | None:
    """Depth-first search for a coloring, greedy choice explored first.

    With ``prefer_exclusive`` the candidates at vertex i are ordered with
    colors absent from L(i+1) first (smallest value breaking ties), otherwise
    in plain ascending order; subsets are then tried in lexicographic order
    over that sequence, so the first leaf visited is the greedy pick and the
    search stays exhaustive.
    """
    m = len(L)
    out: list[tuple[int, ...]] = [()] * m

    def rec(v: int, prev: frozenset[int]) -> bool:
        if v == m:
            return True
        avail = L[v] - prev
        if prefer_exclusive and v + 1 < m:
            nxt = L[v + 1]
            cand = sorted(avail, key=lambda x: (x in nxt, x))
        else:
            cand = sorted(avail)
        for combo in itertools.combinations(cand, w[v]):
            out[v] = combo
            if rec(v + 1, frozenset(combo)):
                return True
        return False

    if not rec(0, frozenset()):
        return None
    return tuple(frozenset(entry) for entry in out)


def construct_coloring_waterfall(
    lists: Iterable[Iterable[int]], weights: Iterable[int]
) -> Coloring:
    """Build a coloring of a colorable waterfall list.

    Left-to-right greedy preferring colors that the next list cannot use,
    with exhaustive backtracking as fallback.  The search exhausting even
    though the interval checks pass would contradict the waterfall
    characterization, hence ``InternalInvariantError``.
    """
    L, w = _checked(lists, weights)
    if not is_waterfall(L):
        raise NotWaterfallError("lists at distance two or more share a color")
    c = _first_coloring(L, w, prefer_exclusive=True)
    if c is None:
        raise InternalInvariantError(
            "backtracking exhausted; the instance fails the waterfall interval "
            "characterization that callers must establish first"
        )
    return c


def construct_coloring_general(
    lists: Iterable[Iterable[int]], weights: Iterable[int]
) -> Coloring:
    """Build a coloring of a path instance that satisfies Hall's condition.

    Good lists go through the waterfall transform, get colored there and the
    coloring is pulled back; other lists fall back to direct backtracking in
    lexicographic order.
    """
    L, w = _checked(lists, weights)
    if is_good(L, w):
        wf, report = to_waterfall(L, w)
        c = construct_coloring_waterfall(wf, w)
        return pull_back_coloring(report, c, L, w)
    c = _first_coloring(L, w, prefer_exclusive=False)
    if c is None:
        raise InternalInvariantError(
            "backtracking exhausted although Hall's condition was reported to hold"
        )
    if not validate_coloring(Instance.path(w, L), c):
        raise InternalInvariantError("constructed coloring failed validation")
    return c
