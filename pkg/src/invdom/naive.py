"""Exhaustive-sweep oracles for cross-checking the branch-and-bound solvers.

Everything here iterates all 2^n subsets, so keep n at 7 or below.  These
are deliberately independent implementations: no code shared with
``solvers`` beyond the primitive Graph operations.
"""

from __future__ import annotations

from .errors import HasIsolates
from .graph import Graph


def alpha_naive(g: Graph) -> tuple[int, int]:
    best, best_mask = 0, 0
    for s in range(1 << g.n):
        if s.bit_count() > best and g.is_independent(s):
            best, best_mask = s.bit_count(), s
    return best, best_mask


def gamma_naive(g: Graph) -> tuple[int, int]:
    best, best_mask = g.n, g.full
    for s in range(1 << g.n):
        if s.bit_count() < best and g.is_dominating(s):
            best, best_mask = s.bit_count(), s
    return best, best_mask


def min_dominating_sets_naive(g: Graph) -> list[int]:
    k = gamma_naive(g)[0]
    return [s for s in range(1 << g.n) if s.bit_count() == k and g.is_dominating(s)]


def _dominating_masks(g: Graph) -> list[int]:
    return [s for s in range(1 << g.n) if g.is_dominating(s)]


def inverse_gamma_naive(g: Graph) -> int:
    """Direct search over all disjoint pairs (D, T) with |D| = gamma."""
    if g.has_isolated_vertex():
        raise HasIsolates("undefined on graphs with isolates")
    doms = _dominating_masks(g)
    k = min(s.bit_count() for s in doms)
    best = None
    for d in doms:
        if d.bit_count() != k:
            continue
        for t in doms:
            if t & d:
                continue
            if best is None or t.bit_count() < best:
                best = t.bit_count()
    assert best is not None
    return best


def strong_inverse_gamma_naive(g: Graph) -> int:
    if g.has_isolated_vertex():
        raise HasIsolates("undefined on graphs with isolates")
    doms = _dominating_masks(g)
    k = min(s.bit_count() for s in doms)
    worst = 0
    for d in doms:
        if d.bit_count() != k:
            continue
        best_t = min(t.bit_count() for t in doms if not t & d)
        worst = max(worst, best_t)
    return worst


def b_naive(g: Graph) -> int:
    best = 0
    for s in range(1 << g.n):
        if s.bit_count() > best and g.is_bipartite_subset(s):
            best = s.bit_count()
    return best
