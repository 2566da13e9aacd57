"""Exact solvers for the domination-theory invariants.

All searches are branch-and-bound over bitmask vertex sets, tuned for
graphs of a few dozen vertices.  Every enumeration is deterministic:
minimum dominating sets come back in increasing bitmask order, witnesses
are the first optimum found by a fixed branching rule, and ties in
``optimal_dominating_set`` break toward the smallest bitmask.
"""

from __future__ import annotations

from .certificates import DominationCertificate, InverseCertificate
from .errors import HasIsolates
from .graph import Graph, bits


# -- independence ------------------------------------------------------------

def alpha_within(g: Graph, allowed: int) -> tuple[int, int]:
    """Largest independent subset of ``allowed``: (size, witness mask).

    Independence inside ``allowed`` equals independence in the induced
    subgraph, so this doubles as alpha of G[allowed].
    """
    g.check_subset(allowed)
    adj = g.adj
    best = 0
    best_mask = 0

    def grow(chosen: int, count: int, cand: int) -> None:
        nonlocal best, best_mask
        # candidates with no candidate neighbor are free: take them all
        iso = 0
        for v in bits(cand):
            if not adj[v] & cand:
                iso |= 1 << v
        if iso:
            chosen |= iso
            count += iso.bit_count()
            cand &= ~iso
        if not cand:
            if count > best:
                best, best_mask = count, chosen
            return
        if count + cand.bit_count() <= best:
            return
        pivot, pivot_deg = -1, -1
        for v in bits(cand):
            d = (adj[v] & cand).bit_count()
            if d > pivot_deg:
                pivot, pivot_deg = v, d
        pb = 1 << pivot
        grow(chosen | pb, count + 1, cand & ~(adj[pivot] | pb))
        grow(chosen, count, cand ^ pb)

    grow(0, 0, allowed)
    return best, best_mask


def alpha(g: Graph) -> tuple[int, int]:
    """Independence number with a maximum independent set witness."""
    return alpha_within(g, g.full)


# -- domination --------------------------------------------------------------

def _greedy_cover(covers: tuple[int, ...], allowed: int, target: int) -> int | None:
    """Greedy max-coverage solution mask, or None if allowed cannot cover."""
    chosen = 0
    undom = target
    while undom:
        pick, gain = -1, 0
        for v in bits(allowed & ~chosen):
            c = (covers[v] & undom).bit_count()
            if c > gain:
                pick, gain = v, c
        if pick < 0:
            return None
        chosen |= 1 << pick
        undom &= ~covers[pick]
    return chosen


def _min_cover(
    covers: tuple[int, ...], allowed: int, target: int, cap: int | None = None
) -> tuple[int, int] | None:
    """Smallest S <= allowed with union of covers[S] >= target.

    ``covers`` must be symmetric in the closed-neighborhood sense
    (u in covers[v] iff v in covers[u]), which holds for all uses here.
    Returns None when infeasible, or when ``cap`` is given and no solution
    of size <= cap exists.
    """
    greedy = _greedy_cover(covers, allowed, target)
    if greedy is None:
        return None
    best_mask: int | None
    if cap is None or greedy.bit_count() <= cap:
        limit = greedy.bit_count()  # sizes < limit still interesting
        best_mask = greedy
    else:
        limit = cap + 1
        best_mask = None

    def search(chosen: int, count: int, undom: int, avail: int) -> None:
        nonlocal limit, best_mask
        if not undom:
            if count < limit or best_mask is None:
                limit, best_mask = count, chosen
            return
        slack = limit - count - 1  # picks we may still spend
        if slack <= 0:
            return
        maxcov = 0
        union = 0
        for v in bits(avail):
            c = (covers[v] & undom).bit_count()
            if c > maxcov:
                maxcov = c
            union |= covers[v]
        if undom & ~union or maxcov == 0:
            return
        if (undom.bit_count() + maxcov - 1) // maxcov > slack:
            return
        # branch on the hardest uncovered vertex
        u, u_opts = -1, 1 << 30
        for w in bits(undom):
            k = (covers[w] & avail).bit_count()
            if k < u_opts:
                u, u_opts = w, k
        cands = sorted(
            bits(covers[u] & avail),
            key=lambda v: (-(covers[v] & undom).bit_count(), v),
        )
        remaining = avail
        for v in cands:
            search(chosen | (1 << v), count + 1, undom & ~covers[v], remaining & ~(1 << v))
            remaining &= ~(1 << v)

    search(0, 0, target, allowed)
    if best_mask is None:
        return None
    return best_mask.bit_count(), best_mask


def _domination_covers(g: Graph) -> tuple[int, ...]:
    return tuple(g.adj[v] | (1 << v) for v in range(g.n))


def gamma(g: Graph) -> tuple[int, int]:
    """Domination number with a minimum dominating set witness."""
    if g.n == 0:
        return 0, 0
    result = _min_cover(_domination_covers(g), g.full, g.full)
    assert result is not None  # V(G) always dominates
    return result


def gamma_induced(g: Graph, sub: int) -> int:
    """Domination number of the induced subgraph G[sub]."""
    g.check_subset(sub)
    if not sub:
        return 0
    covers = tuple((g.adj[v] & sub) | (1 << v) if sub >> v & 1 else 0 for v in range(g.n))
    result = _min_cover(covers, sub, sub)
    assert result is not None
    return result[0]


def min_dominating_within(
    g: Graph, allowed: int, cap: int | None = None
) -> tuple[int, int] | None:
    """Smallest dominating set of g contained in ``allowed``, if any."""
    g.check_subset(allowed)
    if g.n == 0:
        return 0, 0
    return _min_cover(_domination_covers(g), allowed, g.full, cap)


def enumerate_min_dominating_sets(g: Graph) -> list[int]:
    """All dominating sets of size gamma(g), in increasing bitmask order."""
    if g.n == 0:
        return [0]
    k, _ = gamma(g)
    covers = _domination_covers(g)
    n = g.n
    full = g.full
    out: list[int] = []

    def rec(next_v: int, count: int, chosen: int, undom: int) -> None:
        if count == k:
            if not undom:
                out.append(chosen)
            return
        future = full & ~((1 << next_v) - 1)
        # a sub-minimum dominating set cannot exist, so undom is nonempty here
        maxcov = 0
        union = 0
        for v in bits(future):
            c = (covers[v] & undom).bit_count()
            if c > maxcov:
                maxcov = c
            union |= covers[v]
        if undom & ~union:
            return
        if maxcov == 0 or (undom.bit_count() + maxcov - 1) // maxcov > k - count:
            return
        for v in bits(future):
            rec(v + 1, count + 1, chosen | (1 << v), undom & ~covers[v])

    rec(0, 0, 0, full)
    out.sort()
    return out


# -- inverse domination -------------------------------------------------------

def _require_isolate_free(g: Graph) -> None:
    if g.has_isolated_vertex():
        raise HasIsolates("a graph with isolates cannot have an inverse dominating set")


def inverse_gamma(g: Graph) -> tuple[int, InverseCertificate]:
    """Smallest inverse dominating set size, with a realizing (D, T) pair.

    Minimizes, over minimum dominating sets D, the smallest dominating set
    disjoint from D.  Defined only for isolate-free graphs.
    """
    _require_isolate_free(g)
    if g.n == 0:
        return 0, InverseCertificate(0, 0, "exact", 0)
    best: tuple[int, int, int] | None = None  # (size, t_mask, d_mask)
    for d in enumerate_min_dominating_sets(g):
        cap = best[0] - 1 if best else None
        found = min_dominating_within(g, g.full & ~d, cap)
        if found is not None and (best is None or found[0] < best[0]):
            best = (found[0], found[1], d)
    assert best is not None  # Ore: V-D dominates for isolate-free g
    size, t_mask, d_mask = best
    return size, InverseCertificate(d_mask, t_mask, "exact", size)


def strong_inverse_gamma(g: Graph) -> int:
    """Largest, over minimum dominating sets D, of the best disjoint size."""
    _require_isolate_free(g)
    if g.n == 0:
        return 0
    worst = 0
    for d in enumerate_min_dominating_sets(g):
        found = min_dominating_within(g, g.full & ~d)
        assert found is not None  # Ore again
        if found[0] > worst:
            worst = found[0]
    return worst


# -- induced bipartite order ---------------------------------------------------

def max_induced_bipartite(g: Graph) -> tuple[int, int]:
    """Largest vertex set inducing an odd-cycle-free subgraph: (b(G), witness)."""
    n = g.n
    if g.is_bipartite_subset(g.full):
        return n, g.full
    best, best_mask = alpha(g)  # independent sets are bipartite

    def rec(v: int, chosen: int, count: int) -> None:
        nonlocal best, best_mask
        if count > best:
            best, best_mask = count, chosen
        if v == n or count + (n - v) <= best:
            return
        vb = 1 << v
        if g.is_bipartite_subset(chosen | vb):
            rec(v + 1, chosen | vb, count + 1)
        rec(v + 1, chosen, count)

    rec(0, 0, 0)
    return best, best_mask


# -- optimal dominating sets ----------------------------------------------------

def optimal_dominating_set(g: Graph) -> DominationCertificate:
    """Minimum dominating set maximizing induced independence, then fewest
    induced edges, then smallest bitmask."""
    mins = enumerate_min_dominating_sets(g)
    best_key: tuple[int, int, int] | None = None
    for d in mins:
        a_d, _ = alpha_within(g, d)
        key = (-a_d, g.induced_edge_count(d), d)
        if best_key is None or key < best_key:
            best_key = key
    assert best_key is not None
    neg_a, edges, d = best_key
    return DominationCertificate(
        d_set=d,
        size=d.bit_count(),
        alpha_of_d=-neg_a,
        induced_edges=edges,
        isolate_count=g.induced_isolates(d).bit_count(),
    )
