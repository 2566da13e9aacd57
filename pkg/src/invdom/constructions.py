"""Constructive machinery: standard partitions, ISR search, and the
certificate-producing inverse-domination constructions.

Each construction mirrors its existence proof step by step and re-checks
every claim the proof asserts; a failed check raises InternalContradiction
rather than emitting a bad certificate.  "Pick an arbitrary neighbor"
always means the lowest vertex id, so certificates are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from . import solvers
from .certificates import DominationCertificate, InverseCertificate
from .errors import (
    HasIsolates,
    InternalContradiction,
    LemmaViolated,
    NotDominated,
    PreconditionViolated,
    SeedNotIndependent,
    TooLarge,
)
from .graph import Graph, bits, disjoint_union, mask_of


# -- domain types -------------------------------------------------------------

@dataclass(frozen=True)
class StandardPartition:
    """Greedy cells V_i = N_universe(reps[i]) minus all earlier cells."""

    reps: tuple[int, ...]
    cells: tuple[int, ...]
    universe: int


@dataclass
class PartialIsr:
    """Independent set with one representative in each of the mapped cells."""

    members: int = 0
    index_map: dict[int, int] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return self.members.bit_count()

    @property
    def indices(self) -> frozenset[int]:
        return frozenset(self.index_map.values())


@dataclass
class IsrPair:
    """Two partial ISRs whose cell-index sets partition the whole family."""

    r1: PartialIsr
    r2: PartialIsr


@dataclass(frozen=True)
class TrichotomyConditions:
    isolate_count: int
    cond1: bool  # a+1 <= alpha(D) <= |D|-3
    cond2: bool  # |V| + a >= 3|D|
    cond3: bool  # |D| >= a+5


@dataclass(frozen=True)
class TrichotomyOutcome:
    """Either a special independent set, or the three structural inequalities."""

    found_s: int | None = None
    conditions: TrichotomyConditions | None = None


# -- validators (used by tests and by the constructions themselves) ------------

def validate_partial_isr(g: Graph, cells: Sequence[int], isr: PartialIsr) -> list[str]:
    problems = []
    if not g.is_independent(isr.members):
        problems.append("members are not independent")
    if mask_of(isr.index_map) != isr.members:
        problems.append("index_map keys disagree with members")
    seen: set[int] = set()
    for v, i in isr.index_map.items():
        if i in seen:
            problems.append(f"cell {i} represented twice")
        seen.add(i)
        if not (0 <= i < len(cells)) or not cells[i] >> v & 1:
            problems.append(f"vertex {v} not in cell {i}")
    return problems


def validate_isr_pair(g: Graph, cells: Sequence[int], pair: IsrPair) -> list[str]:
    problems = validate_partial_isr(g, cells, pair.r1)
    problems += validate_partial_isr(g, cells, pair.r2)
    if pair.r1.members & pair.r2.members:
        problems.append("the two ISRs share vertices")
    i1, i2 = pair.r1.indices, pair.r2.indices
    if i1 & i2:
        problems.append("the two ISRs share cell indices")
    if i1 | i2 != set(range(len(cells))):
        problems.append("cell indices of the pair do not cover the family")
    return problems


# -- standard partitions and ISR search ----------------------------------------

def standard_partition(g: Graph, x_ordered: Sequence[int], y: int) -> StandardPartition:
    """Partition of y by the greedy rule, in the given order of x.

    Requires x and y disjoint and every y-vertex to have an x-neighbor.
    """
    g.check_subset(y)
    x_mask = mask_of(x_ordered)
    if len(x_ordered) != x_mask.bit_count():
        raise ValueError("ordering repeats a vertex")
    if x_mask & y:
        raise ValueError("x and y intersect")
    if y & ~g.open_neighborhood(x_mask):
        missing = y & ~g.open_neighborhood(x_mask)
        raise NotDominated(f"universe vertices {list(bits(missing))} have no neighbor in x")
    cells = []
    taken = 0
    for d in x_ordered:
        cell = g.adj[d] & y & ~taken
        cells.append(cell)
        taken |= cell
    return StandardPartition(tuple(x_ordered), tuple(cells), y)


def haxell_condition(g: Graph, cells: Sequence[int]) -> tuple[int, ...] | None:
    """Check gamma(G[V_S]) >= 2|S| - 1 for every index subset S.

    Returns None when the condition holds (an independent transversal is
    then guaranteed to exist), otherwise the first violating index set in
    increasing-bitmask order, as a tuple of 0-based cell indices.
    """
    n = len(cells)
    for s_mask in range(1, 1 << n):
        union = 0
        for i in bits(s_mask):
            union |= cells[i]
        if solvers.gamma_induced(g, union) < 2 * s_mask.bit_count() - 1:
            return tuple(bits(s_mask))
    return None


def find_isr(g: Graph, cells: Sequence[int]) -> PartialIsr | None:
    """Full independent transversal by backtracking, or None.

    Cells must be pairwise disjoint; processed in index order with
    independence pruning against the partial choice.
    """
    n_cells = len(cells)
    choice: list[int] = []

    def rec(i: int, chosen: int) -> bool:
        if i == n_cells:
            return True
        for v in bits(cells[i]):
            if not g.adj[v] & chosen:
                choice.append(v)
                if rec(i + 1, chosen | (1 << v)):
                    return True
                choice.pop()
        return False

    if rec(0, 0):
        return PartialIsr(mask_of(choice), {v: i for i, v in enumerate(choice)})
    return None


def max_partial_isr(g: Graph, cells: Sequence[int]) -> PartialIsr:
    """Partial ISR hitting the maximum possible number of cells (exact)."""
    n_cells = len(cells)
    best: list[tuple[int, int]] = []
    cur: list[tuple[int, int]] = []

    def rec(i: int, chosen: int) -> None:
        nonlocal best
        if len(cur) > len(best):
            best = list(cur)
        if i == n_cells or len(cur) + (n_cells - i) <= len(best):
            return
        for v in bits(cells[i]):
            if not g.adj[v] & chosen:
                cur.append((v, i))
                rec(i + 1, chosen | (1 << v))
                cur.pop()
        rec(i + 1, chosen)  # skip this cell

    rec(0, 0)
    return PartialIsr(mask_of(v for v, _ in best), dict(best))


def two_partial_isrs(
    g: Graph, d_set: int, f_set: int, ordering: Sequence[int]
) -> IsrPair:
    """Split the standard partition of G-D-N(F) into two independent ISRs.

    D must be a minimum dominating set and F a maximal independent subset of
    it; the ordering enumerates D-F.  Existence is then guaranteed, so an
    exhausted search signals violated preconditions or a bug.
    """
    g.check_subset(d_set)
    if f_set & ~d_set:
        raise ValueError("f_set not contained in d_set")
    if not g.is_independent(f_set):
        raise ValueError("f_set not independent")
    if mask_of(ordering) != d_set & ~f_set:
        raise ValueError("ordering must enumerate d_set - f_set")
    universe = g.full & ~d_set & ~g.open_neighborhood(f_set)
    part = standard_partition(g, ordering, universe)
    cells = part.cells
    n = len(cells)

    for i1_mask in range(1 << n):
        side1 = [cells[i] for i in range(n) if i1_mask >> i & 1]
        side2 = [cells[i] for i in range(n) if not i1_mask >> i & 1]
        r1 = find_isr(g, side1)
        if r1 is None:
            continue
        r2 = find_isr(g, side2)
        if r2 is None:
            continue
        idx1 = [i for i in range(n) if i1_mask >> i & 1]
        idx2 = [i for i in range(n) if not i1_mask >> i & 1]
        pair = IsrPair(
            PartialIsr(r1.members, {v: idx1[j] for v, j in r1.index_map.items()}),
            PartialIsr(r2.members, {v: idx2[j] for v, j in r2.index_map.items()}),
        )
        problems = validate_isr_pair(g, cells, pair)
        if problems:
            raise InternalContradiction(
                "ISR pair failed validation", {"problems": problems}
            )
        return pair
    raise InternalContradiction(
        "no ISR bipartition exists; d_set is likely not minimum or f_set not maximal",
        {"d_set": d_set, "f_set": f_set, "cells": list(cells)},
    )


def expand_to_maximal_independent(g: Graph, seed: int, universe: int) -> int:
    """Greedy (by vertex id) maximal independent superset of seed in universe."""
    g.check_subset(universe)
    if seed & ~universe:
        raise ValueError("seed not contained in universe")
    if not g.is_independent(seed):
        raise SeedNotIndependent(f"seed {list(bits(seed))} spans an edge")
    out = seed
    for v in bits(universe & ~seed):
        if not g.adj[v] & out:
            out |= 1 << v
    return out


# -- certificate constructions ---------------------------------------------------

def _checked(g: Graph, cert: InverseCertificate, where: str) -> InverseCertificate:
    from .certificates import check_inverse_certificate

    problems = check_inverse_certificate(g, cert)
    if problems:
        raise InternalContradiction(
            f"{where} produced an invalid certificate", {"problems": problems, "cert": cert}
        )
    return cert


def _lowest_outside_neighbor(g: Graph, v: int, d_set: int, where: str) -> int:
    outside = g.adj[v] & ~d_set
    if not outside:
        raise InternalContradiction(
            f"{where}: vertex {v} of the dominating set has no outside neighbor "
            "(d_set cannot be a minimum dominating set of an isolate-free graph)",
            {"vertex": v, "d_set": d_set},
        )
    return outside & -outside  # lowest id as a one-bit mask


def _require_minimum_dominating(g: Graph, d_set: int, where: str) -> int:
    g.check_subset(d_set)
    if not g.is_dominating(d_set):
        raise PreconditionViolated(f"{where}: d_set does not dominate")
    k = solvers.gamma(g)[0]
    if d_set.bit_count() != k:
        raise PreconditionViolated(
            f"{where}: |d_set| = {d_set.bit_count()} but gamma = {k}"
        )
    return k


def inddom_construct(g: Graph, d_set: int, s: int) -> InverseCertificate:
    """Inverse dominating set of size <= alpha(G) from a special independent set.

    Requires S independent with S-D dominating D-S.  Expands S-D to a
    maximal independent set of G-D, then patches the still-undominated part
    of D with one outside neighbor each.
    """
    if g.has_isolated_vertex():
        raise PreconditionViolated("inddom_construct needs an isolate-free graph")
    _require_minimum_dominating(g, d_set, "inddom_construct")
    g.check_subset(s)
    if not g.is_independent(s):
        raise PreconditionViolated("s is not independent")
    s_out = s & ~d_set
    if d_set & ~s & ~g.open_neighborhood(s_out):
        raise PreconditionViolated("s - D does not dominate D - s")

    s1 = expand_to_maximal_independent(g, s_out, g.full & ~d_set)
    undominated = d_set & ~g.open_neighborhood(s1)
    t = s1
    for v in bits(undominated):
        t |= _lowest_outside_neighbor(g, v, d_set, "inddom_construct")
    a = solvers.alpha(g)[0]
    return _checked(g, InverseCertificate(d_set, t, "alpha", a), "inddom_construct")


def theorem_main_construct(g: Graph, d_set: int) -> InverseCertificate:
    """Disjoint dominating set within alpha(G) + floor((gamma(G)-1)/2).

    Follows the partial-ISR proof: maximal independent F inside D, standard
    partition of (V-D)-N(F) over D-F, a largest partial ISR expanded to a
    maximal independent set of G-D, then two patching rounds with outside
    neighbors (for F-N(S), then for the unhit part of D-F).
    """
    if g.has_isolated_vertex():
        raise HasIsolates("theorem_main_construct needs an isolate-free graph")
    if g.n == 0:
        raise PreconditionViolated("empty graph")
    k = _require_minimum_dominating(g, d_set, "theorem_main_construct")

    f_set = expand_to_maximal_independent(g, 0, d_set)
    rest = sorted(bits(d_set & ~f_set))
    n_cells = len(rest)
    universe = g.full & ~d_set & ~g.open_neighborhood(f_set)
    part = standard_partition(g, rest, universe)

    isr = max_partial_isr(g, part.cells)
    if 2 * isr.size < n_cells:
        raise InternalContradiction(
            "largest partial ISR smaller than half the family",
            {"cells": list(part.cells), "isr": isr.members},
        )
    s = expand_to_maximal_independent(g, isr.members, g.full & ~d_set)

    f_prime = f_set & ~g.open_neighborhood(s)
    s1 = s
    for v in bits(f_prime):
        s1 |= _lowest_outside_neighbor(g, v, d_set, "theorem_main_construct")
    unhit = d_set & ~f_set & ~g.open_neighborhood(s1)
    if 2 * unhit.bit_count() > n_cells:
        raise InternalContradiction(
            "more than half of D-F left undominated after expansion",
            {"unhit": unhit, "isr": isr.members},
        )
    t = s1
    for v in bits(unhit):
        t |= _lowest_outside_neighbor(g, v, d_set, "theorem_main_construct")

    a = solvers.alpha(g)[0]
    bound = a + (k - 1) // 2
    return _checked(
        g, InverseCertificate(d_set, t, "main_theorem", bound), "theorem_main_construct"
    )


def bipartite_inverse_construct(g: Graph, d_set: int) -> InverseCertificate:
    """Disjoint dominating set within b(G), the largest induced-bipartite order.

    The union of the two partial ISRs induces a bipartite subgraph; expand it
    to a maximal bipartite-inducing set B in G-D and patch F-N(B) with
    outside neighbors.
    """
    if g.has_isolated_vertex():
        raise HasIsolates("bipartite_inverse_construct needs an isolate-free graph")
    if g.n == 0:
        raise PreconditionViolated("empty graph")
    _require_minimum_dominating(g, d_set, "bipartite_inverse_construct")

    f_set = expand_to_maximal_independent(g, 0, d_set)
    rest = sorted(bits(d_set & ~f_set))
    pair = two_partial_isrs(g, d_set, f_set, rest)

    b_mask = pair.r1.members | pair.r2.members
    if not g.is_bipartite_subset(b_mask):
        raise InternalContradiction("ISR union is not bipartite", {"b": b_mask})
    for v in bits(g.full & ~d_set & ~b_mask):
        if g.is_bipartite_subset(b_mask | (1 << v)):
            b_mask |= 1 << v

    f0 = f_set & ~g.open_neighborhood(b_mask)
    if not g.is_bipartite_subset(b_mask | f0):
        raise InternalContradiction(
            "B plus the unreached part of F stopped being bipartite",
            {"b": b_mask, "f0": f0},
        )
    t = b_mask
    for v in bits(f0):
        t |= _lowest_outside_neighbor(g, v, d_set, "bipartite_inverse_construct")

    b_value = solvers.max_induced_bipartite(g)[0]
    return _checked(
        g, InverseCertificate(d_set, t, "bipartite_b", b_value), "bipartite_inverse_construct"
    )


# -- the trichotomy and its special independent sets -----------------------------

def find_special_independent(g: Graph, d_set: int) -> int | None:
    """Independent S with S-D dominating D-S, or None (exhaustive search).

    Reduction: such an S exists iff some independent S0 <= V-D leaves
    D - N(S0) independent, in which case S0 | (D - N(S0)) works.  The search
    walks independent subsets of V-D (excluding first, so an independent D
    returns S = D immediately) and prunes branches whose remaining
    candidates cannot neutralize every edge inside G[D].
    """
    g.check_subset(d_set)
    outside = g.full & ~d_set

    def uncovered_ok(s0: int) -> bool:
        return g.is_independent(d_set & ~g.open_neighborhood(s0))

    def coverable(s0: int, cand: int) -> bool:
        reach = g.open_neighborhood(s0 | cand)
        return g.is_independent(d_set & ~reach)

    def rec(s0: int, cand: int) -> int | None:
        if uncovered_ok(s0):
            return s0 | (d_set & ~g.open_neighborhood(s0))
        if not cand or not coverable(s0, cand):
            return None
        v = cand & -cand
        found = rec(s0, cand ^ v)  # exclude lowest candidate first
        if found is not None:
            return found
        vid = v.bit_length() - 1
        return rec(s0 | v, cand & ~(g.adj[vid] | v))

    return rec(0, outside)


def lemma41_check(g: Graph, cert: DominationCertificate) -> list[tuple[int, int]]:
    """Private-neighbor audit: every d_set member that is non-isolated inside
    G[D] must have at least two private neighbors.

    Returns the violations as (vertex, private_count) pairs; empty means ok.
    Violations are possible when the certificate is not actually optimal.
    """
    d = cert.d_set
    isolates = g.induced_isolates(d)
    out = []
    for v in bits(d & ~isolates):
        count = g.private_neighbors(d, v).bit_count()
        if count < 2:
            out.append((v, count))
    return out


def biglemma_trichotomy(g: Graph, cert: DominationCertificate) -> TrichotomyOutcome:
    """Either a special independent set exists, or three structural
    inequalities all hold.  Anything else is a reportable counterexample."""
    if g.has_isolated_vertex():
        raise PreconditionViolated("trichotomy needs an isolate-free graph")
    d = cert.d_set
    s = find_special_independent(g, d)
    if s is not None:
        return TrichotomyOutcome(found_s=s)
    a = g.induced_isolates(d).bit_count()
    alpha_d = solvers.alpha_within(g, d)[0]
    size = d.bit_count()
    conds = TrichotomyConditions(
        isolate_count=a,
        cond1=a + 1 <= alpha_d <= size - 3,
        cond2=g.n + a >= 3 * size,
        cond3=size >= a + 5,
    )
    if not (conds.cond1 and conds.cond2 and conds.cond3):
        raise LemmaViolated(
            "no special independent set and the structural inequalities fail",
            {"cert": cert, "conditions": conds},
        )
    return TrichotomyOutcome(conditions=conds)


# -- the gamma = 5 pipeline -------------------------------------------------------

def superisrs(
    g: Graph, cert: DominationCertificate
) -> tuple[tuple[int, ...], PartialIsr, PartialIsr]:
    """Ordering (d1..d5) of an optimal D plus ISRs for cells 1-3 and 4-5.

    Applies when |D| = 5, the induced independence of D is at most 2, and
    G[D] has no isolated vertices.  The search follows the proof's choice
    rules: d1,d2 nonadjacent when possible, r3 a vertex undominated by
    {d1,d2,r1,r2}, d3 one of its D-neighbors.
    """
    if g.has_isolated_vertex():
        raise PreconditionViolated("superisrs needs an isolate-free graph")
    d = cert.d_set
    if d.bit_count() != 5:
        raise PreconditionViolated(f"|D| = {d.bit_count()}, need exactly 5")
    if cert.alpha_of_d > 2:
        raise PreconditionViolated(f"alpha(D) = {cert.alpha_of_d} > 2")
    if g.induced_isolates(d):
        raise PreconditionViolated("G[D] has isolated vertices")

    members = sorted(bits(d))
    pairs = [
        (d1, d2)
        for d1 in members
        for d2 in members
        if d1 != d2 and not g.adj[d1] >> d2 & 1
    ]
    if not pairs:  # D is a clique; any ordered pair obeys the choice rule
        pairs = [(d1, d2) for d1 in members for d2 in members if d1 != d2]

    outside = g.full & ~d
    for d1, d2 in pairs:
        v1 = g.adj[d1] & outside
        v2 = g.adj[d2] & outside & ~v1
        for r1 in bits(v1):
            for r2 in bits(v2):
                if g.adj[r1] >> r2 & 1:
                    continue
                blocked = g.closed_neighborhood(mask_of((d1, d2, r1, r2)))
                for r3 in bits(g.full & ~blocked):
                    if d >> r3 & 1:
                        continue
                    d3_opts = g.adj[r3] & d & ~mask_of((d1, d2))
                    if not d3_opts:
                        continue
                    d3 = (d3_opts & -d3_opts).bit_length() - 1
                    d4, d5 = sorted(bits(d & ~mask_of((d1, d2, d3))))
                    ordering = (d1, d2, d3, d4, d5)
                    part = standard_partition(g, ordering, outside)
                    r1_isr = PartialIsr(
                        mask_of((r1, r2, r3)), {r1: 0, r2: 1, r3: 2}
                    )
                    if validate_partial_isr(g, part.cells, r1_isr):
                        continue
                    tail = find_isr(g, part.cells[3:])
                    if tail is None:
                        continue
                    r2_isr = PartialIsr(
                        tail.members, {v: i + 3 for v, i in tail.index_map.items()}
                    )
                    return ordering, r1_isr, r2_isr
    raise InternalContradiction(
        "no ordering admits the two ISRs; the certificate is likely not optimal",
        {"cert": cert},
    )


def _transversals(g: Graph, cells: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All independent transversals of the cells, in lexicographic order."""

    def rec(i: int, chosen: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if i == len(cells):
            yield tuple(acc)
            return
        for v in bits(cells[i]):
            if not g.adj[v] & chosen:
                acc.append(v)
                yield from rec(i + 1, chosen | (1 << v), acc)
                acc.pop()

    return rec(0, 0, [])


def gamma5_construct(g: Graph) -> InverseCertificate:
    """Inverse dominating set within alpha(G) for graphs with gamma = 5.

    Cascade over an optimal dominating set D: if D has induced independence
    at least 3 or an isolated vertex, a special independent set must exist
    and the alpha-bounded construction finishes.  Otherwise run the
    two-ISR machinery: a partial ISR of size 4 is an immediate win; failing
    that, pick the ISR pair minimizing cross edges and analyse the set the
    pair misses.  Every claim is re-checked; a dead end raises.
    """
    if g.has_isolated_vertex():
        raise HasIsolates("gamma5_construct needs an isolate-free graph")
    cert = solvers.optimal_dominating_set(g)
    if cert.size != 5:
        raise PreconditionViolated(f"gamma = {cert.size}, need exactly 5")
    d = cert.d_set
    alpha_value = solvers.alpha(g)[0]

    if cert.alpha_of_d >= 3 or cert.isolate_count >= 1:
        s = find_special_independent(g, d)
        if s is None:
            raise InternalContradiction(
                "trichotomy guarantees a special independent set here",
                {"cert": cert},
            )
        return inddom_construct(g, d, s)

    ordering, r1_seed, r2_seed = superisrs(g, cert)
    part = standard_partition(g, ordering, g.full & ~d)
    cells = part.cells

    # cheap shortcut: a partial ISR hitting 4 cells yields a special set
    big = max_partial_isr(g, cells)
    if big.size >= 4:
        s = big.members
        missing = d & ~g.open_neighborhood(s)
        if missing.bit_count() > 1:
            raise InternalContradiction(
                "size-4 partial ISR left more than one D-vertex undominated",
                {"isr": big.members, "missing": missing},
            )
        return inddom_construct(g, d, s | missing)

    # choose the (R1, R2) pair minimizing edges between the two sides
    best_pair: tuple[int, int] | None = None
    best_edges = -1
    for t1 in _transversals(g, cells[:3]):
        m1 = mask_of(t1)
        for t2 in _transversals(g, cells[3:]):
            m2 = mask_of(t2)
            cross = sum((g.adj[v] & m1).bit_count() for v in t2)
            if best_pair is None or cross < best_edges:
                best_pair, best_edges = (m1, m2), cross
                if cross == 0:
                    break
        if best_edges == 0:
            break
    if best_pair is None:
        raise InternalContradiction(
            "superisrs succeeded but the pair enumeration found nothing",
            {"cells": list(cells)},
        )
    m1, m2 = best_pair

    undominated = g.full & ~g.closed_neighborhood(m1 | m2)
    if not undominated:
        return _checked(
            g, InverseCertificate(d, m1 | m2, "alpha", alpha_value), "gamma5_construct"
        )

    if undominated & d:
        raise InternalContradiction(
            "the ISR pair misses part of D", {"undominated": undominated}
        )
    hit_cells = [i for i in range(5) if undominated & cells[i]]
    if len(hit_cells) != 1 or hit_cells[0] > 2:
        raise InternalContradiction(
            "undominated set spreads over several cells",
            {"undominated": undominated, "cells": hit_cells},
        )
    k = hit_cells[0]
    r_k = m1 & cells[k]
    r_star = (m1 | m2) & ~r_k

    rest_cells = 0
    for i in range(5):
        if i != k:
            rest_cells |= cells[i]
    unreached = rest_cells & ~g.closed_neighborhood(r_star)
    if unreached:
        w = unreached & -unreached
        wid = w.bit_length() - 1
        if undominated & ~g.adj[wid]:
            raise InternalContradiction(
                "witness vertex is not adjacent to the whole undominated set",
                {"w": wid, "undominated": undominated},
            )
        if alpha_value < 6:
            raise InternalContradiction(
                "independence number below 6 in the hard branch",
                {"alpha": alpha_value},
            )
        return _checked(
            g,
            InverseCertificate(d, m1 | m2 | w, "alpha", alpha_value),
            "gamma5_construct",
        )

    raise InternalContradiction(
        "all branches exhausted: R* dominates every other cell, which "
        "contradicts the optimality of D",
        {"cert": cert, "r1": m1, "r2": m2, "cells": list(cells)},
    )


def pad_with_k2(g: Graph, t: int) -> Graph:
    """Disjoint union of g with t single-edge components."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    if g.n + 2 * t > 64:
        raise TooLarge(f"padding to {g.n + 2 * t} vertices exceeds the 64 cap")
    out = g
    for _ in range(t):
        out = disjoint_union(out, Graph(2, [(0, 1)]))
    return out
