"""Construction machinery: partitions, ISR search, certificate builders,
the trichotomy, and the gamma-5 pipeline, including negative fixtures."""

from itertools import permutations, product

import pytest

from invdom import solvers
from invdom.certificates import (
    DominationCertificate,
    check_inverse_certificate,
)
from invdom.constructions import (
    IsrPair,
    PartialIsr,
    biglemma_trichotomy,
    bipartite_inverse_construct,
    expand_to_maximal_independent,
    find_isr,
    find_special_independent,
    gamma5_construct,
    haxell_condition,
    inddom_construct,
    lemma41_check,
    max_partial_isr,
    pad_with_k2,
    standard_partition,
    superisrs,
    theorem_main_construct,
    two_partial_isrs,
    validate_isr_pair,
    validate_partial_isr,
)
from invdom.errors import (
    HasIsolates,
    InternalContradiction,
    NotDominated,
    PreconditionViolated,
    SeedNotIndependent,
    TooLarge,
)
from invdom.generate import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    star_graph,
    with_pendant_pairs,
)
from invdom.graph import Graph, bits, mask_of, to_sorted


# -- standard partitions ------------------------------------------------------

def test_standard_partition_p4(p4):
    part = standard_partition(p4, (1, 2), mask_of((0, 3)))
    assert part.cells == (1 << 0, 1 << 3)
    part = standard_partition(p4, (2, 1), mask_of((0, 3)))
    assert part.cells == (1 << 3, 1 << 0)


def test_standard_partition_single_rep(c5):
    part = standard_partition(c5, (0,), c5.adj[0])
    assert part.cells == (c5.adj[0],)


def test_standard_partition_cells_partition_universe(corpus7):
    for g in corpus7[6]:
        if g.has_isolated_vertex():
            continue
        d = solvers.gamma(g)[1]
        reps = sorted(bits(d))
        part = standard_partition(g, reps, g.full & ~d)
        union = 0
        for cell in part.cells:
            assert not cell & union
            union |= cell
        assert union == g.full & ~d


def test_standard_partition_not_dominated(p4):
    with pytest.raises(NotDominated):
        standard_partition(p4, (0,), mask_of((2, 3)))


def test_standard_partition_rejects_overlap(p4):
    with pytest.raises(ValueError):
        standard_partition(p4, (0,), mask_of((0, 1)))


# -- haxell condition -----------------------------------------------------------

def test_haxell_single_cell(c4):
    assert haxell_condition(c4, [mask_of((0,))]) is None


def test_haxell_empty_cell(c4):
    assert haxell_condition(c4, [mask_of((0,)), 0]) == (1,)


def test_haxell_adjacent_singletons(k2):
    assert haxell_condition(k2, [1 << 0, 1 << 1]) == (0, 1)


def test_haxell_soundness_small(corpus7):
    """Whenever the condition holds, an ISR exists (converse not asserted)."""
    checked = 0
    for g in corpus7[5]:
        d = solvers.gamma(g)[1]
        reps = sorted(bits(d))
        cells = standard_partition(g, reps, g.full & ~d).cells
        if haxell_condition(g, cells) is None:
            assert find_isr(g, cells) is not None
            checked += 1
    assert checked > 0


# -- ISR search -------------------------------------------------------------------

def test_find_isr_examples(c4, k2):
    isr = find_isr(c4, [1 << 0, 1 << 2])
    assert isr.members == mask_of((0, 2))
    assert isr.index_map == {0: 0, 2: 1}
    assert find_isr(k2, [1 << 0, 1 << 1]) is None
    singles = Graph(3)
    assert find_isr(singles, [1, 2, 4]).members == 0b111


def test_find_isr_empty_family(c4):
    assert find_isr(c4, []).members == 0


def test_find_isr_completeness_small(corpus7):
    """Backtracking agrees with brute-force transversal enumeration."""
    import random

    rng = random.Random(11)
    for g in corpus7[6][:80]:
        verts = list(range(g.n))
        rng.shuffle(verts)
        cells = [mask_of(verts[i::3]) for i in range(3)]
        cells = [c for c in cells if c]
        brute = any(
            g.is_independent(mask_of(combo))
            for combo in product(*[list(bits(c)) for c in cells])
        )
        assert (find_isr(g, cells) is not None) == brute


def test_max_partial_isr_examples(k2, c4):
    assert max_partial_isr(k2, [1 << 0, 1 << 1]).size == 1
    assert max_partial_isr(c4, [1 << 0, 1 << 2]).size == 2
    big = max_partial_isr(c4, [1 << 0, 1 << 1, 1 << 2])
    assert big.size == 2
    assert validate_partial_isr(c4, [1 << 0, 1 << 1, 1 << 2], big) == []


def test_max_partial_isr_exactness(corpus7):
    """Matches exhaustive search over subfamilies and transversals."""
    for g in corpus7[5][:25]:
        cells = [g.adj[v] & ~((1 << v) - 1) & ~(1 << v) for v in range(min(g.n, 3))]
        cells = [c for c in cells if c]
        # make cells disjoint by greedy stripping
        taken = 0
        cleaned = []
        for c in cells:
            cleaned.append(c & ~taken)
            taken |= c
        cells = [c for c in cleaned if c]
        best = 0
        for pick in range(1 << len(cells)):
            chosen = [list(bits(cells[i])) for i in range(len(cells)) if pick >> i & 1]
            if any(
                g.is_independent(mask_of(combo)) for combo in product(*chosen)
            ) or not chosen:
                best = max(best, len(chosen))
        assert max_partial_isr(g, cells).size == best


# -- two partial ISRs ----------------------------------------------------------------

def test_two_partial_isrs_trivial_empty(c4):
    d = mask_of((0, 2))
    pair = two_partial_isrs(c4, d, d, ())
    assert pair.r1.members == 0 and pair.r2.members == 0


def test_two_partial_isrs_single_cell(p4):
    pair = two_partial_isrs(p4, mask_of((1, 2)), 1 << 1, (2,))
    hit = pair.r1 if pair.r1.members else pair.r2
    assert hit.size == 1


def test_two_partial_isrs_c6_from_optimal():
    c6 = cycle_graph(6)
    cert = solvers.optimal_dominating_set(c6)
    f = expand_to_maximal_independent(c6, 0, cert.d_set)
    rest = sorted(bits(cert.d_set & ~f))
    pair = two_partial_isrs(c6, cert.d_set, f, rest)
    universe = c6.full & ~cert.d_set & ~c6.open_neighborhood(f)
    cells = standard_partition(c6, rest, universe).cells
    assert validate_isr_pair(c6, cells, pair) == []


def _doubled_isr_exists(g: Graph, universe: int, cells) -> bool:
    """Oracle: full ISR in two disjoint copies of G[universe]."""
    verts = sorted(bits(universe))
    index = {v: i for i, v in enumerate(verts)}
    m = len(verts)
    rows = [0] * (2 * m)
    for v in verts:
        for u in bits(g.adj[v] & universe):
            rows[index[v]] |= 1 << index[u]
            rows[index[v] + m] |= 1 << (index[u] + m)
    doubled = Graph.from_rows(rows)
    w_cells = []
    for cell in cells:
        w = 0
        for v in bits(cell):
            w |= 1 << index[v]
            w |= 1 << (index[v] + m)
        w_cells.append(w)
    return find_isr(doubled, w_cells) is not None


def test_two_partial_isrs_matches_doubled_graph_oracle(corpus7):
    """The index-bipartition search equals the doubled-graph view (<= 4 cells)."""
    checked = 0
    for g in corpus7[6]:
        if g.has_isolated_vertex():
            continue
        for d in solvers.enumerate_min_dominating_sets(g):
            f = expand_to_maximal_independent(g, 0, d)
            rest = sorted(bits(d & ~f))
            if not rest or len(rest) > 4:
                continue
            universe = g.full & ~d & ~g.open_neighborhood(f)
            cells = standard_partition(g, rest, universe).cells
            assert _doubled_isr_exists(g, universe, cells)
            pair = two_partial_isrs(g, d, f, rest)
            assert validate_isr_pair(g, cells, pair) == []
            checked += 1
    assert checked > 50


def test_two_partial_isrs_contradiction_on_bad_input():
    """Non-minimum D with an empty cell exhausts the search; the doubled
    oracle agrees that no ISR exists."""
    g = Graph(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    d = mask_of((0, 1, 2))  # dominating but not minimum (gamma is 2)
    f = 1 << 0
    universe = g.full & ~d & ~g.open_neighborhood(f)
    cells = standard_partition(g, (1, 2), universe).cells
    assert cells[1] == 0
    assert not _doubled_isr_exists(g, universe, cells)
    with pytest.raises(InternalContradiction):
        two_partial_isrs(g, d, f, (1, 2))


def test_two_partial_isrs_validates_structure(c4):
    with pytest.raises(ValueError):
        two_partial_isrs(c4, mask_of((0, 2)), 1 << 1, (2,))  # f not inside d
    with pytest.raises(ValueError):
        two_partial_isrs(c4, mask_of((0, 2)), 1 << 0, (0,))  # ordering wrong


def test_pendant_gadget_all_orderings():
    """|D - F| = 4 on the K5 pendant gadget: every ordering works."""
    g = with_pendant_pairs(complete_graph(5), 2)
    cert = solvers.optimal_dominating_set(g)
    d = cert.d_set
    f = expand_to_maximal_independent(g, 0, d)
    rest = sorted(bits(d & ~f))
    assert len(rest) == 4
    universe = g.full & ~d & ~g.open_neighborhood(f)
    for ordering in permutations(rest):
        cells = standard_partition(g, ordering, universe).cells
        pair = two_partial_isrs(g, d, f, ordering)
        assert validate_isr_pair(g, cells, pair) == []
        assert 2 * max_partial_isr(g, cells).size >= len(cells)


# -- expansion ---------------------------------------------------------------------

def test_expand_examples(c5):
    triple = Graph(3)
    assert expand_to_maximal_independent(triple, 0, triple.full) == 0b111
    assert expand_to_maximal_independent(c5, mask_of((0, 2)), c5.full) == mask_of((0, 2))
    assert expand_to_maximal_independent(c5, 1 << 0, c5.full) == mask_of((0, 2))


def test_expand_rejects_bad_seed(c4):
    with pytest.raises(SeedNotIndependent):
        expand_to_maximal_independent(c4, mask_of((0, 1)), c4.full)
    with pytest.raises(ValueError):
        expand_to_maximal_independent(c4, 1 << 0, 1 << 1)


# -- inddom ------------------------------------------------------------------------

def test_inddom_c4(c4):
    cert = inddom_construct(c4, mask_of((0, 2)), mask_of((0, 2)))
    assert cert.t_set == mask_of((1, 3))
    assert cert.bound_kind == "alpha" and cert.bound_value == 2
    assert check_inverse_certificate(c4, cert, 2) == []


def test_inddom_star(star4):
    cert = inddom_construct(star4, 1 << 0, 1 << 0)
    assert cert.t_set == mask_of((1, 2, 3, 4))
    assert cert.bound_value == 4


def test_inddom_rejects_bad_input(c4, p4):
    with pytest.raises(PreconditionViolated):
        inddom_construct(c4, mask_of((0, 1)), mask_of((0, 1)))  # s not independent
    with pytest.raises(PreconditionViolated):
        inddom_construct(p4, mask_of((1, 2)), 1 << 1)  # {1}-D misses 2
    with pytest.raises(PreconditionViolated):
        inddom_construct(Graph(3, [(0, 1)]), mask_of((0, 2)), mask_of((0, 2)))


# -- main theorem construction --------------------------------------------------------

def test_main_construct_k2(k2):
    cert = theorem_main_construct(k2, 1 << 0)
    assert cert.t_set == 1 << 1
    assert cert.bound_kind == "main_theorem" and cert.bound_value == 1


def test_main_construct_star(star4):
    cert = theorem_main_construct(star4, 1 << 0)
    assert cert.t_set == mask_of((1, 2, 3, 4))
    assert cert.bound_value == 4


def test_main_construct_rejects(star4):
    with pytest.raises(HasIsolates):
        theorem_main_construct(Graph(2), 0b11)
    with pytest.raises(PreconditionViolated):
        theorem_main_construct(star4, mask_of((1, 2, 3, 4)))  # not minimum


# -- bipartite construction ------------------------------------------------------------

def test_bipartite_construct_k2(k2):
    cert = bipartite_inverse_construct(k2, 1 << 0)
    assert cert.t_set == 1 << 1
    assert cert.bound_kind == "bipartite_b" and cert.bound_value == 2


def test_bipartite_construct_c4(c4):
    cert = bipartite_inverse_construct(c4, mask_of((0, 2)))
    assert cert.t_set & mask_of((1, 3)) == cert.t_set & ~mask_of((0, 2))
    assert cert.t_set.bit_count() <= 4
    assert check_inverse_certificate(c4, cert, 2) == []


# -- special independent sets ----------------------------------------------------------

def test_find_special_independent_examples(c4, k4):
    assert find_special_independent(c4, mask_of((0, 2))) == mask_of((0, 2))
    s = find_special_independent(c4, mask_of((0, 1)))
    assert s is not None and c4.is_independent(s)
    out = s & ~mask_of((0, 1))
    rest = mask_of((0, 1)) & ~s
    assert rest & ~c4.open_neighborhood(out) == 0
    assert find_special_independent(k4, 1 << 0) == 1 << 0


def test_find_special_independent_none_exists():
    """K4 with every vertex given a private leaf: D = K4 is forced and no
    independent S can cover the clique from outside."""
    g = with_pendant_pairs(complete_graph(4), 2)
    cert = solvers.optimal_dominating_set(g)
    assert cert.d_set == mask_of((0, 1, 2, 3))
    assert find_special_independent(g, cert.d_set) is None


def test_find_special_independent_matches_brute_force(corpus7):
    for g in corpus7[5]:
        d = solvers.gamma(g)[1]
        found = find_special_independent(g, d)
        brute = None
        for s in range(1 << g.n):
            if not g.is_independent(s):
                continue
            if d & ~s & ~g.open_neighborhood(s & ~d):
                continue
            brute = s
            break
        assert (found is None) == (brute is None)
        if found is not None:
            assert g.is_independent(found)
            assert not d & ~found & ~g.open_neighborhood(found & ~d)


# -- trichotomy and private-neighbor audit ----------------------------------------------

def test_lemma41_independent_d_vacuous(c4):
    cert = solvers.optimal_dominating_set(c4)
    assert lemma41_check(c4, cert) == []


def test_lemma41_adversarial_non_optimal(p4):
    cert = DominationCertificate(
        d_set=mask_of((1, 2)), size=2, alpha_of_d=1, induced_edges=1, isolate_count=0
    )
    assert lemma41_check(p4, cert) == [(1, 1), (2, 1)]


def test_trichotomy_found_s(k2, c4):
    for g in (k2, c4):
        outcome = biglemma_trichotomy(g, solvers.optimal_dominating_set(g))
        assert outcome.found_s is not None


def test_trichotomy_conditions_branch():
    g = with_pendant_pairs(complete_graph(5), 2)
    outcome = biglemma_trichotomy(g, solvers.optimal_dominating_set(g))
    assert outcome.found_s is None
    conds = outcome.conditions
    assert conds.cond1 and conds.cond2 and conds.cond3
    assert conds.isolate_count == 0


def test_trichotomy_rejects_isolates():
    with pytest.raises(PreconditionViolated):
        biglemma_trichotomy(
            Graph(3, [(0, 1)]),
            DominationCertificate(0b101, 2, 2, 0, 2),
        )


# -- superisrs ---------------------------------------------------------------------------

@pytest.mark.parametrize("base_maker", [lambda: cycle_graph(5), lambda: complete_graph(5)])
def test_superisrs_on_pendant_gadgets(base_maker):
    g = with_pendant_pairs(base_maker(), 2)
    cert = solvers.optimal_dominating_set(g)
    assert cert.size == 5 and cert.alpha_of_d <= 2 and cert.isolate_count == 0
    ordering, r1, r2 = superisrs(g, cert)
    cells = standard_partition(g, ordering, g.full & ~cert.d_set).cells
    assert validate_partial_isr(g, cells, r1) == []
    assert validate_partial_isr(g, cells, r2) == []
    assert r1.indices == {0, 1, 2} and r2.indices == {3, 4}
    assert sorted(ordering) == to_sorted(cert.d_set)


def test_superisrs_precondition_violations(c4):
    cert = solvers.optimal_dominating_set(c4)
    with pytest.raises(PreconditionViolated):
        superisrs(c4, cert)  # |D| = 2, not 5


def test_superisrs_rejects_high_independence():
    g = disjoint_union(Graph(2, [(0, 1)]), Graph(2, [(0, 1)]))
    for _ in range(3):
        g = disjoint_union(g, Graph(2, [(0, 1)]))
    cert = solvers.optimal_dominating_set(g)  # 5K2: alpha(D) = 5
    with pytest.raises(PreconditionViolated):
        superisrs(g, cert)


# -- gamma5 pipeline ----------------------------------------------------------------------

def test_gamma5_five_k2():
    k2 = Graph(2, [(0, 1)])
    g = k2
    for _ in range(4):
        g = disjoint_union(g, k2)
    cert = gamma5_construct(g)
    assert cert.t_set.bit_count() <= 5
    assert check_inverse_certificate(g, cert, 5) == []


def test_gamma5_five_stars():
    g = star_graph(3)
    for _ in range(4):
        g = disjoint_union(g, star_graph(3))
    assert solvers.gamma(g)[0] == 5
    alpha_value = solvers.alpha(g)[0]
    assert alpha_value == 15
    cert = gamma5_construct(g)
    assert cert.t_set.bit_count() <= alpha_value
    assert check_inverse_certificate(g, cert, 5) == []
    # the only disjoint dominating set is the full leaf set
    assert solvers.inverse_gamma(g)[0] == 15


def test_gamma5_pendant_gadgets_run_the_hard_branch():
    for base in (cycle_graph(5), complete_graph(5)):
        g = with_pendant_pairs(base, 2)
        cert = gamma5_construct(g)
        assert check_inverse_certificate(g, cert, 5) == []
        assert cert.t_set.bit_count() <= solvers.alpha(g)[0]


def test_gamma5_rejects_wrong_gamma(c4):
    with pytest.raises(PreconditionViolated):
        gamma5_construct(c4)
    with pytest.raises(HasIsolates):
        gamma5_construct(Graph(3, [(0, 1)]))


# -- padding -----------------------------------------------------------------------------

def test_pad_examples(k2, c4):
    assert pad_with_k2(k2, 0) == k2
    padded = pad_with_k2(k2, 1)
    assert padded.n == 4 and solvers.gamma(padded)[0] == 2
    assert solvers.alpha(padded)[0] == 2
    padded = pad_with_k2(c4, 2)
    assert padded.n == 8
    assert solvers.gamma(padded)[0] == 4 and solvers.alpha(padded)[0] == 4


def test_pad_too_large():
    with pytest.raises(TooLarge):
        pad_with_k2(Graph(63), 1)
