import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import analyzed
from cyclelab.cycles import (
    CycleSeq,
    EnumerationLimitError,
    InvalidCycleError,
    ResidualProfile,
    analyze,
    canonical_cycle,
    circumference,
    cycles_of_order,
    enumerate_longest_cycles,
    is_CD_lambda_cycle,
    is_D_lambda_cycle,
    is_PD_lambda_cycle,
    longest_path_order,
    residual_profile,
    validate_cycle,
)
from cyclelab.graph import (
    EMPTY_GRAPH,
    Graph,
    complete,
    complete_bipartite,
    cycle,
    empty,
    is_independent,
    path,
    petersen,
    to_graph6,
)


def c6_with_pendant_triangle():
    # triangle 0-6-7 hangs off vertex 0 of the 6-cycle 0..5
    return Graph.from_edges(8, [(i, (i + 1) % 6) for i in range(6)] + [(0, 6), (0, 7), (6, 7)])


def c6_with_pendant_path():
    # path 0-6-7 hangs off vertex 0 of the 6-cycle 0..5
    return Graph.from_edges(8, [(i, (i + 1) % 6) for i in range(6)] + [(0, 6), (6, 7)])


def triangles_joined_by_edge():
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])


HAM_C6 = CycleSeq((0, 1, 2, 3, 4, 5))


class TestLongestPath:
    def test_examples(self):
        assert longest_path_order(path(4)) == 4
        assert longest_path_order(EMPTY_GRAPH) == 0
        assert longest_path_order(empty(3)) == 1

    def test_petersen_traceable(self):
        assert longest_path_order(petersen()) == 10
        assert oracles.longest_path(petersen()) == 10


class TestCircumference:
    def test_extended_orders(self):
        assert circumference(EMPTY_GRAPH) == 0
        assert circumference(empty(4)) == 1
        assert circumference(path(2)) == 2
        assert circumference(path(5)) == 2
        assert circumference(cycle(5)) == 5

    def test_petersen_is_hypohamiltonian(self):
        p = petersen()
        assert circumference(p) == 9
        assert not oracles.cycles_of_length(p, 10)
        assert oracles.cycles_of_length(p, 9)


class TestEnumeration:
    def test_c6_single_cycle(self):
        assert enumerate_longest_cycles(cycle(6)) == [HAM_C6]

    def test_k4_three_hamilton_cycles(self):
        found = enumerate_longest_cycles(complete(4))
        assert len(found) == 3 == len(oracles.cycles_of_length(complete(4), 4))

    def test_petersen_nine_cycles(self):
        found = enumerate_longest_cycles(petersen())
        assert len(found) == len(oracles.cycles_of_length(petersen(), 9)) == 20

    def test_small_circumference_cases(self):
        assert enumerate_longest_cycles(empty(3)) == [CycleSeq((0,)), CycleSeq((1,)), CycleSeq((2,))]
        assert enumerate_longest_cycles(path(3)) == [CycleSeq((0, 1)), CycleSeq((1, 2))]

    def test_limit_is_an_error_not_truncation(self):
        with pytest.raises(EnumerationLimitError):
            enumerate_longest_cycles(complete(6), limit=10)
        assert len(enumerate_longest_cycles(complete(6), limit=60)) == 60

    def test_canonical_form(self):
        assert canonical_cycle([3, 1, 2]) == CycleSeq((1, 2, 3))
        assert canonical_cycle([2, 1, 3]) == CycleSeq((1, 2, 3))
        assert canonical_cycle([4, 2]) == CycleSeq((2, 4))


class TestValidation:
    def test_rejects_non_cycles(self):
        with pytest.raises(InvalidCycleError):
            validate_cycle(cycle(5), CycleSeq((0, 2, 4)))
        with pytest.raises(InvalidCycleError):
            validate_cycle(cycle(5), CycleSeq((0, 1, 0)))
        with pytest.raises(InvalidCycleError):
            validate_cycle(cycle(5), CycleSeq((0, 2)))
        with pytest.raises(InvalidCycleError):
            residual_profile(cycle(5), CycleSeq(()))

    def test_accepts_extended_cycles(self):
        validate_cycle(cycle(5), CycleSeq((3,)))
        validate_cycle(cycle(5), CycleSeq((3, 4)))


class TestResiduals:
    def test_hamilton_cycle_profile(self):
        assert residual_profile(cycle(6), HAM_C6) == ResidualProfile(0, 0, 0)

    def test_petersen_profiles(self):
        p = petersen()
        for cyc in enumerate_longest_cycles(p):
            assert residual_profile(p, cyc) == ResidualProfile(1, 1, 1)

    def test_pendant_triangle(self):
        g = c6_with_pendant_triangle()
        prof = residual_profile(g, HAM_C6)
        assert (prof.p_bar, prof.c_bar) == (
            oracles.longest_path(g, [6, 7]),
            oracles.circumference(g, [6, 7]),
        ) == (2, 2)

    def test_petersen_minus_longest_cycle_is_k1(self):
        from cyclelab.graph import induced_subgraph

        p = petersen()
        cyc = enumerate_longest_cycles(p)[0]
        rest, _ = induced_subgraph(p, p.vertex_mask & ~cyc.mask)
        assert rest == complete(1)


class TestClassification:
    def test_d_lambda(self):
        p = petersen()
        nine = enumerate_longest_cycles(p)[0]
        assert is_D_lambda_cycle(cycle(6), HAM_C6, 1)
        assert is_D_lambda_cycle(p, nine, 2)
        assert not is_D_lambda_cycle(p, nine, 1)

    def test_pd_lambda(self):
        g = c6_with_pendant_path()
        assert oracles.longest_path(g, [6, 7]) == 2
        assert is_PD_lambda_cycle(g, HAM_C6, 3)
        assert not is_PD_lambda_cycle(g, HAM_C6, 2)
        for lam in range(1, 5):
            assert is_PD_lambda_cycle(cycle(6), HAM_C6, lam)

    def test_pd2_for_dominating_cycle(self):
        k34 = complete_bipartite(3, 4)
        for cyc in enumerate_longest_cycles(k34):
            assert is_independent(k34, k34.vertex_mask & ~cyc.mask)
            assert is_PD_lambda_cycle(k34, cyc, 2)

    def test_cd_lambda(self):
        assert is_CD_lambda_cycle(cycle(6), HAM_C6, 1)
        p = petersen()
        assert is_CD_lambda_cycle(p, enumerate_longest_cycles(p)[0], 2)
        g = triangles_joined_by_edge()
        assert not is_CD_lambda_cycle(g, CycleSeq((0, 1, 2)), 3)

    def test_lambda_must_be_positive(self):
        with pytest.raises(ValueError):
            is_CD_lambda_cycle(cycle(6), HAM_C6, 0)


class TestAnalyze:
    def test_k4(self):
        bundle, analysis = analyze(complete(4))
        assert (bundle.min_degree, bundle.connectivity, bundle.independence_number) == (3, 3, 1)
        assert analysis.circumference == 4
        assert len(analysis.longest_cycles) == 3
        assert analysis.distinct_profiles() == [(0, 0)]

    def test_c5(self):
        bundle, analysis = analyze(cycle(5))
        assert (bundle.min_degree, bundle.connectivity, bundle.independence_number) == (2, 2, 2)
        assert bundle.sigma_at(2) == 4
        assert analysis.circumference == 5

    def test_k1(self):
        bundle, analysis = analyze(complete(1))
        assert (bundle.min_degree, bundle.connectivity, bundle.independence_number) == (0, 0, 1)
        assert analysis.circumference == 1

    def test_deterministic(self):
        first = analyze(petersen())[1].to_dict(3)
        assert analyze(petersen())[1].to_dict(3) == first


def test_dp_and_dfs_paths_agree():
    from cyclelab import cycles as mod

    rng = random.Random(3)
    for _ in range(60):
        n = rng.randint(2, 11)
        p = rng.random()
        g = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])
        assert mod._longest_path_dp(g) == mod._longest_path_dfs(g, mod._Clock(None))
        assert mod._circumference_dp(g) == mod._circumference_dfs(g, mod._Clock(None))


def test_dfs_path_on_larger_graph():
    # above the DP cutoff
    g = cycle(20)
    assert longest_path_order(g) == 20
    assert circumference(g) == 20
    g = path(18)
    assert circumference(g) == 2


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


@settings(max_examples=120, deadline=None)
@given(graphs())
def test_random_graphs_against_permutation_oracle(g):
    assert longest_path_order(g) == oracles.longest_path(g)
    c = circumference(g)
    assert c == oracles.circumference(g)
    if c >= 3:
        assert len(cycles_of_order(g, c)) == len(oracles.cycles_of_length(g, c))


def test_exhaustive_against_permutation_oracle(small_graphs):
    for g in small_graphs:
        assert longest_path_order(g) == oracles.longest_path(g), to_graph6(g)
        assert circumference(g) == oracles.circumference(g), to_graph6(g)


def test_enumeration_counts_match_oracle(small_graphs):
    for g in small_graphs:
        c = circumference(g)
        found = enumerate_longest_cycles(g)
        assert len(set(found)) == len(found)
        for cyc in found:
            validate_cycle(g, cyc)
            assert cyc.order == c
            assert canonical_cycle(cyc.vertices) == cyc
        if c >= 3:
            assert len(found) == len(oracles.cycles_of_length(g, c))


def test_residual_invariants_up_to_8(graphs_upto8):
    for g in graphs_upto8:
        _, analysis = analyzed(to_graph6(g))
        hamiltonian = analysis.circumference == g.n
        assert analysis.circumference >= 1
        assert hamiltonian == any(p.p_bar == 0 for p in analysis.profiles)
        for cyc, prof in zip(analysis.longest_cycles, analysis.profiles):
            rest = g.n - cyc.order
            assert prof.c_bar <= prof.p_bar <= rest
            assert (rest == 0) == (prof.p_bar == 0) == (prof.c_bar == 0)
            if rest:
                assert prof.c_bar >= 1
            assert (prof.p_bar == 0) == prof.is_pd(1) == prof.is_cd(1)
            independent = is_independent(g, g.vertex_mask & ~cyc.mask)
            assert (prof.p_bar <= 1) == independent == prof.is_pd(2) == prof.is_cd(2)
