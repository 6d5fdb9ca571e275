import warnings
from itertools import combinations

import pytest
from hypothesis import given, settings

from judicious.core import A, B, C, Hypergraph3, Tripartition, degree, degree2, part_degrees
from judicious.generators import complete, named, random_hypergraph
from judicious.local_search import SearchConfig, reduce_local_optimum
from judicious.oracle import best_tripartition
from judicious.pipeline import (
    METHODS,
    bounded_route,
    discrete_bounds_hold,
    exact_search,
    good_threshold,
    is_good,
    max_degree_path,
    restriction_route,
    solve,
    two_high_degree_path,
    verify_good,
)

from .strategies import hypergraphs
from .test_local_search import WEAK_EDGES, WEAK_OPTIMUM


def test_good_threshold():
    assert [good_threshold(m) for m in (1, 5, 6, 7, 10, 84)] == [1, 3, 4, 5, 6, 51]


def test_is_good(g_tight, g_grid):
    assert is_good(g_tight, named("be"))
    assert not is_good(g_tight, ())
    assert not is_good(g_grid, {0})


class TestVerify:
    def test_tight(self, g_tight):
        cert = verify_good(g_tight, Tripartition.from_parts(7, (named("ad"), named("be"), named("cfg"))))
        assert cert.degrees == (3, 3, 5) and cert.meets_bound

    def test_grid(self, g_grid, rows_partition):
        cert = verify_good(g_grid, rows_partition)
        assert cert.degrees == (4, 4, 4) and cert.meets_bound and cert.locally_optimal

    def test_single_edge(self, single_edge):
        cert = verify_good(single_edge, Tripartition((A, A, A)))
        assert cert.degrees == (1, 0, 0) and not cert.meets_bound


class TestSolve:
    def test_tight(self, g_tight):
        out = solve(g_tight)
        assert out.certificate.meets_bound and out.method == "exact"
        assert out.certificate.min_degree >= 3

    def test_tight_maximized_matches_oracle(self, g_tight):
        out = solve(g_tight, SearchConfig(maximize=True))
        assert out.certificate.min_degree == best_tripartition(g_tight)[1] == 4
        assert out.certificate.exact

    def test_grid(self, g_grid):
        assert solve(g_grid).certificate.min_degree >= 4

    def test_k4(self):
        out = solve(complete(4), SearchConfig(maximize=True))
        assert out.certificate.min_degree == 3
        assert sorted(len(p) for p in out.partition.parts()) == [1, 1, 2]

    def test_edgeless(self):
        with pytest.raises(ValueError):
            solve(Hypergraph3(4))

    @pytest.mark.parametrize("seed", range(6))
    def test_large_random(self, seed):
        G = random_hypergraph(24, 80 + 20 * seed, seed)
        cfg = SearchConfig(seed=seed, exact_cap=1)
        out = solve(G, cfg)
        assert out.certificate.meets_bound
        assert out.method in METHODS
        assert solve(G, cfg) == out


@settings(max_examples=150, deadline=None)
@given(hypergraphs(min_n=3, max_n=8, min_m=1))
def test_exact_maximize_matches_oracle(G):
    P, complete_ = exact_search(G, maximize=True)
    assert complete_ and P is not None
    assert min(part_degrees(G, P)) == best_tripartition(G)[1]


def test_exact_search_budget():
    G = random_hypergraph(12, 60, 2)
    P, done = exact_search(G, maximize=True, node_budget=5)
    assert not done


class TestMaxDegreePath:
    def test_sunflower(self):
        G = Hypergraph3(11, tuple((0, 2 * i + 1, 2 * i + 2) for i in range(5)))
        out = max_degree_path(G)
        assert out is not None and out.partition.part(A) == {0}
        assert min(out.certificate.degrees) >= 3

    def test_single_edge(self, single_edge):
        out = max_degree_path(single_edge)
        assert out.certificate.degrees == (1, 1, 1)

    def test_guard(self, g_tight):
        # every vertex of tight15 has degree <= 3; greedy growth cannot avoid reuse
        out = max_degree_path(g_tight)
        assert out is None or out.certificate.meets_bound


class TestTwoDegreePath:
    EDGES = (
        (0, 2, 3), (0, 4, 5), (0, 6, 7), (0, 8, 9), (0, 10, 11),
        (1, 2, 4), (1, 3, 5), (1, 6, 8), (1, 7, 9), (1, 10, 12),
    )

    def test_two_degree_five(self):
        G = Hypergraph3(13, self.EDGES)
        assert G.vertex_degree(0) == G.vertex_degree(1) == good_threshold(10) - 1
        out = two_high_degree_path(G)
        assert out is not None and out.certificate.meets_bound
        assert best_tripartition(G)[1] >= min(out.certificate.degrees)

    def test_small_m(self, g_tight):
        assert two_high_degree_path(g_tight) is None


def test_discrete_bound_arithmetic():
    for m in range(1, 2000):
        c = good_threshold(m)
        # ceil(3m/5) <= (3m+4)/5, so 21m + 28 - 35c >= 0
        assert 21 * m + 28 - 35 * c >= 0
        # delta > 1/15 strictly: 15(2m - 3(c-1)) > 3m
        assert 15 * (2 * m - 3 * (c - 1)) > 3 * m
        if m >= 25:
            assert 5 * (m - 10) >= 3 * m


@settings(max_examples=120, deadline=None)
@given(hypergraphs(min_n=6, max_n=11, min_m=10))
def test_restriction_route_when_pair_is_light_inside(G):
    """A good pair meeting few edges twice always yields a good partition via the restriction."""
    m = G.m
    c = good_threshold(m)
    for pair in combinations(range(G.n), 2):
        if is_good(G, pair) and degree2(G, pair) <= 4 * m + 2 - 6 * c:
            P = restriction_route(G, frozenset(pair), SearchConfig())
            assert verify_good(G, P).meets_bound, pair


def test_restriction_route_rejects_big_class(g_tight):
    with pytest.raises(ValueError):
        restriction_route(g_tight, frozenset({0, 1, 2}), SearchConfig())


def test_engine_fixture_routes():
    G = Hypergraph3(7, WEAK_EDGES)
    res = reduce_local_optimum(G, Tripartition(WEAK_OPTIMUM), (1, 15))
    assert discrete_bounds_hold(G, res.partition)
    small = [p for p in res.partition.parts()[:2] if len(p) == 2]
    assert small
    # holding C = {0, 2, 5} fixed leaves no good split of the other four vertices;
    # only the restriction route finishes this one
    assert bounded_route(G, res.partition) is None
    P = restriction_route(G, small[0], SearchConfig())
    assert verify_good(G, P).meets_bound


def test_bounded_route_finds_split():
    G = complete(6)
    P = Tripartition((A, A, A, A, C, C))
    Q = bounded_route(G, P)
    assert Q is not None and verify_good(G, Q).meets_bound
    assert Q.part(C) >= P.part(C)


def test_bounded_route_size_guard():
    G = complete(12)
    P = Tripartition((A,) * 5 + (B,) * 5 + (C,) * 2)
    assert bounded_route(G, P) is None


def test_solve_never_warns_on_random():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        for seed in range(30):
            G = random_hypergraph(15, 30 + seed, seed)
            assert solve(G, SearchConfig(seed=seed, exact_cap=1)).certificate.meets_bound
