from math import comb

import pytest

from judicious.core import degree, triple_degree, Tripartition
from judicious.generators import (
    GeneratorSpec,
    complete,
    grid3,
    grid3_rows,
    named,
    random_hypergraph,
    random_special_multigraph,
    tight15,
)
from judicious.local_search import is_locally_optimal


def test_grid3():
    G = grid3()
    assert (G.n, G.m) == (9, 6)
    assert all(G.vertex_degree(v) == 2 for v in range(9))
    P = Tripartition.from_parts(9, grid3_rows())
    assert triple_degree(G, P) == 12 == 2 * G.m
    assert is_locally_optimal(G, P)


def test_tight15():
    G = tight15()
    assert (G.n, G.m) == (7, 5)
    assert G.edges == ((0, 1, 2), (3, 4, 5), (0, 3, 6), (1, 4, 6), (2, 5, 6))
    assert degree(G, named("be")) == degree(G, named("cf")) == 3
    assert degree(G, named("adg")) == 5


@pytest.mark.parametrize("n", [3, 4, 6, 9])
def test_complete(n):
    G = complete(n)
    assert G.m == comb(n, 3)


def test_complete_small():
    with pytest.raises(ValueError):
        complete(2)


def test_random_hypergraph():
    assert random_hypergraph(3, 1, 0).edges == ((0, 1, 2),)
    G = random_hypergraph(10, 24, 11)
    assert G.m == 24 and G == random_hypergraph(10, 24, 11)
    assert G != random_hypergraph(10, 24, 12)
    with pytest.raises(ValueError):
        random_hypergraph(4, 5, 0)


def test_random_hypergraph_rejection_branch():
    G = random_hypergraph(200, 50, 3)
    assert G.m == 50 and G == random_hypergraph(200, 50, 3)


def test_random_special():
    M = random_special_multigraph(6, 10, 2, 2, 4)
    assert (M.m, M.k) == (10, 2)
    assert all(mult <= 2 for _, mult in M.pair_edges)
    assert M == random_special_multigraph(6, 10, 2, 2, 4)
    assert random_special_multigraph(4, 0, 4, 1, 0).specials == {0, 1, 2, 3}
    assert random_special_multigraph(4, 0, 0, 1, 0).pair_edges == ()
    for args in ((4, 1, 5, 1, 0), (4, 1, 1, 0, 0), (3, 4, 0, 1, 0)):
        with pytest.raises(ValueError):
            random_special_multigraph(*args)


def test_generator_spec():
    assert GeneratorSpec("tight15").build() == tight15()
    assert GeneratorSpec("complete", n=5).build().m == 10
    assert GeneratorSpec("random", n=6, m=7, seed=2).build() == random_hypergraph(6, 7, 2)
    assert GeneratorSpec("random_special", n=5, m=3, k=1, maxmult=2, seed=1).build().k == 1
    for kw in ({"kind": "nope"}, {"kind": "complete", "n": 2}, {"kind": "random", "n": 4, "m": 9}):
        with pytest.raises(ValueError):
            GeneratorSpec(**kw)
