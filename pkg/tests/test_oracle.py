import numpy as np
import pytest

from judicious.core import Hypergraph3, SpecialMultigraph
from judicious.generators import complete, random_hypergraph
from judicious.oracle import (
    BudgetExceeded,
    OracleReport,
    _set_partitions_three,
    batch_best_values,
    best_bipartition_special,
    best_tripartition,
    count_instances,
    enumerate_hypergraphs,
    enumerate_special_multigraphs,
    exhaustive_theorem_check,
    hypergraph_from_mask,
    merge_reports,
)


def test_best_tripartition_values(g_tight, single_edge):
    assert best_tripartition(g_tight)[1] == 4
    assert best_tripartition(complete(4))[1] == 3
    assert best_tripartition(single_edge)[1] == 1
    assert best_tripartition(complete(6))[1] == 16


def test_k9_witness():
    P, v = best_tripartition(complete(9))
    assert v == 64
    assert sorted(len(p) for p in P.parts()) == [3, 3, 3]


def test_budget():
    with pytest.raises(BudgetExceeded):
        best_tripartition(complete(9), budget=1000)
    with pytest.raises(BudgetExceeded):
        best_bipartition_special(SpecialMultigraph(30))


def test_best_bipartition_special():
    tri = SpecialMultigraph(3, (((0, 1), 1), ((1, 2), 1), ((0, 2), 1)))
    star = SpecialMultigraph(3, (((0, 1), 1), ((0, 2), 1)), frozenset({0}))
    assert best_bipartition_special(tri)[1] == 1
    assert best_bipartition_special(star)[1] == 1
    assert best_bipartition_special(SpecialMultigraph(2, (), frozenset({0, 1})))[1] == 1


def test_enumeration_counts():
    assert count_instances(4) == 15
    assert count_instances(5) == 1023
    assert count_instances(6) == 2**20 - 1
    assert enumerate_hypergraphs(4, lambda G: None).instances_checked == 15
    with pytest.raises(BudgetExceeded):
        enumerate_hypergraphs(7, lambda G: None)


def test_ranges_merge():
    visit = lambda G: "big" if G.m > 8 else None  # noqa: E731
    whole = enumerate_hypergraphs(5, visit)
    parts = [enumerate_hypergraphs(5, visit, s, s + 300) for s in (1, 301, 601, 901)]
    merged = merge_reports(reversed(parts))
    assert merged.instances_checked == whole.instances_checked == 1023
    assert sorted(merged.failures) == sorted(whole.failures)
    assert not OracleReport("x").failures and OracleReport("x").ok


def test_set_partitions_count():
    # Stirling numbers S(n,1)+S(n,2)+S(n,3)
    assert [len(_set_partitions_three(n)) for n in range(1, 7)] == [1, 2, 5, 14, 41, 122]


def test_batch_matches_scalar():
    masks = np.array([1, 5, 77, 1023, 4096 + 3, 2**20 - 1], dtype=np.uint32)
    _, values = batch_best_values(6, masks)
    for mask, v in zip(masks, values):
        assert best_tripartition(hypergraph_from_mask(6, int(mask)))[1] == v


def test_batch_all_n4_matches_scalar():
    masks, values = batch_best_values(4)
    for mask, v in zip(masks, values):
        assert best_tripartition(hypergraph_from_mask(4, int(mask)))[1] == v


@pytest.mark.parametrize("n", [3, 4, 5])
def test_exhaustive_small(n):
    report = exhaustive_theorem_check(n)
    assert report.ok and report.instances_checked == count_instances(n)


def test_from_mask_order():
    G = hypergraph_from_mask(4, 0b1001)
    assert G.edges == ((0, 1, 2), (1, 2, 3))


def test_special_enumeration():
    items = list(enumerate_special_multigraphs(3, max_total=2, max_mult=2))
    # multiplicity vectors over 3 pairs with sum <= 2: 1 + 3 + 6 = 10, times 8 special sets
    assert len(items) == 80
    assert all(M.m <= 2 for M in items)


def test_random_instance_spot():
    G = random_hypergraph(7, 12, 5)
    _, v = best_tripartition(G)
    assert 5 * v >= 3 * G.m
    assert isinstance(G, Hypergraph3)
