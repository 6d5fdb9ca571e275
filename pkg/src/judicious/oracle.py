"""Brute-force ground truth and exhaustive enumeration of small instances.

Nothing here shares code with the solvers it checks: values are computed
straight from the definitions by enumerating assignments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb
from typing import Callable, Optional

import numpy as np

from .core import Bipartition, Hypergraph3, SpecialMultigraph, Tripartition

DEFAULT_BUDGET = 10**7


class BudgetExceeded(ValueError):
    pass


@dataclass
class OracleReport:
    description: str
    objective: Optional[int] = None
    witness: Optional[tuple[int, ...]] = None
    instances_checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def merge_reports(reports, description: Optional[str] = None) -> OracleReport:
    """Commutative merge of per-range reports."""
    reports = list(reports)
    out = OracleReport(description or (reports[0].description if reports else ""))
    for r in reports:
        out.instances_checked += r.instances_checked
        out.failures.extend(r.failures)
    return out


def _met_classes(edges, labels, classes: int) -> list[int]:
    d = [0] * classes
    for e in edges:
        for x in set(labels[v] for v in e):
            d[x] += 1
    return d


def best_tripartition(
    G: Hypergraph3, budget: int = DEFAULT_BUDGET
) -> tuple[Tripartition, int]:
    """Maximum over all tripartitions of the smallest class degree.

    Vertex 0 is pinned to class A (classes are interchangeable); every
    assignment of the remaining vertices is tried.
    """
    if 3**G.n > budget:
        raise BudgetExceeded(f"3**{G.n} assignments exceed the budget {budget}")
    if G.n == 0:
        return Tripartition(()), 0
    best_val, best_lab = -1, None
    for rest in product(range(3), repeat=G.n - 1):
        labels = (0,) + rest
        val = min(_met_classes(G.edges, labels, 3))
        if val > best_val:
            best_val, best_lab = val, labels
    return Tripartition(best_lab), best_val


def best_bipartition_special(
    M: SpecialMultigraph, budget: int = DEFAULT_BUDGET
) -> tuple[Bipartition, int]:
    """Minimum over bipartitions of ``max_i e(V_i) + f(V_i)``."""
    if 2**M.n > budget:
        raise BudgetExceeded(f"2**{M.n} assignments exceed the budget {budget}")
    if M.n == 0:
        return Bipartition(()), 0
    best_val, best_lab = None, None
    for rest in product(range(2), repeat=M.n - 1):
        labels = (0,) + rest
        load = [0, 0]
        for (u, v), mult in M.pair_edges:
            if labels[u] == labels[v]:
                load[labels[u]] += mult
        for s in M.specials:
            load[labels[s]] += 1
        val = max(load)
        if best_val is None or val < best_val:
            best_val, best_lab = val, labels
    return Bipartition(best_lab), best_val


def all_triples(n: int) -> list[tuple[int, int, int]]:
    return list(combinations(range(n), 3))


def hypergraph_from_mask(n: int, mask: int, triples=None) -> Hypergraph3:
    """Instance whose edges are the triples (lexicographic order) selected by ``mask``."""
    triples = triples or all_triples(n)
    return Hypergraph3(n, tuple(t for i, t in enumerate(triples) if mask >> i & 1))


def enumerate_hypergraphs(
    n: int,
    visitor: Callable[[Hypergraph3], Optional[str]],
    start: int = 1,
    stop: Optional[int] = None,
) -> OracleReport:
    """Visit every nonempty edge subset of ``K_n^(3)`` with mask in ``[start, stop)``.

    ``visitor`` returns None on success or a failure description.  Disjoint
    ranges can be run separately and combined with :func:`merge_reports`.
    """
    if n > 6:
        raise BudgetExceeded("full enumeration is limited to n <= 6")
    triples = all_triples(n)
    total = 1 << len(triples)
    stop = total if stop is None else min(stop, total)
    report = OracleReport(f"all hypergraphs on {n} vertices, masks [{start}, {stop})")
    for mask in range(max(start, 1), stop):
        G = hypergraph_from_mask(n, mask, triples)
        failure = visitor(G)
        report.instances_checked += 1
        if failure is not None:
            report.failures.append((mask, failure))
    return report


def _set_partitions_three(n: int):
    """Label tuples of every unordered partition of ``range(n)`` into at most 3 (possibly empty) blocks."""
    out = []
    for labels in product(range(3), repeat=n):
        seen = []
        for x in labels:
            if x not in seen:
                seen.append(x)
        if seen == list(range(len(seen))):
            out.append(labels)
    return out


def batch_best_values(n: int, masks: Optional[np.ndarray] = None) -> tuple[np.ndarray, np.ndarray]:
    """Max-min class degree for many instances on ``n <= 6`` vertices at once.

    ``masks`` selects edge subsets as in :func:`hypergraph_from_mask`
    (default: every nonempty subset).  Returns ``(masks, values)``.
    For each vertex subset the triples meeting it form a bitmask; the degree
    of that subset in an instance is the popcount of the intersection.
    """
    if n > 6:
        raise BudgetExceeded("batch enumeration is limited to n <= 6")
    triples = all_triples(n)
    if masks is None:
        masks = np.arange(1, 1 << len(triples), dtype=np.uint32)
    masks = np.asarray(masks, dtype=np.uint32)
    meet = []
    for S in range(1 << n):
        bits = 0
        for i, t in enumerate(triples):
            if any(S >> v & 1 for v in t):
                bits |= 1 << i
        meet.append(bits)
    deg = np.empty((1 << n, masks.size), dtype=np.uint8)
    for S, bits in enumerate(meet):
        deg[S] = np.bitwise_count(masks & np.uint32(bits))
    best = np.zeros(masks.size, dtype=np.uint8)
    for labels in _set_partitions_three(n):
        sets = [0, 0, 0]
        for v, x in enumerate(labels):
            sets[x] |= 1 << v
        worst = np.minimum(np.minimum(deg[sets[0]], deg[sets[1]]), deg[sets[2]])
        np.maximum(best, worst, out=best)
    return masks, best


def exhaustive_theorem_check(n: int, masks: Optional[np.ndarray] = None) -> OracleReport:
    """Every hypergraph on ``n <= 6`` vertices has max-min class degree ``v`` with ``5v >= 3m``.

    Also checks the weaker ``9v >= 5m`` for free.
    """
    masks, best = batch_best_values(n, masks)
    m = np.bitwise_count(masks).astype(np.int64)
    v = best.astype(np.int64)
    bad = np.nonzero((5 * v < 3 * m) | (9 * v < 5 * m))[0]
    report = OracleReport(
        f"3/5 theorem on hypergraphs with {n} vertices", instances_checked=int(masks.size)
    )
    report.failures = [(int(masks[i]), f"max-min {int(v[i])} < 3m/5 with m={int(m[i])}") for i in bad]
    return report


def enumerate_special_multigraphs(n: int, max_total: int, max_mult: int = 2):
    """Every multigraph on ``n`` vertices (pair multiplicity <= ``max_mult``, total <= ``max_total``)
    combined with every special set."""
    pairs = list(combinations(range(n), 2))
    for mults in product(range(max_mult + 1), repeat=len(pairs)):
        if sum(mults) > max_total:
            continue
        edges = tuple((p, k) for p, k in zip(pairs, mults) if k)
        for smask in range(1 << n):
            specials = frozenset(v for v in range(n) if smask >> v & 1)
            yield SpecialMultigraph(n, edges, specials)


def count_instances(n: int) -> int:
    return (1 << comb(n, 3)) - 1
