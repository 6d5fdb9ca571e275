"""End-to-end solver: a tripartition in which every class meets at least 3m/5 edges.

Dispatch order:

1. exact depth-first search when ``3**n <= exact_cap`` or ``m <= 24``;
2. a good set meeting no edge twice, with the remaining pairs bipartitioned;
3. two vertices of degree ``ceil(3m/5) - 1``;
4. the engine (restarted hill climbing), then either restricting to
   ``B u C`` when ``|A| = 2`` or exhaustively reassigning a small ``A u B``;
5. more restarts, then an exact search without the size cap.

Every returned partition is re-verified from scratch.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass, replace
from itertools import product
from typing import Iterable, Optional

from .core import (
    A,
    B,
    C,
    Certificate,
    Hypergraph3,
    SpecialMultigraph,
    Tripartition,
    degree,
    degree2,
    part_degrees,
    restrict,
)
from .local_search import (
    EngineResult,
    RetryNeeded,
    SearchConfig,
    engine_partition,
    is_locally_optimal,
    is_semi_optimal,
)
from .special import bipartition_hypergraph_meeting, special_bipartition

log = logging.getLogger(__name__)

THREE_FIFTHS = (3, 5)
SMALL_M = 24
ESCALATION_ROUNDS = 3

METHODS = (
    "exact",
    "max-degree-path",
    "two-degree-path",
    "engine-three-good",
    "engine-restrict",
    "engine-bounded",
    "restart-exact-fallback",
    "best-effort",
)


@dataclass(frozen=True)
class SolveOutcome:
    partition: Tripartition
    certificate: Certificate
    method: str
    restarts_used: int = 0


def good_threshold(m: int) -> int:
    """``ceil(3m/5)``."""
    return -(-3 * m // 5)


def is_good(G: Hypergraph3, S: Iterable[int]) -> bool:
    return 5 * degree(G, S) >= 3 * G.m


def verify_good(
    G: Hypergraph3, P: Tripartition, method: str = "verify", exact: bool = False
) -> Certificate:
    """Recompute per-class degrees and the 3/5 comparison from scratch."""
    return Certificate(
        degrees=part_degrees(G, P),
        m=G.m,
        num=THREE_FIFTHS[0],
        den=THREE_FIFTHS[1],
        method=method,
        semi_optimal=is_semi_optimal(G, P),
        locally_optimal=is_locally_optimal(G, P),
        exact=exact,
    )


def _outcome(G, P, method, restarts=0, exact=False) -> SolveOutcome:
    return SolveOutcome(P, verify_good(G, P, method, exact), method, restarts)


class _BudgetSpent(Exception):
    pass


def exact_search(
    G: Hypergraph3,
    target: Optional[int] = None,
    maximize: bool = False,
    node_budget: Optional[int] = None,
) -> tuple[Optional[Tripartition], bool]:
    """Depth-first search for a partition whose smallest class degree is at least ``target``.

    ``target`` defaults to ``ceil(3m/5)``.  With ``maximize`` the target is
    raised past every solution found until the search fails, so the last
    solution attains the maximum of the minimum class degree.

    Returns ``(partition or None, complete)``; ``complete`` is False when the
    node budget ran out before the search (or the maximisation) finished.

    Vertices are branched in decreasing degree; isolated vertices go to A.
    Symmetric relabellings are cut by opening classes in order, and a
    branch dies once some class can no longer reach the target even if it
    received every unassigned vertex.
    """
    m = G.m
    target = good_threshold(m) if target is None else target
    masks = G.edge_masks
    order = sorted((v for v in range(G.n) if masks[v]), key=lambda v: (-bin(masks[v]).count("1"), v))
    rest = [0] * (len(order) + 1)
    for i in range(len(order) - 1, -1, -1):
        rest[i] = rest[i + 1] | masks[order[i]]
    labels = [A] * G.n
    met = [0, 0, 0]
    nodes = [0]
    budget = node_budget

    def rec(i: int, opened: int, goal: int) -> bool:
        nodes[0] += 1
        if budget is not None and nodes[0] > budget:
            raise _BudgetSpent
        r = rest[i]
        for c in range(3):
            if (met[c] | r).bit_count() < goal:
                return False
        if i == len(order):
            return True
        v = order[i]
        mv = masks[v]
        choices = sorted(range(min(opened + 1, 3)), key=lambda c: (met[c].bit_count(), c))
        for c in choices:
            saved = met[c]
            met[c] = saved | mv
            labels[v] = c
            if rec(i + 1, max(opened, c + 1), goal):
                return True
            met[c] = saved
        return False

    best: Optional[Tripartition] = None
    goal = target
    try:
        while goal <= m:
            met[:] = [0, 0, 0]
            for v in range(G.n):
                labels[v] = A
            if not rec(0, 0, goal):
                break
            best = Tripartition(tuple(labels))
            if not maximize:
                return best, True
            goal = min(part_degrees(G, best)) + 1
    except _BudgetSpent:
        return best, False
    return best, True


def _partition_from_parts(n: int, parts) -> Tripartition:
    return Tripartition.from_parts(n, parts)


def _lift(labels_local, origin) -> dict[int, int]:
    return {origin[i]: side for i, side in enumerate(labels_local)}


def _good_set_meeting_edges_once(G: Hypergraph3) -> Optional[frozenset[int]]:
    """A good set with no edge meeting it twice: the top-degree vertex, grown greedily if needed."""
    if G.n == 0:
        return None
    c = good_threshold(G.m)
    inc = G.incidence
    start = max(range(G.n), key=lambda v: (len(inc[v]), -v))
    chosen = {start}
    blocked = {u for i in inc[start] for u in G.edges[i]}
    covered = len(inc[start])
    while covered < c:
        candidates = [u for u in range(G.n) if u not in blocked and inc[u]]
        if not candidates:
            return None
        u = max(candidates, key=lambda x: (len(inc[x]), -x))
        chosen.add(u)
        blocked.update(w for i in inc[u] for w in G.edges[i])
        covered += len(inc[u])
    return frozenset(chosen)


def max_degree_path(G: Hypergraph3, cfg: Optional[SearchConfig] = None) -> Optional[SolveOutcome]:
    """Good set ``A`` meeting no edge twice; split the rest via the pair multigraph avoiding ``A``."""
    cfg = cfg or SearchConfig()
    S = _good_set_meeting_edges_once(G)
    if S is None or degree2(G, S) != 0 or not is_good(G, S):
        return None
    rest = [v for v in range(G.n) if v not in S]
    local = {v: i for i, v in enumerate(rest)}
    pairs = []
    for e in G.edges:
        outside = [v for v in e if v not in S]
        pairs.append(((local[outside[0]], local[outside[1]]), 1))
    M = SpecialMultigraph(len(rest), tuple(pairs), frozenset(), origin=tuple(rest))
    Q, _ = special_bipartition(M, cfg)
    side = _lift(Q.labels, rest)
    P = _partition_from_parts(
        G.n, (S, [v for v in rest if side[v] == 0], [v for v in rest if side[v] == 1])
    )
    out = _outcome(G, P, "max-degree-path")
    return out if out.certificate.meets_bound else None


def two_high_degree_path(G: Hypergraph3) -> Optional[SolveOutcome]:
    """Two vertices ``a, b`` of degree ``ceil(3m/5) - 1`` give good sets ``{a,c}``, ``{b,d}`` and a good rest."""
    m = G.m
    if m < 10:
        return None
    t = good_threshold(m) - 1
    heavy = [v for v in range(G.n) if G.vertex_degree(v) == t]
    for i, a in enumerate(heavy):
        for b in heavy[i + 1:]:
            c = next((min(set(e) - {b}) for e in G.edges if a not in e), None)
            if c is None:
                continue
            d = next((min(set(e) - {a, c}) for e in G.edges if b not in e and set(e) - {a, c}), None)
            if d is None:
                continue
            rest = [v for v in range(G.n) if v not in (a, b, c, d)]
            P = _partition_from_parts(G.n, ({a, c}, {b, d}, rest))
            out = _outcome(G, P, "two-degree-path")
            if out.certificate.meets_bound:
                return out
    return None


def discrete_bounds_hold(G: Hypergraph3, P: Tripartition) -> bool:
    """``d(A)+d(B)+d(C) >= 4m - 3(c-1)`` and ``d(A)+d(B) >= 4m - 4(c-1)``, ``c = ceil(3m/5)``."""
    m = G.m
    c = good_threshold(m)
    dA, dB, dC = part_degrees(G, P)
    return dA + dB + dC >= 4 * m - 3 * (c - 1) and dA + dB >= 4 * m - 4 * (c - 1)


def restriction_route(G: Hypergraph3, pair: frozenset[int], cfg: SearchConfig) -> Tripartition:
    """Keep the 2-vertex good set as one class and bipartition the restriction to the rest."""
    if len(pair) > 2:
        raise ValueError("restriction route needs a class of at most two vertices")
    U = [v for v in range(G.n) if v not in pair]
    H = restrict(G, U)
    Q, _ = bipartition_hypergraph_meeting(H, cfg)
    side = _lift(Q.labels, H.origin)
    return _partition_from_parts(
        G.n, (pair, [v for v in U if side[v] == 0], [v for v in U if side[v] == 1])
    )


def bounded_route(G: Hypergraph3, P: Tripartition) -> Optional[Tripartition]:
    """Try every reassignment of ``A u B`` (at most 9 vertices) with ``C`` held fixed."""
    free = sorted(P.part(A) | P.part(B))
    if len(free) > 9:
        return None
    Cset = P.part(C)
    avoiding = sum(1 for e in G.edges if not Cset.intersection(e))
    assert avoiding <= 84, "more than C(9,3) edges avoid C"
    masks = G.edge_masks
    base = 0
    for v in Cset:
        base |= masks[v]
    goal = good_threshold(G.m)
    for assign in product((A, B, C), repeat=len(free)):
        met = [0, 0, base]
        for v, x in zip(free, assign):
            met[x] |= masks[v]
        if all(x.bit_count() >= goal for x in met):
            labels = list(P.labels)
            for v, x in zip(free, assign):
                labels[v] = x
            return Tripartition(tuple(labels))
    return None


def engine_routes(G: Hypergraph3, res: EngineResult, cfg: SearchConfig) -> Optional[SolveOutcome]:
    """Turn an engine result into a good partition, or return None."""
    P = res.partition
    if res.three_good:
        out = _outcome(G, P, "engine-three-good", res.restarts_used)
        return out if out.certificate.meets_bound else None
    if not discrete_bounds_hold(G, P):
        log.info("engine result violates the integer degree bounds; escalating")
        return None
    for cls in (A, B):
        part = P.part(cls)
        if len(part) == 2:
            Q = restriction_route(G, part, cfg)
            out = _outcome(G, Q, "engine-restrict", res.restarts_used)
            if out.certificate.meets_bound:
                return out
    Q = bounded_route(G, P)
    if Q is not None:
        return _outcome(G, Q, "engine-bounded", res.restarts_used)
    return None


def solve(G: Hypergraph3, cfg: Optional[SearchConfig] = None) -> SolveOutcome:
    """Tripartition of ``G`` with every class meeting at least ``3m/5`` edges.

    Raises ``ValueError`` on an edgeless hypergraph.  If every route fails
    (never observed) a warning is issued and the best partition seen is
    returned with ``meets_bound`` false.
    """
    cfg = cfg or SearchConfig()
    if G.m < 1:
        raise ValueError("solve needs at least one edge")
    seen: list[Tripartition] = []

    if 3**G.n <= cfg.exact_cap or G.m <= SMALL_M:
        P, complete = exact_search(G, maximize=cfg.maximize, node_budget=cfg.node_budget)
        if P is not None:
            return _outcome(G, P, "exact", exact=cfg.maximize and complete)
        if complete:
            warnings.warn("exact search found no good partition")

    out = max_degree_path(G, cfg)
    if out is not None:
        return out
    out = two_high_degree_path(G)
    if out is not None:
        return out

    used = 0
    for rnd in range(ESCALATION_ROUNDS):
        restarts = cfg.max_restarts * 2**rnd
        try:
            res = engine_partition(
                G, cfg.epsilon, replace(cfg, max_restarts=restarts), first_restart=used
            )
        except RetryNeeded as exc:
            log.info("engine retry: %s", exc)
            used += restarts
            continue
        used += res.restarts_used
        seen.append(res.partition)
        out = engine_routes(G, res, cfg)
        if out is not None:
            return replace(out, restarts_used=used)

    P, _ = exact_search(G, node_budget=cfg.node_budget)
    if P is not None:
        return _outcome(G, P, "restart-exact-fallback", used)

    warnings.warn("no good partition found; returning best effort")
    if not seen:
        seen.append(Tripartition((A,) * G.n))
    best = max(seen, key=lambda Q: min(part_degrees(G, Q)))
    return _outcome(G, best, "best-effort", used)
