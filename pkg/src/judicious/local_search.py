"""Hill-climbing on the triple degree and the minimal-good-set machinery.

A partition is *locally optimal* when no single vertex move raises
``d(A) + d(B) + d(C)``, and *semi-optimal* when no move into ``C`` does.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from .core import (
    A,
    B,
    C,
    Hypergraph3,
    Tripartition,
    degree,
    part_degrees,
    private_degree,
    signature_counts,
    triple_degree,
)
from .rng import SplitMix64, child_seed

SCAN_ORDERS = ("ascending", "shuffled")


class NotSemiOptimal(ValueError):
    """A partition handed to an operation requiring semi-optimality is not."""


class RetryNeeded(RuntimeError):
    """The best local optimum found is too weak to certify the engine bound."""


class MoveDelta(NamedTuple):
    vertex: int
    source: int
    target: int
    delta: int


@dataclass(frozen=True)
class SearchConfig:
    """Knobs shared by every search in the package.

    ``exact_cap`` bounds brute-force work as a number of assignments (``3**n``
    for tripartitions, ``2**n`` for bipartitions).  ``epsilon`` is the engine
    slack as an integer pair ``(p, q)`` meaning ``p/q``.
    """

    max_restarts: int = 8
    seed: int = 0
    scan_order: str = "ascending"
    exact_cap: int = 10**7
    epsilon: tuple[int, int] = (1, 15)
    maximize: bool = False
    node_budget: int = 2_000_000

    def __post_init__(self):
        if self.max_restarts < 1:
            raise ValueError("max_restarts must be positive")
        if self.exact_cap < 1:
            raise ValueError("exact_cap must be positive")
        if self.node_budget < 1:
            raise ValueError("node_budget must be positive")
        if self.scan_order not in SCAN_ORDERS:
            raise ValueError(f"scan_order must be one of {SCAN_ORDERS}")
        p, q = self.epsilon
        if q <= 0 or p <= 0 or 15 * p < q or 3 * p >= 2 * q:
            raise ValueError("epsilon must satisfy 1/15 <= p/q < 2/3")


def _gain(G: Hypergraph3, labels, v: int, target: int) -> int:
    src = labels[v]
    delta = 0
    for i in G.incidence[v]:
        x, y, z = G.edges[i]
        others = [labels[u] for u in (x, y, z) if u != v]
        delta += len({target, *others}) - len({src, *others})
    return delta


def move_gain(G: Hypergraph3, P: Tripartition, v: int, target: int) -> MoveDelta:
    """Exact change in triple degree if ``v`` moves to ``target``, from ``v``'s edges only."""
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} out of range")
    source = P.labels[v]
    if target == source:
        raise ValueError("target class equals the current class")
    if target not in (A, B, C):
        raise ValueError(f"bad class {target!r}")
    return MoveDelta(v, source, target, _gain(G, P.labels, v, target))


def _climb(G: Hypergraph3, labels: list[int], order: list[int]) -> None:
    improved = True
    while improved:
        improved = False
        for v in order:
            src = labels[v]
            for t in (A, B, C):
                if t != src and _gain(G, labels, v, t) > 0:
                    labels[v] = t
                    improved = True
                    break


def hill_climb(
    G: Hypergraph3,
    P0: Tripartition,
    cfg: Optional[SearchConfig] = None,
    rng: Optional[SplitMix64] = None,
) -> Tripartition:
    """Climb to a locally optimal partition.

    Vertices are scanned in ascending id (or a seeded shuffle when
    ``cfg.scan_order == "shuffled"``); for each vertex the first target
    class, in order A, B, C, that strictly increases the triple degree is
    taken.  Passes repeat until one makes no move.  Zero-gain moves are
    never taken, so the climb terminates.
    """
    cfg = cfg or SearchConfig()
    if P0.n != G.n:
        raise ValueError("partition does not match the hypergraph")
    order = list(range(G.n))
    if cfg.scan_order == "shuffled":
        (rng or SplitMix64(cfg.seed)).shuffle(order)
    labels = list(P0.labels)
    _climb(G, labels, order)
    return Tripartition(tuple(labels))


def is_locally_optimal(G: Hypergraph3, P: Tripartition) -> bool:
    lab = P.labels
    return all(
        _gain(G, lab, v, t) <= 0 for v in range(G.n) for t in (A, B, C) if t != lab[v]
    )


def is_semi_optimal(G: Hypergraph3, P: Tripartition) -> bool:
    lab = P.labels
    return all(_gain(G, lab, v, C) <= 0 for v in range(G.n) if lab[v] != C)


def random_partition(G: Hypergraph3, seed: int) -> Tripartition:
    """Each vertex, in ascending id order, gets class ``SplitMix64(seed).below(3)``."""
    rng = SplitMix64(seed)
    return Tripartition(tuple(rng.below(3) for _ in range(G.n)))


class PrepReport(NamedTuple):
    lhs_a: int
    rhs_a: int
    lhs_b: int
    rhs_b: int

    @property
    def holds(self) -> bool:
        return self.lhs_a <= self.rhs_a and self.lhs_b <= self.rhs_b


def check_prep_inequalities(G: Hypergraph3, P: Tripartition) -> PrepReport:
    """Both sides of ``3e(AAA) + 2e(AAB) <= e(ABC) + e(ACC)`` and its mirror for B."""
    e = signature_counts(G, P)
    return PrepReport(
        lhs_a=3 * e[(A, A, A)] + 2 * e[(A, A, B)],
        rhs_a=e[(A, B, C)] + e[(A, C, C)],
        lhs_b=3 * e[(B, B, B)] + 2 * e[(A, B, B)],
        rhs_b=e[(A, B, C)] + e[(B, C, C)],
    )


def move_into_C(
    G: Hypergraph3, P: Tripartition, vs: Iterable[int], check: bool = True
) -> Tripartition:
    """Reassign ``vs`` (all in A or B) to C.

    Starting from a semi-optimal partition the result is again semi-optimal.
    With ``check`` on, the precondition raises :class:`NotSemiOptimal` and the
    postcondition is asserted.
    """
    vs = list(vs)
    labels = list(P.labels)
    for v in vs:
        if not 0 <= v < G.n:
            raise ValueError(f"vertex {v} out of range")
        if labels[v] == C:
            raise ValueError(f"vertex {v} is already in C")
    if check and not is_semi_optimal(G, P):
        raise NotSemiOptimal("move_into_C needs a semi-optimal partition")
    for v in vs:
        labels[v] = C
    result = Tripartition(tuple(labels))
    if check:
        assert is_semi_optimal(G, result), "semi-optimality lost moving into C"
    return result


def _meets(G: Hypergraph3, S, threshold: tuple[int, int]) -> bool:
    p, q = threshold
    return q * degree(G, S) >= p * G.m


def minimal_good_subset(
    G: Hypergraph3, S: Iterable[int], threshold: tuple[int, int]
) -> frozenset[int]:
    """Shrink ``S`` to a subset meeting ``p/q`` of the edges whose proper subsets all fail.

    Removal order: among vertices whose removal keeps the set good, drop the
    one with the largest private degree (ties: smallest id).  Degree is
    monotone under inclusion, so once no single removal keeps the set good,
    no proper subset is good.
    """
    S = set(S)
    if not _meets(G, S, threshold):
        raise ValueError("the starting set does not meet the threshold")
    while True:
        best = None
        for v in sorted(S):
            if _meets(G, S - {v}, threshold):
                pd = private_degree(G, v, S)
                if best is None or pd > best[0]:
                    best = (pd, v)
        if best is None:
            return frozenset(S)
        S.discard(best[1])


def is_minimal_good(G: Hypergraph3, S: Iterable[int], threshold: tuple[int, int]) -> bool:
    S = frozenset(S)
    return _meets(G, S, threshold) and not any(
        _meets(G, S - {v}, threshold) for v in S
    )


@dataclass(frozen=True)
class EngineResult:
    """Outcome of :func:`engine_partition`.

    If ``three_good`` every class is epsilon-good.  Otherwise A and B are
    minimal epsilon-good sets, C is bad, the partition is semi-optimal and
    its triple degree exceeds ``(2 + 3 epsilon) m``.
    """

    partition: Tripartition
    three_good: bool
    triple_degree: int
    restarts_used: int


def good_fraction(epsilon: tuple[int, int]) -> tuple[int, int]:
    """``2/3 - p/q`` as an integer pair."""
    p, q = epsilon
    return 2 * q - 3 * p, 3 * q


def local_optima(G: Hypergraph3, cfg: SearchConfig, first: int = 0):
    """Yield ``(restart_index, locally optimal partition)`` for seeded random restarts."""
    for r in range(first, first + cfg.max_restarts):
        stream = child_seed(cfg.seed, r)
        P0 = random_partition(G, stream)
        yield r, hill_climb(G, P0, cfg, rng=SplitMix64(child_seed(stream, 0)))


def engine_partition(
    G: Hypergraph3,
    epsilon: tuple[int, int] = (1, 15),
    cfg: Optional[SearchConfig] = None,
    first_restart: int = 0,
) -> EngineResult:
    """Either three epsilon-good classes, or two minimal epsilon-good classes plus a heavy remainder.

    Runs ``cfg.max_restarts`` hill climbs.  If none is three-good, the one of
    largest triple degree is reordered so C has the smallest degree, A and B
    are shrunk to minimal epsilon-good subsets and the removed vertices are
    moved into C.  Raises :class:`RetryNeeded` if the certificate
    ``q * d(A,B,C) > (2q + 3p) m`` fails at either stage.
    """
    cfg = cfg or SearchConfig(epsilon=epsilon)
    p, q = epsilon
    if q <= 0 or 15 * p < q:
        raise ValueError("epsilon must be at least 1/15")
    gp, gq = good_fraction(epsilon)
    m = G.m
    best = None
    used = 0
    for r, P in local_optima(G, cfg, first_restart):
        used += 1
        degs = part_degrees(G, P)
        if all(gq * d >= gp * m for d in degs):
            return EngineResult(P, True, sum(degs), used)
        if best is None or sum(degs) > best[0]:
            best = (sum(degs), P)
    assert best is not None
    return reduce_local_optimum(G, best[1], epsilon, used)


def reduce_local_optimum(
    G: Hypergraph3, P: Tripartition, epsilon: tuple[int, int] = (1, 15), restarts_used: int = 0
) -> EngineResult:
    """Reorder so C has the smallest degree, shrink A and B to minimal epsilon-good sets, dump the rest into C.

    ``P`` must be semi-optimal under every ordering of its classes (locally
    optimal suffices).  Raises :class:`RetryNeeded` when the certificate
    ``q * d(A,B,C) > (2q + 3p) m`` fails before or after the reduction.
    """
    p, q = epsilon
    gp, gq = good_fraction(epsilon)
    m = G.m

    def good(d: int) -> bool:
        return gq * d >= gp * m

    degs = part_degrees(G, P)
    if all(good(d) for d in degs):
        return EngineResult(P, True, sum(degs), restarts_used)
    order = sorted((A, B, C), key=lambda c: (-degs[c], c))
    P = P.reordered(order)
    degs = tuple(degs[c] for c in order)
    if not (q * sum(degs) > (2 * q + 3 * p) * m and good(degs[A]) and good(degs[B])):
        raise RetryNeeded(f"local optimum of degree {sum(degs)} does not certify the engine bound")

    A2 = minimal_good_subset(G, P.part(A), (gp, gq))
    B2 = minimal_good_subset(G, P.part(B), (gp, gq))
    dropped = (P.part(A) - A2) | (P.part(B) - B2)
    P2 = move_into_C(G, P, sorted(dropped))
    degs2 = part_degrees(G, P2)
    if good(degs2[C]):
        return EngineResult(P2, True, sum(degs2), restarts_used)
    if not q * sum(degs2) > (2 * q + 3 * p) * m:
        raise RetryNeeded("reduced partition lost the engine bound")
    return EngineResult(P2, False, triple_degree(G, P2), restarts_used)
