"""Hypergraphs, partitions and the exact counting quantities on them.

Vertices are the integers ``0..n-1``.  Every count is an exact integer and
every threshold comparison elsewhere in the package is done by
cross-multiplication, never in floating point.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence, Union

A, B, C = 0, 1, 2
CLASS_NAMES = "ABC"

Edge = tuple[int, ...]


def _check_vertex(v: int, n: int) -> None:
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
        raise ValueError(f"vertex {v!r} out of range [0, {n})")


def _check_set(S: Iterable[int], n: int) -> frozenset[int]:
    S = frozenset(S)
    for v in S:
        _check_vertex(v, n)
    return S


@dataclass(frozen=True)
class Hypergraph3:
    """Simple 3-uniform hypergraph: ``n`` vertices, ``edges`` as sorted triples."""

    n: int
    edges: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        normalized = []
        seen = set()
        for e in self.edges:
            t = tuple(sorted(e))
            if len(t) != 3 or len(set(t)) != 3:
                raise ValueError(f"edge {e!r} is not a triple of distinct vertices")
            for v in t:
                _check_vertex(v, self.n)
            if t in seen:
                raise ValueError(f"repeated edge {t!r}")
            seen.add(t)
            normalized.append(t)
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices incident to each vertex, built once."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            for v in e:
                inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        """Per-vertex bitmask over edge indices."""
        return tuple(sum(1 << i for i in inc) for inc in self.incidence)

    def vertex_degree(self, v: int) -> int:
        return len(self.incidence[v])

    def weighted_edges(self):
        for e in self.edges:
            yield e, 1


@dataclass(frozen=True)
class MultiHypergraph:
    """Edges of size 1-3 with multiplicities.

    Duplicate vertex sets are merged by summing multiplicity.  Size-1 edges
    may not repeat.  ``origin[i]`` is the id in the parent hypergraph of
    local vertex ``i`` (``None`` means the identity).
    """

    n: int
    edges: tuple[tuple[Edge, int], ...] = ()
    origin: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        merged: dict[Edge, int] = {}
        for e, mult in self.edges:
            t = tuple(sorted(e))
            if not 1 <= len(t) <= 3 or len(set(t)) != len(t):
                raise ValueError(f"edge {e!r} must have 1-3 distinct vertices")
            for v in t:
                _check_vertex(v, self.n)
            if mult < 1:
                raise ValueError(f"edge {t!r} has multiplicity {mult} < 1")
            merged[t] = merged.get(t, 0) + mult
        for t, mult in merged.items():
            if len(t) == 1 and mult != 1:
                raise ValueError(f"size-1 edge {t!r} repeated {mult} times")
        object.__setattr__(self, "edges", tuple(merged.items()))
        if self.origin is not None:
            if len(self.origin) != self.n:
                raise ValueError("origin must map every vertex")
            object.__setattr__(self, "origin", tuple(self.origin))

    @property
    def m(self) -> int:
        """Total multiplicity over all edges."""
        return sum(mult for _, mult in self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (e, _) in enumerate(self.edges):
            for v in e:
                inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    def weighted_edges(self):
        return iter(self.edges)

    def to_parent(self, v: int) -> int:
        return v if self.origin is None else self.origin[v]


@dataclass(frozen=True)
class SpecialMultigraph:
    """Multigraph with a set of special vertices.

    ``pair_edges`` holds ``((u, v), multiplicity)`` with duplicates merged;
    ``m`` is the total multiplicity and ``k`` the number of specials.
    """

    n: int
    pair_edges: tuple[tuple[tuple[int, int], int], ...] = ()
    specials: frozenset[int] = field(default_factory=frozenset)
    origin: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        merged: dict[tuple[int, int], int] = {}
        for (u, v), mult in self.pair_edges:
            _check_vertex(u, self.n)
            _check_vertex(v, self.n)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if mult < 1:
                raise ValueError(f"pair {(u, v)!r} has multiplicity {mult} < 1")
            key = (u, v) if u < v else (v, u)
            merged[key] = merged.get(key, 0) + mult
        object.__setattr__(self, "pair_edges", tuple(merged.items()))
        object.__setattr__(self, "specials", _check_set(self.specials, self.n))
        if self.origin is not None:
            if len(self.origin) != self.n:
                raise ValueError("origin must map every vertex")
            object.__setattr__(self, "origin", tuple(self.origin))

    @property
    def m(self) -> int:
        return sum(mult for _, mult in self.pair_edges)

    @property
    def k(self) -> int:
        return len(self.specials)

    @cached_property
    def adjacency(self) -> tuple[dict[int, int], ...]:
        """``adjacency[u][v]`` is the multiplicity of pair ``uv``."""
        adj: list[dict[int, int]] = [{} for _ in range(self.n)]
        for (u, v), mult in self.pair_edges:
            adj[u][v] = mult
            adj[v][u] = mult
        return tuple(adj)


@dataclass(frozen=True)
class Tripartition:
    """Total assignment of vertices to classes ``A=0``, ``B=1``, ``C=2``."""

    labels: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        for x in labels:
            if x not in (A, B, C):
                raise ValueError(f"class label {x!r} not in {{0, 1, 2}}")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_parts(cls, n: int, parts: Sequence[Iterable[int]]) -> "Tripartition":
        if len(parts) != 3:
            raise ValueError("a tripartition has exactly three parts")
        return cls(_labels_from_parts(n, parts))

    @property
    def n(self) -> int:
        return len(self.labels)

    def part(self, c: int) -> frozenset[int]:
        return frozenset(v for v, x in enumerate(self.labels) if x == c)

    def parts(self) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
        return self.part(A), self.part(B), self.part(C)

    def moved(self, v: int, target: int) -> "Tripartition":
        labels = list(self.labels)
        labels[v] = target
        return Tripartition(tuple(labels))

    def reordered(self, order: Sequence[int]) -> "Tripartition":
        """New partition whose class ``i`` is this partition's class ``order[i]``."""
        if sorted(order) != [A, B, C]:
            raise ValueError("order must be a permutation of the three classes")
        new_label = {old: new for new, old in enumerate(order)}
        return Tripartition(tuple(new_label[x] for x in self.labels))


@dataclass(frozen=True)
class Bipartition:
    """Total assignment of vertices to sides 0 and 1."""

    labels: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        for x in labels:
            if x not in (0, 1):
                raise ValueError(f"side label {x!r} not in {{0, 1}}")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_parts(cls, n: int, parts: Sequence[Iterable[int]]) -> "Bipartition":
        if len(parts) != 2:
            raise ValueError("a bipartition has exactly two parts")
        return cls(_labels_from_parts(n, parts))

    @property
    def n(self) -> int:
        return len(self.labels)

    def part(self, side: int) -> frozenset[int]:
        return frozenset(v for v, x in enumerate(self.labels) if x == side)

    def parts(self) -> tuple[frozenset[int], frozenset[int]]:
        return self.part(0), self.part(1)

    def swapped(self) -> "Bipartition":
        return Bipartition(tuple(1 - x for x in self.labels))


def _labels_from_parts(n: int, parts: Sequence[Iterable[int]]) -> tuple[int, ...]:
    labels: list[Optional[int]] = [None] * n
    for c, part in enumerate(parts):
        for v in part:
            _check_vertex(v, n)
            if labels[v] is not None:
                raise ValueError(f"vertex {v} appears in more than one part")
            labels[v] = c
    missing = [v for v, x in enumerate(labels) if x is None]
    if missing:
        raise ValueError(f"vertices {missing} are not assigned to any part")
    return tuple(labels)  # type: ignore[arg-type]


@dataclass(frozen=True)
class Certificate:
    """Recomputable record that every part meets ``num/den`` of the edges."""

    degrees: tuple[int, ...]
    m: int
    num: int
    den: int
    method: str
    semi_optimal: bool = False
    locally_optimal: bool = False
    exact: bool = False

    @property
    def meets_bound(self) -> bool:
        return all(self.den * d >= self.num * self.m for d in self.degrees)

    @property
    def min_degree(self) -> int:
        return min(self.degrees)


AnyHypergraph = Union[Hypergraph3, MultiHypergraph]


def _touching(G: AnyHypergraph, S: frozenset[int]) -> set[int]:
    inc = G.incidence
    touched: set[int] = set()
    for v in S:
        touched.update(inc[v])
    return touched


def degree(G: AnyHypergraph, S: Iterable[int]) -> int:
    """Number of edges (with multiplicity) meeting ``S``."""
    S = _check_set(S, G.n)
    if isinstance(G, Hypergraph3):
        return len(_touching(G, S))
    return sum(G.edges[i][1] for i in _touching(G, S))


def degree2(G: AnyHypergraph, S: Iterable[int]) -> int:
    """Number of edges (with multiplicity) meeting ``S`` in at least two vertices."""
    S = _check_set(S, G.n)
    total = 0
    for e, mult in G.weighted_edges():
        if sum(1 for v in e if v in S) >= 2:
            total += mult
    return total


def private_degree(G: AnyHypergraph, a: int, S: Iterable[int]) -> int:
    """Number of edges (with multiplicity) whose intersection with ``S`` is exactly ``{a}``."""
    S = _check_set(S, G.n)
    _check_vertex(a, G.n)
    if a not in S:
        raise ValueError(f"vertex {a} is not in the set")
    total = 0
    for i in G.incidence[a]:
        e, mult = (G.edges[i], 1) if isinstance(G, Hypergraph3) else G.edges[i]
        if all(v == a or v not in S for v in e):
            total += mult
    return total


def parse_signature(signature: Union[str, Sequence[int]]) -> tuple[int, int, int]:
    """Normalize ``"AAB"`` or ``(0, 0, 1)`` to a sorted label triple."""
    if isinstance(signature, str):
        try:
            labels = [CLASS_NAMES.index(ch) for ch in signature.upper()]
        except ValueError:
            raise ValueError(f"malformed signature {signature!r}") from None
    else:
        labels = list(signature)
    if len(labels) != 3 or any(x not in (A, B, C) for x in labels):
        raise ValueError(f"malformed signature {signature!r}")
    return tuple(sorted(labels))  # type: ignore[return-value]


def signature_counts(G: Hypergraph3, P: Tripartition) -> Counter:
    """Edge counts keyed by sorted label triple, covering all ten signatures."""
    _check_partition(G, P)
    lab = P.labels
    counts: Counter = Counter()
    for a, b, c in G.edges:
        counts[tuple(sorted((lab[a], lab[b], lab[c])))] += 1
    return counts


def cross_count(G: Hypergraph3, P: Tripartition, signature) -> int:
    return signature_counts(G, P)[parse_signature(signature)]


def part_degrees(G: Hypergraph3, P: Tripartition) -> tuple[int, int, int]:
    _check_partition(G, P)
    lab = P.labels
    d = [0, 0, 0]
    for a, b, c in G.edges:
        for x in {lab[a], lab[b], lab[c]}:
            d[x] += 1
    return d[0], d[1], d[2]


def triple_degree(G: Hypergraph3, P: Tripartition) -> int:
    """``d(A) + d(B) + d(C)``: the sum over edges of the number of classes each meets."""
    _check_partition(G, P)
    lab = P.labels
    return sum(len({lab[a], lab[b], lab[c]}) for a, b, c in G.edges)


def restrict(G: Hypergraph3, U: Iterable[int]) -> MultiHypergraph:
    """Restriction of ``G`` to ``U``: every edge is replaced by its intersection with ``U``.

    At most two vertices may be removed, which keeps size-1 edges distinct.
    The result is relabelled onto ``0..|U|-1`` in ascending order of the
    original ids; ``origin`` maps back.
    """
    U = _check_set(U, G.n)
    if G.n - len(U) > 2:
        raise ValueError(f"restriction removes {G.n - len(U)} > 2 vertices")
    order = sorted(U)
    local = {v: i for i, v in enumerate(order)}
    edges = []
    for e in G.edges:
        kept = tuple(local[v] for v in e if v in U)
        if not kept:
            raise ValueError(f"edge {e!r} is disjoint from the restriction set")
        edges.append((kept, 1))
    return MultiHypergraph(len(order), tuple(edges), origin=tuple(order))


def _check_partition(G, P) -> None:
    if P.n != G.n:
        raise ValueError(f"partition covers {P.n} vertices, hypergraph has {G.n}")
