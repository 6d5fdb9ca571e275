"""Extremal examples and seeded random instances.

Random instances draw from :class:`~judicious.rng.SplitMix64` so they are
reproducible across runs and implementations:

* ``random_hypergraph``: when ``C(n,3) <= 2**20`` all triples are listed in
  lexicographic order and the first ``m`` positions of a partial
  Fisher-Yates shuffle are kept (in draw order); otherwise triples of
  three ``below(n)`` draws are rejected until ``m`` distinct ones are seen.
* ``random_special_multigraph``: ``k`` specials by partial Fisher-Yates over
  ``0..n-1``; then each of the ``m`` edge units picks a pair
  ``(below(n), below(n))``, rejected if it is a loop or already at
  ``maxmult``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Union

from .core import Hypergraph3, SpecialMultigraph
from .rng import SplitMix64

TIGHT15_NAMES = "abcdefg"
KINDS = ("grid3", "tight15", "complete", "random", "random_special")


def grid3() -> Hypergraph3:
    """The 3x3 grid: ``v_ij`` is vertex ``3(i-1) + (j-1)``; rows then columns."""
    rows = [(3 * i, 3 * i + 1, 3 * i + 2) for i in range(3)]
    cols = [(j, j + 3, j + 6) for j in range(3)]
    return Hypergraph3(9, tuple(rows + cols))


def grid3_rows() -> tuple[frozenset[int], ...]:
    return tuple(frozenset(range(3 * i, 3 * i + 3)) for i in range(3))


def tight15() -> Hypergraph3:
    """Vertices ``a..g`` as ``0..6``; edges abc, def, adg, beg, cfg."""
    return Hypergraph3(7, tuple(tuple(TIGHT15_NAMES.index(ch) for ch in w) for w in ("abc", "def", "adg", "beg", "cfg")))


def named(letters: str) -> frozenset[int]:
    """Vertex set of :func:`tight15` from letters, e.g. ``named("adg")``."""
    return frozenset(TIGHT15_NAMES.index(ch) for ch in letters)


def complete(n: int) -> Hypergraph3:
    if n < 3:
        raise ValueError("complete 3-uniform hypergraph needs n >= 3")
    return Hypergraph3(n, tuple(combinations(range(n), 3)))


def random_hypergraph(n: int, m: int, seed: int) -> Hypergraph3:
    total = comb(n, 3)
    if not 0 <= m <= total:
        raise ValueError(f"m={m} outside [0, C({n},3)={total}]")
    rng = SplitMix64(seed)
    if total <= 1 << 20:
        return Hypergraph3(n, tuple(rng.sample(list(combinations(range(n), 3)), m)))
    seen: dict[tuple[int, ...], None] = {}
    while len(seen) < m:
        t = tuple(sorted({rng.below(n), rng.below(n), rng.below(n)}))
        if len(t) == 3:
            seen.setdefault(t)
    return Hypergraph3(n, tuple(seen))


def random_special_multigraph(n: int, m: int, k: int, maxmult: int, seed: int) -> SpecialMultigraph:
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if maxmult < 1:
        raise ValueError("maxmult must be at least 1")
    if m < 0 or m > comb(n, 2) * maxmult:
        raise ValueError(f"m={m} does not fit {comb(n, 2)} pairs of multiplicity <= {maxmult}")
    rng = SplitMix64(seed)
    specials = frozenset(rng.sample(list(range(n)), k))
    mult: dict[tuple[int, int], int] = {}
    placed = 0
    while placed < m:
        u, v = rng.below(n), rng.below(n)
        if u == v:
            continue
        key = (min(u, v), max(u, v))
        if mult.get(key, 0) >= maxmult:
            continue
        mult[key] = mult.get(key, 0) + 1
        placed += 1
    return SpecialMultigraph(n, tuple(mult.items()), specials)


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    n: int = 0
    m: int = 0
    k: int = 0
    maxmult: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind == "complete" and self.n < 3:
            raise ValueError("complete needs n >= 3")
        if self.kind == "random" and not 0 <= self.m <= comb(self.n, 3):
            raise ValueError("random needs 0 <= m <= C(n,3)")

    def build(self) -> Union[Hypergraph3, SpecialMultigraph]:
        if self.kind == "grid3":
            return grid3()
        if self.kind == "tight15":
            return tight15()
        if self.kind == "complete":
            return complete(self.n)
        if self.kind == "random":
            return random_hypergraph(self.n, self.m, self.seed)
        return random_special_multigraph(self.n, self.m, self.k, self.maxmult, self.seed)
