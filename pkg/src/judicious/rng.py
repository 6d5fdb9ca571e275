"""SplitMix64 pseudo-random generator.

All randomness in the package flows through this generator so that seeded
instances, partitions and experiment rows are reproducible bit-for-bit,
including by other implementations.  The algorithm is the standard
SplitMix64 (Steele, Lea & Flood, 2014):

    state = (state + 0x9E3779B97F4A7C15) mod 2**64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    output z ^ (z >> 31)

Bounded integers in ``[0, n)`` use rejection sampling: outputs at or above
``2**64 - (2**64 mod n)`` are discarded, the rest are reduced mod ``n``.
Child streams (one per restart or per experiment instance) are seeded with
the ``index``-th output (0-based) of a fresh generator on the parent seed.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int = 0):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)``."""
        if n <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates, walking from the back."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample(self, population: list, k: int) -> list:
        """``k`` distinct items via a partial Fisher-Yates from the front."""
        if not 0 <= k <= len(population):
            raise ValueError("sample size out of range")
        pool = list(population)
        for i in range(k):
            j = i + self.below(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]


def child_seed(seed: int, index: int) -> int:
    """Seed of the ``index``-th independent sub-stream of ``seed``."""
    if index < 0:
        raise ValueError("index must be non-negative")
    z = (seed + (index + 1) * GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)
