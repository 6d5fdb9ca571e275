"""Judicious partitions of 3-uniform hypergraphs.

Every 3-uniform hypergraph with ``m`` edges has a partition into three
classes each meeting at least ``3m/5`` edges; :func:`solve` finds one and
returns a recomputable certificate.
"""

from .core import (
    A,
    B,
    C,
    Bipartition,
    Certificate,
    Hypergraph3,
    MultiHypergraph,
    SpecialMultigraph,
    Tripartition,
    cross_count,
    degree,
    degree2,
    part_degrees,
    private_degree,
    restrict,
    triple_degree,
)
from .local_search import SearchConfig, engine_partition, hill_climb
from .pipeline import SolveOutcome, is_good, solve, verify_good
from .special import bipartition_hypergraph_meeting, special_bipartition

__version__ = "0.1.0"

__all__ = [
    "A", "B", "C",
    "Bipartition", "Certificate", "Hypergraph3", "MultiHypergraph",
    "SearchConfig", "SolveOutcome", "SpecialMultigraph", "Tripartition",
    "bipartition_hypergraph_meeting", "cross_count", "degree", "degree2",
    "engine_partition", "hill_climb", "is_good", "part_degrees",
    "private_degree", "restrict", "solve", "special_bipartition",
    "triple_degree", "verify_good",
]
