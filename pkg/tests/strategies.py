from itertools import combinations

from hypothesis import strategies as st

from judicious.core import Hypergraph3, SpecialMultigraph, Tripartition


@st.composite
def hypergraphs(draw, min_n=3, max_n=9, min_m=0, max_m=None):
    n = draw(st.integers(min_n, max_n))
    triples = list(combinations(range(n), 3))
    hi = len(triples) if max_m is None else min(max_m, len(triples))
    if not triples:
        return Hypergraph3(n)
    edges = draw(st.lists(st.sampled_from(triples), min_size=min(min_m, hi), max_size=hi, unique=True))
    return Hypergraph3(n, tuple(edges))


@st.composite
def with_partition(draw, graphs=None):
    G = draw(graphs or hypergraphs())
    labels = draw(st.lists(st.integers(0, 2), min_size=G.n, max_size=G.n))
    return G, Tripartition(tuple(labels))


@st.composite
def special_multigraphs(draw, max_n=7, max_mult=3):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    edges = []
    if pairs:
        chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
        edges = [(p, draw(st.integers(1, max_mult))) for p in chosen]
    specials = draw(st.frozensets(st.integers(0, n - 1)))
    return SpecialMultigraph(n, tuple(edges), specials)
