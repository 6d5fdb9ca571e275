"""Text formats for instances and JSON for partitions.

Hypergraph file::

    # comment
    p h3 <n> <m>
    <u> <v> <w>          (m lines, 1-based ids)

Special multigraph file::

    p smg <n> <m> <k>
    s <v>                (k lines)
    e <u> <v> <mult>     (multiplicities summing to m)

Ids are 1-based in files and 0-based in memory.
"""

from __future__ import annotations

import json
from typing import Sequence, Union

from .core import Bipartition, Certificate, Hypergraph3, SpecialMultigraph, Tripartition


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line.split()


def _ints(tokens, no: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", no) from None


def _vertex(x: int, n: int, no: int) -> int:
    if not 1 <= x <= n:
        raise ParseError(f"vertex {x} outside [1, {n}]", no)
    return x - 1


def parse_hypergraph(text: str) -> Hypergraph3:
    it = _lines(text)
    header = next(it, None)
    if header is None:
        raise ParseError("missing header")
    no, tok = header
    if len(tok) != 4 or tok[0] != "p" or tok[1] != "h3":
        raise ParseError("header must be 'p h3 <n> <m>'", no)
    n, m = _ints(tok[2:], no)
    if n < 0 or m < 0:
        raise ParseError("negative count in header", no)
    edges = []
    seen = set()
    for no, tok in it:
        if len(tok) != 3:
            raise ParseError("edge line must have three vertex ids", no)
        e = tuple(sorted(_vertex(x, n, no) for x in _ints(tok, no)))
        if len(set(e)) != 3:
            raise ParseError("edge vertices must be distinct", no)
        if e in seen:
            raise ParseError("duplicate edge", no)
        seen.add(e)
        edges.append(e)
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}")
    return Hypergraph3(n, tuple(edges))


def format_hypergraph(G: Hypergraph3, comment: str = "") -> str:
    out = [f"# {comment}"] if comment else []
    out.append(f"p h3 {G.n} {G.m}")
    out.extend(" ".join(str(v + 1) for v in e) for e in G.edges)
    return "\n".join(out) + "\n"


def parse_special_multigraph(text: str) -> SpecialMultigraph:
    it = _lines(text)
    header = next(it, None)
    if header is None:
        raise ParseError("missing header")
    no, tok = header
    if len(tok) != 5 or tok[0] != "p" or tok[1] != "smg":
        raise ParseError("header must be 'p smg <n> <m> <k>'", no)
    n, m, k = _ints(tok[2:], no)
    specials = set()
    pairs = []
    total = 0
    for no, tok in it:
        if tok[0] == "s" and len(tok) == 2:
            v = _vertex(_ints(tok[1:], no)[0], n, no)
            if v in specials:
                raise ParseError("special vertex listed twice", no)
            specials.add(v)
        elif tok[0] == "e" and len(tok) == 4:
            u, v, mult = _ints(tok[1:], no)
            u, v = _vertex(u, n, no), _vertex(v, n, no)
            if u == v:
                raise ParseError("loop edge", no)
            if mult < 1:
                raise ParseError("multiplicity must be positive", no)
            pairs.append(((u, v), mult))
            total += mult
        else:
            raise ParseError("expected 's <v>' or 'e <u> <v> <mult>'", no)
    if len(specials) != k:
        raise ParseError(f"header declares {k} specials, found {len(specials)}")
    if total != m:
        raise ParseError(f"header declares total multiplicity {m}, found {total}")
    return SpecialMultigraph(n, tuple(pairs), frozenset(specials))


def format_special_multigraph(M: SpecialMultigraph) -> str:
    out = [f"p smg {M.n} {M.m} {M.k}"]
    out.extend(f"s {v + 1}" for v in sorted(M.specials))
    out.extend(f"e {u + 1} {v + 1} {mult}" for (u, v), mult in M.pair_edges)
    return "\n".join(out) + "\n"


def parse_instance(text: str) -> Union[Hypergraph3, SpecialMultigraph]:
    for no, tok in _lines(text):
        if len(tok) >= 2 and tok[0] == "p" and tok[1] == "smg":
            return parse_special_multigraph(text)
        return parse_hypergraph(text)
    raise ParseError("missing header")


def partition_dict(
    P: Union[Tripartition, Bipartition], cert: Certificate
) -> dict:
    return {
        "parts": [sorted(v + 1 for v in part) for part in P.parts()],
        "degrees": list(cert.degrees),
        "m": cert.m,
        "threshold": {"num": cert.num, "den": cert.den},
        "meets_bound": cert.meets_bound,
        "method": cert.method,
        "flags": {
            "semi_optimal": cert.semi_optimal,
            "locally_optimal": cert.locally_optimal,
            "exact": cert.exact,
        },
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def parse_parts(text: str, n: int, count: int) -> list[list[int]]:
    """0-based parts from partition JSON, checking disjointness and coverage of ``1..n``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    parts = data.get("parts") if isinstance(data, dict) else None
    if not isinstance(parts, list) or len(parts) != count:
        raise ParseError(f"'parts' must be a list of {count} arrays")
    seen: set[int] = set()
    out = []
    for part in parts:
        if not isinstance(part, list) or not all(isinstance(x, int) for x in part):
            raise ParseError("each part must be an array of integer ids")
        zero = []
        for x in part:
            if not 1 <= x <= n:
                raise ParseError(f"vertex {x} outside [1, {n}]")
            if x in seen:
                raise ParseError(f"vertex {x} is in more than one part")
            seen.add(x)
            zero.append(x - 1)
        out.append(zero)
    if len(seen) != n:
        missing = sorted(set(range(1, n + 1)) - seen)
        raise ParseError(f"vertices {missing} are in no part")
    return out


def parts_of(labels: Sequence[int], count: int) -> list[list[int]]:
    return [[v for v, x in enumerate(labels) if x == c] for c in range(count)]
