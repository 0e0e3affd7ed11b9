"""Plain-text input formats.

All four share one layout: a header line giving a size, then one record
per line. ``#`` starts a comment; blank lines are ignored. The header may be
written bare (``3``) or named (``d=3``, ``n = 3``). Rationals are ``p`` or
``p/q``.

* poset: header ``n``, then cover relations ``j k`` meaning ``a_j < a_k``
* arrangement: header ``d``, then ``c_1 ... c_d b`` for ``c . x = b``
* polytope: header ``n`` (ambient dimension), then one vertex per line
* graph: header ``n``, then edges ``i j``
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path
from typing import Iterator

from .arrangement import Arrangement, Hyperplane
from .geometry.polytope import Polytope
from .graph_coloring import Graph
from .poset import Poset

_RATIONAL = re.compile(r"[+-]?\d+(/\d+)?")
_HEADER = re.compile(r"(?:[A-Za-z]\w*\s*=\s*)?(\d+)")


class ParseError(ValueError):
    def __init__(self, line: int | None, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _records(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield lineno, body.split()


def _rational(tok: str, lineno: int) -> Fraction:
    if not _RATIONAL.fullmatch(tok):
        raise ParseError(lineno, f"expected a rational p or p/q, got {tok!r}")
    try:
        return Fraction(tok)
    except ZeroDivisionError:
        raise ParseError(lineno, f"zero denominator in {tok!r}") from None


def _integer(tok: str, lineno: int) -> int:
    if not re.fullmatch(r"[+-]?\d+", tok):
        raise ParseError(lineno, f"expected an integer, got {tok!r}")
    return int(tok)


def _split_header(text: str, what: str) -> tuple[int, list[tuple[int, list[str]]]]:
    recs = list(_records(text))
    if not recs:
        raise ParseError(None, f"empty {what} file: missing the size header")
    lineno, toks = recs[0]
    m = _HEADER.fullmatch(" ".join(toks))
    if not m:
        raise ParseError(lineno, f"expected a size header like '3' or 'n=3', got {' '.join(toks)!r}")
    return int(m.group(1)), recs[1:]


def _pair(toks: list[str], lineno: int, n: int, what: str) -> tuple[int, int]:
    if len(toks) != 2:
        raise ParseError(lineno, f"expected two labels '{what}', got {len(toks)} fields")
    i, j = (_integer(t, lineno) for t in toks)
    for v in (i, j):
        if not 1 <= v <= n:
            raise ParseError(lineno, f"label {v} outside 1..{n}")
    return i, j


def parse_poset(text: str) -> Poset:
    n, recs = _split_header(text, "poset")
    rel = [_pair(toks, lineno, n, "j k") for lineno, toks in recs]
    return Poset(n, rel)


def parse_graph(text: str) -> Graph:
    n, recs = _split_header(text, "graph")
    return Graph(n, [_pair(toks, lineno, n, "i j") for lineno, toks in recs])


def parse_arrangement(text: str) -> Arrangement:
    d, recs = _split_header(text, "arrangement")
    hs = []
    for lineno, toks in recs:
        if len(toks) != d + 1:
            raise ParseError(lineno, f"expected {d + 1} numbers 'c_1 ... c_{d} b', got {len(toks)}")
        vals = [_rational(t, lineno) for t in toks]
        if not any(vals[:d]):
            raise ParseError(lineno, "hyperplane normal is zero")
        hs.append(Hyperplane(tuple(vals[:d]), vals[d]))
    return Arrangement(d, hs)


def parse_polytope(text: str) -> Polytope:
    n, recs = _split_header(text, "polytope")
    pts = []
    for lineno, toks in recs:
        if len(toks) != n:
            raise ParseError(lineno, f"expected {n} coordinates, got {len(toks)}")
        pts.append(tuple(_rational(t, lineno) for t in toks))
    if not pts:
        raise ParseError(None, "polytope file lists no vertices")
    return Polytope(pts)


def _q(x) -> str:
    return str(Fraction(x))


def dump_poset(p: Poset) -> str:
    return "\n".join([str(p.n)] + [f"{j} {k}" for j, k in p.covers]) + "\n"


def dump_graph(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{i} {j}" for i, j in g.edges]) + "\n"


def dump_arrangement(a: Arrangement) -> str:
    lines = [str(a.dim)]
    lines += [" ".join(_q(c) for c in h.normal) + " " + _q(h.offset) for h in a.hyperplanes]
    return "\n".join(lines) + "\n"


def dump_polytope(p: Polytope) -> str:
    return "\n".join([str(p.ambient)] + [" ".join(_q(c) for c in v) for v in p.vertices]) + "\n"


PARSERS = {
    "poset": parse_poset,
    "graph": parse_graph,
    "arrangement": parse_arrangement,
    "polytope": parse_polytope,
}


def load(kind: str, path: str | Path):
    return PARSERS[kind](Path(path).read_text())
