"""Line-oriented text formats for graphs, divisors and certificates.

Graph files::

    # comment
    graph <n_vertices> <n_edges>
    e <u> <v> [multiplicity]

Divisor files hold one line ``div <d0> ... <dn>``.  Certificates are
``cert positive q=<vector>`` or ``cert negative pi=<perm> q=<vector>``
with comma-separated vectors.  Rationals print as ``p/q``.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import List, Sequence, Tuple

from bnrank.divisor import EffectivityCertificate, NegativeCertificate, PositiveCertificate
from bnrank.graph import GraphError, Multigraph, build_multigraph


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = "<input>") -> None:
        self.line = line
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line


def _int(token: str, number: int, source: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", number, source) from None


def parse_graph(text: str, source: str = "<input>") -> Multigraph:
    header = None
    edges: List[Tuple[int, int, int]] = []
    seen_pairs = set()
    for number, line in _content_lines(text):
        tokens = line.split()
        if header is None:
            if tokens[0] != "graph" or len(tokens) != 3:
                raise ParseError("expected header 'graph <n_vertices> <n_edges>'", number, source)
            header = (_int(tokens[1], number, source), _int(tokens[2], number, source))
            if header[0] < 2:
                raise ParseError("a graph needs at least 2 vertices", number, source)
            continue
        if tokens[0] != "e" or len(tokens) not in (3, 4):
            raise ParseError("expected edge line 'e <u> <v> [multiplicity]'", number, source)
        u, v = _int(tokens[1], number, source), _int(tokens[2], number, source)
        mult = _int(tokens[3], number, source) if len(tokens) == 4 else 1
        for x in (u, v):
            if not 0 <= x < header[0]:
                raise ParseError(f"vertex {x} out of range 0..{header[0] - 1}", number, source)
        pair = (min(u, v), max(u, v))
        if pair in seen_pairs:
            raise ParseError(f"edge {u} {v} listed twice; use a multiplicity", number, source)
        seen_pairs.add(pair)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", number, source)
        if mult <= 0:
            raise ParseError(f"multiplicity must be positive, got {mult}", number, source)
        edges.append((u, v, mult))
    if header is None:
        raise ParseError("missing 'graph' header", None, source)
    if len(edges) != header[1]:
        raise ParseError(f"header declares {header[1]} edges, found {len(edges)}", None, source)
    try:
        return build_multigraph(header[0], edges)
    except GraphError as exc:
        raise ParseError(str(exc), None, source) from None


def format_graph(g: Multigraph) -> str:
    lines = [f"graph {g.vertex_count} {len(g.edges)}"]
    lines += [f"e {u} {v} {m}" for u, v, m in g.edges]
    return "\n".join(lines) + "\n"


def parse_divisor_tokens(tokens: Sequence[str], number: int | None = None, source: str = "<input>") -> Tuple[int, ...]:
    if not tokens:
        raise ParseError("empty divisor", number, source)
    try:
        return tuple(int(t) for t in tokens)
    except ValueError:
        raise ParseError(f"divisor entries must be integers: {' '.join(tokens)!r}", number, source) from None


def parse_divisor(text: str, source: str = "<input>") -> Tuple[int, ...]:
    found = None
    for number, line in _content_lines(text):
        tokens = line.split()
        if tokens[0] != "div" or found is not None:
            raise ParseError("expected a single line 'div <d0> ... <dn>'", number, source)
        found = parse_divisor_tokens(tokens[1:], number, source)
    if found is None:
        raise ParseError("missing 'div' line", None, source)
    return found


def format_divisor(d: Sequence[int]) -> str:
    return "div " + " ".join(str(x) for x in d)


def format_vector(v: Sequence) -> str:
    return ",".join(str(Fraction(x)) for x in v)


def _parse_vector(text: str, number: int | None, source: str) -> Tuple[int, ...]:
    return parse_divisor_tokens([t for t in text.split(",")], number, source)


def format_certificate(cert: EffectivityCertificate) -> str:
    if isinstance(cert, PositiveCertificate):
        return f"cert positive q={format_vector(cert.q)}"
    return f"cert negative pi={format_vector(cert.permutation)} q={format_vector(cert.q)}"


def parse_certificate(text: str, source: str = "<input>") -> EffectivityCertificate:
    for number, line in _content_lines(text):
        tokens = line.split()
        if len(tokens) < 3 or tokens[0] != "cert":
            raise ParseError("expected 'cert positive ...' or 'cert negative ...'", number, source)
        fields = {}
        for tok in tokens[2:]:
            key, sep, value = tok.partition("=")
            if not sep:
                raise ParseError(f"expected key=value, got {tok!r}", number, source)
            fields[key] = _parse_vector(value, number, source)
        if tokens[1] == "positive" and set(fields) == {"q"}:
            return PositiveCertificate(fields["q"])
        if tokens[1] == "negative" and set(fields) == {"pi", "q"}:
            return NegativeCertificate(fields["pi"], fields["q"])
        raise ParseError("malformed certificate", number, source)
    raise ParseError("missing certificate line", None, source)


def read_text(path: str | Path) -> str:
    return Path(path).read_text(encoding="utf-8")
