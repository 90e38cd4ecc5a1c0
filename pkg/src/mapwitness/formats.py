"""Text formats: graph6, integer edge lists, labeled edge lists and witness files.

graph6 follows the de-facto layout used by nauty: a size prefix, then the
upper triangle of the adjacency matrix read column by column
(``x(0,1) x(0,2) x(1,2) x(0,3) ...``), packed big-endian into 6-bit groups,
each group offset by 63.

The integer edge-list format has one ``u v`` pair per line; ``#`` starts a
comment. A comment of the form ``# n=<count>`` fixes the vertex count so that
isolated vertices survive a round trip.
"""

from __future__ import annotations

import re
from typing import Iterator, Sequence

from .graph import BipartiteGraph, Graph

GRAPH6_HEADER = ">>graph6<<"
_N_PRAGMA = re.compile(r"^#\s*n\s*=\s*(\d+)\s*$")


class GraphFormatError(ValueError):
    """Raised for malformed graph text."""


# -- graph6 ------------------------------------------------------------------


def _encode_size(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphFormatError(f"graph too large for graph6: n={n}")


def _decode_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise GraphFormatError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphFormatError("truncated graph6 size field")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise GraphFormatError("truncated graph6 size field")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def to_graph6(g: Graph) -> str:
    n = g.n
    bits = []
    for j in range(1, n):
        row = g.neighbor_set(j)
        bits.extend(1 if i in row else 0 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    chunks = []
    for k in range(0, len(bits), 6):
        b = bits[k : k + 6]
        chunks.append(chr(63 + (b[0] << 5 | b[1] << 4 | b[2] << 3 | b[3] << 2 | b[4] << 1 | b[5])))
    return _encode_size(n) + "".join(chunks)


def from_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER) :]
    try:
        data = line.encode("ascii")
    except UnicodeEncodeError as exc:
        raise GraphFormatError("graph6 must be printable ASCII") from exc
    if any(b < 63 or b > 126 for b in data):
        raise GraphFormatError(f"invalid graph6 character in {line!r}")
    if data[:1] == b":" or data[:1] == b";":
        raise GraphFormatError("sparse6/digraph6 input is not supported")
    n, pos = _decode_size(data)
    nbits = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (nbits + 5) // 6:
        raise GraphFormatError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}")
    edges = []
    k = 0
    j, i = 1, 0
    for byte in body:
        val = byte - 63
        for shift in range(5, -1, -1):
            if k >= nbits:
                if (val >> shift) & 1:
                    raise GraphFormatError("nonzero graph6 padding bits")
                continue
            if (val >> shift) & 1:
                edges.append((i, j))
            k += 1
            i += 1
            if i == j:
                j, i = j + 1, 0
    return Graph(n, edges)


def iter_graph6(text: str) -> Iterator[Graph]:
    for line in text.splitlines():
        line = line.strip()
        if line:
            yield from_graph6(line)


# -- integer edge lists ------------------------------------------------------


def from_edgelist(text: str) -> Graph:
    n_declared = None
    edges = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        m = _N_PRAGMA.match(raw.strip())
        if m:
            n_declared = int(m.group(1))
            continue
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        if len(line) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {len(line)} token(s)")
        try:
            u, v = int(line[0]), int(line[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: vertex ids must be integers") from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex id")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at {u}")
        edges.append((u, v))
        top = max(top, u, v)
    n = top + 1 if n_declared is None else n_declared
    if top >= n:
        raise GraphFormatError(f"vertex {top} out of range for n={n}")
    return Graph(n, edges)


def to_edgelist(g: Graph) -> str:
    lines = [f"# n={g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str, fmt: str) -> Graph:
    if fmt == "graph6":
        return from_graph6(text)
    if fmt == "edgelist":
        return from_edgelist(text)
    raise ValueError(f"unknown format {fmt!r}")


def serialize_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    if fmt == "edgelist":
        return to_edgelist(g)
    raise ValueError(f"unknown format {fmt!r}")


# -- labeled edge lists (CLI input) ----------------------------------------------


def from_labeled_edgelist(text: str) -> tuple[Graph, list[str]]:
    """Parse ``u v`` lines over arbitrary tokens; a lone token declares a vertex.

    Labels get dense ids in order of first appearance. A ``# n=N`` pragma
    declares the labels ``0..N-1`` up front, so integer edge lists keep
    their ids and isolated vertices.
    """
    index: dict[str, int] = {}
    labels: list[str] = []
    edges = []

    def vid(tok: str) -> int:
        if tok not in index:
            index[tok] = len(labels)
            labels.append(tok)
        return index[tok]

    for lineno, raw in enumerate(text.splitlines(), 1):
        m = _N_PRAGMA.match(raw.strip())
        if m:
            if labels:
                raise GraphFormatError(f"line {lineno}: the n= pragma must come first")
            for v in range(int(m.group(1))):
                vid(str(v))
            continue
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        if len(line) == 1:
            vid(line[0])
            continue
        if len(line) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {len(line)} tokens")
        if line[0] == line[1]:
            raise GraphFormatError(f"line {lineno}: self-loop at {line[0]}")
        edges.append((vid(line[0]), vid(line[1])))
    return Graph(len(labels), edges), labels


# -- witnesses ---------------------------------------------------------------


def _point_names(b: BipartiteGraph) -> list[str]:
    if b.point_labels is None:
        return [f"w{i}" for i in range(b.point_count)]
    # integer labels are clique ids; prefix them so they never read as vertices
    return [f"q{x}" if isinstance(x, int) else str(x) for x in b.point_labels]


def witness_to_text(b: BipartiteGraph, vertex_labels: Sequence[str] | None = None) -> str:
    """Two sections: ``[vertices]`` one label per line, ``[points]`` one point per line.

    A point line is the point's name followed by the labels of its neighbors.
    """
    vl = [str(v) for v in range(b.vertex_count)] if vertex_labels is None else list(vertex_labels)
    lines = ["[vertices]", *vl, "[points]"]
    for name, nb in zip(_point_names(b), b.neighborhoods):
        lines.append(" ".join([name, *(vl[v] for v in nb)]))
    return "\n".join(lines) + "\n"


def witness_from_text(text: str) -> tuple[BipartiteGraph, list[str]]:
    section = None
    labels: list[str] = []
    index: dict[str, int] = {}
    names, hoods = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        if line[0] in ("[vertices]", "[points]"):
            section = line[0]
            continue
        if section == "[vertices]":
            if len(line) != 1:
                raise GraphFormatError(f"line {lineno}: one vertex label per line")
            if line[0] in index:
                raise GraphFormatError(f"line {lineno}: duplicate vertex {line[0]!r}")
            index[line[0]] = len(labels)
            labels.append(line[0])
        elif section == "[points]":
            try:
                hood = [index[tok] for tok in line[1:]]
            except KeyError as exc:
                raise GraphFormatError(f"line {lineno}: unknown vertex {exc.args[0]!r}") from None
            names.append(line[0])
            hoods.append(hood)
        else:
            raise GraphFormatError(f"line {lineno}: content before a section header")
    return BipartiteGraph(len(labels), hoods, names), labels


def witness_to_dot(b: BipartiteGraph, vertex_labels: Sequence[str] | None = None) -> str:
    """DOT drawing: vertices as circles, points as boxes."""
    vl = [str(v) for v in range(b.vertex_count)] if vertex_labels is None else list(vertex_labels)
    out = ["graph witness {", "  node [shape=circle];"]
    out.extend(f'  v{v} [label="{vl[v]}"];' for v in range(b.vertex_count))
    out.append('  node [shape=box, label=""];')
    out.extend(f'  p{w} [tooltip="{name}"];' for w, name in enumerate(_point_names(b)))
    out.extend(f"  v{v} -- p{w};" for v, w in b.edges())
    out.append("}")
    return "\n".join(out) + "\n"
