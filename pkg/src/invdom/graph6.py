"""Bit-exact graph6 codec and an edge-list reader for hand-written fixtures.

graph6 layout (single-byte size form, n <= 62): size byte n+63, then the
upper-triangle adjacency bits in column-major order (0,1),(0,2),(1,2),
(0,3),(1,3),(2,3),... packed into 6-bit groups, most significant bit
first, zero padded, each group emitted as ASCII value group+63.
"""

from __future__ import annotations

from .errors import (
    InputFormatError,
    MalformedLength,
    NonAsciiByte,
    TooLarge,
    TrailingGarbage,
    TruncatedBody,
)
from .graph import Graph

HEADER = b">>graph6<<"
_MAX_G6 = 62


def _pair_count(n: int) -> int:
    return n * (n - 1) // 2


def parse_graph6(data: bytes | str) -> Graph:
    """Decode one graph6-encoded graph (optional '>>graph6<<' header)."""
    if isinstance(data, str):
        try:
            data = data.encode("ascii")
        except UnicodeEncodeError as exc:
            raise NonAsciiByte(f"non-ascii character in graph6 input: {exc}") from None
    data = data.strip()
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if not data:
        raise TruncatedBody("empty graph6 input")

    for b in data:
        if not 63 <= b <= 126:
            raise NonAsciiByte(f"byte {b} outside graph6 alphabet 63..126")
    if data[0] == 126:
        raise MalformedLength("multi-byte size forms are not supported")
    n = data[0] - 63
    if n > _MAX_G6:
        raise MalformedLength(f"size byte encodes n={n} > {_MAX_G6}")

    body = data[1:]
    need = (_pair_count(n) + 5) // 6
    if len(body) < need:
        raise TruncatedBody(f"need {need} body bytes for n={n}, got {len(body)}")
    if len(body) > need:
        raise TrailingGarbage(f"{len(body) - need} extra bytes after body")

    bitstream = 0
    for b in body:
        bitstream = (bitstream << 6) | (b - 63)
    total_bits = 6 * need

    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bitstream >> (total_bits - 1 - idx) & 1:
                edges.append((u, v))
            idx += 1
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    """Canonical graph6 string for the labeled graph g (n <= 62)."""
    if g.n > _MAX_G6:
        raise TooLarge(f"graph6 single-byte size form caps n at {_MAX_G6}, got {g.n}")
    out = [chr(g.n + 63)]
    group, filled = 0, 0
    for v in range(1, g.n):
        for u in range(v):
            group = (group << 1) | (g.adj[u] >> v & 1)
            filled += 1
            if filled == 6:
                out.append(chr(group + 63))
                group, filled = 0, 0
    if filled:
        out.append(chr((group << (6 - filled)) + 63))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """Read a graph from 'u v' lines (0-based vertex ids).

    Blank lines and '#' comments are skipped.  An optional first line with a
    single integer fixes the vertex count; otherwise n = max id + 1.
    """
    n_declared = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 1 and n_declared is None and not pairs:
            try:
                n_declared = int(parts[0])
            except ValueError:
                raise InputFormatError(f"line {lineno}: expected vertex count, got {line!r}") from None
            continue
        if len(parts) != 2:
            raise InputFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputFormatError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if u < 0 or v < 0:
            raise InputFormatError(f"line {lineno}: negative vertex id in {line!r}")
        if u == v:
            raise InputFormatError(f"line {lineno}: loop at vertex {u}")
        pairs.append((u, v))

    n = n_declared if n_declared is not None else (max((max(u, v) for u, v in pairs), default=-1) + 1)
    if any(u >= n or v >= n for u, v in pairs):
        raise InputFormatError(f"edge endpoint exceeds declared vertex count {n}")
    try:
        return Graph(n, pairs)
    except TooLarge:
        raise
    except ValueError as exc:
        raise InputFormatError(str(exc)) from None
