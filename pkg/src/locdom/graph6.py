"""graph6 encoding (one undirected graph per ASCII line)."""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph import Graph, GraphError

__all__ = ["Graph6ParseError", "encode_graph6", "decode_graph6", "read_graph6_lines"]

_HEADER = ">>graph6<<"


class Graph6ParseError(GraphError):
    def __init__(self, text: str, offset: int, reason: str):
        super().__init__(f"graph6 parse error at byte {offset}: {reason} (in {text!r})")
        self.offset = offset


def _size_prefix(n: int) -> list[int]:
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    if n <= 68719476735:
        return [63, 63] + [(n >> (6 * i)) & 63 for i in range(5, -1, -1)]
    raise GraphError(f"graph too large for graph6: n={n}")


def encode_graph6(g: Graph) -> str:
    out = _size_prefix(g.n)
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc)
                acc = nbits = 0
    if nbits:
        out.append(acc << (6 - nbits))
    return "".join(chr(x + 63) for x in out)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    start = 0
    if s.startswith(_HEADER):
        start = len(_HEADER)
    data = []
    for i in range(start, len(s)):
        c = ord(s[i])
        if not 63 <= c <= 126:
            raise Graph6ParseError(text, i, f"character {s[i]!r} outside '?'..'~'")
        data.append(c - 63)
    if not data:
        raise Graph6ParseError(text, start, "empty string")
    pos = 0
    if data[0] < 63:
        n = data[0]
        pos = 1
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise Graph6ParseError(text, start + len(data), "truncated 8-byte size field")
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        pos = 8
    else:
        if len(data) < 4:
            raise Graph6ParseError(text, start + len(data), "truncated 4-byte size field")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise Graph6ParseError(
            text, start + pos + min(len(body), need), f"expected {need} data bytes for n={n}, got {len(body)}"
        )
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6ParseError(text, start + pos + need - 1, "non-zero padding bits")
    return Graph(n, tuple(adj))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode every non-blank line; blank lines are skipped."""
    for line in lines:
        line = line.strip()
        if line:
            yield decode_graph6(line)
