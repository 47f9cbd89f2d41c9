"""graph6 encoding and decoding.

Follows the layout of nauty's ``formats.txt``: an order header N(n) followed
by the upper triangle of the adjacency matrix, column by column
(``x(0,1) x(0,2) x(1,2) x(0,3) ...``), packed into 6-bit groups each offset
by 63.  The optional ``>>graph6<<`` header is accepted on input.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import SimpleGraph

__all__ = ["Graph6Error", "encode", "decode", "read_file", "write_file"]


class Graph6Error(ValueError):
    def __init__(self, msg: str, offset: int):
        super().__init__(f"{msg} (at byte {offset})")
        self.offset = offset


def _encode_order(n: int) -> bytes:
    if n < 0:
        raise ValueError("negative order")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [(n >> s & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def encode(g: SimpleGraph) -> str:
    n = g.order
    out = bytearray(_encode_order(n))
    acc = nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def decode(line: str | bytes) -> SimpleGraph:
    if isinstance(line, str):
        try:
            data = line.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII character", exc.start) from None
    else:
        data = bytes(line)
    data = data.rstrip(b"\r\n")
    pos = 0
    if data.startswith(b">>graph6<<"):
        pos = 10
    for k in range(pos, len(data)):
        if not 63 <= data[k] <= 126:
            raise Graph6Error(f"byte {data[k]!r} outside the graph6 range 63..126", k)
    if pos >= len(data):
        raise Graph6Error("missing order header", pos)
    if data[pos] != 126:
        n, pos = data[pos] - 63, pos + 1
    elif len(data) > pos + 1 and data[pos + 1] == 126:
        if len(data) < pos + 8:
            raise Graph6Error("truncated 8-byte order header", len(data))
        n = 0
        for c in data[pos + 2:pos + 8]:
            n = (n << 6) | (c - 63)
        pos += 8
    else:
        if len(data) < pos + 4:
            raise Graph6Error("truncated 4-byte order header", len(data))
        n = 0
        for c in data[pos + 1:pos + 4]:
            n = (n << 6) | (c - 63)
        pos += 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} adjacency bytes for order {n}, got {len(body)}", pos + min(len(body), need))
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            c = body[k // 6] - 63
            if c >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits", pos + need - 1)
    return SimpleGraph(n, tuple(adj))


def read_file(fh: TextIO) -> Iterator[SimpleGraph]:
    for line in fh:
        line = line.strip()
        if line:
            yield decode(line)


def write_file(fh: TextIO, graphs: Iterable[SimpleGraph]) -> int:
    count = 0
    for g in graphs:
        fh.write(encode(g) + "\n")
        count += 1
    return count
