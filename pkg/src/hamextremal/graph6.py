"""graph6 encoding (header-less, one graph per line)."""

from __future__ import annotations

from .graph import MAX_ORDER, Graph


class Graph6Error(ValueError):
    pass


def _encode_order(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])


def encode_graph6(g: Graph) -> bytes:
    out = bytearray(_encode_order(g.n))
    acc = nbits = 0
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def decode_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise Graph6Error("empty graph6 string")
    if any(not 63 <= c <= 126 for c in data):
        raise Graph6Error("byte outside the printable graph6 range")
    if data[0] != 126:
        n, body = data[0] - 63, data[1:]
    else:
        if len(data) < 4 or data[1] == 126:
            raise Graph6Error("unsupported or truncated order header")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        body = data[4:]
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds {MAX_ORDER}")
    total = n * (n - 1) // 2
    need = -(-total // 6)
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for order {n}, got {len(body)}")
    value = 0
    for c in body:
        value = value << 6 | (c - 63)
    pad = need * 6 - total
    if value & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    value >>= pad
    rows = [0] * n
    pos = total - 1
    for j in range(1, n):
        for i in range(j):
            if value >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return Graph(n, tuple(rows))
