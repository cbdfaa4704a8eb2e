"""graph6 codec.

Six bits per byte, offset 63; the upper triangle is read column by column,
``(0,1), (0,2), (1,2), (0,3), ...``, and the last byte is zero padded.
"""

from __future__ import annotations

from .graph import Graph

_OFFSET = 63
_HEADER = b">>graph6<<"


class Graph6Error(ValueError):
    """Raised on malformed graph6 input."""


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise Graph6Error(f"negative vertex count {n}")
    if n <= 62:
        return bytes([n + _OFFSET])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + _OFFSET for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + _OFFSET for s in (30, 24, 18, 12, 6, 0)])
    raise Graph6Error(f"vertex count {n} too large for graph6")


def _decode_n(data: bytes) -> tuple[int, int]:
    """Return ``(n, header_length)``."""
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 126:
        return data[0] - _OFFSET, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte length header")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - _OFFSET)
        if n <= 258047:
            raise Graph6Error(f"8-byte length header used for small n={n}")
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated 4-byte length header")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - _OFFSET)
    if n <= 62:
        raise Graph6Error(f"4-byte length header used for small n={n}")
    return n, 4


def encode_graph6(g: Graph) -> str:
    n = g.n
    out = bytearray(_encode_n(n))
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + _OFFSET)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + _OFFSET)
    return out.decode("ascii")


def decode_graph6(text: str | bytes) -> Graph:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    if data.startswith(_HEADER):
        data = data[len(_HEADER):]
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} at offset {pos} outside 63..126")
    n, start = _decode_n(data)
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    body = data[start:]
    if len(body) != expected:
        raise Graph6Error(f"n={n} needs {expected} data bytes, got {len(body)}")
    adj = [0] * n
    i, j = 0, 1
    for k, b in enumerate(body):
        value = b - _OFFSET
        for shift in range(5, -1, -1):
            bit = value >> shift & 1
            if k * 6 + (5 - shift) >= nbits:
                if bit:
                    raise Graph6Error("nonzero padding bits")
                continue
            if bit:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            i += 1
            if i == j:
                i = 0
                j += 1
    return Graph(n, adj)
