"""graph6 codec.

Standard single-byte order prefix for order <= 62, the '~'-prefixed long form
for 63..128. Adjacency bits run over the upper triangle in column-major order:
for each column j = 1..n-1, rows i = 0..j-1.
"""

from __future__ import annotations

from .errors import OrderCap, ParseError
from .graphs import MAX_ORDER, Graph

_HEADER = ">>graph6<<"


def encode(g: Graph) -> str:
    n = g.order
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~", chr((n >> 12 & 63) + 63), chr((n >> 6 & 63) + 63), chr((n & 63) + 63)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            acc = acc << 1 | (g.rows[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(chr(acc + 63))
    return "".join(out)


def decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise ParseError("empty graph6 string", 0)
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character {ch!r}", pos)
    if s[0] != "~":
        n = ord(s[0]) - 63
        body = s[1:]
    else:
        if len(s) >= 2 and s[1] == "~":
            raise OrderCap("eight-byte graph6 orders exceed the 128-vertex cap")
        if len(s) < 4:
            raise ParseError("truncated long-form order", len(s))
        n = (ord(s[1]) - 63) << 12 | (ord(s[2]) - 63) << 6 | (ord(s[3]) - 63)
        body = s[4:]
    if n > MAX_ORDER:
        raise OrderCap(f"graph6 order {n} exceeds {MAX_ORDER}")
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise ParseError(
            f"graph6 body has {len(body)} bytes, expected {(need + 5) // 6}",
            len(s),
        )
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[idx // 6]) - 63
            if byte >> (5 - idx % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    # trailing pad bits must be zero
    while idx < len(body) * 6:
        if (ord(body[idx // 6]) - 63) >> (5 - idx % 6) & 1:
            raise ParseError("nonzero padding bits", idx // 6)
        idx += 1
    return Graph(n, tuple(rows))
