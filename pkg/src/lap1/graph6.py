"""graph6 encoding plus the plain edge-list text format.

graph6 packs the upper triangle of the adjacency matrix, column by column
((0,1), (0,2), (1,2), (0,3), ...), into 6-bit groups offset by 63.  The
vertex count is one byte for n <= 62 and a 126-prefixed 3-byte group up
to n = 258047.

The edge-list text format is: a first line "n m", then m lines "u v"
with 0-indexed whitespace-separated endpoints.
"""

from __future__ import annotations

from .graphs import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    elif n <= 258047:
        out = [chr(126)]
        out.extend(chr(((n >> shift) & 0x3F) + 63) for shift in (12, 6, 0))
    else:
        raise Graph6Error(f"vertex count {n} too large for this encoder")
    bits = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            bits = (bits << 1) | (1 if g.has_edge(i, j) else 0)
            nbits += 1
            if nbits == 6:
                out.append(chr(bits + 63))
                bits = nbits = 0
    if nbits:
        out.append(chr((bits << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):].strip()
    if not s:
        raise Graph6Error("empty graph6 string")
    vals = []
    for ch in s:
        o = ord(ch)
        if not 63 <= o <= 126:
            raise Graph6Error(f"invalid graph6 character {ch!r}")
        vals.append(o - 63)
    if vals[0] == 63:
        if len(vals) < 4:
            raise Graph6Error("truncated extended vertex count")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    if len(body) != need:
        raise Graph6Error(
            f"payload length {len(body)} does not match n={n} (expected {need})"
        )
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            group, offset = divmod(idx, 6)
            if (body[group] >> (5 - offset)) & 1:
                edges.append((i, j))
            idx += 1
    if npairs % 6:
        pad = body[-1] & ((1 << (6 - npairs % 6)) - 1)
        if pad:
            raise Graph6Error("nonzero trailing padding bits")
    return Graph(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise ValueError("edge-list input must start with a line 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
    except ValueError as exc:
        raise ValueError(f"bad header line: {rows[0]}") from exc
    if len(rows) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(rows) - 1}")
    pairs = []
    for row in rows[1:]:
        if len(row) != 2:
            raise ValueError(f"bad edge line: {' '.join(row)}")
        pairs.append((int(row[0]), int(row[1])))
    return Graph(n, pairs)
