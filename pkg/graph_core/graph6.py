"""graph6 short-form encoding (n <= 62)."""

from typing import Iterable, Iterator, List

from execution.models.errors import Graph6FormatError
from graph_core.graph import Graph

GRAPH6_MAX_ORDER = 62
HEADER = ">>graph6<<"


def graph6_encode(graph: Graph) -> str:
    """Encode as a graph6 line (no trailing newline)."""
    n = graph.n
    if n > GRAPH6_MAX_ORDER:
        raise Graph6FormatError(
            f"graph6 short form supports n <= {GRAPH6_MAX_ORDER}, got {n}",
            params={"n": n},
        )
    bits: List[int] = []
    for j in range(1, n):
        row = graph.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    chars = [chr(n + 63)]
    for start in range(0, len(bits), 6):
        value = 0
        for bit in bits[start : start + 6]:
            value = value << 1 | bit
        chars.append(chr(value + 63))
    return "".join(chars)


def graph6_decode(text: str, line_number: int | None = None) -> Graph:
    """Decode one graph6 line; surrounding whitespace and the header are ignored."""
    line = text.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER) :]
    if not line:
        raise Graph6FormatError("empty graph6 line", line_number=line_number)
    for pos, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise Graph6FormatError(
                f"invalid graph6 character {ch!r} at position {pos}",
                line_number=line_number,
                params={"text": line},
            )
    if line[0] == "~":
        raise Graph6FormatError(
            "graph6 long form (n > 62) is not supported",
            line_number=line_number,
            params={"text": line},
        )
    n = ord(line[0]) - 63
    if n == 0:
        raise Graph6FormatError("graph6 line encodes an empty vertex set", line_number=line_number)
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(line) != expected:
        raise Graph6FormatError(
            f"graph6 length mismatch: n={n} needs {expected} characters, got {len(line)}",
            line_number=line_number,
            params={"text": line},
        )
    rows = [0] * n
    index = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(line[1 + index // 6]) - 63
            if byte >> (5 - index % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            index += 1
    return Graph(n, tuple(rows))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode a stream, skipping blank lines; errors carry 1-based line numbers."""
    for number, line in enumerate(lines, start=1):
        if line.strip():
            yield graph6_decode(line, line_number=number)
