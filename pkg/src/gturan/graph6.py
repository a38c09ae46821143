"""graph6 encoding and decoding.

Format reference: https://users.cecs.anu.edu.au/~bdm/data/formats.txt
Only graph6 is supported (no sparse6 or digraph6).
"""
from __future__ import annotations

from typing import IO, Iterable, Iterator

from .graph import MAX_VERTICES, Graph, GraphSizeError

HEADER = b">>graph6<<"


class Graph6Error(ValueError):
    pass


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise GraphSizeError(f"graph6 size field cannot hold n={n} at this cap")


def to_graph6(g: Graph, header: bool = False) -> bytes:
    """Encode ``g`` as graph6 bytes (no trailing newline)."""
    n = g.n
    # upper triangle, column by column: x(0,1) x(0,2) x(1,2) x(0,3) ...
    bits = "".join(
        format(g.rows[j] & ((1 << j) - 1), f"0{j}b")[::-1] for j in range(1, n)
    )
    bits += "0" * (-len(bits) % 6)
    body = bytes(int(bits[i : i + 6], 2) + 63 for i in range(0, len(bits), 6))
    return (HEADER if header else b"") + _encode_n(n) + body


def from_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 record; surrounding whitespace is ignored."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(b">>"):
        if not data.startswith(HEADER):
            raise Graph6Error("malformed header")
        data = data[len(HEADER) :]
    if not data:
        raise Graph6Error("empty record")
    for pos, c in enumerate(data):
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c!r} at offset {pos} outside the printable range 63..126")

    if data[0] != 126:
        n, body = data[0] - 63, data[1:]
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated size field")
        n = 0
        for c in data[2:8]:
            n = n << 6 | (c - 63)
        body = data[8:]
    else:
        if len(data) < 4:
            raise Graph6Error("truncated size field")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        body = data[4:]
    if n > MAX_VERTICES:
        raise GraphSizeError(f"{n} vertices exceeds the cap of {MAX_VERTICES}")

    nbits = n * (n - 1) // 2
    expected = -(-nbits // 6)
    if len(body) != expected:
        raise Graph6Error(f"length mismatch: n={n} needs {expected} data bytes, got {len(body)}")

    bits = "".join(format(c - 63, "06b") for c in body)
    if "1" in bits[nbits:]:
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        col = int(bits[k : k + j][::-1], 2)
        k += j
        rows[j] = col
        v = 1 << j
        while col:
            low = col & -col
            rows[low.bit_length() - 1] |= v
            col ^= low
    return Graph(n, tuple(rows))


def read_graph6_stream(stream: IO[bytes] | IO[str] | Iterable) -> Iterator[Graph]:
    """Yield graphs from newline-delimited graph6; blank lines are skipped."""
    for line in stream:
        if isinstance(line, str):
            line = line.encode("ascii")
        if line.strip():
            yield from_graph6(line)


def write_graph6_stream(graphs: Iterable[Graph], stream: IO[bytes]) -> None:
    for g in graphs:
        stream.write(to_graph6(g) + b"\n")
