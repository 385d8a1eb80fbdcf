"""graph6 and plain edge-list readers and writers."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import IO, Iterable, Iterator, Optional

from .graph import Graph, build, index_pair

HEADER = ">>graph6<<"


class GraphFormatError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 68719476736:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("order too large for graph6")


def to_graph6(g: Graph) -> str:
    pairs = g.n * (g.n - 1) // 2
    mask = g.edge_mask()
    out = [_encode_n(g.n)]
    for start in range(0, pairs, 6):
        val = 0
        for k in range(start, start + 6):
            val = (val << 1) | (mask >> k & 1 if k < pairs else 0)
        out.append(chr(val + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    if s[0] == ":" or s[0] == ";":
        raise GraphFormatError("sparse6 input is not supported")
    if s[0] == "&":
        raise GraphFormatError("digraph6 input is not supported")
    vals = []
    for ch in s:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise GraphFormatError(f"invalid graph6 character {ch!r}")
        vals.append(v)
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise GraphFormatError("truncated order field")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    else:
        if len(vals) < 8:
            raise GraphFormatError("truncated order field")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    pairs = n * (n - 1) // 2
    need = (pairs + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        raise GraphFormatError(f"expected {need} adjacency characters for n={n}, got {len(body)}")
    edges = []
    k = 0
    for v in body:
        for shift in range(5, -1, -1):
            if k >= pairs:
                if v >> shift & 1:
                    raise GraphFormatError("nonzero padding bits")
            elif v >> shift & 1:
                edges.append(index_pair(k))
            k += 1
    return build(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    records = list(iter_graphs(text.splitlines(), fmt="edgelist"))
    if len(records) != 1:
        raise GraphFormatError(f"expected one graph, found {len(records)}")
    rec = records[0]
    if rec.error:
        raise rec.error
    return rec.graph


@dataclass
class GraphRecord:
    """One parsed input graph, or the error that replaced it."""

    line: int
    graph: Optional[Graph] = None
    error: Optional[GraphFormatError] = None
    text: str = ""


_PAIR = re.compile(r"^\s*(\d+)\s+(\d+)\s*$")


def _significant(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    for no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line


def detect_format(first_line: str) -> str:
    return "edgelist" if _PAIR.match(first_line) else "graph6"


def iter_graphs(lines: Iterable[str], fmt: str = "auto") -> Iterator[GraphRecord]:
    """Stream graphs from graph6 lines or consecutive edge-list blocks.

    Malformed entries come back as records carrying a :class:`GraphFormatError`
    with the offending line number, so callers can report and carry on.
    """
    items = _significant(lines)
    if fmt == "auto":
        first = next(items, None)
        if first is None:
            return
        fmt = detect_format(first[1])
        items = _chain_first(first, items)
    if fmt == "graph6":
        for no, line in items:
            try:
                yield GraphRecord(no, from_graph6(line), text=line)
            except ValueError as exc:
                yield GraphRecord(no, error=GraphFormatError(str(exc), no), text=line)
    elif fmt == "edgelist":
        yield from _edge_list_blocks(items)
    else:
        raise ValueError(f"unknown input format {fmt!r}")


def _chain_first(first, rest):
    yield first
    yield from rest


def _edge_list_blocks(items: Iterator[tuple[int, str]]) -> Iterator[GraphRecord]:
    for no, line in items:
        head = _PAIR.match(line)
        if not head:
            yield GraphRecord(no, error=GraphFormatError(f"expected 'n m' header, got {line!r}", no), text=line)
            continue
        n, m = int(head.group(1)), int(head.group(2))
        edges = []
        err = None
        for _ in range(m):
            nxt = next(items, None)
            if nxt is None:
                err = GraphFormatError(f"graph declares {m} edges but input ended", no)
                break
            eno, eline = nxt
            pair = _PAIR.match(eline)
            if not pair:
                err = GraphFormatError(f"malformed edge line {eline!r}", eno)
                break
            edges.append((int(pair.group(1)), int(pair.group(2))))
        if err is None:
            try:
                yield GraphRecord(no, build(n, edges), text=line)
                continue
            except ValueError as exc:
                err = GraphFormatError(str(exc), no)
        yield GraphRecord(no, error=err, text=line)


def read_graphs(stream: IO[str], fmt: str = "auto") -> Iterator[GraphRecord]:
    return iter_graphs(stream, fmt)
