"""
Graph File I/O Module

Reads and writes graphs in graph6 and adjacency-list text formats.

Adjacency-list files hold one "v: w1 w2 ..." line per vertex; vertices are
0..n-1, blank lines and text after '#' are ignored and edges listed in one
direction only are closed symmetrically.
"""

import logging
import os
from typing import Dict, Optional, Set

import networkx as nx

from errors import GraphFormatError
from graphs.core import Graph
from utils.constants import FORMAT_ADJACENCY, FORMAT_GRAPH6

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"


# ============================================================================
# graph6
# ============================================================================

def parse_graph6(text: str) -> Graph:
    """
    Parse one graph6 string, header optional.

    Raises:
        GraphFormatError: On characters outside 63..126 (with byte position)
            or on a length mismatch.
    """
    data = text.strip()
    offset = 0
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
        offset = len(GRAPH6_HEADER)
    if not data:
        raise GraphFormatError("empty graph6 string", position=offset)
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"invalid graph6 character {ch!r}", position=offset + i)
    try:
        g = nx.from_graph6_bytes(data.encode("ascii"))
    except (ValueError, nx.NetworkXError) as e:
        raise GraphFormatError(f"malformed graph6 data: {e}", position=offset) from e
    return Graph.from_networkx(g)


def to_graph6(g: Graph, header: bool = False) -> str:
    """Serialize g (relabelled to 0..n-1 in sorted order) as graph6."""
    relabeled, _ = g.relabeled()
    encoded = nx.to_graph6_bytes(relabeled.to_networkx(), header=header)
    return encoded.decode("ascii").strip()


# ============================================================================
# Adjacency list
# ============================================================================

def parse_adjacency(text: str) -> Graph:
    """
    Parse an adjacency-list document.

    Raises:
        GraphFormatError: With the offending line number on malformed lines,
            self-loops or vertex labels outside 0..n-1.
    """
    adj: Dict[int, Set[int]] = {}
    lines: Dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise GraphFormatError("expected 'v: w1 w2 ...'", line=lineno)
        head, tail = line.split(":", 1)
        try:
            v = int(head)
            nbrs = [int(tok) for tok in tail.split()]
        except ValueError as e:
            raise GraphFormatError(f"non-integer vertex label ({e})", line=lineno) from e
        if v < 0 or any(w < 0 for w in nbrs):
            raise GraphFormatError("vertex labels must be nonnegative", line=lineno)
        if v in nbrs:
            raise GraphFormatError(f"self-loop at vertex {v}", line=lineno)
        adj.setdefault(v, set()).update(nbrs)
        lines.setdefault(v, lineno)
        for w in nbrs:
            adj.setdefault(w, set()).add(v)
            lines.setdefault(w, lineno)

    n = len(adj)
    for v in sorted(adj):
        if v >= n:
            raise GraphFormatError(f"vertex {v} outside 0..{n - 1}", line=lines[v])
    return Graph(adj)


def to_adjacency(g: Graph) -> str:
    return "\n".join(f"{v}: " + " ".join(str(w) for w in g.neighbors(v)) for v in g.vertices) + "\n"


# ============================================================================
# Files
# ============================================================================

def detect_format(path: str, text: str) -> str:
    """Pick the format from the suffix, else sniff for ':' separators."""
    suffix = os.path.splitext(path)[1].lower()
    if suffix in (".g6", ".graph6"):
        return FORMAT_GRAPH6
    if suffix in (".adj", ".txt"):
        return FORMAT_ADJACENCY
    return FORMAT_ADJACENCY if ":" in text.replace(GRAPH6_HEADER, "") else FORMAT_GRAPH6


def parse_graph(text: str, fmt: str) -> Graph:
    if fmt == FORMAT_GRAPH6:
        first = next((ln for ln in text.splitlines() if ln.strip()), "")
        return parse_graph6(first)
    return parse_adjacency(text)


def read_graph(path: str, fmt: Optional[str] = None) -> Graph:
    """
    Read a graph file.

    Raises:
        OSError: If the file cannot be read.
        GraphFormatError: If the contents cannot be parsed.
    """
    with open(path, "r", encoding="latin-1") as fh:
        text = fh.read()
    fmt = fmt or detect_format(path, text)
    g = parse_graph(text, fmt)
    logger.debug(f"Read {path} as {fmt}: {g}")
    return g
