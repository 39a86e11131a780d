"""
Subgraph Search Module

Detection of K4-minus: two triangles sharing an edge.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from graphs.core import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class K4Minus:
    """Edge xy with two common neighbours a and b."""

    x: int
    y: int
    a: int
    b: int

    @property
    def vertices(self) -> Tuple[int, int, int, int]:
        return (self.x, self.y, self.a, self.b)

    def edges(self) -> List[Tuple[int, int]]:
        return [(self.x, self.y), (self.x, self.a), (self.y, self.a),
                (self.x, self.b), (self.y, self.b)]

    def is_subgraph_of(self, g: Graph) -> bool:
        return len(set(self.vertices)) == 4 and all(g.has_edge(u, w) for u, w in self.edges())

    def __str__(self) -> str:
        return "{" + ", ".join(str(v) for v in sorted(self.vertices)) + "}"


def find_k4_minus(g: Graph) -> Optional[K4Minus]:
    """
    Find an edge lying in two triangles.

    Edges are scanned in lexicographic order and the two smallest common
    neighbours are reported, so the answer is deterministic.

    Returns:
        K4Minus or None if every edge lies in at most one triangle.
    """
    for x, y in g.edges():
        ny = set(g.neighbors(y))
        common = [w for w in g.neighbors(x) if w in ny]
        if len(common) >= 2:
            found = K4Minus(x, y, common[0], common[1])
            logger.debug(f"K4-minus found on edge {x}-{y}: {found}")
            return found
    return None
