"""
Hammock Module

4-hammocks of a 4-connected graph: connected subgraphs H whose boundary
(vertices with a neighbour outside H) has four vertices. A hammock is
trivial when it is all boundary, degenerate with one interior vertex and
fat with two or more. Hammocks are induced on their vertex set.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Set, Tuple

import networkx as nx

from errors import InvalidInputError, NoHammockError, PreconditionError
from graphs.connectivity import is_k_connected
from graphs.core import Graph, components
from utils.constants import HAMMOCK_BOUNDARY_SIZE, HOST_CONNECTIVITY

logger = logging.getLogger(__name__)


class HammockKind(str, Enum):
    TRIVIAL = "trivial"
    DEGENERATE = "degenerate"
    FAT = "fat"


@dataclass(frozen=True)
class Hammock:
    """
    A connected vertex set of a host graph together with its boundary.

    Attributes:
        host: The graph containing the hammock.
        vertices: V(H); H is the subgraph induced on it.
        explicit_boundary: Boundary to use instead of the computed one, for
            plane graphs analysed as stand-alone hammocks. Must contain the
            computed boundary.
    """

    host: Graph
    vertices: FrozenSet[int]
    explicit_boundary: Optional[FrozenSet[int]] = None

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        if not self.vertices:
            raise InvalidInputError("a hammock needs at least one vertex")
        missing = [v for v in self.vertices if v not in self.host]
        if missing:
            raise InvalidInputError(f"hammock vertices not in host: {sorted(missing)}")
        if not nx.is_connected(self.graph.to_networkx()):
            raise InvalidInputError("hammock must induce a connected subgraph")
        if self.explicit_boundary is not None:
            object.__setattr__(self, "explicit_boundary", frozenset(self.explicit_boundary))
            if not self.explicit_boundary <= self.vertices:
                raise InvalidInputError("boundary must lie inside the hammock")
            if not self._computed_boundary() <= self.explicit_boundary:
                raise InvalidInputError("boundary omits vertices with neighbours outside the hammock")

    def _computed_boundary(self) -> FrozenSet[int]:
        return frozenset(v for v in self.vertices
                         if any(w not in self.vertices for w in self.host.neighbors(v)))

    @cached_property
    def graph(self) -> Graph:
        return self.host.subgraph(self.vertices)

    @cached_property
    def boundary(self) -> FrozenSet[int]:
        if self.explicit_boundary is not None:
            return self.explicit_boundary
        return self._computed_boundary()

    @cached_property
    def interior(self) -> FrozenSet[int]:
        return self.vertices - self.boundary

    @property
    def k(self) -> int:
        return len(self.boundary)

    @cached_property
    def kind(self) -> HammockKind:
        if not self.interior:
            return HammockKind.TRIVIAL
        if len(self.interior) == 1:
            return HammockKind.DEGENERATE
        return HammockKind.FAT

    def degree(self, v: int) -> int:
        """Degree of v inside H."""
        return self.graph.degree(v)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.graph.neighbors(v)

    def __repr__(self) -> str:
        return (f"Hammock(|V|={len(self.vertices)}, boundary={sorted(self.boundary)}, "
                f"kind={self.kind.value})")


def hammocks_from_cut(g: Graph, cut: Iterable[int], check_connectivity: bool = True) -> List[Hammock]:
    """
    Split g along a 4-vertex cut into one hammock per component.

    Args:
        g: 4-connected host graph.
        cut: Four vertices whose removal disconnects g.
        check_connectivity: Verify 4-connectivity of g first; callers that
            already know it may skip the check.

    Returns:
        Hammocks C + cut for each component C of g - cut, ordered by the
        smallest vertex of C.

    Raises:
        InvalidInputError: If cut does not consist of four vertices of g.
        PreconditionError: If g is not 4-connected.
        NoHammockError: If g - cut is connected.
    """
    cut = frozenset(cut)
    if len(cut) != HAMMOCK_BOUNDARY_SIZE or not all(v in g for v in cut):
        raise InvalidInputError(f"cut must be {HAMMOCK_BOUNDARY_SIZE} vertices of the graph, got {sorted(cut)}")
    if check_connectivity and not is_k_connected(g, HOST_CONNECTIVITY):
        raise PreconditionError("host graph is not 4-connected", hypothesis="4-connected host")
    sides = components(g, cut)
    if len(sides) < 2:
        raise NoHammockError(f"removing {sorted(cut)} leaves the graph connected")
    return [Hammock(g, side | cut) for side in sides]


# ============================================================================
# Minimality
# ============================================================================

def proper_fat_subhammocks(h: Hammock) -> List[Hammock]:
    """
    Every fat 4-hammock of the host strictly contained in h.

    For each 4-set S of V(H), every union U of components of H - S that
    avoid bnd H - S yields the candidate U + N(U).

    Returns:
        Hammocks ordered by vertex count, then by sorted vertex tuple.
    """
    host, bnd = h.host, h.boundary
    seen: Set[FrozenSet[int]] = set()
    found: List[Hammock] = []
    for subset in combinations(sorted(h.vertices), HAMMOCK_BOUNDARY_SIZE):
        s = frozenset(subset)
        free = [c for c in components(h.graph, s) if not c & (bnd - s)]
        for r in range(1, len(free) + 1):
            for chosen in combinations(free, r):
                inner = frozenset().union(*chosen)
                attach = {w for x in inner for w in host.neighbors(x)} - inner
                if len(attach) != HAMMOCK_BOUNDARY_SIZE:
                    continue
                cand = inner | attach
                if cand in seen or not cand < h.vertices:
                    continue
                seen.add(cand)
                if not nx.is_connected(host.to_networkx().subgraph(cand)):
                    continue
                sub = Hammock(host, cand)
                if sub.k == HAMMOCK_BOUNDARY_SIZE and sub.kind is HammockKind.FAT:
                    found.append(sub)
    found.sort(key=lambda x: (len(x.vertices), tuple(sorted(x.vertices))))
    return found


def is_minimal(h: Hammock) -> bool:
    return h.kind is HammockKind.FAT and not proper_fat_subhammocks(h)


def descent_chain(h: Hammock) -> List[Hammock]:
    """
    The fat 4-hammocks visited while descending from h to a minimal one.

    Each step moves to the smallest proper fat 4-hammock (lowest sorted
    vertex tuple on ties) until none remains.

    Returns:
        Hammocks from h down to the minimal one, strictly decreasing.

    Raises:
        InvalidInputError: If h is not a fat 4-hammock.
    """
    if h.kind is not HammockKind.FAT or h.k != HAMMOCK_BOUNDARY_SIZE:
        raise InvalidInputError(f"minimize_fat needs a fat 4-hammock, got {h}")
    chain = [h]
    while True:
        subs = proper_fat_subhammocks(chain[-1])
        if not subs:
            return chain
        logger.debug(f"Descending from {len(chain[-1].vertices)} to {len(subs[0].vertices)} vertices")
        chain.append(subs[0])


def minimize_fat(h: Hammock) -> Hammock:
    """
    Descend to a minimal fat 4-hammock inside h.

    Raises:
        InvalidInputError: If h is not a fat 4-hammock.
    """
    return descent_chain(h)[-1]


# ============================================================================
# Structural checks
# ============================================================================

def check_kappa2(h: Hammock) -> bool:
    """True if H is 2-connected; hammocks on at most two vertices pass."""
    if len(h.vertices) <= 2:
        return True
    return nx.is_biconnected(h.graph.to_networkx())


def good_vertices(h: Hammock) -> FrozenSet[int]:
    """Vertices of degree at least 5 in H, together with the boundary."""
    return frozenset(v for v in h.vertices if h.degree(v) >= 5 or v in h.boundary)


def p3_k3_violations(h: Hammock) -> List[Tuple[int, int, int]]:
    """
    Paths on three bad vertices and triangles with two or more bad vertices.

    Returns:
        Offending vertex triples, paths as (a, b, c) with b the middle
        vertex and triangles as sorted triples.
    """
    good = good_vertices(h)
    bad = sorted(h.vertices - good)
    bad_set = set(bad)
    violations: List[Tuple[int, int, int]] = []
    for b in bad:
        bad_nbrs = [w for w in h.neighbors(b) if w in bad_set]
        for a, c in combinations(bad_nbrs, 2):
            violations.append((a, b, c))

    triangles = set()
    for a in bad:
        for b in h.neighbors(a):
            if b not in bad_set or b < a:
                continue
            nb = set(h.neighbors(b))
            for c in h.neighbors(a):
                if c in nb:
                    triangles.add(tuple(sorted((a, b, c))))
    violations.extend(sorted(triangles))
    return violations


def check_p3_k3_conditions(h: Hammock) -> bool:
    """True if every P3 of H has a good vertex and every triangle has two."""
    return not p3_k3_violations(h)
