"""
Rim Linkage Module

A rim linkage of a hammock H and a facial wheel S_u inside it is a set of
four disjoint paths in H from bnd H to the rim C_u, avoiding u, each meeting
the rim only in its end. Alpha counts the ends lying in N(u).

Existence questions are answered by complete search: every candidate
end-set is tested with a prescribed-end flow.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from errors import InvalidInputError
from graphs.connectivity import disjoint_paths
from graphs.core import Path
from graphs.subgraphs import find_k4_minus
from planar.wheels import FacialWheel
from construction.hammocks import Hammock
from utils.constants import HAMMOCK_BOUNDARY_SIZE, LINKAGE_SIZE

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CuLinkage:
    """
    Four disjoint boundary-to-rim paths.

    Attributes:
        paths: Paths from bnd H to the rim, ordered like `ends`.
        ends: Rim ends in rim order (starting from the first rim vertex).
        alpha: Number of ends adjacent to the hub.
    """

    paths: Tuple[Path, ...]
    ends: Tuple[int, ...]
    alpha: int

    @property
    def starts(self) -> Tuple[int, ...]:
        return tuple(p.start for p in self.paths)

    def path_to(self, a: int) -> Path:
        for p in self.paths:
            if p.end == a:
                return p
        raise InvalidInputError(f"no linkage path ends at {a}")


def _rim_order(w: FacialWheel, vertices: Iterable[int]) -> Tuple[int, ...]:
    return tuple(sorted(vertices, key=w.rim_position))


def alpha(l: CuLinkage, w: FacialWheel) -> int:
    return len(set(l.ends) & w.neighbors)


def find_linkage_with_prescribed_ends(h: Hammock, w: FacialWheel,
                                      ends: Iterable[int]) -> Optional[CuLinkage]:
    """
    Find a rim linkage whose end-set is exactly `ends`.

    Raises:
        InvalidInputError: If ends are not four rim vertices or the
            hammock boundary does not have four vertices.
    """
    end_set = set(ends)
    rim = set(w.rim)
    if len(end_set) != LINKAGE_SIZE or not end_set <= rim:
        raise InvalidInputError(f"ends must be {LINKAGE_SIZE} distinct rim vertices, got {sorted(end_set)}")
    if h.k != HAMMOCK_BOUNDARY_SIZE:
        raise InvalidInputError(f"hammock boundary has {h.k} vertices, expected {HAMMOCK_BOUNDARY_SIZE}")
    forbidden = {w.hub} | (rim - end_set)
    paths = disjoint_paths(h.graph, h.boundary, end_set, LINKAGE_SIZE, forbidden)
    if paths is None:
        return None
    ordered = _rim_order(w, end_set)
    by_end = {p.end: p for p in paths}
    linkage_paths = tuple(by_end[a] for a in ordered)
    return CuLinkage(linkage_paths, ordered, len(end_set & w.neighbors))


def _candidate_end_sets(w: FacialWheel, min_alpha: int) -> List[Tuple[int, ...]]:
    """4-subsets of the rim with at least min_alpha hub neighbours, most first."""
    scored = []
    for subset in combinations(sorted(w.rim), LINKAGE_SIZE):
        count = len(set(subset) & w.neighbors)
        if count >= min_alpha:
            scored.append((-count, subset))
    scored.sort()
    return [subset for _, subset in scored]


def find_cu_linkage(h: Hammock, w: FacialWheel, min_alpha: int = 0) -> Optional[CuLinkage]:
    """
    Find a rim linkage with alpha at least `min_alpha`.

    Candidate end-sets are tried with the most hub neighbours first, so the
    answer maximizes alpha among all rim linkages.

    Raises:
        InvalidInputError: If min_alpha lies outside 0..4.
    """
    if not 0 <= min_alpha <= LINKAGE_SIZE:
        raise InvalidInputError(f"min_alpha must lie in 0..{LINKAGE_SIZE}, got {min_alpha}")
    if len(w.rim) < LINKAGE_SIZE:
        return None
    if disjoint_paths(h.graph, h.boundary, w.rim, LINKAGE_SIZE, {w.hub}) is None:
        logger.debug(f"No rim linkage at all for hub {w.hub}")
        return None
    for ends in _candidate_end_sets(w, min_alpha):
        linkage = find_linkage_with_prescribed_ends(h, w, ends)
        if linkage is not None:
            logger.debug(f"Rim linkage for hub {w.hub}: ends {linkage.ends}, alpha {linkage.alpha}")
            return linkage
    return None


def max_alpha(h: Hammock, w: FacialWheel) -> Optional[int]:
    """Largest alpha of a rim linkage, or None if none exists."""
    best = find_cu_linkage(h, w, 0)
    return None if best is None else best.alpha


def realizable_end_sets(h: Hammock, w: FacialWheel) -> List[Tuple[int, ...]]:
    """Every end-set (in rim order) for which a rim linkage exists."""
    found = []
    for ends in combinations(sorted(w.rim), LINKAGE_SIZE):
        if find_linkage_with_prescribed_ends(h, w, ends) is not None:
            found.append(_rim_order(w, ends))
    return found


# ============================================================================
# Properties
# ============================================================================

def check_slippery(h: Hammock, w: FacialWheel, l: CuLinkage) -> bool:
    """
    True if every rim vertex strictly between consecutive ends a, b can
    replace a or b as an end.
    """
    ends = l.ends
    for i, a in enumerate(ends):
        b = ends[(i + 1) % len(ends)]
        for x in w.rim_interior(a, b):
            rest = set(ends)
            if find_linkage_with_prescribed_ends(h, w, (rest - {a}) | {x}) is not None:
                continue
            if find_linkage_with_prescribed_ends(h, w, (rest - {b}) | {x}) is not None:
                continue
            logger.debug(f"Linkage {ends} cannot slide to {x} between {a} and {b}")
            return False
    return True


def _hub_ends_consecutive(ends: Sequence[int], nbrs) -> bool:
    idx = [i for i, a in enumerate(ends) if a in nbrs]
    return (idx[1] - idx[0]) % len(ends) in (1, len(ends) - 1)


def check_consecutive_property(h: Hammock, w: FacialWheel) -> bool:
    """
    When the best alpha is exactly 2, every alpha-2 linkage meets N(u) at
    consecutive ends; vacuously true otherwise.
    """
    end_sets = realizable_end_sets(h, w)
    best = max((len(set(e) & w.neighbors) for e in end_sets), default=None)
    if best != 2:
        return True
    for ends in end_sets:
        if len(set(ends) & w.neighbors) == 2 and not _hub_ends_consecutive(ends, w.neighbors):
            logger.debug(f"Alpha-2 end-set {ends} meets N({w.hub}) at non-consecutive ends")
            return False
    return True


def check_increase_property(h: Hammock, w: FacialWheel) -> bool:
    """
    Check the alpha-increase property exhaustively.

    For every realizable end-set with alpha k > 0 and every labelling
    a1..a4 along the rim (either orientation) with a1, a3 outside N(u),
    a2 in N(u) and at least two hub neighbours on the arc from a1 to a2,
    some linkage must reach alpha k + 1, unless the host contains K4-minus.
    """
    if find_k4_minus(h.host) is not None:
        return True
    end_sets = realizable_end_sets(h, w)
    best = max((len(set(e) & w.neighbors) for e in end_sets), default=0)
    nbrs = w.neighbors
    for ends in end_sets:
        k = len(set(ends) & nbrs)
        if k == 0 or best >= k + 1:
            continue
        for orientation in (ends, tuple(reversed(ends))):
            for r in range(LINKAGE_SIZE):
                a1, a2, a3, _ = (orientation[(r + j) % LINKAGE_SIZE] for j in range(LINKAGE_SIZE))
                if a1 in nbrs or a3 in nbrs or a2 not in nbrs:
                    continue
                arc = w.rim_arc(a1, a2) if orientation is ends else w.rim_arc(a2, a1)
                if len(set(arc) & nbrs) >= 2:
                    logger.debug(f"End-set {ends} meets the increase hypotheses but alpha stays {k}")
                    return False
    return True
