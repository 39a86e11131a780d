"""
Facial Wheel Module

The facial wheel of a vertex u of a 4-connected plane graph: hub u, its
spokes, and the rim formed by the vertices cofacial with u. The rim splits
into one segment per face around u; a segment of a k-face has k - 1
vertices (its order).

A wheel is short when u is 4-valent and lies on two edge-disjoint
triangles whose complementary segments have orders between 2 and 4, not
both 4. A short wheel with an order-4 segment is imbalanced; it is proper
for a hammock H when that segment's interior avoids the boundary of H.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

from errors import InternalConsistencyError, InvalidQueryError, PreconditionError
from planar.embedding import PlaneEmbedding

logger = logging.getLogger(__name__)

Segment = Tuple[int, ...]


@dataclass(frozen=True)
class ShortData:
    """Triangle segments and the two complementary segments of a short wheel."""

    triangle: Segment
    other_triangle: Segment
    segment: Segment
    other_segment: Segment

    @property
    def orders(self) -> Tuple[int, int]:
        return (len(self.segment), len(self.other_segment))

    @property
    def large_segment(self) -> Optional[Segment]:
        """The order-4 segment, if any."""
        for seg in (self.segment, self.other_segment):
            if len(seg) == 4:
                return seg
        return None


@dataclass(frozen=True)
class FacialWheel:
    hub: int
    rim: Tuple[int, ...]
    spokes: Tuple[int, ...]
    segments: Tuple[Segment, ...]
    short_data: Optional[ShortData] = None

    @property
    def degree(self) -> int:
        return len(self.spokes)

    @property
    def neighbors(self) -> FrozenSet[int]:
        return frozenset(self.spokes)

    @property
    def vertices(self) -> FrozenSet[int]:
        return frozenset(self.rim) | {self.hub}

    @property
    def face_lengths(self) -> Tuple[int, ...]:
        return tuple(len(seg) + 1 for seg in self.segments)

    def rim_position(self, a: int) -> int:
        try:
            return self.rim.index(a)
        except ValueError:
            raise InvalidQueryError(f"vertex {a} is not on the rim of hub {self.hub}") from None

    def rim_arc(self, a: int, b: int) -> Tuple[int, ...]:
        """Rim vertices from a to b inclusive, following the rim orientation."""
        i, j = self.rim_position(a), self.rim_position(b)
        if j < i:
            j += len(self.rim)
        return tuple(self.rim[k % len(self.rim)] for k in range(i, j + 1))

    def rim_interior(self, a: int, b: int) -> Tuple[int, ...]:
        return self.rim_arc(a, b)[1:-1]


def facial_wheel(e: PlaneEmbedding, u: int) -> FacialWheel:
    """
    Extract the facial wheel of u.

    Args:
        e: Embedding of a 4-connected plane graph.
        u: Hub, not on the outer face of e.

    Returns:
        FacialWheel with short_data filled in when the wheel is short.

    Raises:
        PreconditionError: If u lies on the outer face.
        InternalConsistencyError: If the rim is not an induced circuit.
    """
    outer = e.outer_face
    if outer is not None and u in outer.vertices:
        raise PreconditionError(f"hub {u} lies on the outer face", hypothesis="hub-off-outer-face")

    spokes = e.rotation[u]
    d = len(spokes)
    segments = []
    for j, x in enumerate(spokes):
        walk = e.face_of(u, x).walk_from(u, x)
        seg = walk[1:]
        if u in seg:
            raise InternalConsistencyError(f"hub {u} repeats on an incident face boundary")
        if seg[-1] != spokes[(j + 1) % d]:
            raise InternalConsistencyError(f"face segments around {u} do not chain")
        segments.append(seg)

    rim = tuple(v for seg in segments for v in seg[:-1])
    if len(set(rim)) != len(rim):
        raise InternalConsistencyError(f"rim of {u} is not a circuit: {list(rim)}")
    position = {v: i for i, v in enumerate(rim)}
    g = e.graph
    for i, a in enumerate(rim):
        for w in g.neighbors(a):
            j = position.get(w)
            if j is not None and (j - i) % len(rim) not in (1, len(rim) - 1):
                raise InternalConsistencyError(f"rim of {u} has chord {a}-{w}")

    wheel = FacialWheel(u, rim, tuple(spokes), tuple(segments), _short_data(tuple(segments)))
    logger.debug(f"Facial wheel of {u}: faces {wheel.face_lengths}, short={wheel.short_data is not None}")
    return wheel


def _short_data(segments: Tuple[Segment, ...]) -> Optional[ShortData]:
    if len(segments) != 4:
        return None
    for i in range(4):
        t, t2 = segments[i], segments[(i + 2) % 4]
        if len(t) != 2 or len(t2) != 2:
            continue
        q, q2 = segments[(i + 1) % 4], segments[(i + 3) % 4]
        if 2 <= len(q) <= 4 and 2 <= len(q2) <= 4 and not (len(q) == 4 and len(q2) == 4):
            return ShortData(t, t2, q, q2)
    return None


def _check_inside(w: FacialWheel, h) -> None:
    if h is not None and not w.vertices <= h.vertices:
        raise InvalidQueryError(f"wheel of hub {w.hub} does not lie inside the hammock")


def is_short(w: FacialWheel, h=None) -> bool:
    _check_inside(w, h)
    return w.short_data is not None


def is_imbalanced(w: FacialWheel, h=None) -> bool:
    _check_inside(w, h)
    return w.short_data is not None and w.short_data.large_segment is not None


def is_proper(w: FacialWheel, h) -> bool:
    """
    True if the interior of the order-4 segment avoids the boundary of h.

    Raises:
        InvalidQueryError: If w is not imbalanced.
    """
    if not is_imbalanced(w, h):
        raise InvalidQueryError(f"wheel of hub {w.hub} is not imbalanced; properness is undefined")
    return not set(w.short_data.large_segment[1:-1]) & h.boundary
