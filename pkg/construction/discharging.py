"""
Discharging Module

Exact charging scheme on a plane hammock H with outer face X_H:

    vertex v          6 - d_H(v)
    face f != X_H     6 - 2|f|
    outer face X_H    -17/3 - 2|X_H|

which sums to 1/3 by Euler's formula. Vertices then send charge to faces
by the rules in `Rule`; faces never send and vertices never receive.

Also provides the short-wheel scan for minimal fat hammocks.
"""

import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import total_ordering
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple

from errors import (
    InternalConsistencyError,
    InvalidInputError,
    PreconditionError,
    RuleGapError,
)
from graphs.connectivity import is_k_connected
from graphs.subgraphs import find_k4_minus
from planar.embedding import PlaneEmbedding, faces_of_subgraph
from planar.wheels import FacialWheel, facial_wheel, is_imbalanced, is_proper, is_short
from construction.hammocks import (
    Hammock,
    HammockKind,
    check_p3_k3_conditions,
    is_minimal,
)
from utils.constants import HOST_CONNECTIVITY

logger = logging.getLogger(__name__)


# ============================================================================
# Exact charges
# ============================================================================

@total_ordering
class Charge:
    """A charge stored as an integer number of thirds."""

    __slots__ = ("thirds",)

    def __init__(self, thirds: int = 0):
        if not isinstance(thirds, int):
            raise TypeError(f"charge must be an integer number of thirds, got {thirds!r}")
        self.thirds = thirds

    @classmethod
    def from_fraction(cls, value: Fraction) -> "Charge":
        value = Fraction(value)
        if (value * 3).denominator != 1:
            raise InvalidInputError(f"{value} is not a multiple of 1/3")
        return cls(int(value * 3))

    def as_fraction(self) -> Fraction:
        return Fraction(self.thirds, 3)

    def __add__(self, other: "Charge") -> "Charge":
        return Charge(self.thirds + other.thirds)

    def __sub__(self, other: "Charge") -> "Charge":
        return Charge(self.thirds - other.thirds)

    def __neg__(self) -> "Charge":
        return Charge(-self.thirds)

    def __mul__(self, k: int) -> "Charge":
        return Charge(self.thirds * k)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Charge):
            return self.thirds == other.thirds
        if isinstance(other, (int, Fraction)):
            return self.as_fraction() == other
        return NotImplemented

    def __lt__(self, other: "Charge") -> bool:
        if isinstance(other, Charge):
            return self.thirds < other.thirds
        return self.as_fraction() < other

    def __hash__(self) -> int:
        return hash(self.as_fraction())

    def __str__(self) -> str:
        return str(self.as_fraction())

    def __repr__(self) -> str:
        return f"Charge({self})"


ZERO = Charge(0)


def sum_charges(values) -> Charge:
    return Charge(sum(c.thirds for c in values))


# ============================================================================
# Ledger
# ============================================================================

class ElementKey(NamedTuple):
    kind: str  # "vertex" or "face"
    index: int

    def __str__(self) -> str:
        return f"{self.kind} {self.index}"


def vertex_key(v: int) -> ElementKey:
    return ElementKey("vertex", v)


def face_key(i: int) -> ElementKey:
    return ElementKey("face", i)


class Rule:
    """Rule identifiers cited by transfers."""

    OUTER_DEGREE_2 = "outer-degree-2"
    OUTER_DEGREE_3 = "outer-degree-3"
    OUTER_DEGREE_4 = "outer-degree-4"
    HIGH_DEGREE = "high-degree"
    INNER_FOUR_FACE = "inner-4-face"
    INNER_FIVE_FACE = "inner-5-face"
    INNER_SPECIAL_FIVE_FACE = "inner-5-face-3435"
    INNER_LARGE_FACE = "inner-large-face"

    ALL = (OUTER_DEGREE_2, OUTER_DEGREE_3, OUTER_DEGREE_4, HIGH_DEGREE,
           INNER_FOUR_FACE, INNER_FIVE_FACE, INNER_SPECIAL_FIVE_FACE, INNER_LARGE_FACE)


@dataclass(frozen=True)
class Transfer:
    rule: str
    sender: int
    receiver: int
    amount: Charge

    def __str__(self) -> str:
        return f"{self.rule} {self.sender} {self.receiver} {self.amount}"


@dataclass(frozen=True)
class ChargeLedger:
    """
    Charges of every vertex and face of a plane hammock.

    Attributes:
        initial: Charges before discharging.
        outer: Index of X_H in the embedding's face list.
        final: Charges after discharging, once applied.
        transfers: Transfer log in application order.
        gaps: Vertices no rule covered (non-strict runs only).
    """

    initial: Dict[ElementKey, Charge]
    outer: int
    final: Optional[Dict[ElementKey, Charge]] = None
    transfers: Tuple[Transfer, ...] = ()
    gaps: Tuple[int, ...] = ()

    @property
    def discharged(self) -> bool:
        return self.final is not None

    def initial_total(self) -> Charge:
        return sum_charges(self.initial.values())

    def final_total(self) -> Charge:
        if self.final is None:
            raise InvalidInputError("ledger has not been discharged")
        return sum_charges(self.final.values())

    def dump(self) -> str:
        lines = []
        for key in self.initial:
            after = self.final[key] if self.final is not None else self.initial[key]
            tag = " outer" if key == face_key(self.outer) else ""
            lines.append(f"{key.kind} {key.index} {self.initial[key]} {after}{tag}")
        for t in self.transfers:
            lines.append(str(t))
        lines.append(f"total {total_charge(self)}")
        return "\n".join(lines)


def initial_charges(e: PlaneEmbedding, h: Hammock) -> ChargeLedger:
    """
    Assign the initial charges.

    Args:
        e: Embedding of H itself with X_H designated as outer face.
        h: The hammock.

    Raises:
        InvalidInputError: If no outer face is designated or e does not
            embed exactly H.
    """
    if e.outer is None:
        raise InvalidInputError("the outer face X_H must be designated")
    if set(e.graph.vertices) != set(h.vertices):
        raise InvalidInputError("embedding does not match the hammock's vertex set")
    charges: Dict[ElementKey, Charge] = {}
    for v in e.graph.vertices:
        charges[vertex_key(v)] = Charge(3 * (6 - e.graph.degree(v)))
    for i, face in enumerate(e.faces):
        if i == e.outer:
            charges[face_key(i)] = Charge(-17 - 6 * face.length)
        else:
            charges[face_key(i)] = Charge(18 - 6 * face.length)
    return ChargeLedger(initial=charges, outer=e.outer)


def total_charge(l: ChargeLedger) -> Charge:
    """Sum of the final charges, or the initial ones before discharging."""
    return l.final_total() if l.discharged else l.initial_total()


def normalized_pattern(pattern: Tuple[int, ...]) -> Tuple[int, ...]:
    """Smallest rotation or reflection of a cyclic face-length pattern."""
    if not pattern:
        return pattern
    variants = []
    for seq in (pattern, tuple(reversed(pattern))):
        for i in range(len(seq)):
            variants.append(seq[i:] + seq[:i])
    return min(variants)


_SPECIAL_PATTERN = normalized_pattern((3, 4, 3, 5))


def apply_discharging(l: ChargeLedger, e: PlaneEmbedding, h: Hammock,
                      strict: bool = True) -> ChargeLedger:
    """
    Apply every discharging rule once per (vertex, incident face) pair.

    Args:
        l: Ledger from initial_charges.
        e: The embedding used for l.
        h: The hammock.
        strict: Raise on a vertex no rule covers instead of recording it.

    Returns:
        New ledger with final charges and the transfer log.

    Raises:
        RuleGapError: In strict mode, for a vertex covered by no rule.
    """
    if l.discharged:
        raise InvalidInputError("ledger has already been discharged")
    outer = l.outer
    final = dict(l.initial)
    transfers: List[Transfer] = []
    gaps: List[int] = []

    def send(rule: str, v: int, f: int, thirds: int) -> None:
        amount = Charge(thirds)
        transfers.append(Transfer(rule, v, f, amount))
        final[vertex_key(v)] -= amount
        final[face_key(f)] += amount

    def length(f: int) -> int:
        return e.faces[f].length

    for v in e.graph.vertices:
        d = h.degree(v)
        incident = list(dict.fromkeys(e.faces_around(v)))
        on_outer = outer in incident
        others = [f for f in incident if f != outer]

        if d >= 5:
            for f in incident:
                if length(f) >= 4:
                    send(Rule.HIGH_DEGREE, v, f, 1)
        elif on_outer and d == 2 and len(others) == 1:
            g = others[0]
            if length(g) == 3:
                send(Rule.OUTER_DEGREE_2, v, outer, 12)
            else:
                send(Rule.OUTER_DEGREE_2, v, outer, 11)
                send(Rule.OUTER_DEGREE_2, v, g, 1)
        elif on_outer and d in (3, 4):
            rule = Rule.OUTER_DEGREE_3 if d == 3 else Rule.OUTER_DEGREE_4
            send(rule, v, outer, 8 if d == 3 else 5)
            for f in others:
                if length(f) >= 4:
                    send(rule, v, f, 1)
        elif not on_outer and d == 4:
            special = normalized_pattern(e.face_pattern(v)) == _SPECIAL_PATTERN
            for f in incident:
                if length(f) == 4:
                    send(Rule.INNER_FOUR_FACE, v, f, 2)
                elif length(f) == 5 and special:
                    send(Rule.INNER_SPECIAL_FIVE_FACE, v, f, 4)
                elif length(f) == 5:
                    send(Rule.INNER_FIVE_FACE, v, f, 3)
                elif length(f) >= 6:
                    send(Rule.INNER_LARGE_FACE, v, f, 4)
        else:
            where = "outer" if on_outer else "inner"
            if strict:
                raise RuleGapError(f"{where} vertex {v} of degree {d} is covered by no rule")
            logger.warning(f"No discharging rule for {where} vertex {v} of degree {d}")
            gaps.append(v)

    result = replace(l, final=final, transfers=tuple(transfers), gaps=tuple(gaps))
    if result.final_total() != l.initial_total():
        raise InternalConsistencyError("discharging did not conserve the total charge")
    return result


# ============================================================================
# Reports
# ============================================================================

@dataclass(frozen=True)
class NonpositivityReport:
    positive: Tuple[Tuple[ElementKey, Charge], ...]
    checked: int

    @property
    def all_nonpositive(self) -> bool:
        return not self.positive

    def __str__(self) -> str:
        if self.all_nonpositive:
            return f"all {self.checked} elements nonpositive"
        items = ", ".join(f"{key}={charge}" for key, charge in self.positive)
        return f"{len(self.positive)} of {self.checked} elements positive: {items}"


def verify_nonpositive(l: ChargeLedger, h: Optional[Hammock] = None) -> NonpositivityReport:
    """List every element whose final charge is positive."""
    if not l.discharged:
        raise InvalidInputError("ledger has not been discharged")
    positive = tuple((key, c) for key, c in l.final.items() if c.thirds > 0)
    return NonpositivityReport(positive, len(l.final))


@dataclass(frozen=True)
class OuterFaceAccount:
    """
    Final charge of X_H recomputed from counts of its vertices.

    Counts are of distinct outer vertices: 2-valent next to a 3-face,
    other 2-valent, 3-valent, 4-valent and at least 5-valent.
    """

    length: int
    degree2_triangle: int
    degree2_other: int
    degree3: int
    degree4: int
    high_degree: int
    predicted: Charge
    actual: Charge

    @property
    def matches(self) -> bool:
        return self.predicted == self.actual


def outer_face_account(l: ChargeLedger, e: PlaneEmbedding) -> OuterFaceAccount:
    if not l.discharged:
        raise InvalidInputError("ledger has not been discharged")
    outer_face = e.faces[l.outer]
    counts = {"t2": 0, "o2": 0, "3": 0, "4": 0, "5": 0}
    for v in sorted(outer_face.vertices):
        d = e.graph.degree(v)
        if d == 2:
            others = [f for f in dict.fromkeys(e.faces_around(v)) if f != l.outer]
            if others and e.faces[others[0]].length == 3:
                counts["t2"] += 1
            else:
                counts["o2"] += 1
        elif d in (3, 4):
            counts[str(d)] += 1
        elif d >= 5:
            counts["5"] += 1
    high_share = 1 if outer_face.length >= 4 else 0
    predicted = Charge(-17 - 6 * outer_face.length + 12 * counts["t2"] + 11 * counts["o2"]
                       + 8 * counts["3"] + 5 * counts["4"] + high_share * counts["5"])
    return OuterFaceAccount(outer_face.length, counts["t2"], counts["o2"], counts["3"],
                            counts["4"], counts["5"], predicted, l.final[face_key(l.outer)])


# ============================================================================
# Short proper wheels
# ============================================================================

def short_wheel_hypotheses(e: PlaneEmbedding, h: Hammock) -> List[str]:
    """Names of the hypotheses of the short-wheel search that h fails."""
    failed = []
    if h.kind is not HammockKind.FAT:
        failed.append("fat hammock")
        return failed
    if not check_p3_k3_conditions(h):
        failed.append("good vertices on every P3 and two on every triangle")
    if find_k4_minus(h.host) is not None:
        failed.append("K4-minus-free host")
    if not is_k_connected(h.host, HOST_CONNECTIVITY):
        failed.append("4-connected host")
    if not failed and not is_minimal(h):
        failed.append("minimal fat hammock")
    return failed


def iter_wheels(e: PlaneEmbedding, h: Hammock, short_proper_only: bool = True) -> Iterator[FacialWheel]:
    """
    Facial wheels with hubs in H off X_H whose rims lie in H.

    Args:
        e: Embedding of the host plane graph (or of H itself).
        h: The hammock.
        short_proper_only: Yield only short wheels that are proper when
            imbalanced.

    Yields:
        Wheels in increasing hub order.
    """
    restricted = faces_of_subgraph(e, h.vertices)
    on_outer = restricted.outer_face.vertices if restricted.outer is not None else frozenset()
    for u in sorted(h.vertices - h.boundary - on_outer):
        if short_proper_only and e.graph.degree(u) != 4:
            continue
        try:
            wheel = facial_wheel(e.with_outer_avoiding({u}), u)
        except (PreconditionError, InternalConsistencyError) as err:
            logger.debug(f"No facial wheel at {u}: {err}")
            continue
        if not wheel.vertices <= h.vertices:
            continue
        if short_proper_only:
            if not is_short(wheel, h):
                continue
            if is_imbalanced(wheel, h) and not is_proper(wheel, h):
                continue
        yield wheel


def find_short_proper_wheel(e: PlaneEmbedding, h: Hammock,
                            check_hypotheses: bool = True) -> Optional[FacialWheel]:
    """
    Find a short facial wheel in H, proper if imbalanced, with hub off X_H.

    Raises:
        PreconditionError: Listing the failed hypotheses when checked.
    """
    if check_hypotheses:
        failed = short_wheel_hypotheses(e, h)
        if failed:
            raise PreconditionError(f"short-wheel hypotheses fail: {', '.join(failed)}",
                                    hypothesis=failed[0])
    wheel = next(iter_wheels(e, h, short_proper_only=True), None)
    if wheel is None:
        logger.info("No short proper wheel found in hammock")
    return wheel
