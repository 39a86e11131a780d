"""
Certificate Module

Independent verification of TK5 certificates and assembly of a TK5 from a
short facial wheel, a rim linkage with three hub-adjacent ends and a fan
from a vertex outside the extended hammock.
"""

import logging
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from errors import AssemblyError, InvalidInputError
from graphs.core import Graph, Path
from models import Tk5Certificate
from planar.wheels import FacialWheel
from construction.linkage import CuLinkage
from utils.constants import BRANCH_SIZE, TARGET_ALPHA

logger = logging.getLogger(__name__)


# ============================================================================
# Verification
# ============================================================================

def certificate_problems(g: Graph, c: Tk5Certificate) -> List[str]:
    """
    List every violated certificate invariant.

    Nothing is trusted: branch vertices, pair coverage, path ends, edges and
    internal disjointness are all rechecked against g.
    """
    problems: List[str] = []
    branch = list(c.branch)
    branch_set = set(branch)
    if len(branch_set) != BRANCH_SIZE:
        problems.append(f"branch vertices are not {BRANCH_SIZE} distinct vertices: {branch}")
    missing = [b for b in branch_set if b not in g]
    if missing:
        problems.append(f"branch vertices not in graph: {sorted(missing)}")

    expected = {frozenset(p) for p in combinations(sorted(branch_set), 2)}
    seen = set()
    owner: Dict[int, str] = {}
    for entry in c.paths:
        a, b = entry.pair
        label = f"path {a}-{b}"
        key = frozenset((a, b))
        if key not in expected:
            problems.append(f"{label}: pair is not two distinct branch vertices")
            continue
        if key in seen:
            problems.append(f"{label}: pair listed twice")
            continue
        seen.add(key)

        seq = entry.vertices
        if len(set(seq)) != len(seq):
            problems.append(f"{label}: repeats a vertex")
            continue
        if {seq[0], seq[-1]} != {a, b}:
            problems.append(f"{label}: ends are {seq[0]} and {seq[-1]}")
            continue
        for x, y in zip(seq, seq[1:]):
            if not g.has_edge(x, y):
                problems.append(f"{label}: {x}-{y} is not an edge")
        for x in seq[1:-1]:
            if x in branch_set:
                problems.append(f"{label}: passes through branch vertex {x}")
            elif x in owner:
                problems.append(f"{label}: shares vertex {x} with {owner[x]}")
            else:
                owner[x] = label

    for key in sorted(expected - seen, key=sorted):
        a, b = sorted(key)
        problems.append(f"path {a}-{b}: missing")
    return problems


def verify_certificate(g: Graph, c: Tk5Certificate) -> bool:
    problems = certificate_problems(g, c)
    for p in problems:
        logger.debug(f"Certificate problem: {p}")
    return not problems


# ============================================================================
# Assembly
# ============================================================================

def _first_pair(problems: Sequence[str]) -> Optional[Tuple[int, int]]:
    head = problems[0]
    if head.startswith("path "):
        a, b = head[5:].split(":", 1)[0].split("-")
        return int(a), int(b)
    return None


def _join_paths(paths: Dict[Tuple[int, int], Path], w_wheel: FacialWheel, l: CuLinkage,
                chosen: List[int], fan_by_end: Dict[int, Path], v: int, wvert: int) -> None:
    u = w_wheel.hub
    for a in chosen:
        paths[(u, a)] = Path((u, a))
    for i, a in enumerate(chosen):
        b = chosen[(i + 1) % len(chosen)]
        paths[(a, b)] = Path(w_wheel.rim_arc(a, b))
    for a in chosen:
        link = l.path_to(a)
        fan_path = fan_by_end.get(link.start)
        if fan_path is None:
            raise AssemblyError(f"no fan path reaches linkage start {link.start}", pair=(wvert, a))
        paths[(wvert, a)] = fan_path.concat(link)
    paths[(u, wvert)] = Path((u, v)).concat(fan_by_end[v].reversed())


def assemble_tk5(g: Graph, w_wheel: FacialWheel, l: CuLinkage, f: Sequence[Path],
                 uv: Tuple[int, int], v: int, wvert: int) -> Tk5Certificate:
    """
    Assemble a TK5 with branch set {u, w, a1, a2, a3}.

    a1, a2, a3 are the first three linkage ends adjacent to the hub in rim
    order. They are joined to u by spokes, to each other by the three rim
    arcs between them and to w by a fan path followed by a linkage path.
    u reaches w through the edge uv and the fan path to v.

    Args:
        g: The input graph.
        w_wheel: Short facial wheel with hub u.
        l: Rim linkage with alpha at least 3.
        f: Five fan paths from wvert to {v} + bnd H.
        uv: The edge from the hub to the apex.
        v: The apex.
        wvert: The fan centre outside the extended hammock.

    Raises:
        AssemblyError: On mismatched inputs or a certificate that fails
            verification.
    """
    u = w_wheel.hub
    if set(uv) != {u, v} or not g.has_edge(u, v):
        raise AssemblyError(f"{uv} is not the edge between hub {u} and apex {v}")
    chosen = [a for a in l.ends if a in w_wheel.neighbors][:TARGET_ALPHA]
    if len(chosen) < TARGET_ALPHA:
        raise AssemblyError(f"linkage has alpha {l.alpha}; {TARGET_ALPHA} hub-adjacent ends are needed")
    fan_by_end = {p.end: p for p in f}
    if any(p.start != wvert for p in f):
        raise AssemblyError(f"fan paths must start at {wvert}")
    if v not in fan_by_end:
        raise AssemblyError(f"no fan path reaches the apex {v}")

    paths: Dict[Tuple[int, int], Path] = {}
    try:
        _join_paths(paths, w_wheel, l, chosen, fan_by_end, v, wvert)
    except InvalidInputError as err:
        raise AssemblyError(f"paths do not join: {err}") from err

    certificate = Tk5Certificate.from_paths([u, wvert, *chosen], paths)
    problems = certificate_problems(g, certificate)
    if problems:
        raise AssemblyError(f"assembled certificate is invalid: {problems[0]}", pair=_first_pair(problems))
    logger.info(f"Assembled TK5 on branch set {certificate.branch}")
    return certificate
