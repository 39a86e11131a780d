import random
from itertools import combinations

import networkx as nx
import pytest

import graph_fixtures as gf
from errors import AdjacencyError, InvalidInputError
from graphs.connectivity import (
    disjoint_paths,
    fan,
    is_k_connected,
    local_connectivity,
    min_vertex_cut,
    vertex_connectivity,
)
from graphs.core import CutSet, Graph, Path, components
from graphs.subgraphs import K4Minus, find_k4_minus


# ============================================================================
# Graph and Path
# ============================================================================

def test_graph_rejects_asymmetric_adjacency():
    with pytest.raises(InvalidInputError, match="not symmetric"):
        Graph({0: [1], 1: []})


def test_graph_rejects_self_loop():
    with pytest.raises(InvalidInputError, match="self-loop"):
        Graph.from_edges(range(2), [(0, 0)])


def test_graph_basic_queries(cube):
    assert cube.n == 8
    assert cube.m == 12
    assert cube.min_degree() == 3
    assert cube.has_edge(0, 1)
    assert not cube.has_edge(0, 99)
    assert list(cube.neighbors(0)) == sorted(cube.neighbors(0))


def test_remove_keeps_labels(octahedron):
    rest = octahedron.remove({0})
    assert 0 not in rest
    assert rest.vertices == [1, 2, 3, 4, 5]


def test_relabeled_is_dense():
    g = Graph.from_edges([3, 7, 9], [(3, 7), (7, 9)])
    dense, mapping = g.relabeled()
    assert dense.vertices == [0, 1, 2]
    assert mapping == {3: 0, 7: 1, 9: 2}
    assert dense.has_edge(0, 1) and dense.has_edge(1, 2)


def test_path_rejects_repeats():
    with pytest.raises(InvalidInputError, match="repeats"):
        Path((1, 2, 1))


def test_path_concat_and_reverse():
    p = Path((1, 2)).concat(Path((2, 3, 4)))
    assert p.vertices == (1, 2, 3, 4)
    assert p.reversed().vertices == (4, 3, 2, 1)
    assert p.interior == (2, 3)
    with pytest.raises(InvalidInputError):
        Path((1, 2)).concat(Path((3, 4)))


def test_components_after_removal(octahedron):
    comps = components(octahedron, octahedron.neighbors(0))
    assert comps == [frozenset({0}), frozenset({5})]


# ============================================================================
# Connectivity
# ============================================================================

@pytest.mark.parametrize("builder, expected", [
    (gf.k5, 4),
    (gf.cube, 3),
    (gf.octahedron, 4),
    (gf.icosahedron, 5),
    (gf.petersen, 3),
    (gf.nested_triangulation, 4),
])
def test_vertex_connectivity(builder, expected):
    assert vertex_connectivity(builder()) == expected


def test_vertex_connectivity_needs_two_vertices():
    with pytest.raises(InvalidInputError):
        vertex_connectivity(Graph({0: []}))


def test_is_k_connected_needs_more_than_k_vertices():
    assert not is_k_connected(gf.k5(), 5)
    assert is_k_connected(gf.k6(), 5)


def _brute_force_separator(g: Graph, s: int, t: int) -> int:
    others = [v for v in g.vertices if v not in (s, t)]
    for size in range(len(others) + 1):
        for subset in combinations(others, size):
            if CutSet(frozenset(subset)).separates(g, s, t):
                return size
    raise AssertionError("no separator found")


@pytest.mark.parametrize("builder", [gf.cube, gf.petersen, gf.k33, gf.octahedron])
def test_local_connectivity_matches_smallest_separator(builder):
    g = builder()
    for s, t in combinations(g.vertices, 2):
        if g.has_edge(s, t):
            continue
        assert local_connectivity(g, s, t) == _brute_force_separator(g, s, t)


def test_min_vertex_cut_separates(cube):
    cut = min_vertex_cut(cube, 0, 6)
    assert len(cut) == 3
    assert cut.separates(cube, 0, 6)


def test_min_vertex_cut_rejects_adjacent_pair(cube):
    with pytest.raises(AdjacencyError):
        min_vertex_cut(cube, 0, 1)


def test_disjoint_paths_cube_faces(cube):
    xs, ys = {0, 1, 2, 3}, {4, 5, 6, 7}
    paths = disjoint_paths(cube, xs, ys, 4)
    assert len(paths) == 4
    used = [v for p in paths for v in p.vertices]
    assert len(used) == len(set(used))
    for p in paths:
        assert p.start in xs and p.end in ys
        assert p.is_path_in(cube)
        assert not set(p.vertices[1:]) & xs
        assert not set(p.vertices[:-1]) & ys


def test_disjoint_paths_respects_forbidden(cube):
    assert disjoint_paths(cube, {0, 1, 2, 3}, {4, 5, 6, 7}, 4, forbidden={4}) is None
    paths = disjoint_paths(cube, {0, 1, 2, 3}, {4, 5, 6, 7}, 3, forbidden={4})
    assert all(4 not in p.vertices for p in paths)


def test_disjoint_paths_shared_vertex_is_trivial_path(cube):
    paths = disjoint_paths(cube, {0, 1}, {1, 6}, 2)
    assert Path((1,)) in paths


def test_disjoint_paths_rejects_large_k(cube):
    with pytest.raises(InvalidInputError):
        disjoint_paths(cube, {0}, {6, 7}, 2)


def test_fan_from_octahedron_pole(octahedron):
    paths = fan(octahedron, 0, {1, 2, 3, 4}, 4)
    assert sorted(p.vertices for p in paths) == [(0, 1), (0, 2), (0, 3), (0, 4)]


def test_fan_paths_share_only_the_centre(cube):
    paths = fan(cube, 0, {5, 6, 7}, 3)
    assert all(p.start == 0 for p in paths)
    interiors = [v for p in paths for v in p.vertices[1:]]
    assert len(interiors) == len(set(interiors))


def test_fan_centre_in_targets_raises(cube):
    with pytest.raises(InvalidInputError):
        fan(cube, 0, {0, 6, 7}, 2)


# ============================================================================
# K4-minus
# ============================================================================

def test_find_k4_minus_in_k4():
    found = find_k4_minus(gf.k4())
    assert found == K4Minus(0, 1, 2, 3)
    assert found.is_subgraph_of(gf.k4())


@pytest.mark.parametrize("builder", [gf.cube, gf.k33, gf.petersen, gf.cuboctahedron])
def test_k4_minus_free_graphs(builder):
    assert find_k4_minus(builder()) is None


@pytest.mark.parametrize("builder", [gf.octahedron, gf.icosahedron, gf.nested_triangulation])
def test_triangulations_contain_k4_minus(builder):
    g = builder()
    found = find_k4_minus(g)
    assert found is not None and found.is_subgraph_of(g)


def test_k4_minus_agrees_with_networkx_triangles(cuboctahedron):
    view = cuboctahedron.to_networkx()
    for x, y in cuboctahedron.edges():
        assert len(list(nx.common_neighbors(view, x, y))) <= 1


def _naive_has_k4_minus(g: Graph) -> bool:
    for quad in combinations(g.vertices, 4):
        if sum(1 for a, b in combinations(quad, 2) if g.has_edge(a, b)) >= 5:
            return True
    return False


def _random_graphs(sizes, densities, seeds):
    return [Graph.from_networkx(nx.gnp_random_graph(n, p, seed=s))
            for n in sizes for p in densities for s in seeds]


@pytest.mark.parametrize("g", _random_graphs(range(4, 13), (0.2, 0.35, 0.5), range(3)))
def test_find_k4_minus_matches_quadruple_scan(g):
    found = find_k4_minus(g)
    assert (found is not None) == _naive_has_k4_minus(g)
    if found is not None:
        assert found.is_subgraph_of(g)


# ============================================================================
# Menger cross-checks
# ============================================================================

def _smallest_separator(g: Graph, xs, ys, banned=frozenset(), limit=None, keep=frozenset()) -> int:
    """Fewest vertices of g - banned - keep meeting every (xs, ys)-path."""
    pool = [v for v in g.vertices if v not in banned and v not in keep]
    top = len(pool) if limit is None else limit
    for size in range(top + 1):
        for subset in combinations(pool, size):
            removed = set(subset) | set(banned)
            comps = components(g, removed)
            if not any(c & (set(xs) - removed) and c & (set(ys) - removed) for c in comps):
                return size
    return top + 1


def _smallest_fan_separator(g: Graph, x: int, ys, banned=frozenset(), limit=None) -> int:
    """Fewest vertices other than x meeting every path from x to ys."""
    return _smallest_separator(g, {x}, ys, set(banned), limit, keep={x})


def _brute_force_connectivity(g: Graph) -> int:
    if all(g.has_edge(a, b) for a, b in combinations(g.vertices, 2)):
        return g.n - 1
    for size in range(g.n - 1):
        for subset in combinations(g.vertices, size):
            if len(components(g, subset)) >= 2:
                return size
    return g.n - 1


def _check_path_system(g: Graph, paths, xs, ys, banned=frozenset()):
    used = [v for p in paths for v in p.vertices]
    assert len(used) == len(set(used))
    for p in paths:
        assert p.is_path_in(g)
        assert p.start in xs and p.end in ys
        assert not set(p.vertices) & set(banned)
        assert not set(p.vertices[1:]) & set(xs)
        assert not set(p.vertices[:-1]) & set(ys)


def _petersen_cases():
    rng = random.Random(10)
    cases = []
    for _ in range(12):
        picked = rng.sample(range(10), 8)
        banned = frozenset(rng.sample([v for v in range(10) if v not in picked], rng.randint(0, 2)))
        cases.append((frozenset(picked[:4]), frozenset(picked[4:]), banned))
    return cases


@pytest.mark.parametrize("xs, ys, banned", _petersen_cases())
def test_petersen_disjoint_paths_match_smallest_separator(xs, ys, banned):
    g = gf.petersen()
    expected = _smallest_separator(g, xs, ys, banned, limit=4) >= 4
    paths = disjoint_paths(g, xs, ys, 4, banned)
    assert (paths is not None) == expected
    if paths is not None:
        _check_path_system(g, paths, xs, ys, banned)


def test_petersen_fans_match_smallest_separator():
    g = gf.petersen()
    rng = random.Random(3)
    outcomes = set()
    for x in g.vertices:
        for _ in range(4):
            others = [v for v in g.vertices if v != x]
            ys = frozenset(rng.sample(others, 3))
            banned = frozenset(rng.sample([v for v in others if v not in ys], rng.randint(0, 1)))
            expected = _smallest_fan_separator(g, x, ys, banned, limit=3) >= 3
            paths = fan(g, x, ys, 3, banned)
            assert (paths is not None) == expected
            outcomes.add(expected)
            if paths is not None:
                assert all(p.start == x and p.end in ys for p in paths)
                tails = [v for p in paths for v in p.vertices[1:]]
                assert len(tails) == len(set(tails))
                assert not set(tails) & banned
    assert outcomes == {True, False}


def _menger_fixtures():
    graphs = _random_graphs(range(5, 10), (0.35, 0.6, 0.85), range(4))
    return graphs + [gf.k5(), gf.cube(), gf.k33(), gf.octahedron()]


@pytest.mark.slow
@pytest.mark.parametrize("g", _menger_fixtures())
def test_connectivity_and_paths_match_brute_force(g):
    assert vertex_connectivity(g) == _brute_force_connectivity(g)

    rng = random.Random(g.n * 100 + g.m)
    for _ in range(3):
        picked = rng.sample(g.vertices, min(g.n, 6))
        half = len(picked) // 2
        xs, ys = frozenset(picked[:half]), frozenset(picked[half:])
        k = min(len(xs), len(ys))
        expected = _smallest_separator(g, xs, ys, limit=k) >= k
        paths = disjoint_paths(g, xs, ys, k)
        assert (paths is not None) == expected
        if paths is not None:
            _check_path_system(g, paths, xs, ys)
