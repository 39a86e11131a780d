import random
from fractions import Fraction

import pytest

import graph_fixtures as gf
from graphs.connectivity import is_k_connected
from graphs.subgraphs import find_k4_minus
from planar.embedding import planar_embed
from construction.certificates import verify_certificate
from construction.discharging import find_short_proper_wheel
from construction.hammocks import HammockKind, check_kappa2, hammocks_from_cut, minimize_fat
from construction.linkage import check_slippery, find_cu_linkage
from construction.oracle import has_topological_k5
from construction.pipeline import K4MinusFound, construct
from services.check_service import CheckService
from services.generator_service import GeneratorService, grow_triangulation, random_triangulation
from utils.constants import KIND_APEXED_MEDIAL, KIND_APEXED_TRIANGULATION, KIND_PLANE_2CONN, TARGET_ALPHA

pytestmark = pytest.mark.slow


def _minimal_fat_sides(host):
    """(cut vertex, minimal fat hammock) for every 4-valent vertex of host."""
    for u in sorted(v for v in host.vertices if host.degree(v) == 4):
        for side in hammocks_from_cut(host, host.neighbors(u), check_connectivity=False):
            if side.kind is HammockKind.FAT:
                yield u, minimize_fat(side)


def _assert_outcome(g, outcome):
    if isinstance(outcome, K4MinusFound):
        assert outcome.k4_minus.is_subgraph_of(g)
    else:
        assert verify_certificate(g, outcome.certificate)


# ============================================================================
# Charge identity
# ============================================================================

@pytest.mark.parametrize("size", range(5, 31))
def test_plane_hammocks_keep_total_charge(size):
    for seed in range(8):
        instance = GeneratorService.generate(KIND_PLANE_2CONN, size, seed=seed)
        report = CheckService.discharge(instance.graph, sorted(instance.boundary))
        ledger = report.ledger
        assert ledger.initial_total() == Fraction(1, 3)
        assert ledger.final_total() == ledger.initial_total()
        assert report.outer_account.matches


# ============================================================================
# Minimum degree five
# ============================================================================

@pytest.mark.parametrize("n", [12] + list(range(14, 24)))
def test_minimum_degree_five_graphs_contain_k4_minus(n):
    for seed in range(10):
        g = random_triangulation(n, random.Random(seed), 5)
        assert g.min_degree() >= 5
        assert find_k4_minus(g) is not None


# ============================================================================
# Minimal fat hammocks
# ============================================================================

def test_minimal_fat_hammocks_are_2_connected():
    hosts = [(13, 0), (16, 0), (16, 1), (19, 0)]
    checked = 0
    for size, seed in hosts:
        instance = GeneratorService.generate(KIND_APEXED_MEDIAL, size, seed=seed)
        base = instance.graph.remove({instance.apex})
        for u, h in _minimal_fat_sides(base):
            assert h.kind is HammockKind.FAT
            assert check_kappa2(h), f"minimal hammock below N({u}) is not 2-connected"
            checked += 1
    assert checked >= 50


def test_linkages_in_minimal_hammocks_are_slippery():
    linked = 0
    for n in range(8, 17):
        for seed in range(4):
            host = grow_triangulation(n, random.Random(seed)).graph()
            if not is_k_connected(host, 4):
                continue
            embedding = planar_embed(host)
            for u, h in _minimal_fat_sides(host):
                wheel = find_short_proper_wheel(embedding, h, check_hypotheses=False)
                if wheel is None:
                    continue
                linkage = find_cu_linkage(h, wheel, min_alpha=TARGET_ALPHA)
                assert linkage is not None, f"no linkage at hub {wheel.hub} below N({u})"
                assert check_slippery(h, wheel, linkage)
                linked += 1
    assert linked >= 25


# ============================================================================
# End to end
# ============================================================================

@pytest.mark.parametrize("size", range(10, 21))
@pytest.mark.parametrize("seed", [0, 1])
def test_apexed_triangulations_default_route(size, seed):
    g = GeneratorService.generate(KIND_APEXED_TRIANGULATION, size, seed=seed).graph
    _assert_outcome(g, construct(g))


@pytest.mark.parametrize("size", range(10, 15))
@pytest.mark.parametrize("seed", [0, 1])
def test_apexed_triangulations_forced_route(size, seed):
    g = GeneratorService.generate(KIND_APEXED_TRIANGULATION, size, seed=seed).graph
    _assert_outcome(g, construct(g, force_wheel_route=True))


@pytest.mark.parametrize("size", [13, 15, 16, 17, 18, 19, 20])
def test_minimum_degree_five_hosts_end_to_end(size):
    g = GeneratorService.generate(KIND_APEXED_TRIANGULATION, size, seed=size, min_degree=5).graph
    outcome = construct(g)
    assert isinstance(outcome, K4MinusFound)
    assert outcome.k4_minus.is_subgraph_of(g)


@pytest.mark.parametrize("size", [13, 16, 19])
@pytest.mark.parametrize("seed", range(3))
def test_apexed_medial_forced_route(size, seed):
    g = GeneratorService.generate(KIND_APEXED_MEDIAL, size, seed=seed).graph
    _assert_outcome(g, construct(g, force_wheel_route=True))


# ============================================================================
# Agreement with exhaustive search
# ============================================================================

def _small_instances():
    yield "apexed octahedron", gf.apexed(gf.octahedron())[0]
    yield "apexed cuboctahedron", gf.apexed(gf.cuboctahedron())[0]
    for size in range(7, 15):
        for seed in range(3):
            yield f"triangulation n={size} seed={seed}", \
                GeneratorService.generate(KIND_APEXED_TRIANGULATION, size, seed=seed).graph
    for seed in range(3):
        yield f"medial seed={seed}", GeneratorService.generate(KIND_APEXED_MEDIAL, 13, seed=seed).graph


def test_constructed_tk5_agrees_with_exhaustive_search():
    built = 0
    for name, g in _small_instances():
        assert g.n <= 14
        found = has_topological_k5(g)
        assert found is not None, name
        assert verify_certificate(g, found), name
        outcome = construct(g, force_wheel_route=True)
        _assert_outcome(g, outcome)
        if not isinstance(outcome, K4MinusFound):
            built += 1
    assert built >= 1
