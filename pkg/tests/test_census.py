import pytest

from commgraph.census import CensusGraph, census_build, census_diameter, census_distance
from commgraph.distance import validate_path
from commgraph.errors import BudgetExceeded, InfiniteField
from commgraph.fields import GF, QQ
from commgraph.matrix import Matrix
from commgraph.structure import jordan_cell


@pytest.fixture(scope="module")
def m3f2():
    return census_build(3, GF(2))


def test_m2f2():
    G = census_build(2, GF(2))
    rep = census_diameter(G)
    assert (G.num_vertices, G.num_classes, rep["components"]) == (14, 7, 7)
    assert all(c["diameter"] == 1 for c in rep["per_component"])


def test_m3f2_shape(m3f2):
    rep = census_diameter(m3f2)
    assert rep["vertices"] == 510 and rep["classes"] == 190 and rep["components"] == 9
    main = max(rep["per_component"], key=lambda c: c["vertices"])
    assert main["vertices"] == 462 and main["diameter"] == 4
    assert sorted(c["vertices"] for c in rep["per_component"])[:8] == [6] * 8


def test_census_distance_paths(m3f2):
    F = GF(2)
    J = jordan_cell(F, 3)
    r = census_distance(m3f2, J, J.T)
    assert r.verdict == "d4" and validate_path(r.witness_path)
    assert census_distance(m3f2, J, J).verdict == "d0"
    assert census_distance(m3f2, J, J @ J + J).verdict == "d1"


def test_isolated_components_unreachable(m3f2):
    F = GF(2)
    C = Matrix(F, [[0, 0, 1], [1, 0, 1], [0, 1, 0]])  # companion of x^3 + x + 1
    r = census_distance(m3f2, C, jordan_cell(F, 3))
    assert r.verdict == "unreachable"


def test_round_trip(tmp_path, m3f2):
    path = tmp_path / "g.json"
    m3f2.save(str(path))
    H = CensusGraph.load(str(path))
    assert H.adjacency == m3f2.adjacency and H.sizes == m3f2.sizes and H.keys == m3f2.keys


def test_budget_and_field():
    with pytest.raises(BudgetExceeded):
        census_build(3, GF(3), budget=1000)
    with pytest.raises(InfiniteField):
        census_build(2, QQ)
