import random

import pytest

from commgraph.centralizer import centralizer_space
from commgraph.distance import (
    DistanceResult,
    distance_le2,
    distance_le3_finite,
    enumeration_budget,
    exact_distance_finite,
    find_commuting_rank_one,
    path_length4,
    validate_path,
)
from commgraph.errors import (
    AmbientMismatch,
    BadDimension,
    BudgetExceeded,
    FieldMismatch,
    InfiniteField,
    NoEigenvalueInField,
    ScalarInput,
)
from commgraph.fields import GF, QQ
from commgraph.matrix import Matrix
from commgraph.poly import Poly
from commgraph.structure import companion, jordan_cell

from conftest import random_matrix


def brute_le3(A, B):
    """Smallest d <= 3 by direct enumeration of both centralizers, else None."""
    if A == B:
        return 0
    if A.commutes_with(B):
        return 1
    CA = [X for X in centralizer_space([A]).elements() if not X.is_scalar()]
    CB = [Y for Y in centralizer_space([B]).elements() if not Y.is_scalar()]
    if any(X.commutes_with(B) for X in CA):
        return 2
    if any(X.commutes_with(Y) for X in CA for Y in CB):
        return 3
    return None


def test_le2_verdicts():
    F = GF(5)
    E = lambda i, j: Matrix.unit(F, 3, i, j)
    assert distance_le2(E(1, 1), E(1, 1)).verdict == "d0"
    assert distance_le2(E(1, 1), E(2, 2)).verdict == "d1"
    r = distance_le2(E(1, 2), E(2, 1))
    assert r.verdict == "d2" and validate_path(r.witness_path)
    J = jordan_cell(F, 3)
    assert distance_le2(J, J.T).verdict == "ge3"


def test_le3_matches_brute_force():
    F = GF(2)
    rng = random.Random(7)
    seen = set()
    for _ in range(150):
        A, B = random_matrix(F, 3, rng), random_matrix(F, 3, rng)
        if A.is_scalar() or B.is_scalar():
            continue
        r = distance_le3_finite(A, B)
        d = brute_le3(A, B)
        if d is None:
            assert r.verdict == "ge4"
        else:
            assert r.verdict == f"d{d}"
            assert validate_path(r.witness_path) and len(r.witness_path) == d + 1
        seen.add(r.verdict)
    assert {"d2", "d3", "ge4"} <= seen


def test_transpose_of_jordan_cell_is_at_distance_four():
    F = GF(3)
    J = jordan_cell(F, 3)
    r = exact_distance_finite(J, J.T)
    assert r.verdict == "d4" and r.distance == 4
    assert r.exhaustion["classes_searched"] == r.exhaustion["classes_total"]
    assert validate_path(r.witness_path)


def test_path4_shape_over_q():
    F = QQ
    J = jordan_cell(F, 3)
    r = path_length4(J, J.T)
    p = r.witness_path
    assert r.verdict == "le4" and len(p) == 5 and validate_path(p)
    assert p[1] == Matrix.unit(F, 3, 1, 3) and p[3] == Matrix.unit(F, 3, 3, 1)


def test_rank_one_commutes(rng):
    for F in (QQ, GF(2), GF(5)):
        for _ in range(20):
            A = random_matrix(F, 3, rng).shift(F.zero)
            A = Matrix(F, [A.row(0), A.row(1), [F.zero] * 3])
            if A.is_scalar():
                continue
            R = find_commuting_rank_one(A)
            assert R.rank() == 1 and A.commutes_with(R)


def test_errors(monkeypatch):
    F = GF(3)
    J = jordan_cell(F, 3)
    with pytest.raises(BudgetExceeded):
        distance_le3_finite(J, J.T, budget=1)
    monkeypatch.setenv("CG_BUDGET", "2")
    assert enumeration_budget() == 2
    with pytest.raises(BudgetExceeded):
        distance_le3_finite(J, J.T)
    monkeypatch.delenv("CG_BUDGET")
    with pytest.raises(InfiniteField):
        distance_le3_finite(jordan_cell(QQ, 3), jordan_cell(QQ, 3).T)
    with pytest.raises(ScalarInput):
        distance_le2(J, Matrix.identity(F, 3))
    with pytest.raises(FieldMismatch):
        distance_le2(J, jordan_cell(GF(5), 3))
    with pytest.raises(AmbientMismatch):
        distance_le2(J, jordan_cell(F, 2))
    with pytest.raises(BadDimension):
        path_length4(jordan_cell(F, 2), jordan_cell(F, 2).T)
    C = companion(Poly(GF(2), [1, 1, 0, 1]))
    with pytest.raises(NoEigenvalueInField):
        find_commuting_rank_one(C)


def test_result_json_and_verdicts():
    F = GF(5)
    r = distance_le2(Matrix.unit(F, 3, 1, 2), Matrix.unit(F, 3, 2, 1))
    j = r.to_json()
    assert j["verdict"] == "d2" and len(j["witness_path"]) == 3
    with pytest.raises(ValueError):
        DistanceResult("d9")
