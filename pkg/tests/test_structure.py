import pytest
from hypothesis import given, strategies as st

from commgraph.errors import NonSplitSpectrum, NotMonic, ParseError, ScalarInput
from commgraph.fields import GF, QQ
from commgraph.matrix import Matrix, char_poly, min_poly
from commgraph.poly import Poly
from commgraph.structure import (
    JordanSpec,
    build_from_spec,
    companion,
    is_maximal,
    is_minimal,
    is_rank_one_equivalent,
    is_semisimple,
    jordan_cell,
    jordan_form,
    jordan_spec,
    maximal_decomposition,
    structure_report,
)

from conftest import random_matrix


def test_jordan_cell():
    F = QQ
    assert jordan_cell(F, 1, 5) == Matrix(F, [[5]])
    J = jordan_cell(F, 3)
    assert J[0, 1] == 1 and J[1, 2] == 1 and J[0, 2] == 0


def test_spec_parse():
    F = GF(7)
    s = JordanSpec.parse(F, "1:0,2:1")
    assert s.n == 3 and s.blocks == ((0, 1), (1, 2))
    assert build_from_spec(s) == Matrix(F, [[0, 0, 0], [0, 1, 1], [0, 0, 1]])
    with pytest.raises(ParseError):
        JordanSpec.parse(F, "2;1")


@pytest.mark.parametrize("F", [QQ, GF(5), GF(2, 3)], ids=lambda F: F.text())
@given(data=st.data())
def test_jordan_form_recovers_spec(F, data):
    import random

    rng = random.Random(data.draw(st.integers(0, 10**6)))
    k = data.draw(st.integers(1, 3))
    eigs = [F.from_int(data.draw(st.integers(0, 2))) for _ in range(k)]
    blocks = tuple((e, data.draw(st.integers(1, 2))) for e in eigs)
    spec = JordanSpec(F, blocks).canonical()
    J0 = build_from_spec(spec)
    while True:
        P = random_matrix(F, J0.n, rng)
        if P.det() != F.zero:
            break
    A = P @ J0 @ P.inverse()
    J, T = jordan_form(A)
    assert A @ T == T @ J
    assert sorted(jordan_spec(A).blocks) == sorted(spec.blocks)


def test_companion():
    F = QQ
    f = Poly.from_roots(F, [1, 2, 3])
    C = companion(f)
    assert char_poly(C) == f and min_poly(C) == f
    J, _ = jordan_form(C)
    assert J == Matrix.diag(F, [1, 2, 3])
    assert companion(Poly(F, [-1, 0, 1])) == Matrix(F, [[0, 1], [1, 0]])
    with pytest.raises(NotMonic):
        companion(Poly(F, [1, 2]))


def test_non_split_reports_degrees():
    F = GF(2)
    C = companion(Poly(F, [1, 0, 1, 0, 1, 0, 0, 0, 1, 1]))
    with pytest.raises(NonSplitSpectrum) as exc:
        jordan_form(C)
    assert exc.value.factor_degrees == (9,)
    r = structure_report(C)
    assert r.minimal and r.jordan is None


def test_predicates():
    F = GF(5)
    J3 = jordan_cell(F, 3)
    E11 = Matrix.unit(F, 3, 1, 1)
    N = Matrix.unit(F, 3, 1, 3)
    assert is_minimal(J3) and not is_maximal(J3) and not is_semisimple(J3)
    assert is_maximal(E11) and is_semisimple(E11) and is_rank_one_equivalent(E11)
    assert is_maximal(N) and not is_semisimple(N)
    D = Matrix.diag(F, [1, 2, 3])
    assert is_minimal(D) and is_semisimple(D) and not is_rank_one_equivalent(D)
    kind, a, b, M = maximal_decomposition(E11 * 3 + Matrix.identity(F, 3))
    assert kind == "idempotent" and M @ M == M
    with pytest.raises(ScalarInput):
        is_minimal(Matrix.identity(F, 3))


def test_irreducible_quadratic_not_maximal():
    F = GF(3)
    C = companion(Poly(F, [1, 0, 1]))
    A = Matrix(F, [[C[0, 0], C[0, 1], 0, 0], [C[1, 0], C[1, 1], 0, 0], [0, 0, C[0, 0], C[0, 1]], [0, 0, C[1, 0], C[1, 1]]])
    r = structure_report(A)
    assert not r.maximal and not r.semisimple
    assert any("irreducible quadratic" in n for n in r.notes)


def test_rank_one_equivalent_random(rng):
    F = GF(3)
    for _ in range(30):
        A = random_matrix(F, 3, rng)
        if A.is_scalar():
            continue
        expect = any(A.shift(c).rank() == 1 for c in F.elements())
        assert is_rank_one_equivalent(A) == expect
