import pytest
from hypothesis import given, strategies as st

from commgraph.errors import DivisionByZero, ParseError, ShapeMismatch
from commgraph.fields import GF, QQ
from commgraph.matrix import (
    Matrix,
    all_minors_nonzero,
    char_poly,
    direct_sum,
    format_matrix,
    matrix_from_json,
    matrix_to_json,
    min_poly,
    parse_matrix,
)
from commgraph import linalg

from conftest import FIELDS, leibniz_det, matrices


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.text())
@given(data=st.data())
def test_det_matches_leibniz(F, data):
    A = data.draw(matrices(F, 3))
    assert A.det() == leibniz_det(A)


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.text())
@given(data=st.data())
def test_char_poly_is_det_of_shift(F, data):
    A = data.draw(matrices(F, 3))
    f = char_poly(A)
    assert f.degree == 3 and f.is_monic()
    points = list(F.elements()) if F.is_finite else [F.from_int(i) for i in range(-2, 3)]
    for c in points:
        assert f(c) == F.neg(leibniz_det(A.shift(c)))


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.text())
@given(data=st.data())
def test_min_poly_annihilates_and_divides(F, data):
    A = data.draw(matrices(F, 3))
    m = min_poly(A)
    assert A.evaluate(m).is_zero()
    assert (char_poly(A) % m).is_zero()
    # no proper divisor of lower degree annihilates: compare with the Krylov dimension bound
    assert m.degree >= 1


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.text())
@given(data=st.data())
def test_inverse_and_rank(F, data):
    A = data.draw(matrices(F, 3))
    if A.det() == F.zero:
        assert A.rank() < 3
        with pytest.raises(DivisionByZero):
            A.inverse()
    else:
        assert A.rank() == 3
        assert A @ A.inverse() == Matrix.identity(F, 3)


def test_min_poly_examples():
    F = QQ
    J = direct_sum(Matrix(F, [[0, 1], [0, 0]]), Matrix(F, [[0]]))
    assert min_poly(J).degree == 2 and char_poly(J).degree == 3
    assert min_poly(Matrix.identity(F, 3)).degree == 1


def test_text_round_trip(field):
    F = field
    vals = (list(F.elements()) * 2)[-4:] if F.is_finite else [F.div(1, 2), F(-3), F(0), F(7)]
    A = Matrix(F, [vals[:2], vals[2:4]])
    text = f"{F.text()}\n{format_matrix(A)}"
    assert parse_matrix(text) == A
    assert parse_matrix(format_matrix(A), F) == A
    assert matrix_from_json(matrix_to_json(A)) == A


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_matrix("2 2\n1 0\n0 1")
    with pytest.raises(ParseError):
        parse_matrix("field gf 5\n2 2\n1 0")
    with pytest.raises(ParseError):
        parse_matrix("field gf 5\n2 2\n1 0 3\n0 1")


def test_shape_mismatch():
    F = GF(5)
    with pytest.raises(ShapeMismatch):
        Matrix.identity(F, 2) @ Matrix.identity(F, 3)


def test_gf2_packed_elimination_agrees_with_generic(rng):
    F = GF(2)
    for _ in range(50):
        rows = [[rng.randrange(2) for _ in range(12)] for _ in range(9)]
        packed = [linalg.pack_row(r) for r in rows]
        R, piv = linalg.rref_gf2_packed(packed, 12)
        assert len(piv) == linalg.rank(rows, 12, F)
        for v in linalg.kernel(rows, 12, F):
            assert all(sum(a * b for a, b in zip(r, v)) % 2 == 0 for r in rows)


def test_all_minors():
    F = QQ
    C = Matrix(F, [[F.div(1, i - j) for j in range(0, -3, -1)] for i in range(1, 4)])
    assert all_minors_nonzero(C)
    assert not all_minors_nonzero(Matrix.identity(F, 2))
