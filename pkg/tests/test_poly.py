from commgraph.fields import GF, QQ
from commgraph.poly import (
    Poly,
    irreducible_factor_degrees,
    poly_gcd,
    poly_is_irreducible,
    poly_is_squarefree,
    poly_roots_in_field,
)


def test_m9_modulus_is_irreducible():
    m = Poly(GF(2), [1, 0, 1, 0, 1, 0, 0, 0, 1, 1])
    assert poly_is_irreducible(m)
    assert irreducible_factor_degrees(m) == [9]


def test_reducible_and_roots():
    F = GF(5)
    f = Poly.from_roots(F, [1, 1, 3])
    assert not poly_is_irreducible(f)
    assert dict(poly_roots_in_field(f)) == {1: 2, 3: 1}
    assert not poly_is_squarefree(f)


def test_rational_roots():
    f = Poly.from_roots(QQ, [QQ.div(1, 2), -3, 2])
    assert sorted(r for r, _ in poly_roots_in_field(f)) == sorted([QQ.div(1, 2), QQ(-3), QQ(2)])


def test_gcd_and_division():
    F = GF(7)
    a = Poly.from_roots(F, [1, 2, 3])
    b = Poly.from_roots(F, [2, 3, 4])
    assert poly_gcd(a, b) == Poly.from_roots(F, [2, 3])
    q, r = divmod(a, Poly.from_roots(F, [1]))
    assert r.is_zero() and q == Poly.from_roots(F, [2, 3])


def test_irreducible_quadratic_over_gf3():
    f = Poly(GF(3), [1, 0, 1])
    assert poly_is_irreducible(f) and poly_roots_in_field(f) == []
