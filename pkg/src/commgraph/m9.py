"""Certificate that the commuting graph of M_9(GF(2)) has two vertices at distance at least 5."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import linalg
from .centralizer import centralizer_space, poly_algebra
from .errors import ValidationFailure
from .fields import GF
from .matrix import Matrix, direct_sum, matrix_to_json, min_poly
from .poly import Poly, poly_is_irreducible
from .structure import companion

M_COEFFS = (1, 0, 1, 0, 1, 0, 0, 0, 1, 1)  # 1 + λ^2 + λ^4 + λ^8 + λ^9


@dataclass
class M9Certificate:
    m: Poly
    A_hat: Matrix
    Y_hat: Matrix
    C: Matrix
    V: Matrix
    S1: Matrix
    A: Matrix
    N: Matrix
    B: Matrix
    centralizer_dims: dict
    subfield_elements: list
    intersection_dim: int
    stages: dict = dc_field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "m": [int(c) for c in self.m.coeffs],
            "matrices": {
                k: matrix_to_json(getattr(self, k))
                for k in ("A_hat", "Y_hat", "C", "V", "S1", "A", "N", "B")
            },
            "centralizer_dims": self.centralizer_dims,
            "subfield_elements": [matrix_to_json(M) for M in self.subfield_elements],
            "intersection_dim": self.intersection_dim,
            "stages": self.stages,
        }


def _stage(stages: dict, name: str, ok: bool, **detail):
    stages[name] = {"passed": bool(ok), **detail}
    if not ok:
        raise ValidationFailure(f"stage {name} failed: {detail}")


def _block3(F, blocks) -> Matrix:
    """3x3 block matrix from a dict {(i, j): 3x3 Matrix} (1-based)."""
    rows = []
    for bi in range(3):
        for r in range(3):
            row = []
            for bj in range(3):
                M = blocks.get((bi + 1, bj + 1))
                row.extend(M.data[r] if M is not None else (F.zero,) * 3)
            rows.append(tuple(row))
    return Matrix(F, tuple(rows), _trusted=True)


def module_basis(Y: Matrix, block: int):
    """Greedy F[Y]-basis: accept e_i when it is independent of the span of {Y^j v} so far.

    Returns the columns v, Yv, ..., Y^(block-1) v for each accepted v.
    """
    F, n = Y.field, Y.n
    cols: list = []
    for i in range(n):
        e = tuple(F.one if r == i else F.zero for r in range(n))
        if cols and linalg.rank([list(c) for c in cols] + [list(e)], n, F) == len(cols):
            continue
        chain = [e]
        for _ in range(block - 1):
            chain.append(Y.apply(chain[-1]))
        cols.extend(chain)
        if len(cols) == n:
            break
    return cols


def m9_certificate() -> M9Certificate:
    F = GF(2)
    stages: dict = {}
    m = Poly(F, M_COEFFS)
    _stage(stages, "a", poly_is_irreducible(m), claim="m is irreducible over GF(2)")

    A_hat = companion(m)
    CA = centralizer_space([A_hat])
    alg = poly_algebra(A_hat)
    elements = list(alg.elements())
    _stage(
        stages,
        "b",
        CA.dim == 9 and alg == CA and len(elements) == 512,
        centralizer_dim=CA.dim,
        algebra_elements=len(elements),
    )

    Y_hat = next(X for X in elements if not X.is_scalar() and min_poly(X).degree == 3)
    p_cube = min_poly(Y_hat)
    _stage(stages, "c", True, min_poly_Y=[int(c) for c in p_cube.coeffs])

    nonscalar = [X for X in elements if not X.is_scalar()]
    sub = [X for X in nonscalar if min_poly(X).degree <= 3]
    sub_keys = {centralizer_space([X]).key() for X in sub}
    rest_same = sum(1 for X in nonscalar if min_poly(X).degree > 3 and centralizer_space([X]) == CA)
    CY = centralizer_space([Y_hat])
    subfield = [X for X in elements if X.is_scalar() or min_poly(X).degree <= 3]
    _stage(
        stages,
        "d",
        len(nonscalar) == 510 and len(sub) == 6 and len(sub_keys) == 1 and rest_same == 504
        and CY != CA and len(subfield) == 8,
        nonscalar=len(nonscalar),
        subfield_nonscalar=len(sub),
        subfield_centralizers=len(sub_keys),
        same_centralizer_as_A_hat=rest_same,
    )

    C = companion(p_cube)
    V = direct_sum(C, C, C)
    P = Matrix.from_columns(F, module_basis(Y_hat, 3))
    S1 = P.inverse()
    _stage(stages, "e", S1.inverse() @ V @ S1 == Y_hat, claim="Y_hat = S1^-1 (C+C+C) S1")

    A = S1 @ A_hat @ S1.inverse()
    E13 = Matrix.unit(F, 3, 1, 3)
    E32 = Matrix.unit(F, 3, 3, 2)
    N = _block3(F, {(1, 1): E13, (2, 3): E13, (3, 1): E32})
    I9 = Matrix.identity(F, 9)
    K = I9 + N
    Kinv = K.inverse()
    B = K @ A @ Kinv
    pA = S1 @ Y_hat @ S1.inverse()
    _stage(
        stages,
        "f",
        (N @ N @ N).is_zero() and not (N @ N).is_zero() and pA == V,
        claim="N^3 = 0 and p(A) = C+C+C",
    )

    CV = centralizer_space([V])
    W = K @ V @ Kinv
    inter = centralizer_space([V, W])
    _stage(stages, "g", inter.dim == 1, intersection_dim=inter.dim, centralizer_V_dim=CV.dim)

    # Every neighbour of A is equivalent to A or to V; likewise for B with W.
    pairs = {}
    for na, X in (("A", A), ("V", V)):
        for nb, Y in (("B", B), ("W", W)):
            pairs[f"{na}-{nb}"] = centralizer_space([X, Y]).dim
    _stage(
        stages,
        "h",
        all(d == 1 for d in pairs.values()) and A != B and not A.commutes_with(B),
        intersection_dims=pairs,
        claim="no path of length <= 4 from A to B",
    )

    dims = {"A_hat": CA.dim, "Y_hat": CY.dim, "V": CV.dim, "intersection": inter.dim}
    return M9Certificate(m, A_hat, Y_hat, C, V, S1, A, N, B, dims, subfield, inter.dim, stages)
