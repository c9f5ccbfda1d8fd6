"""Commuting-graph distances: exact d<=2 everywhere, exhaustive d<=3 over finite fields, 4-paths."""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

from . import linalg
from .centralizer import MatSubspace, centralizer_space, first_nonscalar
from .errors import (
    AmbientMismatch,
    BadDimension,
    BudgetExceeded,
    FieldMismatch,
    InfiniteField,
    NoEigenvalueInField,
    ScalarInput,
    ValidationFailure,
)
from .matrix import Matrix, char_poly, matrix_to_json
from .poly import poly_roots_in_field

DEFAULT_BUDGET = 10**6

VERDICTS = ("d0", "d1", "d2", "d3", "d4", "ge3", "ge4", "ge5", "le4", "unreachable", "unknown")


def enumeration_budget(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get("CG_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass
class DistanceResult:
    """Verdict plus either a witness path or an exhaustion record.

    ``dk`` is exact; ``geK`` is a lower bound; ``le4`` is an upper bound from a path
    that was not minimized.
    """

    verdict: str
    witness_path: list | None = None
    exhaustion: dict | None = None
    note: str = ""

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    @property
    def distance(self) -> int | None:
        return int(self.verdict[1:]) if self.verdict.startswith("d") else None

    def to_json(self) -> dict:
        out = {"verdict": self.verdict}
        if self.witness_path is not None:
            out["witness_path"] = [matrix_to_json(M) for M in self.witness_path]
        if self.exhaustion is not None:
            out["exhaustion"] = self.exhaustion
        if self.note:
            out["note"] = self.note
        return out


def validate_path(path) -> bool:
    """Consecutive entries distinct, non-scalar and commuting."""
    for M in path:
        if M.is_scalar():
            return False
    for X, Y in zip(path, path[1:]):
        if X == Y or not X.commutes_with(Y):
            return False
    return True


def _check_pair(A: Matrix, B: Matrix):
    if A.field != B.field:
        raise FieldMismatch("matrices over different fields")
    if A.shape != B.shape:
        raise AmbientMismatch(f"shapes {A.shape} and {B.shape}")
    A.n
    if A.is_scalar() or B.is_scalar():
        raise ScalarInput("scalar matrices are not vertices")


def distance_le2(A: Matrix, B: Matrix) -> DistanceResult:
    """Resolve d in {0,1,2}; otherwise verdict ``ge3``."""
    _check_pair(A, B)
    if A == B:
        return DistanceResult("d0", [A])
    if A.commutes_with(B):
        return DistanceResult("d1", [A, B])
    S = centralizer_space([A, B])
    Z = first_nonscalar(S)
    if Z is not None:
        return DistanceResult("d2", [A, Z, B])
    return DistanceResult("ge3", exhaustion={"method": "intersection", "intersection_dim": S.dim})


def quotient_representatives(S: MatSubspace):
    """One element per class {alpha X + beta I} of non-scalar X in S (finite fields).

    Yields combinations of a complement of F*I inside S with leading coefficient one.
    """
    F, n = S.field, S.n
    ident = Matrix.identity(F, n).vec()
    kept, rows = [], [list(ident)]
    r = 1
    for b in S.basis:
        if linalg.rank(rows + [list(b)], n * n, F) > r:
            rows.append(list(b))
            kept.append(b)
            r += 1
    elems = list(F.elements())
    m = len(kept)
    for lead in range(m):
        for tail in itertools.product(elems, repeat=m - lead - 1):
            v = list(kept[lead])
            for c, b in zip(tail, kept[lead + 1:]):
                if c:
                    v = [F.add(x, F.mul(c, y)) if y else x for x, y in zip(v, b)]
            yield Matrix.from_vec(F, n, v)


def quotient_class_count(S: MatSubspace) -> int:
    q = S.field.order
    return (q ** (S.dim - 1) - 1) // (q - 1)


def commuting_nonscalar_in(X: Matrix, S: MatSubspace) -> Matrix | None:
    """First non-scalar Y in S with XY = YX, or None if only scalars qualify."""
    F, n = X.field, X.n
    mats = S.matrices()
    cols = [(X @ M - M @ X).vec() for M in mats]
    system = [[c[i] for c in cols] for i in range(n * n)]
    ker = linalg.kernel(system, len(mats), F)
    if len(ker) < 2:
        return None
    for k in ker:
        v = [F.zero] * (n * n)
        for c, M in zip(k, S.basis):
            if c:
                v = [F.add(x, F.mul(c, y)) if y else x for x, y in zip(v, M)]
        Y = Matrix.from_vec(F, n, v)
        if not Y.is_scalar():
            return Y
    raise ValidationFailure("kernel of dimension >= 2 without a non-scalar element")


def distance_le3_finite(A: Matrix, B: Matrix, budget: int | None = None) -> DistanceResult:
    """Resolve d <= 3 against d >= 4 by enumerating C(X) ∩ C(B) over classes X of C(A)."""
    _check_pair(A, B)
    F = A.field
    if not F.is_finite:
        raise InfiniteField("exhaustive d<=3 search needs a finite field; verify a finite-field image")
    r = distance_le2(A, B)
    if r.verdict != "ge3":
        return r
    budget = enumeration_budget(budget)
    CA, CB = centralizer_space([A]), centralizer_space([B])
    swapped = CB.dim < CA.dim
    if swapped:
        A, B, CA, CB = B, A, CB, CA
    count = quotient_class_count(CA)
    if count > budget:
        raise BudgetExceeded(f"{count} centralizer classes exceed the enumeration budget {budget}")
    seen = 0
    for X in quotient_representatives(CA):
        seen += 1
        Y = commuting_nonscalar_in(X, CB)
        if Y is not None:
            path = [A, X, Y, B]
            if swapped:
                path.reverse()
            if not validate_path(path):
                raise ValidationFailure("d3 witness failed validation")
            return DistanceResult("d3", path, exhaustion={"classes_searched": seen})
    return DistanceResult(
        "ge4",
        exhaustion={
            "method": "exhaustive",
            "field": F.text(),
            "enumerated_side": "B" if swapped else "A",
            "centralizer_dim": CA.dim,
            "centralizer_size": F.order**CA.dim,
            "classes_searched": seen,
            "classes_total": count,
        },
    )


def _least_eigenvalue(A: Matrix):
    roots = poly_roots_in_field(char_poly(A))
    if not roots:
        raise NoEigenvalueInField(f"matrix has no eigenvalue in {A.field.text()}")
    return roots[0][0]


def commuting_rank_one_factors(A: Matrix):
    """``(x, y)`` with x in ker(A - λI), y in ker(A - λI)^T for the least eigenvalue λ."""
    N = A.shift(_least_eigenvalue(A))
    x = linalg.kernel(N.data, N.n, N.field)[0]
    y = linalg.kernel(N.T.data, N.n, N.field)[0]
    return tuple(x), tuple(y)


def find_commuting_rank_one(A: Matrix) -> Matrix:
    x, y = commuting_rank_one_factors(A)
    return Matrix.outer(A.field, x, y)


def _shortcut(path):
    """Remove cycles so every vertex occurs once."""
    out = []
    for M in path:
        if M in out:
            out = out[: out.index(M) + 1]
        else:
            out.append(M)
    return out


def path_length4(A: Matrix, B: Matrix) -> DistanceResult:
    """A - x f^T - z h^T - y g^T - B with f^T z = g^T z = 0 and h^T x = h^T y = 0."""
    _check_pair(A, B)
    F, n = A.field, A.n
    if n < 3:
        raise BadDimension("four-step paths need n >= 3")
    x, f = commuting_rank_one_factors(A)
    y, g = commuting_rank_one_factors(B)
    z = linalg.kernel([list(f), list(g)], n, F)[0]
    h = linalg.kernel([list(x), list(y)], n, F)[0]
    R1 = Matrix.outer(F, x, f)
    R2 = Matrix.outer(F, z, h)
    R3 = Matrix.outer(F, y, g)
    path = _shortcut([A, R1, R2, R3, B])
    if not validate_path(path):
        raise ValidationFailure("Corollary path failed validation")
    return DistanceResult("le4", path, note=f"path of length {len(path) - 1}; not minimized")


def exact_distance_finite(A: Matrix, B: Matrix, budget: int | None = None) -> DistanceResult:
    """Exact distance over a finite field when n >= 3 and both have eigenvalues in the field."""
    r = distance_le3_finite(A, B, budget)
    if r.verdict != "ge4":
        return r
    up = path_length4(A, B)
    if len(up.witness_path) - 1 != 4:
        raise ValidationFailure("d >= 4 contradicted by a shorter path")
    return DistanceResult("d4", up.witness_path, exhaustion=r.exhaustion)
