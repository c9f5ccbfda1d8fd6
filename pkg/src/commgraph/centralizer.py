"""Centralizers as canonical subspaces of M_n(F), and the relations they induce."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import linalg
from .errors import AmbientMismatch, FieldMismatch, IdentityMissing, ScalarInput
from .fields import FieldSpec
from .matrix import Matrix, min_poly, sylvester_rows, sylvester_rows_gf2


class MatSubspace:
    """A subspace of M_n(F) stored as the RREF of the row-major vectorizations.

    The RREF is unique, so two instances are equal iff the subspaces are.
    """

    __slots__ = ("field", "n", "basis", "pivots", "_key")

    def __init__(self, field: FieldSpec, n: int, basis, pivots):
        self.field = field
        self.n = n
        self.basis = tuple(tuple(b) for b in basis)
        self.pivots = tuple(pivots)
        self._key = None

    @classmethod
    def span(cls, field: FieldSpec, n: int, vectors) -> MatSubspace:
        R, piv = linalg.row_reduce(list(vectors), n * n, field)
        return cls(field, n, R, piv)

    @classmethod
    def span_matrices(cls, mats: Sequence[Matrix]) -> MatSubspace:
        F, n = mats[0].field, mats[0].n
        return cls.span(F, n, [M.vec() for M in mats])

    @classmethod
    def scalars(cls, field: FieldSpec, n: int) -> MatSubspace:
        return cls.span_matrices([Matrix.identity(field, n)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def key(self):
        """Hashable canonical signature."""
        if self._key is None:
            self._key = (self.n, self.basis)
        return self._key

    def __eq__(self, other):
        return isinstance(other, MatSubspace) and self.field == other.field and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"MatSubspace(n={self.n}, dim={self.dim}, {self.field.text()})"

    def matrices(self) -> list[Matrix]:
        return [Matrix.from_vec(self.field, self.n, b) for b in self.basis]

    def contains(self, X: Matrix) -> bool:
        r = linalg.reduce_vector(X.vec(), self.basis, self.pivots, self.field)
        return not any(r)

    def contains_identity(self) -> bool:
        return self.contains(Matrix.identity(self.field, self.n))

    def issubset(self, other: MatSubspace) -> bool:
        self._compat(other)
        return all(
            not any(linalg.reduce_vector(b, other.basis, other.pivots, self.field)) for b in self.basis
        )

    def _compat(self, other):
        if other.n != self.n:
            raise AmbientMismatch(f"M_{self.n} vs M_{other.n}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def intersect(self, other: MatSubspace) -> MatSubspace:
        return subspace_intersect(self, other)

    def conjugate(self, S: Matrix, S_inv: Matrix | None = None) -> MatSubspace:
        """The subspace ``S U S^-1``."""
        S_inv = S.inverse() if S_inv is None else S_inv
        return MatSubspace.span_matrices([S @ M @ S_inv for M in self.matrices()]) if self.basis else self

    def elements(self) -> Iterator[Matrix]:
        """Every element (finite fields only), in lexicographic coefficient order."""
        F = self.field
        elems = list(F.elements())
        for coeffs in itertools.product(elems, repeat=self.dim):
            v = [F.zero] * (self.n * self.n)
            for c, b in zip(coeffs, self.basis):
                if c:
                    v = [F.add(x, F.mul(c, y)) if y else x for x, y in zip(v, b)]
            yield Matrix.from_vec(F, self.n, v)

    def size(self) -> int:
        return self.field.order**self.dim


def subspace_intersect(U: MatSubspace, V: MatSubspace) -> MatSubspace:
    """U ∩ V by solving sum a_i u_i = sum b_j v_j."""
    U._compat(V)
    F, N = U.field, U.n * U.n
    a, b = U.dim, V.dim
    if a == 0 or b == 0:
        return MatSubspace(F, U.n, [], [])
    cols = list(U.basis) + [[F.neg(x) for x in v] for v in V.basis]
    system = [[c[i] for c in cols] for i in range(N)]
    ker = linalg.kernel(system, a + b, F)
    vecs = []
    for k in ker:
        v = [F.zero] * N
        for c, u in zip(k[:a], U.basis):
            if c:
                v = [F.add(x, F.mul(c, y)) if y else x for x, y in zip(v, u)]
        vecs.append(v)
    return MatSubspace.span(F, U.n, vecs)


def _sylvester_stack(mats: Sequence[Matrix]):
    F = mats[0].field
    n = mats[0].n
    for M in mats:
        if M.field != F:
            raise FieldMismatch("matrices over different fields")
        if M.shape != (n, n):
            raise AmbientMismatch("matrices of different sizes")
    return F, n


def centralizer_space(mats: Sequence[Matrix]) -> MatSubspace:
    """C(Ω) for a list of matrices, from the stacked Sylvester systems."""
    F, n = _sylvester_stack(mats)
    N = n * n
    if linalg.is_gf2(F):
        rows = []
        for M in mats:
            rows.extend(sylvester_rows_gf2(M))
        kern = linalg.kernel_gf2_packed(rows, N)
        R, piv = linalg.rref_gf2_packed(kern, N)
        return MatSubspace(F, n, [linalg.unpack_row(v, N) for v in R], piv)
    rows = []
    for M in mats:
        rows.extend(sylvester_rows(M))
    return MatSubspace.span(F, n, linalg.kernel(rows, N, F))


@dataclass(frozen=True)
class CentralizerBasis:
    subject: tuple[Matrix, ...]
    space: MatSubspace

    @property
    def dim(self) -> int:
        return self.space.dim

    def matrices(self) -> list[Matrix]:
        return self.space.matrices()


def centralizer(A: Matrix) -> CentralizerBasis:
    A.n
    return CentralizerBasis((A,), centralizer_space([A]))


def centralizer_of_set(mats: Sequence[Matrix]) -> CentralizerBasis:
    return CentralizerBasis(tuple(mats), centralizer_space(list(mats)))


def contains_nonscalar(S: MatSubspace) -> bool:
    if not S.contains_identity():
        raise IdentityMissing("subspace does not contain the identity")
    return S.dim >= 2


def first_nonscalar(S: MatSubspace) -> Matrix | None:
    """First basis matrix (canonical order) that is not scalar."""
    for M in S.matrices():
        if not M.is_scalar():
            return M
    return None


def poly_algebra(A: Matrix) -> MatSubspace:
    """F[A] = span{I, A, ..., A^(d-1)} with d = deg min_poly(A)."""
    F, n = A.field, A.n
    d = min_poly(A).degree
    powers = [Matrix.identity(F, n)]
    for _ in range(d - 1):
        powers.append(powers[-1] @ A)
    return MatSubspace.span_matrices(powers)


def _require_nonscalar(*mats):
    for M in mats:
        if M.is_scalar():
            raise ScalarInput("scalar matrices are not vertices")


def equivalent(A: Matrix, B: Matrix) -> bool:
    """A ~ B iff C(A) = C(B)."""
    _require_nonscalar(A, B)
    return centralizer_space([A]) == centralizer_space([B])


def precedes(A: Matrix, B: Matrix) -> bool:
    """A ≺ B iff C(A) ⊆ C(B), tested as: every basis matrix of C(A) commutes with B."""
    _require_nonscalar(A, B)
    return all(X.commutes_with(B) for X in centralizer_space([A]).matrices())


def double_centralizer_check(A: Matrix) -> bool:
    """C(C(A)) == F[A]."""
    CA = centralizer_space([A]).matrices()
    return centralizer_space(CA) == poly_algebra(A)
