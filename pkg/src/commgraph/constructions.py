"""Deterministic builders for the explicit matrices and families, each validated before return."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from . import linalg
from .centralizer import centralizer_space, precedes
from .errors import (
    BadConjugator,
    BadDimension,
    BadParameters,
    Char2IndexClash,
    DegenerateParameters,
    FieldTooSmall,
    MinimalInput,
    NotJordan,
    NotMinimalSpec,
    NotSemisimpleMinimal,
    RepeatedEigenvalues,
    SemisimpleInput,
    ValidationFailure,
    WrongClass,
)
from .fields import FieldSpec, field_lift
from .matrix import Matrix, all_minors_nonzero, direct_sum, min_poly
from .structure import (
    JordanSpec,
    build_from_spec,
    is_maximal,
    is_minimal,
    is_semisimple,
    jordan_cell,
    jordan_data,
    jordan_form,
    maximal_decomposition,
)

__all__ = [
    "jordan_cell",
    "build_from_spec",
    "cauchy_matrix",
    "mds_conjugator",
    "default_conjugator",
    "theorem5_instance",
    "FamilyInstance",
    "family_n3",
    "family_n4",
    "family_n5plus",
    "check_alpha_set",
    "lemma3_coefficients",
    "lemma3_solve",
    "Lemma4Context",
    "lemma4_witness",
    "lemma4_exhaustive_gf2",
    "lemma7_normal_form",
    "lemma7_witness",
    "lemma10_interpolate",
    "lemma11_witness",
]


def _require(cond: bool, what: str):
    if not cond:
        raise ValidationFailure(what)


# Cauchy and MDS conjugators


def cauchy_matrix(field: FieldSpec, xs, ys) -> Matrix:
    """[1/(x_i - y_j)]."""
    F = field
    xs = [F(x) for x in xs]
    ys = [F(y) for y in ys]
    if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
        raise DegenerateParameters("Cauchy parameters must be pairwise distinct")
    if set(xs) & set(ys):
        raise DegenerateParameters("some x_i equals some y_j")
    return Matrix(F, [[F.inv(F.sub(x, y)) for y in ys] for x in xs])


def mds_conjugator(field: FieldSpec, n: int) -> Matrix:
    """S with [I | S] generating a Reed-Solomon code on the points of GF(q) and infinity.

    Every square submatrix of S is nonsingular exactly when the code is MDS, which holds
    whenever 2n <= q + 1.
    """
    F = field
    if not F.is_finite or 2 * n > F.order + 1:
        raise FieldTooSmall(f"no {n}x{n} matrix with all minors nonzero is built over {F.text()}")
    points = list(F.elements())[: 2 * n]
    cols = []
    for a in points:
        col, c = [], F.one
        for _ in range(n):
            col.append(c)
            c = F.mul(c, a)
        cols.append(col)
    while len(cols) < 2 * n:
        cols.append([F.zero] * (n - 1) + [F.one])
    V = Matrix.from_columns(F, cols[:n])
    W = Matrix.from_columns(F, cols[n:])
    return V.inverse() @ W


def default_conjugator(field: FieldSpec, n: int) -> tuple[Matrix, str]:
    """Cauchy with x_i = i, y_j = -(j-1) - offset when 2n field elements allow it, else MDS."""
    F = field
    if not F.is_finite or F.order >= 2 * n:
        for offset in range(F.order if F.is_finite else 1):
            try:
                S = cauchy_matrix(F, range(1, n + 1), [-(j - 1) - offset for j in range(1, n + 1)])
            except DegenerateParameters:
                continue
            if all_minors_nonzero(S):
                return S, f"cauchy(offset={offset})"
    S = mds_conjugator(F, n)
    if not all_minors_nonzero(S):
        raise FieldTooSmall("systematic MDS matrix has a vanishing minor")
    return S, "mds"


def theorem5_instance(spec_a: JordanSpec, spec_b: JordanSpec, S: Matrix | None = None):
    """``(A, S^-1 B S, S)`` for minimal Jordan specs A, B and a conjugator with all minors nonzero."""
    for spec in (spec_a, spec_b):
        eig = spec.eigenvalues()
        if len(set(eig)) != len(eig):
            raise NotMinimalSpec(f"repeated eigenvalue in {spec.text()}")
    if spec_a.n != spec_b.n or spec_a.field != spec_b.field:
        raise BadDimension("specs differ in size or field")
    F = spec_a.field
    if S is None:
        S, _ = default_conjugator(F, spec_a.n)
    if not all_minors_nonzero(S):
        raise BadConjugator("conjugator has a vanishing minor")
    A = build_from_spec(spec_a)
    B = S.inverse() @ build_from_spec(spec_b) @ S
    _require(is_minimal(A) and is_minimal(B), "theorem-5 matrices must be minimal")
    return A, B, S


# Theorem 6 families


@dataclass
class FamilyInstance:
    n: int
    alpha: object
    X: Matrix
    Z: Matrix
    aux: dict = dc_field(default_factory=dict)
    lam: object = None

    def path_to_z(self) -> list:
        return self.aux["path_to_z"]


def _first_kernel(rows, n, F):
    return tuple(linalg.kernel([list(r) for r in rows], n, F)[0])


def family_n3(field: FieldSpec, alpha) -> FamilyInstance:
    F = field
    a = F.coerce(alpha)
    z, o = F.zero, F.one
    u = (z, o, a)
    v = (z, a, F.neg(o))
    R = Matrix.outer(F, u, v)
    ker_v = linalg.kernel([list(v)], 3, F)
    w = next(
        tuple(k) for k in ker_v if linalg.rank([list(u), list(k)], 3, F) == 2
    )
    j = next(i for i, c in enumerate(v) if c)
    t = tuple(F.inv(v[j]) if i == j else z for i in range(3))
    T = Matrix.from_columns(F, [u, w, t])
    Tinv = T.inverse()
    E11 = Matrix.unit(F, 3, 1, 1)
    X = T @ jordan_cell(F, 3) @ Tinv
    _require(Tinv @ R @ T == Matrix.unit(F, 3, 1, 3), "T^-1 R T = E13")
    _require(X @ X == R and (X @ X @ X).is_zero(), "X^2 = R, X^3 = 0")
    _require(R.commutes_with(E11) and (R @ R).is_zero(), "R commutes with E11 and squares to zero")
    _require(is_minimal(X), "X is minimal")
    return FamilyInstance(3, a, X, E11, {"R": R, "T": T, "path_to_z": [X, R, E11]})


def family_n4(field: FieldSpec, alpha, lam) -> FamilyInstance:
    F = field
    a, l = F.coerce(alpha), F.coerce(lam)
    if not a:
        raise BadParameters("alpha must be nonzero")
    if l in (F.zero, F.one):
        raise BadParameters("lambda must avoid 0 and 1")
    z, o = F.zero, F.one
    la = F.mul(l, a)
    N = Matrix.outer(F, (z, l, la, l), (z, F.neg(a), o, z))
    P = Matrix.outer(F, (z, o, a, z), (z, o, z, F.neg(o)))
    S = Matrix(
        F,
        [
            [z, o, z, z],
            [l, z, z, F.neg(o)],
            [la, z, o, F.neg(a)],
            [l, z, z, z],
        ],
    )
    Sinv = S.inverse()
    X = S @ direct_sum(jordan_cell(F, 3), Matrix.identity(F, 1)) @ Sinv
    E11 = Matrix.unit(F, 4, 1, 1)
    _require(Sinv @ N @ S == Matrix.unit(F, 4, 1, 3), "S^-1 N S = E13")
    _require(Sinv @ P @ S == Matrix.unit(F, 4, 4, 4), "S^-1 P S = E44")
    _require(precedes(X, N) and precedes(X, P), "X precedes N and P")
    _require(N.commutes_with(E11) and P.commutes_with(E11), "N, P commute with E11")
    _require(is_minimal(X), "X is minimal")
    return FamilyInstance(4, a, X, E11, {"N": N, "P": P, "S": S, "path_to_z": [X, N, E11]}, lam=l)


def check_alpha_set(field: FieldSpec, alphas) -> list:
    """In characteristic 2 no two indices may differ by 1."""
    F = field
    vals = [F.coerce(a) for a in alphas]
    if len(set(vals)) != len(vals):
        raise BadParameters("indices must be distinct")
    if F.characteristic == 2:
        for a, b in itertools.combinations(vals, 2):
            if F.sub(a, b) == F.one:
                raise Char2IndexClash(
                    f"indices {F.format(a)} and {F.format(b)} differ by 1 in characteristic 2"
                )
    return vals


def family_n5plus(field: FieldSpec, n: int, alpha, eigs) -> FamilyInstance:
    F = field
    if n < 5:
        raise BadDimension("this family needs n >= 5")
    eigs = [F.coerce(e) for e in eigs]
    if len(eigs) != n:
        raise BadDimension(f"expected {n} eigenvalues")
    if len(set(eigs)) != n:
        raise RepeatedEigenvalues("eigenvalues must be pairwise distinct")
    a = F.coerce(alpha)
    o = F.one
    x = tuple([o] * n)
    f = tuple([F.from_int(2 - n)] + [o] * (n - 2) + [F.zero])
    g = tuple([F.from_int(1 - n)] + [o] * (n - 1))
    _require(not F.dot(f, x) and not F.dot(g, x), "f^T x = g^T x = 0")
    fa = tuple(F.add(p, F.mul(a, q)) for p, q in zip(f, g))
    Ra = Matrix.outer(F, x, fa)
    I = Matrix.identity(F, n)
    S, Sinv = I + Ra, I - Ra
    _require(S @ Sinv == I, "S^-1 = I - R")
    A = Matrix.diag(F, eigs)
    X = S @ A @ Sinv
    e1 = tuple(o if i == 0 else F.zero for i in range(n))
    w = _first_kernel([e1, x, f, g], n, F)
    Z = Matrix.outer(F, w, w)
    if Z.is_zero():
        raise ValidationFailure("w w^T vanished")
    mid = S @ Matrix.unit(F, n, 1, 1) @ Sinv
    path = [X, mid, Z]
    _require(all(P.commutes_with(Q) for P, Q in zip(path, path[1:])), "path to Z commutes")
    _require(is_minimal(X), "X is minimal")
    return FamilyInstance(
        n, a, X, Z, {"R": Ra, "S": S, "A": A, "x": x, "f": f, "g": g, "w": w, "path_to_z": path}
    )


# Lemma 3 and Lemma 4


def lemma3_coefficients(field: FieldSpec, k1: int, k2: int, a, b) -> Matrix:
    """Coefficient matrix of Za = 0, Z^T b = 0 in the unknowns x1..x4."""
    F = field
    k = k1 + k2
    ak1, ak = F.coerce(a[k1 - 1]), F.coerce(a[k - 1])
    b1, bk1 = F.coerce(b[0]), F.coerce(b[k1])
    z = F.zero
    return Matrix(F, [[ak1, ak, z, z], [z, z, ak1, ak], [b1, z, bk1, z], [z, b1, z, bk1]])


def _lemma3_atoms(F, k1, k2):
    k = k1 + k2
    return [Matrix.unit(F, k, 1, k1), Matrix.unit(F, k, 1, k), Matrix.unit(F, k, k1 + 1, k1), Matrix.unit(F, k, k1 + 1, k)]


def lemma3_solve(field: FieldSpec, k1: int, k2: int, a, b) -> Matrix:
    """Z = x1 E_{1,k1} + x2 E_{1,k} + x3 E_{k1+1,k1} + x4 E_{k1+1,k} from the first kernel vector."""
    F = field
    if k1 < 1 or k2 < 1:
        raise BadDimension("cell sizes must be >= 1")
    C = lemma3_coefficients(F, k1, k2, a, b)
    xs = linalg.kernel(C.data, 4, F)[0]
    Z = Matrix.zeros(F, k1 + k2)
    for c, U in zip(xs, _lemma3_atoms(F, k1, k2)):
        if c:
            Z = Z + U * c
    return Z


def _rank_one_factors(R: Matrix):
    F = R.field
    j = next(j for j in range(R.cols) if any(R.data[i][j] for i in range(R.rows)))
    x = R.col(j)
    i = next(i for i in range(R.rows) if x[i])
    inv = F.inv(x[i])
    y = tuple(F.mul(c, inv) for c in R.row(i))
    return tuple(x), y


class Lemma4Context:
    """Per-matrix data for Z with A - Z - R: Jordan basis with two equal-eigenvalue cells first.

    ``atoms`` are the conjugated matrix units; each is checked to commute with A once,
    so every combination produced later commutes with A by linearity.
    """

    def __init__(self, A: Matrix):
        F, n = A.field, A.n
        if is_minimal(A):
            raise MinimalInput("A is minimal")
        spec, chains = jordan_data(A)
        blocks = list(spec.blocks)
        lam = next(e for e in (b[0] for b in blocks) if sum(1 for c in blocks if c[0] == e) >= 2)
        idx = [i for i, b in enumerate(blocks) if b[0] == lam][:2]
        rest = [i for i in range(len(blocks)) if i not in idx]
        order = idx + rest
        cols = [v for i in order for v in chains[i]]
        T = Matrix.from_columns(F, cols)
        self.A, self.F, self.n = A, F, n
        self.k1, self.k2 = blocks[idx[0]][1], blocks[idx[1]][1]
        self.k = self.k1 + self.k2
        self.lam = lam
        self.T, self.Tinv = T, T.inverse()
        self.atoms = []
        for U in _lemma3_atoms(F, self.k1, self.k2):
            full = direct_sum(U, Matrix.zeros(F, n - self.k)) if n > self.k else U
            atom = T @ full @ self.Tinv
            _require(atom.commutes_with(A), "atom commutes with A")
            self.atoms.append(atom)
        self._cache: dict = {}

    def coefficients(self, x, y):
        """Kernel coefficients for R = x y^T, following the three cases of the proof."""
        F, k = self.F, self.k
        xp = self.Tinv.apply(x)
        yp = self.T.T.apply(y)
        x1, y1 = xp[:k], yp[:k]
        e1 = tuple(F.one if i == 0 else F.zero for i in range(k))
        if any(x1) and any(y1):
            a, b = x1, y1
        elif any(y1):
            a, b = e1, y1
        elif any(x1):
            a, b = x1, e1
        else:
            a, b = e1, e1
        key = (a, b)
        xs = self._cache.get(key)
        if xs is None:
            C = lemma3_coefficients(F, self.k1, self.k2, a, b)
            xs = self._cache[key] = tuple(linalg.kernel(C.data, 4, F)[0])
        return xs

    def witness_from_factors(self, x, y) -> Matrix:
        F = self.F
        Z = Matrix.zeros(F, self.n)
        for c, U in zip(self.coefficients(x, y), self.atoms):
            if c:
                Z = Z + U * c
        return Z


def lemma4_witness(A: Matrix, R: Matrix, context: Lemma4Context | None = None) -> Matrix:
    """Non-scalar Z commuting with non-minimal A and rank-one R."""
    ctx = context or Lemma4Context(A)
    if R.rank() != 1:
        raise BadParameters("R must have rank one")
    x, y = _rank_one_factors(R)
    Z = ctx.witness_from_factors(x, y)
    _require(not Z.is_scalar(), "Z is non-scalar")
    _require(Z.commutes_with(A) and Z.commutes_with(R), "Z commutes with A and R")
    return Z


# Lemma 7


def _ones(F, m):
    return [F.one] * m


def lemma7_normal_form(field: FieldSpec, n: int, case: str, k: int = 0):
    """``(A0, X0)`` in the normal forms of the proof.

    ``case`` is ``square-zero`` (rank k), ``idempotent`` (rank k >= n/2) or ``cube-zero``
    (J_3 plus k cells J_2).
    """
    F = field
    z, o = F.zero, F.one
    if case == "square-zero":
        if not 2 <= k <= n // 2:
            raise WrongClass("square-zero rank must lie in [2, n/2]")
        m = 2 * k - 2
        rows = [[z] * n for _ in range(n)]
        for i in range(k - 1):
            rows[2 * i + 1][2 * i] = o
            rows[2 * i + 1][n - 1] = o
        for i in range(m, n - 1):
            rows[i][n - 1] = o
        A0 = Matrix(F, rows)
        if F.is_finite and F.order - 1 < n - 3:
            raise FieldTooSmall("need n-3 distinct nonzero scalars")
        D = Matrix.diag(F, [F.from_int(i) for i in range(1, n - 2)]) if n > 3 else None
        parts = [jordan_cell(F, 2), Matrix.zeros(F, 1)] + ([D] if D is not None else [])
        X0 = direct_sum(*parts)
    elif case == "idempotent":
        if not (n + 1) // 2 <= k <= n - 2:
            raise WrongClass("idempotent rank must lie in [n/2, n-2]")
        W = [[z] * (n - k) for _ in range(k)]
        for i in range(n - k):
            W[i][n - k - 1 - i] = o
        W[k - 1][0] = o
        W[k - 1][n - k - 1] = o
        rows = [[o if i == j else z for j in range(k)] + W[i] for i in range(k)]
        rows += [[z] * n for _ in range(n - k)]
        A0 = Matrix(F, rows)
        parts = [jordan_cell(F, k), Matrix.zeros(F, 1)]
        if n - k - 1 > 0:
            parts.append(Matrix.identity(F, n - k - 1))
        X0 = direct_sum(*parts)
    elif case == "cube-zero":
        if n - 3 - 2 * k < 0:
            raise WrongClass("too many J_2 cells")
        parts = [jordan_cell(F, 3)] + [jordan_cell(F, 2)] * k
        if n - 3 - 2 * k:
            parts.append(Matrix.zeros(F, n - 3 - 2 * k))
        A0 = direct_sum(*parts)
        X0 = direct_sum(Matrix.identity(F, 1), Matrix.zeros(F, 1), jordan_cell(F, n - 2))
    else:
        raise WrongClass(f"unknown case {case!r}")
    return A0, X0


def _similarity(M: Matrix, M0: Matrix) -> Matrix:
    """T with M = T M0 T^-1 (both must share a split Jordan type)."""
    J1, T1 = jordan_form(M)
    J0, T0 = jordan_form(M0)
    if J1 != J0:
        raise ValidationFailure("matrices are not similar")
    return T1 @ T0.inverse()


def lemma7_classify(A: Matrix):
    """``(case, k, M)`` where M is equivalent to A and sits in the named class."""
    F, n = A.field, A.n
    if n < 4:
        raise WrongClass("this lemma needs n >= 4")
    if A.is_scalar():
        raise WrongClass("scalar input")
    if is_maximal(A):
        kind, _, _, M = maximal_decomposition(A)
        r = M.rank()
        if kind == "square-zero":
            if r >= 2:
                return "square-zero", r, M
        else:
            if r < n - r:
                M, r = Matrix.identity(F, n) - M, n - r
            if 2 <= n - r and r <= n - 2:
                return "idempotent", r, M
        raise WrongClass(f"maximal matrix of rank {r} is outside [2, n-2]")
    A2 = A @ A
    if (A2 @ A).is_zero() and A2.rank() == 1:
        spec = jordan_data(A)[0]
        twos = sum(1 for _, s in spec.blocks if s == 2)
        return "cube-zero", twos, A
    raise WrongClass("matrix is neither maximal of rank in [2, n-2] nor cube-zero with rank(A^2) = 1")


def lemma7_witness(A: Matrix):
    """``(X, info)`` with X non-minimal and C(A) ∩ C(X) = scalars, hence d(A, X) >= 3."""
    F, n = A.field, A.n
    case, k, M = lemma7_classify(A)
    A0, X0 = lemma7_normal_form(F, n, case, k)
    T = _similarity(M, A0)
    X = T @ X0 @ T.inverse()
    _require(not is_minimal(X), "X is not minimal")
    _require(not A.commutes_with(X), "AX != XA")
    dim = centralizer_space([A, X]).dim
    _require(dim == 1, "C(A) ∩ C(X) is scalar-only")
    return X, {"case": case, "k": k, "A0": A0, "X0": X0, "T": T, "intersection_dim": dim}


# Lemma 10 and Lemma 11


def _lift_matrix(M: Matrix, F2, embed) -> Matrix:
    return Matrix(F2, [[embed(x) for x in r] for r in M.data])


def lemma10_interpolate(B: Matrix, X: Matrix, Y: Matrix):
    """Minimal M with Y - M - X for minimal semisimple B, X in C(B), Y in C(X).

    Returns ``(M, info)``; when the field has too few elements the matrices are lifted
    to the smallest large-enough extension and ``info["lifted"]`` names it.
    """
    F, n = B.field, B.n
    if not is_minimal(B) or not is_semisimple(B):
        raise NotSemisimpleMinimal("B must be minimal and semisimple")
    if X.is_scalar() or Y.is_scalar():
        raise BadParameters("X and Y must be non-scalar")
    if not (X.commutes_with(B) and Y.commutes_with(X)):
        raise BadParameters("need Y - X - B")
    _, T = jordan_form(B)
    Tinv = T.inverse()
    Xd = Tinv @ X @ T
    dvals = [Xd[i, i] for i in range(n)]
    perm = sorted(range(n), key=lambda i: (F.sort_key(dvals[i]), i))
    P = Matrix.from_columns(F, [tuple(F.one if r == i else F.zero for r in range(n)) for i in perm])
    Q = T @ P
    Qinv = Q.inverse()
    Yq = Qinv @ Y @ Q
    groups, start = [], 0
    sv = [dvals[i] for i in perm]
    for i in range(1, n + 1):
        if i == n or sv[i] != sv[start]:
            groups.append((start, i))
            start = i
    S_blocks, cells = [], []
    for s, e in groups:
        Yi = Yq.submatrix(range(s, e), range(s, e))
        spec_i, chains_i = jordan_data(Yi)
        S_blocks.append(Matrix.from_columns(F, [v for ch in chains_i for v in ch]))
        cells += [size for _, size in spec_i.blocks]
    S = Q @ direct_sum(*S_blocks)
    s = len(cells)
    info = {"cells": cells, "lifted": None}
    F2, embed = F, (lambda a: a)
    if F.is_finite and F.order < s:
        F2, embed = field_lift(F, s)
        info["lifted"] = F2.text()
    S2 = _lift_matrix(S, F2, embed) if F2 is not F else S
    X2 = _lift_matrix(X, F2, embed) if F2 is not F else X
    Y2 = _lift_matrix(Y, F2, embed) if F2 is not F else Y
    S2inv = S2.inverse()
    if F2.is_finite:
        pool = list(F2.elements())
    else:
        pool = [F2.from_int(i) for i in range(s + 2)]
    for nus in itertools.permutations(pool, s):
        core = direct_sum(*(jordan_cell(F2, m, nu) for m, nu in zip(cells, nus)))
        M = S2 @ core @ S2inv
        if M != X2 and M != Y2:
            break
    else:
        raise FieldTooSmall("no admissible eigenvalue assignment")
    _require(is_minimal(M), "M is minimal")
    _require(M.commutes_with(X2) and M.commutes_with(Y2), "M commutes with X and Y")
    info["nu"] = [F2.format(v) for v in nus]
    return M, info


def lemma11_witness(B: Matrix, conjugate: bool = True, budget: int = 1 << 16):
    """``(X, Y, info)`` with Y - X - B and no minimal matrix commuting with both.

    In a Jordan basis of B with a first cell of size n1 >= 2, X = E_{1,n1} and
    Y = E_{1,k} for the least k outside {1, n1}.
    """
    F, n = B.field, B.n
    if n < 3:
        raise BadDimension("need n >= 3")
    if not is_minimal(B):
        raise NotSemisimpleMinimal("B must be minimal")
    if is_semisimple(B):
        raise SemisimpleInput("B is semisimple")
    spec, chains = jordan_data(B)
    blocks = list(spec.blocks)
    first = next(i for i, b in enumerate(blocks) if b[1] >= 2)
    order = [first] + [i for i in range(len(blocks)) if i != first]
    T = Matrix.from_columns(F, [v for i in order for v in chains[i]])
    Jspec = JordanSpec(F, tuple(blocks[i] for i in order))
    is_jordan_already = build_from_spec(Jspec) == B
    if not is_jordan_already and not conjugate:
        raise NotJordan("B is not in Jordan form with a leading cell of size >= 2")
    if is_jordan_already:
        T = Matrix.identity(F, n)
    n1 = Jspec.blocks[0][1]
    k = next(k for k in range(2, n + 1) if k != n1)
    X0, Y0 = Matrix.unit(F, n, 1, n1), Matrix.unit(F, n, 1, k)
    Tinv = T.inverse()
    X, Y = T @ X0 @ Tinv, T @ Y0 @ Tinv
    _require(X.commutes_with(B) and X.commutes_with(Y), "Y - X - B")
    info = {"n1": n1, "k": k, "T": T, "enumerated": None}
    if F.is_finite:
        S = centralizer_space([X, Y])
        if F.order**S.dim <= budget:
            count = 0
            for M in S.elements():
                count += 1
                if min_poly(M).degree == n:
                    raise ValidationFailure("a minimal matrix commutes with X and Y")
            info["enumerated"] = count
            info["intersection_dim"] = S.dim
    return X, Y, info


def _pack(M: Matrix) -> tuple:
    return tuple(sum(1 << j for j, c in enumerate(row) if c) for row in M.data)


def _pmul(P: tuple, Q: tuple) -> tuple:
    out = []
    for row in P:
        acc, j = 0, 0
        while row:
            if row & 1:
                acc ^= Q[j]
            row >>= 1
            j += 1
        out.append(acc)
    return tuple(out)


def _pouter(x: int, y: int, n: int) -> tuple:
    return tuple(y if (x >> i) & 1 else 0 for i in range(n))


def lemma4_exhaustive_gf2(n: int) -> dict:
    """Check the Z of ``Lemma4Context`` for every non-minimal split A in M_n(GF(2)) and every rank-one R.

    Matrices are packed as row bitmasks; each Z is checked against A and R directly.
    """
    from .fields import GF
    from .structure import split_spectrum

    F = GF(2)
    vecs = [v for v in itertools.product((0, 1), repeat=n) if any(v)]
    bits = {v: sum(1 << i for i, c in enumerate(v) if c) for v in vecs}
    ident = tuple(1 << i for i in range(n))
    zero = (0,) * n
    outers = {(x, y): _pouter(bits[x], bits[y], n) for x in vecs for y in vecs}
    stats = {"n": n, "matrices": 0, "eligible": 0, "pairs": 0, "failures": 0}
    for code in itertools.product((0, 1), repeat=n * n):
        stats["matrices"] += 1
        A = Matrix.from_vec(F, n, code)
        if A.is_scalar() or min_poly(A).degree == n or split_spectrum(A) is None:
            continue
        stats["eligible"] += 1
        ctx = Lemma4Context(A)
        Ap = _pack(A)
        atoms = [_pack(U) for U in ctx.atoms]
        for (x, y), R in outers.items():
            coeffs = ctx.coefficients(x, y)
            Z = zero
            for c, U in zip(coeffs, atoms):
                if c:
                    Z = tuple(p ^ q for p, q in zip(Z, U))
            stats["pairs"] += 1
            ok = (
                Z != zero
                and Z != ident
                and _pmul(Z, Ap) == _pmul(Ap, Z)
                and _pmul(Z, R) == _pmul(R, Z)
            )
            if not ok:
                stats["failures"] += 1
    return stats
