"""Dense exact matrices and the elimination-based operations on them.

Vectorization is row-major throughout: ``vec(X)[i*n + j] == X[i, j]``.  The
Sylvester operator ``L_A`` satisfies ``L_A @ vec(X) == vec(A X - X A)``.
"""

from __future__ import annotations

import itertools
import json
from typing import NamedTuple, Sequence

from . import linalg
from .errors import DivisionByZero, FieldMismatch, ParseError, ShapeMismatch, TooLarge
from .fields import FieldSpec, parse_field
from .poly import Poly, poly_lcm


class Matrix:
    """Immutable ``rows x cols`` matrix of raw values over ``field``."""

    __slots__ = ("field", "rows", "cols", "data", "_hash")

    def __init__(self, field: FieldSpec, data, *, _trusted: bool = False):
        self.field = field
        if _trusted:
            self.data = data
        else:
            self.data = tuple(tuple(field.coerce(x) for x in r) for r in data)
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        if any(len(r) != self.cols for r in self.data):
            raise ShapeMismatch("ragged rows")
        self._hash = None

    # constructors
    @classmethod
    def zeros(cls, field, rows, cols=None):
        cols = rows if cols is None else cols
        z = field.zero
        return cls(field, tuple((z,) * cols for _ in range(rows)), _trusted=True)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), _trusted=True)

    @classmethod
    def scalar(cls, field, n, c):
        c = field.coerce(c)
        z = field.zero
        return cls(field, tuple(tuple(c if i == j else z for j in range(n)) for i in range(n)), _trusted=True)

    @classmethod
    def unit(cls, field, n, i, j):
        """The matrix unit E_ij (1-based indices)."""
        z, o = field.zero, field.one
        return cls(
            field,
            tuple(tuple(o if (r, c) == (i - 1, j - 1) else z for c in range(n)) for r in range(n)),
            _trusted=True,
        )

    @classmethod
    def diag(cls, field, values):
        vals = [field.coerce(v) for v in values]
        n = len(vals)
        z = field.zero
        return cls(field, tuple(tuple(vals[i] if i == j else z for j in range(n)) for i in range(n)), _trusted=True)

    @classmethod
    def outer(cls, field, x, y):
        """Rank-at-most-one matrix x y^T from raw vectors."""
        F = field
        return cls(F, tuple(tuple(F.mul(a, b) for b in y) for a in x), _trusted=True)

    @classmethod
    def from_columns(cls, field, columns):
        return cls(field, tuple(zip(*columns)), _trusted=True)

    @classmethod
    def from_vec(cls, field, n, v):
        v = tuple(v)
        return cls(field, tuple(v[i * n:(i + 1) * n] for i in range(n)), _trusted=True)

    # basic protocol
    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def n(self):
        if self.rows != self.cols:
            raise ShapeMismatch("matrix is not square")
        return self.rows

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i):
        return self.data[i]

    def col(self, j):
        return tuple(r[j] for r in self.data)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.data == other.data
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.data)
        return self._hash

    def __repr__(self):
        return f"Matrix({self.field.text()}, {self.tolist()})"

    def __str__(self):
        return format_matrix(self)

    def tolist(self):
        return [[self.field.format(x) for x in r] for r in self.data]

    def _check(self, other, same_shape=True):
        if not isinstance(other, Matrix):
            raise TypeError("expected a Matrix")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if same_shape and self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")

    # arithmetic
    def __add__(self, other):
        self._check(other)
        F = self.field
        return Matrix(F, tuple(tuple(map(F.add, a, b)) for a, b in zip(self.data, other.data)), _trusted=True)

    def __sub__(self, other):
        self._check(other)
        F = self.field
        return Matrix(F, tuple(tuple(map(F.sub, a, b)) for a, b in zip(self.data, other.data)), _trusted=True)

    def __neg__(self):
        F = self.field
        return Matrix(F, tuple(tuple(map(F.neg, r)) for r in self.data), _trusted=True)

    def __mul__(self, c):
        """Scalar multiplication; use ``@`` for the matrix product."""
        if isinstance(c, Matrix):
            raise TypeError("use @ for matrix products")
        F = self.field
        c = F.coerce(c)
        return Matrix(F, tuple(tuple(F.mul(x, c) for x in r) for r in self.data), _trusted=True)

    __rmul__ = __mul__

    def __matmul__(self, other):
        self._check(other, same_shape=False)
        if self.cols != other.rows:
            raise ShapeMismatch(f"{self.shape} @ {other.shape}")
        return Matrix(self.field, self.field.matmul(self.data, other.data), _trusted=True)

    def apply(self, v) -> tuple:
        """Matrix-vector product on a raw vector."""
        F = self.field
        return tuple(F.dot(r, v) for r in self.data)

    def __pow__(self, e: int):
        result = Matrix.identity(self.field, self.n)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    @property
    def T(self):
        return Matrix(self.field, tuple(zip(*self.data)) if self.data else (), _trusted=True)

    def transpose(self):
        return self.T

    def shift(self, c) -> Matrix:
        """``self - c*I``."""
        F = self.field
        c = F.coerce(c)
        if not c:
            return self
        return Matrix(
            F,
            tuple(tuple(F.sub(x, c) if i == j else x for j, x in enumerate(r)) for i, r in enumerate(self.data)),
            _trusted=True,
        )

    def commutes_with(self, other) -> bool:
        return self @ other == other @ self

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.data)

    def is_scalar(self) -> bool:
        if self.rows != self.cols:
            return False
        c = self.data[0][0] if self.rows else None
        for i, r in enumerate(self.data):
            for j, x in enumerate(r):
                if (x != c) if i == j else x:
                    return False
        return True

    def trace(self):
        F = self.field
        acc = F.zero
        for i in range(self.n):
            acc = F.add(acc, self.data[i][i])
        return acc

    def vec(self) -> tuple:
        return tuple(x for r in self.data for x in r)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
        return Matrix(self.field, tuple(tuple(self.data[i][j] for j in cols) for i in rows), _trusted=True)

    def permute(self, perm: Sequence[int]) -> Matrix:
        """``P^-1 A P`` for the permutation matrix sending e_perm[i] to position i."""
        return Matrix(self.field, tuple(tuple(self.data[i][j] for j in perm) for i in perm), _trusted=True)

    # elimination-based
    def rank(self) -> int:
        return linalg.rank(self.data, self.cols, self.field)

    def rref(self):
        return rref(self)

    def nullspace(self):
        return nullspace(self)

    def det(self):
        return det_and_inverse(self)[0]

    def inverse(self):
        d, inv = det_and_inverse(self)
        if inv is None:
            raise DivisionByZero("matrix is singular")
        return inv

    def char_poly(self) -> Poly:
        return char_poly(self)

    def min_poly(self) -> Poly:
        return min_poly(self)

    def evaluate(self, f: Poly) -> Matrix:
        return poly_eval_matrix(f, self)


def direct_sum(*blocks: Matrix) -> Matrix:
    """Block-diagonal matrix of the arguments, in argument order."""
    if not blocks:
        raise ValueError("need at least one block")
    F = blocks[0].field
    for b in blocks:
        if b.field != F:
            raise FieldMismatch("blocks over different fields")
    total = sum(b.cols for b in blocks)
    out = []
    off = 0
    z = F.zero
    for b in blocks:
        for r in b.data:
            out.append((z,) * off + tuple(r) + (z,) * (total - off - b.cols))
        off += b.cols
    return Matrix(F, tuple(out), _trusted=True)


def mat_arithmetic(A: Matrix, B, op: str):
    """Dispatch for {add, sub, mul, scale, transpose, direct_sum, eq}."""
    if op == "add":
        return A + B
    if op == "sub":
        return A - B
    if op == "mul":
        return A @ B
    if op == "scale":
        return A * B
    if op == "transpose":
        return A.T
    if op == "direct_sum":
        return direct_sum(A, B)
    if op == "eq":
        if A.field != B.field:
            raise FieldMismatch(f"{A.field} vs {B.field}")
        return A == B
    raise ValueError(f"unknown op {op!r}")


class RREFResult(NamedTuple):
    R: Matrix
    rank: int
    pivots: tuple[int, ...]
    transform: Matrix


def rref(M: Matrix) -> RREFResult:
    """Reduced row-echelon form R with ``transform @ M == R``."""
    F = M.field
    m, c = M.rows, M.cols
    aug = [tuple(r) + tuple(F.one if i == j else F.zero for j in range(m)) for i, r in enumerate(M.data)]
    R, piv = linalg.row_reduce(aug, c + m, F)
    piv_left = [p for p in piv if p < c]
    # rows with a left pivot come first, then rows whose left part vanished
    left = tuple(tuple(x[:c]) for x in R)
    right = tuple(tuple(x[c:]) for x in R)
    return RREFResult(
        Matrix(F, left, _trusted=True), len(piv_left), tuple(piv_left), Matrix(F, right, _trusted=True)
    )


def nullspace(M: Matrix) -> list[tuple]:
    """Canonical column basis of ker M (free variables in increasing order)."""
    return [tuple(v) for v in linalg.kernel(M.data, M.cols, M.field)]


def left_nullspace(M: Matrix) -> list[tuple]:
    return nullspace(M.T)


def det_and_inverse(M: Matrix):
    """``(det, inverse or None)``."""
    M.n
    d = linalg.determinant(M.data, M.field)
    if not d:
        return d, None
    return d, rref(M).transform


def det(M: Matrix):
    return linalg.determinant(M.data, M.field)


def all_minors_nonzero(M: Matrix, max_n: int = 8) -> bool:
    """True iff every square submatrix of every size has nonzero determinant."""
    n = M.n
    if n > max_n:
        raise TooLarge(f"all-minors check capped at n={max_n}")
    F = M.field
    for k in range(1, n + 1):
        for rs in itertools.combinations(range(n), k):
            for cs in itertools.combinations(range(n), k):
                sub = [[M.data[i][j] for j in cs] for i in rs]
                if not linalg.determinant(sub, F):
                    return False
    return True


def char_poly(A: Matrix) -> Poly:
    """Characteristic polynomial via Hessenberg reduction and the Hessenberg recurrence."""
    F = A.field
    n = A.n
    H = [list(r) for r in A.data]
    for m in range(1, n - 1):
        for i in range(m, n):
            if H[i][m - 1]:
                break
        else:
            continue
        if i != m:
            H[i], H[m] = H[m], H[i]
            for r in H:
                r[i], r[m] = r[m], r[i]
        t = F.inv(H[m][m - 1])
        for i in range(m + 1, n):
            u = F.mul(H[i][m - 1], t)
            if u:
                H[i] = [F.sub(x, F.mul(u, y)) for x, y in zip(H[i], H[m])]
                for r in H:
                    r[m] = F.add(r[m], F.mul(u, r[i]))
    # p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1}^{k} h_{j,j-1}) p_{i-1}
    polys = [Poly(F, [F.one])]
    x = Poly.x(F)
    for k in range(n):
        pk = (x - Poly(F, [H[k][k]])) * polys[k]
        prod = F.one
        for i in range(k - 1, -1, -1):
            prod = F.mul(prod, H[i + 1][i])
            if not prod:
                break
            c = F.mul(H[i][k], prod)
            if c:
                pk = pk - polys[i] * c
        polys.append(pk)
    return polys[n]


def _krylov_annihilator(A: Matrix, v) -> Poly:
    """Monic minimal polynomial of A relative to the vector v."""
    F = A.field
    n = A.n
    seq = [tuple(v)]
    while linalg.rank(seq, n, F) == len(seq):
        seq.append(A.apply(seq[-1]))
    # v, Av, ..., A^(d-1) v are independent, so the kernel of [v .. A^d v] is one-dimensional
    d = len(seq) - 1
    K = [[seq[j][i] for j in range(d + 1)] for i in range(n)]
    (c,) = linalg.kernel(K, d + 1, F)
    return Poly(F, c).monic()


def min_poly(A: Matrix) -> Poly:
    """lcm over i of the Krylov annihilators of e_i."""
    F = A.field
    n = A.n
    g = Poly(F, [F.one])
    for i in range(n):
        e = [F.zero] * n
        e[i] = F.one
        if g.degree > 0 and not any(poly_eval_vector(g, A, e)):
            continue
        g = poly_lcm(g, _krylov_annihilator(A, e))
        if g.degree == n:
            break
    return g


def poly_eval_vector(f: Poly, A: Matrix, v):
    F = A.field
    acc = [F.zero] * len(v)
    for c in reversed(f.coeffs):
        acc = list(A.apply(acc))
        if c:
            acc = [F.add(a, F.mul(c, x)) for a, x in zip(acc, v)]
    return acc


def poly_eval_matrix(f: Poly, A: Matrix) -> Matrix:
    F = A.field
    n = A.n
    acc = Matrix.zeros(F, n)
    for c in reversed(f.coeffs):
        acc = acc @ A
        if c:
            acc = acc + Matrix.scalar(F, n, c)
    return acc


def sylvester_rows(A: Matrix) -> list[list]:
    """Rows of L_A with L_A vec(X) = vec(AX - XA), row-major vec."""
    F = A.field
    n = A.n
    a = A.data
    z = F.zero
    rows = []
    for i in range(n):
        for j in range(n):
            r = [z] * (n * n)
            for k in range(n):
                c = a[i][k]
                if c:
                    r[k * n + j] = F.add(r[k * n + j], c)
                c = a[k][j]
                if c:
                    r[i * n + k] = F.sub(r[i * n + k], c)
            rows.append(r)
    return rows


def sylvester_rows_gf2(A: Matrix) -> list[int]:
    """Packed GF(2) rows of the Sylvester operator."""
    n = A.n
    a = A.data
    rows = []
    for i in range(n):
        ai = a[i]
        for j in range(n):
            v = 0
            for k in range(n):
                if ai[k]:
                    v ^= 1 << (k * n + j)
                if a[k][j]:
                    v ^= 1 << (i * n + k)
            rows.append(v)
    return rows


def sylvester_operator(A: Matrix) -> Matrix:
    return Matrix(A.field, tuple(tuple(r) for r in sylvester_rows(A)), _trusted=True)


# text and JSON formats


def format_matrix(M: Matrix) -> str:
    lines = [f"{M.rows} {M.cols}"]
    for r in M.data:
        lines.append(" ".join(M.field.format(x) for x in r))
    return "\n".join(lines)


def parse_matrix(text: str, field: FieldSpec | None = None) -> Matrix:
    """Parse the matrix text format; an optional leading ``field ...`` line sets the field."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines:
        raise ParseError("empty matrix text")
    if lines[0].lower().startswith("field"):
        field = parse_field(lines[0])
        lines = lines[1:]
    if field is None:
        raise ParseError("no field given for matrix")
    try:
        r, c = (int(t) for t in lines[0].split())
    except ValueError as exc:
        raise ParseError(f"bad header {lines[0]!r}") from exc
    body = lines[1:]
    if len(body) != r:
        raise ParseError(f"expected {r} rows, got {len(body)}")
    data = []
    for ln in body:
        toks = ln.split()
        if len(toks) != c:
            raise ParseError(f"expected {c} entries in row {ln!r}")
        data.append(tuple(field.parse(t) for t in toks))
    return Matrix(field, tuple(data), _trusted=True)


def matrix_to_json(M: Matrix) -> dict:
    F = M.field
    if F.kind == "finite" and F.k == 1:
        entries = [list(r) for r in M.data]
    else:
        entries = [[F.format(x) for x in r] for r in M.data]
    return {"field": F.text(), "rows": M.rows, "cols": M.cols, "entries": entries}


def matrix_from_json(obj) -> Matrix:
    if isinstance(obj, str):
        obj = json.loads(obj)
    F = parse_field(obj["field"])
    data = tuple(tuple(F.parse(str(x)) for x in r) for r in obj["entries"])
    M = Matrix(F, data, _trusted=True)
    if M.rows != obj["rows"] or (M.rows and M.cols != obj["cols"]):
        raise ParseError("declared shape does not match entries")
    return M
