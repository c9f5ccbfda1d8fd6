"""Eigen-structure: Jordan form with transition matrix, companion matrices, structural predicates."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import linalg
from .errors import NonSplitSpectrum, NotMonic, ParseError, ScalarInput, ValidationFailure
from .fields import FieldSpec
from .matrix import Matrix, char_poly, direct_sum, min_poly
from .poly import Poly, irreducible_factor_degrees, poly_is_squarefree, poly_roots_in_field


@dataclass(frozen=True)
class JordanSpec:
    """Ordered Jordan blocks ``(eigenvalue, size)``; eigenvalues are raw field values."""

    field: FieldSpec
    blocks: tuple

    def __post_init__(self):
        blocks = tuple((self.field.coerce(e), int(s)) for e, s in self.blocks)
        if any(s < 1 for _, s in blocks):
            raise ParseError("Jordan block sizes must be >= 1")
        object.__setattr__(self, "blocks", blocks)

    @property
    def n(self) -> int:
        return sum(s for _, s in self.blocks)

    def eigenvalues(self) -> list:
        return [e for e, _ in self.blocks]

    def canonical(self) -> JordanSpec:
        """Eigenvalues in canonical field order, sizes descending within an eigenvalue."""
        F = self.field
        return JordanSpec(F, tuple(sorted(self.blocks, key=lambda b: (F.sort_key(b[0]), -b[1]))))

    @classmethod
    def parse(cls, field: FieldSpec, text: str) -> JordanSpec:
        """Grammar: comma-separated ``size:eigenvalue`` pairs, e.g. ``1:0,2:1``."""
        blocks = []
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            try:
                size, eig = part.split(":", 1)
                blocks.append((field.parse(eig.strip()), int(size)))
            except ValueError as exc:
                raise ParseError(f"bad Jordan block {part!r}; expected size:eigenvalue") from exc
        if not blocks:
            raise ParseError("empty Jordan specification")
        return cls(field, tuple(blocks))

    def text(self) -> str:
        return ",".join(f"{s}:{self.field.format(e)}" for e, s in self.blocks)


def jordan_cell(field: FieldSpec, k: int, mu=0) -> Matrix:
    """J_k(mu): mu on the diagonal, ones on the superdiagonal."""
    F = field
    mu = F.coerce(mu)
    z, o = F.zero, F.one
    return Matrix(
        F,
        tuple(tuple(mu if i == j else (o if j == i + 1 else z) for j in range(k)) for i in range(k)),
        _trusted=True,
    )


def build_from_spec(spec: JordanSpec) -> Matrix:
    return direct_sum(*(jordan_cell(spec.field, s, e) for e, s in spec.blocks))


def companion(f: Poly) -> Matrix:
    """Ones on the subdiagonal, negated low coefficients in the last column."""
    if not f.is_monic():
        raise NotMonic("companion matrix needs a monic polynomial")
    F, n = f.field, f.degree
    if n < 1:
        raise ValueError("degree must be >= 1")
    z, o = F.zero, F.one
    rows = []
    for i in range(n):
        row = [o if j == i - 1 else z for j in range(n)]
        row[n - 1] = F.neg(f.coeffs[i])
        rows.append(tuple(row))
    return Matrix(F, tuple(rows), _trusted=True)


def split_spectrum(A: Matrix) -> list[tuple[object, int]] | None:
    """Eigenvalues with algebraic multiplicities if char_poly splits over the field, else None."""
    roots = poly_roots_in_field(char_poly(A))
    if sum(m for _, m in roots) != A.n:
        return None
    return roots


def _non_split_error(A: Matrix) -> NonSplitSpectrum:
    f = char_poly(A)
    F = A.field
    roots = poly_roots_in_field(f)
    rest = f
    for r, m in roots:
        for _ in range(m):
            rest = rest // Poly(F, [F.neg(r), F.one])
    if F.is_finite:
        degs = tuple(d for d in irreducible_factor_degrees(rest) if d > 1)
    else:
        degs = (rest.degree,)
    return NonSplitSpectrum(
        f"characteristic polynomial does not split over {F.text()}; "
        f"irreducible factor degrees {list(degs)}",
        factor_degrees=degs,
    )


def _col_rank(vectors, n, F) -> int:
    return linalg.rank([list(v) for v in vectors], n, F) if vectors else 0


def _mat_power_kernel(N: Matrix, j: int) -> list[tuple]:
    P = Matrix.identity(N.field, N.n)
    for _ in range(j):
        P = P @ N
    return [tuple(v) for v in linalg.kernel(P.data, N.n, N.field)]


def jordan_data(A: Matrix):
    """``(spec, chains)`` where each chain lists columns v_1..v_s with (A-λ)v_1 = 0, (A-λ)v_i = v_(i-1)."""
    F, n = A.field, A.n
    roots = split_spectrum(A)
    if roots is None:
        raise _non_split_error(A)
    blocks, chains = [], []
    for lam, mult in roots:
        N = A.shift(lam)
        kers = [[]]
        while len(kers[-1]) < mult:
            kers.append(_mat_power_kernel(N, len(kers)))
        s = len(kers) - 1
        kers.append(kers[-1])
        for j in range(s, 0, -1):
            base = list(kers[j - 1]) + [N.apply(v) for v in kers[j + 1]]
            r = _col_rank(base, n, F)
            for v in kers[j]:
                r2 = _col_rank(base + [v], n, F)
                if r2 > r:
                    base.append(v)
                    r = r2
                    chain = [v]
                    for _ in range(j - 1):
                        chain.append(N.apply(chain[-1]))
                    chains.append(chain[::-1])
                    blocks.append((lam, j))
    return JordanSpec(F, tuple(blocks)), chains


def jordan_form(A: Matrix) -> tuple[Matrix, Matrix]:
    """``(J, T)`` with ``T^-1 A T = J``; J follows the canonical Jordan spec."""
    spec, chains = jordan_data(A)
    T = Matrix.from_columns(A.field, [v for ch in chains for v in ch])
    J = build_from_spec(spec)
    if A @ T != T @ J or T.det() == A.field.zero:
        raise ValidationFailure("Jordan transition check failed")
    return J, T


def jordan_spec(A: Matrix) -> JordanSpec:
    return jordan_data(A)[0]


def _require_nonscalar(A: Matrix):
    if A.is_scalar():
        raise ScalarInput("predicate is defined for non-scalar matrices")


def is_minimal(A: Matrix) -> bool:
    _require_nonscalar(A)
    return min_poly(A).degree == A.n


def _splits(f: Poly) -> bool:
    return sum(m for _, m in poly_roots_in_field(f)) == f.degree


def is_maximal(A: Matrix) -> bool:
    _require_nonscalar(A)
    f = min_poly(A)
    return f.degree == 2 and _splits(f)


def maximal_decomposition(A: Matrix):
    """For maximal A return ``(kind, alpha, beta, M)`` with A = alpha I + beta M, M idempotent or square-zero."""
    if not is_maximal(A):
        raise ValueError("matrix is not maximal")
    F = A.field
    roots = poly_roots_in_field(min_poly(A))
    if len(roots) == 1:
        a = roots[0][0]
        return "square-zero", a, F.one, A.shift(a)
    (a, _), (b, _) = roots
    beta = F.sub(b, a)
    return "idempotent", a, beta, A.shift(a) * F.inv(beta)


def semisimple_status(A: Matrix) -> tuple[bool, list[str]]:
    f = min_poly(A)
    if not poly_is_squarefree(f):
        return False, []
    if _splits(f):
        return True, []
    return False, ["squarefree, non-split"]


def is_semisimple(A: Matrix) -> bool:
    return semisimple_status(A)[0]


def rank_one_eigenvalue(A: Matrix):
    """Least eigenvalue λ (canonical order) in the field with rank(A - λI) = 1, or None."""
    for lam, _ in poly_roots_in_field(char_poly(A)):
        if A.shift(lam).rank() == 1:
            return lam
    return None


def is_rank_one_equivalent(A: Matrix) -> bool:
    _require_nonscalar(A)
    return rank_one_eigenvalue(A) is not None


@dataclass
class StructureReport:
    n: int
    minimal: bool
    maximal: bool
    semisimple: bool
    rank_one_equiv: bool
    min_poly_degree: int
    min_poly: str
    char_poly: str
    jordan: str | None
    notes: list = dc_field(default_factory=list)

    def to_json(self) -> dict:
        return dict(self.__dict__)


def structure_report(A: Matrix) -> StructureReport:
    _require_nonscalar(A)
    f = min_poly(A)
    notes = []
    ss, ss_notes = semisimple_status(A)
    notes += ss_notes
    if f.degree == 2 and not _splits(f):
        notes.append("minimal polynomial is an irreducible quadratic; maximality not classified")
    try:
        jordan = jordan_spec(A).text()
    except NonSplitSpectrum as exc:
        jordan = None
        notes.append(f"no Jordan form over the field: factor degrees {list(exc.factor_degrees)}")
    return StructureReport(
        n=A.n,
        minimal=f.degree == A.n,
        maximal=f.degree == 2 and _splits(f),
        semisimple=ss,
        rank_one_equiv=rank_one_eigenvalue(A) is not None,
        min_poly_degree=f.degree,
        min_poly=str(f),
        char_poly=str(char_poly(A)),
        jordan=jordan,
        notes=notes,
    )
