"""Row reduction engines on plain row lists of raw field values.

Every engine produces the same unique reduced row-echelon form; pivots are
chosen deterministically (leftmost nonzero column, topmost eligible row).  The
engine is picked from the field:

* GF(2): rows packed into Python ints, XOR elimination;
* GF(p): integer rows reduced mod p;
* Q: fraction-free integer elimination, normalized to fractions at the end;
* GF(p^k): generic elimination through the field's table arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .fields import FieldSpec


def is_gf2(F: FieldSpec) -> bool:
    return F.kind == "finite" and F.p == 2 and F.k == 1


def pack_row(row) -> int:
    v = 0
    for j, x in enumerate(row):
        if x:
            v |= 1 << j
    return v


def unpack_row(v: int, ncols: int) -> list[int]:
    return [(v >> j) & 1 for j in range(ncols)]


def rref_gf2_packed(rows: list[int], ncols: int) -> tuple[list[int], list[int]]:
    """RREF of bit-packed GF(2) rows (bit j = column j)."""
    rows = [r for r in rows if r]
    pivots: list[int] = []
    rank = 0
    for c in range(ncols):
        bit = 1 << c
        for i in range(rank, len(rows)):
            if rows[i] & bit:
                break
        else:
            continue
        rows[rank], rows[i] = rows[i], rows[rank]
        piv = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i] & bit:
                rows[i] ^= piv
        pivots.append(c)
        rank += 1
        if rank == len(rows):
            break
    return rows[:rank], pivots


def _rref_gf2(rows, ncols):
    packed, pivots = rref_gf2_packed([pack_row(r) for r in rows], ncols)
    return [unpack_row(v, ncols) for v in packed], pivots


def _rref_modp(rows, ncols, F):
    p = F.p
    rows = [list(r) for r in rows if any(r)]
    pivots: list[int] = []
    rank = 0
    for c in range(ncols):
        for i in range(rank, len(rows)):
            if rows[i][c]:
                break
        else:
            continue
        rows[rank], rows[i] = rows[i], rows[rank]
        piv = rows[rank]
        inv = F.inv(piv[c])
        if inv != 1:
            piv = [x * inv % p for x in piv]
            rows[rank] = piv
        for i in range(len(rows)):
            if i != rank:
                f = rows[i][c]
                if f:
                    r = rows[i]
                    rows[i] = [(x - f * y) % p for x, y in zip(r, piv)]
        pivots.append(c)
        rank += 1
        if rank == len(rows):
            break
    return rows[:rank], pivots


def _row_to_ints(r) -> list[int]:
    den = 1
    for x in r:
        d = x.denominator
        if den % d:
            den = den * d // gcd(den, d)
    return [int(x * den) for x in r]


def _primitive(r: list[int]) -> list[int]:
    g = 0
    for x in r:
        if x:
            g = gcd(g, x)
            if g == 1:
                return r
    if g > 1:
        return [x // g for x in r]
    return r


def _rref_rational(rows, ncols):
    rows = [_primitive(_row_to_ints(r)) for r in rows if any(r)]
    pivots: list[int] = []
    rank = 0
    for c in range(ncols):
        for i in range(rank, len(rows)):
            if rows[i][c]:
                break
        else:
            continue
        rows[rank], rows[i] = rows[i], rows[rank]
        piv = rows[rank]
        a = piv[c]
        for i in range(len(rows)):
            if i != rank:
                b = rows[i][c]
                if b:
                    g = gcd(a, b)
                    ma, mb = a // g, b // g
                    rows[i] = _primitive([ma * x - mb * y for x, y in zip(rows[i], piv)])
        pivots.append(c)
        rank += 1
        if rank == len(rows):
            break
    out = []
    for r, c in zip(rows[:rank], pivots):
        a = r[c]
        out.append([Fraction(x, a) for x in r])
    return out, pivots


def _rref_generic(rows, ncols, F):
    rows = [list(r) for r in rows if any(r)]
    pivots: list[int] = []
    rank = 0
    for c in range(ncols):
        for i in range(rank, len(rows)):
            if rows[i][c]:
                break
        else:
            continue
        rows[rank], rows[i] = rows[i], rows[rank]
        inv = F.inv(rows[rank][c])
        piv = [F.mul(x, inv) for x in rows[rank]]
        rows[rank] = piv
        for i in range(len(rows)):
            if i != rank:
                f = rows[i][c]
                if f:
                    rows[i] = [F.sub(x, F.mul(f, y)) if y else x for x, y in zip(rows[i], piv)]
        pivots.append(c)
        rank += 1
        if rank == len(rows):
            break
    return rows[:rank], pivots


def row_reduce(rows, ncols: int, F: FieldSpec, engine: str | None = None):
    """Return ``(nonzero RREF rows, pivot columns)`` of the given rows.

    ``engine`` forces a path (``"gf2"``, ``"modp"``, ``"rational"``, ``"generic"``);
    by default the fastest applicable one is used.
    """
    if engine is None:
        if is_gf2(F):
            engine = "gf2"
        elif F.kind == "finite" and F.k == 1:
            engine = "modp"
        elif F.kind == "rational":
            engine = "rational"
        else:
            engine = "generic"
    if engine == "gf2":
        return _rref_gf2(rows, ncols)
    if engine == "modp":
        return _rref_modp(rows, ncols, F)
    if engine == "rational":
        return _rref_rational(rows, ncols)
    return _rref_generic(rows, ncols, F)


def kernel_from_rref(R, pivots, ncols: int, F: FieldSpec) -> list[list]:
    """Canonical nullspace basis: one vector per free column, increasing order."""
    pivset = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [F.zero] * ncols
        v[f] = F.one
        for r, c in zip(R, pivots):
            if r[f]:
                v[c] = F.neg(r[f])
        out.append(v)
    return out


def kernel(rows, ncols: int, F: FieldSpec, engine: str | None = None) -> list[list]:
    R, pivots = row_reduce(rows, ncols, F, engine)
    return kernel_from_rref(R, pivots, ncols, F)


def kernel_gf2_packed(rows: list[int], ncols: int) -> list[int]:
    """Canonical nullspace basis of packed GF(2) rows, returned packed."""
    R, pivots = rref_gf2_packed(rows, ncols)
    pivset = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivset:
            continue
        bit = 1 << f
        v = bit
        for r, c in zip(R, pivots):
            if r & bit:
                v |= 1 << c
        out.append(v)
    return out


def rank(rows, ncols: int, F: FieldSpec) -> int:
    return len(row_reduce(rows, ncols, F)[1])


def reduce_vector(v, basis, pivots, F: FieldSpec) -> list:
    """Reduce ``v`` against RREF ``basis``; zero result means membership."""
    v = list(v)
    for b, c in zip(basis, pivots):
        f = v[c]
        if f:
            v = [F.sub(x, F.mul(f, y)) if y else x for x, y in zip(v, b)]
    return v


def determinant(rows, F: FieldSpec):
    """Determinant by Gaussian elimination with field division."""
    n = len(rows)
    if F.kind == "rational":
        return _det_bareiss([_row_to_ints(r) for r in rows], [_den(r) for r in rows])
    a = [list(r) for r in rows]
    det = F.one
    for c in range(n):
        for i in range(c, n):
            if a[i][c]:
                break
        else:
            return F.zero
        if i != c:
            a[c], a[i] = a[i], a[c]
            det = F.neg(det)
        piv = a[c][c]
        det = F.mul(det, piv)
        inv = F.inv(piv)
        for i in range(c + 1, n):
            f = a[i][c]
            if f:
                t = F.mul(f, inv)
                a[i] = [F.sub(x, F.mul(t, y)) if y else x for x, y in zip(a[i], a[c])]
    return det


def _den(r) -> int:
    den = 1
    for x in r:
        d = x.denominator
        if den % d:
            den = den * d // gcd(den, d)
    return den


def _det_bareiss(a: list[list[int]], dens: list[int]) -> Fraction:
    n = len(a)
    scale = 1
    for d in dens:
        scale *= d
    sign = 1
    prev = 1
    for c in range(n - 1):
        for i in range(c, n):
            if a[i][c]:
                break
        else:
            return Fraction(0)
        if i != c:
            a[c], a[i] = a[i], a[c]
            sign = -sign
        pc = a[c][c]
        for i in range(c + 1, n):
            ai = a[i]
            aic = ai[c]
            ai_new = ai[:]
            for j in range(c + 1, n):
                ai_new[j] = (pc * ai[j] - aic * a[c][j]) // prev
            ai_new[c] = 0
            a[i] = ai_new
        prev = pc
    if n == 0:
        return Fraction(1)
    return Fraction(sign * a[n - 1][n - 1], scale)
