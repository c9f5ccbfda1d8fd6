"""Univariate polynomials over a :class:`~commgraph.fields.FieldSpec`.

Coefficients are raw field values, little-endian, with no trailing zeros; the
zero polynomial has an empty coefficient tuple.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd, lcm

from .errors import DivisionByZero, NotMonic
from .fields import FieldSpec


def _trim(cs: list) -> list:
    while cs and not cs[-1]:
        cs.pop()
    return cs


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs):
        self.field = field
        self.coeffs = tuple(_trim([field.coerce(c) for c in coeffs]))

    @classmethod
    def x(cls, field):
        return cls(field, [field.zero, field.one])

    @classmethod
    def const(cls, field, c):
        return cls(field, [field.coerce(c)])

    @classmethod
    def from_roots(cls, field, roots):
        f = cls(field, [field.one])
        for r in roots:
            f = f * cls(field, [field.neg(field.coerce(r)), field.one])
        return f

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    @property
    def lead(self):
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, Poly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"Poly({self.field.text()}, {[self.field.format(c) for c in self.coeffs]})"

    def __str__(self):
        F = self.field
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mon = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            cs = F.format(c)
            if mon and c == F.one:
                terms.append(mon)
            else:
                terms.append(f"{cs}*{mon}" if mon else cs)
        return " + ".join(terms)

    def __add__(self, other):
        F = self.field
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        out = [F.add(a[i] if i < len(a) else F.zero, b[i] if i < len(b) else F.zero) for i in range(n)]
        return Poly(self.field, out)

    def __neg__(self):
        return Poly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        F = self.field
        if not isinstance(other, Poly):
            c = F.coerce(other)
            return Poly(F, [F.mul(a, c) for a in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F, [])
        out = [F.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Poly(F, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        F = self.field
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        r = list(self.coeffs)
        db = other.degree
        inv_lead = F.inv(other.lead)
        q = [F.zero] * max(len(r) - db, 0)
        for d in range(len(r) - 1, db - 1, -1):
            c = r[d]
            if not c:
                continue
            t = F.mul(c, inv_lead)
            q[d - db] = t
            for i, b in enumerate(other.coeffs):
                if b:
                    r[d - db + i] = F.sub(r[d - db + i], F.mul(t, b))
        return Poly(F, q), Poly(F, r[:db] if db > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        inv = self.field.inv(self.lead)
        return Poly(self.field, [self.field.mul(c, inv) for c in self.coeffs])

    def __call__(self, a):
        """Horner evaluation at a raw field value."""
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, a), c)
        return acc

    def derivative(self) -> Poly:
        F = self.field
        return Poly(F, [F.mul(F.from_int(i), c) for i, c in enumerate(self.coeffs)][1:])

    def powmod(self, e: int, mod: Poly) -> Poly:
        result = Poly(self.field, [self.field.one]) % mod
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly(a.field, [])
    return ((a * b) // poly_gcd(a, b)).monic()


def poly_is_irreducible(f: Poly) -> bool:
    """Irreducibility over a finite field via gcd(f, x^(q^i) - x) for i <= deg/2."""
    F = f.field
    if not f.is_monic():
        raise NotMonic("irreducibility test needs a monic polynomial")
    if not F.is_finite:
        raise TypeError("irreducibility test is implemented over finite fields only")
    d = f.degree
    if d < 1:
        raise ValueError("degree must be >= 1")
    x = Poly.x(F)
    h = x % f
    for _ in range(d // 2):
        h = h.powmod(F.order, f)
        if poly_gcd(f, h - x).degree > 0:
            return False
    return True


def irreducible_factor_degrees(f: Poly) -> list[int]:
    """Degrees of the distinct monic irreducible factors of ``f`` over a finite field."""
    F = f.field
    f = f.monic()
    x = Poly.x(F)
    out: list[int] = []
    h = x
    d = 0
    while f.degree > 0:
        d += 1
        h = h.powmod(F.order, f)
        g = poly_gcd(f, h - x)
        if g.degree > 0:
            out += [d] * (g.degree // d)
            while True:
                c = poly_gcd(f, g)
                if c.degree == 0:
                    break
                f = f // c
            if f.degree > 0:
                h = h % f
    return out


def is_irreducible_coeffs(p: int, coeffs) -> bool:
    from .fields import GF

    return poly_is_irreducible(Poly(GF(p), [c % p for c in coeffs]))


def default_modulus(p: int, k: int) -> tuple[int, ...]:
    """Monic irreducible of degree k with the smallest base-p value (c0 least significant)."""
    from .fields import GF

    F = GF(p)
    for v in range(p**k):
        cs = []
        t = v
        for _ in range(k):
            t, c = divmod(t, p)
            cs.append(c)
        if cs[0] == 0:
            continue
        f = Poly(F, cs + [1])
        if poly_is_irreducible(f):
            return tuple(cs + [1])
    raise ValueError(f"no irreducible polynomial of degree {k} over GF({p})")


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def poly_roots_in_field(f: Poly) -> list[tuple[object, int]]:
    """Roots lying in the base field with multiplicities, in canonical element order."""
    F = f.field
    if f.is_zero():
        raise ValueError("zero polynomial has every element as a root")
    if F.is_finite:
        candidates = [a for a in F.elements() if not f(a)]
    else:
        candidates = _rational_root_candidates(f)
    out = []
    for r in sorted(candidates, key=F.sort_key):
        lin = Poly(F, [F.neg(r), F.one])
        g, m = f, 0
        while True:
            q, rem = divmod(g, lin)
            if not rem.is_zero():
                break
            g, m = q, m + 1
        out.append((r, m))
    return out


def _rational_root_candidates(f: Poly) -> list[Fraction]:
    cs = list(f.coeffs)
    den = lcm(*(c.denominator for c in cs))
    ints = [int(c * den) for c in cs]
    roots = []
    shift = 0
    while ints and ints[0] == 0:
        ints.pop(0)
        shift += 1
    if shift:
        roots.append(Fraction(0))
    if len(ints) <= 1:
        return roots
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    a0, an = ints[0], ints[-1]
    g_poly = Poly(f.field, [Fraction(c) for c in ints])
    seen = set()
    for num, dd in itertools.product(_divisors(a0), _divisors(an)):
        for s in (1, -1):
            r = Fraction(s * num, dd)
            if r not in seen:
                seen.add(r)
                if not g_poly(r):
                    roots.append(r)
    return roots


def poly_is_squarefree(f: Poly) -> bool:
    return poly_gcd(f, f.derivative()).degree == 0
