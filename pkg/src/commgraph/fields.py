"""Exact fields: the rationals, prime fields GF(p) and extensions GF(p^k).

A :class:`FieldSpec` both describes a field and performs arithmetic on its raw
element values.  Raw values are what matrices store:

* rationals: :class:`fractions.Fraction` (always reduced, positive denominator),
* GF(p): ``int`` in ``[0, p)``,
* GF(p^k): ``int`` code ``c0 + c1*p + ... + c_{k-1}*p^(k-1)`` of the
  little-endian coefficient vector in the polynomial basis.

:class:`FieldElement` wraps a raw value together with its field for callers who
prefer operator syntax.
"""

from __future__ import annotations

import functools
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from operator import mul
from typing import Iterator, Sequence

from .errors import (
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    NonPrime,
    ParseError,
    ReducibleModulus,
)

# Beyond this order the extension-field add table is not precomputed.
_ADD_TABLE_MAX = 512
# Beyond this order log/exp tables are not built.
_LOG_TABLE_MAX = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class FieldSpec:
    """Base class; use :func:`make_field` to obtain instances."""

    kind: str
    p: int | None = None
    k: int | None = None
    modulus: tuple[int, ...] | None = None
    zero: object
    one: object

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def order(self) -> int | None:
        return None

    @property
    def characteristic(self) -> int:
        return 0

    def __call__(self, x) -> object:
        """Coerce ``x`` (int, Fraction, str, FieldElement or raw value) to a raw value."""
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldMismatch(f"element of {x.field} used in {self}")
            return x.value
        if isinstance(x, str):
            return self.parse(x)
        return self.from_int(x)

    def is_raw(self, x) -> bool:
        if self.kind == "rational":
            return type(x) is Fraction
        return type(x) is int and 0 <= x < self.order

    def coerce(self, x) -> object:
        """Like calling the field, except that a value already in raw form is kept as is.

        In GF(p^k) with k > 1 the int 2 is the raw code of the class of t, not 1 + 1.
        """
        return x if self.is_raw(x) else self(x)

    def element(self, x) -> FieldElement:
        return FieldElement(self, self(x))

    # arithmetic on raw values, overridden per field
    def neg(self, a):
        return self.sub(self.zero, a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def dot(self, xs: Sequence, ys: Sequence):
        acc = self.zero
        for a, b in zip(xs, ys):
            if a and b:
                acc = self.add(acc, self.mul(a, b))
        return acc

    def matmul(self, a_rows, b_rows):
        """Product of two row-major matrices given as sequences of rows."""
        cols = list(zip(*b_rows))
        return tuple(tuple(self.dot(r, c) for c in cols) for r in a_rows)

    def sort_key(self, a):
        raise NotImplementedError

    def elements(self) -> Iterator:
        raise TypeError(f"{self} is infinite")

    def text(self) -> str:
        """Field spec text line, e.g. ``field gf 2 3 [1,1,0,1]``."""
        raise NotImplementedError

    def __repr__(self) -> str:
        return self.text()


class RationalField(FieldSpec):
    kind = "rational"
    zero = Fraction(0)
    one = Fraction(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def from_int(self, x):
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if not a:
            raise DivisionByZero("inverse of zero")
        return 1 / a

    def div(self, a, b):
        if not b:
            raise DivisionByZero("division by zero")
        return a / b

    def dot(self, xs, ys):
        return sum(map(mul, xs, ys), Fraction(0))

    def matmul(self, a_rows, b_rows):
        # Clear denominators, multiply as integers, rebuild fractions once.
        da = _lcm_denominators(a_rows)
        db = _lcm_denominators(b_rows)
        ai = [[int(x * da) for x in r] for r in a_rows]
        bi = list(zip(*[[int(x * db) for x in r] for r in b_rows]))
        den = da * db
        return tuple(
            tuple(Fraction(sum(map(mul, r, c)), den) for c in bi) for r in ai
        )

    def random_element(self, rng: random.Random, bound: int = 5):
        return Fraction(rng.randint(-bound, bound))

    def sort_key(self, a):
        return (a.denominator, a.numerator)

    def parse(self, s: str):
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational entry {s!r}") from exc

    def format(self, a) -> str:
        return str(a)

    def text(self) -> str:
        return "field Q"


def _lcm_denominators(rows) -> int:
    d = 1
    for r in rows:
        for x in r:
            xd = x.denominator
            if d % xd:
                d = d * xd // _gcd(d, xd)
    return d


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


class PrimeField(FieldSpec):
    kind = "finite"
    k = 1
    zero = 0
    one = 1

    def __init__(self, p: int):
        self.p = p
        self._inv = [0] + [pow(a, p - 2, p) for a in range(1, p)] if p < 1 << 16 else None

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("gf", self.p, 1))

    @property
    def order(self):
        return self.p

    @property
    def characteristic(self):
        return self.p

    def from_int(self, x):
        if isinstance(x, Fraction):
            return self.div(x.numerator % self.p, x.denominator % self.p)
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if not a:
            raise DivisionByZero("inverse of zero")
        if self._inv is not None:
            return self._inv[a]
        return pow(a, self.p - 2, self.p)

    def dot(self, xs, ys):
        return sum(map(mul, xs, ys)) % self.p

    def matmul(self, a_rows, b_rows):
        p = self.p
        cols = list(zip(*b_rows))
        return tuple(tuple(sum(map(mul, r, c)) % p for c in cols) for r in a_rows)

    def elements(self):
        return iter(range(self.p))

    def random_element(self, rng: random.Random):
        return rng.randrange(self.p)

    def sort_key(self, a):
        return a

    def coeffs(self, a) -> tuple[int, ...]:
        return (a,)

    def parse(self, s: str):
        s = s.strip()
        try:
            return int(s) % self.p
        except ValueError as exc:
            raise ParseError(f"bad GF({self.p}) entry {s!r}") from exc

    def format(self, a) -> str:
        return str(a)

    def text(self) -> str:
        return f"field gf {self.p} 1"


class ExtensionField(FieldSpec):
    """GF(p^k) in the polynomial basis modulo a monic irreducible ``modulus``."""

    kind = "finite"
    zero = 0
    one = 1

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p, self.k, self.modulus = p, k, tuple(modulus)
        self.q = p**k
        q = self.q
        self._neg = [self._from_coeffs([(-c) % p for c in self.coeffs(a)]) for a in range(q)]
        self._add = None
        if p != 2 and q <= _ADD_TABLE_MAX:
            self._add = [
                [self._add_slow(a, b) for b in range(q)] for a in range(q)
            ]
        self._log = self._exp = None
        if q <= _LOG_TABLE_MAX:
            self._build_log_tables()

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and (other.p, other.k, other.modulus) == (self.p, self.k, self.modulus)
        )

    def __hash__(self):
        return hash(("gf", self.p, self.k, self.modulus))

    @property
    def order(self):
        return self.q

    @property
    def characteristic(self):
        return self.p

    def coeffs(self, a: int) -> tuple[int, ...]:
        p, out = self.p, []
        for _ in range(self.k):
            a, c = divmod(a, p)
            out.append(c)
        return tuple(out)

    def _from_coeffs(self, cs) -> int:
        v = 0
        for c in reversed(cs):
            v = v * self.p + c
        return v

    def _add_slow(self, a, b):
        p = self.p
        return self._from_coeffs(
            [(x + y) % p for x, y in zip(self.coeffs(a), self.coeffs(b))]
        )

    def _mul_slow(self, a, b):
        p, k, m = self.p, self.k, self.modulus
        x, y = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * k - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] = (prod[i + j] + xi * yj) % p
        for d in range(2 * k - 2, k - 1, -1):
            c = prod[d]
            if c:
                for i in range(k + 1):
                    prod[d - k + i] = (prod[d - k + i] - c * m[i]) % p
        return self._from_coeffs(prod[:k])

    def _build_log_tables(self):
        q = self.q
        order_factors = _prime_factors(q - 1)
        for g in range(2, q) if q > 2 else [1]:
            exp = [1] * (q - 1)
            for i in range(1, q - 1):
                exp[i] = self._mul_slow(exp[i - 1], g)
            if all(exp[(q - 1) // r] != 1 for r in order_factors):
                break
        else:
            raise ReducibleModulus("no primitive element found")
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp, self._log = exp, log

    def from_int(self, x):
        if isinstance(x, Fraction):
            return self.div(self.from_int(x.numerator), self.from_int(x.denominator))
        return int(x) % self.p

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self._add is not None:
            return self._add[a][b]
        return self._add_slow(a, b)

    def neg(self, a):
        return self._neg[a]

    def sub(self, a, b):
        return self.add(a, self._neg[b])

    def mul(self, a, b):
        if not a or not b:
            return 0
        if self._log is None:
            return self._mul_slow(a, b)
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a):
        if not a:
            raise DivisionByZero("inverse of zero")
        if self._log is None:
            return pow_elem(self, a, self.q - 2)
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def elements(self):
        return iter(range(self.q))

    def random_element(self, rng: random.Random):
        return rng.randrange(self.q)

    def sort_key(self, a):
        return a

    def parse(self, s: str):
        s = s.strip()
        m = re.fullmatch(r"\[([^\]]*)\]", s)
        if m:
            parts = [t for t in m.group(1).split(":") if t.strip()]
            if len(parts) != self.k:
                raise ParseError(f"expected {self.k} coefficients in {s!r}")
            return self._from_coeffs([int(t) % self.p for t in parts])
        try:
            return int(s) % self.p
        except ValueError as exc:
            raise ParseError(f"bad GF({self.p}^{self.k}) entry {s!r}") from exc

    def format(self, a) -> str:
        return "[" + ":".join(str(c) for c in self.coeffs(a)) + "]"

    def text(self) -> str:
        mod = ",".join(str(c) for c in self.modulus)
        return f"field gf {self.p} {self.k} [{mod}]"


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def pow_elem(F: FieldSpec, a, e: int):
    result, base = F.one, a
    while e:
        if e & 1:
            result = F.mul(result, base)
        base = F.mul(base, base)
        e >>= 1
    return result


QQ = RationalField()


@functools.lru_cache(maxsize=None)
def _make_finite(p: int, k: int, modulus: tuple[int, ...] | None) -> FieldSpec:
    if k == 1:
        return PrimeField(p)
    return ExtensionField(p, k, modulus)


def make_field(kind: str = "finite", p: int | None = None, k: int = 1, modulus=None) -> FieldSpec:
    """Validate parameters and return the (cached) field.

    For ``k > 1`` without an explicit modulus the monic irreducible of degree
    ``k`` with the smallest value ``c0 + c1*p + ... + c_{k-1}*p^(k-1)`` is used.
    """
    if kind in ("rational", "Q", "q"):
        return QQ
    if kind != "finite":
        raise ParseError(f"unknown field kind {kind!r}")
    if p is None or not is_prime(int(p)):
        raise NonPrime(f"{p} is not prime")
    p, k = int(p), int(k)
    if k < 1:
        raise DegreeMismatch("extension degree must be >= 1")
    if k == 1:
        if modulus is not None and len(modulus) not in (0, 2):
            raise DegreeMismatch("a prime field takes no modulus of degree != 1")
        return _make_finite(p, 1, None)
    from .poly import default_modulus, is_irreducible_coeffs

    if modulus is None:
        modulus = default_modulus(p, k)
    modulus = tuple(int(c) % p for c in modulus)
    if len(modulus) != k + 1:
        raise DegreeMismatch(f"modulus has degree {len(modulus) - 1}, expected {k}")
    if modulus[-1] != 1:
        raise DegreeMismatch("modulus must be monic")
    if not is_irreducible_coeffs(p, modulus):
        raise ReducibleModulus(f"modulus {list(modulus)} is reducible over GF({p})")
    return _make_finite(p, k, modulus)


def GF(p: int, k: int = 1, modulus=None) -> FieldSpec:
    return make_field("finite", p, k, modulus)


def parse_field(text: str) -> FieldSpec:
    """Parse ``field Q`` / ``field gf p k [c0,...,ck]`` (leading ``field`` optional)."""
    toks = text.replace("[", " [").split(None)
    if toks and toks[0].lower() == "field":
        toks = toks[1:]
    if not toks:
        raise ParseError("empty field spec")
    if toks[0] in ("Q", "q", "QQ", "rational"):
        return QQ
    if toks[0].lower() != "gf" or len(toks) < 2:
        raise ParseError(f"bad field spec {text!r}")
    try:
        p = int(toks[1])
        k = int(toks[2]) if len(toks) > 2 and not toks[2].startswith("[") else 1
    except ValueError as exc:
        raise ParseError(f"bad field spec {text!r}") from exc
    modulus = None
    m = re.search(r"\[([^\]]*)\]", text)
    if m:
        modulus = [int(t) for t in m.group(1).replace(",", " ").split()]
        if k == 1:
            modulus = None
    return make_field("finite", p, k, modulus)


@dataclass(frozen=True)
class FieldElement:
    """A raw value tagged with its field, with operator overloads."""

    field: FieldSpec
    value: object

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        return self.field(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field(other)
        except Exception:
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return bool(self.value)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def __str__(self):
        return self.field.format(self.value)


def element_arithmetic(a: FieldElement, b: FieldElement | None, op: str):
    """Apply ``op`` in {add, sub, mul, div, inv, neg, eq}; unary ops ignore ``b``."""
    if op == "inv":
        return a.inverse()
    if op == "neg":
        return -a
    if b is None:
        raise ValueError(f"{op} needs two operands")
    if b.field != a.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "eq":
        return a == b
    raise ValueError(f"unknown op {op!r}")


def field_lift(F: FieldSpec, min_order: int):
    """Smallest extension ``GF(p^(k*m))`` of a finite ``F`` with at least ``min_order`` elements.

    Returns ``(F2, embed)`` where ``embed`` maps raw values of ``F`` into ``F2``.
    """
    if not F.is_finite:
        raise TypeError("only finite fields can be lifted")
    m = 1
    while F.order**m < min_order:
        m += 1
    if m == 1:
        return F, lambda a: a
    F2 = GF(F.p, F.k * m)
    if F.k == 1:
        return F2, lambda a: a
    mod = F.modulus
    root = next(
        r for r in F2.elements()
        if not functools.reduce(lambda acc, c: F2.add(F2.mul(acc, r), c), reversed(mod), F2.zero)
    )
    powers = [F2.one]
    for _ in range(F.k - 1):
        powers.append(F2.mul(powers[-1], root))

    def embed(a):
        acc = F2.zero
        for c, r in zip(F.coeffs(a), powers):
            if c:
                acc = F2.add(acc, F2.mul(c, r))
        return acc

    return F2, embed
