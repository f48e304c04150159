"""Exact arithmetic in GF(p), GF(p^2), GF(p^3) and in GF(p)[x].

Extension fields are GF(p)[z]/(m(z)) for a fixed monic irreducible m chosen
once per (p, degree), so two elements are equal exactly when their
coordinate tuples agree.  Elements of different degree may be mixed only when
one of them lies in the prime field.

Polynomials over GF(p) are immutable coefficient tuples, constant term
first, with no trailing zeros (the zero polynomial is the empty tuple).
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterable, Iterator, Sequence


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def _trim(c: Sequence[int]) -> tuple[int, ...]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _raw_mulmod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int) -> tuple[int, ...]:
    # modulus is monic of degree d; a, b have length d
    d = len(modulus) - 1
    prod = [0] * (2 * d - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    for k in range(len(prod) - 1, d - 1, -1):
        c = prod[k] % p
        if c:
            for j in range(d):
                prod[k - d + j] -= c * modulus[j]
    return tuple(x % p for x in prod[:d])


@functools.lru_cache(maxsize=None)
def _defining_polynomial(p: int, d: int) -> tuple[int, ...]:
    """First monic irreducible of degree d: binomials x^d - n first, then lexicographic."""
    if d == 1:
        return (0, 1)

    def has_root(c):
        return any(sum(ci * pow(t, i, p) for i, ci in enumerate(c)) % p == 0 for t in range(p))

    for n in range(1, p):
        c = ((-n) % p,) + (0,) * (d - 1) + (1,)
        if not has_root(c):
            return c
    # degree <= 3: irreducible iff no root in GF(p)
    for tail in itertools.product(range(p), repeat=d):
        c = tuple(reversed(tail)) + (1,)
        if c[0] and not has_root(c):
            return c
    raise FieldError(f"no irreducible polynomial of degree {d} over GF({p})")


class GF:
    """The finite field GF(p^d) for d in {1, 2, 3}; instances are cached."""

    _cache: dict[tuple[int, int], "GF"] = {}

    def __new__(cls, p: int, degree: int = 1):
        key = (p, degree)
        if key in cls._cache:
            return cls._cache[key]
        if degree not in (1, 2, 3):
            raise FieldError("only extension degrees 1, 2, 3 are supported")
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        self = super().__new__(cls)
        self.p = p
        self.degree = degree
        self.order = p ** degree
        self.modulus = _defining_polynomial(p, degree)
        self._sqrt_table = None
        cls._cache[key] = self
        return self

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.degree})" if self.degree > 1 else f"GF({self.p})"

    def __reduce__(self):
        return (GF, (self.p, self.degree))

    def __call__(self, value) -> "GFElement":
        if isinstance(value, GFElement):
            if value.field is self:
                return value
            if value.field.p != self.p:
                raise FieldError("characteristic mismatch")
            if value.field.degree == 1 or value.is_base():
                return GFElement(self, (value.coords[0],) + (0,) * (self.degree - 1))
            raise FieldError(f"{value!r} does not lie in {self!r}")
        if isinstance(value, int):
            return GFElement(self, (value % self.p,) + (0,) * (self.degree - 1))
        coords = tuple(int(v) % self.p for v in value)
        if len(coords) > self.degree:
            raise FieldError("too many coordinates")
        return GFElement(self, coords + (0,) * (self.degree - len(coords)))

    @property
    def zero(self) -> "GFElement":
        return self(0)

    @property
    def one(self) -> "GFElement":
        return self(1)

    @property
    def gen(self) -> "GFElement":
        """The class of z in GF(p)[z]/(m); equals 0 in the prime field."""
        if self.degree == 1:
            return self(0)
        return self((0, 1))

    def elements(self) -> Iterator["GFElement"]:
        """All elements, in lexicographic order of (constant, z, z^2) coordinates."""
        for coords in itertools.product(range(self.p), repeat=self.degree):
            yield GFElement(self, tuple(reversed(coords)))

    def sqrt_table(self) -> dict[tuple[int, ...], "GFElement"]:
        """Map each square to its canonical root (smallest coordinate tuple)."""
        if self._sqrt_table is None:
            table: dict[tuple[int, ...], GFElement] = {}
            for s in self.elements():
                sq = (s * s).coords
                if sq not in table or s.sort_key() < table[sq].sort_key():
                    table[sq] = s
            self._sqrt_table = table
        return self._sqrt_table


class GFElement:
    __slots__ = ("field", "coords")

    def __init__(self, field: GF, coords: tuple[int, ...]):
        self.field = field
        self.coords = coords

    # -- coercion -------------------------------------------------------
    def _other(self, other) -> tuple[GF, tuple[int, ...], tuple[int, ...]] | None:
        f = self.field
        if isinstance(other, int):
            return f, self.coords, f(other).coords
        if not isinstance(other, GFElement):
            return None
        g = other.field
        if g is f:
            return f, self.coords, other.coords
        if g.p != f.p:
            raise FieldError("characteristic mismatch")
        if g.degree == 1 or other.is_base():
            return f, self.coords, f(other.coords[0]).coords
        if f.degree == 1 or self.is_base():
            return g, g(self.coords[0]).coords, other.coords
        raise FieldError(f"cannot combine elements of {f!r} and {g!r}")

    def __add__(self, other):
        r = self._other(other)
        if r is None:
            return NotImplemented
        f, a, b = r
        return GFElement(f, tuple((x + y) % f.p for x, y in zip(a, b)))

    __radd__ = __add__

    def __sub__(self, other):
        r = self._other(other)
        if r is None:
            return NotImplemented
        f, a, b = r
        return GFElement(f, tuple((x - y) % f.p for x, y in zip(a, b)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        p = self.field.p
        return GFElement(self.field, tuple((-x) % p for x in self.coords))

    def __mul__(self, other):
        r = self._other(other)
        if r is None:
            return NotImplemented
        f, a, b = r
        if f.degree == 1:
            return GFElement(f, ((a[0] * b[0]) % f.p,))
        return GFElement(f, _raw_mulmod(a, b, f.modulus, f.p))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "GFElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        f = self.field
        if f.degree == 1:
            return GFElement(f, (pow(self.coords[0], -1, f.p),))
        return self ** (f.order - 2)

    def __truediv__(self, other):
        if isinstance(other, int):
            other = self.field(other)
        if not isinstance(other, GFElement):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    # -- predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_base(self) -> bool:
        """True if the element lies in the prime field."""
        return not any(self.coords[1:])

    def __int__(self) -> int:
        if not self.is_base():
            raise FieldError(f"{self!r} is not in the prime field")
        return self.coords[0]

    def to_base(self) -> "GFElement":
        return GF(self.field.p)(int(self))

    def frobenius(self) -> "GFElement":
        return self ** self.field.p

    def is_square(self) -> bool:
        return self.is_zero() or self ** ((self.field.order - 1) // 2) == 1

    def sort_key(self) -> tuple[int, ...]:
        return self.coords

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_base() and self.coords[0] == other % self.field.p
        if not isinstance(other, GFElement):
            return NotImplemented
        if other.field is self.field:
            return self.coords == other.coords
        if other.field.p != self.field.p:
            return False
        if self.is_base() and other.is_base():
            return self.coords[0] == other.coords[0]
        return False

    def __hash__(self):
        if self.is_base():
            return hash(self.coords[0])
        return hash((self.field.degree, self.coords))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        if self.field.degree == 1 or self.is_base():
            return str(self.coords[0])
        names = ["", "z", "z^2"]
        terms = []
        for i in range(len(self.coords) - 1, -1, -1):
            c = self.coords[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                terms.append(names[i] if c == 1 else f"{c}{names[i]}")
        return "+".join(terms)


def sqrt_in_extension(a: GFElement) -> GFElement | None:
    """Canonical square root of a in its own field or its quadratic extension.

    Elements of GF(p) always have a root in GF(p^2).  For elements of
    GF(p^2) with no root in GF(p^2) the result is None (the root lives in
    GF(p^4), which is not built).  Among the two roots the one with the
    smaller coordinate tuple is returned.
    """
    f = a.field
    if f.degree == 3:
        raise FieldError("square roots are only supported in degrees 1 and 2")
    if f.degree == 1 or a.is_base():
        base = GF(f.p)
        s = base.sqrt_table().get((a.coords[0],))
        if s is not None:
            return s if f.degree == 1 else f(s)
        return GF(f.p, 2).sqrt_table()[GF(f.p, 2)(a.coords[0]).coords]
    return f.sqrt_table().get(a.coords)


class Poly:
    """Dense univariate polynomial over GF(p), constant term first."""

    __slots__ = ("p", "c")

    def __init__(self, p: int, coeffs: Iterable[int] = ()):
        self.p = p
        self.c = _trim([int(x) % p for x in coeffs])

    @classmethod
    def _make(cls, p: int, c: tuple[int, ...]) -> "Poly":
        obj = cls.__new__(cls)
        obj.p = p
        obj.c = c
        return obj

    @classmethod
    def x(cls, p: int) -> "Poly":
        return cls._make(p, (0, 1))

    @classmethod
    def const(cls, p: int, a: int) -> "Poly":
        return cls(p, [a])

    @classmethod
    def from_roots(cls, p: int, roots: Iterable[int]) -> "Poly":
        out = cls.const(p, 1)
        for r in roots:
            out = out * cls(p, [-r, 1])
        return out

    @property
    def degree(self) -> int:
        """Degree, with -1 standing for the zero polynomial."""
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self) -> bool:
        return bool(self.c)

    @property
    def lc(self) -> int:
        return self.c[-1] if self.c else 0

    def __getitem__(self, i: int) -> int:
        return self.c[i] if 0 <= i < len(self.c) else 0

    def __eq__(self, other):
        if isinstance(other, int):
            return self.c == Poly(self.p, [other]).c
        if not isinstance(other, Poly):
            return NotImplemented
        return self.p == other.p and self.c == other.c

    def __hash__(self):
        return hash((self.p, self.c))

    def __lt__(self, other: "Poly"):
        return (len(self.c), tuple(reversed(self.c))) < (len(other.c), tuple(reversed(other.c)))

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.p != self.p:
                raise FieldError("characteristic mismatch")
            return other
        if isinstance(other, int):
            return Poly(self.p, [other])
        if isinstance(other, GFElement):
            return Poly(self.p, [int(other)])
        raise TypeError(f"cannot coerce {other!r} to a polynomial")

    def __add__(self, other):
        o = self._coerce(other)
        n = max(len(self.c), len(o.c))
        p = self.p
        return Poly._make(p, _trim([(self[i] + o[i]) % p for i in range(n)]))

    __radd__ = __add__

    def __neg__(self):
        p = self.p
        return Poly._make(p, tuple((-a) % p for a in self.c))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if not self.c or not o.c:
            return Poly._make(self.p, ())
        p = self.p
        out = [0] * (len(self.c) + len(o.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    out[i + j] += a * b
        return Poly._make(p, _trim([v % p for v in out]))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        result = Poly.const(self.p, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, a: int) -> "Poly":
        p = self.p
        return Poly._make(p, _trim([(a * x) % p for x in self.c]))

    def monic(self) -> "Poly":
        if not self.c:
            return self
        return self.scale(pow(self.lc, -1, self.p))

    def __divmod__(self, other):
        d = self._coerce(other)
        if not d.c:
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        r = list(self.c)
        dd = len(d.c) - 1
        inv = pow(d.c[-1], -1, p)
        q = [0] * max(len(r) - dd, 0)
        for k in range(len(r) - 1, dd - 1, -1):
            coef = (r[k] * inv) % p
            if coef:
                q[k - dd] = coef
                for j in range(dd + 1):
                    r[k - dd + j] = (r[k - dd + j] - coef * d.c[j]) % p
        return Poly._make(p, _trim(q)), Poly._make(p, _trim(r[:dd] if dd else []))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Poly":
        q, r = divmod(self, other)
        if r:
            raise FieldError("division is not exact")
        return q

    def divides(self, other: "Poly") -> bool:
        return not (other % self)

    def derivative(self) -> "Poly":
        p = self.p
        return Poly._make(p, _trim([(i * a) % p for i, a in enumerate(self.c)][1:]))

    def __call__(self, a):
        if isinstance(a, int):
            acc = 0
            for coef in reversed(self.c):
                acc = (acc * a + coef) % self.p
            return acc
        if isinstance(a, GFElement):
            acc = a.field.zero
            for coef in reversed(self.c):
                acc = acc * a + coef
            return acc
        if isinstance(a, Poly):
            acc = Poly._make(self.p, ())
            for coef in reversed(self.c):
                acc = acc * a + coef
            return acc
        raise TypeError(f"cannot evaluate at {a!r}")

    def __repr__(self) -> str:
        return f"Poly({self.p}, {list(self.c)})"

    def __str__(self) -> str:
        if not self.c:
            return "0"
        terms = []
        for i in range(len(self.c) - 1, -1, -1):
            a = self.c[i]
            if not a:
                continue
            if i == 0:
                terms.append(str(a))
                continue
            mono = "x" if i == 1 else f"x^{i}"
            terms.append(mono if a == 1 else f"{a}{mono}")
        return "+".join(terms)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return (g, s, t) with g = s*a + t*b and g monic (or zero)."""
    p = a.p
    r0, r1 = a, b
    s0, s1 = Poly.const(p, 1), Poly(p)
    t0, t1 = Poly(p), Poly.const(p, 1)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    inv = pow(r0.lc, -1, p)
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def resultant(a: Poly, b: Poly) -> int:
    """Resultant of a and b over GF(p) via the Euclidean remainder sequence."""
    p = a.p
    if not a or not b:
        return 0
    res = 1
    while True:
        da, db = a.degree, b.degree
        if db == 0:
            return (res * pow(b.lc, da, p)) % p
        r = a % b
        if not r:
            return 0
        dr = r.degree
        if (da * db) % 2:
            res = -res
        res = (res * pow(b.lc, da - dr, p)) % p
        a, b = b, r


def discriminant(f: Poly) -> int:
    """Discriminant of f up to the sign convention: disc = (-1)^(n(n-1)/2) res(f, f') / lc."""
    n = f.degree
    p = f.p
    r = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return (sign * r * pow(f.lc, -1, p)) % p


def minimal_polynomial(a: GFElement) -> Poly:
    """Minimal polynomial of a over GF(p), from its Frobenius orbit."""
    p = a.field.p
    orbit = [a]
    b = a.frobenius()
    while b != a:
        orbit.append(b)
        b = b.frobenius()
    # expand prod (x - b) with GFElement coefficients, then read off base coords
    coeffs = [a.field.one]
    for r in orbit:
        new = [a.field.zero] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            new[i + 1] = new[i + 1] + c
            new[i] = new[i] - c * r
        coeffs = new
    return Poly(p, [int(c) for c in coeffs])


def poly_ord_at(g: Poly, a) -> int:
    """Largest k with (x - a)^k dividing g over the field of a."""
    if not g:
        raise FieldError("ord undefined for the zero polynomial")
    if isinstance(a, int) or a.field.degree == 1 or a.is_base():
        m = Poly(g.p, [-int(a), 1])
    else:
        # conjugates of a share the multiplicity, so divide by the minimal polynomial
        m = minimal_polynomial(a)
    k = 0
    q, r = divmod(g, m)
    while not r:
        k += 1
        g = q
        q, r = divmod(g, m)
    return k


def poly_roots(g: Poly, extension_degree: int = 1) -> list[GFElement]:
    """All roots of g in GF(p^d), repeated by multiplicity, by exhaustive evaluation."""
    if not g:
        raise FieldError("roots of the zero polynomial are undefined")
    F = GF(g.p, extension_degree)
    out = []
    for a in F.elements():
        if g(a).is_zero():
            out.extend([a] * poly_ord_at(g, a))
    return out


def mobius_numerator(g: Poly, beta: Sequence[int], weight: int) -> Poly:
    """g(-(b02 x + b01)/(b12 x + b02)) * (b12 x + b02)^weight as a polynomial.

    beta is (b01, b02, b12).  Homogenised Horner: with N = -(b02 x + b01)
    and D = b12 x + b02 the result is sum_i g_i N^i D^(n-i), times D^(weight-n).
    """
    p = g.p
    b01, b02, b12 = (int(b) % p for b in beta)
    if b12 == 0 and b02 == 0:
        raise FieldError("Mobius data needs (b12, b02) != (0, 0)")
    if weight < g.degree:
        raise FieldError("weight must be at least deg g")
    if not g:
        return g
    num = Poly(p, [-b01, -b02])
    den = Poly(p, [b02, b12])
    n = g.degree
    acc = Poly.const(p, g.c[n])
    den_pow = Poly.const(p, 1)
    for i in range(n - 1, -1, -1):
        den_pow = den_pow * den
        acc = acc * num + den_pow.scale(g.c[i])
    return acc * den ** (weight - n)


def monic_polys(p: int, degree: int) -> Iterator[Poly]:
    for tail in itertools.product(range(p), repeat=degree):
        yield Poly._make(p, tuple(reversed(tail)) + (1,))


def factor_squarefree_small(f: Poly) -> list[Poly]:
    """Monic irreducible factors of a squarefree f of degree <= 7.

    Trial division by every monic polynomial of degree 1..3 in increasing
    degree; a cofactor of degree <= 7 without factors of degree <= 3 is
    irreducible.
    """
    if f.degree > 7:
        raise FieldError("brute-force factoring is limited to degree 7")
    g = f.monic()
    factors = []
    for d in (1, 2, 3):
        if g.degree < 2 * d:
            break
        for m in monic_polys(f.p, d):
            q, r = divmod(g, m)
            if not r:
                factors.append(m)
                g = q
                if g.degree < 2 * d:
                    break
    if g.degree >= 1:
        factors.append(g)
    return sorted(factors)
