"""Arithmetic in GF(q) and GF(q^m).

Elements of GF(q^m) are plain Python ints holding the base-q digits of the
coordinate vector with respect to the polynomial basis (1, a, ..., a^(m-1)),
constant term in the least significant digit.  For q = 2 that is the usual
bit-packed representation.  Elements of the prime subfield are the ints
0..q-1, so base-field scalars need no conversion.

:class:`GF` does the arithmetic on ints; :class:`FieldElement` is a thin
operator-overloading wrapper for interactive use and serialization.
"""

from __future__ import annotations

import itertools
import json
from functools import lru_cache

SUPPORTED_Q = (2, 3, 5)
MAX_M = 32
# log/exp tables are built when the field is at most this large
TABLE_LIMIT = 1 << 20
# full addition tables for odd q
ADD_TABLE_LIMIT = 1024


class FieldMismatchError(ValueError):
    pass


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % p for p in range(2, int(q**0.5) + 1))


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# dense polynomials over GF(q), coefficient lists with constant term first


def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _psub(a, b, q):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % q for i in range(n)]
    return _ptrim(out)


def _pmul(a, b, q):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % q
    return _ptrim(out)


def _pdivmod(a, b, q):
    a = list(a)
    inv_lead = pow(b[-1], q - 2, q)
    quo = [0] * max(len(a) - len(b) + 1, 0)
    while len(_ptrim(a)) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] * inv_lead % q
        quo[shift] = c
        for i, y in enumerate(b):
            a[i + shift] = (a[i + shift] - c * y) % q
    return _ptrim(quo), a


def _pmod(a, b, q):
    return _pdivmod(a, b, q)[1]


def _pgcd(a, b, q):
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a, b = b, _pmod(a, b, q)
    return a


def is_irreducible(coeffs, q: int) -> bool:
    """Rabin's test for a monic polynomial given constant term first."""
    f = _ptrim(list(coeffs))
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    if f[0] == 0:
        return False
    # x^(q^m) == x mod f
    xq = [0, 1]
    for _ in range(m):
        xq = _ppow(xq, q, f, q)
    if _psub(xq, [0, 1], q):
        return False
    for p in _prime_factors(m):
        h = [0, 1]
        for _ in range(m // p):
            h = _ppow(h, q, f, q)
        g = _pgcd(f, _psub(h, [0, 1], q), q)
        if len(g) > 1:
            return False
    return True


def _ppow(a, e: int, f, q: int):
    """a^e mod f."""
    result, base = [1], list(a)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, q), f, q)
        base = _pmod(_pmul(base, base, q), f, q)
        e >>= 1
    return result


@lru_cache(maxsize=None)
def default_modulus(q: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m.

    Candidates are ordered by their coefficient tuple read from the constant
    term upward; the returned tuple has length m + 1 and ends with 1.
    """
    if m == 1:
        return (0, 1)
    # a zero constant term means x divides the candidate
    for low in itertools.product(range(1, q), *[range(q)] * (m - 1)):
        cand = low + (1,)
        if is_irreducible(cand, q):
            return cand
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


# ---------------------------------------------------------------------------


class GF:
    """The extension field GF(q^m) over the prime field GF(q)."""

    def __init__(self, q: int, m: int, modulus=None):
        if not is_prime(q):
            raise ValueError(f"q={q} is not prime")
        if q not in SUPPORTED_Q:
            raise ValueError(f"q={q} not supported (use one of {SUPPORTED_Q})")
        if not 1 <= m <= MAX_M:
            raise ValueError(f"m={m} outside 1..{MAX_M}")
        if modulus is None:
            modulus = default_modulus(q, m)
        modulus = tuple(int(c) % q for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree m")
        if not is_irreducible(modulus, q):
            raise ValueError(f"modulus {modulus} is reducible over GF({q})")
        self.q = q
        self.m = m
        self.modulus = modulus
        self.order = q**m
        self._powers = [q**i for i in range(m + 1)]
        self._exp = self._log = None
        self._add_table = None
        # x^m = -(c0 + c1 x + ... ) mod f, used when reducing products
        self._reduce = [(-c) % q for c in modulus[:-1]]
        if q == 2:
            self._modint = sum(c << i for i, c in enumerate(modulus))
        if self.order <= TABLE_LIMIT and m > 1:
            self._build_tables()
        if q != 2 and self.order <= ADD_TABLE_LIMIT:
            o = self.order
            self._add_table = [
                [self._add_digits(a, b) for b in range(o)] for a in range(o)
            ]

    # -- identity -----------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, GF) and (self.q, self.m, self.modulus) == (
            other.q,
            other.m,
            other.modulus,
        )

    def __hash__(self):
        return hash((self.q, self.m, self.modulus))

    def __repr__(self):
        return f"GF({self.q}^{self.m})"

    def to_dict(self) -> dict:
        return {"q": self.q, "m": self.m, "modulus": list(self.modulus)}

    @classmethod
    def from_dict(cls, d: dict) -> "GF":
        return field(d["q"], d["m"], tuple(d["modulus"]))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    # -- coordinates ----------------------------------------------------------

    def coords(self, a: int) -> list[int]:
        if self.q == 2:
            return [(a >> i) & 1 for i in range(self.m)]
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.q)
            out.append(r)
        return out

    def from_coords(self, coords) -> int:
        if len(coords) != self.m:
            raise ValueError(f"expected {self.m} coordinates, got {len(coords)}")
        if self.q == 2:
            return sum((c & 1) << i for i, c in enumerate(coords))
        return sum((c % self.q) * p for c, p in zip(coords, self._powers))

    def format(self, a: int) -> str:
        """Little-endian coordinate string, constant term first."""
        return "".join(str(c) for c in self.coords(a))

    def parse(self, s: str) -> int:
        return self.from_coords([int(ch) for ch in s.strip()])

    def elements(self):
        return range(self.order)

    def basis(self) -> list[int]:
        """The polynomial basis 1, a, ..., a^(m-1)."""
        return self._powers[: self.m]

    @property
    def alpha(self) -> int:
        """Root of the modulus (0 when m == 1, where the modulus is x + c)."""
        if self.m == 1:
            return (-self.modulus[0]) % self.q
        return self.q

    # -- additive structure -------------------------------------------------

    def _add_digits(self, a: int, b: int, sign: int = 1) -> int:
        q, out, p = self.q, 0, 1
        while a or b:
            a, x = divmod(a, q)
            b, y = divmod(b, q)
            out += ((x + sign * y) % q) * p
            p *= q
        return out

    def add(self, a: int, b: int) -> int:
        if self.q == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_digits(a, b)

    def sub(self, a: int, b: int) -> int:
        if self.q == 2:
            return a ^ b
        return self._add_digits(a, b, -1)

    def neg(self, a: int) -> int:
        if self.q == 2:
            return a
        return self._add_digits(0, a, -1)

    def scale(self, c: int, a: int) -> int:
        """Multiply a by the base-field scalar c."""
        c %= self.q
        if c == 0:
            return 0
        if c == 1:
            return a
        q, out, p = self.q, 0, 1
        while a:
            a, x = divmod(a, q)
            out += (x * c % q) * p
            p *= q
        return out

    # -- multiplicative structure -------------------------------------------

    def _build_tables(self):
        n = self.order - 1
        factors = _prime_factors(n) if n > 1 else []
        for g in range(2, self.order):
            if all(self._pow_slow(g, n // p) != 1 for p in factors):
                break
        else:  # pragma: no cover
            raise AssertionError("no primitive element")
        exp = [0] * (2 * n)
        log = [0] * self.order
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._mul_slow(x, g)
        for i in range(n, 2 * n):
            exp[i] = exp[i - n]
        self.generator = g
        self._exp, self._log = exp, log

    def _mul_slow(self, a: int, b: int) -> int:
        if self.q == 2:
            m, mod = self.m, self._modint
            out = 0
            while b:
                if b & 1:
                    out ^= a
                b >>= 1
                a <<= 1
                if (a >> m) & 1:
                    a ^= mod
            return out
        q, m = self.q, self.m
        x, y = self.coords(a), self.coords(b)
        prod = [0] * (2 * m - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] += xi * yj
        red = self._reduce
        for i in range(2 * m - 2, m - 1, -1):
            c = prod[i] % q
            if c:
                for j in range(m):
                    prod[i - m + j] += c * red[j]
        return sum((prod[i] % q) * self._powers[i] for i in range(m))

    def _pow_slow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul_slow(result, a)
            a = self._mul_slow(a, a)
            e >>= 1
        return result

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_slow(a, b)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self._log is not None:
            return self._exp[(self._log[a] * e) % (self.order - 1)]
        return self._pow_slow(a, e % (self.order - 1) if e else 0)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        if self._log is not None:
            n = self.order - 1
            return self._exp[(n - self._log[a]) % n]
        return self.inv_euclid(a)

    def inv_euclid(self, a: int) -> int:
        """Inverse by the extended Euclidean algorithm on polynomials."""
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        q = self.q
        r0, r1 = list(self.modulus), _ptrim(self.coords(a))
        s0, s1 = [], [1]
        while len(r1) > 1:
            quo, rem = _pdivmod(r0, r1, q)
            r0, r1 = r1, rem
            s0, s1 = s1, _psub(s0, _pmul(quo, s1, q), q)
        # r1 is a nonzero constant
        c = pow(r1[0], q - 2, q)
        s = [x * c % q for x in s1]
        s = _pmod(s, list(self.modulus), q) if len(s) > self.m else s
        return self.from_coords(s + [0] * (self.m - len(s)))

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def frob(self, a: int, i: int = 1) -> int:
        """a^(q^i); negative i gives the inverse Frobenius."""
        i %= self.m
        if i == 0 or a == 0:
            return a
        if self._log is not None:
            n = self.order - 1
            return self._exp[(self._log[a] * self._powers[i]) % n]
        for _ in range(i):
            a = self._pow_slow(a, self.q)
        return a

    def trace(self, a: int) -> int:
        """Absolute trace to GF(q); the result is an int in 0..q-1."""
        acc = 0
        for i in range(self.m):
            acc = self.add(acc, self.frob(a, i))
        assert acc < self.q, "trace left the base field"
        return acc

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, str):
            value = self.parse(value)
        if not 0 <= value < self.order:
            raise ValueError(f"{value} is not an element of {self!r}")
        return FieldElement(self, value)


@lru_cache(maxsize=None)
def field(q: int, m: int, modulus: tuple | None = None) -> GF:
    """Cached field constructor; repeated calls return the same object."""
    return GF(q, m, modulus)


class FieldElement:
    """An element of a :class:`GF` with overloaded arithmetic."""

    __slots__ = ("field", "value")

    def __init__(self, field: GF, value: int):
        self.field = field
        self.value = value

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")
            return other.value
        if isinstance(other, int):
            return other % self.field.q  # base-field scalar
        return NotImplemented

    def _wrap(self, v):
        return FieldElement(self.field, v)

    def __add__(self, other):
        return self._wrap(self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return self._wrap(self.field.sub(self._other(other), self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __mul__(self, other):
        return self._wrap(self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._wrap(self.field.div(self.value, self._other(other)))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.value, e))

    def inverse(self):
        return self._wrap(self.field.inv(self.value))

    def frobenius(self, i: int = 1):
        return self._wrap(self.field.frob(self.value, i))

    def trace(self) -> int:
        return self.field.trace(self.value)

    @property
    def coords(self) -> list[int]:
        return self.field.coords(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"{self.field!r}('{self}')"
