"""Linearized polynomials sum_i c_i x^(q^i) over GF(q^m).

The ring operation is composition: ``p.compose(r)`` is the polynomial
x -> p(r(x)).  Only right division is provided, a = Q o b + R, which is
what the key-equation solver in :mod:`rankcode.gabidulin` needs.
"""

from __future__ import annotations

import math

from rankcode import kernels, linalg
from rankcode.gfq import GF

ZERO_DEGREE = -math.inf


class LinearizedPoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF, coeffs=()):
        self.field = field
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = c

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, F: GF) -> "LinearizedPoly":
        return cls(F)

    @classmethod
    def identity(cls, F: GF) -> "LinearizedPoly":
        return cls(F, [1])

    @classmethod
    def monomial(cls, F: GF, i: int, c: int = 1) -> "LinearizedPoly":
        """c * x^(q^i)."""
        return cls(F, [0] * i + [c])

    @classmethod
    def subspace_poly(cls, F: GF, elements) -> "LinearizedPoly":
        """Monic polynomial whose roots are exactly the GF(q)-span of ``elements``."""
        p = cls.identity(F)
        for b in elements:
            c = p(b)
            if c == 0:
                continue  # b already in the span
            # x^q - c^(q-1) x kills GF(q)*c
            factor = cls(F, [F.neg(F.pow(c, F.q - 1)), 1])
            p = factor.compose(p)
        return p

    # -- basic properties -------------------------------------------------------

    @property
    def q_degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other):
        if not isinstance(other, LinearizedPoly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, tuple(self.coeffs)))

    def __repr__(self):
        return f"LinearizedPoly({self})"

    def __str__(self):
        F = self.field
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append(F.format(c) if i == 0 else f"{F.format(c)}·X^[{i}]")
        return " + ".join(terms)

    # -- arithmetic -------------------------------------------------------------

    def __call__(self, a: int) -> int:
        """Evaluate at the field element a."""
        F = self.field
        tab = kernels.field_tables(F)
        if tab is not None:
            return kernels.gf2m_lin_eval(tab, self.coeffs, a, F.m)
        acc = 0
        x = a
        for c in self.coeffs:
            if c and x:
                acc = F.add(acc, F.mul(c, x))
            x = F.frob(x, 1)
        return acc

    def __add__(self, other: "LinearizedPoly") -> "LinearizedPoly":
        F = self.field
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return LinearizedPoly(
            F, [F.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]
        )

    def __sub__(self, other: "LinearizedPoly") -> "LinearizedPoly":
        F = self.field
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return LinearizedPoly(
            F, [F.sub(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]
        )

    def scale(self, c: int) -> "LinearizedPoly":
        """Left multiplication by a constant: x -> c * p(x)."""
        F = self.field
        return LinearizedPoly(F, [F.mul(c, x) for x in self.coeffs])

    def compose(self, other: "LinearizedPoly") -> "LinearizedPoly":
        """x -> self(other(x)); q-degrees add."""
        F = self.field
        if not self.coeffs or not other.coeffs:
            return LinearizedPoly(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = F.add(out[i + j], F.mul(a, F.frob(b, i)))
        return LinearizedPoly(F, out)

    __matmul__ = compose

    def right_divide(self, divisor: "LinearizedPoly"):
        """(Q, R) with self = Q o divisor + R and q_degree(R) < q_degree(divisor)."""
        return right_divide(self, divisor)

    def matrix(self) -> list[list[int]]:
        """m x m matrix over GF(q) of the evaluation map, acting on coordinates."""
        F = self.field
        cols = [F.coords(self(b)) for b in F.basis()]
        return [[col[i] for col in cols] for i in range(F.m)]

    def root_space_basis(self) -> list[int]:
        return root_space_basis(self)


# ---------------------------------------------------------------------------


def lin_eval(p: LinearizedPoly, a: int) -> int:
    return p(a)


def symbolic_product(p: LinearizedPoly, r: LinearizedPoly) -> LinearizedPoly:
    return p.compose(r)


def right_divide(a: LinearizedPoly, b: LinearizedPoly):
    """Right division in the composition ring: a = Q o b + R."""
    F = a.field
    if b.is_zero():
        raise ZeroDivisionError("division by the zero linearized polynomial")
    db = len(b.coeffs) - 1
    lead_b = b.coeffs[-1]
    rem = list(a.coeffs)
    quo = [0] * max(len(rem) - db, 0)
    while len(rem) - 1 >= db:
        s = len(rem) - 1 - db
        top = rem[-1]
        if top:
            c = F.div(top, F.frob(lead_b, s))
            quo[s] = c
            # subtract c x^[s] o b
            for j, bj in enumerate(b.coeffs):
                if bj:
                    rem[s + j] = F.sub(rem[s + j], F.mul(c, F.frob(bj, s)))
        rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
    return LinearizedPoly(F, quo), LinearizedPoly(F, rem)


def lin_eea_steps(a: LinearizedPoly, b: LinearizedPoly):
    """Yield (u, v, r) with r = u o a + v o b along the remainder sequence.

    The first two triples are (1, 0, a) and (0, 1, b); iteration ends after
    the first zero remainder.
    """
    F = a.field
    one, zero = LinearizedPoly.identity(F), LinearizedPoly.zero(F)
    prev = (one, zero, a)
    yield prev
    if b.is_zero():
        return
    cur = (zero, one, b)
    yield cur
    while not cur[2].is_zero():
        quo, rem = right_divide(prev[2], cur[2])
        nxt = (prev[0] - quo.compose(cur[0]), prev[1] - quo.compose(cur[1]), rem)
        prev, cur = cur, nxt
        yield cur


def lin_eea(a: LinearizedPoly, b: LinearizedPoly, stop_degree: int):
    """Run the remainder sequence of a and b until q_degree(r) < stop_degree.

    Returns (u, v, r) with r = u o a + v o b.  With ``stop_degree <= 0`` the
    sequence runs to completion and the last nonzero remainder, a greatest
    common right divisor of a and b, is returned.
    """
    if a.q_degree < b.q_degree:
        raise ValueError("lin_eea needs q_degree(a) >= q_degree(b)")
    last = None
    for step in lin_eea_steps(a, b):
        if stop_degree <= 0:
            if step[2].is_zero():
                break
        elif step[2].q_degree < stop_degree:
            return step
        last = step
    return last


def root_space_basis(p: LinearizedPoly) -> list[int]:
    """GF(q)-basis of the kernel of the evaluation map of p."""
    if p.is_zero():
        raise ValueError("the zero polynomial vanishes everywhere")
    F = p.field
    if F.q == 2:
        return _binary_kernel(p)
    null = linalg.nullspace(p.matrix(), F.m, F.q)
    return [F.from_coords(v) for v in null]


def _binary_kernel(p: LinearizedPoly) -> list[int]:
    # Over GF(2) an element is its own coordinate bitset, so the kernel is
    # found by eliminating (image, preimage) pairs of the basis 1 << j.
    piv: dict = {}
    out = []
    for j in range(p.field.m):
        img, pre = p(1 << j), 1 << j
        while img:
            top = img.bit_length() - 1
            if top not in piv:
                piv[top] = (img, pre)
                break
            pi, pp = piv[top]
            img ^= pi
            pre ^= pp
        else:
            out.append(pre)
    return out
