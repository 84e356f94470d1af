"""Gabidulin codes: construction, encoding and bounded-rank-distance decoding.

The decoder solves the key equation with the Euclidean algorithm on
linearized polynomials:

    syndromes -> syndrome polynomial S -> remainder sequence of x^[d-1], S
    -> error span polynomial L (Bezout cofactor of S)
    -> error values: GF(q)-basis of the roots of L
    -> error locators from the Moore system, then their GF(q)-coordinates
       over the parity vector h
    -> error vector, re-checked against the syndromes.

Any inconsistency along the way is reported as a :class:`Failure`; a
:class:`Decoded` outcome therefore always holds a codeword at rank distance
at most t from the received word.
"""

from __future__ import annotations

import json
from functools import lru_cache
from dataclasses import dataclass, field as dc_field

from rankcode import kernels, linalg
from rankcode.gfq import GF, field
from rankcode.linpoly import LinearizedPoly, lin_eea, root_space_basis
from rankcode.rank_metric import rank_norm

# Failure reason codes
ROOT_SPACE = "root-space"
LOCATOR = "locator"
RANK = "rank"
SYNDROME = "syndrome"


@dataclass(frozen=True)
class Decoded:
    codeword: list
    error: list


@dataclass(frozen=True)
class Failure:
    reason: str


@dataclass(frozen=True, eq=False)
class GabidulinCode:
    field: GF
    n: int
    k: int
    g: tuple
    generator: tuple = dc_field(repr=False)
    h: tuple = dc_field(repr=False)
    parity: tuple = dc_field(repr=False)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def m(self) -> int:
        return self.field.m

    @property
    def d(self) -> int:
        return self.n - self.k + 1

    @property
    def t(self) -> int:
        return (self.d - 1) // 2

    @property
    def size(self) -> int:
        return self.field.order**self.k

    def __eq__(self, other):
        if not isinstance(other, GabidulinCode):
            return NotImplemented
        return (self.field, self.n, self.k, self.g) == (other.field, other.n, other.k, other.g)

    def __hash__(self):
        return hash((self.field, self.n, self.k, self.g))

    def to_dict(self) -> dict:
        F = self.field
        return {
            "q": F.q,
            "m": F.m,
            "n": self.n,
            "k": self.k,
            "modulus": list(F.modulus),
            "g": [F.format(x) for x in self.g],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "GabidulinCode":
        F = field(d["q"], d["m"], tuple(d["modulus"]))
        return code_from_g(F, [F.parse(s) for s in d["g"]], d["k"])

    @classmethod
    def from_json(cls, s: str) -> "GabidulinCode":
        return cls.from_dict(json.loads(s))


def code_from_g(F: GF, g, k: int) -> GabidulinCode:
    n = len(g)
    if n > F.m:
        raise ValueError(f"need n <= m, got n={n}, m={F.m}")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}")
    if rank_norm(F, g) != n:
        raise ValueError("g must be linearly independent over GF(q)")
    g = tuple(g)
    generator = tuple(tuple(F.frob(x, i) for x in g) for i in range(k))
    d = n - k + 1
    if d > 1:
        # h is orthogonal to g^[i] for i = -(d-2) .. k-1
        rows = [[F.frob(x, i) for x in g] for i in range(-(d - 2), k)]
        null = linalg.ext_nullspace(F, rows, n)
        assert len(null) == 1, "parity system should have a 1-dim solution space"
        h = tuple(null[0])
        assert rank_norm(F, h) == n
        parity = tuple(tuple(F.frob(x, l) for x in h) for l in range(d - 1))
    else:
        h, parity = (), ()
    return GabidulinCode(F, n, k, g, generator, h, parity)


def build_code(q: int, m: int, n: int, k: int) -> GabidulinCode:
    """Gabidulin code with g = (1, a, ..., a^(n-1)) in the default GF(q^m)."""
    if n > m:
        raise ValueError(f"need n <= m, got n={n}, m={m}")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}")
    F = field(q, m)
    return code_from_g(F, F.basis()[:n], k)


# ---------------------------------------------------------------------------


def _dot(F: GF, xs, ys) -> int:
    tab = kernels.field_tables(F)
    if tab is not None:
        return kernels.gf2m_dot(tab, xs, ys)
    acc = 0
    for a, b in zip(xs, ys):
        if a and b:
            acc = F.add(acc, F.mul(a, b))
    return acc


def _combine(F: GF, coeffs, rows, width: int) -> list[int]:
    tab = kernels.field_tables(F)
    if tab is not None:
        return kernels.gf2m_combine(tab, list(coeffs), rows, width)
    out = [0] * width
    for c, row in zip(coeffs, rows):
        if c:
            for j, v in enumerate(row):
                if v:
                    out[j] = F.add(out[j], F.mul(c, v))
    return out


def encode(code: GabidulinCode, message) -> list[int]:
    """Codeword message x generator."""
    if len(message) != code.k:
        raise ValueError(f"message length {len(message)} != k={code.k}")
    return _combine(code.field, message, code.generator, code.n)


def syndromes(code: GabidulinCode, received) -> list[int]:
    """s_l = sum_j y_j h_j^[l] for l < d - 1; all zero iff received is a codeword."""
    if len(received) != code.n:
        raise ValueError(f"received length {len(received)} != n={code.n}")
    F = code.field
    return [_dot(F, received, row) for row in code.parity]


def is_codeword(code: GabidulinCode, word) -> bool:
    return not any(syndromes(code, word))


@lru_cache(maxsize=64)
def _h_solver(code: GabidulinCode):
    """x -> GF(q)-coordinates of x over (h_0, ..., h_{n-1}), or None if x is outside their span.

    Row reduction of [H | I] with H the m x n coordinate matrix of h gives
    rows whose left part is a unit vector (read off B_j) and rows whose left
    part vanishes (consistency conditions on x).
    """
    F, n, m, q = code.field, code.n, code.m, code.q
    aug = [[F.coords(h)[i] for h in code.h] + [1 if r == i else 0 for r in range(m)] for i in range(m)]
    red, piv = linalg.rref(aug, q, n + m)
    sel = {p: row[n:] for row, p in zip(red, piv) if p < n}
    checks = [row[n:] for row, p in zip(red, piv) if p >= n]
    if q == 2:
        bits = [sum(1 << i for i, c in enumerate(sel[j]) if c) for j in range(n)]
        cbits = [sum(1 << i for i, c in enumerate(r) if c) for r in checks]

        def solve2(x):
            if any(bin(c & x).count("1") & 1 for c in cbits):
                return None
            return [bin(b & x).count("1") & 1 for b in bits]

        return solve2

    def solve(x):
        xc = F.coords(x)
        if any(sum(a * b for a, b in zip(r, xc)) % q for r in checks):
            return None
        return [sum(a * b for a, b in zip(sel[j], xc)) % q for j in range(n)]

    return solve


def decode(code: GabidulinCode, received):
    """Bounded rank distance decoding up to t = floor((d-1)/2).

    Returns ``Decoded(codeword, error)`` or ``Failure(reason)``.
    """
    F = code.field
    n = code.n
    s = syndromes(code, received)
    if not any(s):
        return Decoded(list(received), [0] * n)
    d1, t = code.d - 1, code.t

    # key equation: L o S = Omega mod x^[d-1], q_deg(Omega) < q_deg(L) <= t
    S = LinearizedPoly(F, s)
    _, lam, _ = lin_eea(LinearizedPoly.monomial(F, d1), S, d1 - t)
    tau = lam.q_degree
    roots = root_space_basis(lam)
    if len(roots) != tau or tau > t:
        return Failure(ROOT_SPACE)

    # s_l^[-l] = sum_p a_p^[-l] x_p, solved for the locators x_p
    mat = [[F.frob(a, -l) for a in roots] for l in range(d1)]
    rhs = [F.frob(s[l], -l) for l in range(d1)]
    if tau:
        locators = linalg.ext_solve(F, mat, rhs)
    else:
        locators = None
    if locators is None:
        return Failure(LOCATOR)

    # x_p = sum_j B_pj h_j with B over GF(q)
    solve_h = _h_solver(code)
    e = [0] * n
    for a, x in zip(roots, locators):
        b = solve_h(x)
        if b is None:
            return Failure(LOCATOR)
        for j, c in enumerate(b):
            if c:
                e[j] = F.add(e[j], F.scale(c, a))

    if rank_norm(F, e) > t:
        return Failure(RANK)
    c = [F.sub(y, x) for y, x in zip(received, e)]
    if any(syndromes(code, c)):
        return Failure(SYNDROME)
    return Decoded(c, e)


def iter_codewords(code: GabidulinCode):
    """All q^(mk) codewords, in message order."""
    import itertools

    F = code.field
    for msg in itertools.product(range(F.order), repeat=code.k):
        yield encode(code, msg)
