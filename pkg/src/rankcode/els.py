"""Elementary linear subspaces of GF(q^m)^n.

An elementary subspace is the GF(q^m)-span of vectors with entries in
GF(q); it is stored by the reduced row echelon basis of the underlying
subspace of GF(q)^n, which makes the representation canonical.
Restrictions are taken with respect to an explicit complementary pair.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from rankcode import linalg
from rankcode.bounds import gaussian_binomial
from rankcode.gfq import GF
from rankcode.rank_metric import expand, rank_norm

ENUM_LIMIT = 10**6
EXHAUSTIVE_LIMIT = 1 << 20


class GuardError(ValueError):
    """An exhaustive computation would exceed its size guard."""


@dataclass(frozen=True)
class ElementaryBasis:
    q: int
    n: int
    rows: tuple  # RREF rows over GF(q), each a tuple of length n

    @property
    def v(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list[int]:
        return [next(j for j, c in enumerate(r) if c) for r in self.rows]

    @classmethod
    def from_rows(cls, rows, q: int, n: int) -> "ElementaryBasis":
        red, _ = linalg.rref([list(r) for r in rows], q, n)
        return cls(q, n, tuple(tuple(r) for r in red))

    def to_strings(self) -> list[str]:
        return ["".join(str(c) for c in r) for r in self.rows]

    @classmethod
    def from_strings(cls, rows, q: int) -> "ElementaryBasis":
        rows = [[int(ch) for ch in r] for r in rows]
        n = len(rows[0]) if rows else 0
        return cls.from_rows(rows, q, n)

    def base_span(self) -> frozenset:
        """All GF(q)-combinations of the rows, as tuples."""
        out = set()
        for coeffs in itertools.product(range(self.q), repeat=self.v):
            vec = [0] * self.n
            for c, r in zip(coeffs, self.rows):
                if c:
                    vec = [(a + c * b) % self.q for a, b in zip(vec, r)]
            out.add(tuple(vec))
        return frozenset(out)


@dataclass(frozen=True)
class SubspacePair:
    V: ElementaryBasis
    V_bar: ElementaryBasis
    inv: tuple  # inverse of the stacked n x n matrix [V; V_bar]

    @classmethod
    def make(cls, V: ElementaryBasis, V_bar: ElementaryBasis) -> "SubspacePair":
        if V.v + V_bar.v != V.n:
            raise ValueError("dimensions do not add up to n")
        stacked = [list(r) for r in V.rows + V_bar.rows]
        inv = linalg.inverse(stacked, V.q)  # raises when not a direct sum
        return cls(V, V_bar, tuple(tuple(r) for r in inv))


def enumerate_els(n: int, v: int, q: int, limit: int = ENUM_LIMIT):
    """Every v-dimensional elementary subspace, once each, in RREF form."""
    if not 0 <= v <= n:
        raise ValueError(f"need 0 <= v <= n, got v={v}, n={n}")
    if gaussian_binomial(n, v, q) > limit:
        raise GuardError(f"[{n} {v}]_{q} exceeds the enumeration guard {limit}")
    for pivots in itertools.combinations(range(n), v):
        pset = set(pivots)
        free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, n) if j not in pset]
        for vals in itertools.product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(v)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), c in zip(free, vals):
                rows[i][j] = c
            yield ElementaryBasis(q, n, tuple(tuple(r) for r in rows))


def span_vector(F: GF, V: ElementaryBasis, coeffs) -> list[int]:
    """sum_i coeffs[i] * rows[i] with coeffs in GF(q^m)."""
    out = [0] * V.n
    for c, row in zip(coeffs, V.rows):
        if not c:
            continue
        for j, b in enumerate(row):
            if b:
                out[j] = F.add(out[j], F.scale(b, c))
    return out


def witness_vector(F: GF, V: ElementaryBasis) -> list[int]:
    """y = sum_i a_i b_i with a_i the first v basis elements of GF(q^m)."""
    if V.v > F.m:
        raise ValueError("witness needs dim(V) <= m")
    return span_vector(F, V, F.basis()[: V.v])


def subspace_rank(F: GF, V: ElementaryBasis, exhaustive_limit: int = EXHAUSTIVE_LIMIT) -> int:
    """Maximum rank over the vectors of V.

    Exhaustive when |V| = q^(m v) is within the limit, otherwise the rank of
    the witness vector (a lower bound that is tight when v <= m).
    """
    if V.v == 0:
        return 0
    if F.order**V.v <= exhaustive_limit:
        best = 0
        for coeffs in itertools.product(range(F.order), repeat=V.v):
            best = max(best, rank_norm(F, span_vector(F, V, coeffs)))
            if best == min(V.v, F.m):
                break
        return best
    return rank_norm(F, witness_vector(F, V))


def contains(F: GF, V: ElementaryBasis, x) -> bool:
    """Is x in the GF(q^m)-span of V?

    Equivalent to every row of the expansion of x lying in the GF(q)-row
    space of V.
    """
    rows = [list(r) for r in V.rows] + [r for r in expand(F, x) if any(r)]
    return linalg.rank(rows, F.q) == V.v


def containing_els(F: GF, x) -> ElementaryBasis:
    """The smallest elementary subspace containing x (dimension rk(x))."""
    X = [r for r in expand(F, x) if any(r)]
    return ElementaryBasis.from_rows(X, F.q, len(x))


def complement(V: ElementaryBasis) -> SubspacePair:
    """Complete V with standard vectors at its non-pivot columns."""
    piv = set(V.pivots)
    rows = [tuple(1 if j == i else 0 for j in range(V.n)) for i in range(V.n) if i not in piv]
    V_bar = ElementaryBasis(V.q, V.n, tuple(rows))
    return SubspacePair.make(V, V_bar)


def restriction_coords(F: GF, x, P: SubspacePair):
    """Coordinates (c_V, c_Vbar) of x in the stacked basis [V; V_bar]."""
    n = P.V.n
    c = [0] * n
    for j, xj in enumerate(x):
        if not xj:
            continue
        for i in range(n):
            a = P.inv[j][i]
            if a:
                c[i] = F.add(c[i], F.scale(a, xj))
    v = P.V.v
    return c[:v], c[v:]


def restrict(F: GF, x, P: SubspacePair):
    """The unique decomposition x = x_V + x_Vbar."""
    cv, cw = restriction_coords(F, x, P)
    return span_vector(F, P.V, cv), span_vector(F, P.V_bar, cw)


def vanishes_on(F: GF, x, P: SubspacePair) -> bool:
    """Does x restrict to zero on P.V (i.e. lie in P.V_bar)?"""
    return not any(restriction_coords(F, x, P)[0])


def restrict_code(F: GF, codewords, P: SubspacePair, k: int) -> list[list[int]]:
    """Image of the code under c -> coordinates of c_V in the basis of V."""
    if P.V.v < k:
        raise ValueError(f"restriction needs dim(V) >= k, got {P.V.v} < {k}")
    return [restriction_coords(F, c, P)[0] for c in codewords]


def min_rank_distance(F: GF, words) -> int:
    """Minimum pairwise rank distance (brute force over all pairs)."""
    words = list(words)
    best = None
    for a, b in itertools.combinations(words, 2):
        d = rank_norm(F, [F.sub(x, y) for x, y in zip(a, b)])
        if best is None or d < best:
            best = d
    return best
