"""Counting functions and the decoder-error-probability bound chain.

Counts are exact Python ints.  Probabilities come back as :class:`LogProb`,
which carries the base-q logarithm and, where the value is rational, the
exact :class:`~fractions.Fraction` as well.  At m = n = 16 the counts are
far beyond the double range, so every comparison between a count and a
bound is done on integers or fractions, never on floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def gaussian_binomial(n: int, v: int, q: int) -> int:
    """Number of v-dimensional subspaces of GF(q)^n.

    Returns 0 for v < 0 or v > n so that sums over out-of-range indices
    need no special cases.
    """
    if v < 0 or v > n or n < 0:
        return 0
    num = den = 1
    for i in range(v):
        num *= q**n - q**i
        den *= q**v - q**i
    return num // den


def a_mu(m: int, u: int, q: int) -> int:
    """A(m, u) = prod_{i<u} (q^m - q^i): ordered u-tuples of independent vectors."""
    if u < 0:
        raise ValueError("u must be non-negative")
    if u > m:
        return 0
    out = 1
    for i in range(u):
        out *= q**m - q**i
    return out


def count_rank_u(n: int, m: int, q: int, u: int) -> int:
    """N_u, the number of vectors of GF(q^m)^n with rank exactly u."""
    if not 0 <= u <= min(m, n):
        raise ValueError(f"u={u} outside 0..{min(m, n)}")
    return gaussian_binomial(n, u, q) * a_mu(m, u, q)


def ball_volume(n: int, m: int, t: int, q: int) -> int:
    """V_t, the number of vectors with rank at most t."""
    if not 0 <= t <= min(m, n):
        raise ValueError(f"t={t} outside 0..{min(m, n)}")
    return sum(count_rank_u(n, m, q, i) for i in range(t + 1))


def sigma_q(q: int, tol: float = 1e-12, max_terms: int | None = None) -> float:
    """sigma(q) = (1/ln q) * sum_{k>=1} 1/(k (q^k - 1)).

    Terms are added until the geometric tail bound drops below ``tol``, or
    exactly ``max_terms`` terms when that is given.
    """
    if q < 2:
        raise ValueError("q must be at least 2")
    lnq = math.log(q)
    s = math.fsum
    terms = []
    k = 1
    while True:
        terms.append(1.0 / (k * (q**k - 1)))
        if max_terms is not None:
            if k >= max_terms:
                break
        elif 1.0 / (k * (q**k - 1) * (q - 1)) / lnq < tol:
            break
        k += 1
    return s(terms) / lnq


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundParams:
    q: int
    m: int
    n: int
    k: int

    def __post_init__(self):
        if self.n > self.m:
            raise ValueError("need n <= m")
        if not 1 <= self.k <= self.n:
            raise ValueError("need 1 <= k <= n")

    @property
    def d(self) -> int:
        return self.n - self.k + 1

    @property
    def r(self) -> int:
        return self.n - self.k

    @property
    def t(self) -> int:
        return (self.d - 1) // 2

    @classmethod
    def from_t(cls, q: int, m: int, n: int, t: int) -> "BoundParams":
        """Code with d = 2t + 1, the shape used in the simulations."""
        return cls(q, m, n, n - 2 * t)


@dataclass(frozen=True)
class LogProb:
    """A probability held as log_q(value), with an exact twin when rational."""

    log_q: float
    q: int
    exact: Fraction | None = None

    @classmethod
    def from_fraction(cls, x: Fraction, q: int) -> "LogProb":
        x = Fraction(x)
        if x <= 0:
            return cls(-math.inf, q, x)
        return cls(_log_fraction(x, q), q, x)

    @property
    def value(self) -> float:
        if self.exact is not None:
            return float(self.exact)
        return q_power(self.q, self.log_q)

    def __le__(self, other: "LogProb") -> bool:
        if self.exact is not None and other.exact is not None:
            return self.exact <= other.exact
        return self.log_q <= other.log_q + 1e-12

    def __lt__(self, other: "LogProb") -> bool:
        if self.exact is not None and other.exact is not None:
            return self.exact < other.exact
        return self.log_q < other.log_q


def q_power(q: int, e: float) -> float:
    try:
        return q**e
    except OverflowError:
        return math.inf


def _log_fraction(x: Fraction, q: int) -> float:
    # log of huge ints without converting them to float
    lnum = math.log(x.numerator) if x.numerator else -math.inf
    return (lnum - math.log(x.denominator)) / math.log(q)


def rank_dist_bound(p: BoundParams, u: int) -> int:
    """Upper bound on A_u, the codewords of rank u, valid for u >= d."""
    if u < p.d:
        raise ValueError(f"bound on A_u needs u >= d={p.d}")
    return gaussian_binomial(p.n, u, p.q) * (p.q**p.m - 1) ** (u - p.r)


def du_bound_geq_d(p: BoundParams, u: int) -> int:
    """D_u <= [n u] (q^m - 1)^(u - r) V_t for u >= d."""
    if u < p.d:
        raise ValueError(f"needs u >= d={p.d}")
    return rank_dist_bound(p, u) * ball_volume(p.n, p.m, p.t, p.q)


def du_bound_below_d(p: BoundParams, u: int) -> int:
    """The double-sum bound on D_u for d - t <= u < d.

    The restricted code lives on an elementary subspace of dimension
    v = n - u and has redundancy r' = r - u; each term carries
    (q^m - 1)^(w - r'), whose exponent is at least d - r = 1 since
    w >= d - u.
    """
    q, m, n, t, d, r = p.q, p.m, p.n, p.t, p.d, p.r
    if not d - t <= u < d:
        raise ValueError(f"needs {d - t} <= u < {d}")
    v = n - u
    r_prime = r - u
    big = q**m - 1
    total = 0
    for w in range(d - u, t + 1):
        inner = 0
        for s in range(w, t + 1):
            inner += gaussian_binomial(u, s - w, q) * a_mu(m, s - w, q) * q ** (w * (u - s + w))
        total += gaussian_binomial(v, w, q) * big ** (w - r_prime) * inner
    return gaussian_binomial(n, u, q) * total


def du_bound_relaxed(p: BoundParams, u: int) -> Fraction:
    """Closed-form relaxation q^2/(q^2-1) [n u] (q^m-1)^(u-r) V_t for d-t <= u < d.

    The exponent u - r is non-positive here, hence the Fraction.
    """
    q = p.q
    if not p.d - p.t <= u < p.d:
        raise ValueError(f"needs {p.d - p.t} <= u < {p.d}")
    return (
        Fraction(q * q, q * q - 1)
        * gaussian_binomial(p.n, u, q)
        * Fraction(q**p.m - 1) ** (u - p.r)
        * ball_volume(p.n, p.m, p.t, q)
    )


def du_bound(p: BoundParams, u: int) -> int:
    """Tightest exact bound on D_u for u >= d - t."""
    if u < p.d - p.t:
        raise ValueError(f"D_u bound needs u >= d - t = {p.d - p.t}")
    if u >= p.d:
        return du_bound_geq_d(p, u)
    return du_bound_below_d(p, u)


def pe_bound_u(p: BoundParams, u: int) -> LogProb:
    """u-dependent bound on P_E(t; u) (with the q^2/(q^2-1) factor when u < d)."""
    q = p.q
    if u < p.d - p.t:
        raise ValueError(f"P_E bound needs u >= d - t = {p.d - p.t}")
    val = Fraction(q**p.m - 1) ** (u - p.r) / a_mu(p.m, u, q) * ball_volume(p.n, p.m, p.t, q)
    if u < p.d:
        val *= Fraction(q * q, q * q - 1)
    return LogProb.from_fraction(val, q)


def pe_bound_global(q: int, t: int) -> LogProb:
    """The u- and m-independent bound q^(-t^2 + 2 sigma(q))."""
    return LogProb(-t * t + 2 * sigma_q(q), q, None)


@dataclass(frozen=True)
class PEBounds:
    u_bound: LogProb
    global_bound: LogProb


def pe_bound(p: BoundParams, u: int) -> PEBounds:
    """Both probability bounds; checks the u-dependent one under the global one."""
    ub = pe_bound_u(p, u)
    gb = pe_bound_global(p.q, p.t)
    if not ub.log_q <= gb.log_q + 1e-9:
        raise AssertionError(f"u-bound {ub.log_q} exceeds global bound {gb.log_q} at {p}, u={u}")
    return PEBounds(ub, gb)


# ---------------------------------------------------------------------------
# identities used inside the proofs


@dataclass
class IdentityReport:
    checked: dict
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def vandermonde_lhs(v: int, u: int, s: int, q: int, w_min: int = 0) -> int:
    return sum(
        gaussian_binomial(v, w, q) * gaussian_binomial(u, s - w, q) * q ** (w * (u - s + w))
        # terms with s - w > u vanish; skipping them keeps q's exponent >= 0
        for w in range(max(w_min, s - u), s + 1)
    )


def identity_checks(qs=(2, 3), vu_max: int = 6, m_max: int = 16, qs_power=(2, 3, 5)) -> IdentityReport:
    """Exact checks of the two facts used to relax the D_u double sum.

    1. sum_w [v w][u s-w] q^(w(u-s+w)) == [v+u s]
    2. q^(ms) * (q^2 - 1) <= q^2 * A(m, s), for s <= m // 2

    The second inequality is only needed for s <= t, and 2t <= n - k < m.
    It is false near s = m (already q = 2, m = s = 1 breaks it): it holds
    exactly when m - s >= 2 over the default sweep, which is why the
    sweep stops at s = m // 2.
    """
    checked = {"vandermonde": 0, "qms_vs_A": 0}
    violations = []
    for q in qs:
        for v in range(vu_max + 1):
            for u in range(vu_max + 1):
                for s in range(v + u + 1):
                    checked["vandermonde"] += 1
                    if vandermonde_lhs(v, u, s, q) != gaussian_binomial(v + u, s, q):
                        violations.append(("vandermonde", q, v, u, s))
    for q in qs_power:
        for m in range(1, m_max + 1):
            for s in range(m // 2 + 1):
                checked["qms_vs_A"] += 1
                if q ** (m * s) * (q * q - 1) > q * q * a_mu(m, s, q):
                    violations.append(("qms_vs_A", q, m, s))
    return IdentityReport(checked, violations)


def lemma_power_checks(qs=(2, 3, 5), m_max: int = 16) -> IdentityReport:
    """A(m,u) >= q^(mu - sigma) and V_t <= q^(t(n+m-t) + sigma), in log domain.

    The V_t sweep covers n <= m and t <= m/2.
    """
    checked = {"A_lower": 0, "Vt_upper": 0}
    violations = []
    for q in qs:
        sig = sigma_q(q)
        for m in range(1, m_max + 1):
            for u in range(m + 1):
                checked["A_lower"] += 1
                lhs = _log_fraction(Fraction(a_mu(m, u, q)), q)
                if lhs < m * u - sig - 1e-12:
                    violations.append(("A_lower", q, m, u))
            for n in range(1, m + 1):
                for t in range(0, min(n, m // 2) + 1):
                    checked["Vt_upper"] += 1
                    lhs = _log_fraction(Fraction(ball_volume(n, m, t, q)), q)
                    if lhs > t * (n + m - t) + sig + 1e-12:
                        violations.append(("Vt_upper", q, m, n, t))
    return IdentityReport(checked, violations)
