"""Named verification suites, each a batch of brute-force checks.

A suite returns a :class:`SuiteReport`: one :class:`Check` per property,
with the number of instances examined and any counterexamples found.
Quantifiers over subspaces are always exhaustive.  Quantifiers over vectors
are exhaustive when the ambient space is small (``VECTOR_LIMIT``) and use a
seeded sample otherwise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

import numpy as np

from rankcode import els, linalg, oracle
from rankcode.bounds import (
    BoundParams,
    ball_volume,
    du_bound,
    du_bound_below_d,
    du_bound_relaxed,
    gaussian_binomial,
    identity_checks,
    lemma_power_checks,
    pe_bound_global,
    pe_bound_u,
    rank_dist_bound,
)
from rankcode.gfq import field
from rankcode.rank_metric import rank_norm, uniform_elements

VECTOR_LIMIT = 1 << 10
SCAN_LIMIT = 1 << 12
SAMPLES = 128


@dataclass
class Check:
    name: str
    instances: int = 0
    violations: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def record(self, good: bool, witness=None) -> None:
        self.instances += 1
        if not good and len(self.violations) < 20:
            self.violations.append(witness)


@dataclass
class SuiteReport:
    name: str
    checks: list

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            tag = "ok  " if c.ok else "FAIL"
            out.append(f"{tag} {self.name}/{c.name}: {c.instances} instances, {len(c.violations)} violations")
            for v in c.violations[:3]:
                out.append(f"       counterexample: {v}")
        return out


def _vectors(F, n, rng):
    """All of GF(q^m)^n when small, else a seeded sample."""
    if F.order**n <= VECTOR_LIMIT:
        return [list(v) for v in itertools.product(range(F.order), repeat=n)]
    return [uniform_elements(F, rng, n) for _ in range(SAMPLES)]


def _as_field_vec(row):
    # base-field digits are also the ints of the corresponding GF(q^m) constants
    return list(row)


@lru_cache(maxsize=None)
def _els_list(n, v, q):
    return list(els.enumerate_els(n, v, q))


def subspace_census(n: int, q: int) -> list[int]:
    """Number of subspaces of GF(q)^n by dimension, by closing spans breadth first.

    Independent of the RREF enumeration: subspaces are explicit frozensets
    of vectors, grown one generator at a time.
    """
    space = list(itertools.product(range(q), repeat=n))
    zero = tuple([0] * n)

    def grow(S, x):
        out = set(S)
        for s in S:
            for c in range(1, q):
                out.add(tuple((a + c * b) % q for a, b in zip(s, x)))
        return frozenset(out)

    levels = [{frozenset([zero])}]
    for _ in range(n):
        nxt = set()
        for S in levels[-1]:
            for x in space:
                if x not in S:
                    nxt.add(grow(S, x))
        levels.append(nxt)
    return [len(lv) for lv in levels]


# ---------------------------------------------------------------------------
# subspace lemmas


def els_lemmas(qs=(2, 3), n_max: int = 4, m_max: int = 4, seed: int = 0) -> SuiteReport:
    rng = np.random.default_rng(seed)
    rank_dim = Check("rank-equals-dimension")
    smallest = Check("smallest-containing-els")
    bijection = Check("els-base-subspace-bijection")
    counting = Check("els-count-gaussian-binomial")
    compl = Check("complement-direct-sum")
    restr = Check("restriction-decomposition")
    vanish = Check("vanishing-dimension")

    for q in qs:
        # counting and the bijection do not depend on m
        for n in range(1, n_max + 1):
            census = subspace_census(n, q)
            for v in range(n + 1):
                Vs = _els_list(n, v, q)
                counting.record(
                    len(Vs) == gaussian_binomial(n, v, q) == census[v], (q, n, v, len(Vs), census[v])
                )
                spans = {V.base_span() for V in Vs}
                bijection.record(len(spans) == len(Vs), (q, n, v, "base spans collide"))
                F = field(q, 2)
                for V, W in itertools.combinations(Vs, 2):
                    # distinct elementary bases span distinct GF(q^m) spaces
                    inside = all(els.contains(F, V, _as_field_vec(r)) for r in W.rows)
                    bijection.record(not inside, (q, n, v, V.rows, W.rows))
                for V in Vs:
                    P = els.complement(V)
                    stacked = [list(r) for r in P.V.rows + P.V_bar.rows]
                    compl.record(
                        P.V_bar.v == n - v and linalg.rank(stacked, q) == n, (q, n, V.rows)
                    )

        for m in range(1, m_max + 1):
            F = field(q, m)
            for n in range(1, n_max + 1):
                for v in range(min(n, m) + 1):
                    for V in _els_list(n, v, q):
                        rank_dim.record(_check_rank_dim(F, V, rng), (q, m, n, V.rows))
                        if F.order**n <= VECTOR_LIMIT and 0 < v < n:
                            P = els.complement(V)
                            for coeffs in itertools.product(range(F.order), repeat=v):
                                if any(coeffs):
                                    x = els.span_vector(F, V, coeffs)
                                    compl.record(not els.contains(F, P.V_bar, x), (q, m, n, V.rows, x))
                for x in _vectors(F, n, rng):
                    u = rank_norm(F, x)
                    A = els.containing_els(F, x)
                    good = A.v == u and els.contains(F, A, x)
                    if u > 0:
                        good = good and not any(els.contains(F, B, x) for B in _els_list(n, u - 1, q))
                    smallest.record(good, (q, m, n, x))

                    P = els.complement(A)
                    xa, xb = els.restrict(F, x, P)
                    restr.record(
                        [F.add(a, b) for a, b in zip(xa, xb)] == list(x)
                        and els.contains(F, P.V, xa)
                        and els.contains(F, P.V_bar, xb)
                        and not any(xb),
                        (q, m, n, x),
                    )
                    vanish.record(_check_vanish(F, x, u, n), (q, m, n, x))
    checks = [rank_dim, smallest, bijection, counting, compl, restr, vanish]
    return SuiteReport("els-lemmas", checks)


def _check_rank_dim(F, V, rng) -> bool:
    v = V.v
    if v == 0:
        return els.subspace_rank(F, V) == 0
    if F.order**v <= SCAN_LIMIT:
        ranks = [rank_norm(F, els.span_vector(F, V, c)) for c in itertools.product(range(F.order), repeat=v)]
        return max(ranks) == v
    sample = [rank_norm(F, els.span_vector(F, V, uniform_elements(F, rng, v))) for _ in range(SAMPLES)]
    return max(sample) <= v and rank_norm(F, els.witness_vector(F, V)) == v


def _check_vanish(F, x, u, n) -> bool:
    """x vanishes on some ELS of dimension n - u and on none of larger dimension.

    Vanishing on B means x lies in an ELS complementary to B; the search
    runs over every complementary pair when n is small enough.
    """
    q = F.q
    A = els.containing_els(F, x)
    P = els.complement(A)
    pair = els.SubspacePair.make(P.V_bar, P.V)  # x should vanish on V_bar of A
    if not (pair.V.v == n - u and els.vanishes_on(F, x, pair)):
        return False
    if n > 3:
        return True
    for dim in range(n - u + 1, n + 1):
        for B in _els_list(n, dim, q):
            for W in _els_list(n, n - dim, q):
                stacked = [list(r) for r in B.rows + W.rows]
                if linalg.rank(stacked, q) != n:
                    continue
                if els.vanishes_on(F, x, els.SubspacePair.make(B, W)):
                    return False
    return True


# ---------------------------------------------------------------------------
# MRD lemmas on the tiny codebooks


@lru_cache(maxsize=None)
def _book(inst):
    return oracle.ExhaustiveCodebook.tiny(*inst)


def mrd_lemmas(instances=tuple(oracle.TINY_INSTANCES)) -> SuiteReport:
    combinatorial = Check("unique-codeword-per-restriction")
    rank_dist = Check("rank-distribution-bound")
    restriction = Check("restricted-code-is-mrd")
    for inst in instances:
        book = _book(tuple(inst))
        code = book.code
        F, n, k, q = code.field, code.n, code.k, code.q
        p = book.params
        for K in _els_list(n, k, q):
            P = els.complement(K)
            images = {tuple(els.restriction_coords(F, c, P)[0]) for c in book.words}
            combinatorial.record(len(images) == F.order**k == len(book.words), (inst, K.rows))
        A = oracle.exhaustive_rank_distribution(book)
        for u in range(1, n + 1):
            if u < code.d:
                rank_dist.record(A[u] == 0, (inst, u, A[u]))
            else:
                rank_dist.record(A[u] <= rank_dist_bound(p, u), (inst, u, A[u]))
        for v in range(k, n + 1):
            for V in _els_list(n, v, q):
                P = els.complement(V)
                img = els.restrict_code(F, book.words, P, k)
                distinct = len({tuple(w) for w in img}) == len(book.words)
                # the restriction map is GF(q^m)-linear, so the minimum
                # distance is the least nonzero rank in the image
                dmin = min(rank_norm(F, w) for w in img if any(w)) if k else v + 1
                restriction.record(distinct and dmin == v - k + 1, (inst, V.rows, dmin))
    return SuiteReport("mrd-lemmas", [combinatorial, rank_dist, restriction])


# ---------------------------------------------------------------------------
# bound chain


@lru_cache(maxsize=None)
def census(inst, workers: int = 1):
    return oracle.decodable_census(_book(tuple(inst)), workers=workers)


def bound_chain(instances=tuple(oracle.TINY_INSTANCES), workers: int = 1) -> SuiteReport:
    agree = Check("geometric-equals-decoder")
    totals = Check("census-totals")
    regimes = Check("trivial-regimes")
    du = Check("Du-below-bound")
    relaxed = Check("double-sum-below-relaxation")
    pe = Check("PE-below-u-bound")
    chain = Check("u-bound-below-global")
    z_count = Check("completions-of-fixed-rank")
    for inst in instances:
        c = census(tuple(inst), workers)
        p = c.params
        q, m, n, t, d = p.q, p.m, p.n, p.t, p.d
        agree.record(c.agree, (inst, c.mismatches))
        size = q ** (m * p.k)
        totals.record(
            sum(r.N_u for r in c.rows) == q ** (m * n)
            and sum(r.D_u for r in c.rows) == size * ball_volume(n, m, t, q)
            and all(r.N_u == ob for r, ob in zip(c.rows, oracle.closed_form_counts(q, m, n))),
            inst,
        )
        for r in c.rows:
            u = r.u
            if u <= t:
                regimes.record(r.D_u == r.N_u, (inst, u))
                continue
            if u < d - t:
                regimes.record(r.D_u == 0 and r.PE_exact == 0, (inst, u))
                continue
            du.record(r.D_u <= du_bound(p, u), (inst, u, r.D_u, du_bound(p, u)))
            if u < d:
                relaxed.record(du_bound_below_d(p, u) <= du_bound_relaxed(p, u), (inst, u))
            ub = pe_bound_u(p, u)
            pe.record(r.PE_exact <= ub.exact, (inst, u, r.PE_exact, ub.exact))
            chain.record(ub.log_q <= pe_bound_global(q, t).log_q + 1e-12, (inst, u))
    for (q, m, v, u) in ((2, 3, 1, 2), (2, 2, 1, 2), (3, 2, 1, 1)):
        for w in range(0, min(v, m) + 1):
            for s in range(w, min(v + u, m) + 1):
                res = oracle.lemma8_census(u, v, w, s, q, m)
                z_count.record(res.ok, (q, m, v, u, w, s, res.max_count, res.bound))
    checks = [agree, totals, regimes, du, relaxed, pe, chain, z_count]
    return SuiteReport("bound-chain", checks)


def identities() -> SuiteReport:
    checks = []
    for rep in (identity_checks(), lemma_power_checks()):
        for name, count in rep.checked.items():
            c = Check(name, count, [v for v in rep.violations if v[0] == name])
            checks.append(c)
    return SuiteReport("identities", checks)


SUITES = {
    "els-lemmas": els_lemmas,
    "mrd-lemmas": mrd_lemmas,
    "bound-chain": bound_chain,
    "identities": identities,
}


def run_suite(name: str, **kw) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; available: {', '.join(SUITES)}")
    return SUITES[name](**kw)
