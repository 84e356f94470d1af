from fractions import Fraction
from functools import lru_cache

import pytest

from oracles import vector_rank
from rankcode import oracle
from rankcode.bounds import BoundParams, ball_volume, count_rank_u, gaussian_binomial, pe_bound_u
from rankcode.els import GuardError
from rankcode.gabidulin import build_code
from rankcode.gfq import field


@lru_cache(maxsize=None)
def census(inst):
    return oracle.decodable_census(oracle.ExhaustiveCodebook.tiny(*inst))


@pytest.fixture(scope="module")
def census_331():
    return census((2, 3, 3, 1))


def test_codebook_guard():
    with pytest.raises(GuardError):
        oracle.ExhaustiveCodebook.build(build_code(2, 16, 16, 12))
    with pytest.raises(GuardError):
        oracle.decodable_census(oracle.ExhaustiveCodebook.tiny(2, 16, 16, 15))


@pytest.mark.parametrize("inst", oracle.TINY_INSTANCES)
def test_rank_distribution(inst):
    book = oracle.ExhaustiveCodebook.tiny(*inst)
    q, m, n, k = inst
    A = oracle.exhaustive_rank_distribution(book)
    assert A == [sum(1 for w in book.words if vector_rank(w, q, m) == u) for u in range(n + 1)]
    assert sum(A) == q ** (m * k)
    d = n - k + 1
    assert A[0] == 1 and all(a == 0 for a in A[1:d])


def test_rank_distribution_values():
    assert oracle.exhaustive_rank_distribution(oracle.ExhaustiveCodebook.tiny(2, 3, 3, 1)) == [1, 0, 0, 7]
    # every nonzero codeword of a (2, 2) code over GF(16) has rank at least 3
    A = oracle.exhaustive_rank_distribution(oracle.ExhaustiveCodebook.tiny(2, 4, 4, 2))
    assert A[:3] == [1, 0, 0] and A[3] + A[4] == 255


def test_census_values(census_331):
    c = census_331
    assert c.agree
    assert [r.N_u for r in c.rows] == [1, 49, 294, 168]
    assert [r.D_u for r in c.rows] == [1, 49, 196, 154]
    assert [r.PE_exact for r in c.rows] == [0, 0, Fraction(2, 3), Fraction(11, 12)]
    assert c.total_decodable == 8 * 50


def test_census_gf16():
    c = census((2, 4, 4, 2))
    assert c.agree
    assert [r.D_u for r in c.rows] == [1, 225, 6300, 33750, 17580]
    assert c.total_decodable == 256 * ball_volume(4, 4, 1, 2)


@pytest.mark.parametrize("inst", oracle.TINY_INSTANCES)
def test_census_invariants(inst):
    c = census(inst)
    q, m, n, k = inst
    p = BoundParams(q, m, n, k)
    assert c.agree
    assert [r.N_u for r in c.rows][: min(m, n) + 1] == oracle.closed_form_counts(q, m, n)
    for r in c.rows:
        assert r.D_u <= r.N_u
        if r.u <= p.t:
            assert r.D_u == r.N_u
        elif r.u < p.d - p.t:
            assert r.D_u == 0
        else:
            assert r.PE_exact <= pe_bound_u(p, r.u).exact
    assert sum(r.D_u for r in c.rows) == q ** (m * k) * ball_volume(n, m, p.t, q)


def test_rate_one_census_counts_everything():
    c = oracle.decodable_census(oracle.ExhaustiveCodebook.tiny(2, 3, 3, 3))
    assert all(r.D_u == r.N_u for r in c.rows)


def test_count_by_rank():
    F = field(3, 2)
    assert oracle.count_by_rank(F, 2) == oracle.closed_form_counts(3, 2, 2) == [1, 32, 48]


@pytest.mark.parametrize(
    "u,v,w,s,q,m",
    [(1, 1, 1, 1, 2, 3), (1, 1, 1, 2, 2, 3), (2, 1, 1, 2, 2, 3), (2, 1, 1, 3, 2, 3),
     (2, 2, 1, 2, 2, 2), (1, 2, 2, 2, 3, 2), (2, 1, 0, 1, 2, 3), (1, 1, 1, 1, 3, 2)],
)
def test_completion_counts_bounded(u, v, w, s, q, m):
    res = oracle.lemma8_census(u, v, w, s, q, m)
    assert res.prefixes == count_rank_u(v, m, q, w)
    assert res.ok, (res.max_count, res.bound)


def test_completion_bound_tight_for_zero_prefix():
    # with w = 0 the bound counts z of rank s exactly
    for u, s, q, m in ((2, 1, 2, 3), (2, 2, 2, 3), (1, 1, 3, 2)):
        res = oracle.lemma8_census(u, 1, 0, s, q, m)
        assert res.max_count == res.bound == count_rank_u(u, m, q, s)
    assert oracle.completion_bound(2, 3, 2, 2, 3) == 0
    assert oracle.completion_bound(1, 0, 3, 2, 4) == 0  # s - w > u
    assert oracle.completion_bound(3, 1, 2, 2, 4) == gaussian_binomial(3, 1, 2) * 15 * 2 ** 2


def test_completion_guard():
    with pytest.raises(GuardError):
        oracle.lemma8_census(4, 3, 1, 2, 2, 4)
