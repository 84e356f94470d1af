"""Brute-force ground truth for tiny codes.

Everything here enumerates: whole codebooks, whole ambient spaces, every
decodable vector.  Decodability is established twice, once geometrically
(union of the radius-t balls around the codewords) and once by running the
decoder on every vector; the two must agree vector by vector.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from rankcode.bounds import (
    BoundParams,
    a_mu,
    count_rank_u,
    gaussian_binomial,
)
from rankcode.els import GuardError
from rankcode.gfq import field
from rankcode.gabidulin import Decoded, GabidulinCode, build_code, decode, encode
from rankcode.rank_metric import rank_norm

CODEBOOK_LIMIT = 1 << 16
SPACE_LIMIT = 1 << 20

# the fixed suite of tiny instances (q, m, n, k)
TINY_INSTANCES = [(2, 3, 3, 1), (2, 4, 4, 2), (2, 3, 2, 1), (3, 2, 2, 1)]


@dataclass
class ExhaustiveCodebook:
    code: GabidulinCode
    words: list = dc_field(repr=False)

    @classmethod
    def build(cls, code: GabidulinCode, limit: int = CODEBOOK_LIMIT) -> "ExhaustiveCodebook":
        if code.size > limit:
            raise GuardError(f"codebook of size {code.size} exceeds guard {limit}")
        F = code.field
        words = [encode(code, msg) for msg in itertools.product(range(F.order), repeat=code.k)]
        return cls(code, words)

    @classmethod
    def tiny(cls, q, m, n, k) -> "ExhaustiveCodebook":
        return cls.build(build_code(q, m, n, k))

    @property
    def params(self) -> BoundParams:
        c = self.code
        return BoundParams(c.q, c.m, c.n, c.k)


def exhaustive_rank_distribution(book: ExhaustiveCodebook) -> list[int]:
    """A_u for u = 0..n."""
    F, n = book.code.field, book.code.n
    A = [0] * (n + 1)
    for w in book.words:
        A[rank_norm(F, w)] += 1
    return A


def _space(F, n):
    return itertools.product(range(F.order), repeat=n)


def _index(F, vec) -> int:
    out = 0
    for a in reversed(vec):
        out = out * F.order + a
    return out


def _vector(F, idx: int, n: int) -> tuple:
    out = []
    for _ in range(n):
        idx, a = divmod(idx, F.order)
        out.append(a)
    return tuple(out)


def geometric_decodable(book: ExhaustiveCodebook) -> dict:
    """Map decodable vector -> the unique codeword within distance t.

    Built as the union of the radius-t balls; overlap would contradict
    d >= 2t + 1 and raises.
    """
    code = book.code
    F, n, t = code.field, code.n, code.t
    low = [e for e in _space(F, n) if rank_norm(F, e) <= t]
    out = {}
    for c in book.words:
        for e in low:
            y = tuple(F.add(a, b) for a, b in zip(c, e))
            if y in out:
                raise AssertionError("radius-t balls overlap")
            out[y] = tuple(c)
    return out


def _decode_chunk(args):
    code_dict, start, stop = args
    code = GabidulinCode.from_dict(code_dict)
    F, n = code.field, code.n
    hits = []
    for idx in range(start, stop):
        y = _vector(F, idx, n)
        out = decode(code, y)
        if isinstance(out, Decoded):
            hits.append((idx, tuple(out.codeword)))
    return hits


def decoder_decodable(code: GabidulinCode, workers: int = 1) -> dict:
    """Map vector -> decoded codeword for every vector the decoder accepts."""
    F, n = code.field, code.n
    total = F.order**n
    nchunks = max(1, workers) * 4
    step = -(-total // nchunks)
    jobs = [(code.to_dict(), s, min(s + step, total)) for s in range(0, total, step)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            parts = list(ex.map(_decode_chunk, jobs))
    else:
        parts = [_decode_chunk(j) for j in jobs]
    out = {}
    for part in parts:
        for idx, c in part:
            out[_vector(F, idx, n)] = c
    return out


@dataclass
class CensusRow:
    u: int
    N_u: int
    D_u: int
    D_u_decoder: int
    PE_exact: Fraction


@dataclass
class DecodableCensus:
    params: BoundParams
    rows: list
    mismatches: int  # vectors classified differently by the two methods
    total_decodable: int

    @property
    def agree(self) -> bool:
        return self.mismatches == 0 and all(r.D_u == r.D_u_decoder for r in self.rows)


def decodable_census(book: ExhaustiveCodebook, workers: int = 1, limit: int = SPACE_LIMIT) -> DecodableCensus:
    code = book.code
    F, n, t = code.field, code.n, code.t
    if F.order**n > limit:
        raise GuardError(f"space of size {F.order**n} exceeds census guard {limit}")
    geo = geometric_decodable(book)
    dec = decoder_decodable(code, workers)
    mismatches = sum(1 for y, c in geo.items() if dec.get(y) != c)
    mismatches += sum(1 for y in dec if y not in geo)

    N = [0] * (n + 1)
    for y in _space(F, n):
        N[rank_norm(F, y)] += 1
    D = [0] * (n + 1)
    for y in geo:
        D[rank_norm(F, y)] += 1
    Ddec = [0] * (n + 1)
    for y in dec:
        Ddec[rank_norm(F, y)] += 1
    rows = []
    for u in range(n + 1):
        pe = Fraction(D[u], N[u]) if u > t and N[u] else Fraction(0)
        rows.append(CensusRow(u, N[u], D[u], Ddec[u], pe))
    return DecodableCensus(book.params, rows, mismatches, len(geo))


def completion_bound(u: int, w: int, s: int, q: int, m: int) -> int:
    """Upper bound on #{z in GF(q^m)^u : rk(y, z) = s} for any y of rank w."""
    if not 0 <= s - w <= u:
        return 0
    return gaussian_binomial(u, s - w, q) * a_mu(m, s - w, q) * q ** (w * (u - s + w))


@dataclass
class CompletionCount:
    u: int
    v: int
    w: int
    s: int
    max_count: int
    bound: int
    prefixes: int  # number of y examined

    @property
    def ok(self) -> bool:
        return self.max_count <= self.bound


def lemma8_census(u: int, v: int, w: int, s: int, q: int, m: int, limit: int = SPACE_LIMIT) -> CompletionCount:
    """For every y in GF(q^m)^v of rank w, count z in GF(q^m)^u with rk(y, z) = s."""
    F = field(q, m)
    if F.order ** (u + v) > limit:
        raise GuardError("completion census exceeds guard")
    zs = list(_space(F, u))
    best = 0
    nys = 0
    for y in _space(F, v):
        if rank_norm(F, y) != w:
            continue
        nys += 1
        cnt = sum(1 for z in zs if rank_norm(F, list(y) + list(z)) == s)
        best = max(best, cnt)
    return CompletionCount(u, v, w, s, best, completion_bound(u, w, s, q, m), nys)


def count_by_rank(F, n: int) -> list[int]:
    """Exhaustive N_u for GF(q^m)^n."""
    N = [0] * (n + 1)
    for y in _space(F, n):
        N[rank_norm(F, y)] += 1
    return N


def closed_form_counts(q: int, m: int, n: int) -> list[int]:
    return [count_rank_u(n, m, q, u) for u in range(min(m, n) + 1)]
