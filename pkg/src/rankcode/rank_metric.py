"""Rank norm, rank distance and fixed-rank sampling for vectors over GF(q^m).

A vector is a list of field-element ints together with the :class:`GF` it
lives in.  Its expansion is the m x n matrix over GF(q) whose column j holds
the coordinates of entry j.
"""

from __future__ import annotations

from rankcode import kernels, linalg
from rankcode.bounds import count_rank_u  # noqa: F401  (re-exported)
from rankcode.gfq import GF


def expand(F: GF, x) -> list[list[int]]:
    """m x n matrix over GF(q); entry (i, j) is coordinate i of x[j]."""
    cols = [F.coords(a) for a in x]
    return [[col[i] for col in cols] for i in range(F.m)]


def reassemble(F: GF, X) -> list[int]:
    """Inverse of :func:`expand`."""
    n = len(X[0]) if X else 0
    return [F.from_coords([X[i][j] for i in range(F.m)]) for j in range(n)]


def rank_norm(F: GF, x) -> int:
    if F.q == 2:
        return kernels.gf2_rank(list(x))
    return linalg.rank([F.coords(a) for a in x], F.q)


def rank_distance(F: GF, x, y) -> int:
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return rank_norm(F, [F.sub(a, b) for a, b in zip(x, y)])


def vec_add(F: GF, x, y) -> list[int]:
    return [F.add(a, b) for a, b in zip(x, y)]


def vec_sub(F: GF, x, y) -> list[int]:
    return [F.sub(a, b) for a, b in zip(x, y)]


def format_vector(F: GF, x) -> str:
    return " ".join(F.format(a) for a in x)


def parse_vector(F: GF, s: str) -> list[int]:
    return [F.parse(tok) for tok in s.split()]


def write_vectors(F: GF, vectors, path) -> None:
    with open(path, "w", newline="\n") as fh:
        for x in vectors:
            fh.write(format_vector(F, x) + "\n")


def read_vectors(F: GF, path) -> list[list[int]]:
    with open(path) as fh:
        return [parse_vector(F, line) for line in fh if line.strip()]


# ---------------------------------------------------------------------------
# sampling


def uniform_ints(rng, q: int, width: int, size: int) -> list[int]:
    """``size`` uniform ints in [0, q^width), i.e. uniform GF(q)^width digit vectors."""
    bound = q**width
    if bound <= 1 << 62:
        return [int(v) for v in rng.integers(0, bound, size=size)]
    digits = rng.integers(0, q, size=(size, width))
    return [sum(int(d) * q**i for i, d in enumerate(row)) for row in digits]


def uniform_elements(F: GF, rng, size: int) -> list[int]:
    return uniform_ints(rng, F.q, F.m, size)


def _digits(v: int, q: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        v, r = divmod(v, q)
        out.append(r)
    return out


def sample_rank_u(F: GF, n: int, u: int, rng) -> list[int]:
    """Uniformly random vector of GF(q^m)^n with rank exactly u.

    Draws a full-column-rank m x u matrix A and a full-row-rank u x n matrix
    B by rejection and returns the vector expanding to A B.  Every rank-u
    matrix has the same number of such factorisations, so the output is
    uniform.
    """
    q, m = F.q, F.m
    if not 0 <= u <= min(m, n):
        raise ValueError(f"u={u} outside 0..{min(m, n)}")
    if u == 0:
        return [0] * n
    while True:
        cols = uniform_ints(rng, q, m, u)
        if rank_norm(F, cols) == u:
            break
    while True:
        rows = uniform_ints(rng, q, n, u)
        if q == 2:
            if kernels.gf2_rank(rows) == u:
                break
        elif linalg.rank([_digits(r, q, n) for r in rows], q) == u:
            break
    if q == 2:
        return kernels.gf2_select_xor(cols, rows, n)
    out = [0] * n
    for a, r in zip(cols, rows):
        for j, c in enumerate(_digits(r, q, n)):
            if c:
                out[j] = F.add(out[j], F.scale(c, a))
    return out
