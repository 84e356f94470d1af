"""Gaussian elimination over GF(q) and over an extension field GF(q^m).

Base-field matrices are lists of rows, each a list of ints in 0..q-1.  For
q = 2 the work is delegated to the bitset kernels.
"""

from __future__ import annotations

from rankcode import kernels


def _to_bits(row) -> int:
    return sum(1 << j for j, c in enumerate(row) if c & 1)


def _from_bits(v: int, ncols: int) -> list[int]:
    return [(v >> j) & 1 for j in range(ncols)]


def rref(rows, q: int, ncols: int | None = None):
    """Reduced row echelon form; returns ``(nonzero_rows, pivot_columns)``."""
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if q == 2:
        red, piv = kernels.gf2_rref([_to_bits(r) for r in rows], ncols)
        return [_from_bits(v, ncols) for v in red], piv
    if not rows:
        return [], []
    return kernels.modq_rref(rows, q)


def rank(rows, q: int) -> int:
    rows = list(rows)
    if q == 2:
        return kernels.gf2_rank([_to_bits(r) for r in rows])
    if not rows:
        return 0
    return kernels.modq_rank(rows, q)


def nullspace(rows, ncols: int, q: int) -> list[list[int]]:
    """Basis of the right null space {x : M x = 0} over GF(q)."""
    red, piv = rref(rows, q, ncols)
    free = [j for j in range(ncols) if j not in piv]
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for row, p in zip(red, piv):
            x[p] = (-row[f]) % q
        basis.append(x)
    return basis


def inverse(mat, q: int) -> list[list[int]]:
    """Inverse of a square matrix over GF(q); raises if singular."""
    n = len(mat)
    aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(mat)]
    red, piv = rref(aug, q, 2 * n)
    if piv[:n] != list(range(n)) or len(red) < n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in red[:n]]


def matmul(a, b, q: int) -> list[list[int]]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) % q for col in bt] for row in a]


def solve(mat, rhs, q: int):
    """One solution x of M x = rhs over GF(q), or None if inconsistent."""
    ncols = len(mat[0]) if mat else 0
    aug = [list(r) + [b % q] for r, b in zip(mat, rhs)]
    red, piv = rref(aug, q, ncols + 1)
    if ncols in piv:
        return None
    x = [0] * ncols
    for row, p in zip(red, piv):
        x[p] = row[ncols]
    return x


# ---------------------------------------------------------------------------
# extension-field elimination (field ops through a GF instance)


def ext_rref(F, rows, ncols: int):
    """RREF over GF(q^m) for rows of field-element ints."""
    work = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = F.inv(work[r][col])
        prow = [F.mul(inv, x) for x in work[r]]
        work[r] = prow
        for i in range(len(work)):
            c = work[i][col]
            if i != r and c:
                work[i] = [F.sub(a, F.mul(c, b)) for a, b in zip(work[i], prow)]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def ext_solve(F, mat, rhs):
    """Unique-or-any solution of M x = rhs over GF(q^m); None if inconsistent."""
    ncols = len(mat[0])
    red, piv = ext_rref(F, [list(r) + [b] for r, b in zip(mat, rhs)], ncols + 1)
    if ncols in piv:
        return None
    x = [0] * ncols
    for row, p in zip(red, piv):
        x[p] = row[ncols]
    return x


def ext_nullspace(F, rows, ncols: int) -> list[list[int]]:
    red, piv = ext_rref(F, rows, ncols)
    basis = []
    for f in (j for j in range(ncols) if j not in piv):
        x = [0] * ncols
        x[f] = 1
        for row, p in zip(red, piv):
            x[p] = F.neg(row[f])
        basis.append(x)
    return basis
