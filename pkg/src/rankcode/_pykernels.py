"""Pure-Python implementations of the hot kernels.

These are the reference versions; ``_ckernels.pyx`` mirrors every function
here with the same signature and must return identical results.

Conventions: a GF(2) row vector is an int bitset (bit j = column j).  GF(q)
matrices for odd q are lists of lists of ints in 0..q-1.  GF(2^m) products
go through log/exp tables where ``exp`` has length 2*(2^m - 1).
"""


def gf2_rank(rows):
    """Rank over GF(2) of int bitsets (the XOR basis size)."""
    basis = []  # kept in descending order, so leading bits clear top-down
    for v in rows:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            i = 0
            while i < len(basis) and basis[i] > v:
                i += 1
            basis.insert(i, v)
    return len(basis)


def gf2_rref(rows, ncols):
    """Reduced row echelon form over GF(2).

    Pivots are taken from the lowest column index upward.  Returns
    ``(rows, pivots)`` with rows sorted by pivot column.
    """
    work = [v for v in rows if v]
    out, pivots = [], []
    r = 0
    for col in range(ncols):
        bit = 1 << col
        piv = None
        for i in range(r, len(work)):
            if work[i] & bit:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        p = work[r]
        for i in range(len(work)):
            if i != r and work[i] & bit:
                work[i] ^= p
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    out = work[:r]
    return out, pivots


def modq_rref(rows, q):
    """Reduced row echelon form over GF(q) for odd prime q."""
    work = [list(r) for r in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(work)):
            if work[i][col] % q:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = pow(work[r][col], q - 2, q)
        prow = [x * inv % q for x in work[r]]
        work[r] = prow
        for i in range(len(work)):
            c = work[i][col] % q
            if i != r and c:
                row = work[i]
                work[i] = [(a - c * b) % q for a, b in zip(row, prow)]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return [[x % q for x in row] for row in work[:r]], pivots


def modq_rank(rows, q):
    return len(modq_rref(rows, q)[1])


def gf2m_dot(tab, xs, ys):
    """Sum of xs[i]*ys[i] in GF(2^m); ``tab`` comes from :func:`tables`."""
    exp, log = tab
    acc = 0
    for a, b in zip(xs, ys):
        if a and b:
            acc ^= exp[log[a] + log[b]]
    return acc


def gf2m_combine(tab, coeffs, rows, width):
    """Linear combination sum_i coeffs[i] * rows[i] of GF(2^m) vectors.

    ``rows`` is a list of length-``width`` lists; used for encoding
    (message times generator) and syndrome computation.
    """
    exp, log = tab
    out = [0] * width
    for c, row in zip(coeffs, rows):
        if not c:
            continue
        lc = log[c]
        for j in range(width):
            v = row[j]
            if v:
                out[j] ^= exp[lc + log[v]]
    return out


def gf2_select_xor(cols, masks, n):
    """Columns of X = A B over GF(2).

    A is given by its columns (ints), B by its rows (length-n bitsets);
    column j of X is the XOR of the cols whose B-row has bit j set.
    """
    out = [0] * n
    for a, mk in zip(cols, masks):
        j = 0
        while mk:
            if mk & 1:
                out[j] ^= a
            mk >>= 1
            j += 1
    return out


def gf2m_lin_eval(tab, coeffs, a, m):
    """sum_i coeffs[i] * a^(2^i) in GF(2^m) via log tables."""
    if not a:
        return 0
    exp, log = tab
    n = (1 << m) - 1
    la = log[a]
    acc = 0
    for c in coeffs:
        if c:
            acc ^= exp[log[c] + la]
        la = (la << 1) % n
    return acc


def tables(exp, log):
    """Backend representation of the GF(2^m) log/exp tables."""
    return (exp, log)
