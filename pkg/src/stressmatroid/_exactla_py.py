"""Integer linear-algebra kernels, pure-Python reference implementation.

These are the hot loops of circuit enumeration: fraction-free (Bareiss)
determinants and ranks of small integer matrices, nullvectors via signed
maximal minors, and the subset sweep producing minimal-support sign vectors
of a row space.  A compiled twin with identical semantics may shadow this
module at import time; see ``exactla``.

Everything here works on plain Python integers, so all results are exact at
arbitrary precision.  The fraction-free recurrence

    m[i][j] <- (m[i][j] * pivot - m[i][k] * m[k][j]) // prev

divides exactly by the previous pivot (Sylvester's identity), keeping
intermediate entries at determinant scale instead of exponential scale.
"""

from itertools import combinations


def det_int(rows):
    """Determinant of a square integer matrix (Bareiss elimination)."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sgn = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sgn = -sgn
                    break
            else:
                return 0
        piv = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            ri = m[i]
            rk = m[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * piv - mik * rk[j]) // prev
            ri[k] = 0
        prev = piv
    return sgn * m[n - 1][n - 1]


def rank_int(rows):
    """Rank of an integer matrix, fraction-free elimination with pivoting."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows = len(m)
    ncols = len(m[0])
    r = 0
    prev = 1
    for col in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if m[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        piv = m[r][col]
        for i in range(r + 1, nrows):
            mic = m[i][col]
            ri = m[i]
            rr = m[r]
            for j in range(ncols):
                ri[j] = (ri[j] * piv - mic * rr[j]) // prev
        prev = piv
        r += 1
        if r == nrows:
            break
    return r


def nullvector_minors(rows):
    """Integer kernel vector of a k x (k+1) integer matrix.

    Component j is (-1)^j times the maximal minor omitting column j; the
    result is orthogonal to every row (Laplace expansion of a matrix with a
    repeated row).  Returns None when the matrix has rank < k, i.e. when all
    maximal minors vanish.  For k = 0 the kernel of the empty matrix is the
    whole line, represented by (1,).
    """
    k = len(rows)
    if k == 0:
        return (1,)
    n = k + 1
    v = []
    sgn = 1
    for j in range(n):
        sub = [[row[t] for t in range(n) if t != j] for row in rows]
        v.append(sgn * det_int(sub))
        sgn = -sgn
    if not any(v):
        return None
    return tuple(v)


def sign_circuits(cols):
    """Minimal-support sign vectors of the row space spanned by d rows.

    ``cols`` is the sequence of e columns (each a length-d integer tuple) of
    a rank-d basis matrix.  Every (d-1)-subset of columns of rank d-1 pins a
    functional (unique up to sign) vanishing on it; applying that functional
    to all columns yields a sign vector of minimal nonzero support.  The
    sweep over all subsets produces every such vector.

    Returns the sorted list of canonical representatives (first nonzero
    entry '+'; antipodes implied).
    """
    e = len(cols)
    if e == 0:
        return []
    d = len(cols[0])
    if d == 0:
        return []
    found = set()
    for subset in combinations(range(e), d - 1):
        v = nullvector_minors([cols[j] for j in subset])
        if v is None:
            continue
        chars = []
        flip = 0
        for col in cols:
            dot = 0
            for t in range(d):
                dot += v[t] * col[t]
            if dot > 0:
                if flip == 0:
                    flip = 1
                chars.append("+" if flip == 1 else "-")
            elif dot < 0:
                if flip == 0:
                    flip = -1
                chars.append("+" if flip == -1 else "-")
            else:
                chars.append("0")
        if flip != 0:
            found.add("".join(chars))
    return sorted(found)
