# cython: language_level=3, boundscheck=False, wraparound=False
"""Integer linear-algebra kernels, compiled twin of ``_exactla_py``.

Same algorithms and results; values are arbitrary-precision Python ints,
so compilation only strips interpreter overhead from the subset sweep and
the Bareiss inner loops.  Keep the two modules in lockstep.
"""

from itertools import combinations


def det_int(rows):
    """Determinant of a square integer matrix (Bareiss elimination)."""
    cdef Py_ssize_t n, i, j, k
    cdef int sgn = 1
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
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
            ri = m[i]
            rk = m[k]
            mik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * piv - mik * rk[j]) // prev
            ri[k] = 0
        prev = piv
    return m[n - 1][n - 1] * sgn


def rank_int(rows):
    """Rank of an integer matrix, fraction-free elimination with pivoting."""
    cdef Py_ssize_t nrows, ncols, r, col, i, j
    cdef Py_ssize_t pivot_row
    m = [list(row) for row in rows]
    if not m:
        return 0
    nrows = len(m)
    ncols = len(m[0])
    r = 0
    prev = 1
    for col in range(ncols):
        pivot_row = -1
        for i in range(r, nrows):
            if m[i][col] != 0:
                pivot_row = i
                break
        if pivot_row < 0:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        piv = m[r][col]
        for i in range(r + 1, nrows):
            ri = m[i]
            rr = m[r]
            mic = ri[col]
            for j in range(ncols):
                ri[j] = (ri[j] * piv - mic * rr[j]) // prev
        prev = piv
        r += 1
        if r == nrows:
            break
    return r


def nullvector_minors(rows):
    """Integer kernel vector of a k x (k+1) integer matrix, or None.

    Component j is (-1)^j times the maximal minor omitting column j.
    """
    cdef Py_ssize_t k, n, j, t
    cdef int sgn = 1
    k = len(rows)
    if k == 0:
        return (1,)
    n = k + 1
    v = []
    for j in range(n):
        sub = [[row[t] for t in range(n) if t != j] for row in rows]
        v.append(det_int(sub) * sgn)
        sgn = -sgn
    if not any(v):
        return None
    return tuple(v)


def sign_circuits(cols):
    """Minimal-support sign vectors of the row space; see the pure twin."""
    cdef Py_ssize_t e, d, t
    cdef int flip
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
