"""Exact bases of stress spaces.

The stress space of a framework is the kernel of its equilibrium matrix.
Bases are computed by exact Gauss-Jordan elimination over Fractions and
returned in reduced row echelon form over the edge ordering (pivot at the
lowest possible edge index first), which makes the output canonical: two
runs on equal inputs produce identical bytes.

Desk scale here is |E| <= ~100, where dense Fraction elimination is cheap;
the combinatorial hot path (circuit enumeration) lives in ``exactla``.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .framework import check_equilibrium, equilibrium_matrix


def rref(rows):
    """Reduced row echelon form over Fractions; returns (rows, pivot_cols)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(m)):
            if m[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        piv = m[r][col]
        m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def kernel_basis(rows, ncols):
    """Canonical basis of the kernel of a Fraction matrix."""
    reduced, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for i, pcol in enumerate(pivots):
            v[pcol] = -reduced[i][fcol]
        basis.append(v)
    # One more reduction canonicalizes the spanning set itself.
    canon, _ = rref(basis)
    return [tuple(row) for row in canon]


@dataclass(frozen=True)
class StressBasis:
    vectors: tuple  # tuple of stress tuples, canonical echelon form
    edge_count: int

    @property
    def dimension(self):
        return len(self.vectors)


def stress_basis(f):
    """Canonical exact basis of the stress space of a framework."""
    rows = equilibrium_matrix(f)
    basis = kernel_basis(rows, len(f.edges))
    sb = StressBasis(tuple(basis), len(f.edges))
    assert all(check_equilibrium(f, v) for v in sb.vectors)
    return sb


def dimension(f):
    return stress_basis(f).dimension


def is_stressable(f):
    return dimension(f) > 0


def solve_on_support(f, support):
    """Basis of stresses vanishing outside the given edge index set.

    Solved on the support columns only, then embedded with zeros, so the
    result is canonical in the full edge ordering as well.
    """
    support = sorted(set(support))
    ncols = len(f.edges)
    for k in support:
        if not (0 <= k < ncols):
            raise IndexError(f"support index {k} out of range")
    rows = equilibrium_matrix(f)
    sub = [[row[k] for k in support] for row in rows]
    basis = kernel_basis(sub, len(support))
    embedded = []
    for v in basis:
        full = [Fraction(0)] * ncols
        for j, k in enumerate(support):
            full[k] = v[j]
        embedded.append(tuple(full))
    return StressBasis(tuple(embedded), ncols)


def matrix_rank(rows):
    return len(rref(rows)[1])


def integer_rows(vectors):
    """Clear denominators rowwise to primitive integer vectors.

    Echelon rows lead with +1, so the cleared rows lead positive; output is
    deterministic and sign-canonical.
    """
    out = []
    for v in vectors:
        mult = lcm(*[x.denominator for x in v]) if v else 1
        ints = [int(x * mult) for x in v]
        g = gcd(*ints) if any(ints) else 1
        if g > 1:
            ints = [x // g for x in ints]
        out.append(tuple(ints))
    return out


def rational_combination(basis, coeffs):
    """The stress sum(coeffs[i] * basis.vectors[i]); exact."""
    if len(coeffs) != basis.dimension:
        raise ValueError("coefficient count must match dimension")
    n = basis.edge_count
    acc = [Fraction(0)] * n
    for c, vec in zip(coeffs, basis.vectors):
        if c == 0:
            continue
        for k in range(n):
            acc[k] += c * vec[k]
    return tuple(acc)
