"""Sign vectors of stress spaces.

The sign matroid of a framework is the set of coordinatewise sign patterns
realized by its stress space, encoded as strings over {+,-,0} in edge order.
Circuits are the patterns of minimal nonzero support; they determine the
whole set through composition

    (X o Y)_k = X_k if X_k != 0 else Y_k,

so identity of matroids is decided on circuits alone.  Canonical storage
keeps one representative per antipodal pair (first nonzero entry '+'),
sorted lexicographically; negation closure is implied.

Two independent routes compute the full sign-vector set: composition closure
of the circuits (fast) and a per-candidate exact feasibility decision by
Fourier-Motzkin elimination over the basis coefficients (the oracle, capped
at 10 edges).  The two must agree exactly; tests enforce this.
"""

import os
from dataclasses import dataclass
from itertools import product
from math import comb, gcd

from . import exactla
from .errors import (
    ArityMismatch,
    CapExceeded,
    CovectorsMissing,
    NotInPoset,
    TooLarge,
)
from .exact_geom import SIGN_CHARS, sign
from .stress_kernel import integer_rows

DEFAULT_MAX_CELLS = 10**6
DEFAULT_MAX_SUBSETS = 2 * 10**6


def _env_cap(name, default):
    raw = os.environ.get(name)
    if raw is None:
        return default
    return int(raw)


def sign_vector(values):
    """Sign string of a stress vector."""
    return "".join(SIGN_CHARS[sign(x)] for x in values)


def negate(sv):
    return sv.translate(str.maketrans("+-", "-+"))


def canonical(sv):
    for ch in sv:
        if ch == "+":
            return sv
        if ch == "-":
            return negate(sv)
    return sv


def compose(x, y):
    return "".join(a if a != "0" else b for a, b in zip(x, y))


def _columns(basis):
    ints = integer_rows(basis.vectors)
    return [tuple(row[k] for row in ints) for k in range(basis.edge_count)]


def circuits_from_basis(basis, max_subsets=None):
    """All minimal-support sign vectors, canonical and sorted.

    Sweeps the (d-1)-subsets of edge coordinates; the subset count is
    guarded by STRESSMATROID_MAX_SUBSETS (default 2e6).
    """
    d = basis.dimension
    e = basis.edge_count
    if d == 0:
        return []
    budget = max_subsets if max_subsets is not None else _env_cap(
        "STRESSMATROID_MAX_SUBSETS", DEFAULT_MAX_SUBSETS)
    need = comb(e, d - 1)
    if need > budget:
        raise CapExceeded(
            f"circuit enumeration needs {need} subsets (budget {budget})")
    return exactla.sign_circuits(_columns(basis))


def all_sign_vectors(basis, cap=None, circuits=None):
    """The full sign-vector set as composition closure of the circuits.

    Includes the zero string and both antipodes of every vector.  Raises
    CapExceeded when the set would outgrow the cap (flag, then
    STRESSMATROID_MAX_CELLS, then 1e6).
    """
    budget = cap if cap is not None else _env_cap(
        "STRESSMATROID_MAX_CELLS", DEFAULT_MAX_CELLS)
    e = basis.edge_count
    zero = "0" * e
    if circuits is None:
        circuits = circuits_from_basis(basis)
    signed = []
    for c in circuits:
        signed.append(c)
        signed.append(negate(c))
    out = {zero}
    frontier = [zero]
    while frontier:
        fresh = []
        for x in frontier:
            for c in signed:
                z = compose(x, c)
                if z not in out:
                    out.add(z)
                    fresh.append(z)
        if len(out) > budget:
            raise CapExceeded(f"sign-vector set exceeds cap {budget}")
        frontier = fresh
    return frozenset(out)


# --- independent oracle: Fourier-Motzkin feasibility per candidate ---

def _normalize_row(row):
    g = gcd(*[abs(x) for x in row])
    if g > 1:
        return tuple(x // g for x in row)
    return tuple(row)


def _fm_feasible(equalities, strict_rows, nvars):
    """Does some x satisfy eq . x = 0 for all, r . x > 0 for all strict rows?

    Homogeneous system over the rationals; integer pivoting throughout.
    Positive row combinations preserve strictness; an all-zero strict row
    is the contradiction 0 > 0.
    """
    eqs = [list(r) for r in equalities]
    rows = [list(r) for r in strict_rows]
    for col in range(nvars):
        pivot = None
        for i, r in enumerate(eqs):
            if r[col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        prow = eqs.pop(pivot)
        if prow[col] < 0:
            prow = [-x for x in prow]
        piv = prow[col]
        for group in (eqs, rows):
            for i, r in enumerate(group):
                if r[col] != 0:
                    f = r[col]
                    group[i] = [piv * a - f * b for a, b in zip(r, prow)]
    for col in range(nvars):
        if not rows:
            return True
        pos, neg, rest = [], [], []
        for r in rows:
            if r[col] > 0:
                pos.append(r)
            elif r[col] < 0:
                neg.append(r)
            else:
                rest.append(r)
        combined = {tuple(_normalize_row(r)) for r in rest}
        for p in pos:
            pc = p[col]
            for q in neg:
                qc = q[col]
                combined.add(_normalize_row(
                    [pc * b - qc * a for a, b in zip(p, q)]))
        rows = [list(r) for r in combined]
        for r in rows:
            if not any(r):
                return False
    return not rows


def sign_vectors_oracle(basis):
    """Decide every candidate string by exact linear feasibility.

    Hard-capped at 10 edges (3^e candidates).  Must agree exactly with
    all_sign_vectors; the closure and the oracle share no code path.
    """
    e = basis.edge_count
    if e > 10:
        raise TooLarge(f"oracle is capped at 10 edges, got {e}")
    d = basis.dimension
    if d == 0:
        return frozenset({"0" * e})
    cols = _columns(basis)
    out = set()
    for cand in product("+-0", repeat=e):
        eqs, strict = [], []
        for k, ch in enumerate(cand):
            if ch == "0":
                eqs.append(cols[k])
            elif ch == "+":
                strict.append(cols[k])
            else:
                strict.append(tuple(-x for x in cols[k]))
        if _fm_feasible(eqs, strict, d):
            out.add("".join(cand))
    return frozenset(out)


# --- the matroid object ---

@dataclass(frozen=True)
class StressMatroid:
    edge_order: tuple  # "u|v" labels
    circuits: tuple  # canonical representatives, sorted
    covectors: tuple = None  # optional canonical full set (zero included)


def matroid_from_basis(basis, edge_order, with_covectors=False, cap=None):
    circuits = circuits_from_basis(basis)
    covectors = None
    if with_covectors:
        full = all_sign_vectors(basis, cap=cap, circuits=circuits)
        covectors = tuple(sorted({canonical(v) for v in full}))
    return StressMatroid(tuple(edge_order), tuple(circuits), covectors)


def matroid_from_framework(f, with_covectors=False, cap=None):
    from .stress_kernel import stress_basis

    return matroid_from_basis(
        stress_basis(f), f.edge_keys(), with_covectors=with_covectors, cap=cap)


def _edge_label_key(label):
    # "u|v" and "v|u" name the same edge
    parts = label.split("|")
    return tuple(sorted(parts)) if len(parts) == 2 else (label,)


def matroid_equal(m1, m2, correspondence=None):
    """Exact equality of circuit sets under an edge-label bijection.

    ``correspondence`` maps labels of m1 to labels of m2; None means the
    identity on labels, with "u|v" and "v|u" treated as the same edge.
    Matroids are labeled objects: if the labels do not biject, they are
    not comparable and ArityMismatch is raised.  Circuits determine the
    full sign-vector set, so circuit equality decides matroid identity.
    """
    if len(m1.edge_order) != len(m2.edge_order):
        raise ArityMismatch("matroids have different edge counts")
    pos2 = {}
    for i, label in enumerate(m2.edge_order):
        key = _edge_label_key(label)
        if key in pos2:
            raise ArityMismatch(f"duplicate label {label!r} in second edge order")
        pos2[key] = i
    if correspondence is None:
        targets = list(m1.edge_order)
    else:
        if set(correspondence.keys()) != set(m1.edge_order):
            raise ArityMismatch("correspondence must cover every edge label")
        targets = [correspondence[label] for label in m1.edge_order]
    e = len(m1.edge_order)
    perm = []
    seen = set()
    for t in targets:
        key = _edge_label_key(t)
        if key not in pos2:
            raise ArityMismatch(f"edge label {t!r} has no counterpart")
        if key in seen:
            raise ArityMismatch(f"edge label {t!r} targeted twice")
        seen.add(key)
        perm.append(pos2[key])

    def transport(sv):
        out = ["0"] * e
        for k, ch in enumerate(sv):
            out[perm[k]] = ch
        return canonical("".join(out))

    return {transport(c) for c in m1.circuits} == set(m2.circuits)


def degenerate_edge_signature(m):
    """Edge indices whose unit sign vector is a circuit."""
    out = set()
    for c in m.circuits:
        nz = [k for k, ch in enumerate(c) if ch != "0"]
        if len(nz) == 1:
            out.add(nz[0])
    return out


# --- face poset ---

@dataclass(frozen=True)
class FacePoset:
    elements: frozenset  # all covectors, antipodes and zero included


def face_poset(m):
    if m.covectors is None:
        raise CovectorsMissing("face poset requires computed covectors")
    full = set()
    for v in m.covectors:
        full.add(v)
        full.add(negate(v))
    full.add("0" * len(m.edge_order))
    return FacePoset(frozenset(full))


def conformal_leq(x, y):
    return all(a == "0" or a == b for a, b in zip(x, y))


def tile_dimension(fp, x):
    """Longest chain from the zero vector to x, minus one."""
    if x not in fp.elements:
        raise NotInPoset(f"{x} is not a covector")
    below = sorted(
        (v for v in fp.elements if conformal_leq(v, x)),
        key=lambda v: (sum(ch != "0" for ch in v), v),
    )
    length = {}
    for v in below:
        best = 0
        for w in below:
            if w != v and conformal_leq(w, v):
                best = max(best, length[w])
        length[v] = best + 1
    return length[x] - 1
