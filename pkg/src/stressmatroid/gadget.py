"""The line-arrangement gadget and its verification suite.

Given a generic arrangement of n lines, the builder produces a framework
whose stress matroid remembers the combinatorial type of the arrangement:

  - an affine normalization (vertical shear + horizontal shift) moves every
    line so it enters a left-opening axis-aligned rhombus through sides AB
    and AD, with all pairwise crossings strictly inside;
  - the rhombus ABCD has A=(-a,0), B=(0,b), C=(a,0), D=(0,-b), so the
    reflection across diagonal BD is the exact map (x,y) -> (-x,y);
  - each line i meets AB at A_i and AD at D_i; B_i and C_i are the mirror
    images of A_i and D_i, giving per line the quadrilateral edges A_iB_i,
    B_iC_i, C_iD_i (A_iB_i and C_iD_i horizontal, hence parallel to AC;
    A_iD_i, B_iC_i and the axis BD concurrent, a Desargues certificate);
  - sides are subdivided by the A_i/B_i/C_i/D_i, diagonals AC and BD are
    single edges, and each line contributes its chord subdivided at the
    n-1 crossings T_ij.

Counts: |V| = 4 + 4n + n(n-1)/2, |E| = n^2 + 7n + 6, and the stress space
has dimension exactly n + 1.

The search for the rhombus is deterministic: a shear delta from a fixed
schedule removes horizontal lines, the shift moves all crossings and
x-intercepts to x <= -1, the half-width a = 2*(1 - min x) bounds the
crossing eccentricity away from the corners, and the half-height b is
picked inside an exact window (crossings inside; y-axis crossings of the
lines outside).  The window widens as the shift doubles, so the loop
terminates; every accepted output is re-verified predicate by predicate.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from .arrangements import (
    LineArrangement,
    crossings,
    perturb_preserving_type,
    require_generic,
)
from .errors import (
    ArityMismatch,
    ChainNotCollinear,
    ClassificationFailed,
    ConstructionFailed,
    InvalidInput,
    PlacementFailed,
    SeedDegenerate,
)
from .exact_geom import (
    Line,
    Point,
    Segment,
    collinear,
    cross_ratio,
    intersect,
    line_through,
    midpoint,
    reflect_vertical_axis,
    segment_interior_crossing,
)
from .framework import (
    Framework,
    Graph,
    degenerate_edges,
    local_sign_rules_check,
    make_framework,
)
from .sign_matroid import (
    matroid_equal,
    matroid_from_framework,
    sign_vector,
)
from .stress_kernel import (
    kernel_basis,
    matrix_rank,
    rational_combination,
    solve_on_support,
    stress_basis,
)
from .framework import equilibrium_matrix


@dataclass(frozen=True)
class GadgetLayout:
    framework: Framework
    labels: dict  # role label -> vertex id
    line_of: dict  # line index (1-based) -> chord edge indices, A_i to D_i
    n: int
    meta: dict  # transform, rhombus, line_permutation, roles


def _shear_schedule(n):
    yield Fraction(0)
    for k in range(1, 2 * n + 3):
        yield Fraction(k)
        yield Fraction(-k)
        yield Fraction(1, k)
        yield Fraction(-1, k)


def _construct(arr):
    """Normalize the arrangement and find an exactly verified rhombus."""
    require_generic(arr)
    n = arr.n
    pts0 = crossings(arr)

    delta = None
    for cand in _shear_schedule(n):
        if all(l.a - cand * l.b != 0 for l in arr.lines):
            delta = cand
            break
    if delta is None:
        raise ConstructionFailed("no shear kills all horizontal lines")

    # shear (x,y) -> (x, y + delta*x): line (a,b,c) -> (a - delta*b, b, c)
    sheared = [(l.a - delta * l.b, l.b, l.c) for l in arr.lines]
    intercepts = [-c / a for a, _, c in sheared]
    cross_x = [p.x for p in pts0.values()]
    shift = max(cross_x + intercepts) + 1

    for _ in range(64):
        lines = [Line(a, b, c + a * shift) for a, b, c in sheared]
        pts = {
            key: Point(p.x - shift, p.y + delta * p.x)
            for key, p in pts0.items()
        }
        xvals = [p.x for p in pts.values()] + [x - shift for x in intercepts]
        a_rh = 2 * (1 - min(xvals))
        lower = max(abs(p.y) * a_rh / (a_rh - abs(p.x)) for p in pts.values())
        uppers = [abs(-l.c / l.b) for l in lines if l.b != 0]
        if uppers and lower < min(uppers):
            b_rh = (lower + min(uppers)) / 2
            placed = _verify_rhombus(lines, pts, a_rh, b_rh)
            if placed is not None:
                placed.update(
                    n=n, delta=delta, shift=shift, a=a_rh, b=b_rh,
                    lines=lines, pts=pts)
                return placed
        shift *= 2
    raise ConstructionFailed("rhombus search budget exhausted")


def _verify_rhombus(lines, pts, a_rh, b_rh):
    """Exact postcondition check; returns side crossings or None."""
    A = Point(-a_rh, Fraction(0))
    B = Point(Fraction(0), b_rh)
    C = Point(a_rh, Fraction(0))
    D = Point(Fraction(0), -b_rh)
    ab = Segment(A, B)
    ad = Segment(A, D)
    a_pts, d_pts = [], []
    for l in lines:
        pa = segment_interior_crossing(l, ab)
        pd = segment_interior_crossing(l, ad)
        if pa is None or pd is None:
            return None
        a_pts.append(pa)
        d_pts.append(pd)
    if len(set(a_pts)) != len(a_pts) or len(set(d_pts)) != len(d_pts):
        return None
    for p in pts.values():
        if abs(p.x) * b_rh + abs(p.y) * a_rh >= a_rh * b_rh:
            return None
    # Order along AB (by x, from A) must be the reverse of the order of the
    # D_i along AD; both are forced once all crossings are interior.
    order_ab = sorted(range(len(lines)), key=lambda i: a_pts[i].x)
    order_ad = sorted(range(len(lines)), key=lambda i: d_pts[i].x)
    if order_ab != order_ad[::-1]:
        return None
    return {
        "corners": (A, B, C, D),
        "a_pts": a_pts,
        "d_pts": d_pts,
        "order": order_ab,
    }


def build_rhombus(arr):
    """Corner points (A, B, C, D) of a valid rhombus for the arrangement."""
    return _construct(arr)["corners"]


def build_gadget(arr):
    data = _construct(arr)
    n = data["n"]
    A, B, C, D = data["corners"]
    order = data["order"]  # gadget index i-1 -> original 0-based line index
    perm = [orig + 1 for orig in order]

    a_pt = {i: data["a_pts"][order[i - 1]] for i in range(1, n + 1)}
    d_pt = {i: data["d_pts"][order[i - 1]] for i in range(1, n + 1)}
    b_pt = {i: reflect_vertical_axis(a_pt[i], Fraction(0)) for i in a_pt}
    c_pt = {i: reflect_vertical_axis(d_pt[i], Fraction(0)) for i in d_pt}

    def cross_pt(i, j):
        oi, oj = order[i - 1], order[j - 1]
        return data["pts"][(min(oi, oj), max(oi, oj))]

    vertices = [("A", A), ("B", B), ("C", C), ("D", D)]
    vertices += [(f"A{i}", a_pt[i]) for i in range(1, n + 1)]
    vertices += [(f"B{i}", b_pt[i]) for i in range(1, n + 1)]
    vertices += [(f"C{i}", c_pt[i]) for i in range(1, n + 1)]
    vertices += [(f"D{i}", d_pt[i]) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            vertices.append((f"T{i}_{j}", cross_pt(i, j)))

    edges = []
    roles = []

    def add(u, v, role):
        edges.append((u, v))
        roles.append(role)
        return len(edges) - 1

    ab_path = ["A"] + [f"A{i}" for i in range(1, n + 1)] + ["B"]
    bc_path = ["B"] + [f"B{i}" for i in range(n, 0, -1)] + ["C"]
    cd_path = ["C"] + [f"C{i}" for i in range(n, 0, -1)] + ["D"]
    da_path = ["D"] + [f"D{i}" for i in range(1, n + 1)] + ["A"]
    for name, path in (("AB", ab_path), ("BC", bc_path),
                       ("CD", cd_path), ("DA", da_path)):
        for u, v in zip(path, path[1:]):
            add(u, v, ("side", name))
    add("A", "C", ("diag", "AC"))
    add("B", "D", ("diag", "BD"))
    for i in range(1, n + 1):
        add(f"A{i}", f"B{i}", ("quad", i, 0))
        add(f"B{i}", f"C{i}", ("quad", i, 1))
        add(f"C{i}", f"D{i}", ("quad", i, 2))

    positions = dict(vertices)
    line_of = {}
    for i in range(1, n + 1):
        direction = d_pt[i] - a_pt[i]

        def param(vid, direction=direction, base=a_pt[i]):
            p = positions[vid] - base
            return direction.x * p.x + direction.y * p.y

        hops = sorted(
            (f"T{min(i, j)}_{max(i, j)}" for j in range(1, n + 1) if j != i),
            key=param)
        path = [f"A{i}"] + hops + [f"D{i}"]
        line_of[i] = [
            add(u, v, ("chord", i, k))
            for k, (u, v) in enumerate(zip(path, path[1:]))
        ]

    fw = make_framework(vertices, edges)
    assert len(fw.vertex_ids) == 4 + 4 * n + n * (n - 1) // 2
    assert len(fw.edges) == n * n + 7 * n + 6
    assert not degenerate_edges(fw)

    labels = {vid: vid for vid, _ in vertices}
    meta = {
        "transform": {"shear": data["delta"], "shift": data["shift"]},
        "rhombus": {"a": data["a"], "b": data["b"]},
        "line_permutation": perm,
        "roles": roles,
    }
    return GadgetLayout(fw, labels, line_of, n, meta)


# --- circuit classification ---

def _role_index_sets(layout):
    roles = layout.meta["roles"]
    sides = {k for k, r in enumerate(roles) if r[0] == "side"}
    diag_ac = next(k for k, r in enumerate(roles) if r == ("diag", "AC"))
    diag_bd = next(k for k, r in enumerate(roles) if r == ("diag", "BD"))
    quads = {i: set() for i in range(1, layout.n + 1)}
    chords = {i: set() for i in range(1, layout.n + 1)}
    for k, r in enumerate(roles):
        if r[0] == "quad":
            quads[r[1]].add(k)
        elif r[0] == "chord":
            chords[r[1]].add(k)
    return sides, diag_ac, diag_bd, quads, chords


def discover_circuits(layout, circuits=None):
    """Select and label the four named circuit families.

    The full circuit set of a gadget is larger than the named families
    (compositions of them can cancel onto incomparable minimal supports),
    so classification is a selection:

      a   - the unique circuit supported exactly on the subdivided sides
            plus both diagonals;
      c_i - the minimum-support circuit through diagonal AC containing the
            line-i quadrilateral and touching its chord (Desargues prism);
      d_i - the same through diagonal BD;
      b_i - the diagonal-free band over the cyclically consecutive pair
            (i, i+1), read (1, n) for i = n.  Bands exist over every pair
            of lines; the cyclic choice keeps n selections deterministic.

    Every circuit either fills a line's chord or avoids it: a stress on a
    partial chain is impossible (equal unit magnitudes across each crossing
    force all-or-nothing per line), so a partial chain signals a bug.
    Unselected circuits are returned under "other".
    """
    from .sign_matroid import circuits_from_basis

    fw = layout.framework
    n = layout.n
    if circuits is None:
        circuits = circuits_from_basis(stress_basis(fw))
    sides, diag_ac, diag_bd, quads, chords = _role_index_sets(layout)
    side_diag = sides | {diag_ac, diag_bd}

    a_circ = None
    bands = {}
    prism_cands = {("c", i): [] for i in range(1, n + 1)}
    prism_cands.update({("d", i): [] for i in range(1, n + 1)})
    for circ in circuits:
        supp = {k for k, ch in enumerate(circ) if ch != "0"}
        full = [i for i in range(1, n + 1) if chords[i] <= supp]
        partial = [
            i for i in range(1, n + 1)
            if chords[i] & supp and not chords[i] <= supp
        ]
        if partial:
            raise ClassificationFailed(f"partial chain support in {circ}")
        has_ac = diag_ac in supp
        has_bd = diag_bd in supp
        if supp == side_diag:
            if a_circ is not None:
                raise ClassificationFailed("two side-diagonal circuits")
            a_circ = circ
        elif not has_ac and not has_bd:
            if len(full) == 2 and all(quads[i] <= supp for i in full):
                key = (full[0], full[1])
                if key in bands:
                    raise ClassificationFailed(f"two bands over lines {key}")
                bands[key] = circ
        elif has_ac != has_bd:
            kind = "c" if has_ac else "d"
            for i in full:
                if quads[i] <= supp:
                    prism_cands[(kind, i)].append(circ)

    if a_circ is None:
        raise ClassificationFailed("no side-diagonal circuit")

    c_of, d_of = {}, {}
    for kind, out in (("c", c_of), ("d", d_of)):
        for i in range(1, n + 1):
            cands = prism_cands[(kind, i)]
            if not cands:
                raise ClassificationFailed(f"no ({kind}_{i}) circuit")
            best = min(sum(ch != "0" for ch in c) for c in cands)
            ties = [c for c in cands if sum(ch != "0" for ch in c) == best]
            if len(ties) != 1:
                raise ClassificationFailed(f"ambiguous ({kind}_{i}) circuit")
            out[i] = ties[0]

    b_of = {}
    for i in range(1, n + 1):
        key = (i, i + 1) if i < n else (1, n)
        if key not in bands:
            raise ClassificationFailed(f"no band over lines {key}")
        b_of[i] = bands[key]

    named = {a_circ} | set(c_of.values()) | set(d_of.values()) | set(bands.values())
    other = [c for c in circuits if c not in named]
    return {"a": a_circ, "b": b_of, "c": c_of, "d": d_of,
            "bands": bands, "other": other}


def _circuit_vector(fw, circ):
    """The 1-dimensional stress realizing a circuit, oriented to match it."""
    supp = [k for k, ch in enumerate(circ) if ch != "0"]
    basis = solve_on_support(fw, supp)
    if basis.dimension != 1:
        raise ClassificationFailed(
            f"support of {circ} solves to dimension {basis.dimension}")
    vec = basis.vectors[0]
    if sign_vector(vec) == circ:
        return vec
    flipped = tuple(-x for x in vec)
    if sign_vector(flipped) == circ:
        return flipped
    raise ClassificationFailed(f"support solution does not match {circ}")


def verify_gadget(layout, samples=12, seed=7):
    """Re-derive and check every structural claim about a built gadget.

    Returns a report dict; never raises on a failed check (failures are
    itemized so a broken construction is fully visible in one pass).
    """
    fw = layout.framework
    n = layout.n
    checks = []

    def check(name, ok, detail=""):
        checks.append({"name": name, "pass": bool(ok), "detail": detail})

    check("vertex-count", len(fw.vertex_ids) == 4 + 4 * n + n * (n - 1) // 2)
    check("edge-count", len(fw.edges) == n * n + 7 * n + 6)
    check("no-degenerate-edges", not degenerate_edges(fw))

    basis = stress_basis(fw)
    check("dimension", basis.dimension == n + 1,
          f"dim={basis.dimension}, want {n + 1}")

    _check_geometry(layout, check)

    try:
        classes = discover_circuits(layout)
    except ClassificationFailed as exc:
        check("circuit-classification", False, str(exc))
        classes = None
    if classes is not None:
        check("circuit-classification", True,
              f"a + {len(classes['b'])} bands + {len(classes['c'])} AC-prisms "
              f"+ {len(classes['d'])} BD-prisms, {len(classes['other'])} other")
        _check_spans(fw, classes, n, basis, check)
        _check_type_a_signs(layout, classes["a"], check)

    rng = random.Random(seed)
    stresses = []
    for _ in range(samples):
        coeffs = [Fraction(rng.randint(-50, 50), rng.randint(1, 9))
                  for _ in range(basis.dimension)]
        stresses.append(rational_combination(basis, coeffs))

    bad = []
    for s in list(basis.vectors) + stresses:
        bad.extend(local_sign_rules_check(fw, s))
    check("local-sign-rules", not bad, f"{len(bad)} violations" if bad else "")

    ratio_ok, ratio_msg = _check_side_ratios(layout, stresses)
    check("side-ratio-invariance", ratio_ok, ratio_msg)

    quad_ok, quad_msg = _check_quad_vanishing(layout)
    check("quadrilateral-vanishing", quad_ok, quad_msg)

    return {"n": n, "passed": all(c["pass"] for c in checks), "checks": checks}


def _check_geometry(layout, check):
    fw = layout.framework
    n = layout.n
    pos = fw.positions
    a_rh = layout.meta["rhombus"]["a"]
    b_rh = layout.meta["rhombus"]["b"]

    mirror_ok = all(
        pos[f"B{i}"] == reflect_vertical_axis(pos[f"A{i}"], Fraction(0))
        and pos[f"C{i}"] == reflect_vertical_axis(pos[f"D{i}"], Fraction(0))
        for i in range(1, n + 1))
    check("mirror-symmetry", mirror_ok)

    horiz_ok = all(
        pos[f"A{i}"].y == pos[f"B{i}"].y and pos[f"C{i}"].y == pos[f"D{i}"].y
        for i in range(1, n + 1))
    check("quad-edges-parallel-AC", horiz_ok)

    desargues_ok = True
    for i in range(1, n + 1):
        chord = line_through(pos[f"A{i}"], pos[f"D{i}"])
        mirrored = line_through(pos[f"B{i}"], pos[f"C{i}"])
        if chord.b == 0 and mirrored.b == 0:
            continue  # both parallel to BD: concurrent at infinity
        meet = intersect(chord, mirrored)
        if meet is None or meet.x != 0:
            desargues_ok = False
    check("desargues-on-BD", desargues_ok)

    inside_ok = all(
        abs(p.x) * b_rh + abs(p.y) * a_rh < a_rh * b_rh
        for vid, p in pos.items() if vid.startswith("T"))
    check("crossings-strictly-inside", inside_ok)

    chains_ok = True
    for i in range(1, n + 1):
        path_pts = _chain_points(layout, i)
        first, last = path_pts[0], path_pts[-1]
        if any(not collinear(first, last, p) for p in path_pts[1:-1]):
            chains_ok = False
    check("chains-collinear", chains_ok)

    order_ok = all(
        pos[f"A{i}"].x < pos[f"A{i + 1}"].x and pos[f"D{i}"].x > pos[f"D{i + 1}"].x
        for i in range(1, n))
    check("side-orders", order_ok)


def _check_spans(fw, classes, n, basis, check):
    try:
        a_vec = _circuit_vector(fw, classes["a"])
        d_vecs = [_circuit_vector(fw, classes["d"][i]) for i in range(1, n + 1)]
        c_vecs = [_circuit_vector(fw, classes["c"][i]) for i in range(1, n + 1)]
    except ClassificationFailed as exc:
        check("basis-families", False, str(exc))
        return
    rank_ad = matrix_rank([list(a_vec)] + [list(v) for v in d_vecs])
    rank_ac = matrix_rank([list(a_vec)] + [list(v) for v in c_vecs])
    check("a-with-d-basis", rank_ad == n + 1 == basis.dimension,
          f"rank {rank_ad}")
    check("a-with-c-basis", rank_ac == n + 1 == basis.dimension,
          f"rank {rank_ac}")


def _check_type_a_signs(layout, a_circ, check):
    sides, diag_ac, diag_bd, _, _ = _role_index_sets(layout)
    side_chars = {a_circ[k] for k in sides}
    diag_chars = {a_circ[diag_ac], a_circ[diag_bd]}
    ok = (len(side_chars) == 1 and len(diag_chars) == 1
          and side_chars != diag_chars and "0" not in side_chars | diag_chars)
    check("type-a-signs", ok, a_circ)


def _chain_points(layout, i):
    fw = layout.framework
    path = [f"A{i}"]
    for k in layout.line_of[i]:
        u, v = fw.edges[k]
        path.append(v if u == path[-1] else u)
    return [fw.pos(vid) for vid in path]


def _check_side_ratios(layout, stresses):
    """Lemma of mirror-side proportionality: s(A_iA_{i+1}) : s(B_iB_{i+1})
    does not depend on i, and likewise for the C/D sides; exact rationals.
    """
    fw = layout.framework
    n = layout.n
    for s in stresses:
        for left, right in (("A", "B"), ("C", "D")):
            ratios = set()
            for i in range(1, n):
                num = s[fw.edge_index(f"{left}{i}|{left}{i + 1}")]
                den = s[fw.edge_index(f"{right}{i}|{right}{i + 1}")]
                if den == 0:
                    if num != 0:
                        return False, f"zero against nonzero at {left}{i}"
                    continue
                ratios.add(num / den)
            if len(ratios) > 1:
                return False, f"ratios {sorted(ratios)} on {left}/{right} sides"
    return True, ""


def _check_quad_vanishing(layout):
    """Forcing one quadrilateral edge to zero kills the whole ladder."""
    fw = layout.framework
    ncols = len(fw.edges)
    _, _, _, quads, chords = _role_index_sets(layout)
    rows = equilibrium_matrix(fw)
    for i in range(1, layout.n + 1):
        first = min(quads[i])
        pin = [Fraction(0)] * ncols
        pin[first] = Fraction(1)
        constrained = kernel_basis(rows + [pin], ncols)
        targets = (quads[i] | chords[i]) - {first}
        for vec in constrained:
            for k in targets:
                if vec[k] != 0:
                    return False, f"edge {fw.edge_key(k)} survives pinning line {i}"
    return True, ""


# --- the projection back to arrangements ---

def extract_arrangement(layout, framework=None):
    """Read the arrangement back off the chord chains.

    Each chain must be exactly collinear (ChainNotCollinear otherwise); the
    affine hulls are pulled back through the recorded normalization and
    returned in the original input labeling, so a round trip reproduces the
    input lines exactly (canonical scaling included).
    """
    lay = layout if framework is None else GadgetLayout(
        framework, layout.labels, layout.line_of, layout.n, layout.meta)
    delta = layout.meta["transform"]["shear"]
    shift = layout.meta["transform"]["shift"]
    perm = layout.meta["line_permutation"]
    out = [None] * layout.n
    for i in range(1, layout.n + 1):
        pts = _chain_points(lay, i)
        first, last = pts[0], pts[-1]
        if first == last:
            raise ChainNotCollinear(f"chain {i} collapsed")
        for p in pts[1:-1]:
            if not collinear(first, last, p):
                raise ChainNotCollinear(f"chain {i} is bent")
        l = line_through(first, last)
        # invert shift then shear: (a,b,c) -> (a + delta*b, b, c - a*shift)
        out[perm[i - 1] - 1] = Line(l.a + delta * l.b, l.b, l.c - l.a * shift)
    return LineArrangement(tuple(out))


def matroid_invariance_harness(arr, trials, seed, inequivalent=None,
                               magnitude=Fraction(1, 100)):
    """Rebuild over type-preserving perturbations; matroids must agree.

    Comparison runs under the label correspondence: a perturbation inside
    the stratum reproduces the same chord adjacency, so the labeled edge
    sets coincide and circuits must transport exactly.  When an
    inequivalent arrangement is supplied its gadget matroid must differ;
    crossing a stratum wall reorders chords through different T vertices,
    so the labeled matroids usually differ already at the edge-label level.
    Failures are itemized in the report, never raised.
    """
    require_generic(arr)
    base = build_gadget(arr)
    base_matroid = matroid_from_framework(base.framework)
    rng = random.Random(seed)
    results = []
    for t in range(trials):
        sub_seed = rng.randrange(2**31)
        entry = {"trial": t, "seed": sub_seed}
        try:
            perturbed = perturb_preserving_type(arr, magnitude, sub_seed)
            layout = build_gadget(perturbed)
            if layout.meta["line_permutation"] != base.meta["line_permutation"]:
                entry["equal"] = False
                entry["detail"] = "line roles diverged between builds"
            else:
                entry["equal"] = matroid_equal(
                    base_matroid, matroid_from_framework(layout.framework))
        except Exception as exc:  # itemized, not raised
            entry["equal"] = False
            entry["detail"] = f"{type(exc).__name__}: {exc}"
        results.append(entry)
    report = {
        "trials": results,
        "all_equal": all(r["equal"] for r in results),
    }
    if inequivalent is not None:
        other = build_gadget(inequivalent)
        other_matroid = matroid_from_framework(other.framework)
        try:
            differs = not matroid_equal(base_matroid, other_matroid)
            detail = "circuit sets differ" if differs else "circuit sets equal"
        except ArityMismatch as exc:
            differs = True
            detail = f"labeled edge sets differ: {exc}"
        report["inequivalent_differs"] = differs
        report["inequivalent_detail"] = detail
    return report


# --- edge replacement by a K4 minus the edge ---

def _k4_points(u_pt, v_pt, alpha, beta):
    mid = midpoint(u_pt, v_pt)
    d = v_pt - u_pt
    normal = Point(-d.y, d.x)  # left of u -> v
    p = Point(mid.x + alpha * normal.x + beta * d.x,
              mid.y + alpha * normal.y + beta * d.y)
    q = Point(mid.x + alpha * normal.x - beta * d.x,
              mid.y + alpha * normal.y - beta * d.y)
    return p, q


def k4_replace(f, edge, side):
    """Replace an edge by two new vertices and the five other K4 edges.

    The new vertices sit strictly on the requested side of the removed
    edge; the right-hand placement is the exact mirror of the left-hand
    one across the edge's line, which transports stresses verbatim and
    makes the two results' matroids equal.  Placement retries a fixed
    rational schedule until no vertex gains a parallel incident pair.
    """
    if side not in ("left", "right"):
        raise InvalidInput(f"side must be left or right, got {side!r}")
    k = f.edge_index(edge)
    u, v = f.edges[k]
    u_pt, v_pt = f.pos(u), f.pos(v)
    if u_pt == v_pt:
        raise InvalidInput("cannot replace a degenerate edge")

    base_a = f"K_{u}_{v}_a"
    base_b = f"K_{u}_{v}_b"
    while base_a in f.positions or base_b in f.positions:
        base_a += "x"
        base_b += "x"

    old_edges = [e for j, e in enumerate(f.edges) if j != k]
    new_pairs = [(u, base_a), (u, base_b), (base_a, base_b),
                 (base_a, v), (base_b, v)]

    for variant in range(32):
        alpha = Fraction(1, 4 + variant)
        if side == "right":
            alpha = -alpha
        beta = Fraction(1 + variant, 8 + 5 * variant)
        pa, pb = _k4_points(u_pt, v_pt, alpha, beta)
        positions = dict(f.positions)
        positions[base_a] = pa
        positions[base_b] = pb
        vertex_ids = tuple(f.vertex_ids) + (base_a, base_b)
        graph = Graph(vertex_ids, tuple(old_edges) + tuple(new_pairs))
        candidate = Framework(graph, positions)
        old_indices = set(range(len(old_edges)))
        if _no_new_parallel_pairs(candidate, {base_a, base_b, u, v},
                                  old_indices):
            return candidate
    raise PlacementFailed(f"no valid K4 placement for edge {edge}")


def _no_new_parallel_pairs(fw, touched, old_indices):
    for vid in touched:
        inc = fw.incident(vid)
        dirs = []
        for kk, other in inc:
            d = fw.pos(other) - fw.pos(vid)
            if d.x == 0 and d.y == 0:
                return False
            dirs.append((kk, d))
        for x in range(len(dirs)):
            for y in range(x + 1, len(dirs)):
                ke, de = dirs[x]
                kf, df = dirs[y]
                if ke in old_indices and kf in old_indices:
                    continue  # pre-existing pair, not this placement's job
                if de.x * df.y - de.y * df.x == 0:
                    return False
    return True


# --- the chains-only variant ---

def gamma_prime(arr):
    """Framework of the chord chains alone, plus one full-span edge per line.

    Keeps only the vertices A_i, D_i, T_ij.  Every edge lies on one of the
    arrangement's lines: the n chain segments of line i plus the single
    edge (A_i, D_i) spanning it.  Returns (framework, matroid); the stress
    space has one dimension per line (chain against span).
    """
    layout = build_gadget(arr)
    src = layout.framework
    n = layout.n
    keep = [vid for vid in src.vertex_ids
            if vid[0] in "AD" and len(vid) > 1 or vid.startswith("T")]
    vertices = [(vid, src.pos(vid)) for vid in keep]
    edges = []
    for i in range(1, n + 1):
        for k in layout.line_of[i]:
            edges.append(src.edges[k])
    for i in range(1, n + 1):
        edges.append((f"A{i}", f"D{i}"))
    fw = make_framework(vertices, edges)
    return fw, matroid_from_framework(fw)


# --- harmonic forcing ---

def _line_param(origin, direction, p):
    if direction.x != 0:
        return (p.x - origin.x) / direction.x
    return (p.y - origin.y) / direction.y


def harmonic_gadget(p1, p2, p3):
    """Complete-quadrangle configuration forcing the fourth harmonic point.

    From three distinct collinear seed points, builds the eight-point
    configuration whose ten collinear triples each carry a triangle; the
    fourth distinguished point is pinned at cross ratio -1 exactly.  Also
    returns the all-collinear comparison realization (same graph, every
    vertex on one line), whose sign matroid provably differs: the triangle
    on {P, R, 2} supports a stress there but not in the generic picture.
    """
    if p1 == p2 or p1 == p3 or p2 == p3:
        raise SeedDegenerate("seed points must be pairwise distinct")
    if not collinear(p1, p2, p3):
        raise SeedDegenerate("seed points must be collinear")
    axis = line_through(p1, p2)
    d = axis.direction()
    t3 = _line_param(p1, d, p3)
    t2 = _line_param(p1, d, p2)
    if 2 * t3 == t2:  # harmonic conjugate of the midpoint lies at infinity
        raise SeedDegenerate("third point is the midpoint of the first two")
    normal = Point(-d.y, d.x)

    for mu_num, rho in ((1, 2), (1, 3), (2, 3), (1, 5), (3, 2), (2, 5),
                        (1, 7), (3, 5), (4, 3), (5, 2), (2, 7), (5, 3)):
        mu = Fraction(mu_num)
        P = Point(p3.x + mu * normal.x, p3.y + mu * normal.y)
        R = Point(p1.x + Fraction(rho) * (P.x - p1.x),
                  p1.y + Fraction(rho) * (P.y - p1.y))
        try:
            S = intersect(line_through(p3, R), line_through(p2, P))
            if S is None:
                continue
            Q = intersect(line_through(p1, S), line_through(p2, R))
            if Q is None:
                continue
            p4 = intersect(line_through(P, Q), axis)
            if p4 is None:
                continue
        except Exception:
            continue
        pts = {"1": p1, "2": p2, "3": p3, "4": p4,
               "P": P, "Q": Q, "R": R, "S": S}
        if len(set(pts.values())) != 8:
            continue
        triples = _collinear_triples(pts)
        if triples != _EXPECTED_TRIPLES:
            continue
        assert cross_ratio(p1, p2, p3, p4) == -1
        fw = _triples_framework(pts, _EXPECTED_TRIPLES)
        comparison = Framework(
            fw.graph,
            {vid: Point(Fraction(i), Fraction(0))
             for i, vid in enumerate(fw.vertex_ids)})
        witness_support = [fw.edge_index("P|R"), fw.edge_index("2|R"),
                           fw.edge_index("2|P")]
        generic_dim = solve_on_support(fw, witness_support).dimension
        flat = solve_on_support(comparison, witness_support)
        differs = generic_dim == 0 and flat.dimension >= 1
        extras = {
            "comparison": comparison,
            "cross_ratio": Fraction(-1),
            "matroids_differ": differs,
            "witness_support": [fw.edge_key(k) for k in witness_support],
            "witness": sign_vector(flat.vectors[0]) if flat.dimension else None,
        }
        return fw, ("1", "2", "3", "4"), extras
    raise ConstructionFailed("no generic quadrangle over the seed schedule")


_VERTEX_ORDER = ("1", "2", "3", "4", "P", "Q", "R", "S")
_EXPECTED_TRIPLES = frozenset({
    frozenset(t) for t in (
        ("1", "2", "3"), ("1", "2", "4"), ("1", "3", "4"), ("2", "3", "4"),
        ("1", "R", "P"), ("1", "S", "Q"), ("2", "S", "P"), ("2", "R", "Q"),
        ("3", "R", "S"), ("4", "P", "Q"),
    )
})


def _collinear_triples(pts):
    ids = _VERTEX_ORDER
    out = set()
    for x in range(8):
        for y in range(x + 1, 8):
            for z in range(y + 1, 8):
                if collinear(pts[ids[x]], pts[ids[y]], pts[ids[z]]):
                    out.add(frozenset((ids[x], ids[y], ids[z])))
    return out


def _triples_framework(pts, triples):
    vertices = [(vid, pts[vid]) for vid in _VERTEX_ORDER]
    order = {vid: i for i, vid in enumerate(_VERTEX_ORDER)}
    edges = []
    seen = set()
    for tri in sorted(triples, key=lambda t: sorted(order[v] for v in t)):
        tri = sorted(tri, key=order.get)
        for u, v in ((tri[0], tri[1]), (tri[1], tri[2]), (tri[0], tri[2])):
            if (u, v) not in seen:
                seen.add((u, v))
                edges.append((u, v))
    return make_framework(vertices, edges)
