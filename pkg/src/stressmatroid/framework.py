"""Graphs, planar realizations, and the equilibrium system.

A framework is a graph together with a map of its vertices into the rational
plane.  An equilibrium stress assigns a scalar to every edge so that at each
vertex the stress-weighted edge vectors sum to zero:

    sum over edges (u,w) at u of  s(u,w) * (p_u - p_w)  =  0.

Stress vectors are plain tuples of Fractions in the graph's edge order; that
order is the single source of truth for all sign-vector coordinates.

The convention above differs from weighting unit edge vectors only by the
positive factor |p_u - p_w| per edge, so sign patterns agree between the two;
comparisons of unit-convention magnitudes are done on squared values to stay
rational (see local_sign_rules_check and small_lemma_check).
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InvalidInput,
    LengthMismatch,
    NotEquilibrium,
    ShapeMismatch,
    SingularMatrix,
)
from .exact_geom import Point, pt, sign, sq_dist


@dataclass(frozen=True)
class Graph:
    vertex_ids: tuple
    edges: tuple  # pairs (u, v) of vertex ids; order fixes stress coordinates

    def __post_init__(self):
        ids = self.vertex_ids
        if len(set(ids)) != len(ids):
            raise InvalidInput("vertex ids must be distinct")
        seen = set()
        idset = set(ids)
        for u, v in self.edges:
            if u == v:
                raise InvalidInput(f"loop edge at {u!r}")
            if u not in idset or v not in idset:
                raise InvalidInput(f"edge ({u!r},{v!r}) references unknown vertex")
            key = frozenset((u, v))
            if key in seen:
                raise InvalidInput(f"repeated edge ({u!r},{v!r})")
            seen.add(key)


@dataclass(frozen=True)
class Framework:
    graph: Graph
    positions: dict  # vertex id -> Point, total on vertex_ids

    def __post_init__(self):
        for vid in self.graph.vertex_ids:
            if vid not in self.positions:
                raise InvalidInput(f"missing position for vertex {vid!r}")

    def pos(self, vid):
        return self.positions[vid]

    @property
    def edges(self):
        return self.graph.edges

    @property
    def vertex_ids(self):
        return self.graph.vertex_ids

    def edge_key(self, k):
        u, v = self.graph.edges[k]
        return f"{u}|{v}"

    def edge_keys(self):
        return [self.edge_key(k) for k in range(len(self.graph.edges))]

    def edge_index(self, key):
        """Resolve an edge by "u|v" key (either endpoint order) or index."""
        if isinstance(key, int):
            if 0 <= key < len(self.graph.edges):
                return key
            raise InvalidInput(f"edge index {key} out of range")
        parts = key.split("|")
        if len(parts) != 2:
            raise InvalidInput(f"bad edge key {key!r}")
        pair = set(parts)
        for k, (u, v) in enumerate(self.graph.edges):
            if {u, v} == pair:
                return k
        raise InvalidInput(f"no edge {key!r}")

    def edge_points(self, k):
        u, v = self.graph.edges[k]
        return self.positions[u], self.positions[v]

    def edge_sq_len(self, k):
        p, q = self.edge_points(k)
        return sq_dist(p, q)

    def incident(self, vid):
        """List of (edge index, other endpoint id) at a vertex."""
        out = []
        for k, (u, v) in enumerate(self.graph.edges):
            if u == vid:
                out.append((k, v))
            elif v == vid:
                out.append((k, u))
        return out


def make_framework(vertices, edges):
    """Build a framework from [(id, point or (x, y)), ...] and [(u, v), ...]."""
    graph = Graph(tuple(vid for vid, _ in vertices), tuple(tuple(e) for e in edges))
    positions = {}
    for vid, p in vertices:
        if not isinstance(p, Point):
            x, y = p
            p = pt(x, y)
        positions[vid] = p
    return Framework(graph, positions)


def equilibrium_matrix(f):
    """The (2|V|) x |E| coefficient matrix of the equilibrium system.

    Rows 2i, 2i+1 are the x and y balance equations of vertex i; the column
    of edge (u,v) holds p_u - p_v in the u rows and p_v - p_u in the v rows.
    Degenerate edges contribute zero columns.
    """
    vindex = {vid: i for i, vid in enumerate(f.vertex_ids)}
    rows = [[Fraction(0)] * len(f.edges) for _ in range(2 * len(f.vertex_ids))]
    for k, (u, v) in enumerate(f.edges):
        d = f.positions[u] - f.positions[v]
        iu, iv = vindex[u], vindex[v]
        rows[2 * iu][k] = d.x
        rows[2 * iu + 1][k] = d.y
        rows[2 * iv][k] = -d.x
        rows[2 * iv + 1][k] = -d.y
    return rows


def check_equilibrium(f, s):
    """True iff equilibrium_matrix(f) . s = 0 exactly."""
    if len(s) != len(f.edges):
        raise LengthMismatch(f"stress length {len(s)} != edge count {len(f.edges)}")
    sums = {vid: [Fraction(0), Fraction(0)] for vid in f.vertex_ids}
    for k, (u, v) in enumerate(f.edges):
        if s[k] == 0:
            continue
        d = f.positions[u] - f.positions[v]
        su = sums[u]
        sv = sums[v]
        su[0] += s[k] * d.x
        su[1] += s[k] * d.y
        sv[0] -= s[k] * d.x
        sv[1] -= s[k] * d.y
    return all(sx == 0 and sy == 0 for sx, sy in sums.values())


def degenerate_edges(f):
    """Indices of edges whose endpoints share a position."""
    return {k for k in range(len(f.edges)) if f.edge_sq_len(k) == 0}


def affine_transform(f, M, t):
    """Apply p -> M p + t to every position; M must be invertible."""
    (m00, m01), (m10, m11) = M
    if m00 * m11 - m01 * m10 == 0:
        raise SingularMatrix("affine transform requires det M != 0")
    positions = {
        vid: Point(m00 * p.x + m01 * p.y + t.x, m10 * p.x + m11 * p.y + t.y)
        for vid, p in f.positions.items()
    }
    return Framework(f.graph, positions)


def _cross(d1, d2):
    return d1.x * d2.y - d1.y * d2.x


def _dot(d1, d2):
    return d1.x * d2.x + d1.y * d2.y


def _strictly_inside_cone(dm, d1, d2):
    # dm = alpha d1 + beta d2 with alpha, beta > 0, for non-collinear d1, d2.
    c12 = _cross(d1, d2)
    return sign(_cross(d1, dm)) == sign(c12) and sign(_cross(dm, d2)) == sign(c12)


def _unit_sq(f, s, k):
    # Squared unit-convention magnitude: s^2 * |edge|^2, a rational.
    return s[k] * s[k] * f.edge_sq_len(k)


def local_sign_rules_check(f, s):
    """Forced sign laws at recognizable vertex stars; [] iff all hold.

    Patterns are detected geometrically from edge directions, never from
    vertex labels.  For an equilibrium stress every law below is a theorem,
    so a non-empty result indicates a broken stress or framework.

      - two collinear edges pointing to opposite sides: equal signs
        (with a lone transversal at degree 3: the transversal vanishes);
      - two collinear edges pointing to the same side: opposite signs;
      - degree 3, one edge direction strictly inside the positive cone of
        the other two: the flanking edges share a sign, the middle edge
        carries the opposite sign;
      - degree 3, directions positively spanning the plane: all one sign;
      - degree 4 forming two crossing straight lines: opposite edges carry
        equal unit-convention stresses (equal signs and equal s^2 |e|^2).
    """
    if not check_equilibrium(f, s):
        raise NotEquilibrium("local sign rules require an equilibrium stress")
    violations = []

    def report(vid, rule, detail):
        violations.append({"vertex": vid, "rule": rule, "detail": detail})

    for vid in f.vertex_ids:
        inc = [(k, other) for k, other in f.incident(vid)]
        dirs = []
        for k, other in inc:
            d = f.positions[other] - f.positions[vid]
            if d.x == 0 and d.y == 0:
                break  # degenerate edge: no usable direction at this vertex
            dirs.append((k, d))
        else:
            deg = len(dirs)
            if deg == 2:
                (k1, d1), (k2, d2) = dirs
                if _cross(d1, d2) == 0:
                    if _dot(d1, d2) < 0:
                        if sign(s[k1]) != sign(s[k2]):
                            report(vid, "collinear-opposite", (k1, k2))
                    else:
                        if sign(s[k1]) != -sign(s[k2]):
                            report(vid, "collinear-same-side", (k1, k2))
            elif deg == 3:
                _check_degree3(f, s, vid, dirs, report)
            elif deg == 4:
                _check_degree4(f, s, vid, dirs, report)
    return violations


def _check_degree3(f, s, vid, dirs, report):
    collinear_pairs = [
        (i, j)
        for i in range(3)
        for j in range(i + 1, 3)
        if _cross(dirs[i][1], dirs[j][1]) == 0
    ]
    if len(collinear_pairs) == 0:
        ks = [k for k, _ in dirs]
        ds = [d for _, d in dirs]
        for m in range(3):
            i, j = [t for t in range(3) if t != m]
            if _strictly_inside_cone(ds[m], ds[i], ds[j]):
                if not (sign(s[ks[i]]) == sign(s[ks[j]]) == -sign(s[ks[m]])):
                    report(vid, "cone-flanked", (ks[i], ks[m], ks[j]))
                return
        if not (sign(s[ks[0]]) == sign(s[ks[1]]) == sign(s[ks[2]])):
            report(vid, "positively-spanning", tuple(ks))
    elif len(collinear_pairs) == 1:
        i, j = collinear_pairs[0]
        m = 3 - i - j
        ki, di = dirs[i]
        kj, dj = dirs[j]
        km = dirs[m][0]
        if sign(s[km]) != 0:
            report(vid, "transversal-nonzero", (km,))
        if _dot(di, dj) < 0:
            if sign(s[ki]) != sign(s[kj]):
                report(vid, "collinear-opposite", (ki, kj))
        else:
            if sign(s[ki]) != -sign(s[kj]):
                report(vid, "collinear-same-side", (ki, kj))
    # three mutually collinear edges: equilibrium handles it, no local rule


def _check_degree4(f, s, vid, dirs, report):
    # Two crossing straight lines means two collinear-opposite pairs on
    # distinct lines.  Find a partition into such pairs, if any.
    for j in range(1, 4):
        d0 = dirs[0][1]
        dj = dirs[j][1]
        if _cross(d0, dj) == 0 and _dot(d0, dj) < 0:
            rest = [t for t in range(1, 4) if t != j]
            da, db = dirs[rest[0]][1], dirs[rest[1]][1]
            if _cross(da, db) == 0 and _dot(da, db) < 0 and _cross(d0, da) != 0:
                for ki, kj in ((dirs[0][0], dirs[j][0]),
                               (dirs[rest[0]][0], dirs[rest[1]][0])):
                    if sign(s[ki]) != sign(s[kj]) or _unit_sq(f, s, ki) != _unit_sq(f, s, kj):
                        report(vid, "crossing-lines-equal", (ki, kj))
            return


def _unit_diff_sign(f, s, k1, k2):
    # Sign of s_unit(k2) - s_unit(k1) where s_unit = s * |edge|, computed
    # without radicals: compare signs first, then squared magnitudes.
    s1, s2 = sign(s[k1]), sign(s[k2])
    if s1 != s2:
        return sign(s2 - s1)
    if s1 == 0:
        return 0
    return s1 * sign(_unit_sq(f, s, k2) - _unit_sq(f, s, k1))


def small_lemma_check(f, s, vertex, ordering):
    """Sign law at a degree-4 vertex on a subdivided line (chain vertex).

    ``ordering`` supplies (chain_edge_1, chain_edge_2, E1, E2) as edge keys
    or indices: the two collinear chain edges in the orientation the law is
    read in, then the left and right transversal edges.  The law is

        SIGN(unit s(E1)) = SIGN(unit s_2 - unit s_1) = -SIGN(unit s(E2))

    in the unit-vector convention.  ShapeMismatch when the vertex star is
    not two opposite collinear edges plus two edges strictly on a common
    side of their line.
    """
    if len(ordering) != 4:
        raise ShapeMismatch("ordering must name four edges")
    ks = [f.edge_index(e) for e in ordering]
    if len(set(ks)) != 4:
        raise ShapeMismatch("ordering must name four distinct edges")
    inc = dict(f.incident(vertex))
    if set(ks) != set(inc.keys()):
        raise ShapeMismatch("ordering must be exactly the incident edges")
    k1, k2, ke1, ke2 = ks
    v = f.pos(vertex)
    far = {k: f.pos(inc[k]) - v for k in ks}
    if _cross(far[k1], far[k2]) != 0 or _dot(far[k1], far[k2]) >= 0:
        raise ShapeMismatch("chain edges must be collinear and opposite")
    u = far[k2] - far[k1]  # chain direction, edge 1 side toward edge 2 side
    side1 = sign(_cross(u, far[ke1]))
    side2 = sign(_cross(u, far[ke2]))
    if side1 == 0 or side1 != side2:
        raise ShapeMismatch("transversals must lie strictly on a common side")
    if not check_equilibrium(f, s):
        raise NotEquilibrium("small lemma requires an equilibrium stress")
    diff = _unit_diff_sign(f, s, k1, k2)
    return sign(s[ke1]) == diff and diff == -sign(s[ke2])


def small_lemma_ordering(f, vertex):
    """Canonical (chain1, chain2, E1, E2) ordering at a chain vertex.

    Chain pair = the collinear opposite pair (lowest edge index first);
    E1 is the transversal that makes the small-lemma law hold identically:
    with side sigma relative to the chain direction, E1 satisfies
    cross(dir E1, dir E2) * sigma < 0.
    """
    inc = f.incident(vertex)
    if len(inc) != 4:
        raise ShapeMismatch("chain vertex must have degree 4")
    v = f.pos(vertex)
    far = {k: f.pos(other) - v for k, other in inc}
    ks = sorted(far)
    pair = None
    for i in range(4):
        for j in range(i + 1, 4):
            a, b = ks[i], ks[j]
            if _cross(far[a], far[b]) == 0 and _dot(far[a], far[b]) < 0:
                if pair is not None:
                    raise ShapeMismatch("ambiguous chain pair")
                pair = (a, b)
    if pair is None:
        raise ShapeMismatch("no collinear opposite pair")
    k1, k2 = pair
    t1, t2 = [k for k in ks if k not in pair]
    u = far[k2] - far[k1]
    sigma = sign(_cross(u, far[t1]))
    if sigma == 0 or sigma != sign(_cross(u, far[t2])):
        raise ShapeMismatch("transversals must lie strictly on a common side")
    if sign(_cross(far[t1], far[t2])) * sigma < 0:
        e1, e2 = t1, t2
    else:
        e1, e2 = t2, t1
    return (k1, k2, e1, e2)
