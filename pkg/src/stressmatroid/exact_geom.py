"""Exact rational scalars and planar primitives.

All coordinates are ``fractions.Fraction``; every predicate below is decided
by exact sign computations, so no floating point ever enters a logic path.
Irrational quantities (segment lengths) are avoided throughout the package:
only squared lengths and signs are compared.

Lines are stored in the canonical scaling where the first nonzero coefficient
of (a, b, c) equals 1, which turns line equality into field-wise comparison.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import IdenticalLines, InvalidInput, NotCollinear, NotDistinct

Rational = Fraction


def rat(value):
    """Parse a rational from "num/den" strings, ints, or Fractions."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInput(f"bad rational literal {value!r}") from exc
    raise InvalidInput(f"bad rational value {value!r}")


def rat_str(value):
    """Canonical "num/den" form; the denominator is always written."""
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


def sign(value):
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


SIGN_CHARS = {1: "+", -1: "-", 0: "0"}


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction

    def __sub__(self, other):
        return Point(self.x - other.x, self.y - other.y)

    def __add__(self, other):
        return Point(self.x + other.x, self.y + other.y)


def pt(x, y):
    return Point(rat(x), rat(y))


@dataclass(frozen=True)
class Line:
    """Locus a*x + b*y + c = 0 with (a, b) != (0, 0), canonically scaled."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise InvalidInput("line requires (a, b) != (0, 0)")
        lead = self.a if self.a != 0 else self.b
        if lead != 1:
            object.__setattr__(self, "a", self.a / lead)
            object.__setattr__(self, "b", self.b / lead)
            object.__setattr__(self, "c", self.c / lead)

    def value_at(self, p):
        return self.a * p.x + self.b * p.y + self.c

    def side(self, p):
        """Sign of the defining form at p; 0 iff p lies on the line."""
        return sign(self.value_at(p))

    def contains(self, p):
        return self.value_at(p) == 0

    def direction(self):
        """A direction vector of the line (not normalized)."""
        return Point(-self.b, self.a)


def line(a, b, c):
    return Line(rat(a), rat(b), rat(c))


def line_through(p, q):
    if p == q:
        raise NotDistinct("cannot span a line by a repeated point")
    # (y_q - y_p) x - (x_q - x_p) y + (x_q y_p - x_p y_q) = 0
    return Line(q.y - p.y, p.x - q.x, q.x * p.y - p.x * q.y)


@dataclass(frozen=True)
class Segment:
    p: Point
    q: Point

    def __post_init__(self):
        if self.p == self.q:
            raise NotDistinct("segment endpoints must be distinct")


def orient(p, q, r):
    """Sign of det(q - p, r - p): + for a left turn, 0 iff collinear."""
    return sign((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x))


def collinear(p, q, r):
    return orient(p, q, r) == 0


def intersect(l1, l2):
    """Common point of two lines, or None when parallel but distinct."""
    if l1 == l2:
        raise IdenticalLines("lines coincide")
    den = l1.a * l2.b - l2.a * l1.b
    if den == 0:
        return None
    x = (l1.b * l2.c - l2.b * l1.c) / den
    y = (l2.a * l1.c - l1.a * l2.c) / den
    return Point(x, y)


def _affine_param(origin, direction, p):
    # Parameterize along the dominant coordinate of the direction; any
    # affine parameter gives the same cross ratio.
    if direction.x != 0:
        return (p.x - origin.x) / direction.x
    return (p.y - origin.y) / direction.y


def cross_ratio(p1, p2, p3, p4):
    """(t1-t3)(t2-t4) / ((t2-t3)(t1-t4)) along the common line."""
    pts = (p1, p2, p3, p4)
    for i in range(4):
        for j in range(i + 1, 4):
            if pts[i] == pts[j]:
                raise NotDistinct("cross ratio requires pairwise distinct points")
    if not (collinear(p1, p2, p3) and collinear(p1, p2, p4)):
        raise NotCollinear("cross ratio requires collinear points")
    d = p2 - p1
    t = [_affine_param(p1, d, p) for p in pts]
    return ((t[0] - t[2]) * (t[1] - t[3])) / ((t[1] - t[2]) * (t[0] - t[3]))


def reflect_vertical_axis(p, axis_x):
    return Point(2 * axis_x - p.x, p.y)


def reflect_across(l, p):
    """Mirror image of p across an arbitrary rational line (exact)."""
    t = l.value_at(p) / (l.a * l.a + l.b * l.b)
    return Point(p.x - 2 * t * l.a, p.y - 2 * t * l.b)


def segment_interior_crossing(l, s):
    """Crossing point when the endpoints lie strictly on opposite sides.

    Endpoint incidence does not count: the predicate is strict.
    """
    sp = l.side(s.p)
    sq = l.side(s.q)
    if sp * sq >= 0:
        return None
    return intersect(l, line_through(s.p, s.q))


def midpoint(p, q):
    return Point((p.x + q.x) / 2, (p.y + q.y) / 2)


def sq_dist(p, q):
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy
