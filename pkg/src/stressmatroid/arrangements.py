"""Generic line arrangements and their combinatorial type.

An arrangement is an ordered, labeled family of at least two lines; it is
generic when the lines are pairwise non-parallel and no three meet in a
point.  The combinatorial type recorded here is an affine order type:

  - per line, the order in which the other lines cross it (a permutation,
    normalized up to reversal since a line carries no preferred direction);
  - per line, the side on which every non-incident crossing lies
    (a sign string, normalized up to global flip per line because the
    canonical coefficient scaling of a line flips discontinuously under
    affine maps).

Two generic arrangements are equivalent iff these descriptors agree
labelwise; the descriptor is invariant under invertible affine maps.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInput, NotGeneric, RetryBudgetExceeded, SizeMismatch
from .exact_geom import Line, intersect


@dataclass(frozen=True)
class LineArrangement:
    lines: tuple  # Line objects, labeled 1..n by position

    def __post_init__(self):
        if len(self.lines) < 2:
            raise InvalidInput("arrangement requires at least 2 lines")
        for l in self.lines:
            if not isinstance(l, Line):
                raise InvalidInput("arrangement entries must be lines")

    @property
    def n(self):
        return len(self.lines)


def is_generic(arr):
    """(ok, violations): exact pairwise and triple-point tests."""
    violations = []
    n = arr.n
    pts = {}
    for i in range(n):
        for j in range(i + 1, n):
            if arr.lines[i] == arr.lines[j]:
                violations.append(f"lines {i + 1} and {j + 1} coincide")
                continue
            p = intersect(arr.lines[i], arr.lines[j])
            if p is None:
                violations.append(f"lines {i + 1} and {j + 1} are parallel")
            else:
                pts[(i, j)] = p
    seen = {}
    for (i, j), p in sorted(pts.items()):
        if p in seen:
            a, b = seen[p]
            trip = sorted({a, b, i, j})
            violations.append(
                "triple point at lines " + ", ".join(str(t + 1) for t in trip))
        else:
            seen[p] = (i, j)
    return (not violations, violations)


def require_generic(arr):
    ok, violations = is_generic(arr)
    if not ok:
        raise NotGeneric("; ".join(violations))


def crossings(arr):
    """Map (i, j) -> crossing point, 0-based indices with i < j."""
    require_generic(arr)
    return {
        (i, j): intersect(arr.lines[i], arr.lines[j])
        for i in range(arr.n)
        for j in range(i + 1, arr.n)
    }


@dataclass(frozen=True)
class ArrangementType:
    per_line: tuple  # per line: (crossing order as 1-based labels, side string)

    def to_data(self):
        return {
            "lines": [
                {"order": list(order), "sides": sides}
                for order, sides in self.per_line
            ]
        }


def combinatorial_type(arr):
    pts = crossings(arr)
    per_line = []
    for i in range(arr.n):
        li = arr.lines[i]
        d = li.direction()
        js = [j for j in range(arr.n) if j != i]

        def param(j, i=i, d=d):
            p = pts[(min(i, j), max(i, j))]
            return d.x * p.x + d.y * p.y

        js.sort(key=param)
        order = tuple(j + 1 for j in js)
        if order[::-1] < order:
            order = order[::-1]
        sides = []
        for j in range(arr.n):
            for k in range(j + 1, arr.n):
                if i in (j, k):
                    continue
                sides.append("+" if li.side(pts[(j, k)]) > 0 else "-")
        if sides and sides[0] == "-":
            sides = ["-" if ch == "+" else "+" for ch in sides]
        per_line.append((order, "".join(sides)))
    return ArrangementType(tuple(per_line))


def equivalent(arr1, arr2):
    if arr1.n != arr2.n:
        raise SizeMismatch(f"arrangements have {arr1.n} and {arr2.n} lines")
    return combinatorial_type(arr1) == combinatorial_type(arr2)


def perturb_preserving_type(arr, magnitude, seed):
    """Random rational perturbation staying in the same type class.

    Coefficient deltas are drawn uniformly from [-magnitude, magnitude]
    with denominator 10^6; on failure the magnitude halves, up to 40
    rounds.  Deterministic for a fixed seed.
    """
    require_generic(arr)
    magnitude = Fraction(magnitude)
    if magnitude == 0:
        return LineArrangement(arr.lines)
    if magnitude < 0:
        raise InvalidInput("magnitude must be nonnegative")
    rng = random.Random(seed)
    for _ in range(40):
        try:
            lines = tuple(
                Line(
                    l.a + magnitude * Fraction(rng.randint(-10**6, 10**6), 10**6),
                    l.b + magnitude * Fraction(rng.randint(-10**6, 10**6), 10**6),
                    l.c + magnitude * Fraction(rng.randint(-10**6, 10**6), 10**6),
                )
                for l in arr.lines
            )
            cand = LineArrangement(lines)
        except InvalidInput:
            magnitude /= 2
            continue
        ok, _ = is_generic(cand)
        if ok and combinatorial_type(cand) == combinatorial_type(arr):
            return cand
        magnitude /= 2
    raise RetryBudgetExceeded("no type-preserving perturbation in 40 rounds")
