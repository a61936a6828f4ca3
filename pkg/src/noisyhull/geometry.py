"""Exact integer geometry: points, halfspaces, predicates, validation, text I/O.

All predicates are computed in exact (arbitrary precision) integer or rational
arithmetic.  Coordinates are bounded so that downstream determinant expressions
stay well clear of any fixed-width assumptions callers might make.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

COORD_BOUND = 1 << 20

# Orientation signs.
CCW = 1
CW = -1
COLLINEAR = 0


class GeometryError(ValueError):
    pass


class DegenerateInput(GeometryError):
    """Input violates the general-position contract."""


class CollinearInput(DegenerateInput):
    """An orientation test hit three collinear points (no Boolean answer)."""


class OnBoundary(DegenerateInput):
    """A sidedness test hit a point exactly on the plane."""


class UnboundedOrEmpty(GeometryError):
    """A halfspace intersection is unbounded or has no interior vertex."""


def orient2d_exact(a, b, c):
    """Sign of the cross product (b-a) x (c-a): CCW, CW or COLLINEAR."""
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    if d > 0:
        return CCW
    if d < 0:
        return CW
    return COLLINEAR


def orient3d_exact(a, b, c, d):
    """Sign of det[b-a; c-a; d-a] (positive = d on the CCW side of abc)."""
    adx, ady, adz = b[0] - a[0], b[1] - a[1], b[2] - a[2]
    bdx, bdy, bdz = c[0] - a[0], c[1] - a[1], c[2] - a[2]
    cdx, cdy, cdz = d[0] - a[0], d[1] - a[1], d[2] - a[2]
    det = (
        adx * (bdy * cdz - bdz * cdy)
        - ady * (bdx * cdz - bdz * cdx)
        + adz * (bdx * cdy - bdy * cdx)
    )
    if det > 0:
        return 1
    if det < 0:
        return -1
    return 0


def halfspace_margin(h, vertex_num, vertex_den):
    """Exact signed slack of a rational point against a*x + b*y + c*z <= d.

    The point is (xn/den, yn/den, zn/den) with den > 0.  Returns the integer
    sign of d*den - (a*xn + b*yn + c*zn): positive inside, negative outside,
    zero on the plane.
    """
    a, b, c, d = h
    xn, yn, zn = vertex_num
    s = d * vertex_den - (a * xn + b * yn + c * zn)
    if s > 0:
        return 1
    if s < 0:
        return -1
    return 0


def check_coord_bounds(coords: Iterable[int]):
    for v in coords:
        if abs(v) > COORD_BOUND:
            raise DegenerateInput(f"coordinate {v} outside +/-{COORD_BOUND}")


def validate_points2(points: Sequence, collinear_cap: int = 256):
    """Reject out-of-range coordinates, duplicates and collinear triples.

    Duplicate detection is exact and always on.  The exhaustive collinearity
    scan is quadratic (slope table per anchor) and only runs for inputs up to
    `collinear_cap` points; larger inputs rely on the predicates raising
    CollinearInput lazily at the site where a degenerate triple is actually
    tested.
    """
    seen = set()
    for p in points:
        check_coord_bounds(p)
        t = (p[0], p[1])
        if t in seen:
            raise DegenerateInput(f"duplicate point {t}")
        seen.add(t)
    n = len(points)
    if n <= collinear_cap:
        import math

        for i in range(n):
            ax, ay = points[i][0], points[i][1]
            slopes = {}
            for j in range(i + 1, n):
                dx = points[j][0] - ax
                dy = points[j][1] - ay
                g = math.gcd(dx, dy)
                dx, dy = dx // g, dy // g
                if dx < 0 or (dx == 0 and dy < 0):
                    dx, dy = -dx, -dy
                key = (dx, dy)
                if key in slopes:
                    raise DegenerateInput(
                        f"collinear points {points[slopes[key]]}, {points[i]}, {points[j]}"
                    )
                slopes[key] = j


def validate_points3(points: Sequence):
    """Duplicate/range check plus full coplanarity scan (small inputs only)."""
    seen = set()
    for p in points:
        check_coord_bounds(p)
        t = (p[0], p[1], p[2])
        if t in seen:
            raise DegenerateInput(f"duplicate point {t}")
        seen.add(t)
    n = len(points)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                for l in range(k + 1, n):
                    if orient3d_exact(points[i], points[j], points[k], points[l]) == 0:
                        raise DegenerateInput("four coplanar points")


def validate_halfspaces(halfspaces: Sequence):
    for h in halfspaces:
        a, b, c, d = h
        check_coord_bounds((a, b, c, d))
        if a == 0 and b == 0 and c == 0:
            raise DegenerateInput("halfspace with zero normal")


# ---------------------------------------------------------------------------
# Text format: one record per line, whitespace-separated integers, '#' comments.


def _parse_int_lines(text: str, width: int):
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != width:
            raise GeometryError(f"line {lineno}: expected {width} integers, got {len(parts)}")
        out.append(tuple(int(p) for p in parts))
    return out


def load_points2(path):
    with open(path) as f:
        return _parse_int_lines(f.read(), 2)


def load_points3(path):
    with open(path) as f:
        return _parse_int_lines(f.read(), 3)


def load_halfspaces(path):
    with open(path) as f:
        return _parse_int_lines(f.read(), 4)


def dump_records(path, records):
    with open(path, "w") as f:
        for r in records:
            f.write(" ".join(str(v) for v in r) + "\n")


# ---------------------------------------------------------------------------
# Rational 3x3 solve for candidate polytope vertices.


def plane_triple_vertex(h1, h2, h3):
    """Solve the three plane equations a.x = d exactly by Cramer's rule.

    Returns ((xn, yn, zn), den) with den != 0, or None when the planes do not
    meet in a single point.  The denominator is normalised positive.
    """
    a1, b1, c1, d1 = h1
    a2, b2, c2, d2 = h2
    a3, b3, c3, d3 = h3
    den = (
        a1 * (b2 * c3 - b3 * c2)
        - b1 * (a2 * c3 - a3 * c2)
        + c1 * (a2 * b3 - a3 * b2)
    )
    if den == 0:
        return None
    xn = (
        d1 * (b2 * c3 - b3 * c2)
        - b1 * (d2 * c3 - d3 * c2)
        + c1 * (d2 * b3 - d3 * b2)
    )
    yn = (
        a1 * (d2 * c3 - d3 * c2)
        - d1 * (a2 * c3 - a3 * c2)
        + c1 * (a2 * d3 - a3 * d2)
    )
    zn = (
        a1 * (b2 * d3 - b3 * d2)
        - b1 * (a2 * d3 - a3 * d2)
        + d1 * (a2 * b3 - a3 * b2)
    )
    if den < 0:
        xn, yn, zn, den = -xn, -yn, -zn, -den
    return (xn, yn, zn), den


def vertex_as_fractions(num, den):
    return (Fraction(num[0], den), Fraction(num[1], den), Fraction(num[2], den))
