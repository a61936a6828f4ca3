import random
from fractions import Fraction

import pytest

from noisyhull.geometry import (
    CCW,
    COLLINEAR,
    CW,
    DegenerateInput,
    halfspace_margin,
    load_points2,
    orient2d_exact,
    orient3d_exact,
    plane_triple_vertex,
    validate_points2,
)


def det_oracle(a, b, c):
    """Independent orientation via full 3x3 determinant over Fractions."""
    d = (
        Fraction(a[0]) * (Fraction(b[1]) - Fraction(c[1]))
        - Fraction(a[1]) * (Fraction(b[0]) - Fraction(c[0]))
        + (Fraction(b[0]) * Fraction(c[1]) - Fraction(b[1]) * Fraction(c[0]))
    )
    return (d > 0) - (d < 0)


def test_orient2d_basic():
    assert orient2d_exact((0, 0), (1, 0), (0, 1)) == CCW
    assert orient2d_exact((0, 0), (1, 1), (2, 2)) == COLLINEAR
    assert orient2d_exact((0, 0), (0, 1), (1, 0)) == CW


def test_orient2d_against_independent_determinant():
    rng = random.Random(7)
    span = 1 << 20
    for _ in range(1000):
        pts = [
            (rng.randrange(-span, span), rng.randrange(-span, span)) for _ in range(3)
        ]
        assert orient2d_exact(*pts) == det_oracle(*pts)


def test_validate_rejects_duplicates_and_collinear():
    with pytest.raises(DegenerateInput):
        validate_points2([(0, 0), (1, 1), (0, 0)])
    with pytest.raises(DegenerateInput):
        validate_points2([(0, 0), (1, 1), (2, 2)])
    with pytest.raises(DegenerateInput):
        validate_points2([(2, 2), (0, 0), (-2, -2)])  # opposite rays
    validate_points2([(0, 0), (1, 3), (2, 1), (5, 4)])


def test_validate_bounds():
    with pytest.raises(DegenerateInput):
        validate_points2([(1 << 21, 0)])


def test_point_file_roundtrip(tmp_path):
    path = tmp_path / "pts.txt"
    path.write_text("# comment\n1 2\n-3 4\n\n5 -6\n")
    assert load_points2(path) == [(1, 2), (-3, 4), (5, -6)]


def test_orient3d_sign():
    a, b, c = (0, 0, 0), (1, 0, 0), (0, 1, 0)
    assert orient3d_exact(a, b, c, (0, 0, 1)) == 1
    assert orient3d_exact(a, b, c, (0, 0, -1)) == -1
    assert orient3d_exact(a, b, c, (5, 5, 0)) == 0


def test_plane_triple_vertex_and_margin():
    # Unit cube corner x=1, y=1, z=1.
    h1 = (1, 0, 0, 1)
    h2 = (0, 1, 0, 1)
    h3 = (0, 0, 1, 1)
    num, den = plane_triple_vertex(h1, h2, h3)
    assert (num, den) == ((1, 1, 1), 1)
    assert halfspace_margin((1, 1, 1, 4), num, den) == 1  # inside
    assert halfspace_margin((1, 1, 1, 2), num, den) == -1  # outside
    assert halfspace_margin((1, 1, 1, 3), num, den) == 0  # on plane
    assert plane_triple_vertex(h1, h1, h2) is None
