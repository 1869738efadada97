import math
import random
from fractions import Fraction

import pytest

from lpgg import frames, linalg, simplex


@pytest.fixture(scope="module")
def fr3():
    return frames.build_null_frame(3, 1)


def random_barycentric(size, rng):
    weights = [rng.randint(0, 9) for _ in range(size)]
    if not sum(weights):
        weights[0] = 1
    return tuple(Fraction(w, sum(weights)) for w in weights)


def test_centroid(fr3):
    c = simplex.centroid(fr3)
    assert c.is_barycentric()
    assert c.norm_squared() == Fraction(1, 3)
    unit = c.unit()
    assert unit * unit == fr3.algebra.scalar(1)


def test_vertices_on_cone(fr3):
    for i in (1, 2, 3):
        v = simplex.vertex(fr3, i)
        assert v.is_barycentric()
        assert v.is_on_cone()
        assert v.norm_squared() == 0
        mv = v.to_multivector()
        assert (mv * mv).is_zero()
        with pytest.raises(simplex.LightConeError):
            v.unit()


def test_norm_squared_matches_multivector_square(fr3):
    rng = random.Random(3)
    for _ in range(25):
        coords = random_barycentric(3, rng)
        point = simplex.SimplexPoint(fr3, coords)
        mv = point.to_multivector()
        assert (mv * mv) == fr3.algebra.scalar(
            Fraction(0) + point.norm_squared()
        )


def test_float_points(fr3):
    point = simplex.SimplexPoint(fr3, (0.3333333, 0.3333333, 0.3333334))
    assert point.is_barycentric()
    assert abs(float(point.norm_squared()) - 1 / 3) < 1e-6
    unit = point.unit()
    assert abs(float((unit * unit).scalar_part()) - 1.0) < 1e-10


def test_content_forms_and_normalization():
    for size in range(2, 7):
        fr = frames.build_null_frame(size, 1)
        content = simplex.content_null(fr)
        n = size - 1
        direct = frames.wedge_list(
            [a - fr.vectors[0] for a in fr.vectors[1:]]
        ) * Fraction(1, math.factorial(n))
        assert content == direct
        assert not content.is_zero()


def test_point_wedge_content():
    rng = random.Random(5)
    for size in range(2, 7):
        fr = frames.build_null_frame(size, 1)
        target = simplex.full_wedge(fr) * Fraction(
            1, math.factorial(size - 1)
        )
        for _ in range(10):
            point = simplex.SimplexPoint(fr, random_barycentric(size, rng))
            assert simplex.content_point_wedge(fr, point) == target


def test_content_vertices(fr3):
    identity_rows = [
        [Fraction(int(i == j)) for j in range(3)] for i in range(3)
    ]
    matrix = simplex.SimplicialMatrix(fr3, identity_rows)
    content, degenerate = simplex.content_vertices(matrix)
    assert not degenerate
    assert content == simplex.content_null(fr3) * 2  # n! with n = 2

    duplicated = simplex.SimplicialMatrix(
        fr3, [identity_rows[0], identity_rows[0], identity_rows[2]]
    )
    content, degenerate = simplex.content_vertices(duplicated)
    assert degenerate and content.is_zero()


def test_content_alternating(fr3):
    rows = [
        [Fraction(int(i == j)) for j in range(3)] for i in range(3)
    ]
    base, _ = simplex.content_vertices(simplex.SimplicialMatrix(fr3, rows))
    swapped, _ = simplex.content_vertices(
        simplex.SimplicialMatrix(fr3, [rows[1], rows[0], rows[2]])
    )
    assert base == -swapped


def test_random_triangle_content_vs_det(fr3):
    rng = random.Random(7)
    for _ in range(20):
        rows = [random_barycentric(3, rng) for _ in range(3)]
        matrix = simplex.SimplicialMatrix(fr3, [list(r) for r in rows])
        content, degenerate = simplex.content_vertices(matrix)
        diffs = [
            [rows[i][j] - rows[0][j] for j in range(3)] for i in (1, 2)
        ]
        # cofactor expansion of the 2x(3) difference rows against the
        # basis wedges a_i ^ a_j
        cof = {}
        for i in range(3):
            for j in range(i + 1, 3):
                cof[(i, j)] = diffs[0][i] * diffs[1][j] - \
                    diffs[0][j] * diffs[1][i]
        expected = fr3.algebra.zero()
        for (i, j), c in cof.items():
            expected = expected + fr3.vectors[i].wedge(fr3.vectors[j]) * c
        assert content == expected
        assert degenerate == content.is_zero()


def test_barycentric_row_validation(fr3):
    with pytest.raises(ValueError):
        simplex.SimplicialMatrix(
            fr3, [[Fraction(1, 2), Fraction(1, 2), Fraction(1)]] * 3
        )
    with pytest.raises(ValueError):
        simplex.SimplicialMatrix(
            fr3,
            [[Fraction(3, 2), Fraction(-1, 2), Fraction(0)]] * 3,
        )
    simplex.SimplicialMatrix(
        fr3, [[Fraction(3, 2), Fraction(-1, 2), Fraction(0)]] * 3,
        barycentric=False,
    )


def test_closed_graphs(fr3):
    diffs = simplex.SimplicialMatrix(
        fr3,
        [[Fraction(1), Fraction(-1), Fraction(0)],
         [Fraction(0), Fraction(1), Fraction(-1)],
         [Fraction(-1), Fraction(0), Fraction(1)]],
        barycentric=False,
    )
    assert simplex.is_closed(diffs)
    vertices = simplex.SimplicialMatrix(
        fr3, [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
    )
    assert not simplex.is_closed(vertices)


def test_order(fr3):
    rng = random.Random(11)
    dependent = simplex.SimplicialMatrix(
        fr3,
        [[Fraction(1), Fraction(0), Fraction(0)],
         [Fraction(0), Fraction(1), Fraction(0)],
         [Fraction(1), Fraction(1), Fraction(0)]],
        barycentric=False,
    )
    assert simplex.order(dependent) == 2
    for _ in range(15):
        rows = [list(random_barycentric(3, rng)) for _ in range(3)]
        matrix = simplex.SimplicialMatrix(fr3, rows)
        assert simplex.order(matrix) == linalg.rank(rows)


def test_grid_norm_nonnegative():
    fr = frames.build_null_frame(3, 1)
    denominator = 8
    for i in range(denominator + 1):
        for j in range(denominator + 1 - i):
            coords = (
                Fraction(i, denominator),
                Fraction(j, denominator),
                Fraction(denominator - i - j, denominator),
            )
            point = simplex.SimplexPoint(fr, coords)
            value = point.norm_squared()
            assert value >= 0
            nonzero = sum(1 for c in coords if c)
            assert (value == 0) == (nonzero <= 1)


def test_laplacian_report_statuses():
    for size in (3, 4):
        report = simplex.simplex_laplacian_report(
            frames.build_null_frame(size, 1)
        )
        by_name = {line.name: line for line in report}
        assert by_name["dual-gradient-of-x"].status == "pass-corrected"
        assert by_name["dual-laplacian-scalar-valued"].status == "pass"
        assert by_name["dual-laplacian-expansion"].status == "pass-corrected"
        assert by_name["dual-laplacian-of-x-squared"].status == \
            "pass-corrected"
        if size == 4:
            assert by_name["three-simplex-display"].status == "pass-corrected"


def test_laplacian_derived_values():
    fr = frames.build_null_frame(4, 1)  # n = 3
    by_name = {
        line.name: line for line in simplex.simplex_laplacian_report(fr)
    }
    grad = by_name["dual-gradient-of-x"]
    assert grad.derived_values["sum-to-n+1"] == Fraction(6)  # (n+1)n/2
    x2 = by_name["dual-laplacian-of-x-squared"]
    assert x2.derived_values["sum-to-n+1"] == Fraction(42)  # (n^2-n+1) C(n+1,2)
    assert x2.derived_values["sum-to-n"] == Fraction(21)  # (n^2-n+1) C(n,2)
