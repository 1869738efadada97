"""Barycentric null simplices, vertex graphs, content, and the Laplacian.

The convex null n-simplex has its vertices at the frame nulls; points
carry homogeneous barycentric coordinates (nonnegative, summing to 1).
Because a_i . a_j = 1/2 off the diagonal, the squared length of a
barycentric point is sum_{i<j} x_i x_j >= 0, vanishing exactly on the
light-cone subset (vertices included).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .algebra import AlgebraError, Multivector, wedge_list
from .calculus import (
    DiffOperator,
    PolyField,
    dual_sum_dot_oracle,
    make_dual_nabla,
    monomial_fields,
    square_field,
)
from .frames import NullFrame, dual_sum, vector_from_null_coordinates
from .scalars import APPROX, EXACT, Radical, backend_of, coerce, is_zero


class LightConeError(ValueError):
    """Normalization of a point on the light cone (|x| = 0)."""


ON_CONE_TOLERANCE = 1e-12


def _scalar_sign(value) -> int:
    if isinstance(value, Radical):
        return value.sign()
    if isinstance(value, Fraction):
        return (value > 0) - (value < 0)
    return (value > ON_CONE_TOLERANCE) - (value < -ON_CONE_TOLERANCE)


@dataclass(frozen=True)
class SimplexPoint:
    frame: NullFrame
    coordinates: tuple

    def __post_init__(self):
        if len(self.coordinates) != self.frame.size:
            raise ValueError(f"expected {self.frame.size} coordinates")

    @property
    def backend(self) -> str:
        kinds = {backend_of(c) for c in self.coordinates}
        return APPROX if APPROX in kinds else EXACT

    def is_barycentric(self) -> bool:
        total = sum_values(self.coordinates)
        if self.backend == EXACT:
            unit = total == 1 or Radical(0) + total == Radical(1)
        else:
            unit = abs(float(total) - 1.0) <= ON_CONE_TOLERANCE
        return unit and all(_scalar_sign(c) >= 0 for c in self.coordinates)

    def to_multivector(self) -> Multivector:
        backend = self.backend
        acc = self.frame.algebra.zero(backend)
        for x, a in zip(self.coordinates, self.frame.vectors):
            acc = acc + a.to_backend(backend) * coerce(x, backend)
        return acc

    def norm_squared(self):
        """|x|^2 = sum_{i<j} x_i x_j for a positively correlated frame."""
        coords = self.coordinates
        total = None
        for i in range(len(coords)):
            for j in range(i + 1, len(coords)):
                term = coords[i] * coords[j]
                total = term if total is None else total + term
        if frame_sign(self.frame) < 0:
            total = -total
        return total

    def is_on_cone(self) -> bool:
        value = self.norm_squared()
        if self.backend == EXACT:
            return is_zero(Radical(0) + value)
        return abs(float(value)) <= ON_CONE_TOLERANCE

    def norm(self):
        value = self.norm_squared()
        if self.backend == EXACT:
            value = Radical(0) + value
            if value.sign() < 0:
                raise LightConeError("|x|^2 < 0: point outside the cone interior")
            return Radical.sqrt(value.as_fraction()) if value.is_rational() else _radical_norm(value)
        value = float(value)
        if value < -ON_CONE_TOLERANCE:
            raise LightConeError("|x|^2 < 0: point outside the cone interior")
        return math.sqrt(max(value, 0.0))

    def unit(self) -> Multivector:
        if self.is_on_cone():
            raise LightConeError("cannot normalize a light-cone point")
        return self.to_multivector() / self.norm()


def _radical_norm(value: Radical):
    raise LightConeError(
        f"|x|^2 = {value} is irrational; use the approx backend to normalize"
    )


def frame_sign(frame: NullFrame) -> int:
    return frame.sign


def sum_values(values):
    it = iter(values)
    acc = next(it)
    for v in it:
        acc = acc + v
    return acc


def centroid(frame: NullFrame) -> SimplexPoint:
    w = Fraction(1, frame.size)
    return SimplexPoint(frame, tuple(w for _ in range(frame.size)))


def vertex(frame: NullFrame, i: int) -> SimplexPoint:
    coords = tuple(
        Fraction(1) if j == i - 1 else Fraction(0) for j in range(frame.size)
    )
    return SimplexPoint(frame, coords)


# -- simplicial matrices ----------------------------------------------------------------


@dataclass
class SimplicialMatrix:
    """Vertex rows in null coordinates; barycentric mode checks rows."""

    frame: NullFrame
    rows: list
    barycentric: bool = True

    def __post_init__(self):
        for row in self.rows:
            if len(row) != self.frame.size:
                raise ValueError(f"rows must have {self.frame.size} entries")
        if self.barycentric:
            for row in self.rows:
                point = SimplexPoint(self.frame, tuple(row))
                if not point.is_barycentric():
                    raise ValueError(
                        "barycentric rows must be nonnegative and sum to 1"
                    )

    def vertices(self) -> list[Multivector]:
        return [
            vector_from_null_coordinates(self.frame, row) for row in self.rows
        ]

    def vertex_count(self) -> int:
        return len(self.rows)


def simplicial_matrix_from_csv(frame: NullFrame, text: str,
                               barycentric: bool = True) -> SimplicialMatrix:
    """One vertex per line, comma-separated null coordinates."""
    rows = []
    for line in text.strip().splitlines():
        line = line.strip()
        if not line:
            continue
        rows.append([_parse_entry(cell) for cell in line.split(",")])
    return SimplicialMatrix(frame, rows, barycentric=barycentric)


def simplicial_matrix_from_json(frame: NullFrame, data,
                                barycentric: bool = True) -> SimplicialMatrix:
    """A JSON array of coordinate rows (numbers or 'p/q' strings)."""
    rows = [[_parse_entry(cell) for cell in row] for row in data]
    return SimplicialMatrix(frame, rows, barycentric=barycentric)


def _parse_entry(cell):
    if isinstance(cell, str):
        cell = cell.strip()
        if "." in cell or "e" in cell.lower():
            return float(cell)
        return Fraction(cell)
    if isinstance(cell, float):
        return cell
    return Fraction(cell)


def content_vertices(matrix: SimplicialMatrix):
    """Wedge of vertex differences; (content, degenerate flag)."""
    vertices = matrix.vertices()
    if len(vertices) < 2:
        raise ValueError("need at least two vertices")
    first = vertices[0]
    diffs = [v - first for v in vertices[1:]]
    content = wedge_list(diffs)
    return content, content.is_zero()


def content_null(frame: NullFrame) -> Multivector:
    """(1/n!) (a_2-a_1)^...^(a_{n+1}-a_1), cross-checked two ways.

    The alternating dual-sum expansion must be proportional, and with
    the same 1/n! normalization equal; a mismatch raises.
    """
    n = frame.n
    first = frame.vectors[0]
    diffs = [a - first for a in frame.vectors[1:]]
    product_form = wedge_list(diffs) * Fraction(1, math.factorial(n))

    alternating = frame.algebra.zero(frame.backend)
    for i in range(frame.size):
        others = [a for j, a in enumerate(frame.vectors) if j != i]
        term = wedge_list(others)
        alternating = alternating + (term if i % 2 == 0 else -term)
    alternating = alternating * Fraction(1, math.factorial(n))

    if product_form != alternating:
        raise AlgebraError("content forms disagree; check the frame")
    return product_form


def content_point_wedge(frame: NullFrame, point: SimplexPoint) -> Multivector:
    return point.to_multivector().wedge(content_null(frame))


def full_wedge(frame: NullFrame) -> Multivector:
    return wedge_list(list(frame.vectors))


# -- closed graphs and order ------------------------------------------------------------------


def is_closed(matrix: SimplicialMatrix) -> bool:
    """Closed: the dual sums of the vertices add to zero.

    sum_i sum_{j != i} v_j = m * sum_j v_j for m+1 vertices, so this is
    equivalent to the plain vertex sum vanishing (m >= 1).
    """
    vertices = matrix.vertices()
    if len(vertices) < 2:
        raise ValueError("need at least two vertices")
    total = vertices[0]
    for v in vertices[1:]:
        total = total + v
    dual_total = total * (len(vertices) - 1)
    return dual_total.is_zero()


def order(matrix: SimplicialMatrix) -> int:
    """Largest count of linearly independent vertices.

    Greedy wedge accumulation, cross-checked against the exact rank of
    the coordinate matrix when the entries are rational.
    """
    vertices = matrix.vertices()
    result = 0
    current = None
    for v in vertices:
        candidate = v if current is None else current.wedge(v)
        if not candidate.is_zero():
            current = candidate
            result += 1
    rational = all(
        isinstance(value, (int, Fraction))
        or (isinstance(value, Radical) and value.is_rational())
        for row in matrix.rows
        for value in row
    )
    if rational:
        exact = linalg.rank(
            [
                [
                    value.as_fraction() if isinstance(value, Radical) else Fraction(value)
                    for value in row
                ]
                for row in matrix.rows
            ]
        )
        if exact != result:
            raise AlgebraError(
                f"wedge order {result} disagrees with matrix rank {exact}"
            )
    return result


# -- the simplex Laplacian report ------------------------------------------------------------


@dataclass
class LaplacianLine:
    name: str
    claim: str
    status: str
    claimed_value: str
    derived_values: dict
    details: str = ""

    def to_json(self) -> dict:
        return {
            "identity": self.name,
            "claim": self.claim,
            "status": self.status,
            "claimed_coefficients": {"value": self.claimed_value},
            "derived_coefficients": {k: str(v) for k, v in self.derived_values.items()},
            "details": self.details,
        }


def _truncated_dual_nabla(frame: NullFrame) -> DiffOperator:
    """Dual gradient with the sum stopped at i = n (dropping the last term)."""
    terms = []
    for i in range(frame.size - 1):
        mi = tuple(1 if j == i else 0 for j in range(frame.size))
        terms.append((dual_sum(frame, i + 1), mi))
    return DiffOperator(frame, terms)


def simplex_laplacian_report(frame: NullFrame) -> list[LaplacianLine]:
    """Evaluate the dual-gradient displays under both index conventions.

    Convention A sums i = 1..n+1 (the dual gradient as defined);
    convention B stops at i = n, matching the printed summation bounds.
    Every line reports the stated value next to both computed ones.
    """
    if frame.n < 2:
        raise ValueError("need n >= 2")
    n = frame.n
    lines: list[LaplacianLine] = []

    dual_a = make_dual_nabla(frame)
    dual_b = _truncated_dual_nabla(frame)
    x = PolyField.identity(frame)
    x2 = square_field(frame)

    # dual gradient of x
    applied_a = dual_a.apply(x)
    applied_b = dual_b.apply(x)
    value_a = applied_a.terms.get((0,) * frame.size)
    scalar_a = (
        value_a.scalar_part() if value_a is not None and value_a.grades() <= {0} else None
    )
    expected = Fraction(n * (n - 1), 2)
    b_const = applied_b.terms.get((0,) * frame.size)
    b_scalar = b_const is not None and b_const.grades() <= {0}
    lines.append(
        LaplacianLine(
            name="dual-gradient-of-x",
            claim="nabla_dual x = n(n-1)/2",
            status="pass" if scalar_a == expected else "pass-corrected",
            claimed_value=str(expected),
            derived_values={
                "sum-to-n+1": scalar_a,
                "sum-to-n": "non-scalar" if not b_scalar else b_const.scalar_part(),
            },
            details=(
                "summing all n+1 terms gives the scalar (n+1)n/2; stopping "
                "at n leaves a bivector remainder"
            ),
        )
    )

    # scalar-valuedness of the Laplacian on scalar fields
    lap_a = dual_a.compose(dual_a)
    scalar_ok = all(
        lap_a.apply(f).is_scalar_valued()
        for f in monomial_fields(frame, 3)
    )
    lines.append(
        LaplacianLine(
            name="dual-laplacian-scalar-valued",
            claim="nabla_dual^2 maps scalar fields to scalar fields",
            status="pass" if scalar_ok else "fail",
            claimed_value="scalar valued",
            derived_values={"scalar_valued": scalar_ok},
        )
    )

    # Laplacian coefficients vs the printed expansion
    diag, off = dual_sum_dot_oracle(frame)
    derived_sq = diag
    derived_cross = off * 2
    claimed_matches = derived_sq == 1 and derived_cross == Fraction(n * (n - 1), 2)
    lines.append(
        LaplacianLine(
            name="dual-laplacian-expansion",
            claim=(
                "nabla_dual^2 = sum_{i<=n} d_i^2 + C(n,2) sum_{i<=j<=n} d_i d_j"
            ),
            status="pass" if claimed_matches else "pass-corrected",
            claimed_value="squares 1, crosses C(n,2), indices to n",
            derived_values={
                "squares": derived_sq,
                "crosses": derived_cross,
                "indices": "1..n+1",
            },
            details=(
                "computed from the dual-sum dot oracle: squares n(n-1)/2, "
                "crosses n^2-n+1, all n+1 coordinates participate"
            ),
        )
    )

    # the printed three-coordinate expansion (unit coefficients over 1..3)
    if n == 3:
        lines.append(
            LaplacianLine(
                name="three-simplex-display",
                claim=(
                    "nabla_dual^2 = d1^2+d2^2+d3^2 + d2d3+d1d3+d1d2 on the "
                    "3-simplex"
                ),
                status="pass" if (derived_sq, derived_cross) == (1, 1)
                else "pass-corrected",
                claimed_value="all coefficients 1, coordinates 1..3",
                derived_values={
                    "squares": derived_sq,
                    "crosses": derived_cross,
                    "coordinates": "1..4",
                },
                details="instance of the general expansion at n = 3",
            )
        )

    # Laplacian of x^2 vs C(n,2)^2
    def constant_of(field: PolyField):
        const = field.terms.get((0,) * frame.size)
        if const is None:
            return Fraction(0)
        if not const.grades() <= {0}:
            return None
        return const.scalar_part()

    lap_b = dual_b.compose(dual_b)
    value_a = constant_of(lap_a.apply(x2))
    value_b = constant_of(lap_b.apply(x2))
    claimed = Fraction(n * (n - 1), 2) ** 2
    status = "pass" if claimed in (value_a, value_b) else "pass-corrected"
    lines.append(
        LaplacianLine(
            name="dual-laplacian-of-x-squared",
            claim="nabla_dual^2 x^2 = C(n,2)^2",
            status=status,
            claimed_value=str(claimed),
            derived_values={
                "sum-to-n+1": value_a,
                "sum-to-n": value_b,
            },
            details="(n^2-n+1) C(n+1,2) over all terms; (n^2-n+1) C(n,2) truncated",
        )
    )

    return lines
