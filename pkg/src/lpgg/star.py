"""Star projections and A-matrices over a correlated null frame.

The k-projection conjugates by the normalized k-sum; at k = n+1 it is an
algebra involution and automorphism.  The A-matrix of an element g is
the grid a_i g a_j, whose all-ones contraction reproduces the star of g
up to the normalization 2/((n+1)n) -- the factor is verified rather than
assumed, and the mediated-product check reports both normalizations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraError, Multivector
from .frames import NullFrame, k_sum, unit_k_sum
from .scalars import coerce


def star(frame: NullFrame, g: Multivector, k: int | None = None) -> Multivector:
    """The k-projection of g (conjugation when k = n+1, the default)."""
    if k is None:
        k = frame.size
    if not 2 <= k <= frame.size:
        raise ValueError(f"k = {k} outside 2..{frame.size}")
    unit = unit_k_sum(frame, k)
    return unit * g * unit


@dataclass
class AMatrix:
    """Grid of products a_i g a_j for a fixed g."""

    frame: NullFrame
    element: Multivector
    entries: list  # (n+1) x (n+1) multivectors

    def contraction(self) -> Multivector:
        """All-ones contraction: the sum of every entry, A g A."""
        acc = self.frame.algebra.zero(self.element.backend)
        for row in self.entries:
            for entry in row:
                acc = acc + entry
        return acc

    def star_normalization(self) -> Fraction:
        size = self.frame.size
        return Fraction(2, size * (size - 1))

    def contraction_as_star(self) -> Multivector:
        """The contraction rescaled to match the star projection."""
        return self.contraction() * coerce(
            self.star_normalization(), self.element.backend
        )

    def to_json(self) -> dict:
        from .textform import format_multivector

        return {
            "element": format_multivector(self.element),
            "entries": [
                [format_multivector(entry) for entry in row]
                for row in self.entries
            ],
        }


def a_matrix(frame: NullFrame, g: Multivector) -> AMatrix:
    if g.algebra != frame.algebra:
        raise AlgebraError("element from a different algebra")
    entries = [
        [ai * g * aj for aj in frame.vectors]
        for ai in frame.vectors
    ]
    return AMatrix(frame, g, entries)


@dataclass
class MediatedProductReport:
    """Outcome of rebuilding gh from the A-matrices of g and h."""

    product: Multivector
    raw: Multivector
    normalized: Multivector
    normalization: Fraction
    raw_matches: bool
    normalized_matches: bool


def mediated_product_check(
    frame: NullFrame, g: Multivector, h: Multivector
) -> MediatedProductReport:
    """Evaluate the all-ones-mediated product against gh.

    The unnormalized contraction equals ((n+1)n/2)^2 * gh, so the square
    of the star normalization is what makes the identity exact.
    """
    gh = g * h
    unit = unit_k_sum(frame, frame.size)
    big_a = k_sum(frame, frame.size)
    mediated = unit * ((big_a * g * big_a) * (big_a * h * big_a)) * unit
    size = frame.size
    normalization = Fraction(2, size * (size - 1)) ** 2
    normalized = mediated * coerce(normalization, g.backend)
    return MediatedProductReport(
        product=gh,
        raw=mediated,
        normalized=normalized,
        normalization=normalization,
        raw_matches=mediated == gh,
        normalized_matches=normalized == gh,
    )


def from_coefficient_matrix(frame: NullFrame, matrix) -> Multivector:
    """Sum of m_ij a_i a_j over i != j: a scalar plus a bivector.

    The diagonal multiplies a_i a_i = 0, so it is ignored by
    construction; entries may be rational, float, or complex.
    """
    size = frame.size
    if len(matrix) != size or any(len(row) != size for row in matrix):
        raise ValueError(f"expected a {size}x{size} matrix")
    from .scalars import backend_of

    backend = frame.backend
    for row in matrix:
        for value in row:
            kind = backend_of(value)
            if kind == "complex":
                backend = "complex"
            elif kind == "approx" and backend != "complex":
                backend = "approx"
    acc = frame.algebra.zero(backend)
    for i in range(size):
        ai = frame.vectors[i].to_backend(backend)
        for j in range(size):
            if i == j:
                continue
            value = coerce(matrix[i][j], backend)
            acc = acc + (ai * frame.vectors[j].to_backend(backend)) * value
    return acc
