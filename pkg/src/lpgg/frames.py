"""Correlated null frames of G(1,n) and G(n,1).

A positively correlated frame is n+1 null vectors a_1..a_{n+1} of G(1,n)
with a_i . a_j = 1/2 for i != j; the negatively correlated twin lives in
G(n,1) with inner products -1/2.  Both are recovered from the standard
orthonormal basis by inverting the defining combination

    b_k = alpha_k * (A_k - (k-1) a_{k+1}),   alpha_k = -sqrt(2)/sqrt(k(k-1)),

seeded by a_1 = (b_0+b_1)/2 and a_2 = (b_0-b_1)/2, where b_0 is the
generator whose square carries the correlation sign and b_1.. the rest.

The transition matrix T holds the frame coordinates row-wise; its exact
inverse converts standard coordinates to null coordinates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .algebra import Algebra, AlgebraError, Multivector, wedge_list
from .scalars import (
    APPROX,
    EXACT,
    InexactDivisionError,
    Radical,
    coerce,
    is_zero,
)

FRAME_LIMIT = 12
CANONICAL_BASIS_LIMIT = 8


@dataclass(frozen=True)
class CoordinateRow:
    """A coordinate row vector, tagged with the basis it multiplies."""

    entries: tuple
    basis: str  # "standard" or "null"

    def __post_init__(self):
        if self.basis not in ("standard", "null"):
            raise ValueError(f"unknown basis tag {self.basis!r}")


@dataclass(frozen=True)
class TableReport:
    """Outcome of checking the 4x4 pair product grid for every i<j."""

    sign: int
    size: int
    checked: int
    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations


class NullFrame:
    """n+1 correlated null vectors with their transition matrix."""

    def __init__(self, algebra, sign, vectors, t_matrix, t_inverse, exact=True):
        self.algebra = algebra
        self.sign = sign
        self.vectors = tuple(vectors)
        self.t_matrix = t_matrix
        self.t_inverse = t_inverse
        self.exact = exact  # False when inversion had to fall back to floats
        self.size = len(self.vectors)
        self.n = self.size - 1
        self._wedge_cache: dict | None = None
        self._generator_null_coords: list | None = None
        self._canonical_cache: tuple | None = None

    def __repr__(self):
        kind = "positive" if self.sign > 0 else "negative"
        return f"NullFrame({kind}, n+1={self.size})"

    @property
    def backend(self) -> str:
        return EXACT if self.exact else APPROX

    def correlation(self):
        half = Fraction(1, 2) if self.sign > 0 else Fraction(-1, 2)
        return coerce(half if self.exact else float(half), self.backend)

    def vector(self, i: int) -> Multivector:
        """1-based accessor for a_i."""
        return self.vectors[i - 1]

    # -- ordered standard basis --------------------------------------------------

    def standard_basis_bits(self) -> list[int]:
        """Generator bit for each slot of the frame's ordered standard basis.

        Positive frames read (e1, f1..fn) straight off G(1,n); negative
        frames use (f1, e1..en) inside G(n,1), putting the sign-carrying
        generator first in both cases.
        """
        n = self.n
        if self.sign > 0:
            return list(range(n + 1))
        return [n] + list(range(n))

    def standard_basis_vectors(self) -> list[Multivector]:
        return [
            self.algebra.generator(bit, self.backend)
            for bit in self.standard_basis_bits()
        ]

    def metric_dual_basis(self) -> list[Multivector]:
        """Row basis with b^i . b_j = delta_ij (flips the -1 generators)."""
        out = []
        for bit in self.standard_basis_bits():
            g = self.algebra.generator(bit, self.backend)
            out.append(g if self.algebra.generator_square(bit) > 0 else -g)
        return out


def build_null_frame(n_plus_1: int, sign: int = 1) -> NullFrame:
    """Construct the correlated null frame a_1..a_{n+1}."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if not 2 <= n_plus_1 <= FRAME_LIMIT:
        raise AlgebraError(
            f"frame size {n_plus_1} outside 2..{FRAME_LIMIT}"
        )
    n = n_plus_1 - 1
    algebra = Algebra(1, n) if sign > 0 else Algebra(n, 1)

    if sign > 0:
        basis_bits = list(range(n + 1))
    else:
        basis_bits = [n] + list(range(n))
    basis = [algebra.generator(bit) for bit in basis_bits]

    half = Fraction(1, 2)
    vectors = [
        (basis[0] + basis[1]) * half,
        (basis[0] - basis[1]) * half,
    ]
    running_sum = vectors[0] + vectors[1]
    for k in range(2, n + 1):
        alpha = -(Radical.sqrt(2) / Radical.sqrt(k * (k - 1)))
        a_next = (running_sum - basis[k] / alpha) * Fraction(1, k - 1)
        vectors.append(a_next)
        running_sum = running_sum + a_next

    slot_of_bit = {bit: j for j, bit in enumerate(basis_bits)}
    t_matrix = []
    for a in vectors:
        row = [Radical(0)] * n_plus_1
        for blade, value in a.items():
            row[slot_of_bit[blade.bit_length() - 1]] = value
        t_matrix.append(row)

    exact = True
    try:
        t_inverse = linalg.invert(t_matrix, EXACT)
    except InexactDivisionError:
        approx = [[float(v) for v in row] for row in t_matrix]
        t_inverse = linalg.invert(approx, APPROX)
        exact = False

    return NullFrame(algebra, sign, vectors, t_matrix, t_inverse, exact)


# -- multiplication table -------------------------------------------------------


def verify_multiplication_table(frame: NullFrame) -> TableReport:
    """Check all sixteen products of {a_i, a_j, a_i a_j, a_j a_i} per pair.

    The expected grid follows from a_i^2 = 0 and a_i . a_j = s/2: with
    s = +1 every sandwich such as (a_i a_j) a_i collapses back to a_i,
    with s = -1 it picks up a minus sign.
    """
    s = frame.sign
    violations = []
    checked = 0
    zero = frame.algebra.zero(frame.backend)
    for i, j in itertools.combinations(range(frame.size), 2):
        ai, aj = frame.vectors[i], frame.vectors[j]
        aij, aji = ai * aj, aj * ai
        labels = ("a_i", "a_j", "a_i*a_j", "a_j*a_i")
        elements = (ai, aj, aij, aji)
        expected = (
            (zero, aij, zero, ai * s),
            (aji, zero, aj * s, zero),
            (ai * s, zero, aij * s, zero),
            (zero, aj * s, zero, aji * s),
        )
        for r in range(4):
            for c in range(4):
                checked += 1
                got = elements[r] * elements[c]
                if got != expected[r][c]:
                    violations.append(
                        (i + 1, j + 1, f"{labels[r]} * {labels[c]}")
                    )
    return TableReport(sign=s, size=frame.size, checked=checked,
                       violations=tuple(violations))


# -- coordinate conversions ------------------------------------------------------


def _apply_row(row: CoordinateRow, matrix, frame) -> tuple:
    entries = [coerce(v, frame.backend) for v in row.entries]
    return tuple(linalg.vec_mat(entries, matrix))


def to_null_coordinates(frame: NullFrame, row: CoordinateRow) -> CoordinateRow:
    if row.basis != "standard":
        raise ValueError("expected standard coordinates")
    if len(row.entries) != frame.size:
        raise ValueError(f"expected {frame.size} coordinates")
    return CoordinateRow(_apply_row(row, frame.t_inverse, frame), "null")


def to_standard_coordinates(frame: NullFrame, row: CoordinateRow) -> CoordinateRow:
    if row.basis != "null":
        raise ValueError("expected null coordinates")
    if len(row.entries) != frame.size:
        raise ValueError(f"expected {frame.size} coordinates")
    return CoordinateRow(_apply_row(row, frame.t_matrix, frame), "standard")


def vector_from_null_coordinates(frame: NullFrame, coords) -> Multivector:
    acc = frame.algebra.zero(frame.backend)
    for x, a in zip(coords, frame.vectors):
        acc = acc + a * coerce(x, frame.backend)
    return acc


# -- sums and reciprocal frame ------------------------------------------------------


def k_sum(frame: NullFrame, k: int) -> Multivector:
    """A_k = a_1 + ... + a_k."""
    if not 1 <= k <= frame.size:
        raise ValueError(f"k = {k} outside 1..{frame.size}")
    acc = frame.vectors[0]
    for a in frame.vectors[1:k]:
        acc = acc + a
    return acc


def unit_k_sum(frame: NullFrame, k: int) -> Multivector:
    """The normalized k-sum, squaring to the correlation sign."""
    if k < 2:
        raise ValueError("unit_k_sum needs k >= 2 (normalization undefined)")
    scale = Radical.sqrt(Fraction(2, k * (k - 1)))
    return k_sum(frame, k) * coerce(scale, frame.backend)


def dual_sum(frame: NullFrame, i: int) -> Multivector:
    """The n-sum leaving out a_i (1-based)."""
    if not 1 <= i <= frame.size:
        raise ValueError(f"i = {i} outside 1..{frame.size}")
    return k_sum(frame, frame.size) - frame.vector(i)


def reciprocal_frame(frame: NullFrame) -> list[Multivector]:
    """Vectors a^i with a^i . a_j = delta_ij.

    Columns of T^-1 contract the metric-dual standard frame, so the
    grade-1 duality is inherited from the orthonormal basis.
    """
    dual = frame.metric_dual_basis()
    out = []
    for i in range(frame.size):
        acc = frame.algebra.zero(frame.backend)
        for kk in range(frame.size):
            acc = acc + dual[kk] * frame.t_inverse[kk][i]
        out.append(acc)
    return out


# -- pseudoscalar relation ---------------------------------------------------------


def pseudoscalar_relation(frame: NullFrame):
    """Standard pseudoscalar vs -(sqrt 2)^(n+1)/sqrt(n) times the frame wedge."""
    if frame.sign < 0:
        raise ValueError("stated for positively correlated frames")
    n = frame.n
    lhs = frame.algebra.pseudoscalar(frame.backend)
    factor = -(_sqrt2_power(n + 1) / Radical.sqrt(n))
    rhs = wedge_list(list(frame.vectors)) * coerce(factor, frame.backend)
    return lhs, rhs, lhs == rhs


def _sqrt2_power(k: int) -> Radical:
    value = Radical(1)
    root2 = Radical.sqrt(2)
    for _ in range(k):
        value = value * root2
    return value


# -- null-wedge coordinates (internal) -------------------------------------------------
#
# The canonical products a_{i1}...a_{ik} expand over wedges of frame
# vectors with *rational* structure constants (all dots are +-1/2), which
# keeps the canonical-basis linear algebra exact and cheap: the product of
# the subset S has wedge support only on subsets of S, with coefficient 1
# on S itself, so the change of basis is unitriangular.


def _dual_pairing(frame: NullFrame, i: int, j: int):
    return Fraction(0) if i == j else (
        Fraction(1, 2) if frame.sign > 0 else Fraction(-1, 2)
    )


def _left_multiply_vector(frame: NullFrame, coords, wedge_coeffs: dict) -> dict:
    """Multiply (sum_j coords[j] a_j) onto a wedge-coordinate multivector."""
    out: dict[int, object] = {}

    def add(key, value):
        if is_zero(value):
            return
        current = out.get(key)
        total = value if current is None else current + value
        if is_zero(total):
            out.pop(key, None)
        else:
            out[key] = total

    size = frame.size
    for subset, c in wedge_coeffs.items():
        members = [t for t in range(size) if subset >> t & 1]
        for j, vj in enumerate(coords):
            if is_zero(vj):
                continue
            # contraction: a_j . (a_t1 ^ a_t2 ^ ...) with alternating signs
            for pos, t in enumerate(members):
                pairing = _dual_pairing(frame, j, t)
                if not pairing:
                    continue
                term = vj * pairing * c
                add(subset & ~(1 << t), -term if pos & 1 else term)
            # wedge: insert a_j unless already present
            if not subset >> j & 1:
                below = (subset & ((1 << j) - 1)).bit_count()
                term = vj * c
                add(subset | (1 << j), -term if below & 1 else term)
    return out


def _generator_null_coords(frame: NullFrame) -> dict[int, list]:
    """Null coordinates of each algebra generator (rows of T^-1)."""
    if frame._generator_null_coords is None:
        coords = {}
        for slot, bit in enumerate(frame.standard_basis_bits()):
            coords[bit] = list(frame.t_inverse[slot])
        frame._generator_null_coords = coords
    return frame._generator_null_coords


def multivector_to_wedge_coords(frame: NullFrame, mv: Multivector) -> dict:
    """Coordinates of mv over the wedges of frame vectors (subset bitmasks)."""
    if mv.algebra != frame.algebra:
        raise AlgebraError("multivector from a different algebra")
    gen_coords = _generator_null_coords(frame)
    total: dict[int, object] = {}
    for blade, value in mv.items():
        expansion = {0: coerce(1, frame.backend)}
        for bit in reversed(range(frame.algebra.n_generators)):
            if blade >> bit & 1:
                expansion = _left_multiply_vector(
                    frame, gen_coords[bit], expansion
                )
        for subset, c in expansion.items():
            term = c * value
            current = total.get(subset)
            total[subset] = term if current is None else current + term
    return {s: c for s, c in total.items() if not is_zero(c)}


def _product_wedge_expansions(frame: NullFrame) -> dict[int, dict]:
    """Wedge expansion of every canonical product, keyed by subset bitmask."""
    if frame._wedge_cache is None:
        one = Fraction(1)
        cache: dict[int, dict] = {0: {0: one}}
        for subset in range(1, 1 << frame.size):
            low = subset & -subset
            rest = subset ^ low
            j = low.bit_length() - 1
            coords = [one if t == j else Fraction(0) for t in range(frame.size)]
            cache[subset] = _left_multiply_vector(frame, coords, cache[rest])
        frame._wedge_cache = cache
    return frame._wedge_cache


def canonical_subsets(size: int) -> list[int]:
    """Subset bitmasks ordered by (grade, lexicographic index tuple)."""
    def key(subset: int):
        return (subset.bit_count(),
                tuple(t for t in range(size) if subset >> t & 1))
    return sorted(range(1 << size), key=key)


def null_canonical_basis(frame: NullFrame):
    """The 2^(n+1) canonical products and their blade-basis matrix.

    Returns (subsets, products, matrix): products[r] is the geometric
    product of frame vectors over subsets[r] (increasing indices) and
    matrix[r] holds its coefficients over the blade basis in bitmask
    order.  Linear independence is asserted via the unitriangular wedge
    expansion; failure raises instead of passing silently.
    """
    if frame.size > CANONICAL_BASIS_LIMIT:
        raise AlgebraError(
            f"canonical basis limited to n+1 <= {CANONICAL_BASIS_LIMIT}"
        )
    if frame._canonical_cache is not None:
        return frame._canonical_cache
    subsets = canonical_subsets(frame.size)
    products = []
    for subset in subsets:
        mv = frame.algebra.scalar(coerce(1, frame.backend))
        for t in range(frame.size):
            if subset >> t & 1:
                mv = mv * frame.vectors[t]
        products.append(mv)

    expansions = _product_wedge_expansions(frame)
    for subset in subsets:
        expansion = expansions[subset]
        top = expansion.get(subset)
        if top is None or top != 1:
            raise AlgebraError(
                "canonical products are not unitriangular over the frame "
                f"wedges (subset {subset:#x}); basis would be singular"
            )
        for other in expansion:
            if other & ~subset:
                raise AlgebraError(
                    f"product over subset {subset:#x} leaks outside its "
                    "index set; basis structure violated"
                )

    matrix = [
        [product.coefficient(blade) for blade in range(frame.algebra.dim)]
        for product in products
    ]
    frame._canonical_cache = (subsets, products, matrix)
    return frame._canonical_cache


def express_in_null_basis(frame: NullFrame, mv: Multivector) -> list:
    """Coefficients of mv over the canonical null products (subset order).

    Solved exactly by back-substitution down the grades: the residual
    wedge coordinate at a subset S is the coefficient of the product
    over S once all supersets have been stripped.
    """
    subsets = canonical_subsets(frame.size)
    expansions = _product_wedge_expansions(frame)
    residual = multivector_to_wedge_coords(frame, mv)
    coefficients = []
    for subset in reversed(subsets):
        c = residual.get(subset)
        if c is None or is_zero(c):
            coefficients.append(coerce(0, frame.backend))
            continue
        coefficients.append(c)
        for other, weight in expansions[subset].items():
            value = residual.get(other, coerce(0, frame.backend)) - c * weight
            if is_zero(value):
                residual.pop(other, None)
            else:
                residual[other] = value
    if any(not is_zero(v) for v in residual.values()):
        raise AlgebraError("expression in the null basis left a residual")
    coefficients.reverse()
    return coefficients


def reconstruct_from_null_basis(frame: NullFrame, coefficients) -> Multivector:
    subsets, products, _ = null_canonical_basis(frame)
    acc = frame.algebra.zero(frame.backend)
    for c, product in zip(coefficients, products):
        acc = acc + product * c
    return acc
