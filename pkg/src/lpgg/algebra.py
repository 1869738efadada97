"""Dense Clifford-algebra arithmetic for G(p,q).

Blades are bitmasks over the generator list ``e1..ep, f1..fq`` (bit ``k``
set means generator ``k`` is a factor; generators with index ``< p``
square to ``+1``, the rest to ``-1``).  A multivector is a pruned map
from blade bitmask to a scalar coefficient, with all coefficients drawn
from a single backend (exact radicals, floats, or complex floats).

Everything here is immutable and pure: values can be shared freely.
"""

from __future__ import annotations

from fractions import Fraction

from . import scalars
from .scalars import APPROX, COMPLEX, EXACT, Radical, coerce, is_zero

DIMENSION_LIMIT = 12


class AlgebraError(ValueError):
    pass


class DimensionLimitError(AlgebraError):
    pass


class ContextMismatchError(AlgebraError):
    pass


class BackendMismatchError(AlgebraError):
    pass


def _reorder_parity(a: int, b: int) -> int:
    """Sign from sorting the concatenation of two ascending blades."""
    a >>= 1
    total = 0
    while a:
        total += (a & b).bit_count()
        a >>= 1
    return -1 if total & 1 else 1


class Algebra:
    """The algebra G(p,q): generator metric and blade product signs."""

    def __init__(self, p: int, q: int):
        if p < 0 or q < 0:
            raise AlgebraError("signature counts must be nonnegative")
        if p + q > DIMENSION_LIMIT:
            raise DimensionLimitError(
                f"p+q = {p + q} exceeds the dense-representation limit "
                f"{DIMENSION_LIMIT}"
            )
        self.p = p
        self.q = q
        self.n_generators = p + q
        self.dim = 1 << (p + q)
        self._sign_cache: dict[tuple[int, int], int] = {}

    def __eq__(self, other):
        return isinstance(other, Algebra) and (self.p, self.q) == (other.p, other.q)

    def __hash__(self):
        return hash((self.p, self.q))

    def __repr__(self):
        return f"Algebra({self.p}, {self.q})"

    def generator_square(self, k: int) -> int:
        return 1 if k < self.p else -1

    def generator_name(self, k: int) -> str:
        return f"e{k + 1}" if k < self.p else f"f{k - self.p + 1}"

    def blade_name(self, blade: int) -> str:
        if blade == 0:
            return "1"
        return "^".join(
            self.generator_name(k) for k in range(self.n_generators) if blade >> k & 1
        )

    def blade_from_name(self, name: str) -> int:
        name = name.strip()
        if name == "1":
            return 0
        blade = 0
        for part in name.split("^"):
            part = part.strip()
            kind, idx = part[0], int(part[1:])
            if kind == "e":
                k = idx - 1
                if not 0 <= k < self.p:
                    raise AlgebraError(f"no generator {part} in {self!r}")
            elif kind == "f":
                k = self.p + idx - 1
                if not self.p <= k < self.n_generators:
                    raise AlgebraError(f"no generator {part} in {self!r}")
            else:
                raise AlgebraError(f"bad generator name {part!r}")
            if blade >> k & 1:
                raise AlgebraError(f"repeated generator in blade {name!r}")
            blade |= 1 << k
        return blade

    def product_sign(self, a: int, b: int) -> int:
        """Sign of ``blade_a * blade_b`` (the result blade is ``a ^ b``)."""
        key = (a, b)
        cached = self._sign_cache.get(key)
        if cached is not None:
            return cached
        sign = _reorder_parity(a, b)
        shared = a & b
        k = 0
        while shared:
            if shared & 1:
                sign *= self.generator_square(k)
            shared >>= 1
            k += 1
        self._sign_cache[key] = sign
        return sign

    # -- constructors -------------------------------------------------------

    def multivector(self, coeffs: dict, backend: str | None = None) -> "Multivector":
        if backend is None:
            backend = EXACT
            for value in coeffs.values():
                backend = scalars.backend_of(value)
                break
        converted = {}
        for blade, value in coeffs.items():
            if not 0 <= blade < self.dim:
                raise AlgebraError(f"blade {blade:#x} outside {self!r}")
            value = coerce(value, backend)
            if not is_zero(value):
                converted[blade] = value
        return Multivector(self, converted, backend)

    def zero(self, backend: str = EXACT) -> "Multivector":
        return Multivector(self, {}, backend)

    def scalar(self, value, backend: str | None = None) -> "Multivector":
        if backend is None:
            backend = scalars.backend_of(value)
        return self.multivector({0: value}, backend)

    def blade(self, blade: int, value=1, backend: str | None = None) -> "Multivector":
        if backend is None:
            backend = scalars.backend_of(value)
        return self.multivector({blade: value}, backend)

    def generator(self, k: int, backend: str = EXACT) -> "Multivector":
        return self.blade(1 << k, 1, backend)

    def e(self, i: int, backend: str = EXACT) -> "Multivector":
        if not 1 <= i <= self.p:
            raise AlgebraError(f"e{i} not present in {self!r}")
        return self.generator(i - 1, backend)

    def f(self, j: int, backend: str = EXACT) -> "Multivector":
        if not 1 <= j <= self.q:
            raise AlgebraError(f"f{j} not present in {self!r}")
        return self.generator(self.p + j - 1, backend)

    def pseudoscalar(self, backend: str = EXACT) -> "Multivector":
        return self.blade(self.dim - 1, 1, backend)

    def basis_blades(self) -> list[int]:
        """All blades ordered by (grade, bitmask)."""
        return sorted(range(self.dim), key=lambda b: (b.bit_count(), b))


def make_algebra(p: int, q: int) -> Algebra:
    return Algebra(p, q)


class Multivector:
    """Immutable element of G(p,q) over one scalar backend."""

    __slots__ = ("algebra", "_coeffs", "backend")

    def __init__(self, algebra: Algebra, coeffs: dict, backend: str):
        self.algebra = algebra
        self._coeffs = coeffs
        self.backend = backend

    # -- bookkeeping ---------------------------------------------------------

    def coefficients(self) -> dict:
        return dict(self._coeffs)

    def coefficient(self, blade: int):
        value = self._coeffs.get(blade)
        if value is None:
            return coerce(0, self.backend)
        return value

    def items(self):
        return self._coeffs.items()

    def is_zero(self) -> bool:
        return not self._coeffs

    def grades(self) -> set[int]:
        return {blade.bit_count() for blade in self._coeffs}

    def _check_compatible(self, other: "Multivector"):
        if self.algebra != other.algebra:
            raise ContextMismatchError(
                f"mixed algebras {self.algebra!r} and {other.algebra!r}"
            )
        if self.backend != other.backend:
            raise BackendMismatchError(
                f"mixed backends {self.backend!r} and {other.backend!r}"
            )

    def _wrap(self, coeffs: dict) -> "Multivector":
        return Multivector(
            self.algebra,
            {blade: v for blade, v in coeffs.items() if not is_zero(v)},
            self.backend,
        )

    # -- linear structure ------------------------------------------------------

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_compatible(other)
        coeffs = dict(self._coeffs)
        for blade, value in other._coeffs.items():
            current = coeffs.get(blade)
            coeffs[blade] = value if current is None else current + value
        return self._wrap(coeffs)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap({blade: -v for blade, v in self._coeffs.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def _lift(self, value):
        """Lift a raw scalar to a multivector of this backend."""
        if isinstance(value, Multivector):
            return value
        try:
            return self.algebra.scalar(coerce(value, self.backend), self.backend)
        except TypeError:
            return NotImplemented

    def scale(self, value) -> "Multivector":
        value = coerce(value, self.backend)
        return self._wrap({blade: v * value for blade, v in self._coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, Multivector):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        self._check_compatible(other)
        return self._product(other, keep=None)

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Multivector):
            return NotImplemented
        if isinstance(other, Radical):
            return self.scale(other.inverse())
        other = coerce(other, self.backend)
        if isinstance(other, Radical):
            return self.scale(other.inverse())
        return self.scale(1 / other)

    # -- products ----------------------------------------------------------------

    def _product(self, other: "Multivector", keep) -> "Multivector":
        """Blade-pair accumulation; ``keep(ga, gb, gout)`` filters terms."""
        sign_of = self.algebra.product_sign
        coeffs: dict = {}
        for a, ca in self._coeffs.items():
            ga = a.bit_count()
            for b, cb in other._coeffs.items():
                out = a ^ b
                if keep is not None and not keep(ga, b.bit_count(), out.bit_count()):
                    continue
                term = ca * cb
                sign = sign_of(a, b)
                if sign < 0:
                    term = -term
                current = coeffs.get(out)
                coeffs[out] = term if current is None else current + term
        return self._wrap(coeffs)

    def geometric(self, other: "Multivector") -> "Multivector":
        self._check_compatible(other)
        return self._product(other, keep=None)

    def wedge(self, other: "Multivector") -> "Multivector":
        """Outer product: grade r+s part per blade pair."""
        self._check_compatible(other)
        return self._product(other, keep=lambda ga, gb, gout: gout == ga + gb)

    def __xor__(self, other):
        return self.wedge(other)

    def dot(self, other: "Multivector") -> "Multivector":
        """Grade |r-s| part per blade pair (general inputs grade-by-grade)."""
        self._check_compatible(other)
        return self._product(other, keep=lambda ga, gb, gout: gout == abs(ga - gb))

    def __or__(self, other):
        return self.dot(other)

    # -- involutions and projections ------------------------------------------------

    def grade(self, k: int) -> "Multivector":
        if not 0 <= k <= self.algebra.n_generators:
            raise AlgebraError(f"grade {k} outside 0..{self.algebra.n_generators}")
        return self._wrap(
            {blade: v for blade, v in self._coeffs.items() if blade.bit_count() == k}
        )

    def reverse(self) -> "Multivector":
        coeffs = {}
        for blade, v in self._coeffs.items():
            k = blade.bit_count()
            coeffs[blade] = -v if (k * (k - 1) // 2) & 1 else v
        return self._wrap(coeffs)

    def scalar_part(self):
        return self.coefficient(0)

    # -- conversions ------------------------------------------------------------------

    def to_backend(self, backend: str) -> "Multivector":
        order = {EXACT: 0, APPROX: 1, COMPLEX: 2}
        if order[backend] < order[self.backend]:
            raise BackendMismatchError(f"cannot narrow {self.backend} to {backend}")
        return self.algebra.multivector(
            {blade: coerce(v, backend) for blade, v in self._coeffs.items()}, backend
        )

    # -- comparisons --------------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Radical, float, complex)):
            other = self._lift(other)
            if other is NotImplemented:
                return NotImplemented
        if not isinstance(other, Multivector):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and self.backend == other.backend
            and self._coeffs == other._coeffs
        )

    def __hash__(self):
        return hash(
            (self.algebra, self.backend, frozenset(self._coeffs.items()))
        )

    def isclose(self, other: "Multivector", rel=scalars.REL_TOL, abs_tol=scalars.ABS_TOL) -> bool:
        if self.algebra != other.algebra:
            return False
        blades = set(self._coeffs) | set(other._coeffs)
        return all(
            scalars.approx_equal(
                complex(self.coefficient(b)) if self.backend == COMPLEX else float(self.coefficient(b)),
                complex(other.coefficient(b)) if other.backend == COMPLEX else float(other.coefficient(b)),
                rel,
                abs_tol,
            )
            for b in blades
        )

    def max_abs_difference(self, other: "Multivector") -> float:
        blades = set(self._coeffs) | set(other._coeffs)
        if not blades:
            return 0.0
        return max(
            abs(complex(self.coefficient(b)) - complex(other.coefficient(b)))
            for b in blades
        )

    def __repr__(self):
        from .textform import format_multivector

        return f"<{format_multivector(self)}>"


def geometric_product(u: Multivector, v: Multivector) -> Multivector:
    return u.geometric(v)


def outer_product(u: Multivector, v: Multivector) -> Multivector:
    return u.wedge(v)


def wedge_list(vectors: list[Multivector]) -> Multivector:
    if not vectors:
        raise AlgebraError("wedge_list needs at least one factor")
    result = vectors[0]
    for v in vectors[1:]:
        result = result.wedge(v)
    return result


def dot(u: Multivector, v: Multivector) -> Multivector:
    return u.dot(v)


def grade_projection(u: Multivector, k: int) -> Multivector:
    return u.grade(k)


def reverse(u: Multivector) -> Multivector:
    return u.reverse()
