"""lpgg: a light-cone projective geometric-algebra kernel and verifier.

Correlated null-vector frames of G(1,n) and G(n,1), exact radical
arithmetic, star projections, multivector differential operators,
spectral idempotents, barycentric null simplices, and a verification
CLI that checks the defining identities mechanically.
"""

from .algebra import (
    Algebra,
    AlgebraError,
    BackendMismatchError,
    ContextMismatchError,
    DimensionLimitError,
    Multivector,
    dot,
    geometric_product,
    grade_projection,
    make_algebra,
    outer_product,
    reverse,
    wedge_list,
)
from .scalars import (
    APPROX,
    COMPLEX,
    EXACT,
    InexactDivisionError,
    InexactSqrtError,
    Radical,
)

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "AlgebraError",
    "BackendMismatchError",
    "ContextMismatchError",
    "DimensionLimitError",
    "Multivector",
    "Radical",
    "InexactDivisionError",
    "InexactSqrtError",
    "EXACT",
    "APPROX",
    "COMPLEX",
    "make_algebra",
    "geometric_product",
    "outer_product",
    "wedge_list",
    "dot",
    "grade_projection",
    "reverse",
    "__version__",
]
