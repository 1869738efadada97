"""Verification suites: every stated identity, checked mechanically.

Each suite returns a :class:`~lpgg.reporting.VerificationReport` whose
checks are exact wherever the claim is exact; coefficient claims that
only hold after oracle correction are reported as ``pass-corrected``
with both values printed in the details.  Random sampling is seeded and
reproducible.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from . import atlas as atlas_mod
from . import calculus, frames, linalg, simplex, spectral, star
from .algebra import Algebra, Multivector
from .reporting import FAIL, PASS, PASS_CORRECTED, VerificationReport, merge_reports
from .scalars import EXACT, Radical
from .textform import format_multivector

DEFAULT_SEED = 2024
DEFAULT_N_MAX = 8

SUITES = ("core", "frame", "star", "calculus", "spectral", "simplex", "atlas")


def random_multivector(algebra: Algebra, rng: random.Random, terms=5,
                       backend: str = EXACT) -> Multivector:
    coeffs = {}
    for _ in range(terms):
        value = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        coeffs[rng.randrange(algebra.dim)] = (
            value if backend == EXACT else float(value)
        )
    return algebra.multivector(coeffs, backend)


def random_vector(frame: frames.NullFrame, rng: random.Random) -> Multivector:
    acc = frame.algebra.zero(frame.backend)
    for a in frame.vectors:
        acc = acc + a * Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    return acc


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


# -- core ---------------------------------------------------------------------------------


def suite_core(n_max: int = DEFAULT_N_MAX, seed: int = DEFAULT_SEED,
               backend: str = EXACT) -> VerificationReport:
    rng = random.Random(seed)
    report = VerificationReport("core", seed)

    signatures = [
        (p, q) for total in range(0, 5) for p in range(total + 1)
        for q in [total - p]
    ]

    ok = True
    for p, q in signatures:
        algebra = Algebra(p, q)
        for _ in range(200):
            u = random_multivector(algebra, rng, backend=backend)
            v = random_multivector(algebra, rng, backend=backend)
            w = random_multivector(algebra, rng, backend=backend)
            left = (u * v) * w
            right = u * (v * w)
            if backend == EXACT:
                ok = ok and left == right
            else:
                ok = ok and left.isclose(right)
            if not ok:
                break
        if not ok:
            break
    report.add(
        "associativity",
        "(uv)w = u(vw) on 200 random multivectors per signature, p+q <= 4",
        _status(ok),
    )

    ok = True
    for p, q in signatures:
        algebra = Algebra(p, q)
        for i in range(p + q):
            gi = algebra.generator(i)
            expected = algebra.scalar(1 if i < p else -1)
            ok = ok and gi * gi == expected
            for j in range(i + 1, p + q):
                gj = algebra.generator(j)
                ok = ok and gi * gj == -(gj * gi)
    report.add(
        "generator-metric",
        "g_i^2 = +-1 by signature and g_i g_j = -g_j g_i",
        _status(ok),
    )

    ok = True
    for p, q in signatures:
        if p + q == 0:
            continue
        algebra = Algebra(p, q)
        for _ in range(20):
            u = sum(
                (algebra.generator(k) * Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                 for k in range(p + q)),
                algebra.zero(),
            )
            v = sum(
                (algebra.generator(k) * Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                 for k in range(p + q)),
                algebra.zero(),
            )
            ok = ok and u * v == u.dot(v) + u.wedge(v)
    report.add(
        "vector-product-split",
        "uv = u.v + u^v for grade-1 u, v",
        _status(ok),
    )

    r = (Radical.sqrt(2) * Radical.sqrt(3)) * Radical.sqrt(6)
    ok = r == Radical(6)
    sample = Radical(Fraction(3, 7)) + Radical.sqrt(5) * Fraction(2, 3)
    ok = ok and abs(float(sample) - (3 / 7 + 2 / 3 * 5**0.5)) < 1e-15 * 10
    report.add(
        "radical-arithmetic",
        "(sqrt2*sqrt3)*sqrt6 = 6 exactly; float round-trip within 1e-15",
        _status(ok),
    )

    ok = True
    for p, q in [(1, 1), (1, 2), (2, 2)]:
        algebra = Algebra(p, q)
        for _ in range(30):
            u = random_multivector(algebra, rng)
            v = random_multivector(algebra, rng)
            ok = ok and (u * v).reverse() == v.reverse() * u.reverse()
    report.add(
        "reverse-antiautomorphism",
        "reverse(uv) = reverse(v) reverse(u)",
        _status(ok),
    )
    return report


# -- frame --------------------------------------------------------------------------------


def _t3_fixture():
    h = Fraction(1, 2)
    t3 = [[h, h, 0], [h, -h, 0], [1, 0, 1]]
    t3_inv = [[1, 1, 0], [1, -1, 0], [-1, -1, 1]]
    return t3, t3_inv


def _t8_fixture():
    """Entry-for-entry transcription of the n+1 = 8 change-of-basis pair."""
    h = Fraction(1, 2)
    rt = Radical.sqrt

    def row(*entries):
        return [Radical(0) + e for e in entries]

    t8 = [
        row(h, h, 0, 0, 0, 0, 0, 0),
        row(h, -h, 0, 0, 0, 0, 0, 0),
        row(1, 0, 1, 0, 0, 0, 0, 0),
        row(1, 0, h, rt(3) / 2, 0, 0, 0, 0),
        row(1, 0, h, 1 / (2 * rt(3)), rt(Fraction(2, 3)), 0, 0, 0),
        row(1, 0, h, 1 / (2 * rt(3)), 1 / (2 * rt(6)), rt(5) / (2 * rt(2)), 0, 0),
        row(1, 0, h, 1 / (2 * rt(3)), 1 / (2 * rt(6)), 1 / (2 * rt(10)),
            rt(Fraction(3, 5)), 0),
        row(1, 0, h, 1 / (2 * rt(3)), 1 / (2 * rt(6)), 1 / (2 * rt(10)),
            1 / (2 * rt(15)), rt(7) / (2 * rt(3))),
    ]
    # The (4,4) entry is printed as -2/sqrt(3); that sign breaks T T^-1 = I
    # and contradicts the defining combination for the fourth basis vector
    # (f_3 = -(a1+a2+a3-2a4)/sqrt(3)), so +2/sqrt(3) is used here and the
    # discrepancy is reported by the transition-8 check.
    t8_inv = [
        row(1, 1, 0, 0, 0, 0, 0, 0),
        row(1, -1, 0, 0, 0, 0, 0, 0),
        row(-1, -1, 1, 0, 0, 0, 0, 0),
        row(-1 / rt(3), -1 / rt(3), -1 / rt(3), 2 / rt(3), 0, 0, 0, 0),
        row(-1 / rt(6), -1 / rt(6), -1 / rt(6), -1 / rt(6), rt(Fraction(3, 2)),
            0, 0, 0),
        row(-1 / rt(10), -1 / rt(10), -1 / rt(10), -1 / rt(10), -1 / rt(10),
            2 * rt(Fraction(2, 5)), 0, 0),
        row(-1 / rt(15), -1 / rt(15), -1 / rt(15), -1 / rt(15), -1 / rt(15),
            -1 / rt(15), rt(Fraction(5, 3)), 0),
        row(-1 / rt(21), -1 / rt(21), -1 / rt(21), -1 / rt(21), -1 / rt(21),
            -1 / rt(21), -1 / rt(21), 2 * rt(Fraction(3, 7))),
    ]
    return t8, t8_inv


def suite_frame(n_max: int = DEFAULT_N_MAX, seed: int = DEFAULT_SEED,
                backend: str = EXACT) -> VerificationReport:
    rng = random.Random(seed)
    report = VerificationReport("frame", seed)

    ok = True
    detail = ""
    for sign in (1, -1):
        for size in range(2, n_max + 1):
            fr = frames.build_null_frame(size, sign)
            half = fr.algebra.scalar(Fraction(sign, 2))
            for i, a in enumerate(fr.vectors):
                if not (a * a).is_zero():
                    ok, detail = False, f"a_{i+1}^2 != 0 at size {size}"
            for i, j in itertools.combinations(range(size), 2):
                if fr.vectors[i].dot(fr.vectors[j]) != half:
                    ok, detail = False, f"a.a mismatch at {size}, sign {sign}"
            if frames.wedge_list(list(fr.vectors)).is_zero():
                ok, detail = False, f"dependent frame at size {size}"
    report.add(
        "frame-axioms",
        "a_i^2 = 0, a_i.a_j = sign/2, wedge of the frame nonzero "
        f"(both signs, sizes 2..{n_max})",
        _status(ok),
        detail,
    )

    ok = True
    for sign in (1, -1):
        for size in range(2, n_max + 1):
            table = frames.verify_multiplication_table(
                frames.build_null_frame(size, sign)
            )
            ok = ok and table.ok
    report.add(
        "multiplication-tables",
        "all sixteen pair products match the correlated table, both signs",
        _status(ok),
    )

    fr3 = frames.build_null_frame(3, 1)
    t3, t3_inv = _t3_fixture()
    ok = linalg.matrices_equal(fr3.t_matrix, t3) and linalg.matrices_equal(
        fr3.t_inverse, t3_inv
    )
    report.add(
        "transition-3",
        "T and T^-1 for n+1 = 3 match the stated 3x3 matrices",
        _status(ok),
    )

    fr8 = frames.build_null_frame(8, 1)
    t8, t8_inv = _t8_fixture()
    ok = linalg.matrices_equal(fr8.t_matrix, t8) and linalg.matrices_equal(
        fr8.t_inverse, t8_inv
    )
    report.add(
        "transition-8",
        "T and T^-1 for n+1 = 8 match the stated 8x8 matrices entry-for-entry",
        PASS_CORRECTED if ok else FAIL,
        "the stated T^-1 entry (4,4) is -2/sqrt(3); TT^-1 = I and the "
        "defining combination force +2/sqrt(3); all 127 other entries "
        "match verbatim",
    )

    ok = True
    for size in range(2, n_max + 1):
        fr = frames.build_null_frame(size, 1)
        product = linalg.matmul(fr.t_matrix, fr.t_inverse)
        ok = ok and linalg.matrices_equal(product, linalg.identity(size))
    report.add(
        "transition-inverse",
        "T T^-1 = I exactly for every size",
        _status(ok),
    )

    ok = True
    for size in range(2, n_max + 1):
        fr = frames.build_null_frame(size, 1)
        rows = [
            tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                  for _ in range(size))
            for _ in range(5)
        ]
        for row in rows:
            s = frames.CoordinateRow(row, "standard")
            x = frames.to_null_coordinates(fr, s)
            back = frames.to_standard_coordinates(fr, x)
            ok = ok and all(
                Radical(0) + a == Radical(0) + b
                for a, b in zip(back.entries, row)
            )
    report.add(
        "coordinate-round-trip",
        "standard -> null -> standard coordinates is the identity",
        _status(ok),
    )

    fr8 = frames.build_null_frame(8, 1)
    ok = True
    for k in range(2, 9):
        ak = frames.k_sum(fr8, k)
        ok = ok and ak * ak == fr8.algebra.scalar(Fraction(k * (k - 1), 2))
        ok = ok and frames.unit_k_sum(fr8, k) * frames.unit_k_sum(fr8, k) == \
            fr8.algebra.scalar(1)
    report.add(
        "k-sum-squares",
        "A_k^2 = k(k-1)/2 and the unit k-sum squares to 1, k = 2..8",
        _status(ok),
    )

    ok = True
    for size in range(2, n_max + 1):
        fr = frames.build_null_frame(size, 1)
        recip = frames.reciprocal_frame(fr)
        for i, r in enumerate(recip):
            for j, a in enumerate(fr.vectors):
                expected = fr.algebra.scalar(1 if i == j else 0)
                ok = ok and r.dot(a) == expected
        big = frames.k_sum(fr, size)
        ok = ok and all(big.dot(r) == fr.algebra.scalar(1) for r in recip)
        n = size - 1
        for i, r in enumerate(recip):
            alt = (frames.dual_sum(fr, i + 1) - fr.vectors[i] * (n - 1)) \
                * Fraction(2, n)
            ok = ok and alt == r
    report.add(
        "reciprocal-frame",
        "a^i . a_j = delta_ij; A . a^i = 1; a^i = (2/n)(dual_i - (n-1) a_i)",
        _status(ok),
    )

    ok = True
    for size in range(2, n_max + 1):
        _, _, matches = frames.pseudoscalar_relation(
            frames.build_null_frame(size, 1)
        )
        ok = ok and matches
    fr3 = frames.build_null_frame(3, 1)
    lhs, rhs, _ = frames.pseudoscalar_relation(fr3)
    ok = ok and lhs == frames.wedge_list(list(fr3.vectors)) * (-2)
    report.add(
        "pseudoscalar-relation",
        "e1 f1..fn = -(sqrt2)^(n+1)/sqrt(n) a_1^..^a_{n+1}, n = 1..7; "
        "the n = 2 case is -2 a1^a2^a3",
        _status(ok),
    )

    ok = True
    for size in range(2, min(n_max, 8) + 1):
        fr = frames.build_null_frame(size, 1)
        subsets, products, _ = frames.null_canonical_basis(fr)
        for _ in range(3):
            mv = random_multivector(fr.algebra, rng, terms=6)
            coeffs = frames.express_in_null_basis(fr, mv)
            ok = ok and frames.reconstruct_from_null_basis(fr, coeffs) == mv
    report.add(
        "canonical-basis-invertible",
        "the 2^(n+1) canonical null products are a basis (round-trips exactly)",
        _status(ok),
    )

    fr3 = frames.build_null_frame(3, 1)
    g = fr3.algebra
    e1f1 = g.e(1) * g.f(1)
    coeffs = frames.express_in_null_basis(fr3, e1f1)
    subsets, _, _ = frames.null_canonical_basis(fr3)
    by_subset = dict(zip(subsets, coeffs))
    ok = by_subset[0b000] == 1 and by_subset[0b011] == -2 and sum(
        1 for c in coeffs if c
    ) == 2
    report.add(
        "canonical-form-e1f1",
        "e1 f1 = 1 - 2 a1 a2",
        _status(ok),
    )

    e1f2 = g.e(1) * g.f(2)
    coeffs = dict(zip(subsets, frames.express_in_null_basis(fr3, e1f2)))
    derived = {0b000: -1, 0b101: 1, 0b110: 1}
    ok = all(coeffs.get(k, Radical(0)) == v for k, v in derived.items()) and sum(
        1 for c in coeffs.values() if c
    ) == 3
    dual_route = (fr3.vectors[0] + fr3.vectors[1]) * (
        -fr3.vectors[0] - fr3.vectors[1] + fr3.vectors[2]
    )
    ok = ok and dual_route == e1f2
    report.add(
        "canonical-form-e1f2",
        "e1 f2 expands over the null products",
        PASS_CORRECTED if ok else FAIL,
        "stated 1 + a1a3 - a2a3 has scalar part 1, impossible for a "
        "bivector; both routes give -1 + a1a3 + a2a3 exactly",
    )

    e1f1f2 = g.e(1) * g.f(1) * g.f(2)
    coeffs = dict(zip(subsets, frames.express_in_null_basis(fr3, e1f1f2)))
    derived = {0b001: 1, 0b010: -1, 0b100: 1, 0b111: -2}
    ok = all(coeffs.get(k, Radical(0)) == v for k, v in derived.items()) and sum(
        1 for c in coeffs.values() if c
    ) == 4
    ok = ok and e1f1f2 == frames.wedge_list(list(fr3.vectors)) * (-2)
    report.add(
        "canonical-form-e1f1f2",
        "e1 f1 f2 expands over the null products",
        PASS_CORRECTED if ok else FAIL,
        "stated a1 + a3 - 2 a1a2a3 drops the -a2 term; the expansion "
        "a1 - a2 + a3 - 2 a1a2a3 equals the central pseudoscalar exactly",
    )

    return report


# -- star ----------------------------------------------------------------------------------


def suite_star(n_max: int = 4, seed: int = DEFAULT_SEED,
               backend: str = EXACT) -> VerificationReport:
    rng = random.Random(seed)
    report = VerificationReport("star", seed)

    sizes = [s for s in (2, 3, 4) if s <= max(n_max, 2)]
    involution_ok = True
    homomorphism_ok = True
    contraction_ok = True
    mediated_ok = True
    samples = 0
    for size in sizes:
        fr = frames.build_null_frame(size, 1)
        for _ in range(40):
            samples += 1
            g = random_multivector(fr.algebra, rng)
            h = random_multivector(fr.algebra, rng)
            for k in range(2, size + 1):
                involution_ok = involution_ok and star.star(
                    fr, star.star(fr, g, k), k
                ) == g
            homomorphism_ok = homomorphism_ok and star.star(fr, g * h) == \
                star.star(fr, g) * star.star(fr, h)
            am = star.a_matrix(fr, g)
            contraction_ok = contraction_ok and am.contraction_as_star() == \
                star.star(fr, g)
            mp = star.mediated_product_check(fr, g, h)
            mediated_ok = mediated_ok and mp.normalized_matches
            if size > 2 and not (g * h).is_zero():
                mediated_ok = mediated_ok and not mp.raw_matches
    report.add(
        "involution",
        f"(g*)* = g for all k, {samples} random elements",
        _status(involution_ok),
    )
    report.add(
        "homomorphism",
        "(gh)* = g* h* exactly",
        _status(homomorphism_ok),
    )
    report.add(
        "contraction-normalization",
        "the all-ones contraction of [g] equals ((n+1)n/2) g*",
        PASS_CORRECTED if contraction_ok else FAIL,
        "the unnormalized display omits the factor 2/((n+1)n)",
    )
    report.add(
        "mediated-product",
        "gh is recovered from [g],[h] with the squared normalization",
        PASS_CORRECTED if mediated_ok else FAIL,
        "raw contraction equals ((n+1)n/2)^2 gh; the factor is required",
    )

    fr3 = frames.build_null_frame(3, 1)
    am = star.a_matrix(fr3, fr3.algebra.scalar(1))
    diag_ok = all(am.entries[i][i].is_zero() for i in range(3))
    v = random_vector(fr3, rng)
    amv = star.a_matrix(fr3, v)
    grade1_ok = all(
        amv.entries[i][i] == fr3.vectors[i] * (
            (fr3.vectors[i].dot(v)).scalar_part() * 2
        )
        for i in range(3)
    )
    report.add(
        "a-matrix-diagonal",
        "diagonal entries vanish for g = 1 and follow 2(a_i.v) a_i for vectors",
        _status(diag_ok and grade1_ok),
    )

    m = [[0] * 3 for _ in range(3)]
    m[0][1] = 1
    g1 = star.from_coefficient_matrix(fr3, m)
    expected = fr3.algebra.scalar(Fraction(1, 2)) + fr3.vectors[0].wedge(
        fr3.vectors[1]
    )
    ones = [[1] * 3 for _ in range(3)]
    g2 = star.from_coefficient_matrix(fr3, ones)
    ident = [[int(i == j) for j in range(3)] for i in range(3)]
    g3 = star.from_coefficient_matrix(fr3, ident)
    ok = g1 == expected and g2 == fr3.algebra.scalar(3) and g3.is_zero()
    grades_ok = True
    for _ in range(20):
        mat = [
            [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(3)]
            for _ in range(3)
        ]
        grades_ok = grades_ok and star.from_coefficient_matrix(
            fr3, mat
        ).grades() <= {0, 2}
    report.add(
        "coefficient-matrix",
        "sum m_ij a_i a_j has grades {0, 2}; diagonal is ignored",
        _status(ok and grades_ok),
    )
    return report


# -- calculus -------------------------------------------------------------------------------


def suite_calculus(n_max: int = DEFAULT_N_MAX, seed: int = DEFAULT_SEED,
                   backend: str = EXACT) -> VerificationReport:
    rng = random.Random(seed)
    report = VerificationReport("calculus", seed)

    ok_x = True
    ok_x2 = True
    for size in range(2, n_max + 1):
        fr = frames.build_null_frame(size, 1)
        x = calculus.PolyField.identity(fr)
        nabla = calculus.make_nabla(fr)
        ok_x = ok_x and nabla.apply(x) == calculus.PolyField.constant(
            fr, fr.algebra.scalar(size)
        )
        ok_x2 = ok_x2 and nabla.apply(calculus.square_field(fr)) == x.scale(2)
    report.add("gradient-of-x", "nabla x = n+1 exactly, n = 1..7", _status(ok_x))
    report.add("gradient-of-x-squared", "nabla x^2 = 2x exactly", _status(ok_x2))

    name_map = {}
    for size in (2, 3, 4, 5):
        fr = frames.build_null_frame(size, 1)
        for check in calculus.identity_report(fr):
            current = name_map.get(check.name)
            entry = (check.status, check.claim, check.details,
                     str(check.derived_coefficients))
            if current is None:
                name_map[check.name] = entry
            elif current[0] != check.status and {current[0], check.status} == \
                    {PASS, PASS_CORRECTED}:
                # a coefficient slip can be invisible at special n (the
                # printed gradient-laplacian is exact at n = 2)
                name_map[check.name] = (
                    PASS_CORRECTED, check.claim, current[2] or check.details,
                    current[3],
                )
    for name, (status, claim, details, derived) in name_map.items():
        if status == PASS_CORRECTED and derived:
            details = (details + "; derived " + derived).strip("; ")
        report.add(name, claim, status, details)

    mixed_ok = True
    fr = frames.build_null_frame(4, 1)
    for _ in range(10):
        exp = tuple(rng.randint(0, 2) for _ in range(4))
        f = calculus.PolyField.monomial(fr, exp)
        for i, j in itertools.combinations(range(1, 5), 2):
            mixed_ok = mixed_ok and f.partial(i).partial(j) == \
                f.partial(j).partial(i)
    report.add(
        "mixed-partials",
        "partial derivatives commute exactly",
        _status(mixed_ok),
    )

    scalar_ok = True
    for size in (3, 4):
        fr = frames.build_null_frame(size, 1)
        dual = calculus.make_dual_nabla(fr)
        null = calculus.make_null_nabla(fr)
        for op in (dual.compose(dual), null.compose(null)):
            for f in calculus.monomial_fields(fr, 2):
                scalar_ok = scalar_ok and op.apply(f).is_scalar_valued()
    report.add(
        "laplacians-scalar-valued",
        "dual and null Laplacians map scalar fields to scalar fields",
        _status(scalar_ok),
    )

    fd_ok = True
    worst = 0.0
    points_checked = 0
    for size in (3, 4):
        fr = frames.build_null_frame(size, 1)
        while points_checked < 10 * (size - 2) + 10:
            raw = [rng.uniform(0.05, 1.0) for _ in range(size)]
            total = sum(raw)
            coords = [v / total for v in raw]
            points_checked += 1
            fd = calculus.finite_difference_check(fr, "abs_x", coords, 1e-5)
            worst = max(worst, fd.max_abs_error)
            fd_ok = fd_ok and fd.within(1e-6)
            for tag in ("x", "x2", "unit_x"):
                fd = calculus.finite_difference_check(fr, tag, coords, 1e-5)
                worst = max(worst, fd.max_abs_error)
                fd_ok = fd_ok and fd.within(1e-6)
    report.add(
        "finite-differences",
        "nabla|x| = unit x, nabla unit x = n/|x|, nabla x^2 = 2x, "
        "nabla x = n+1 at 20 random interior points (h = 1e-5, tol 1e-6)",
        _status(fd_ok),
        f"max abs error {worst:.2e}",
    )
    return report


# -- spectral -------------------------------------------------------------------------------


def suite_spectral(n_max: int = DEFAULT_N_MAX, seed: int = DEFAULT_SEED,
                   backend: str = EXACT) -> VerificationReport:
    rng = random.Random(seed)
    report = VerificationReport("spectral", seed)

    fr2 = frames.build_null_frame(2, 1)
    a1, a2 = fr2.vectors
    eigen_ok = True
    residual_ok = True
    projective_ok = True
    for _ in range(100):
        c = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(4)]
        v1 = a1 * c[0] + a2 * c[1]
        v2 = a1 * c[2] + a2 * c[3]
        det = spectral.coefficient_determinant((c[0], c[1]), (c[2], c[3]))
        eigen_ok = eigen_ok and spectral.wedge_endo_2d(fr2, v1, v2, a1) == a1 * det
        eigen_ok = eigen_ok and spectral.wedge_endo_2d(fr2, v1, v2, a2) == \
            a2 * (-det)
        x = random_vector(fr2, rng)
        eigen_ok = eigen_ok and spectral.wedge_endo_2d(fr2, v1, v2, x) == \
            spectral.wedge_endo_2d_expanded(fr2, v1, v2, x)
        residual_ok = residual_ok and spectral.cayley_grassmann_residual(
            fr2, v1, v2, x
        ).is_zero()
        if det:
            l1, l2 = spectral.projective_coordinates(fr2, v1, v2, x)
            projective_ok = projective_ok and v1 * l1 + v2 * l2 == x
    report.add(
        "wedge-endo-eigenvalues",
        "f(a1) = det a1 and f(a2) = -det a2 with det = v11 v22 - v12 v21",
        PASS_CORRECTED if eigen_ok else FAIL,
        "the stated determinant matrix repeats v12 where v21 belongs; "
        "the expansion 2((x.v2)v1 - (x.v1)v2) forces v21",
    )
    report.add(
        "cayley-grassmann",
        "f(f(x)) - 2(f(x).v2)v1 + 2(f(x).v1)v2 = 0 on 100 random triples",
        _status(residual_ok),
    )
    report.add(
        "projective-reconstruction",
        "x is recovered from its two wedge ratios when v1^v2 != 0",
        _status(projective_ok),
    )

    fr3 = frames.build_null_frame(3, 1)
    g12 = fr3.algebra
    i_ps = g12.e(1) * g12.f(1) * g12.f(2)
    endo_ok = True
    central_ok = True
    for _ in range(30):
        coords = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(3)]
        x = frames.vector_from_null_coordinates(fr3, coords)
        fx = spectral.pseudoscalar_endo_3d(fr3, x)
        endo_ok = endo_ok and fx == -(i_ps * x)
        endo_ok = endo_ok and fx == spectral.pseudoscalar_endo_3d_expanded(
            fr3, coords
        )
        central_ok = central_ok and i_ps * x == x * i_ps
    report.add(
        "pseudoscalar-endo",
        "2(a1^a2^a3)x = -ix with the stated bivector expansion",
        _status(endo_ok),
    )
    report.add(
        "pseudoscalar-central",
        "i = e1 f1 f2 commutes with vectors",
        _status(central_ok),
    )

    bivs = [
        fr3.vectors[1].wedge(fr3.vectors[2]),
        fr3.vectors[2].wedge(fr3.vectors[0]),
        fr3.vectors[0].wedge(fr3.vectors[1]),
    ]
    squares_ok = all(
        b * b == fr3.algebra.scalar(Fraction(1, 4)) for b in bivs
    )
    cross = [
        (bivs[i] * bivs[j] + bivs[j] * bivs[i]).scalar_part()
        for i, j in itertools.combinations(range(3), 2)
    ]
    anticommute = all(not c for c in cross)
    report.add(
        "bivector-gram",
        "the three basis bivectors square to 1/4; pairwise symmetrized "
        "products are stated to vanish",
        PASS_CORRECTED if squares_ok and not anticommute else (
            PASS if squares_ok and anticommute else FAIL
        ),
        "each pair shares a null vector: B_i B_j + B_j B_i = -1/2, not 0",
    )

    half_sq = (bivs[0] * Fraction(1, 2)) * (bivs[0] * Fraction(1, 2))
    report.add(
        "pauli-normalization",
        "(1/2 a_i^a_j)^2 compared with the unit square a Pauli vector needs",
        PASS_CORRECTED,
        f"computed ({format_multivector(half_sq)}); square 1 needs the "
        "factor 2 a_i^a_j instead",
    )

    decomposition_ok = True
    corrected_count = 0
    complex_count = 0
    count = 0
    while count < 100:
        coeffs = {}
        for i in (1, 2, 3):
            for j in (1, 2, 3):
                if i != j and rng.random() < 0.8:
                    coeffs[(i, j)] = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        op = spectral.BivectorOperator(fr3, coeffs)
        _, derived = spectral.discriminants(op)
        if spectral.is_zero_scalar(derived):
            continue
        count += 1
        dec = spectral.spectral_decompose(op)
        if dec.discriminant_corrected:
            corrected_count += 1
        p1, p2 = dec.idempotent_1, dec.idempotent_2
        g = op.element()
        if p1.backend == EXACT:
            one = fr3.algebra.scalar(1)
            decomposition_ok = decomposition_ok and p1 + p2 == one
            decomposition_ok = decomposition_ok and (p1 * p2).is_zero() \
                and (p2 * p1).is_zero()
            decomposition_ok = decomposition_ok and p1 * p1 == p1 \
                and p2 * p2 == p2
            decomposition_ok = decomposition_ok and dec.reconstruct() == g
        else:
            complex_count += 1
            one = fr3.algebra.scalar(complex(1))
            decomposition_ok = decomposition_ok and (p1 + p2).isclose(one)
            decomposition_ok = decomposition_ok and (p1 * p2).isclose(
                fr3.algebra.zero("complex")
            )
            decomposition_ok = decomposition_ok and (p1 * p1).isclose(p1)
            decomposition_ok = decomposition_ok and dec.reconstruct().isclose(
                g.to_backend("complex")
            )
    report.add(
        "spectral-idempotents",
        "p1+p2 = 1, p1 p2 = 0, p_i^2 = p_i, G = r- p1 + r+ p2 on 100 "
        "non-degenerate operators",
        PASS_CORRECTED if decomposition_ok else FAIL,
        f"discriminant needs the -2 g_i g_j cross terms (corrected on "
        f"{corrected_count} samples; {complex_count} complexified)",
    )

    mv_a1 = fr2.vectors[0]
    mv_a2 = fr2.vectors[1]
    rep_ok = spectral.rep_g11(mv_a1) == [[Radical(0), Radical(0)],
                                         [Radical(1), Radical(0)]]
    rep_ok = rep_ok and spectral.rep_g11(mv_a2) == [[Radical(0), Radical(1)],
                                                    [Radical(0), Radical(0)]]
    report.add(
        "rep-a1-a2",
        "[a1] and [a2] match the stated spectral-basis matrices",
        _status(rep_ok),
    )

    coords = [Fraction(2), Fraction(-3), Fraction(5)]
    x = frames.vector_from_null_coordinates(fr3, coords)
    m = spectral.rep_g12(x)
    corrected_x = [
        [5j, complex(2)],
        [complex(7), -5j],
    ]
    x_ok = m == corrected_x
    report.add(
        "rep-position-vector",
        "[x] = [[x3 i, x2+x3], [x1+x3, -x3 i]] in null coordinates",
        PASS_CORRECTED if x_ok else FAIL,
        "the stated matrix prints x2-x3 and x1-x3, which contradicts "
        "[a1], [a2] and the standard-coordinate display (s1-s2 = x2+x3)",
    )

    def matmul2(a, b):
        return [
            [a[0][0] * b[0][0] + a[0][1] * b[1][0],
             a[0][0] * b[0][1] + a[0][1] * b[1][1]],
            [a[1][0] * b[0][0] + a[1][1] * b[1][0],
             a[1][0] * b[0][1] + a[1][1] * b[1][1]],
        ]

    g11 = Algebra(1, 1)
    hom_ok = True
    for _ in range(100):
        u = random_multivector(g11, rng, terms=4)
        v = random_multivector(g11, rng, terms=4)
        prod = matmul2(spectral.rep_g11(u), spectral.rep_g11(v))
        target = spectral.rep_g11(u * v)
        hom_ok = hom_ok and all(
            Radical(0) + prod[r][c] == Radical(0) + target[r][c]
            for r in range(2) for c in range(2)
        )
    g12_full = Algebra(1, 2)
    for _ in range(100):
        u = random_multivector(g12_full, rng, terms=5)
        v = random_multivector(g12_full, rng, terms=5)
        prod = matmul2(spectral.rep_g12(u), spectral.rep_g12(v))
        target = spectral.rep_g12(u * v)
        err = max(
            abs(prod[r][c] - target[r][c]) for r in range(2) for c in range(2)
        )
        hom_ok = hom_ok and err <= 1e-10
    report.add(
        "rep-homomorphism",
        "rep(uv) = rep(u) rep(v) on 100 random pairs in G(1,1) and G(1,2)",
        _status(hom_ok),
    )

    faithful_ok = True
    for blade in range(8):
        mv = g12_full.blade(blade, 1)
        reg = spectral.regular_representation(mv)
        recovered = [reg[row][0] for row in range(8)]
        expected = [1.0 if row == blade else 0.0 for row in range(8)]
        faithful_ok = faithful_ok and recovered == expected
    for _ in range(20):
        u = random_multivector(g12_full, rng, terms=5)
        reg = spectral.regular_representation(u)
        faithful_ok = faithful_ok and all(
            abs(reg[row][0] - float(u.coefficient(row))) < 1e-12
            for row in range(8)
        )
    report.add(
        "regular-representation-faithful",
        "left multiplication on the blade basis has trivial kernel "
        "(the first column recovers the element)",
        _status(faithful_ok),
    )

    import numpy as np

    sim_ok = True
    for _ in range(25):
        u = random_multivector(g12_full, rng, terms=5)
        reg = np.array(spectral.regular_representation(u))
        m = spectral.rep_g12(u)
        tr2 = m[0][0] + m[1][1]
        det2 = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        sim_ok = sim_ok and abs(np.trace(reg) - 4 * tr2.real) <= 1e-8
        scale = max(1.0, abs(det2) ** 4)
        sim_ok = sim_ok and abs(np.linalg.det(reg) - abs(det2) ** 4) <= \
            1e-8 * scale
    for _ in range(25):
        u = random_multivector(g11, rng, terms=4)
        reg = np.array(spectral.regular_representation(u))
        m = spectral.rep_g11(u)
        tr2 = float(Radical(0) + m[0][0] + m[1][1])
        det2 = float(Radical(0) + m[0][0] * m[1][1] - m[0][1] * m[1][0])
        sim_ok = sim_ok and abs(np.trace(reg) - 2 * tr2) <= 1e-8
        scale = max(1.0, det2 ** 2)
        sim_ok = sim_ok and abs(np.linalg.det(reg) - det2 ** 2) <= 1e-8 * scale
    report.add(
        "rep-regular-similarity",
        "regular-representation traces and determinants match the 2x2 "
        "reps up to the block multiplicity",
        _status(sim_ok),
    )
    return report


# -- simplex --------------------------------------------------------------------------------


def suite_simplex(n_max: int = 6, seed: int = DEFAULT_SEED,
                  backend: str = EXACT) -> VerificationReport:
    import math

    rng = random.Random(seed)
    report = VerificationReport("simplex", seed)

    content_ok = True
    wedge_ok = True
    checked = 0
    for size in range(2, min(n_max, 6) + 1):
        fr = frames.build_null_frame(size, 1)
        content = simplex.content_null(fr)
        target = simplex.full_wedge(fr) * Fraction(
            1, math.factorial(size - 1)
        )
        content_ok = content_ok and not content.is_zero()
        for _ in range(10):
            weights = [rng.randint(0, 9) for _ in range(size)]
            if not sum(weights):
                weights[0] = 1
            coords = tuple(
                Fraction(w, sum(weights)) for w in weights
            )
            point = simplex.SimplexPoint(fr, coords)
            checked += 1
            wedge_ok = wedge_ok and simplex.content_point_wedge(
                fr, point
            ) == target
    report.add(
        "content-forms",
        "both content expressions agree with the 1/n! normalization",
        _status(content_ok),
    )
    report.add(
        "barycentric-wedge",
        f"x ^ content = (1/n!) full wedge on {checked} barycentric points",
        _status(wedge_ok),
    )

    fr = frames.build_null_frame(3, 1)
    ok = simplex.centroid(fr).norm_squared() == Fraction(1, 3)
    u = simplex.centroid(fr).unit()
    ok = ok and u * u == fr.algebra.scalar(1)
    report.add(
        "centroid-norm",
        "|centroid|^2 = 1/3 for the triangle and the unit squares to 1",
        _status(ok),
    )

    cone_ok = True
    for size in (3, 4):
        fr_c = frames.build_null_frame(size, 1)
        for i in range(1, size + 1):
            v = simplex.vertex(fr_c, i)
            cone_ok = cone_ok and v.is_on_cone()
            sq = v.to_multivector() * v.to_multivector()
            cone_ok = cone_ok and sq.is_zero()
    report.add(
        "vertices-on-cone",
        "frame vertices lie on the light cone (|x|^2 = 0 and x^2 = 0)",
        _status(cone_ok),
    )

    grid_ok = True
    for size in (3, 4):
        fr_g = frames.build_null_frame(size, 1)
        denominator = 6
        for combo in itertools.product(range(denominator + 1), repeat=size - 1):
            if sum(combo) > denominator:
                continue
            coords = tuple(
                Fraction(c, denominator) for c in combo
            ) + (Fraction(denominator - sum(combo), denominator),)
            point = simplex.SimplexPoint(fr_g, coords)
            value = point.norm_squared()
            sign = (value > 0) - (value < 0)
            grid_ok = grid_ok and sign >= 0
            on_cone = value == 0
            boundary_null = sum(1 for c in coords if c) <= 1
            grid_ok = grid_ok and on_cone == boundary_null
    report.add(
        "grid-nonnegative",
        "|x|^2 >= 0 on a rational grid, vanishing exactly at the vertices",
        _status(grid_ok),
    )

    rows_ok = True
    order_ok = True
    closed_ok = True
    for size in (3, 4):
        fr_m = frames.build_null_frame(size, 1)
        for _ in range(10):
            rows = []
            for _ in range(size):
                weights = [rng.randint(0, 6) for _ in range(size)]
                if not sum(weights):
                    weights[0] = 1
                rows.append([Fraction(w, sum(weights)) for w in weights])
            matrix = simplex.SimplicialMatrix(fr_m, rows)
            rows_ok = rows_ok and all(
                sum(row) == 1 and all(v >= 0 for v in row)
                for row in matrix.rows
            )
            order_ok = order_ok and simplex.order(matrix) == linalg.rank(rows)
        closed = simplex.SimplicialMatrix(
            fr_m,
            [
                [Fraction(int(j == i) - int(j == (i + 1) % size))
                 for j in range(size)]
                for i in range(size)
            ],
            barycentric=False,
        )
        closed_ok = closed_ok and simplex.is_closed(closed)
        vertices = simplex.SimplicialMatrix(
            fr_m,
            [[Fraction(int(i == j)) for j in range(size)] for i in range(size)],
        )
        closed_ok = closed_ok and not simplex.is_closed(vertices)
    report.add(
        "simplicial-rows",
        "barycentric rows are nonnegative and sum to 1",
        _status(rows_ok),
    )
    report.add(
        "order-equals-rank",
        "wedge order equals the exact matrix rank",
        _status(order_ok),
    )
    report.add(
        "closed-graphs",
        "difference cycles are closed; the vertex set is not",
        _status(closed_ok),
    )

    swap_ok = True
    fr_s = frames.build_null_frame(3, 1)
    base_rows = [
        [Fraction(1), Fraction(0), Fraction(0)],
        [Fraction(0), Fraction(1), Fraction(0)],
        [Fraction(0), Fraction(0), Fraction(1)],
    ]
    c_base, _ = simplex.content_vertices(simplex.SimplicialMatrix(fr_s, base_rows))
    swapped = [base_rows[1], base_rows[0], base_rows[2]]
    c_swap, _ = simplex.content_vertices(simplex.SimplicialMatrix(fr_s, swapped))
    swap_ok = c_base == -c_swap
    dup, degenerate = simplex.content_vertices(
        simplex.SimplicialMatrix(fr_s, [base_rows[0], base_rows[0], base_rows[2]])
    )
    swap_ok = swap_ok and degenerate and dup.is_zero()
    report.add(
        "content-alternating",
        "vertex swaps flip the content sign; duplicates degenerate to zero",
        _status(swap_ok),
    )

    for size in (3, 4):
        fr_l = frames.build_null_frame(size, 1)
        for line in simplex.simplex_laplacian_report(fr_l):
            report.add(
                f"laplacian-{line.name}-n{size - 1}",
                line.claim,
                line.status,
                line.details,
            )
    return report


# -- atlas ----------------------------------------------------------------------------------


ATLAS_LEVEL_FIXTURES = {
    1: "+-",
    2: "-+-",
    3: "-+-+",
    4: "+-+-+",
    5: "+-+-+-",
    6: "-+-+-+-",
}

PRINTED_SIGN_SEQUENCE = "+,-,-+-,-+-+,+-+-+,-+-+-+"
PRINTED_PRODUCT_SEQUENCE = "--++--"


def suite_atlas(n_max: int = 10, seed: int = DEFAULT_SEED,
                backend: str = EXACT) -> VerificationReport:
    report = VerificationReport("atlas", seed)
    data = atlas_mod.atlas(min(max(n_max, 6), atlas_mod.ATLAS_LIMIT))

    ok = all(
        data["levels"][level] == fixture
        for level, fixture in ATLAS_LEVEL_FIXTURES.items()
    )
    report.add(
        "level-strings",
        "computed pseudoscalar sign strings match the itemized levels 1..6",
        _status(ok),
    )

    computed = data["sign_sequence"].split(",")[:6]
    printed = PRINTED_SIGN_SEQUENCE.split(",")
    agree = [a == b for a, b in zip(computed, printed)]
    report.add(
        "aggregate-sign-sequence",
        "the concatenated sign sequence agrees with the printed aggregate",
        PASS if all(agree) else PASS_CORRECTED,
        "printed item 6 (-+-+-+) contradicts the itemized level-5 list; "
        "computed +-+-+- follows the items",
    )

    ok = data["product_sequence"][:6] == PRINTED_PRODUCT_SEQUENCE
    report.add(
        "product-sequence",
        "per-level products of generator square signs give --,++,--",
        _status(ok),
    )

    classes = atlas_mod.periodicity_classes(min(n_max, 10))
    report.add(
        "eightfold-periodicity",
        "the pseudoscalar square sign depends only on (p-q) mod 8, "
        "exhaustively for p+q <= 10",
        _status(len(classes) == 8),
    )

    pair_note = ", ".join(
        f"level {level}: {'+' if sign > 0 else '-'}"
        for level, sign in sorted(data["pair_products"].items())
    )
    report.add(
        "pair-sign-products",
        "products of generator-pair square signs per level (data only)",
        PASS,
        pair_note,
    )
    return report


# -- dispatch -------------------------------------------------------------------------------


SUITE_FUNCTIONS = {
    "core": suite_core,
    "frame": suite_frame,
    "star": suite_star,
    "calculus": suite_calculus,
    "spectral": suite_spectral,
    "simplex": suite_simplex,
    "atlas": suite_atlas,
}


def run_suite(name: str, n_max: int = DEFAULT_N_MAX, seed: int = DEFAULT_SEED,
              backend: str = EXACT) -> VerificationReport:
    if name == "all":
        reports = [
            SUITE_FUNCTIONS[suite](n_max=n_max, seed=seed, backend=backend)
            for suite in SUITES
        ]
        return merge_reports("all", seed, reports)
    if name not in SUITE_FUNCTIONS:
        raise KeyError(name)
    return SUITE_FUNCTIONS[name](n_max=n_max, seed=seed, backend=backend)
