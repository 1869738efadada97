import random
from fractions import Fraction

import pytest

from lpgg import calculus, frames
from lpgg.calculus import DiffOperator, PolyField


@pytest.fixture(scope="module")
def fr3():
    return frames.build_null_frame(3, 1)


@pytest.fixture(scope="module")
def fr4():
    return frames.build_null_frame(4, 1)


def test_partial_of_identity_field(fr3):
    x = PolyField.identity(fr3)
    for i in (1, 2, 3):
        assert x.partial(i) == PolyField.constant(fr3, fr3.vector(i))
    with pytest.raises(ValueError):
        x.partial(0)
    with pytest.raises(ValueError):
        x.partial(4)


def test_partial_of_constant(fr3):
    const = PolyField.constant(fr3, fr3.algebra.scalar(5))
    assert const.partial(1) == PolyField(fr3, {})


def test_square_field_is_pairwise_sum(fr3):
    x2 = calculus.square_field(fr3)
    assert x2.is_scalar_valued()
    # x^2 = x1 x2 + x1 x3 + x2 x3
    expected_exponents = {(1, 1, 0), (1, 0, 1), (0, 1, 1)}
    assert set(x2.terms) == expected_exponents
    for mv in x2.terms.values():
        assert mv == fr3.algebra.scalar(1)
    d1 = x2.partial(1)
    assert set(d1.terms) == {(0, 1, 0), (0, 0, 1)}


def test_field_evaluate(fr3):
    x = PolyField.identity(fr3)
    coords = (Fraction(1), Fraction(2), Fraction(-1))
    value = x.evaluate(coords)
    expected = fr3.vector(1) + fr3.vector(2) * 2 - fr3.vector(3)
    assert value == expected


def test_gradient_of_x(fr3, fr4):
    for fr in (fr3, fr4):
        nabla = calculus.make_nabla(fr)
        x = PolyField.identity(fr)
        assert nabla.apply(x) == PolyField.constant(
            fr, fr.algebra.scalar(fr.size)
        )


def test_gradient_of_x_squared(fr3):
    nabla = calculus.make_nabla(fr3)
    assert nabla.apply(calculus.square_field(fr3)) == \
        PolyField.identity(fr3).scale(2)


def test_null_gradient_annihilates_x(fr3):
    null = calculus.make_null_nabla(fr3)
    assert null.apply(PolyField.identity(fr3)) == PolyField(fr3, {})


def test_null_laplacian_of_x_squared(fr4):
    null = calculus.make_null_nabla(fr4)
    value = null.compose(null).apply(calculus.square_field(fr4))
    assert value == PolyField.constant(fr4, fr4.algebra.scalar(6))


def test_compose_order_matters(fr3):
    a1 = fr3.vector(1)
    a2 = fr3.vector(2)
    mi = (1, 0, 0)
    op1 = DiffOperator(fr3, [(a1, mi)])
    op2 = DiffOperator(fr3, [(a2, mi)])
    left = op1.compose(op2)
    right = op2.compose(op1)
    ((_, d_left),) = [(k, v) for k, v in left.terms.items()]
    ((_, d_right),) = [(k, v) for k, v in right.terms.items()]
    assert d_left == a1 * a2
    assert d_right == a2 * a1
    assert d_left != d_right


def test_operator_identities(fr3, fr4):
    for fr in (fr3, fr4):
        n = Fraction(fr.n)
        nabla = calculus.make_nabla(fr)
        dual = calculus.make_dual_nabla(fr)
        null = calculus.make_null_nabla(fr)
        flat = calculus.make_flat_partial(fr)
        big_a = frames.k_sum(fr, fr.size)

        assert dual + null == flat.left_multiply(big_a)
        assert nabla == (flat.left_multiply(big_a) - null.scale(n)).scale(2 / n)
        assert nabla == (dual - null.scale(n - 1)).scale(2 / n)
        lhs = nabla.dot_contract(big_a)
        rhs = flat.scale(n + 1) - null.dot_contract(big_a).scale(2)
        assert lhs == rhs
        assert calculus.operators_equal_on_monomials(lhs, rhs, 3)


def test_identity_report_statuses(fr3):
    statuses = {
        check.name: check.status for check in calculus.identity_report(fr3)
    }
    assert statuses["gradient-via-flat-sum"] == "pass"
    assert statuses["gradient-via-dual"] == "pass"
    assert statuses["A-dot-gradient"] == "pass"
    assert statuses["dual-plus-null"] == "pass"
    assert statuses["A-dot-dual-plus-null"] == "pass"
    assert statuses["null-laplacian"] == "pass"
    assert statuses["dual-laplacian"] == "pass-corrected"
    assert statuses["dual-dot-null"] == "pass-corrected"
    assert statuses["vector-dot-full-sum"] == "pass-corrected"
    assert statuses["dual-dot-dual"] == "pass-corrected"


def test_identity_report_corrected_coefficients(fr4):
    checks = {c.name: c for c in calculus.identity_report(fr4)}
    n = fr4.n
    dual_lap = checks["dual-laplacian"]
    assert dual_lap.derived_coefficients["c_sq"] == Fraction(n * (n - 1), 2)
    assert dual_lap.derived_coefficients["c_cross"] == n * n - n + 1
    dual_dot = checks["dual-dot-dual"]
    assert dual_dot.derived_coefficients["value"] == Fraction(n * n - n + 1, 2)
    assert dual_dot.claimed_coefficients["value"] == n * n - n + 1


def test_gradient_laplacian_exact_at_n2(fr3):
    checks = {c.name: c for c in calculus.identity_report(fr3)}
    assert checks["gradient-laplacian"].status == "pass"
    fr4 = frames.build_null_frame(4, 1)
    checks4 = {c.name: c for c in calculus.identity_report(fr4)}
    assert checks4["gradient-laplacian"].status == "pass-corrected"


def test_dual_sum_oracle(fr4):
    diag, off = calculus.dual_sum_dot_oracle(fr4)
    n = fr4.n
    assert diag == Fraction(n * (n - 1), 2)
    assert off == Fraction(n * n - n + 1, 2)


def test_mixed_partials_commute(fr3):
    rng = random.Random(37)
    for _ in range(10):
        exponents = tuple(rng.randint(0, 3) for _ in range(3))
        f = PolyField.monomial(fr3, exponents)
        assert f.partial(1).partial(2) == f.partial(2).partial(1)


def test_scalar_valued_laplacians(fr3):
    dual = calculus.make_dual_nabla(fr3)
    null = calculus.make_null_nabla(fr3)
    for op in (dual.compose(dual), null.compose(null)):
        for f in calculus.monomial_fields(fr3, 2):
            assert op.apply(f).is_scalar_valued()


def test_finite_differences(fr3):
    point = (Fraction(1, 3), Fraction(1, 3), Fraction(1, 3))
    report = calculus.finite_difference_check(fr3, "abs_x", point)
    assert report.within(1e-6)
    for tag in ("x", "x2", "unit_x"):
        report = calculus.finite_difference_check(fr3, tag, (0.5, 0.3, 0.2))
        assert report.within(1e-6), tag


def test_finite_difference_guards(fr3):
    with pytest.raises(ValueError):
        calculus.finite_difference_check(fr3, "abs_x", (1, 0, 0))
    with pytest.raises(ValueError):
        calculus.finite_difference_check(fr3, "x2", (0.5, 0.3, 0.2),
                                         step=1e-9)
    with pytest.raises(ValueError):
        calculus.finite_difference_check(fr3, "nope", (0.5, 0.3, 0.2))
