import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from k3gonal.pencil import (
    DIAGONAL,
    DIAGONAL_POINT,
    INFINITY,
    BinaryForm,
    Pencil,
    SymPlaneCurve,
    conic_intersection,
    contains_divisor,
    diagonal_restriction,
    distinct_root_count,
    divisor_point,
    is_squarefree,
    proportional,
    random_coprime_pencil,
    random_pencil,
    random_smooth_conic,
    simple_ramification,
    verification_suite,
    wedge_curve,
    wronskian,
)

# frequently used forms: x1^k and x0^k at bound k
def monomial_pencil(k):
    top = BinaryForm.from_affine([0] * k + [1], k)
    bottom = BinaryForm.from_affine([1], k)
    return Pencil(top, bottom)


small = st.builds(
    Fraction, st.integers(-6, 6), st.integers(1, 4)
)


def form_strategy(k):
    return st.lists(small, min_size=k + 1, max_size=k + 1).filter(any).map(
        lambda cs: BinaryForm(k, cs)
    )


def test_binary_form_serialization_roundtrip():
    f = BinaryForm(3, (Fraction(1, 2), -2, 0, Fraction(7, 3)))
    payload = f.to_payload()
    assert payload == {
        "bound": 3,
        "coeffs": [["1", "2"], ["-2", "1"], ["0", "1"], ["7", "3"]],
    }
    assert BinaryForm.from_payload(payload) == f


def test_binary_form_bookkeeping():
    f = BinaryForm(3, (1, 2, 0, 0))
    assert f.affine_degree == 1
    assert f.infinity_multiplicity == 2
    assert f.eval_proj(1, 2) == 5
    assert f.eval_proj(0, 1) == 0
    with pytest.raises(ValueError):
        BinaryForm(2, (1, 2))


def test_pencil_rejects_degenerate():
    f = BinaryForm(2, (1, 2, 1))
    with pytest.raises(ValueError, match="degenerate"):
        Pencil(f, BinaryForm(2, (2, 4, 2)))
    with pytest.raises(ValueError):
        Pencil(f, BinaryForm(3, (1, 0, 0, 0)))


def test_wedge_curve_k2():
    curve = wedge_curve(monomial_pencil(2))
    assert curve.degree == 1
    assert curve.coeffs == (((0, 1, 0), Fraction(1)),)  # the line e1 = 0


def test_wedge_curve_k3():
    curve = wedge_curve(monomial_pencil(3))
    assert curve.degree == 2
    # (x^3 - y^3)/(x - y) = e1^2 - e0 e2
    assert curve.coefficient(0, 2, 0) == 1
    assert curve.coefficient(1, 0, 1) == -1


def test_wedge_curve_k3_generic():
    f = BinaryForm(3, (1, 1, 0, 1))  # 1 + z + z^3
    g = BinaryForm(3, (0, 1, 1, 0))  # z + z^2
    curve = wedge_curve(Pencil(f, g))
    assert curve.degree == 2 and not curve.is_zero
    # oracle: B(x, y) (x - y) = f(x) g(y) - f(y) g(x) at sample points
    for x, y in [(2, 3), (Fraction(1, 2), -1), (5, Fraction(-2, 3))]:
        lhs = curve.evaluate(1, x + y, x * y) * (x - y)
        rhs = f.eval_proj(1, x) * g.eval_proj(1, y) - f.eval_proj(1, y) * g.eval_proj(
            1, x
        )
        assert lhs == rhs


def test_wedge_division_identity_exact():
    # B(x, y) (x - y) == f(x) g(y) - f(y) g(x) at many rational points
    rng = random.Random("wedge-oracle")
    for k in range(2, 6):
        pencil = random_pencil(k, rng)
        curve = wedge_curve(pencil)
        for _ in range(25):
            x = Fraction(rng.randint(-9, 9), rng.randint(1, 3))
            y = Fraction(rng.randint(-9, 9), rng.randint(1, 3))
            lhs = curve.evaluate(1, x + y, x * y) * (x - y)
            rhs = pencil.f.eval_proj(1, x) * pencil.g.eval_proj(1, y) - pencil.f.eval_proj(
                1, y
            ) * pencil.g.eval_proj(1, x)
            assert lhs == rhs


def test_wronskian_examples():
    w = wronskian(monomial_pencil(2))
    assert w.bound == 2
    assert list(w.coeffs) == [0, -2, 0]  # -2 x0 x1: roots 0 and infinity
    assert distinct_root_count(w) == 2

    w3 = wronskian(monomial_pencil(3))
    assert list(w3.coeffs) == [0, 0, -3, 0, 0]
    assert not is_squarefree(w3)

    f = BinaryForm(3, (1, 1, 0, 1))
    g = BinaryForm(3, (0, 1, 1, 0))
    w = wronskian(Pencil(f, g))
    assert list(w.coeffs) == [1, 2, 1, -2, -1]  # -(z^4 + 2z^3 - z^2 - 2z - 1)


def test_diagonal_restriction_examples():
    line = wedge_curve(monomial_pencil(2))
    d = diagonal_restriction(line, 2)
    assert list(d.coeffs) == [0, 2, 0]  # 2 x0 x1, proportional to the Wronskian
    assert proportional(d, wronskian(monomial_pencil(2)))

    conic = wedge_curve(monomial_pencil(3))
    d3 = diagonal_restriction(conic, 3)
    assert proportional(d3, wronskian(monomial_pencil(3)))

    zero = SymPlaneCurve(1, {})
    assert diagonal_restriction(zero, 2).is_zero


def test_simple_ramification_examples():
    assert simple_ramification(monomial_pencil(2))
    assert not simple_ramification(monomial_pencil(3))
    f = BinaryForm(3, (0, -1, 0, 1))  # z^3 - z
    g = BinaryForm(3, (0, 0, 1, 0))  # z^2
    assert not simple_ramification(Pencil(f, g))  # W = -z^2 (z^2 + 1)


def test_contains_divisor_examples():
    pencil = monomial_pencil(2)
    assert contains_divisor(pencil, 1, -1)
    assert not contains_divisor(pencil, 1, 2)
    # a Wronskian root paired with itself is trivially contained
    assert contains_divisor(pencil, 0, 0)
    assert contains_divisor(pencil, INFINITY, INFINITY)
    # no member of <x1^2, x0^2> vanishes on {0, infinity}
    assert not contains_divisor(pencil, 0, INFINITY)


def test_contains_divisor_at_infinity():
    # pencil of x1^2 and x0 x1 contains the divisor {0, infinity}
    pencil = Pencil(BinaryForm(2, (0, 0, 1)), BinaryForm(2, (0, 1, 0)))
    assert contains_divisor(pencil, 0, INFINITY)
    assert divisor_point(2, INFINITY) == (0, 1, 2)


def test_membership_matches_curve_evaluation():
    rng = random.Random("membership")
    for k in range(2, 6):
        pencil = random_pencil(k, rng)
        curve = wedge_curve(pencil)
        for _ in range(120):
            x = Fraction(rng.randint(-10, 10), rng.randint(1, 4))
            y = Fraction(rng.randint(-10, 10), rng.randint(1, 4))
            if x == y:
                continue
            on_curve = curve.evaluate(1, x + y, x * y) == 0
            assert on_curve == contains_divisor(pencil, x, y)


def test_diagonal_points_are_ramification_points():
    # {x0, x0} lies on the wedge curve iff x0 is a Wronskian root
    rng = random.Random("members")
    for k in (2, 3, 4):
        pencil = random_coprime_pencil(k, rng)
        curve = wedge_curve(pencil)
        w = wronskian(pencil)
        for x0 in (Fraction(1), Fraction(-2), Fraction(3, 2), Fraction(0)):
            diag_val = curve.evaluate(1, 2 * x0, x0 * x0)
            assert (diag_val == 0) == (w.eval_proj(1, x0) == 0)


def test_conic_intersection_examples():
    line = wedge_curve(monomial_pencil(2))
    assert conic_intersection(line, DIAGONAL, DIAGONAL_POINT) == (2, 2)
    conic3 = wedge_curve(monomial_pencil(3))
    total, distinct = conic_intersection(conic3, DIAGONAL, DIAGONAL_POINT)
    assert total == 4 and distinct == 2
    # Bezout against the diagonal at several degrees
    rng = random.Random("bezout-diagonal")
    for k in range(2, 7):
        curve = wedge_curve(random_coprime_pencil(k, rng))
        total, _ = conic_intersection(curve, DIAGONAL, DIAGONAL_POINT)
        assert total == 2 * (k - 1)


def test_conic_intersection_errors():
    line = wedge_curve(monomial_pencil(2))
    singular = SymPlaneCurve(2, {(0, 2, 0): 1})  # double line e1^2
    with pytest.raises(ValueError, match="singular"):
        conic_intersection(line, singular, (1, 0, 0))
    with pytest.raises(ValueError, match="not lie"):
        conic_intersection(line, DIAGONAL, (1, 1, 1))
    # the diagonal contains the diagonal
    with pytest.raises(ValueError, match="contains"):
        conic_intersection(DIAGONAL, DIAGONAL, (1, 0, 0))


def test_diagonal_intersection_counts_match_wronskian():
    # two routes to the ramification divisor: pulling the wedge curve back
    # through the conic parametrization of the diagonal, and gcd-counting the
    # Wronskian's distinct roots directly
    rng = random.Random("dual-route")
    for k in range(2, 7):
        for _ in range(8):
            pencil = random_coprime_pencil(k, rng)
            curve = wedge_curve(pencil)
            total, distinct = conic_intersection(curve, DIAGONAL, DIAGONAL_POINT)
            w = wronskian(pencil)
            assert total == 2 * (k - 1)
            assert distinct == distinct_root_count(w)
            assert (distinct == total) == simple_ramification(pencil)


def test_conic_intersection_bezout_on_samples():
    rng = random.Random("bezout")
    for k in range(2, 7):
        pencil = random_coprime_pencil(k, rng)
        curve = wedge_curve(pencil)
        conic, point = random_smooth_conic(rng)
        total, distinct = conic_intersection(curve, conic, point)
        assert total == 2 * (k - 1)
        assert 1 <= distinct <= total


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_diagonal_identity_hypothesis(data):
    k = data.draw(st.integers(2, 5))
    f = data.draw(form_strategy(k))
    g = data.draw(form_strategy(k))
    if proportional(f, g):
        return
    pencil = Pencil(f, g)
    assert proportional(
        diagonal_restriction(wedge_curve(pencil), k), wronskian(pencil)
    )


def test_gl2_covariance_of_wronskian():
    rng = random.Random("mobius")
    mats = [(1, 1, 0, 1), (0, 1, 1, 0), (2, 1, 1, 1), (1, -3, 2, 5)]
    for k in range(2, 6):
        for mat in mats:
            pencil = random_pencil(k, rng)
            transported = wronskian(pencil).substitute(*mat)
            transformed = wronskian(pencil.substitute(*mat))
            assert proportional(transported, transformed)


def test_substitute_rejects_singular_matrix():
    f = BinaryForm(2, (1, 0, 1))
    with pytest.raises(ValueError):
        f.substitute(1, 2, 2, 4)


def test_varying_pencil_moves_intersection_points():
    # weak proxy for the no-fixed-point statement: three sampled pencils give
    # pairwise distinct diagonal intersection divisors
    rng = random.Random("variation")
    k = 4
    pulls = []
    for _ in range(3):
        pencil = random_coprime_pencil(k, rng)
        pulls.append(diagonal_restriction(wedge_curve(pencil), k))
    for i in range(3):
        for j in range(i + 1, 3):
            assert not proportional(pulls[i], pulls[j])


def test_verification_suite_small():
    result = verification_suite(3, samples=25, seed=11)
    assert result["failures"] == []
    assert result["transversal_rate"] >= Fraction(95, 100)
    assert result["seed"] == 11


def test_verification_suite_deterministic():
    a = verification_suite(4, samples=10, seed=3)
    b = verification_suite(4, samples=10, seed=3)
    assert a == b
