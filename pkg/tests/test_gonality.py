import pytest
from hypothesis import given, settings, strategies as st

from k3gonal.brillnoether import necessary_condition
from k3gonal.gonality import (
    Decomposition,
    GonalityCase,
    admissible,
    decompose,
    delta0,
    delta0_bruteforce,
    expected_dims,
    is_optimal,
)

GRID = [(p, k) for k in range(2, 7) for p in range(2, 61)]


def test_admissible_examples():
    assert admissible(8, 2, 4)
    assert not admissible(8, 2, 3)
    # alpha = 0 regime: every delta with g <= 2(k-1)-1 passes
    for k in range(2, 7):
        for p in range(2, 30):
            for delta in range(0, p + 1):
                if p - delta <= 2 * (k - 1) - 1:
                    assert admissible(p, k, delta)


def test_admissible_matches_general_condition():
    for p, k in GRID[:120]:
        for delta in range(0, p + 1):
            assert admissible(p, k, delta) == necessary_condition(p, delta, 1, k).satisfied


def test_decompose_examples():
    assert decompose(8, 2) == Decomposition(2, 0, 2)
    assert decompose(9, 4) == Decomposition(1, 1, 1)
    assert decompose(12, 3) == Decomposition(2, 0, 0)


def test_decompose_rejects_small_p():
    with pytest.raises(ValueError):
        decompose(3, 4)  # p < 2(k-1)


@given(p=st.integers(2, 500), k=st.integers(2, 12))
@settings(max_examples=200, deadline=None)
def test_decomposition_roundtrip(p, k):
    if p < 2 * (k - 1):
        return
    dec = decompose(p, k)
    assert (k - 1) * dec.m * (dec.m + 1) + dec.t * (dec.m + 1) + dec.lam == p
    assert 0 <= dec.t < 2 * (k - 1)
    assert 0 <= dec.lam <= dec.m
    assert dec.m >= 1
    # maximality of m
    assert (k - 1) * (dec.m + 1) * (dec.m + 2) > p


def test_delta0_examples():
    assert delta0(8, 2) == 4
    assert delta0(12, 3) == 4  # p = s(s+1)(k-1) with s=2: p - 2s(k-1)
    assert delta0(10, 2) == 5  # p = n^2(k-1)+1 with n=3: (n-1)^2(k-1)+1
    assert delta0(2, 2) == 0
    assert delta0(9, 4) == 2


def test_delta0_bruteforce_examples():
    assert delta0_bruteforce(8, 2) == 4
    assert delta0_bruteforce(2, 2) == 0
    assert delta0_bruteforce(9, 4) == 2


def test_delta0_matches_bruteforce_on_grid():
    for p, k in GRID:
        assert delta0(p, k) == delta0_bruteforce(p, k)


def test_genus_at_minimum():
    for p, k in GRID:
        if p > 2 * (k - 1):
            dec = decompose(p, k)
            assert p - delta0(p, k) == 2 * dec.m * (k - 1) + dec.t


def test_expected_dims_examples():
    assert expected_dims(8, 2, 4) == (2, 0)
    assert expected_dims(9, 4, 2) == (6, 0)
    for p in range(2, 12):
        for k in range(2, 6):
            assert expected_dims(p, k, p) == (0, 2 * (k - 1))


def test_expected_dims_rejects_inadmissible():
    with pytest.raises(ValueError):
        expected_dims(8, 2, 3)


def test_is_optimal_examples():
    assert is_optimal(8, 2, 4)
    assert not is_optimal(8, 2, 5)
    assert is_optimal(9, 4, 2)


def test_optimality_equivalence_on_grid():
    for p, k in GRID:
        d0 = delta0(p, k)
        for delta in range(0, p + 1):
            assert is_optimal(p, k, delta) == (delta == d0)


def test_beta_range_on_grid():
    for p, k in GRID:
        for delta in range(0, p + 1):
            case = GonalityCase(p, k, delta)
            assert -(k - 1) < case.beta <= k - 1
            assert case.g + case.delta == p


def test_case_rejects_bad_domain():
    with pytest.raises(ValueError):
        GonalityCase(1, 2, 0)
    with pytest.raises(ValueError):
        GonalityCase(5, 1, 0)
    with pytest.raises(ValueError):
        GonalityCase(5, 2, 6)
