import pytest
from hypothesis import given, settings, strategies as st

from k3gonal.chains import (
    ChainPartition,
    SymbolicChainCurve,
    construct_minimal,
    enumerate_partitions,
    increment,
    stable_model,
    validate,
    witness,
)
from k3gonal.gonality import delta0


def part(p, k, mult):
    return ChainPartition(p, k, mult)


def test_validate_examples():
    assert validate(part(8, 2, {1: 2, 2: 1, 4: 1}))
    assert not validate(part(8, 2, {1: 3, 2: 1, 3: 1}))  # alpha_1 > 2(k-1)
    for p in range(1, 10):
        assert validate(part(p, 2, {p: 1}))


def test_partition_bookkeeping():
    q = part(8, 2, {1: 2, 2: 1, 4: 1})
    assert q.g == 4 and q.delta == 4 and q.weight() == 8
    assert q.g + q.delta == q.p


def test_partition_rejects_bad_indices():
    with pytest.raises(ValueError):
        part(4, 2, {5: 1})
    with pytest.raises(ValueError):
        part(4, 2, {0: 1})
    with pytest.raises(ValueError):
        part(4, 2, {2: -1})


def test_construct_minimal_examples():
    assert construct_minimal(8, 2).parts == ((1, 2), (2, 1), (4, 1))
    assert construct_minimal(12, 3).parts == ((1, 4), (2, 4))
    assert construct_minimal(9, 4).parts == ((1, 6), (3, 1))
    assert construct_minimal(8, 2).delta == 4
    assert construct_minimal(12, 3).delta == 4
    assert construct_minimal(9, 4).delta == 2


def test_construct_minimal_small_p_regime():
    q = construct_minimal(3, 4)  # p < 2(k-1)
    assert q.parts == ((1, 3),) and q.delta == 0


def test_construct_minimal_matches_delta0():
    for k in range(2, 7):
        for p in range(3, 41):
            q = construct_minimal(p, k)
            assert validate(q)
            assert q.delta == delta0(p, k)


def test_increment_examples():
    q = increment(part(8, 2, {1: 2, 2: 1, 4: 1}))
    assert q.parts == ((1, 2), (6, 1)) and q.delta == 5
    q = increment(part(8, 2, {1: 2, 6: 1}))
    assert q.parts == ((1, 1), (7, 1)) and q.delta == 6
    q = increment(part(4, 3, {1: 4}))  # coinciding indices
    assert q.parts == ((1, 2), (2, 1)) and q.delta == 1


def test_increment_rejects_maximal():
    with pytest.raises(ValueError):
        increment(part(5, 2, {5: 1}))


def test_increment_rejects_invalid():
    with pytest.raises(ValueError):
        increment(part(8, 2, {1: 8}))


@given(
    p=st.integers(3, 30),
    k=st.integers(2, 6),
    data=st.data(),
)
@settings(max_examples=120, deadline=None)
def test_increment_steps_delta_by_one(p, k, data):
    d0 = delta0(p, k)
    if d0 > p - 1:
        return
    delta = data.draw(st.integers(d0, p - 1))
    q = witness(p, k, delta)
    if q.delta < p - 1:
        nxt = increment(q)
        assert validate(nxt)
        assert nxt.delta == q.delta + 1
        assert nxt.weight() == p


def test_witness_examples():
    assert witness(8, 2, 5).delta == 5
    assert witness(8, 2, 4) == construct_minimal(8, 2)
    with pytest.raises(ValueError, match="inadmissible"):
        witness(8, 2, 3)
    with pytest.raises(ValueError):
        witness(8, 2, 8)


def test_enumerate_examples():
    parts4 = {q.parts for q in enumerate_partitions(4, 2)}
    assert parts4 == {
        ((4, 1),),
        ((1, 1), (3, 1)),
        ((2, 2),),
        ((1, 2), (2, 1)),
    }
    assert ((1, 4),) not in parts4
    assert [q.parts for q in enumerate_partitions(1, 3)] == [((1, 1),)]
    assert {q.parts for q in enumerate_partitions(3, 2)} == {
        ((1, 1), (2, 1)),
        ((3, 1),),
    }


def test_enumerate_order_is_stable():
    order = [q.parts for q in enumerate_partitions(4, 2)]
    assert order == [
        ((4, 1),),
        ((1, 1), (3, 1)),
        ((2, 2),),
        ((1, 2), (2, 1)),
    ]


def test_enumerate_cap(monkeypatch):
    with pytest.raises(ValueError, match="K3GONAL_MAX_P"):
        enumerate_partitions(61, 2)
    assert enumerate_partitions(61, 2, max_p=61)
    monkeypatch.setenv("K3GONAL_MAX_P", "70")
    assert enumerate_partitions(61, 2)


def test_enumerate_invariants_small_grid():
    for k in range(2, 5):
        for p in range(3, 21):
            parts = enumerate_partitions(p, k)
            deltas = set()
            for q in parts:
                assert validate(q)
                assert q.g + q.delta == p
                deltas.add(q.delta)
            assert min(deltas) == delta0(p, k)
            # every delta in [delta0, p-1] is attained, and witnesses agree
            for delta in range(delta0(p, k), p):
                assert delta in deltas
                w = witness(p, k, delta)
                assert validate(w) and w.delta == delta


def test_symbolic_curve_counts():
    curve = SymbolicChainCurve(part(8, 2, {1: 2, 2: 1, 4: 1}))
    assert curve.ruling2_lines == 8
    assert curve.marked_nodes == 4
    assert curve.nodes_on_gamma2 == 8
    assert curve.e_points == 16
    assert curve.line_count == 12  # 2p - g
    assert curve.stable_model_nodes == 4


def test_symbolic_curve_rejects_invalid():
    with pytest.raises(ValueError):
        SymbolicChainCurve(part(8, 2, {1: 2}))


def test_stable_model_examples():
    assert stable_model(SymbolicChainCurve(part(8, 2, {1: 2, 2: 1, 4: 1}))) == (4, 4)
    assert stable_model(SymbolicChainCurve(part(2, 2, {1: 2}))) == (2, 2)
    assert stable_model(SymbolicChainCurve(part(7, 3, {7: 1}))) == (1, 1)


def test_bookkeeping_identities_on_witnesses():
    for k in range(2, 6):
        for p in range(3, 25):
            for delta in range(delta0(p, k), p):
                curve = SymbolicChainCurve(witness(p, k, delta))
                g = curve.partition.g
                assert curve.marked_nodes + g == curve.ruling2_lines == p
                assert curve.line_count == 2 * p - g


def test_serialization_payload():
    q = part(8, 2, {4: 1, 1: 2, 2: 1})
    assert q.to_payload() == {
        "p": 8,
        "k": 2,
        "delta": 4,
        "g": 4,
        "parts": [[1, 2], [2, 1], [4, 1]],
    }
