import numpy as np
import pytest

from ffcs import (
    DecodeStatus,
    EnumerationCapExceeded,
    ModelParams,
    decode_l0,
    dense_gamma,
    enumerate_signals,
    error_events,
    make_field,
    matvec,
    sample_matrix,
    sample_signal,
)


def brute_decode(field, A, y, k_max):
    """Reference decoder: plain python loop over the full candidate list."""
    best_k = None
    sols = []
    for cand in enumerate_signals(A.shape[1], k_max, field.q):
        k = int(np.count_nonzero(cand))
        if best_k is not None and k > best_k:
            break
        if np.array_equal(matvec(field, A, cand), y):
            best_k = k
            sols.append(cand)
    return best_k, sols


def test_zero_measurement_gives_zero_signal():
    f = make_field(4)
    A = np.array([[1, 2, 3], [2, 2, 0]], dtype=np.int16)
    res = decode_l0(f, A, np.zeros(2, dtype=np.int16), k_max=2)
    assert res.status == DecodeStatus.UNIQUE
    assert res.min_sparsity == 0
    assert not res.solutions[0].any()


def test_two_way_tie_is_ambiguous():
    f = make_field(2)
    A = np.array([[1, 1]], dtype=np.int16)
    res = decode_l0(f, A, np.array([1], dtype=np.int16), k_max=1)
    assert res.status == DecodeStatus.AMBIGUOUS
    assert res.min_sparsity == 1
    assert sorted(s.tolist() for s in res.solutions) == [[0, 1], [1, 0]]


def test_unique_recovery_three_bit_instance():
    f = make_field(2)
    A = np.array([[1, 0, 0], [0, 1, 1]], dtype=np.int16)
    x = np.array([1, 0, 0], dtype=np.int16)
    res = decode_l0(f, A, matvec(f, A, x), k_max=1)
    assert res.status == DecodeStatus.UNIQUE
    assert np.array_equal(res.solutions[0], x)


def test_infeasible_measurement():
    f = make_field(2)
    A = np.zeros((1, 3), dtype=np.int16)
    res = decode_l0(f, A, np.array([1], dtype=np.int16), k_max=2)
    assert res.status == DecodeStatus.INFEASIBLE
    assert res.min_sparsity is None
    assert res.solutions == []


@pytest.mark.parametrize("q", [2, 3, 4])
def test_full_rank_square_matrix_always_unique(q):
    # upper triangular with nonzero diagonal: full column rank by
    # construction, so every measurement has a unique preimage
    f = make_field(q)
    n = 4
    rng = np.random.default_rng(q)
    A = np.triu(rng.integers(0, q, size=(n, n))).astype(np.int16)
    np.fill_diagonal(A, rng.integers(1, q, size=n))
    for x in enumerate_signals(n, 2, q):
        res = decode_l0(f, A, matvec(f, A, x), k_max=2)
        assert res.status == DecodeStatus.UNIQUE
        assert np.array_equal(res.solutions[0], x)
        ev = error_events(f, A, x, k_max=2)
        assert not ev.e_error and not ev.e0_error


def test_error_events_on_tied_instance():
    f = make_field(2)
    A = np.array([[1, 1]], dtype=np.int16)
    ev = error_events(f, A, np.array([1, 0], dtype=np.int16), k_max=1)
    assert ev.e_error and ev.e0_error


def test_zero_signal_never_confusable():
    f = make_field(3)
    rng = np.random.default_rng(0)
    for _ in range(10):
        A = rng.integers(0, 3, size=(2, 5)).astype(np.int16)
        ev = error_events(f, A, np.zeros(5, dtype=np.int16), k_max=2)
        assert not ev.e_error


@pytest.mark.parametrize("q,n,k,m", [(2, 6, 2, 3), (3, 5, 2, 3), (4, 4, 2, 2)])
def test_matches_brute_reference_on_random_instances(q, n, k, m):
    f = make_field(q)
    rng = np.random.default_rng(q * 100 + n)
    params = ModelParams(n=n, k=k, m=m, q=q, gamma=dense_gamma(q))
    for _ in range(20):
        A = sample_matrix(params, rng)
        x = sample_signal(params, rng)
        y = matvec(f, A, x)
        res = decode_l0(f, A, y, k_max=k)
        ref_k, ref_sols = brute_decode(f, A.rows, y, k)
        assert res.min_sparsity == ref_k
        assert len(res.solutions) == len(ref_sols)
        for got, want in zip(res.solutions, ref_sols):
            assert np.array_equal(got, want)


@pytest.mark.parametrize("q,n,k,m", [(2, 7, 2, 2), (3, 5, 2, 2), (4, 4, 2, 3)])
def test_e0_implies_e_pointwise(q, n, k, m):
    f = make_field(q)
    rng = np.random.default_rng(q + n + m)
    params = ModelParams(n=n, k=k, m=m, q=q, gamma=dense_gamma(q))
    for _ in range(40):
        A = sample_matrix(params, rng)
        x = sample_signal(params, rng)
        ev = error_events(f, A, x, k_max=k)
        if ev.e0_error:
            assert ev.e_error


def test_decoded_weight_never_exceeds_truth():
    f = make_field(3)
    rng = np.random.default_rng(17)
    params = ModelParams(n=6, k=3, m=2, q=3, gamma=dense_gamma(3))
    for _ in range(30):
        A = sample_matrix(params, rng)
        x = sample_signal(params, rng)
        res = decode_l0(f, A, matvec(f, A, x), k_max=3)
        assert res.min_sparsity is not None
        assert res.min_sparsity <= x.sparsity


def test_decode_is_deterministic():
    f = make_field(4)
    rng = np.random.default_rng(5)
    A = rng.integers(0, 4, size=(2, 5)).astype(np.int16)
    y = np.array([1, 2], dtype=np.int16)
    r1 = decode_l0(f, A, y, k_max=2)
    r2 = decode_l0(f, A, y, k_max=2)
    assert r1.status == r2.status and r1.min_sparsity == r2.min_sparsity
    assert all(np.array_equal(a, b) for a, b in zip(r1.solutions, r2.solutions))


def test_enumeration_cap_is_hard_error():
    f = make_field(4)
    A = np.zeros((2, 40), dtype=np.int16)
    with pytest.raises(EnumerationCapExceeded):
        decode_l0(f, A, np.zeros(2, dtype=np.int16), k_max=10, cap=100)
