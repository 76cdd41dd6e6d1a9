import math

import numpy as np
import pytest

from ffcs import (
    EnumerationCapExceeded,
    ModelParams,
    candidate_matrix,
    dense_gamma,
    equal_weight_nullity_test,
    error_events,
    convolution_oracle,
    fano_lower_bound,
    make_field,
    run_trials,
)
from ffcs.montecarlo import _sample_trials


class TestReproducibility:
    def test_same_seed_same_counts(self):
        params = ModelParams(n=6, k=2, m=3, q=2, gamma=0.5)
        r1 = run_trials(params, 500, seed=11)
        r2 = run_trials(params, 500, seed=11)
        assert (r1.e0_errors, r1.e_errors) == (r2.e0_errors, r2.e_errors)

    def test_different_seed_differs(self):
        params = ModelParams(n=6, k=2, m=3, q=2, gamma=0.5)
        r1 = run_trials(params, 500, seed=1)
        r2 = run_trials(params, 500, seed=2)
        assert (r1.e0_errors, r1.e_errors) != (r2.e0_errors, r2.e_errors)


class TestFlagCorrectness:
    @pytest.mark.parametrize("q,gamma", [(2, 0.5), (3, 0.4), (4, 0.75)])
    def test_batch_flags_match_reference_events(self, q, gamma):
        # replay each trial's substream and re-evaluate through the
        # exhaustive decoder route
        params = ModelParams(n=5, k=2, m=3, q=q, gamma=gamma)
        trials, seed = 60, 123
        report = run_trials(params, trials, seed)
        field = make_field(q)
        cands, _ = candidate_matrix(params.n, params.k, params.q)
        mats, idx = _sample_trials(params, trials, seed, cands.shape[0])
        e0 = e = 0
        for i in range(trials):
            ev = error_events(field, mats[i], cands[idx[i]], k_max=params.k)
            e0 += ev.e0_error
            e += ev.e_error
        assert report.e0_errors == e0
        assert report.e_errors == e

    def test_inclusion_and_counts(self):
        params = ModelParams(n=8, k=2, m=4, q=2, gamma=0.5)
        rep = run_trials(params, 2000, seed=3)
        assert rep.e0_errors <= rep.e_errors <= rep.trials
        assert rep.e0_rate == rep.e0_errors / rep.trials
        assert rep.e_ci_low <= rep.e_rate <= rep.e_ci_high

    def test_zero_error_run_reports_one_sided_interval(self):
        # square dense system at tiny sparsity: errors essentially never
        params = ModelParams(n=6, k=1, m=12, q=4, gamma=dense_gamma(4))
        rep = run_trials(params, 300, seed=5)
        assert rep.e_errors == 0
        assert rep.e_ci_low == 0.0
        assert rep.e_ci_high > 0.0


class TestSandwich:
    def test_rate_below_union_bound(self):
        params = ModelParams(n=8, k=2, m=8, q=2, gamma=0.5)
        rep = run_trials(params, 10_000, seed=7)
        assert rep.e_ci_low <= rep.union_bound_value

    def test_rate_above_fano_bound(self):
        params = ModelParams(n=6, k=2, m=1, q=2, gamma=0.5)
        rep = run_trials(params, 10_000, seed=7)
        assert rep.e0_ci_high >= rep.fano_value
        assert rep.fano_value == fano_lower_bound(6, 2, 2, 1)

    def test_report_carries_analytic_references(self):
        params = ModelParams(n=6, k=1, m=2, q=3, gamma=0.4)
        rep = run_trials(params, 100, seed=0)
        assert rep.union_bound_value <= 1.0
        assert math.isfinite(rep.union_bound_log) or rep.union_bound_log == float("-inf")
        assert 0.0 <= rep.fano_value <= 1.0


class TestNullity:
    def test_dense_matches_uniform_power(self):
        f = make_field(3)
        rep = equal_weight_nullity_test(f, n=8, m=2, gamma=dense_gamma(3), h=3, trials=20_000, seed=2)
        assert rep.rates_consistent
        assert rep.matches_analytic
        assert math.isclose(rep.analytic, (1 / 3) ** 2, rel_tol=1e-12)

    def test_forced_ones_never_annihilate(self):
        f = make_field(2)
        rep = equal_weight_nullity_test(f, n=4, m=1, gamma=1.0, h=1, trials=2000, seed=9)
        assert rep.hits_1 == 0 and rep.hits_2 == 0
        assert rep.analytic == 0.0

    def test_sparse_matches_convolution_power(self):
        f = make_field(4)
        rep = equal_weight_nullity_test(f, n=6, m=2, gamma=0.3, h=3, trials=40_000, seed=23)
        expect = convolution_oracle(f, 0.3, 3).linear ** 2
        assert math.isclose(rep.analytic, expect, rel_tol=1e-10)
        assert rep.matches_analytic
        assert rep.rates_consistent

    def test_full_weight_needs_larger_field(self):
        with pytest.raises(ValueError):
            equal_weight_nullity_test(make_field(2), n=3, m=1, gamma=0.5, h=3, trials=10, seed=0)


def test_cap_propagates():
    params = ModelParams(n=40, k=10, m=4, q=4, gamma=0.5)
    with pytest.raises(EnumerationCapExceeded):
        run_trials(params, 10, seed=0, enumeration_cap=10_000)
