"""Empirical check of the analytic sandwich on desk-scale instances.

For a sweep of measurement counts, compares the observed error rates
(with Wilson intervals) against the union bound from above and the
converse bound from below, and runs the equal-weight nullity check.
"""

from ffcs import ModelParams, dense_gamma, equal_weight_nullity_test, make_field, run_trials

print("n=8, k=2, q=2, dense matrices, 10k trials per point")
print(f"{'m':>3} {'e rate':>8} {'95% CI':>19} {'union bound':>12} {'converse':>9}")
for m in range(1, 9):
    params = ModelParams(n=8, k=2, m=m, q=2, gamma=dense_gamma(2))
    rep = run_trials(params, 10_000, seed=11)
    ci = f"[{rep.e_ci_low:.4f}, {rep.e_ci_high:.4f}]"
    print(
        f"{m:>3} {rep.e_rate:>8.4f} {ci:>19} {rep.union_bound_value:>12.4f} {rep.fano_value:>9.4f}"
    )

print("\nsame weight, same annihilation probability (q=4, gamma=0.3, weight 3, m=2):")
rep = equal_weight_nullity_test(make_field(4), n=8, m=2, gamma=0.3, h=3, trials=30_000, seed=6)
print(f"  vector 1 rate: {rep.rate_1:.4f}   vector 2 rate: {rep.rate_2:.4f}   analytic: {rep.analytic:.4f}")
print(f"  rates consistent: {rep.rates_consistent}   match analytic: {rep.matches_analytic}")
