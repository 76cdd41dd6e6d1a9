"""Random ensembles and the measurement map.

Draws sparse signals uniformly from the signal set L, draws sensing
matrices from the gamma-sparse entry law, measures, and shows the
serialization round trip used by the simulate --dump pipeline.
"""

import json
from collections import Counter

import numpy as np

from ffcs import (
    ModelParams,
    dense_gamma,
    make_field,
    matrix_from_json,
    matrix_to_json,
    matvec,
    sample_matrix,
    sample_signal,
    signal_set_size,
    sparse_gamma,
)

rng = np.random.default_rng(2024)

# the signal set: all vectors of weight <= k
sizes = signal_set_size(6, 2, 4)
print("signal set sizes for (n=6, k=2, q=4):", sizes.per_sparsity, "total", sizes.total)

params = ModelParams(n=6, k=2, m=4, q=4, gamma=dense_gamma(4))
field = make_field(4)

print("\nuniformity of the sparsity level over 50k draws (weights |L_j|/|L|):")
counts = Counter(sample_signal(params, rng).sparsity for _ in range(50_000))
for j, w in enumerate(sizes.per_sparsity):
    print(f"  weight {j}: observed {counts[j] / 50_000:.4f}  expected {w / sizes.total:.4f}")

print("\nmatrix entry law at gamma = 0.75 (dense for q=4): each value ~ 1/4")
mat = sample_matrix(ModelParams(n=50, k=1, m=50, q=4, gamma=0.75), rng)
print("  value frequencies:", np.bincount(mat.rows.ravel(), minlength=4) / mat.rows.size)

g = sparse_gamma(10, 1000)
print(f"\nlog-sparse factor c=10 at n=1000: gamma = {g:.4f} (zero fraction ~ {1 - g:.3f})")
sparse_mat = sample_matrix(ModelParams(n=200, k=1, m=100, q=4, gamma=g), rng)
print("  observed zero fraction:", float((sparse_mat.rows == 0).mean()))

print("\none measurement:")
sig = sample_signal(params, rng)
mat = sample_matrix(params, rng)
y = matvec(field, mat, sig)
print("  x =", sig.entries, " (weight", sig.sparsity, ")")
print("  y =", y)

print("\nserialization round trip:")
blob = json.dumps(matrix_to_json(mat, q=4, seed=2024))
back = matrix_from_json(json.loads(blob))
print("  bytes:", len(blob), " round-trip equal:", bool((back.rows == mat.rows).all()))
