"""Phase-transition curves: compression ratio versus sparsity ratio.

Generates the dense curves for several field sizes plus a log-sparse
curve, writes them to CSV, and (if matplotlib is importable) renders a
PNG.  Uses n = 300 so the whole demo runs in well under a minute; raise
N to 1000 to regenerate the full-scale curves.
"""

import csv
from pathlib import Path

from ffcs import GammaMode, curve

N = 300
TARGET = 1e-2
GRID = [max(1, round(N * i / 100)) for i in range(2, 51, 2)]

out_path = Path("phase_curves.csv")
all_points = []
for q in (2, 4, 16, 256):
    pts = curve(N, q, GammaMode.dense(), k_grid=GRID, target=TARGET)
    all_points.extend(pts)
    print(f"dense q={q:3d}: m/n at k/n=0.2 -> {dict((p.k, p.m) for p in pts)[round(0.2 * N)] / N:.3f}")

sparse_pts = curve(N, 4, GammaMode.sparse(10), k_grid=GRID, target=TARGET)
all_points.extend(sparse_pts)
dense4 = {p.k: p.m for p in all_points if p.q == 4 and p.gamma_mode == "dense"}
print("\nsparse (c=10) vs dense at q=4, small sparsity (extra measurements):")
for p in sparse_pts[:6]:
    print(f"  k/n = {p.sparsity_ratio:.3f}: sparse m = {p.m}, dense m = {dense4[p.k]}, excess = {p.m - dense4[p.k]}")

with out_path.open("w", newline="") as fh:
    writer = csv.writer(fh)
    writer.writerow(["q", "gamma_mode", "K", "M", "sparsity_ratio", "compression_ratio", "achieved"])
    for p in all_points:
        writer.writerow([p.q, p.gamma_mode, p.k, p.m, p.sparsity_ratio, p.compression_ratio, p.achieved])
print(f"\nwrote {len(all_points)} curve points to {out_path}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not available; skipping the plot")
else:
    fig, ax = plt.subplots(figsize=(6, 4.5))
    for q in (2, 4, 16, 256):
        pts = [p for p in all_points if p.q == q and p.gamma_mode == "dense"]
        ax.plot([p.sparsity_ratio for p in pts], [p.compression_ratio for p in pts], label=f"q={q} dense")
    ax.plot(
        [p.sparsity_ratio for p in sparse_pts],
        [p.compression_ratio for p in sparse_pts],
        "--",
        label="q=4, c=10",
    )
    ax.set_xlabel("sparsity ratio k/n")
    ax.set_ylabel("compression ratio m/n")
    ax.set_title(f"minimum measurements for union bound <= {TARGET:g} (n={N})")
    ax.legend()
    fig.tight_layout()
    fig.savefig("phase_curves.png", dpi=120)
    print("wrote phase_curves.png")
