"""Phase-transition curves: minimum measurements versus sparsity ratio.

For each sparsity level the smallest integer measurement count m with
union bound <= target is located by binary search; the bound is monotone
non-increasing in m (asserted by tests, not assumed silently).  Curve
generation is fully deterministic: no sampling happens anywhere here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .bounds import PairVariant, union_bound
from .model import ModelParams, dense_gamma, sparse_gamma


@dataclass(frozen=True)
class GammaMode:
    """Dense (gamma = 1 - 1/q) or logarithmic-sparse (gamma = c ln(n)/n)."""

    kind: str  # "dense" | "sparse"
    c: float | None = None

    def __post_init__(self):
        if self.kind not in ("dense", "sparse"):
            raise ValueError(f"unknown gamma mode {self.kind!r}")
        if self.kind == "sparse" and (self.c is None or self.c <= 0):
            raise ValueError("sparse mode requires c > 0")

    @classmethod
    def dense(cls) -> "GammaMode":
        return cls(kind="dense")

    @classmethod
    def sparse(cls, c: float) -> "GammaMode":
        return cls(kind="sparse", c=float(c))

    @classmethod
    def parse(cls, text: str) -> "GammaMode":
        """Parse 'dense' or 'c=<real>'."""
        t = text.strip().lower()
        if t == "dense":
            return cls.dense()
        if t.startswith("c="):
            return cls.sparse(float(t[2:]))
        raise ValueError(f"cannot parse gamma mode {text!r}; expected 'dense' or 'c=<real>'")

    def resolve(self, q: int, n: int) -> float:
        if self.kind == "dense":
            return dense_gamma(q)
        return sparse_gamma(self.c, n)

    @property
    def label(self) -> str:
        return "dense" if self.kind == "dense" else f"c={self.c:g}"


class MinMeasurements(NamedTuple):
    m: int
    achieved: bool


@dataclass(frozen=True)
class CurvePoint:
    """One curve sample: the smallest m meeting the target at this k."""

    q: int
    gamma_mode: str
    k: int
    m: int
    sparsity_ratio: float
    compression_ratio: float
    target: float
    variant: PairVariant
    achieved: bool


def _search_ceiling(n: int, q: int) -> int:
    return n * math.ceil(math.log2(q)) + 64


def min_measurements(
    n: int,
    k: int,
    q: int,
    gamma: float,
    target: float = 1e-2,
    variant: PairVariant = PairVariant.ALL_PAIRS,
    m_ceiling: int | None = None,
) -> MinMeasurements:
    """Smallest m with union bound <= target, by binary search over m.

    If even the search ceiling misses the target the ceiling is returned
    with achieved=False rather than raising: a flagged point, not a
    fatal one.
    """
    if not 0.0 < target < 1.0:
        raise ValueError(f"target must lie in (0, 1), got {target}")
    hi = m_ceiling if m_ceiling is not None else _search_ceiling(n, q)
    log_target = math.log(target)

    def bound_at(m: int) -> float:
        return union_bound(ModelParams(n=n, k=k, m=m, q=q, gamma=gamma), variant).log_value

    if bound_at(hi) > log_target:
        return MinMeasurements(m=hi, achieved=False)
    lo = 1
    while lo < hi:
        mid = (lo + hi) // 2
        if bound_at(mid) <= log_target:
            hi = mid
        else:
            lo = mid + 1
    return MinMeasurements(m=lo, achieved=True)


def default_k_grid(n: int) -> list[int]:
    """Sparsity grid at ratios 0.01, 0.02, ..., 0.50 of n (deduplicated)."""
    ks = sorted({round(n * i / 100) for i in range(1, 51)})
    return [k for k in ks if k >= 1]


def curve(
    n: int,
    q: int,
    gamma_mode: GammaMode,
    k_grid: list[int] | None = None,
    target: float = 1e-2,
    variant: PairVariant = PairVariant.ALL_PAIRS,
) -> list[CurvePoint]:
    """One phase-transition curve: a CurvePoint per sparsity level."""
    ks = k_grid if k_grid is not None else default_k_grid(n)
    gamma = gamma_mode.resolve(q, n)
    points = []
    for k in ks:
        res = min_measurements(n, k, q, gamma, target=target, variant=variant)
        points.append(
            CurvePoint(
                q=q,
                gamma_mode=gamma_mode.label,
                k=k,
                m=res.m,
                sparsity_ratio=k / n,
                compression_ratio=res.m / n,
                target=target,
                variant=PairVariant(variant),
                achieved=res.achieved,
            )
        )
    return points
