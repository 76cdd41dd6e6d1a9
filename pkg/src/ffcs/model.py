"""Signal set, random sensing-matrix ensemble, and the measurement map.

The signal set L is every length-N vector over GF(q) with at most K
nonzero entries.  Signals are drawn uniformly from L; sensing matrices
have i.i.d. entries that are zero with probability 1 - gamma and each
nonzero value with probability gamma / (q - 1).

Randomness contract: all sampling takes an explicit numpy Generator
(PCG64 via ``numpy.random.default_rng(seed)``).  Given the same 64-bit
seed and parameters, every draw is reproducible.  Sparsity weights use
exact big-integer arithmetic, never floating point, because the signal
counts overflow doubles long before N = 1000.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, log

import numpy as np

from .errors import DimensionMismatch, EnumerationCapExceeded, InvalidGamma
from .field import FiniteField
from .util import randbelow


@dataclass(frozen=True)
class ModelParams:
    """Problem instance: (n, k, m, q, gamma).

    n     : signal length
    k     : maximum sparsity of the unknown signal
    m     : number of measurements
    q     : field order
    gamma : sparse factor of the sensing matrix; 1 - 1/q is the dense case
    """

    n: int
    k: int
    m: int
    q: int
    gamma: float

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not 0 <= self.k <= self.n:
            raise ValueError("k must lie in [0, n]")
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if self.q < 2:
            raise ValueError("q must be >= 2")
        if not 0.0 < self.gamma <= 1.0:
            raise InvalidGamma(f"gamma must lie in (0, 1], got {self.gamma}")


@dataclass(frozen=True)
class SignalSetSize:
    """Exact cardinality of L, overall and per sparsity level."""

    per_sparsity: tuple[int, ...]
    total: int


@dataclass(frozen=True)
class Signal:
    """Length-n vector over GF(q) with its cached number of nonzeros."""

    entries: np.ndarray
    sparsity: int

    @classmethod
    def from_entries(cls, entries) -> "Signal":
        arr = np.asarray(entries, dtype=np.int16).copy()
        arr.setflags(write=False)
        return cls(entries=arr, sparsity=int(np.count_nonzero(arr)))


@dataclass(frozen=True)
class SensingMatrix:
    """m x n matrix over GF(q), tagged with the gamma that generated it."""

    rows: np.ndarray
    gamma: float

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows.shape


def signal_set_size(n: int, k: int, q: int) -> SignalSetSize:
    """Exact count of vectors in GF(q)^n with at most k nonzeros.

    per_sparsity[j] = C(n, j) * (q-1)^j, as arbitrary-precision integers.
    """
    if not 0 <= k <= n:
        raise ValueError("k must lie in [0, n]")
    per = tuple(comb(n, j) * (q - 1) ** j for j in range(k + 1))
    return SignalSetSize(per_sparsity=per, total=sum(per))


def dense_gamma(q: int) -> float:
    """Sparse factor that makes matrix entries uniform over GF(q)."""
    return 1.0 - 1.0 / q


def sparse_gamma(c: float, n: int) -> float:
    """Sparse factor c * ln(n) / n (natural log)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return c * log(n) / n


def sample_signal(params: ModelParams, rng: np.random.Generator) -> Signal:
    """Draw a signal uniformly from L.

    The sparsity level is drawn with exact big-integer weights
    |L_j| / |L|, then a uniform support of that size, then i.i.d.
    uniform nonzero values.  The three stages compose to the exact
    uniform distribution on L.
    """
    sizes = signal_set_size(params.n, params.k, params.q)
    u = randbelow(rng, sizes.total)
    acc = 0
    k1 = 0
    for j, w in enumerate(sizes.per_sparsity):
        acc += w
        if u < acc:
            k1 = j
            break
    entries = np.zeros(params.n, dtype=np.int16)
    if k1 > 0:
        support = rng.permutation(params.n)[:k1]
        entries[support] = rng.integers(1, params.q, size=k1, dtype=np.int16)
    entries.setflags(write=False)
    return Signal(entries=entries, sparsity=k1)


def sample_matrix(params: ModelParams, rng: np.random.Generator) -> SensingMatrix:
    """Draw an m x n matrix with i.i.d. entries from the gamma-sparse law."""
    if not 0.0 < params.gamma <= 1.0:
        raise InvalidGamma(f"gamma must lie in (0, 1], got {params.gamma}")
    shape = (params.m, params.n)
    nonzero = rng.random(shape) < params.gamma
    values = rng.integers(1, params.q, size=shape, dtype=np.int16)
    rows = np.where(nonzero, values, 0).astype(np.int16)
    rows.setflags(write=False)
    return SensingMatrix(rows=rows, gamma=params.gamma)


def _as_rows(matrix) -> np.ndarray:
    return matrix.rows if isinstance(matrix, SensingMatrix) else np.asarray(matrix)


def _as_entries(signal) -> np.ndarray:
    return signal.entries if isinstance(signal, Signal) else np.asarray(signal)


def matvec(field: FiniteField, matrix, signal) -> np.ndarray:
    """Measurement map y = A x with GF(q) arithmetic; returns length-m int16."""
    rows = _as_rows(matrix)
    x = _as_entries(signal)
    if rows.ndim != 2 or x.ndim != 1 or rows.shape[1] != x.shape[0]:
        raise DimensionMismatch(
            f"matrix {rows.shape} incompatible with signal {x.shape}"
        )
    return measure_candidates(field, rows, x[None, :])[:, 0]


def measure_candidates(field: FiniteField, rows: np.ndarray, cands: np.ndarray) -> np.ndarray:
    """Apply an (m, n) matrix to a (c, n) batch of vectors; returns (m, c).

    Prime fields use an integer matmul reduced mod p; binary extensions
    multiply through the lookup table and fold rows with XOR (field
    addition in characteristic 2).
    """
    if rows.shape[1] != cands.shape[1]:
        raise DimensionMismatch(
            f"matrix {rows.shape} incompatible with candidates {cands.shape}"
        )
    if field.m == 1:
        return (rows.astype(np.int64) @ cands.T.astype(np.int64)) % field.p
    mul = field.mul_table
    out = np.zeros((rows.shape[0], cands.shape[0]), dtype=np.int16)
    for j in range(rows.shape[1]):
        out ^= mul[rows[:, j][:, None], cands[:, j][None, :]]
    return out


def enumerate_signals(n: int, k_max: int, q: int):
    """Yield every member of L as an int16 array, in canonical order.

    Order: sparsity-major, then lexicographic support, then lexicographic
    nonzero values.  This is the tie-making order the exhaustive decoder
    relies on, so it must never change.
    """
    for k in range(k_max + 1):
        for support in itertools.combinations(range(n), k):
            for values in itertools.product(range(1, q), repeat=k):
                v = np.zeros(n, dtype=np.int16)
                for pos, val in zip(support, values):
                    v[pos] = val
                yield v


def candidate_matrix(
    n: int, k_max: int, q: int, cap: int = 10**8
) -> tuple[np.ndarray, np.ndarray]:
    """Materialize all of L as a (|L|, n) matrix plus a weight vector.

    Raises EnumerationCapExceeded before allocating anything if |L| > cap.
    """
    total = signal_set_size(n, k_max, q).total
    if total > cap:
        raise EnumerationCapExceeded(
            f"|L| = {total} exceeds the enumeration cap {cap}"
        )
    out = np.zeros((total, n), dtype=np.int16)
    for i, v in enumerate(enumerate_signals(n, k_max, q)):
        out[i] = v
    weights = np.count_nonzero(out, axis=1).astype(np.int64)
    return out, weights


# JSON serialization ------------------------------------------------------
#
# Schema shared by matrices and signals:
#   {"q": int, "dims": [m, n] or [n], "entries": int array (nested for
#    matrices), "gamma": float or null, "seed": int or null}


def matrix_to_json(matrix: SensingMatrix, q: int, seed: int | None = None) -> dict:
    rows = _as_rows(matrix)
    return {
        "q": q,
        "dims": [int(rows.shape[0]), int(rows.shape[1])],
        "entries": rows.astype(int).tolist(),
        "gamma": float(matrix.gamma) if isinstance(matrix, SensingMatrix) else None,
        "seed": seed,
    }


def matrix_from_json(obj: dict) -> SensingMatrix:
    rows = np.asarray(obj["entries"], dtype=np.int16)
    if list(rows.shape) != list(obj["dims"]):
        raise DimensionMismatch(f"dims {obj['dims']} do not match entries {rows.shape}")
    if rows.size and (rows.min() < 0 or rows.max() >= obj["q"]):
        raise ValueError("entries outside field range")
    rows.setflags(write=False)
    gamma = obj.get("gamma")
    return SensingMatrix(rows=rows, gamma=float(gamma) if gamma is not None else float("nan"))


def signal_to_json(signal: Signal, q: int, seed: int | None = None) -> dict:
    x = _as_entries(signal)
    return {
        "q": q,
        "dims": [int(x.shape[0])],
        "entries": x.astype(int).tolist(),
        "gamma": None,
        "seed": seed,
    }


def signal_from_json(obj: dict) -> Signal:
    x = np.asarray(obj["entries"], dtype=np.int16)
    if list(x.shape) != list(obj["dims"]):
        raise DimensionMismatch(f"dims {obj['dims']} do not match entries {x.shape}")
    if x.size and (x.min() < 0 or x.max() >= obj["q"]):
        raise ValueError("entries outside field range")
    return Signal.from_entries(x)
