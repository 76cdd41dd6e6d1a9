"""Exhaustive minimum-weight recovery and exact error-event detection.

The decoder enumerates candidates in increasing sparsity (and within a
sparsity level in a fixed lexicographic order), stops at the first level
containing any feasible candidate, and returns every feasible candidate
of that level.  A tie at the minimum level is reported as Ambiguous and
always counted as a recovery error: the error event is the existence of
a confusable candidate, not the luck of a tie-break.

This is the ground-truth oracle for the probabilistic machinery, so the
feasibility check is a direct measurement comparison with no elimination
shortcuts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import EnumerationCapExceeded
from .field import FiniteField
from .model import _as_entries, _as_rows, measure_candidates, signal_set_size

DEFAULT_ENUMERATION_CAP = 10**8

# candidates measured per vectorized block; bounds peak memory only
_BLOCK = 8192


class DecodeStatus(str, Enum):
    UNIQUE = "unique"
    AMBIGUOUS = "ambiguous"
    INFEASIBLE = "infeasible"


@dataclass
class DecodeResult:
    """Outcome of exhaustive minimum-weight recovery.

    min_sparsity is None iff no candidate of weight <= k_max is feasible.
    solutions holds every feasible candidate at the minimum weight, in
    enumeration order.
    """

    min_sparsity: int | None
    solutions: list[np.ndarray]
    status: DecodeStatus


@dataclass(frozen=True)
class ErrorEvents:
    """Per-instance error flags.

    e_error  : some candidate x' != x with weight <= weight(x) satisfies
               A x' = A x (the decoder could output it in place of x).
    e0_error : the decoder output is not exactly x (ambiguity counts).
    """

    e0_error: bool
    e_error: bool


def _weight_blocks(n: int, k: int, q: int):
    """Yield (block, count) batches of all weight-k vectors in canonical order."""
    buf = []
    for support in itertools.combinations(range(n), k):
        for values in itertools.product(range(1, q), repeat=k):
            v = np.zeros(n, dtype=np.int16)
            for pos, val in zip(support, values):
                v[pos] = val
            buf.append(v)
            if len(buf) == _BLOCK:
                yield np.array(buf, dtype=np.int16)
                buf = []
    if buf:
        yield np.array(buf, dtype=np.int16)


def _check_cap(n: int, k_max: int, q: int, cap: int) -> None:
    total = signal_set_size(n, k_max, q).total
    if total > cap:
        raise EnumerationCapExceeded(
            f"exhaustive search over |L| = {total} candidates exceeds cap {cap}"
        )


def decode_l0(
    field: FiniteField,
    matrix,
    y,
    k_max: int,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> DecodeResult:
    """Find all sparsest candidates x' with A x' = y and weight <= k_max."""
    rows = _as_rows(matrix)
    y = np.asarray(y, dtype=np.int16)
    n = rows.shape[1]
    _check_cap(n, k_max, q=field.q, cap=cap)
    for k in range(k_max + 1):
        feasible: list[np.ndarray] = []
        for block in _weight_blocks(n, k, field.q):
            meas = measure_candidates(field, rows, block)
            hits = np.nonzero((meas == y[:, None]).all(axis=0))[0]
            for i in hits:
                sol = block[i].copy()
                sol.setflags(write=False)
                feasible.append(sol)
        if feasible:
            status = DecodeStatus.UNIQUE if len(feasible) == 1 else DecodeStatus.AMBIGUOUS
            return DecodeResult(min_sparsity=k, solutions=feasible, status=status)
    return DecodeResult(min_sparsity=None, solutions=[], status=DecodeStatus.INFEASIBLE)


def error_events(
    field: FiniteField,
    matrix,
    x,
    k_max: int,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> ErrorEvents:
    """Evaluate both error events for a known signal x.

    The two flags are computed through separate routes: e_error by a
    direct existence scan over candidates no heavier than x, e0_error by
    running the decoder on y = A x.  Their agreement is a checked
    property, not an assumption.
    """
    rows = _as_rows(matrix)
    xe = _as_entries(x)
    k1 = int(np.count_nonzero(xe))
    y = measure_candidates(field, rows, xe[None, :])[:, 0]
    _check_cap(rows.shape[1], k_max, q=field.q, cap=cap)

    e_error = False
    for k in range(k1 + 1):
        for block in _weight_blocks(rows.shape[1], k, field.q):
            meas = measure_candidates(field, rows, block)
            feas = (meas == y[:, None]).all(axis=0)
            not_x = (block != xe[None, :]).any(axis=1)
            if bool(np.any(feas & not_x)):
                e_error = True
                break
        if e_error:
            break

    result = decode_l0(field, rows, y, k_max, cap=cap)
    e0_error = not (
        result.status == DecodeStatus.UNIQUE
        and np.array_equal(result.solutions[0], xe)
    )
    return ErrorEvents(e0_error=e0_error, e_error=e_error)
