"""Ground-truth k-error linear complexity by exhaustive error enumeration.

Every error pattern of weight <= k is added to the sequence and the result's
linear complexity is computed with the batched fold in :mod:`kerrlc.lc`;
a deterministic sample of candidates is re-checked with Berlekamp-Massey.

Enumeration order is canonical: by weight, then positions lexicographically,
then deltas lexicographically. Work is split into tasks (weight, first
position), which are contiguous ranges of that order, and merged by the
minimum of (lc, weight, positions, deltas). The witness is therefore the
first minimizer and does not depend on how tasks are scheduled.
"""

from __future__ import annotations

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb

import numpy as np

from kerrlc import lc
from kerrlc.klc import k_error_lc
from kerrlc.sequence import ErrorPattern, PeriodicSequence

log = logging.getLogger(__name__)

DEFAULT_CAP = 2**32
_UINT64_MAX = 2**64 - 1
_BATCH_ROWS = 1 << 18


class CandidateCapError(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleResult:
    k: int
    klc: int
    candidates_examined: int
    witness: ErrorPattern
    # minimum LC over patterns of weight exactly w, for w = 0..k
    per_weight: tuple[int, ...] = ()
    spot_checks: int = 0


def error_pattern_count(N: int, q: int, k: int) -> int:
    """Number of error patterns of weight <= k: sum_i (q-1)^i * C(N, i)."""
    if not 0 <= k <= N:
        raise ValueError(f"k={k} must lie in [0, N={N}]")
    total = sum((q - 1) ** i * comb(N, i) for i in range(k + 1))
    if total > _UINT64_MAX:
        raise OverflowError(f"{total} candidates exceed the 64-bit range")
    return total


def _tasks(N: int, k: int) -> list[tuple[int, int]]:
    tasks = [(0, -1)]
    for w in range(1, k + 1):
        tasks.extend((w, first) for first in range(N - w + 1))
    return tasks


def _scan_task(args):
    """Scan one (weight, first position) slice; returns (best key, count, spot checks)."""
    symbols, p, q, w, first, spot_rate, max_spot = args
    base = np.asarray(symbols, dtype=np.int16 if q < 2**14 else np.int64)
    N = base.shape[0]

    if w == 0:
        value = int(lc.lc_batch(base[None, :], p, q)[0])
        return (value, 0, (), ()), 1, 0

    deltas = np.array(list(itertools.product(range(1, q), repeat=w)), dtype=base.dtype)
    n_deltas = deltas.shape[0]
    combos_per_batch = max(1, _BATCH_ROWS // n_deltas)
    combos = ((first,) + rest for rest in itertools.combinations(range(first + 1, N), w - 1))
    rng = np.random.default_rng([w, first])

    best = None
    count = spot = 0
    while True:
        chunk = list(itertools.islice(combos, combos_per_batch))
        if not chunk:
            break
        pos = np.repeat(np.array(chunk, dtype=np.int64), n_deltas, axis=0)
        dl = np.tile(deltas, (len(chunk), 1))
        rows = pos.shape[0]
        seqs = np.tile(base, (rows, 1))
        r = np.arange(rows)[:, None]
        seqs[r, pos] = (seqs[r, pos] + dl) % q
        values = lc.lc_batch(seqs, p, q)
        count += rows

        idx = int(np.argmin(values))
        key = (int(values[idx]), w, tuple(int(v) for v in pos[idx]), tuple(int(v) for v in dl[idx]))
        if best is None or key < best:
            best = key

        if spot < max_spot:
            picks = np.flatnonzero(rng.random(rows) < spot_rate)[: max_spot - spot]
            for row in picks:
                symbols_row = seqs[row].tolist()
                if lc.bm_lc(symbols_row * 2, q) != int(values[row]):
                    raise RuntimeError(f"fold/Berlekamp-Massey disagreement on {symbols_row}")
            spot += len(picks)
    return best, count, spot


def _scan(s: PeriodicSequence, k: int, jobs: int, cap: int, spot_rate: float, max_spot: int):
    N = s.N
    k = min(k, N)
    total = error_pattern_count(N, s.q, k)
    if total > cap:
        raise CandidateCapError(
            f"{total} candidates exceed the cap of {cap}; use a smaller k or N, or raise the cap"
        )
    work = [(s.symbols, s.params.p, s.q, w, first, spot_rate, max_spot) for w, first in _tasks(N, k)]
    log.info("scanning %d candidates in %d tasks with %d job(s)", total, len(work), jobs)
    if jobs <= 1:
        results = list(map(_scan_task, work))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_task, work, chunksize=1))

    per_weight: list[tuple | None] = [None] * (k + 1)
    count = spot = 0
    for key, n, checks in results:
        count += n
        spot += checks
        w = key[1]
        if per_weight[w] is None or key < per_weight[w]:
            per_weight[w] = key
    if count != total:
        raise AssertionError(f"examined {count} candidates, expected {total}")
    return per_weight, count, spot


def brute_force_klc(
    s: PeriodicSequence,
    k: int,
    parallelism: int = 1,
    cap: int = DEFAULT_CAP,
    spot_rate: float = 0.01,
    max_spot: int = 16,
) -> OracleResult:
    """Exact k-error LC by trying every error pattern of weight <= k.

    ``spot_rate`` is the fraction of candidates re-checked with
    Berlekamp-Massey, limited to ``max_spot`` per task.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if parallelism < 1:
        raise ValueError("parallelism must be positive")
    per_weight, count, spot = _scan(s, k, parallelism, cap, spot_rate, max_spot)
    best = min(per_weight)
    return OracleResult(
        k=k,
        klc=best[0],
        candidates_examined=count,
        witness=ErrorPattern(best[2], best[3]),
        per_weight=tuple(key[0] for key in per_weight),
        spot_checks=spot,
    )


def klc_spectrum(
    s: PeriodicSequence, k_max: int, use_fast: bool = True, parallelism: int = 1, cap: int = DEFAULT_CAP
) -> list[tuple[int, int]]:
    """[(k, k-error LC)] for k = 0..k_max, from the fast algorithm or one oracle scan."""
    if not 0 <= k_max <= s.N:
        raise ValueError(f"k_max={k_max} must lie in [0, N={s.N}]")
    if use_fast:
        return [(k, k_error_lc(s, k)[0]) for k in range(k_max + 1)]
    per_weight, _, _ = _scan(s, k_max, parallelism, cap, 0.01, 16)
    out, running = [], None
    for k, key in enumerate(per_weight):
        running = key[0] if running is None else min(running, key[0])
        out.append((k, running))
    return out
