"""Exact linear complexity of period-2p^n sequences over GF(q).

``wxc_lc`` is the Wei-Xiao-Chen fold: each level splits the working vector
of length 2pl into 2p blocks A_1..A_2p of length l, tests the block-sum
("plus") and alternating-difference ("minus") conditions, adds 0, (p-1)l or
2(p-1)l to the complexity, and folds the vector to length 2l. ``bm_lc`` is a
plain Berlekamp-Massey used as an independent check.

Block arrays are shaped (..., 2p, l); leading axes are batch axes, which the
exhaustive oracle uses to evaluate many sequences per call.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from kerrlc.params import SequenceParams
from kerrlc.sequence import PeriodicSequence


def split_blocks(a: np.ndarray, l: int, p: int) -> np.ndarray:
    """Reshape (..., 2pl) into blocks (..., 2p, l); block j is A_{j+1}."""
    a = np.asarray(a)
    if a.shape[-1] != 2 * p * l:
        raise ValueError(f"vector length {a.shape[-1]} != 2*p*l = {2 * p * l}")
    return a.reshape(a.shape[:-1] + (2 * p, l))


def alternating_signs(p: int) -> np.ndarray:
    """(+1, -1, +1, ..., +1) of length p, shaped to broadcast over blocks."""
    return np.where(np.arange(p) % 2 == 0, 1, -1).reshape(p, 1)


def check_plus(blocks: np.ndarray, q: int):
    """A_i + A_{p+i} is the same vector for every i = 1..p."""
    p = blocks.shape[-2] // 2
    sums = (blocks[..., :p, :] + blocks[..., p:, :]) % q
    return np.all(sums == sums[..., :1, :], axis=(-2, -1))


def check_minus(blocks: np.ndarray, q: int):
    """(-1)^(i+1) (A_{p+i} - A_i) equals A_{p+1} - A_1 for every i = 1..p."""
    p = blocks.shape[-2] // 2
    signs = alternating_signs(p).astype(blocks.dtype)
    diffs = ((blocks[..., p:, :] - blocks[..., :p, :]) * signs) % q
    return np.all(diffs == diffs[..., :1, :], axis=(-2, -1))


def fold_both(blocks: np.ndarray, q: int) -> np.ndarray:
    p = blocks.shape[-2] // 2
    return np.concatenate([blocks[..., 0, :], blocks[..., p, :]], axis=-1)


def fold_alternating(blocks: np.ndarray, q: int) -> np.ndarray:
    p = blocks.shape[-2] // 2
    signs = alternating_signs(p)
    first = (blocks[..., :p, :] * signs).sum(axis=-2) % q
    second = (blocks[..., p:, :] * signs).sum(axis=-2) % q
    return np.concatenate([first, second], axis=-1)


def fold_sum(blocks: np.ndarray, q: int) -> np.ndarray:
    p = blocks.shape[-2] // 2
    first = blocks[..., :p, :].sum(axis=-2) % q
    second = blocks[..., p:, :].sum(axis=-2) % q
    return np.concatenate([first, second], axis=-1)


def fold_interleave(blocks: np.ndarray, q: int) -> np.ndarray:
    odd = blocks[..., 0::2, :].sum(axis=-2) % q  # A_1, A_3, ..., A_{2p-1}
    even = blocks[..., 1::2, :].sum(axis=-2) % q  # A_2, A_4, ..., A_{2p}
    return np.concatenate([odd, even], axis=-1)


def finalize_pair_lc(a0: int, a1: int, q: int) -> int:
    """Complexity contributed by the final length-2 vector (a0, a1)."""
    a0, a1 = int(a0) % q, int(a1) % q
    if a0 == 0 and a1 == 0:
        return 0
    if a0 == a1 or (a0 + a1) % q == 0:
        return 1
    return 2


def _working_dtype(p: int, q: int):
    return np.int16 if 2 * p * q < np.iinfo(np.int16).max else np.int64


def lc_batch(seqs: np.ndarray, p: int, q: int) -> np.ndarray:
    """Linear complexity of every row of ``seqs`` (shape (B, 2p^n))."""
    a = np.asarray(seqs).astype(_working_dtype(p, q), copy=True)
    if a.ndim != 2:
        raise ValueError("expected a 2-D batch of sequences")
    batch, width = a.shape
    half = width // 2
    c = np.zeros(batch, dtype=np.int64)
    while half > 1:
        if half % p:
            raise ValueError(f"period {width} is not 2*{p}^n")
        l = half // p
        blocks = split_blocks(a, l, p)
        plus = check_plus(blocks, q)
        minus = check_minus(blocks, q)
        both = plus & minus
        single = plus ^ minus
        neither = ~(plus | minus)
        c += np.where(both, 0, np.where(single, (p - 1) * l, 2 * (p - 1) * l))

        nxt = np.empty((batch, 2 * l), dtype=a.dtype)
        for mask, fold in (
            (both, fold_both),
            (plus & ~minus, fold_alternating),
            (minus & ~plus, fold_sum),
            (neither, fold_interleave),
        ):
            if mask.any():
                nxt[mask] = fold(blocks[mask], q)
        a, half = nxt, l

    a0, a1 = a[:, 0].astype(np.int64), a[:, 1].astype(np.int64)
    final = np.where((a0 == 0) & (a1 == 0), 0, np.where((a0 == a1) | ((a0 + a1) % q == 0), 1, 2))
    return c + final


def wxc_lc(s: PeriodicSequence) -> int:
    return int(lc_batch(s.as_array()[None, :], s.params.p, s.q)[0])


def wxc_lc_symbols(symbols: Sequence[int], params: SequenceParams) -> int:
    return int(lc_batch(np.asarray(symbols)[None, :], params.p, params.q)[0])


def bm_lc(prefix: Sequence[int], q: int) -> int:
    """Length of the shortest LFSR over GF(q) generating ``prefix`` (Berlekamp-Massey)."""
    s = [int(v) % q for v in prefix]
    conn = [1]  # C(x)
    prev = [1]  # B(x)
    L, m, b = 0, 1, 1
    for i, si in enumerate(s):
        d = si
        for j in range(1, L + 1):
            if j < len(conn):
                d += conn[j] * s[i - j]
        d %= q
        if d == 0:
            m += 1
            continue
        coef = d * pow(b, q - 2, q) % q
        t = conn[:]
        if len(conn) < len(prev) + m:
            conn += [0] * (len(prev) + m - len(conn))
        for j, bj in enumerate(prev):
            conn[j + m] = (conn[j + m] - coef * bj) % q
        if 2 * L <= i:
            L, prev, b, m = i + 1 - L, t, d, 1
        else:
            m += 1
    return L


def bm_sequence_lc(s: PeriodicSequence) -> int:
    """LC of a periodic sequence via Berlekamp-Massey on two periods."""
    return bm_lc(s.periods(2), s.q)
