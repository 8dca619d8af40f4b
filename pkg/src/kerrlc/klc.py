"""k-error linear complexity of period-2p^n sequences over GF(q) via union costs.

The working state is a :class:`CostTable`. With half-length l (2l current
elements), ``entries[i, h0, h1]`` is the minimum number of symbol changes in
the original period that make current element a_i equal h0 and a_{i+l} equal
h1 while keeping every decision taken at earlier levels. Each level reads a
table of half-length p*l, computes the budgets T_B (force the block-sum
condition), T_C (force both conditions) or T_D (force the alternating
difference condition) and produces the table of half-length l for the
folded vector. When both the block-sum and the alternating-difference branch
fit the budget, both are followed and the smaller final value is kept; taking
the block-sum branch unconditionally can overshoot the true minimum.

Positions i of a table of half-length p*l are grouped as i + j*l for block
offset j in [0, p): the pair (i + j*l) holds the i-th symbol of blocks
A_{j+1} and A_{p+j+1}.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from kerrlc import lc
from kerrlc.sequence import PeriodicSequence

TRACE_SCHEMA = "klc-trace/1"


@dataclass
class CostTable:
    entries: np.ndarray  # (l, q, q), nonnegative integers

    def __post_init__(self):
        self.entries = np.asarray(self.entries, dtype=np.int64)
        if self.entries.ndim != 3 or self.entries.shape[1] != self.entries.shape[2]:
            raise ValueError(f"cost table must be (l, q, q), got {self.entries.shape}")

    @property
    def l(self) -> int:
        return self.entries.shape[0]

    @property
    def q(self) -> int:
        return self.entries.shape[1]

    def total_min(self) -> int:
        """Sum over positions of the cheapest reachable (h0, h1)."""
        return int(self.entries.min(axis=(1, 2)).sum())

    def column(self, i: int) -> list[int]:
        """Entries for position i in (h0, h1) lexicographic order."""
        return [int(v) for v in self.entries[i].reshape(-1)]


class Branch(str, enum.Enum):
    BOTH_FORCED = "BothForced"
    PLUS_ONLY = "PlusOnly"
    MINUS_ONLY = "MinusOnly"
    NEITHER = "Neither"


class FinalRule(str, enum.Enum):
    ZEROABLE = "zeroable"
    EQUAL = "equal"
    SUM_ZERO = "sum-zero"
    GENERIC = "generic"


@dataclass
class LevelDecision:
    level: int
    l: int
    T_B: int
    branch: Branch
    c_increment: int
    T_C: int | None = None
    T_D: int | None = None
    # nominal fold of the unmodified working vector; informational only
    nominal: tuple[int, ...] = ()
    plus_blocks: tuple[tuple[int, ...], ...] = ()
    minus_blocks: tuple[tuple[int, ...], ...] = ()
    # the other single-condition branch, when both fit the budget and were compared
    alternative: Branch | None = None

    def to_dict(self) -> dict:
        out = {"level": self.level, "l": self.l, "T_B": self.T_B}
        if self.T_C is not None:
            out["T_C"] = self.T_C
        if self.T_D is not None:
            out["T_D"] = self.T_D
        out["branch"] = self.branch.value
        out["c_increment"] = self.c_increment
        return out


@dataclass
class KlcTrace:
    k: int
    levels: list[LevelDecision] = field(default_factory=list)
    tables: list[CostTable] = field(default_factory=list)  # tables[0] is the initial table
    final_rule: FinalRule | None = None
    final_increment: int = 0
    complexity: int = 0

    def to_dict(self, params=None) -> dict:
        out: dict = {"schema": TRACE_SCHEMA}
        if params is not None:
            out.update(p=params.p, n=params.n, q=params.q, N=params.N)
        out["k"] = self.k
        out["levels"] = [d.to_dict() for d in self.levels]
        out["final"] = {"rule": self.final_rule.value, "c_final": self.complexity}
        out["klc"] = self.complexity
        return out


def _offsets(prev: CostTable, l: int) -> tuple[int, np.ndarray]:
    """Split a table of half-length p*l into blocks indexed [j, i] = prev[i + j*l]."""
    if l < 1 or prev.l % l:
        raise ValueError(f"table half-length {prev.l} is not a multiple of l={l}")
    p = prev.l // l
    if p % 2 == 0 and p != 1:
        raise ValueError(f"fold factor {p} must be odd")
    return p, prev.entries.reshape(p, l, prev.q, prev.q)


def _signs(p: int) -> list[int]:
    return [1 if j % 2 == 0 else -1 for j in range(p)]


def _minplus_1d(dist: np.ndarray, col: np.ndarray, sign: int) -> np.ndarray:
    """out[..., r] = min_x dist[..., r - sign*x] + col[..., x] over Z_q."""
    q = dist.shape[-1]
    r = np.arange(q)
    idx = (r[:, None] - sign * r[None, :]) % q
    return (dist[..., idx] + col[..., None, :]).min(axis=-1)


def _minplus_2d(dist: np.ndarray, col: np.ndarray) -> np.ndarray:
    """out[..., r0, r1] = min_{x,y} dist[..., r0 - x, r1 - y] + col[..., x, y] over Z_q^2."""
    q = dist.shape[-1]
    r = np.arange(q)
    idx = (r[:, None] - r[None, :]) % q  # [r, x] -> r - x
    shifted = dist[..., idx[:, None, :, None], idx[None, :, None, :]]  # (..., r0, r1, x, y)
    return (shifted + col[..., None, None, :, :]).min(axis=(-2, -1))


def init_cost(s: PeriodicSequence) -> CostTable:
    half = s.params.half
    q = s.q
    a = s.as_array()
    h = np.arange(q)
    first = (h[None, :] != a[:half, None]).astype(np.int64)  # (l, q)
    second = (h[None, :] != a[half:, None]).astype(np.int64)
    return CostTable(first[:, :, None] + second[:, None, :])


def pair_sum_cost(prev: CostTable) -> np.ndarray:
    """bcost[i, h] = min over d1 + d2 = h of prev[i, d1, d2]; shape (prev.l, q)."""
    q = prev.q
    h = np.arange(q)[:, None]
    d1 = np.broadcast_to(np.arange(q)[None, :], (q, q))
    return prev.entries[:, d1, (h - d1) % q].min(axis=-1)


def plus_budget(prev: CostTable, l: int) -> tuple[np.ndarray, int]:
    """Cost of making all p block sums A_j + A_{p+j} agree; returns (bcost, T_B)."""
    p, _ = _offsets(prev, l)
    bcost = pair_sum_cost(prev).reshape(p, l, prev.q).sum(axis=0)
    return bcost, int(bcost.min(axis=1).sum())


def both_forced_table(prev: CostTable, l: int) -> tuple[CostTable, int]:
    """Table for the fold a = (A_1, A_{p+1}) when both conditions are forced.

    Both conditions make the odd-numbered blocks A_1, A_3, ... equal to A_1
    and the even-numbered ones equal to A_{p+1}, so odd block offsets j see
    the target pair swapped.
    """
    p, blk = _offsets(prev, l)
    nxt = blk[0::2].sum(axis=0) + blk[1::2].transpose(0, 1, 3, 2).sum(axis=0)
    table = CostTable(nxt)
    return table, table.total_min()


def fold_alt_sum_cost(prev: CostTable, l: int) -> CostTable:
    """Table for a = (sum (-1)^j A_{j+1}, sum (-1)^j A_{p+j+1}) under the plus condition.

    Every pair (x_j, y_j) must share one sum t; alternating sums of p (odd)
    terms give h0 + h1 = t, so y_j = h0 + h1 - x_j and only the alternating
    sum of the x_j remains as DP state.
    """
    p, blk = _offsets(prev, l)
    q = prev.q
    t = np.arange(q)[:, None]
    x = np.broadcast_to(np.arange(q)[None, :], (q, q))
    cols = blk[:, :, x, (t - x) % q]  # (p, l, t, x)
    dist = cols[0]
    for j, sign in enumerate(_signs(p)[1:], start=1):
        dist = _minplus_1d(dist, cols[j], sign)
    nxt = np.empty((l, q, q), dtype=np.int64)
    nxt[:, x, (t - x) % q] = dist  # dist[i, t, h0] -> h1 = t - h0
    return CostTable(nxt)


def signed_diff_cost(prev: CostTable, l: int) -> np.ndarray:
    """dcost[i + j*l, h] = min over (-1)^j (d1 - d0) = h of prev[i + j*l, d0, d1]."""
    p, blk = _offsets(prev, l)
    q = prev.q
    h = np.arange(q)[:, None]
    d0 = np.broadcast_to(np.arange(q)[None, :], (q, q))
    out = np.stack([blk[j][:, d0, (d0 + sign * h) % q].min(axis=-1) for j, sign in enumerate(_signs(p))])
    return out.reshape(p * l, q)


def minus_budget(prev: CostTable, l: int) -> tuple[np.ndarray, int]:
    """Cost of making every (-1)^j (A_{p+j+1} - A_{j+1}) agree; returns (dcost, T_D)."""
    p, _ = _offsets(prev, l)
    dcost = signed_diff_cost(prev, l).reshape(p, l, prev.q).sum(axis=0)
    return dcost, int(dcost.min(axis=1).sum())


def fold_sum_cost(prev: CostTable, l: int) -> CostTable:
    """Table for a = (sum A_{j+1}, sum A_{p+j+1}) under the minus condition.

    The common signed difference d satisfies h1 = h0 + d, so y_j = x_j + (-1)^j d
    and the plain sum of the x_j is the DP state.
    """
    p, blk = _offsets(prev, l)
    q = prev.q
    d = np.arange(q)[:, None]
    x = np.broadcast_to(np.arange(q)[None, :], (q, q))
    cols = np.stack([blk[j][:, x, (x + sign * d) % q] for j, sign in enumerate(_signs(p))])
    dist = cols[0]
    for j in range(1, p):
        dist = _minplus_1d(dist, cols[j], 1)
    nxt = np.empty((l, q, q), dtype=np.int64)
    nxt[:, x, (x + d) % q] = dist  # dist[i, d, h0] -> h1 = h0 + d
    return CostTable(nxt)


def fold_interleave_cost(prev: CostTable, l: int) -> CostTable:
    """Table for a = (A_1 + A_3 + ... + A_{2p-1}, A_2 + A_4 + ... + A_{2p}), unconstrained.

    For odd offsets j the first-half block A_{j+1} is even-numbered, so the
    pair's roles swap.
    """
    p, blk = _offsets(prev, l)
    dist = blk[0]
    for j in range(1, p):
        col = blk[j] if j % 2 == 0 else blk[j].transpose(0, 2, 1)
        dist = _minplus_2d(dist, col)
    return CostTable(dist)


def finalize_klc(final: CostTable, c: int, k: int) -> tuple[int, FinalRule]:
    if final.l != 1:
        raise ValueError(f"final table must have l = 1, got {final.l}")
    t = final.entries[0]
    q = final.q
    h = np.arange(q)
    if t[0, 0] <= k:
        return c, FinalRule.ZEROABLE
    if t[h, h].min() <= k:
        return c + 1, FinalRule.EQUAL
    if t[h, (-h) % q].min() <= k:
        return c + 1, FinalRule.SUM_ZERO
    return c + 2, FinalRule.GENERIC


def _level(table, nominal, half, p, q, k, level, greedy):
    """Decide one level and recurse; returns (added complexity, decisions, tables, final rule)."""
    if half == 1:
        added, rule = finalize_klc(table, 0, k)
        return added, [], [], rule

    l = half // p
    blocks = lc.split_blocks(nominal, l, p)
    info = dict(
        level=level,
        l=l,
        plus_blocks=tuple(tuple(int(v) for v in b) for b in (blocks[:p] + blocks[p:]) % q),
        minus_blocks=tuple(
            tuple(int(v) for v in b) for b in ((blocks[p:] - blocks[:p]) * lc.alternating_signs(p)) % q
        ),
    )
    _, t_b = plus_budget(table, l)
    options = []  # (branch, increment, next table, next nominal)
    t_c = t_d = None
    if t_b <= k:
        forced, t_c = both_forced_table(table, l)
        if t_c <= k:
            options.append((Branch.BOTH_FORCED, 0, forced, lc.fold_both(blocks, q)))
        else:
            options.append(
                (Branch.PLUS_ONLY, (p - 1) * l, fold_alt_sum_cost(table, l), lc.fold_alternating(blocks, q))
            )
    # Forcing the minus condition costs the same (p-1)l as PlusOnly but leads
    # to a different folded state, so unless both conditions can be forced it
    # must be tried as well; greedy mode keeps the plus-first choice.
    if not options or (options[0][0] is Branch.PLUS_ONLY and not greedy):
        _, t_d = minus_budget(table, l)
        if t_d <= k:
            options.append((Branch.MINUS_ONLY, (p - 1) * l, fold_sum_cost(table, l), lc.fold_sum(blocks, q)))
    if not options:
        options.append(
            (Branch.NEITHER, 2 * (p - 1) * l, fold_interleave_cost(table, l), lc.fold_interleave(blocks, q))
        )

    best = None
    for branch, inc, nxt, nxt_nominal in options:
        assert nxt.total_min() <= k, f"budget invariant violated at level {level}"
        added, decisions, tables, rule = _level(nxt, nxt_nominal, l, p, q, k, level + 1, greedy)
        if best is None or inc + added < best[0]:
            decision = LevelDecision(
                branch=branch,
                c_increment=inc,
                T_B=t_b,
                T_C=t_c,
                T_D=t_d,
                nominal=tuple(int(v) for v in nxt_nominal),
                **info,
            )
            best = (inc + added, [decision] + decisions, [nxt] + tables, rule)
    if len(options) > 1:
        chosen = best[1][0]
        chosen.alternative = next(b for b, *_ in options if b is not chosen.branch)
    return best


def k_error_lc(s: PeriodicSequence, k: int, greedy: bool = False) -> tuple[int, KlcTrace]:
    """k-error linear complexity of ``s`` and the per-level decision trace.

    With ``greedy=True`` a level where the block-sum condition can be forced
    (but not both conditions) always takes PlusOnly, never considering
    MinusOnly. That rule is not exact: it can overshoot the true k-error LC.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    p, q = s.params.p, s.q
    table = init_cost(s)
    added, decisions, tables, rule = _level(table, s.as_array(), s.params.half, p, q, k, 1, greedy)
    return added, KlcTrace(
        k=k,
        levels=decisions,
        tables=[table] + tables,
        final_rule=rule,
        final_increment=added - sum(d.c_increment for d in decisions),
        complexity=added,
    )
