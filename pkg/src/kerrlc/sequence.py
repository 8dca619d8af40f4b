"""Periodic sequences over GF(q): one period of symbols plus its parameters.

Text format (shared with the CLI)::

    # p=5 n=2 q=3
    1 2 1 0 1 0 0 0 1 2, 1 2 0 2 ...

Lines starting with ``#`` are comments; a comment of the form
``p=<p> n=<n> q=<q>`` supplies parameters (command-line flags override it).
The remaining text is N integers in [0, q) separated by whitespace and/or
commas.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from kerrlc.params import SequenceParams, validate_params

_MASK64 = (1 << 64) - 1
_HEADER_RE = re.compile(r"\b([pnq])\s*=\s*(-?\d+)")


class SequenceFormatError(ValueError):
    """Malformed sequence text; carries a 1-based line/column position."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line, self.column = line, column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


@dataclass(frozen=True)
class PeriodicSequence:
    params: SequenceParams
    symbols: tuple[int, ...]

    def __post_init__(self):
        symbols = tuple(int(v) for v in self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if len(symbols) != self.params.N:
            raise ValueError(f"expected {self.params.N} symbols, got {len(symbols)}")
        q = self.params.q
        bad = [v for v in symbols if not 0 <= v < q]
        if bad:
            raise ValueError(f"symbol {bad[0]} outside [0, {q})")

    @property
    def N(self) -> int:
        return self.params.N

    @property
    def q(self) -> int:
        return self.params.q

    def __len__(self):
        return len(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def as_array(self) -> np.ndarray:
        return np.array(self.symbols, dtype=np.int64)

    def rotate(self, shift: int) -> PeriodicSequence:
        shift %= self.N
        return PeriodicSequence(self.params, self.symbols[shift:] + self.symbols[:shift])

    def periods(self, count: int = 2) -> list[int]:
        return list(self.symbols) * count

    def to_text(self, header: bool = True) -> str:
        lines = [f"# {self.params}"] if header else []
        lines.append(" ".join(map(str, self.symbols)))
        return "\n".join(lines) + "\n"

    @classmethod
    def zeros(cls, params: SequenceParams) -> PeriodicSequence:
        return cls(params, (0,) * params.N)

    @classmethod
    def from_string(cls, params: SequenceParams, digits: str) -> PeriodicSequence:
        """Build from a run of single digits such as ``"1210100012"``; spaces ignored."""
        return cls(params, tuple(int(ch) for ch in digits if not ch.isspace()))


@dataclass(frozen=True)
class ErrorPattern:
    positions: tuple[int, ...] = ()
    deltas: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "positions", tuple(int(i) for i in self.positions))
        object.__setattr__(self, "deltas", tuple(int(d) for d in self.deltas))
        if len(self.positions) != len(self.deltas):
            raise ValueError("positions and deltas must have equal length")
        if any(b <= a for a, b in zip(self.positions, self.positions[1:])):
            raise ValueError("positions must be strictly increasing")
        if any(d == 0 for d in self.deltas):
            raise ValueError("deltas must be nonzero")

    @property
    def weight(self) -> int:
        return len(self.positions)

    def negated(self, q: int) -> ErrorPattern:
        return ErrorPattern(self.positions, tuple((-d) % q for d in self.deltas))


def apply_errors(s: PeriodicSequence, e: ErrorPattern) -> PeriodicSequence:
    q = s.q
    if any(d % q == 0 for d in e.deltas):
        raise ValueError(f"delta is zero mod {q}")
    symbols = list(s.symbols)
    for pos, delta in zip(e.positions, e.deltas):
        if not 0 <= pos < s.N:
            raise IndexError(f"error position {pos} outside [0, {s.N})")
        symbols[pos] = (symbols[pos] + delta) % q
    return PeriodicSequence(s.params, tuple(symbols))


def hamming_weight(s: PeriodicSequence) -> int:
    return sum(1 for v in s.symbols if v)


class SplitMix64:
    """SplitMix64 generator (Steele, Lea & Flood 2014).

    state <- state + 0x9E3779B97F4A7C15 (mod 2^64), then the output is
    z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB; z ^ (z >> 31), all mod 2^64.
    """

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection of the biased tail."""
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            z = self.next()
            if z < limit:
                return z % bound


def random_sequence(params: SequenceParams, seed: int) -> PeriodicSequence:
    """Uniform random period, reproducible from ``seed`` in any language."""
    rng = SplitMix64(seed)
    return PeriodicSequence(params, tuple(rng.below(params.q) for _ in range(params.N)))


def _tokenize(text: str):
    """Yield (value, line, column) for each integer token outside comments."""
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.lstrip().startswith("#"):
            continue
        for m in re.finditer(r"[^\s,]+", line):
            tok = m.group()
            if not re.fullmatch(r"\d+", tok):
                raise SequenceFormatError(f"invalid symbol {tok!r}", lineno, m.start() + 1)
            yield int(tok), lineno, m.start() + 1


def parse_header(text: str) -> dict[str, int]:
    found: dict[str, int] = {}
    for line in text.splitlines():
        stripped = line.lstrip()
        if stripped.startswith("#"):
            for key, val in _HEADER_RE.findall(stripped):
                found.setdefault(key, int(val))
    return found


def parse_sequence(
    text: str, p: int | None = None, n: int | None = None, q: int | None = None
) -> PeriodicSequence:
    """Parse sequence text; explicit p/n/q arguments override the header.

    Raises SequenceFormatError for malformed text and ParamsError (from
    validation) for unusable parameters.
    """
    header = parse_header(text)
    given = {"p": p, "n": n, "q": q}
    merged = {k: (given[k] if given[k] is not None else header.get(k)) for k in "pnq"}
    missing = [k for k, v in merged.items() if v is None]
    if missing:
        raise SequenceFormatError(
            f"missing parameter(s) {', '.join(missing)}: pass flags or a '# p=.. n=.. q=..' header"
        )
    params = validate_params(merged["p"], merged["n"], merged["q"])
    symbols = []
    last = (1, 1)
    for value, line, col in _tokenize(text):
        if value >= params.q:
            raise SequenceFormatError(f"symbol {value} outside [0, {params.q})", line, col)
        symbols.append(value)
        last = (line, col)
    if len(symbols) != params.N:
        raise SequenceFormatError(
            f"expected {params.N} symbols for {params}, got {len(symbols)}", *last
        )
    return PeriodicSequence(params, tuple(symbols))
