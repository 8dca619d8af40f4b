"""Command-line front end.

Exit codes: 0 success, 2 invalid parameters or request, 3 malformed input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from kerrlc.klc import k_error_lc
from kerrlc.lc import wxc_lc
from kerrlc.oracle import DEFAULT_CAP, CandidateCapError, brute_force_klc, klc_spectrum
from kerrlc.params import ParamsError, validate_params
from kerrlc.sequence import PeriodicSequence, SequenceFormatError, parse_sequence, random_sequence

EXIT_OK, EXIT_INVALID, EXIT_MALFORMED = 0, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


@dataclass
class RunConfig:
    command: str
    p: int | None = None
    n: int | None = None
    q: int | None = None
    k: int | None = None
    max_k: int | None = None
    input: str | None = None
    symbols: str | None = None
    json: bool = False
    jobs: int = 1
    seed: int = 0
    count: int = 1
    cap: int = DEFAULT_CAP
    engine: str = "fast"
    greedy: bool = False
    out: str | None = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> RunConfig:
        known = {f for f in cls.__dataclass_fields__}
        values = {k: v for k, v in vars(args).items() if k in known and v is not None}
        if getattr(args, "cap_override", None) is not None:
            values["cap"] = args.cap_override
        return cls(**values)


def _load(cfg: RunConfig) -> PeriodicSequence:
    if cfg.symbols is not None:
        text = cfg.symbols
    elif cfg.input in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            text = Path(cfg.input).read_text(encoding="utf-8")
        except OSError as exc:
            raise CliError(f"cannot read {cfg.input}: {exc.strerror}", EXIT_MALFORMED)
    return parse_sequence(text, cfg.p, cfg.n, cfg.q)


def _emit(text: str = ""):
    sys.stdout.write(text + "\n")


def cmd_validate(cfg: RunConfig) -> int:
    if None in (cfg.p, cfg.n, cfg.q):
        raise CliError("validate needs --p, --n and --q", EXIT_INVALID)
    params = validate_params(cfg.p, cfg.n, cfg.q)
    _emit(f"valid: {params} N={params.N}")
    return EXIT_OK


def cmd_lc(cfg: RunConfig) -> int:
    _emit(str(wxc_lc(_load(cfg))))
    return EXIT_OK


def cmd_klc(cfg: RunConfig) -> int:
    s = _load(cfg)
    value, trace = k_error_lc(s, cfg.k, greedy=cfg.greedy)
    if cfg.json:
        _emit(json.dumps(trace.to_dict(s.params), indent=2))
    else:
        _emit(str(value))
    return EXIT_OK


def cmd_oracle(cfg: RunConfig) -> int:
    s = _load(cfg)
    result = brute_force_klc(s, cfg.k, parallelism=cfg.jobs, cap=cfg.cap)
    if cfg.json:
        payload = {
            "k": result.k,
            "klc": result.klc,
            "candidates_examined": result.candidates_examined,
            "witness": {"positions": list(result.witness.positions), "deltas": list(result.witness.deltas)},
            "per_weight": list(result.per_weight),
        }
        _emit(json.dumps(payload, indent=2))
    else:
        _emit(str(result.klc))
        _emit(f"{result.candidates_examined} candidates")
    return EXIT_OK


def cmd_spectrum(cfg: RunConfig) -> int:
    s = _load(cfg)
    rows = klc_spectrum(s, cfg.max_k, use_fast=cfg.engine == "fast", parallelism=cfg.jobs, cap=cfg.cap)
    for k, value in rows:
        _emit(f"{k}\t{value}")
    return EXIT_OK


def cmd_gen(cfg: RunConfig) -> int:
    if None in (cfg.p, cfg.n, cfg.q):
        raise CliError("gen needs --p, --n and --q", EXIT_INVALID)
    params = validate_params(cfg.p, cfg.n, cfg.q)
    out_dir = Path(cfg.out) if cfg.out else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    for i in range(cfg.count):
        seed = cfg.seed + i
        s = random_sequence(params, seed)
        text = f"# {params} seed={seed}\n" + s.to_text(header=False)
        if out_dir:
            (out_dir / f"seq_{i:04d}.txt").write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text if i == 0 else "\n" + text)
    return EXIT_OK


COMMANDS = {
    "validate": cmd_validate,
    "lc": cmd_lc,
    "klc": cmd_klc,
    "oracle": cmd_oracle,
    "spectrum": cmd_spectrum,
    "gen": cmd_gen,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kerrlc",
        description="Linear and k-error linear complexity of period-2p^n sequences over GF(q).",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def params_flags(p):
        p.add_argument("--p", type=int, help="odd prime p (overrides file header)")
        p.add_argument("--n", type=int, help="period exponent n, N = 2p^n")
        p.add_argument("--q", type=int, help="field size, an odd prime primitive root mod p^2")

    def input_flags(p):
        p.add_argument("input", nargs="?", help="sequence file ('-' or omitted: stdin)")
        p.add_argument("--symbols", help="inline sequence text instead of a file")
        params_flags(p)

    p = sub.add_parser("validate", help="check (p, n, q)")
    params_flags(p)

    p = sub.add_parser("lc", help="linear complexity")
    input_flags(p)

    p = sub.add_parser("klc", help="k-error linear complexity")
    input_flags(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true", help="print the decision trace as JSON")
    p.add_argument("--greedy", action="store_true", help="never compare PlusOnly against MinusOnly")

    p = sub.add_parser("oracle", help="exhaustive k-error linear complexity")
    input_flags(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cap-override", type=int, help=f"candidate cap (default {DEFAULT_CAP})")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("spectrum", help="k-error linear complexity for k = 0..max-k")
    input_flags(p)
    p.add_argument("--max-k", type=int, required=True)
    p.add_argument("--engine", choices=("fast", "oracle"), default="fast")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cap-override", type=int)

    p = sub.add_parser("gen", help="write pseudo-random sequence files")
    params_flags(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--out", help="directory for seq_NNNN.txt files (default: stdout)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8", line_buffering=True)
    cfg = RunConfig.from_args(args)
    for name in ("k", "max_k"):
        value = getattr(cfg, name)
        if value is not None and value < 0:
            print(f"error: --{name.replace('_', '-')} must be nonnegative", file=sys.stderr)
            return EXIT_INVALID
    if cfg.jobs < 1:
        print("error: --jobs must be positive", file=sys.stderr)
        return EXIT_INVALID
    try:
        return COMMANDS[cfg.command](cfg)
    except SequenceFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except (ParamsError, CandidateCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
