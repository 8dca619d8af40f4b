"""Linear and k-error linear complexity of period-2p^n sequences over GF(q)."""

from kerrlc.klc import CostTable, KlcTrace, LevelDecision, k_error_lc
from kerrlc.lc import bm_lc, wxc_lc
from kerrlc.oracle import OracleResult, brute_force_klc, error_pattern_count, klc_spectrum
from kerrlc.params import SequenceParams, validate_params
from kerrlc.sequence import ErrorPattern, PeriodicSequence, apply_errors, hamming_weight, random_sequence

__all__ = [
    "CostTable",
    "ErrorPattern",
    "KlcTrace",
    "LevelDecision",
    "OracleResult",
    "PeriodicSequence",
    "SequenceParams",
    "apply_errors",
    "bm_lc",
    "brute_force_klc",
    "error_pattern_count",
    "hamming_weight",
    "k_error_lc",
    "klc_spectrum",
    "random_sequence",
    "validate_params",
    "wxc_lc",
]
