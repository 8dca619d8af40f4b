import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kerrlc.params import NotPrimitiveRootError, validate_params
from kerrlc.sequence import (
    ErrorPattern,
    PeriodicSequence,
    SequenceFormatError,
    SplitMix64,
    apply_errors,
    hamming_weight,
    parse_sequence,
    random_sequence,
)

P513 = validate_params(5, 1, 3)
P315 = validate_params(3, 1, 5)


def test_apply_empty_pattern_is_identity():
    s = random_sequence(P513, 1)
    assert apply_errors(s, ErrorPattern()) == s


def test_apply_single_error():
    params = validate_params(5, 0, 3)
    s = PeriodicSequence(params, (1, 0))
    assert apply_errors(s, ErrorPattern((0,), (2,))).symbols == (0, 0)


def test_apply_rejects_out_of_range_position():
    s = random_sequence(P513, 1)
    with pytest.raises(IndexError):
        apply_errors(s, ErrorPattern((10,), (1,)))


def test_error_pattern_validation():
    with pytest.raises(ValueError):
        ErrorPattern((1, 1), (1, 1))
    with pytest.raises(ValueError):
        ErrorPattern((1,), (0,))
    with pytest.raises(ValueError):
        ErrorPattern((1, 2), (1,))


@st.composite
def seq_and_pattern(draw):
    params = draw(st.sampled_from([P513, P315, validate_params(3, 2, 5)]))
    s = random_sequence(params, draw(st.integers(0, 2**64 - 1)))
    positions = sorted(draw(st.sets(st.integers(0, params.N - 1), max_size=params.N)))
    deltas = [draw(st.integers(1, params.q - 1)) for _ in positions]
    return s, ErrorPattern(tuple(positions), tuple(deltas))


@given(seq_and_pattern())
def test_apply_errors_is_invertible(case):
    s, e = case
    assert apply_errors(apply_errors(s, e), e.negated(s.q)) == s


@given(seq_and_pattern())
def test_weight_changes_by_at_most_pattern_size(case):
    s, e = case
    assert abs(hamming_weight(apply_errors(s, e)) - hamming_weight(s)) <= e.weight


@given(seq_and_pattern())
def test_weight_of_errors_on_zero(case):
    s, e = case
    assert hamming_weight(apply_errors(PeriodicSequence.zeros(s.params), e)) == e.weight


def test_hamming_weight_examples(example1):
    assert hamming_weight(PeriodicSequence.zeros(P513)) == 0
    assert hamming_weight(PeriodicSequence(P513, (1,) * 10)) == 10
    assert hamming_weight(example1) == 37


def test_splitmix64_reference_values():
    # first outputs for seed 0 from the reference C implementation
    rng = SplitMix64(0)
    assert [rng.next() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]


def test_random_sequence_is_deterministic():
    assert random_sequence(P513, 42) == random_sequence(P513, 42)


def test_different_seeds_differ():
    for seed in range(100):
        assert random_sequence(P513, 2 * seed) != random_sequence(P513, 2 * seed + 1)


def test_symbol_frequencies_are_uniform():
    params = validate_params(5, 2, 3)
    trials = 400  # N * trials = 20000
    counts = [0] * params.q
    for seed in range(trials):
        for v in random_sequence(params, seed).symbols:
            counts[v] += 1
    total = params.N * trials
    prob = 1 / params.q
    sigma = math.sqrt(total * prob * (1 - prob))
    for c in counts:
        assert abs(c - total * prob) < 5 * sigma


def test_parse_header_and_symbols(example1):
    text = "# p=5 n=2 q=3\n# comment\n" + " ".join(map(str, example1.symbols[:25])) + "\n"
    text += ",".join(map(str, example1.symbols[25:])) + "\n"
    assert parse_sequence(text) == example1


def test_flags_override_header():
    s = parse_sequence("# p=5 n=1 q=3\n1 2 0 1 2 0\n", p=3, n=1, q=5)
    assert s.params == P315


def test_parse_reports_position_of_bad_token():
    with pytest.raises(SequenceFormatError) as info:
        parse_sequence("# p=3 n=1 q=5\n1 2 3\n4 x 0\n")
    assert (info.value.line, info.value.column) == (3, 3)


def test_parse_rejects_symbol_outside_field():
    with pytest.raises(SequenceFormatError, match="outside"):
        parse_sequence("1 2 3 4 5 0", p=3, n=1, q=5)


def test_parse_rejects_wrong_length():
    with pytest.raises(SequenceFormatError, match="expected 6"):
        parse_sequence("1 2 3", p=3, n=1, q=5)


def test_parse_requires_parameters():
    with pytest.raises(SequenceFormatError, match="missing"):
        parse_sequence("1 2 3 4 0 1")


def test_parse_validates_parameters():
    with pytest.raises(NotPrimitiveRootError):
        parse_sequence("1 2 3 4 0 1", p=3, n=1, q=7)


def test_text_round_trip():
    s = random_sequence(validate_params(3, 2, 5), 9)
    assert parse_sequence(s.to_text()) == s
