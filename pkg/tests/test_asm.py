from itertools import permutations

import pytest

from asm_hyperdet.asm.alternating_sign import (
    Asm,
    AsmError,
    count_formula,
    enumerate_asms,
    is_alternating_sign_matrix,
    permutation_inversions,
    summarize_asms,
)
from asm_hyperdet.utils.errors import InputFormatError

Q3 = ((0, 1, 0), (1, -1, 1), (0, 1, 0))


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 2), (3, 7), (4, 42), (5, 429), (6, 7436)])
def test_count_formula(n, expected):
    assert count_formula(n) == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_enumeration_matches_formula_without_duplicates(n):
    matrices = list(enumerate_asms(n))

    assert len(matrices) == count_formula(n)
    assert len({asm.rows for asm in matrices}) == len(matrices)


def test_enumerated_matrices_are_valid():
    assert all(is_alternating_sign_matrix(asm.rows) for asm in enumerate_asms(4))


def test_statistics_of_the_3x3_non_permutation_matrix():
    asm = Asm(Q3)

    assert asm.inversion_number == 2
    assert asm.negative_count == 1
    assert asm.generalized_permutation == (2, 2, 2)
    assert not asm.is_permutation
    assert asm.transpose() == asm


def test_generalized_permutation_entries_stay_in_range():
    for asm in enumerate_asms(5):
        assert all(1 <= value <= 5 for value in asm.generalized_permutation)


def test_inversion_number_reduces_to_permutation_inversions():
    for perm in permutations(range(1, 5)):
        asm = Asm.from_permutation(perm)
        assert asm.is_permutation
        assert asm.inversion_number == permutation_inversions(perm)
        assert asm.generalized_permutation == perm


@pytest.mark.parametrize(
    "rows",
    [
        ((1, 1), (0, 0)),
        ((0, 1), (1, -1)),
        ((2, -1), (-1, 2)),
    ],
)
def test_invalid_matrices_are_rejected(rows):
    assert not is_alternating_sign_matrix(rows)
    with pytest.raises(AsmError):
        Asm(rows)


def test_non_square_input_is_an_error():
    with pytest.raises(AsmError):
        is_alternating_sign_matrix(((1, 0), (0, 1), (0, 0)))


def test_enumeration_ceiling():
    with pytest.raises(AsmError) as info:
        list(enumerate_asms(8))

    assert "[ASM_CEILING]" in str(info.value)
    assert str(count_formula(8)) in str(info.value)


def test_json_round_trip_and_bad_payloads():
    asm = Asm(Q3)

    assert Asm.from_json(asm.to_json()) == asm
    with pytest.raises(InputFormatError):
        Asm.from_json({"rows": "nope"})
    with pytest.raises(InputFormatError):
        Asm.from_json({"n": 2, "rows": [[1]]})


def test_summary_of_alt_3():
    result, trace = summarize_asms(3)

    assert result["count"] == 7
    assert result["inversion_distribution"] == {0: 1, 1: 2, 2: 3, 3: 1}
    assert result["negative_distribution"] == {0: 6, 1: 1}
    assert trace["count_matches_formula"]
