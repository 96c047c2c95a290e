from fractions import Fraction

import pytest

from asm_hyperdet.arith.rational_function import specialize
from asm_hyperdet.asm.alternating_sign import Asm
from asm_hyperdet.detlib.determinants import det_classical
from asm_hyperdet.hyper.hyperdet_solver import (
    PhiConvention,
    cayley_hyperdet,
    lambda_hyperdet,
    phi,
    solve_lambda_hyperdet,
)
from asm_hyperdet.hyper.hypermatrix import (
    HyperMatrix,
    HypermatrixError,
    contract_slot,
    matrix_as_hypermatrix,
    random_hypermatrix,
)
from asm_hyperdet.utils.errors import BudgetExceededError, InputFormatError

IDENTITY_3 = Asm(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
Q3 = Asm(((0, 1, 0), (1, -1, 1), (0, 1, 0)))


def test_shape_validation():
    with pytest.raises(HypermatrixError):
        HyperMatrix(2, 3, entries={})
    with pytest.raises(HypermatrixError):
        HyperMatrix(2, 2, entries={(1, 3): Fraction(1)})
    with pytest.raises(HypermatrixError):
        HyperMatrix(2, 2, entries={(1, 1): 0.5})
    with pytest.raises(HypermatrixError):
        HyperMatrix(2, 2)


def test_missing_entries_read_as_zero():
    matrix = HyperMatrix(2, 2, entries={(1, 1): 3})

    assert matrix[(1, 1)] == 3
    assert matrix[(2, 1)] == 0


def test_json_reader_and_writer():
    payload = {"n": 2, "dim": 2, "entries": [{"index": [1, 1], "value": "3/2"}, {"index": [2, 2], "value": "q"}]}

    matrix = HyperMatrix.from_json(payload)

    assert matrix[(1, 1)] == Fraction(3, 2)
    assert HyperMatrix.from_json(matrix.to_json()).entries == matrix.entries
    with pytest.raises(InputFormatError):
        HyperMatrix.from_json({"n": 2, "dim": 2, "entries": [{"index": [3, 1], "value": "1"}]})
    with pytest.raises(InputFormatError):
        HyperMatrix.from_json({"dim": 2})


def test_cayley_of_a_matrix_is_its_determinant():
    rows = [[2, 1, 0], [1, 3, 1], [0, 1, 4]]

    assert cayley_hyperdet(matrix_as_hypermatrix(rows)) == det_classical(rows) == 18


def test_cayley_pinned_and_full_sums_agree(rng):
    matrix = random_hypermatrix(3, 4, rng)

    assert cayley_hyperdet(matrix) == cayley_hyperdet(matrix, fix_first=False)


def test_phi_on_the_3x3_non_permutation_matrix(lam):
    assert phi([IDENTITY_3, IDENTITY_3], lam, PhiConvention.PROOF_CONSISTENT) == 1
    assert phi([IDENTITY_3, Q3], lam, PhiConvention.PROOF_CONSISTENT) == lam**2 - lam
    assert phi([IDENTITY_3, Q3], lam, PhiConvention.PAPER_LITERAL) == lam**2 - lam**3


@pytest.mark.parametrize("convention", list(PhiConvention))
def test_phi_vanishes_for_a_non_permutation_first_slot(convention, lam):
    assert phi([Q3, IDENTITY_3], lam, convention) == 0
    assert phi([Q3, IDENTITY_3, IDENTITY_3, IDENTITY_3], lam, convention) == 0


def test_phi_needs_an_even_tuple(lam):
    with pytest.raises(ValueError):
        phi([IDENTITY_3], lam, PhiConvention.PROOF_CONSISTENT)


def test_convention_parsing():
    assert PhiConvention.parse("paper") is PhiConvention.PAPER_LITERAL
    assert PhiConvention.parse("Proof") is PhiConvention.PROOF_CONSISTENT
    with pytest.raises(ValueError):
        PhiConvention.parse("both")


@pytest.mark.parametrize("convention", list(PhiConvention))
@pytest.mark.parametrize("n, dim", [(2, 2), (2, 4), (3, 2)])
def test_lambda_hyperdet_tends_to_cayley(convention, n, dim, rng, lam):
    matrix = random_hypermatrix(n, dim, rng)

    value = lambda_hyperdet(matrix, lam, convention)

    assert specialize(value, 1) == cayley_hyperdet(matrix)
    assert lambda_hyperdet(matrix, 1, convention) == cayley_hyperdet(matrix)


def test_full_first_slot_changes_nothing(rng, lam):
    matrix = random_hypermatrix(3, 2, rng)

    assert lambda_hyperdet(matrix, lam, "proof", full_first_slot=True) == lambda_hyperdet(matrix, lam, "proof")


def test_budget_is_enforced(rng, lam):
    matrix = random_hypermatrix(3, 4, rng)

    with pytest.raises(BudgetExceededError) as info:
        lambda_hyperdet(matrix, lam, "proof", budget=10)
    assert "[BUDGET_EXCEEDED]" in str(info.value)
    with pytest.raises(BudgetExceededError):
        cayley_hyperdet(matrix, budget=10)


def test_lambda_factorial_pole(rng):
    matrix = random_hypermatrix(2, 2, rng)

    with pytest.raises(ZeroDivisionError):
        solve_lambda_hyperdet(matrix, -1, "proof")


def test_trace_records_the_summation(rng, lam):
    _, trace = solve_lambda_hyperdet(random_hypermatrix(2, 4, rng), lam, "paper")

    assert trace["convention"] == "paper"
    assert trace["tuples"] == 2 * 2**3
    assert trace["dim"] == 4


def test_slot_action_scales_by_the_determinant(rng):
    matrix = random_hypermatrix(2, 4, rng)
    b = [[Fraction(2), Fraction(1)], [Fraction(-1), Fraction(3)]]
    base = cayley_hyperdet(matrix)

    for slot in range(1, 5):
        assert cayley_hyperdet(contract_slot(b, matrix, slot)) == det_classical(b) * base


def test_slot_action_rejects_bad_slots(rng):
    matrix = random_hypermatrix(2, 2, rng)

    with pytest.raises(HypermatrixError):
        contract_slot([[1, 0], [0, 1]], matrix, 3)
    with pytest.raises(HypermatrixError):
        contract_slot([[1]], matrix, 1)


def test_cayley_of_a_diagonal_hypermatrix_is_the_diagonal_product(q):
    d1, d2 = Fraction(3, 2), 1 + q
    matrix = HyperMatrix(2, 4, entries={(1, 1, 1, 1): d1, (2, 2, 2, 2): d2})

    assert cayley_hyperdet(matrix) == d1 * d2
    assert cayley_hyperdet(matrix, fix_first=False) == d1 * d2


def test_cayley_of_the_all_ones_hypermatrix_vanishes():
    matrix = HyperMatrix.from_function(2, 4, lambda index: Fraction(1))

    assert cayley_hyperdet(matrix) == 0
