import pytest

from asm_hyperdet.dyson.dyson_solver import (
    DysonSizeError,
    constant_term,
    dyson_coefficient,
    dyson_prefactor,
    expand_F,
    solve_dyson,
    truncated_G,
    truncation_bound,
)
from asm_hyperdet.symfun.macdonald import macdonald_Q, one_row_g
from asm_hyperdet.symfun.partitions import Partition
from asm_hyperdet.symfun.symmetric import elementary
from asm_hyperdet.utils.errors import BudgetExceededError


def test_two_variable_product_expansion(q):
    f = expand_F(2, 1)

    assert len(f) == 3
    assert f.coefficient((0, 0)) == 1 + q
    assert f.coefficient((1, -1)) == -1
    assert f.coefficient((-1, 1)) == -q


@pytest.mark.parametrize("s, m", [(2, 1), (2, 2), (3, 1)])
def test_constant_term_is_the_prefactor(s, m):
    assert constant_term(s, m) == dyson_prefactor(s, m)


def test_prefactor_tends_to_a_multinomial():
    assert dyson_prefactor(2, 2).specialize(1) == 6
    assert dyson_prefactor(3, 1).specialize(1) == 6


def test_single_variable_reduces_to_one_row():
    assert dyson_coefficient(2, 1, 1) == one_row_g(2, 1)
    assert dyson_coefficient(3, 1, 2) == one_row_g(3, 2)


def test_two_by_one_rectangle(q):
    assert dyson_coefficient(1, 2, 1) == elementary(2) * (1 + q)


def test_extraction_matches_the_rectangular_macdonald_function():
    assert dyson_coefficient(1, 2, 2) == macdonald_Q(Partition((1, 1)), 2) * dyson_prefactor(2, 2)


def test_truncation_and_trace():
    assert truncation_bound(1, 3, 2) == 5

    value, trace = solve_dyson(1, 2, 1)

    assert trace["truncation"] == 2
    assert trace["f_terms"] == 3
    assert trace["contributing_terms"] == 3
    assert value.degree == 2


def test_truncated_generating_series():
    g = truncated_G(2, 1, 1)

    assert len(g) == 4
    assert g.coefficient((1, 1)) == one_row_g(1, 1) ** 2


def test_size_limits_and_budget():
    with pytest.raises(ValueError):
        dyson_coefficient(1, 5, 1)
    with pytest.raises(ValueError):
        dyson_coefficient(-1, 2, 1)
    with pytest.raises(BudgetExceededError):
        expand_F(3, 2, budget=10)


@pytest.mark.parametrize("k, s, m", [(1, 2, 1), (2, 2, 1), (1, 2, 2)])
def test_deeper_truncation_changes_nothing(k, s, m):
    assert dyson_coefficient(k, s, m, dmax=truncation_bound(k, s, m) + 2) == dyson_coefficient(k, s, m)


@pytest.mark.parametrize("s, m", [(2, 1), (2, 2), (3, 1)])
def test_product_terms_are_balanced(s, m):
    assert all(sum(exps) == 0 for exps, _ in expand_F(s, m).items())


def test_size_limit_names_the_bounds():
    with pytest.raises(DysonSizeError) as info:
        dyson_coefficient(1, 2, 1, max_s=1)

    assert "[DYSON_LIMIT]" in str(info.value)
    assert info.value.s == 2
