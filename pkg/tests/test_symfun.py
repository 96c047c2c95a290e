import json
from fractions import Fraction

import pytest

from asm_hyperdet.symfun.cache import MacdonaldCache
from asm_hyperdet.symfun.macdonald import (
    DegreeCeilingError,
    b_lambda,
    clear_memory_cache,
    macdonald_P,
    macdonald_Q,
    one_row_g,
    pole_free_at,
)
from asm_hyperdet.symfun.partitions import Partition, partitions_of
from asm_hyperdet.symfun.symmetric import (
    SymFun,
    complete_homogeneous,
    elementary,
    scalar_product_qt,
    schur_jacobi_trudi,
)
from asm_hyperdet.utils.errors import CacheError, InputFormatError


def P(*parts):
    return Partition(parts)


def test_partitions_in_increasing_lexicographic_order():
    assert partitions_of(4) == (P(1, 1, 1, 1), P(2, 1, 1), P(2, 2), P(3, 1), P(4))
    assert [len(partitions_of(n)) for n in range(7)] == [1, 1, 2, 3, 5, 7, 11]


def test_partition_statistics():
    shape = P(3, 1)

    assert shape.conjugate == P(2, 1, 1)
    assert shape.arm((1, 1)) == 2
    assert shape.leg((1, 1)) == 1
    assert P(2, 1, 1).z == 4
    assert Partition.parse("2,1").key() == "[2,1]"
    assert Partition.from_key("[2,1]") == P(2, 1)
    assert Partition.parse("") == P()


def test_dominance_order():
    assert P(3, 1).dominates(P(2, 2))
    assert P(2, 2).compare_dominance(P(3, 1)) == "dominated"
    assert P(3, 1, 1, 1).compare_dominance(P(2, 2, 2)) == "incomparable"


def test_invalid_partitions():
    with pytest.raises(ValueError):
        P(1, 2)
    with pytest.raises(ValueError):
        Partition.parse("2,x")


def test_power_sum_to_monomial():
    p11 = SymFun.power_sum(P(1, 1)).to_basis("m")

    assert p11.coefficient(P(2)) == 1
    assert p11.coefficient(P(1, 1)) == 2


def test_classical_families():
    h1, h2 = complete_homogeneous(1), complete_homogeneous(2)

    assert elementary(2) == SymFun.monomial(P(1, 1))
    assert h1**2 - h2 == elementary(2)
    assert elementary(2).to_json()["coefficients"] == {"[1,1]": "1/2", "[2]": "-1/2"}


def test_jacobi_trudi():
    assert schur_jacobi_trudi(P(1, 1)) == elementary(2)
    assert schur_jacobi_trudi(P(2)) == complete_homogeneous(2)
    expected = SymFun(3, {P(1, 1, 1): Fraction(1, 3), P(3): Fraction(-1, 3)})
    assert schur_jacobi_trudi(P(2, 1)) == expected


def test_scalar_product_at_t_equal_q():
    p11 = SymFun.power_sum(P(1, 1))

    assert scalar_product_qt(p11, p11, 1) == 2
    assert scalar_product_qt(p11, SymFun.power_sum(P(2)), 1) == 0


def test_symfun_text_and_json():
    value = elementary(2)

    assert value.to_string() == "-1/2*p(2) + 1/2*p(1,1)"
    assert SymFun.from_json(value.to_json()) == value
    with pytest.raises(InputFormatError):
        SymFun.from_json({"degree": 2, "coefficients": {"[3]": "1"}})


def test_macdonald_at_t_equal_q_are_schur_functions(cache):
    assert macdonald_Q(P(1, 1), 1, cache) == elementary(2)
    assert macdonald_P(P(2), 1) == complete_homogeneous(2)
    for shape in partitions_of(4):
        assert macdonald_P(shape, 1) == schur_jacobi_trudi(shape)


def test_macdonald_p_is_unitriangular():
    value = macdonald_P(P(2, 1), 2, basis="m")

    assert value.coefficient(P(2, 1)) == 1
    assert value.coefficient(P(3)) == 0
    assert value.coefficient(P(1, 1, 1)) != 0


def test_macdonald_orthogonality_and_duality():
    shapes = partitions_of(3)
    for i, left in enumerate(shapes):
        assert scalar_product_qt(macdonald_P(left, 2), macdonald_Q(left, 2), 2) == 1
        for right in shapes[i + 1 :]:
            assert scalar_product_qt(macdonald_P(left, 2), macdonald_P(right, 2), 2) == 0


def test_b_lambda(q):
    assert b_lambda(P(1, 1), 1) == 1
    assert b_lambda(P(1), 2) == 1 + q


def test_one_row_functions():
    assert one_row_g(-1, 2) == SymFun.zero()
    assert one_row_g(0, 2) == SymFun.one()
    assert one_row_g(3, 2) == macdonald_Q(P(3), 2)
    for j in range(1, 5):
        assert one_row_g(j, 1) == complete_homogeneous(j)


def test_pole_free_at_one():
    assert pole_free_at(macdonald_Q(P(2, 2), 2))
    assert pole_free_at(one_row_g(3, 3))


def test_degree_ceiling():
    with pytest.raises(DegreeCeilingError) as info:
        macdonald_P(P(5, 4), 1, ceiling=8)
    assert "[DEGREE_CEILING]" in str(info.value)


def test_cache_stores_the_requested_partition(cache):
    value = macdonald_Q(P(2, 1), 2, cache)

    rows = cache.stat()
    assert [(row["m"], row["basis"], row["partition"]) for row in rows] == [(2, "p", "[2,1]")]

    clear_memory_cache()
    stored = cache.load(2)
    assert stored[P(2, 1)] == macdonald_P(P(2, 1), 2)
    assert macdonald_Q(P(2, 1), 2, cache) == value


def test_cache_export_and_clear(cache, tmp_path):
    macdonald_P(P(1, 1), 1, cache)
    macdonald_P(P(2), 1, cache)

    documents = cache.export(tmp_path / "export.json")
    assert len(documents) == 1
    assert documents[0]["m"] == 1 and documents[0]["basis"] == "p"
    assert list(documents[0]["entries"]) == ["[1,1]", "[2]"]
    assert json.loads((tmp_path / "export.json").read_text(encoding="utf-8")) == documents

    assert cache.clear() == 1
    assert cache.stat() == []


def test_corrupt_cache_file(cache_dir):
    cache_dir.mkdir(parents=True)
    (cache_dir / "macdonald_P_m1_p.json").write_text("{not json", encoding="utf-8")

    with pytest.raises(CacheError):
        MacdonaldCache(cache_dir).load(1)
