from fractions import Fraction

import pytest

from cycledeg.divisors import (
    DivisorClass,
    from_s_basis,
    l_last_in_s_basis,
    relation_two_rhs,
    s_in_l_basis,
    to_s_basis,
    verify_relation_two,
)


def test_s_classes_in_l_basis():
    # S_1 = 2L_1 - L_2, S_{n-1} = -L_{n-2} + 2L_{n-1}.
    assert s_in_l_basis(4, 1).coeffs == (2, -1, 0)
    assert s_in_l_basis(4, 2).coeffs == (-1, 2, -1)
    assert s_in_l_basis(4, 3).coeffs == (0, -1, 2)


def test_last_hyperplane_class():
    for n in range(3, 12):
        assert to_s_basis(DivisorClass.L(n, n - 1)) == l_last_in_s_basis(n)
        assert from_s_basis(n, l_last_in_s_basis(n)) == DivisorClass.L(n, n - 1)


def test_relation_two_small_case():
    # n = 4, i = 1: (L_1 + S_2 + 2 S_3) / 3 = L_3.
    assert relation_two_rhs(4, 1) == DivisorClass.L(4, 3)
    # i = 0 is the expansion of L_{n-1} in the S-basis.
    assert relation_two_rhs(4, 0) == from_s_basis(4, [Fraction(1, 4), Fraction(2, 4), Fraction(3, 4)])


@pytest.mark.parametrize("n", range(3, 16))
def test_relation_two(n):
    assert all(verify_relation_two(n, i) for i in range(0, n - 1))


def test_bad_indices():
    with pytest.raises(ValueError):
        s_in_l_basis(4, 4)
    with pytest.raises(ValueError):
        DivisorClass.L(4, 5)
    with pytest.raises(ValueError):
        relation_two_rhs(4, 3)
    with pytest.raises(TypeError):
        DivisorClass.L(4, 1) + DivisorClass.L(5, 1)
