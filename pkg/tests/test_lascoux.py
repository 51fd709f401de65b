import pytest

from cycledeg.arith import binomial
from cycledeg.lascoux import psi, psi_halfsum, psi_llt


@pytest.mark.parametrize("a, b, value", [(0, 1, 1), (1, 2, 3), (1, 3, 10), (2, 3, 10), (3, 4, 35), (1, 4, 25)])
def test_values(a, b, value):
    assert psi_halfsum(a, b) == value
    assert psi_llt(a, b) == value


def test_formulas_agree_up_to_forty():
    for b in range(1, 41):
        for a in range(b):
            assert psi_halfsum(a, b) == psi_llt(a, b)


def test_adjacent_index_is_half_central_binomial():
    for a in range(41):
        assert 2 * psi(a, a + 1) == binomial(2 * a + 2, a + 1)


def test_order_enforced():
    with pytest.raises(ValueError):
        psi(2, 2)
    with pytest.raises(ValueError):
        psi(-1, 2)
