import math

import pytest

import hamrecon as hr
from hamrecon.krawtchouk import KrawtchoukTable


def test_fixed_values():
    # P_0 is identically 1
    for q in (2, 3, 4, 5):
        for t in range(6):
            assert hr.krawtchouk_value(q, 0, t, 5) == 1
    # direct evaluation: j=0 gives 2*3, j=1 gives -1
    assert hr.krawtchouk_value(3, 1, 1, 4) == 5
    # only j=0 survives at t=0
    for q in (2, 3, 5):
        for i in range(7):
            assert hr.krawtchouk_value(q, i, 0, 6) == (q - 1) ** i * math.comb(6, i)


def test_generating_coefficients_examples():
    assert hr.generating_coefficients(3, 0, 2) == [1, 4, 4]  # (x + 2y)^2
    assert hr.generating_coefficients(3, 1, 4)[1] == 5


def test_generating_agrees_with_defining_sum():
    for q in (2, 3, 4, 5):
        for N in range(9):
            for t in range(N + 1):
                assert hr.generating_coefficients(q, t, N) == hr.krawtchouk_row(q, t, N)


def test_argument_validation():
    with pytest.raises(ValueError):
        hr.krawtchouk_value(1, 0, 0, 2)
    with pytest.raises(ValueError):
        hr.krawtchouk_value(3, 3, 0, 2)
    with pytest.raises(ValueError):
        hr.krawtchouk_value(3, 0, 3, 2)
    with pytest.raises(ValueError):
        hr.krawtchouk_value(3, 0, 0, -1)


def test_eigenvalue_index_maps():
    assert hr.eigenvalue_of_index(3, 4, 0).eigenvalue == 8
    assert hr.eigenvalue_of_index(3, 4, 1).eigenvalue == 5
    with pytest.raises(ValueError):
        hr.index_of_eigenvalue(3, 4, 7)  # 8 - 7 = 1 not divisible by 3
    with pytest.raises(ValueError):
        hr.eigenvalue_of_index(3, 4, 5)
    for q, n in ((3, 4), (4, 6), (5, 3)):
        for h in range(n + 1):
            idx = hr.eigenvalue_of_index(q, n, h)
            back = hr.index_of_eigenvalue(q, n, idx.eigenvalue)
            assert back == idx
            # the adjacency matrix is the first distance matrix
            assert hr.krawtchouk_value(q, 1, h, n) == idx.eigenvalue


def test_table_invariants():
    table = KrawtchoukTable.build(3, 6)
    for t in range(7):
        assert table[0, t] == 1
    for i in range(7):
        assert table[i, 0] == 2**i * math.comb(6, i)
        for t in range(7):
            assert table[i, t] == hr.krawtchouk_value(3, i, t, 6)


def test_everything_is_int():
    for q in (2, 5):
        for i in range(5):
            for t in range(5):
                assert type(hr.krawtchouk_value(q, i, t, 4)) is int
    assert all(type(c) is int for c in hr.generating_coefficients(5, 2, 7))
