import itertools
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fermat_ci.group import UsageError
from fermat_ci.involution import (
    defect,
    involution_scan,
    min_defect,
    plus_minus_dims,
    scan_holds,
)


def count_monomials(n1, n2, d):
    """Oracle: sort degree-d monomials by parity of the V_- degree."""
    e = [0, 0]
    for mono in itertools.combinations_with_replacement(range(n1 + n2), d):
        e[sum(1 for v in mono if v >= n1) % 2] += 1
    return tuple(e)


def naive_min(n, r, d):
    values = []
    for n1 in range(1, n + 1):
        n2 = n + 1 - n1
        e1, e2 = count_monomials(n1, n2, d)
        for f1 in range(max(0, r - e2), min(r, e1) + 1):
            f2 = r - f1
            values.append(f2 * (e1 - f1) + f1 * (e2 - f2) - 2 * n1 * n2)
    return min(values)


@pytest.mark.parametrize("args,expected", [((2, 2, 3), (10, 10)), ((2, 2, 2), (6, 4)), ((1, 1, 2), (2, 1))])
def test_plus_minus_examples(args, expected):
    assert plus_minus_dims(*args) == expected == count_monomials(*args)


@given(st.integers(1, 5), st.integers(1, 5), st.integers(1, 6))
def test_plus_minus_matches_counting(n1, n2, d):
    e = plus_minus_dims(n1, n2, d)
    assert e == count_monomials(n1, n2, d)
    assert sum(e) == comb(n1 + n2 - 1 + d, d)


def test_min_defect_examples():
    res = min_defect(3, 2, 3)
    assert (res.minimum, res.argmin) == (8, (1, 3, 0, 2))
    assert min_defect(3, 2, 2).minimum == 0
    assert min_defect(4, 3, 2).minimum == 4
    assert min_defect(4, 2, 3).positive


@pytest.mark.parametrize("n,r,d", [(n, r, d) for n in range(3, 7) for r in range(1, n) for d in range(2, 6)])
def test_min_defect_matches_naive(n, r, d):
    res = min_defect(n, r, d)
    assert res.minimum == naive_min(n, r, d)
    n1, n2, f1, f2 = res.argmin
    e1, e2 = plus_minus_dims(n1, n2, d)
    assert n1 + n2 == n + 1 and f1 + f2 == r
    assert 0 <= f1 <= e1 and 0 <= f2 <= e2
    assert defect(n1, n2, e1, e2, f1, f2) == res.minimum


@given(st.integers(1, 5), st.integers(1, 5), st.integers(2, 5), st.integers(0, 6), st.integers(0, 6))
def test_swap_symmetry(n1, n2, d, f1, f2):
    e1, e2 = plus_minus_dims(n1, n2, d)
    assert defect(n1, n2, e1, e2, f1, f2) == defect(n2, n1, e2, e1, f2, f1)
    if d % 2 == 1:
        # odd d: V_+ and V_- trade places
        assert plus_minus_dims(n2, n1, d) == (e2, e1)


def test_scan():
    rows = involution_scan(5, 4)
    assert scan_holds(rows)
    controls = [row for row in rows if not row.hypothesis]
    assert any((row.n, row.r, row.d, row.minimum) == (3, 2, 2, 0) for row in controls)
    with pytest.raises(UsageError):
        involution_scan(2, 4)


def test_plane_cubic_control():
    assert min_defect(2, 1, 3).minimum == 0
