import itertools
from math import comb

import pytest

from fermat_ci.cover import (
    BranchData,
    branch_data,
    cover_summary,
    eigenspace_dimension,
    genus_riemann_hurwitz,
    primitive_decomposition,
)
from fermat_ci.group import CharacterVec, UsageError, characters, conjugate_character
from fermat_ci.hodge import MultiDegree, primitive_middle_betti


def test_branch_data_examples():
    bd = branch_data(CharacterVec(3, (1, 1, 1, 0)))
    assert (bd.e, bd.exponents) == (3, (1, 1, 1, 0))
    bd = branch_data(CharacterVec(4, (2, 2, 2, 0, 0, 2)))
    assert (bd.e, bd.exponents) == (2, (1, 1, 1, 0, 0, 1))
    bd = branch_data(CharacterVec(2, (1,) * 6))
    assert (bd.e, bd.exponents, bd.unbranched_at_infinity) == (2, (1,) * 6, True)


def test_branch_data_trivial():
    with pytest.raises(UsageError, match="no cover"):
        branch_data(CharacterVec(3, (0, 0, 0)))


def test_genus_examples():
    # smooth plane cubic y^3 = cubic in x
    assert genus_riemann_hurwitz(BranchData(3, (1, 1, 1, 0), True)) == 1
    # hyperelliptic with 2g+2 branch points has genus g
    assert genus_riemann_hurwitz(BranchData(2, (1,) * 6, True)) == 2
    assert genus_riemann_hurwitz(BranchData(2, (1, 1, 1, 1, 0, 0), True)) == 1


@pytest.mark.parametrize("g", range(2, 7))
def test_all_ones_quadric_character(g):
    chi = CharacterVec(2, (1,) * (2 * g))
    assert genus_riemann_hurwitz(branch_data(chi)) == g - 1
    assert eigenspace_dimension(chi) == 2 * g - 2


def test_eigenspace_examples():
    assert eigenspace_dimension(CharacterVec(3, (1, 1, 1, 0))) == 1
    assert eigenspace_dimension(CharacterVec(3, (0, 0, 0, 0))) == 0
    assert eigenspace_dimension(CharacterVec(2, (1,) * 6)) == 4


def test_displayed_variant_recorded():
    # exponent 2 at the last point: the displayed local term e/gcd(2, 3) = 3
    # exceeds the standard e - gcd(2, 3) = 2
    s = cover_summary(CharacterVec(3, (1, 1, 1, 1, 2)))
    assert s.genus == 3
    assert s.displayed_variant == 2 * s.genus - 2 + 1
    assert cover_summary(CharacterVec(3, (1, 1, 1, 0))).displayed_variant is None


@pytest.mark.parametrize("n,d", [(3, 3), (4, 2), (4, 3), (3, 5)])
def test_invariants_over_all_characters(n, d):
    tau = tuple(range(1, n + 1)) + (0,)
    for chi in characters(n, d):
        dim = eigenspace_dimension(chi)
        assert dim == eigenspace_dimension(conjugate_character(chi, tau))
        if not chi.is_trivial():
            s = cover_summary(chi)
            assert 2 * s.genus >= s.eigen_dim


def test_decomposition_examples():
    dec = primitive_decomposition(5, 2, 2)
    assert dec.total == 4
    assert [(c.entries, w) for c, w in dec.entries] == [((1,) * 6, 4)]
    assert primitive_decomposition(3, 2, 3).total == 20
    assert primitive_decomposition(3, 2, 2).total == 2


def test_decomposition_rejects_bad_parameters():
    with pytest.raises(UsageError):
        primitive_decomposition(3, 3, 2)
    with pytest.raises(UsageError):
        primitive_decomposition(2, 1, 3)


def test_decomposition_lex_order():
    dec = primitive_decomposition(4, 2, 3)
    keys = [c.entries for c, _ in dec.entries]
    assert keys == sorted(keys)


def test_decomposition_direct_sum_oracle():
    """Recount without the support histogram."""
    n, r, d = 4, 2, 3
    direct = 0
    for head in itertools.product(range(d), repeat=n):
        a = head + ((-sum(head)) % d,)
        support = sum(1 for x in a if x)
        if support:
            k = max(support - 2, 0)
            direct += comb(k, n - r) if k >= n - r else 0
    assert primitive_decomposition(n, r, d, materialize=False).total == direct


@pytest.mark.parametrize("n,r,d", [(n, r, d) for n in range(3, 7) for r in range(2, n) for d in range(2, 5)])
def test_matches_betti(n, r, d):
    assert primitive_decomposition(n, r, d, materialize=False).total == primitive_middle_betti(
        MultiDegree((d,) * r, n)
    )


def test_workers_give_same_total():
    from fermat_ci.cover import support_histogram

    assert support_histogram(5, 3, 1) == support_histogram(5, 3, 2)
