import itertools

import pytest

from fermat_ci.cover import wedge_dimension
from fermat_ci.faithful import (
    FAITHFUL,
    NOT_FAITHFUL,
    brute_force_faithful,
    contributing_characters,
    faithfulness_certificate,
    permutation_witness,
    quadric_verdict,
)
from fermat_ci.group import UsageError, characters, conjugate_character, evaluate_character

GRID = [(n, r, d) for n in range(3, 6) for r in range(2, n) for d in range(2, 5)]


def naive_verdict(n, r, d):
    """Loop over raw tuples, counting support by hand."""
    chars = []
    for head in itertools.product(range(d), repeat=n):
        a = head + ((-sum(head)) % d,)
        b = sum(1 for x in a if x)
        if b - 2 >= n - r and b > 0:
            chars.append(a)
    for tail in itertools.product(range(d), repeat=n):
        if not any(tail):
            continue
        g = (0,) + tail
        if all(sum(x * y for x, y in zip(a, g)) % d == 0 for a in chars):
            return NOT_FAITHFUL
    return FAITHFUL


def test_quadric_bullets():
    cert = quadric_verdict(5, 2)
    assert cert.verdict == NOT_FAITHFUL
    assert cert.witness.entries == (0, 1, 1, 0, 0, 0)
    assert quadric_verdict(5, 3).verdict == FAITHFUL
    assert quadric_verdict(4, 2).verdict == FAITHFUL
    with pytest.raises(UsageError):
        quadric_verdict(3, 3)


def test_certificate_examples():
    cert = faithfulness_certificate(3, 2, 3)
    assert cert.verdict == FAITHFUL
    assert [e.character.entries for e in cert.separating_set] == [
        (1, 1, 1, 0), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1)
    ]
    assert all(e.eigen_dim >= 1 for e in cert.separating_set)
    assert faithfulness_certificate(5, 2, 2).verdict == NOT_FAITHFUL
    assert faithfulness_certificate(4, 3, 2).verdict == FAITHFUL


def test_certificate_falls_back_to_next_t():
    # least t is 0 with s = 0, so chi_(s,t,i) has support n-1 and B-2 = 0
    cert = faithfulness_certificate(4, 2, 3)
    assert cert.verdict == FAITHFUL
    assert (cert.star.k, cert.star.s, cert.star.t) == (2, 2, 1)
    assert any("rejected" in line for line in cert.diagnostics)


@pytest.mark.parametrize("n,r,d", GRID)
def test_certificate_agrees_with_brute_force(n, r, d):
    cert = faithfulness_certificate(n, r, d)
    cert.check()
    verdict, witness = brute_force_faithful(n, r, d)
    assert cert.verdict == verdict == naive_verdict(n, r, d)
    assert (verdict == NOT_FAITHFUL) == (d == 2 and r == 2 and (n + 1) % 2 == 0)
    if witness is not None:
        assert not witness.is_identity()
        for chi in contributing_characters(n, r, d):
            assert evaluate_character(chi, witness) == 0


def test_brute_force_bound():
    with pytest.raises(UsageError, match="certificate"):
        brute_force_faithful(8, 2, 7)


def test_permutation_witness_examples():
    assert permutation_witness(3, 2, 3, (1, 0, 2, 3)).entries == (0, 1, 1, 1)
    assert permutation_witness(4, 3, 2, (1, 0, 2, 3, 4)).entries == (0, 1, 1, 1, 1)
    with pytest.raises(UsageError):
        permutation_witness(3, 2, 3, (0, 1, 2, 3))


@pytest.mark.parametrize("n,r,d", [(3, 2, 3), (4, 2, 2), (4, 3, 3), (5, 3, 2)])
def test_permutation_witness_all_perms(n, r, d):
    for tau in itertools.permutations(range(n + 1)):
        if tau == tuple(range(n + 1)):
            continue
        chi = permutation_witness(n, r, d, tau)
        assert wedge_dimension(chi, n, r) >= 1
        assert conjugate_character(chi, tau) != chi
        # nothing earlier in lexicographic order qualifies
        for other in characters(n, d):
            if other == chi:
                break
            assert not wedge_dimension(other, n, r) or conjugate_character(other, tau) == other
