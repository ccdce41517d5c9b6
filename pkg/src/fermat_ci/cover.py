"""Cyclic covers of P^1 attached to characters, and the character-indexed
dimension count of primitive middle cohomology of X_{n,r,d}.

A nontrivial character (a_0, ..., a_n) mod d cuts out the curve
``y^e = prod (x - lambda_i)^{b_i}`` with ``e = d / gcd(a, d)`` and
``b_i = e a_i / d``.  Only the combinatorics of the exponents enter here;
the branch points themselves never matter.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import Optional

from .group import CharacterVec, UsageError, characters
from .parallel import pool_map


def binom(a: int, b: int) -> int:
    """C(a, b), zero when b < 0 or a < b."""
    if b < 0 or a < b:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class BranchData:
    e: int
    exponents: tuple[int, ...]
    unbranched_at_infinity: bool


@dataclass(frozen=True)
class CoverSummary:
    character: CharacterVec
    branch: BranchData
    genus: int
    eigen_dim: int
    branch_count: int
    # 2g-2 computed with the local term e/gcd(b, e) for exponents b != 1;
    # only set when it differs from the standard Riemann-Hurwitz value.
    displayed_variant: Optional[Fraction] = None


def branch_data(chi: CharacterVec) -> BranchData:
    if chi.is_trivial():
        raise UsageError("no cover: trivial character")
    d = chi.d
    g = gcd(d, *chi.entries)
    e = d // g
    b = tuple(a // g for a in chi.entries)
    assert gcd(e, *b) == 1
    return BranchData(e=e, exponents=b, unbranched_at_infinity=sum(b) % e == 0)


def genus_riemann_hurwitz(bd: BranchData) -> int:
    """Genus of ``y^e = prod (x - lambda_i)^{b_i}``.

    2g - 2 = -2e + sum_i (e - gcd(b_i, e)); infinity contributes nothing
    because the exponents sum to 0 mod e.
    """
    e = bd.e
    two_g = 2 - 2 * e + sum(e - gcd(b, e) for b in bd.exponents)
    if not bd.unbranched_at_infinity:
        # not reachable from characters; kept for hand-built branch data
        s = sum(bd.exponents) % e
        two_g += e - gcd(s, e)
    assert two_g % 2 == 0 and two_g >= 0, f"Riemann-Hurwitz gave 2g = {two_g}"
    return two_g // 2


def eigenspace_dimension(chi: CharacterVec) -> int:
    """Dimension of the chi-part of H^1 of the G-cover: (#nonzero a_i) - 2."""
    if chi.is_trivial():
        return 0
    return max(chi.support - 2, 0)


def _displayed_variant(bd: BranchData) -> Fraction:
    e = bd.e
    total = Fraction(-2 * e)
    for b in bd.exponents:
        if b == 0:
            continue
        total += e - 1 if b == 1 else Fraction(e, gcd(b, e))
    return total


def cover_summary(chi: CharacterVec) -> CoverSummary:
    bd = branch_data(chi)
    g = genus_riemann_hurwitz(bd)
    variant = _displayed_variant(bd)
    return CoverSummary(
        character=chi,
        branch=bd,
        genus=g,
        eigen_dim=eigenspace_dimension(chi),
        branch_count=chi.support,
        displayed_variant=None if variant == 2 * g - 2 else variant,
    )


def wedge_dimension(chi: CharacterVec, n: int, r: int) -> int:
    """dim of the (n-r)-th exterior power of the chi-eigenspace."""
    if chi.is_trivial():
        return 0
    return binom(eigenspace_dimension(chi), n - r)


def _check_nrd(n: int, r: int, d: int):
    if n < 3 or not 2 <= r < n or d < 2:
        raise UsageError(f"need n >= 3, 2 <= r < n, d >= 2 (got n={n}, r={r}, d={d})")


@dataclass(frozen=True)
class Decomposition:
    n: int
    r: int
    d: int
    total: int
    # nonzero summands in lexicographic character order; None when not materialized
    entries: Optional[tuple[tuple[CharacterVec, int], ...]]


def _support_histogram_chunk(args) -> Counter:
    n, d, first = args
    hist: Counter = Counter()
    for mid in itertools.product(range(d), repeat=n - 1):
        last = (-first - sum(mid)) % d
        hist[(first != 0) + (last != 0) + sum(1 for x in mid if x)] += 1
    return hist


@lru_cache(maxsize=None)
def support_histogram(n: int, d: int, workers: int = 1) -> tuple[tuple[int, int], ...]:
    """(support size, number of characters) over every character of G."""
    hist: Counter = Counter()
    for part in pool_map(_support_histogram_chunk, [(n, d, a0) for a0 in range(d)], workers):
        hist.update(part)
    return tuple(sorted(hist.items()))


def primitive_decomposition(
    n: int, r: int, d: int, materialize: bool = True, workers: int = 1
) -> Decomposition:
    """Summands ``wedge^{n-r} H^1(D)_chi`` of the primitive middle cohomology.

    The total is accumulated from a histogram of character supports, which
    is the same sum grouped by support size.  With ``materialize`` the
    nonzero summands are listed character by character.
    """
    _check_nrd(n, r, d)
    total = 0
    for support, count in support_histogram(n, d, workers):
        if support:
            total += count * binom(max(support - 2, 0), n - r)
    entries = None
    if materialize:
        items = []
        for chi in characters(n, d):
            w = wedge_dimension(chi, n, r)
            if w:
                items.append((chi, w))
        entries = tuple(items)
        assert sum(w for _, w in items) == total
    return Decomposition(n=n, r=r, d=d, total=total, entries=entries)
