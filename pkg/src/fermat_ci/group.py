"""The diagonal group G = (Z/d)^{n+1} / diagonal and its characters.

Group elements and characters are both residue tuples of length n+1.
An element is stored with first entry 0 (the coset representative
obtained by subtracting the first entry everywhere); a character is any
tuple whose entries sum to 0 mod d, and pairs with an element by the dot
product mod d.  Exponents stand for powers of a fixed primitive d-th root
of unity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Iterator, Sequence

from .linalg import ModKernel, kernel_mod, kernel_mod_bruteforce

Permutation = tuple[int, ...]


class UsageError(ValueError):
    """Inputs violate a documented precondition."""


@dataclass(frozen=True)
class GroupElement:
    d: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.entries[0] != 0 or any(not 0 <= x < self.d for x in self.entries):
            raise UsageError(f"not in canonical form: {self.entries} mod {self.d}")

    @property
    def n(self) -> int:
        return len(self.entries) - 1

    def is_identity(self) -> bool:
        return not any(self.entries)

    def __add__(self, other: "GroupElement") -> "GroupElement":
        _match(self.d, self.entries, other.d, other.entries)
        return canonicalize([a + b for a, b in zip(self.entries, other.entries)], self.d)


@dataclass(frozen=True)
class CharacterVec:
    d: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if any(not 0 <= x < self.d for x in self.entries):
            raise UsageError(f"entries must be residues mod {self.d}: {self.entries}")
        if sum(self.entries) % self.d:
            raise UsageError(f"character entries must sum to 0 mod {self.d}: {self.entries}")

    @classmethod
    def of(cls, entries: Iterable[int], d: int) -> "CharacterVec":
        return cls(d, tuple(int(x) % d for x in entries))

    @property
    def n(self) -> int:
        return len(self.entries) - 1

    def is_trivial(self) -> bool:
        return not any(self.entries)

    @property
    def support(self) -> int:
        """Number of nonzero entries."""
        return sum(1 for x in self.entries if x)


@dataclass(frozen=True)
class StarParams:
    """Integers k, s, t with d | k+n, d | s+t+n-1 and gcd(n+t, d) = 1."""

    n: int
    d: int
    k: int
    s: int
    t: int

    def satisfied(self) -> bool:
        n, d, k, s, t = self.n, self.d, self.k, self.s, self.t
        return (k + n) % d == 0 and (s + t + n - 1) % d == 0 and gcd(n + t, d) == 1


def _match(d1, e1, d2, e2):
    if d1 != d2 or len(e1) != len(e2):
        raise UsageError("modulus or length mismatch")


def canonicalize(raw: Sequence[int], d: int) -> GroupElement:
    if d < 2:
        raise UsageError("d must be at least 2")
    g0 = raw[0]
    return GroupElement(d, tuple((x - g0) % d for x in raw))


def evaluate_character(chi: CharacterVec, g: GroupElement) -> int:
    """Exponent ``e`` with chi(g) = zeta_d ** e."""
    _match(chi.d, chi.entries, g.d, g.entries)
    return sum(a * x for a, x in zip(chi.entries, g.entries)) % chi.d


def group_elements(n: int, d: int) -> Iterator[GroupElement]:
    """All d**n elements in lexicographic order of canonical form."""
    for tail in itertools.product(range(d), repeat=n):
        yield GroupElement(d, (0,) + tail)


def characters(n: int, d: int) -> Iterator[CharacterVec]:
    """All d**n characters, lexicographic in (a_0, ..., a_n)."""
    for head in itertools.product(range(d), repeat=n):
        yield CharacterVec(d, head + ((-sum(head)) % d,))


def star_parameters(n: int, d: int) -> StarParams:
    """Deterministic solution of the separating-set congruences.

    ``t`` is the least nonnegative integer with gcd(n+t, d) = 1; ``k`` and
    ``s`` are then forced modulo d.
    """
    if n < 3 or d < 2:
        raise UsageError("need n >= 3 and d >= 2")
    return star_parameters_with_t(n, d, next(t for t in itertools.count() if gcd(n + t, d) == 1))


def star_parameters_with_t(n: int, d: int, t: int) -> StarParams:
    k = (-n) % d
    params = StarParams(n=n, d=d, k=k, s=(k + 1 - t) % d, t=t)
    if not params.satisfied():
        raise UsageError(f"t={t} is not admissible for n={n}, d={d}")
    return params


def admissible_t_values(n: int, d: int) -> list[int]:
    """Residues t in [0, d) with gcd(n+t, d) = 1, in increasing order."""
    return [t for t in range(d) if gcd(n + t, d) == 1]


def star_characters(params: StarParams) -> list[CharacterVec]:
    """``chi_k = (1,...,1,k)`` followed by ``chi_(s,t,i)`` for i = 1..n.

    ``chi_(s,t,i)`` has s in (1-based) slot i, t in the last slot and 1
    elsewhere; in 0-based terms s sits at index i-1.
    """
    n, d = params.n, params.d
    chars = [CharacterVec.of([1] * n + [params.k], d)]
    for i in range(n):
        row = [1] * (n + 1)
        row[i] = params.s
        row[n] = params.t
        chars.append(CharacterVec.of(row, d))
    return chars


@dataclass(frozen=True)
class KernelReport:
    """Joint kernel of a set of characters, viewed in (Z/d)^{n+1}."""

    diagonal: bool
    kernel: ModKernel
    cardinality: int
    d: int
    n: int
    enumerated: bool = False
    notes: tuple[str, ...] = field(default=())

    def elements(self) -> list[GroupElement]:
        """Distinct group elements of the kernel (canonical forms, sorted)."""
        return sorted(
            {canonicalize(x, self.d) for x in self.kernel.elements()}, key=lambda g: g.entries
        )


def joint_kernel_is_diagonal(chars: Sequence[CharacterVec], cross_check: bool = True) -> KernelReport:
    """Decide whether ``{x : chi(x) = 0 for all chi}`` is exactly the diagonal.

    The kernel in (Z/d)^{n+1} always contains the d diagonal vectors, so it
    equals the diagonal iff its cardinality is d.  With ``cross_check`` the
    answer is re-derived by enumeration when d**(n+1) <= 10**6.
    """
    if not chars:
        raise UsageError("need at least one character")
    d, length = chars[0].d, len(chars[0].entries)
    for c in chars:
        _match(d, chars[0].entries, c.d, c.entries)
    rows = [list(c.entries) for c in chars]
    ker = kernel_mod(rows, d)
    diagonal = ker.cardinality == d
    enumerated = False
    if cross_check and d**length <= 10**6:
        brute = kernel_mod_bruteforce(rows, d)
        if len(brute) != ker.cardinality or set(ker.elements()) != brute:
            raise AssertionError("SNF kernel disagrees with enumeration")
        enumerated = True
    return KernelReport(
        diagonal=diagonal, kernel=ker, cardinality=ker.cardinality, d=d, n=length - 1,
        enumerated=enumerated,
    )


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """``(sigma tau)(i) = sigma(tau(i))``."""
    return tuple(sigma[tau[i]] for i in range(len(tau)))


def inverse(sigma: Permutation) -> Permutation:
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma):
        inv[s] = i
    return tuple(inv)


def is_permutation(tau: Sequence[int], size: int) -> bool:
    return len(tau) == size and sorted(tau) == list(range(size))


def conjugate_character(chi: CharacterVec, tau: Permutation) -> CharacterVec:
    """Move entry ``a_j`` to slot ``tau(j)``: result[i] = a[tau^-1(i)]."""
    if not is_permutation(tau, len(chi.entries)):
        raise UsageError(f"{tau} is not a permutation of {len(chi.entries)} letters")
    inv = inverse(tuple(tau))
    return CharacterVec(chi.d, tuple(chi.entries[inv[i]] for i in range(len(inv))))
