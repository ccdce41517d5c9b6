"""Exact search for monomial automorphisms of Fermat-type intersections.

X is cut out by ``sum_i lambda_i^j x_i^d = 0`` for j < r; its equations
span the row space of the r x (n+1) Vandermonde matrix V.  A monomial map
``x_i -> c_i x_{tau(i)}`` sends row j to the vector with entry
``lambda_i^j mu_i`` in slot tau(i), where mu_i = c_i^d.  It preserves X iff
each image row lies in rowspace(V), i.e. is orthogonal to the right
nullspace of V.  That condition is linear in mu, so everything stays in Q.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional, Sequence

from .group import Permutation, UsageError, is_permutation
from .linalg import rank, rational_nullspace

MAX_PERMUTATIONS = 10**6


@dataclass(frozen=True)
class FermatFamily:
    n: int
    r: int
    d: int
    lambdas: tuple[Fraction, ...]

    def __post_init__(self):
        lam = tuple(Fraction(x) for x in self.lambdas)
        object.__setattr__(self, "lambdas", lam)
        if len(lam) != self.n + 1:
            raise UsageError(f"need {self.n + 1} lambdas, got {len(lam)}")
        if len(set(lam)) != len(lam):
            raise UsageError("lambdas must be pairwise distinct")
        if self.n < 3 or not 2 <= self.r < self.n or self.d < 2:
            raise UsageError(f"need n >= 3, 2 <= r < n, d >= 2 (got {self.n}, {self.r}, {self.d})")

    def vandermonde(self) -> list[list[Fraction]]:
        return vandermonde(self.lambdas, self.r)


def vandermonde(lambdas: Sequence[Fraction], r: int) -> list[list[Fraction]]:
    """r x (n+1) matrix with rows (lambda_0^j, ..., lambda_n^j)."""
    return [[Fraction(x) ** j for x in lambdas] for j in range(r)]


def _available_values(height: int) -> int:
    """Number of distinct nonzero p/q with |p| <= height, 1 <= q <= height."""
    return 2 * len({Fraction(p, q) for p in range(1, height + 1) for q in range(1, height + 1)})


def sample_lambda(n: int, seed: Optional[int] = None, height: int = 10) -> tuple[Fraction, ...]:
    """Distinct coefficients.

    Without a seed this is (0, 1, ..., n).  With a seed, draw p/q with
    |p| <= height and 1 <= q <= height from ``random.Random(seed)``,
    rejecting zero and repeats.
    """
    if n < 1:
        raise UsageError("need n >= 1")
    if seed is None:
        return tuple(Fraction(i) for i in range(n + 1))
    if height < 1 or _available_values(height) < n + 1:
        raise UsageError(f"height {height} too small for {n + 1} distinct values")
    rng = random.Random(seed)
    out: list[Fraction] = []
    while len(out) < n + 1:
        x = Fraction(rng.randint(-height, height), rng.randint(1, height))
        if x != 0 and x not in out:
            out.append(x)
    return tuple(out)


def interpolation_exists(lambdas: Sequence, tau: Permutation, r: int) -> bool:
    """Is there p with deg p <= r - 1 and p(lambda_i) = lambda_{tau(i)} for all i?"""
    lam = [Fraction(x) for x in lambdas]
    n = len(lam) - 1
    if not 1 < r < n:
        raise UsageError(f"need 1 < r < n (got r={r}, n={n})")
    if len(set(lam)) != len(lam):
        raise UsageError("lambdas must be pairwise distinct")
    if not is_permutation(tau, n + 1):
        raise UsageError(f"{tau} is not a permutation of {n + 1} letters")
    columns = [[x**j for j in range(r)] for x in lam]  # (n+1) x r
    augmented = [row + [lam[tau[i]]] for i, row in enumerate(columns)]
    return rank(augmented) == rank(columns)


@dataclass(frozen=True)
class PermSolveReport:
    tau: Permutation
    solution_dim: int
    admissible: bool
    basis: tuple[tuple[Fraction, ...], ...]
    sample_mu: Optional[tuple[Fraction, ...]] = None


def image_rows(vand: Sequence[Sequence[Fraction]], mu: Sequence, tau: Permutation) -> list[list[Fraction]]:
    """Rows of V D_mu P_tau: entry lambda_i^j mu_i moved to slot tau(i)."""
    size = len(tau)
    out = []
    for row in vand:
        image = [Fraction(0)] * size
        for i in range(size):
            image[tau[i]] = row[i] * mu[i]
        out.append(image)
    return out


def _all_nonzero_combination(basis):
    # coefficients (1, t, t^2, ...) for t = 1, 2, ...; each coordinate that is
    # not identically zero vanishes for at most dim - 1 values of t
    for t in itertools.count(1):
        mu = [sum(Fraction(t) ** k * v[i] for k, v in enumerate(basis)) for i in range(len(basis[0]))]
        if all(mu):
            return tuple(mu)


def automorphisms_for_permutation(family: FermatFamily, tau: Permutation) -> PermSolveReport:
    tau = tuple(tau)
    n = family.n
    if not is_permutation(tau, n + 1):
        raise UsageError(f"{tau} is not a permutation of {n + 1} letters")
    vand = family.vandermonde()
    lam = family.lambdas
    null = rational_nullspace(vand)
    # sum_i lambda_i^j mu_i u_{tau(i)} = 0 for every j < r and nullspace vector u
    equations = [
        [lam[i] ** j * u[tau[i]] for i in range(n + 1)]
        for j in range(family.r)
        for u in null
    ]
    basis = rational_nullspace(equations)
    admissible = bool(basis) and all(any(v[i] for v in basis) for i in range(n + 1))
    sample = None
    if admissible:
        sample = _all_nonzero_combination(basis)
        image = image_rows(vand, sample, tau)
        if not (rank(image) == family.r and rank(vand + image) == family.r):
            raise AssertionError(f"row space identity failed for tau={tau}")
    return PermSolveReport(
        tau=tau,
        solution_dim=len(basis),
        admissible=admissible,
        basis=tuple(tuple(v) for v in basis),
        sample_mu=sample,
    )


@dataclass(frozen=True)
class AutOrderReport:
    family: FermatFamily
    generic: bool
    order: Optional[int]
    reports: tuple[PermSolveReport, ...]  # every permutation, lexicographic

    @property
    def admissible(self) -> tuple[PermSolveReport, ...]:
        return tuple(rep for rep in self.reports if rep.admissible)

    @property
    def tag(self) -> str:
        return "generic" if self.generic else "non-generic"


def aut_group_order(family: FermatFamily) -> AutOrderReport:
    """Scan all (n+1)! permutations.

    Each admissible permutation whose mu-solutions form a single line
    contributes one coset of G (d**n maps).  The order is left unset when
    some admissible permutation has a larger solution space.
    """
    n = family.n
    if factorial(n + 1) > MAX_PERMUTATIONS:
        raise UsageError(f"(n+1)! = {factorial(n + 1)} exceeds {MAX_PERMUTATIONS}")
    identity = tuple(range(n + 1))
    reports = [automorphisms_for_permutation(family, tau) for tau in itertools.permutations(range(n + 1))]
    assert reports[0].tau == identity and reports[0].admissible, "identity must be admissible"
    admissible = [rep for rep in reports if rep.admissible]
    generic = len(admissible) == 1 and admissible[0].solution_dim == 1
    order = None
    if all(rep.solution_dim == 1 for rep in admissible):
        order = len(admissible) * family.d**n
    return AutOrderReport(family=family, generic=generic, order=order, reports=tuple(reports))
