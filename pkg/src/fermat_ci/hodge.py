"""Topological and Hodge invariants of smooth complete intersections in P^n.

Every number is an exact coefficient extraction: for X of type
(d_1, ..., d_c; n) with hyperplane class h, integration over X is
``(d_1 ... d_c) * [h^m]`` with m = n - c.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Iterable, Optional

from . import series as S
from .group import UsageError


@dataclass(frozen=True, order=True)
class MultiDegree:
    degrees: tuple[int, ...]
    n: int

    def __post_init__(self):
        degs = tuple(self.degrees)
        if not degs:
            raise UsageError("need at least one degree")
        if any(x < 2 for x in degs):
            raise UsageError(f"degrees must be >= 2: {degs}")
        if self.n - len(degs) < 0:
            raise UsageError(f"codimension {len(degs)} exceeds n = {self.n}")
        object.__setattr__(self, "degrees", tuple(sorted(degs)))

    @property
    def c(self) -> int:
        return len(self.degrees)

    @property
    def m(self) -> int:
        return self.n - self.c

    @property
    def degree(self) -> int:
        return prod(self.degrees)

    def __str__(self):
        return f"({','.join(map(str, self.degrees))};{self.n})"


def parse_multidegree(text: str) -> MultiDegree:
    """Parse ``"2,2;5"`` or ``"(2,2;5)"``."""
    body = text.strip().strip("()")
    degs, _, n = body.partition(";")
    if not n:
        raise UsageError(f"expected 'd1,...,dc;n', got {text!r}")
    return MultiDegree(tuple(int(x) for x in degs.split(",")), int(n))


def euler_characteristic(md: MultiDegree) -> int:
    """deg * [h^m] (1+h)^{n+1} / prod (1 + d_i h)."""
    m = md.m
    num = S.power([Fraction(1), Fraction(1)], md.n + 1, m)
    den = [Fraction(1)]
    for d in md.degrees:
        den = S.mul(den, [Fraction(1), Fraction(d)], m)
    value = md.degree * S.mul(num, S.inv(den, m), m)[m]
    assert value.denominator == 1
    return int(value)


def primitive_middle_betti(md: MultiDegree) -> int:
    m = md.m
    if m < 1:
        raise UsageError("primitive middle Betti number needs dimension >= 1")
    chi = euler_characteristic(md)
    return chi - m - 1 if m % 2 == 0 else m + 1 - chi


def _hilbert_binomial(a: int, n: int) -> int:
    """a (a-1) ... (a-n+1) / n!, the Hilbert polynomial of P^n at a - n."""
    return prod(a - i for i in range(n)) // factorial(n)


def chi_structure_sheaf_twist(md: MultiDegree, t: int) -> int:
    """chi(O_X(t)) from the Koszul resolution of O_X by sums of O_P(t - sum d_i)."""
    n = md.n
    total = 0
    for size in range(md.c + 1):
        for subset in itertools.combinations(md.degrees, size):
            total += (-1) ** size * _hilbert_binomial(n + t - sum(subset), n)
    return total


def chi_y(md: MultiDegree) -> list[int]:
    """[chi(Omega^p) for p = 0..m] by Hirzebruch-Riemann-Roch.

    ch(Lambda_y Omega_X) = (1 + y e^{-h})^{n+1} / ((1 + y) prod (1 + y e^{-d_i h}))
    from the Euler and conormal sequences; td(T_X) = (h / (1 - e^{-h}))^{n+1}
    / prod (d_i h / (1 - e^{-d_i h})).  Both are expanded mod (h^{m+1}, y^{m+1}).
    """
    n, m = md.n, md.m
    N = M = m
    numerator = S.one2(N, M)
    for _ in range(n + 1):
        numerator = S.mul2(numerator, S.one_plus_y_exp(-1, N, M), N, M)
    denominator = S.one_plus_y_exp(0, N, M)
    for d in md.degrees:
        denominator = S.mul2(denominator, S.one_plus_y_exp(-d, N, M), N, M)
    todd = S.power(S.todd_factor(1, N), n + 1, N)
    for d in md.degrees:
        todd = S.mul(todd, S.inv(S.todd_factor(d, N), N), N)
    integrand = S.mul2(
        S.mul2(numerator, S.inv2(denominator, N, M), N, M), S.lift(todd, N, M), N, M
    )
    values = []
    for p in range(m + 1):
        v = md.degree * integrand[m][p]
        if v.denominator != 1:
            raise AssertionError(f"non-integral chi(Omega^{p}) = {v} for {md}")
        values.append(int(v))
    return values


@dataclass(frozen=True)
class HodgeMiddleRow:
    md: MultiDegree
    values: tuple[int, ...]  # h^{p, m-p}, p = 0..m
    primitive_values: tuple[int, ...]

    @property
    def betti(self) -> int:
        return sum(self.values)

    def is_straight(self) -> bool:
        """Primitive numbers vanish away from the center (vacuous when m is odd)."""
        m = self.md.m
        return all(v == 0 for p, v in enumerate(self.primitive_values) if 2 * p != m)


def hodge_middle_row(md: MultiDegree) -> HodgeMiddleRow:
    m = md.m
    if m < 1:
        raise UsageError("middle Hodge row needs dimension >= 1")
    chis = chi_y(md)
    values = []
    for p, chi in enumerate(chis):
        ambient = (-1) ** p if 2 * p != m else 0
        values.append((-1) ** (m - p) * (chi - ambient))
    primitive = list(values)
    if m % 2 == 0:
        primitive[m // 2] -= 1
    row = HodgeMiddleRow(md, tuple(values), tuple(primitive))
    # the hyperplane class sits in the middle when m is even
    expected_betti = primitive_middle_betti(md) + (1 if m % 2 == 0 else 0)
    if (
        values != values[::-1]
        or any(v < 0 for v in primitive)
        or row.betti != expected_betti
    ):
        raise AssertionError(f"inconsistent Hodge row {values} for {md}")
    return row


def multidegrees(n_max: int, d_max: int, c_max: int, m_min: int = 2) -> Iterable[MultiDegree]:
    """Every sorted multidegree with d_i <= d_max, c <= c_max, n <= n_max, m >= m_min."""
    out = []
    for c in range(1, c_max + 1):
        for degs in itertools.combinations_with_replacement(range(2, d_max + 1), c):
            for n in range(c + m_min, n_max + 1):
                out.append(MultiDegree(degs, n))
    return sorted(out, key=lambda md: (md.c, md.degrees, md.n))


def straight_polygon_scan(n_max: int, d_max: int, c_max: int) -> list[MultiDegree]:
    return [md for md in multidegrees(n_max, d_max, c_max) if hodge_middle_row(md).is_straight()]


def expected_straight_list(n_max: int, d_max: int, c_max: int) -> list[MultiDegree]:
    """Hyperquadrics, the cubic surface and even-dimensional (2,2) intersections in range."""
    out = [md for md in multidegrees(n_max, d_max, c_max)
           if md.degrees == (2,)
           or (md.degrees == (3,) and md.n == 3)
           or (md.degrees == (2, 2) and md.n % 2 == 0)]
    return out


COVERED = "covered_main_theorem"
PLANE_CUBIC = "excluded_plane_cubic"
HYPERQUADRIC = "hyperquadric"
TWO_QUADRICS = "two_quadrics"
OPEN = "open_per_remark"


@dataclass(frozen=True)
class Classification:
    md: MultiDegree
    d: int
    r: int
    case: str
    route: Optional[str] = None


def classify_theorem_case(md: MultiDegree) -> Classification:
    """Reduce to the leading block d_1 = ... = d_r and say whether the
    generic-triviality theorem applies."""
    degs = md.degrees
    d = degs[0]
    r = sum(1 for x in degs if x == d)
    if degs == (3,) and md.n == 2:
        return Classification(md, d, r, PLANE_CUBIC)
    if d >= 3 or r >= 3:
        route = "hypersurface" if r == 1 else "fermat_faithfulness"
        return Classification(md, d, r, COVERED, route)
    if r == 1:
        case = HYPERQUADRIC if md.c == 1 else OPEN
    else:
        case = TWO_QUADRICS if md.c == 2 else OPEN
    return Classification(md, d, r, case)
