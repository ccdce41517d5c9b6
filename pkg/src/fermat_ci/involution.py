"""Dimension count ruling out involutions of a generic X of type (d^r; n).

An involution with eigenspaces of dimensions n1, n2 (n1 + n2 = n + 1)
splits degree-d forms into S_+ (even powers of the (-1)-variables) and
S_- (odd powers), of dimensions e1 and e2.  A stable r-dimensional space
of equations splits as f1 + f2 = r, and

    defect = f2 (e1 - f1) + f1 (e2 - f2) - 2 n1 n2

compares the Grassmannian with the family of involution-stable subspaces.
The generic member has no involution when the minimum defect is positive.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .group import UsageError


def plus_minus_dims(n1: int, n2: int, d: int) -> tuple[int, int]:
    if n1 < 1 or n2 < 1 or d < 1:
        raise UsageError("need n1, n2, d >= 1")
    e = [0, 0]
    for j in range(d + 1):
        e[j % 2] += comb(n1 - 1 + d - j, d - j) * comb(n2 - 1 + j, j)
    assert e[0] + e[1] == comb(n1 + n2 - 1 + d, d)
    return e[0], e[1]


def defect(n1: int, n2: int, e1: int, e2: int, f1: int, f2: int) -> int:
    return f2 * (e1 - f1) + f1 * (e2 - f2) - 2 * n1 * n2


@dataclass(frozen=True)
class DefectResult:
    n: int
    r: int
    d: int
    minimum: int
    argmin: tuple[int, int, int, int]  # (n1, n2, f1, f2)

    @property
    def positive(self) -> bool:
        return self.minimum > 0

    @property
    def hypothesis(self) -> bool:
        """d >= 3, or d = 2 with r >= 3."""
        return self.d >= 3 or (self.d == 2 and self.r >= 3)


def min_defect(n: int, r: int, d: int) -> DefectResult:
    """Minimum over n1 + n2 = n + 1 and f1 + f2 = r with 0 <= f_i <= e_i.

    Candidates are visited in lexicographic (n1, n2, f1, f2) order and only
    a strictly smaller value replaces the incumbent.
    """
    if not 1 <= r < n or d < 2:
        raise UsageError(f"need 1 <= r < n and d >= 2 (got n={n}, r={r}, d={d})")
    best = None
    for n1 in range(1, n + 1):
        n2 = n + 1 - n1
        e1, e2 = plus_minus_dims(n1, n2, d)
        for f1 in range(0, r + 1):
            f2 = r - f1
            if f1 > e1 or f2 > e2:
                continue
            value = defect(n1, n2, e1, e2, f1, f2)
            if best is None or value < best[0]:
                best = (value, (n1, n2, f1, f2))
    return DefectResult(n=n, r=r, d=d, minimum=best[0], argmin=best[1])


def involution_scan(n_max: int, d_max: int, n_min: int = 3) -> list[DefectResult]:
    """Every (n, r, d) with n_min <= n <= n_max, 1 <= r < n, 2 <= d <= d_max."""
    if n_max < 3 or d_max < 3:
        raise UsageError("scan bounds must be at least 3")
    return [
        min_defect(n, r, d)
        for n in range(n_min, n_max + 1)
        for r in range(1, n)
        for d in range(2, d_max + 1)
    ]


def scan_holds(rows: list[DefectResult]) -> bool:
    return all(row.positive for row in rows if row.hypothesis)
