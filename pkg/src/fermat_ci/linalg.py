"""Exact linear algebra over Z, Z/d and Q.

Matrices are plain lists of rows.  Integer matrices hold Python ints,
rational ones hold :class:`fractions.Fraction`.  Nothing here touches
floating point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Iterator, Sequence

import numpy as np

Matrix = list[list[int]]
RatMatrix = list[list[Fraction]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    if not a or len(a[0]) != len(b):
        raise ValueError("shape mismatch")
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def _check_shape(m: Sequence[Sequence]) -> tuple[int, int]:
    rows = len(m)
    if rows == 0 or len(m[0]) == 0:
        raise ValueError("matrix must have at least one row and one column")
    cols = len(m[0])
    if any(len(row) != cols for row in m):
        raise ValueError("ragged matrix")
    return rows, cols


def det(m: Sequence[Sequence]) -> Fraction:
    """Determinant by fraction-exact elimination."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    sign = 1
    result = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        result *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return sign * result


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SnfResult:
    """``U @ M @ V == D`` with ``U``, ``V`` unimodular and ``D`` diagonal."""

    U: Matrix
    D: Matrix
    V: Matrix

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i][i] for i in range(min(len(self.D), len(self.D[0])))]

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x != 0)


def smith_normal_form(m: Sequence[Sequence[int]]) -> SnfResult:
    """Smith normal form with unimodular transforms.

    The pivot at each stage is the entry of least nonzero absolute value in
    the remaining block, ties broken by lowest (row, col).  Output is a pure
    function of the input.
    """
    rows, cols = _check_shape(m)
    a = [[int(x) for x in row] for row in m]
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        for row in a:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]

    for t in range(min(rows, cols)):
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    x = abs(a[i][j])
                    if x and (best is None or x < best[0]):
                        best = (x, i, j)
            if best is None:
                break
            _, pi, pj = best
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, a[i][t] // p)
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, a[t][j] // p)
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            # row and column cleared; enforce divisibility on the rest
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, -1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return SnfResult(U=u, D=a, V=v)


def is_smith_form(d: Matrix) -> bool:
    rows, cols = len(d), len(d[0])
    for i in range(rows):
        for j in range(cols):
            if i != j and d[i][j] != 0:
                return False
    diag = [d[i][i] for i in range(min(rows, cols))]
    if any(x < 0 for x in diag):
        return False
    for x, y in zip(diag, diag[1:]):
        if x == 0:
            if y != 0:
                return False
        elif y % x:
            return False
    return True


# ---------------------------------------------------------------------------
# Kernels modulo d


@dataclass(frozen=True)
class ModKernel:
    """Subgroup ``{x in (Z/d)^cols : M x = 0 mod d}``.

    ``generators[i]`` has additive order ``orders[i]``; the subgroup is the
    internal direct sum of the cyclic groups they generate.
    """

    modulus: int
    cols: int
    generators: tuple[tuple[int, ...], ...]
    orders: tuple[int, ...]

    @property
    def cardinality(self) -> int:
        return prod(self.orders)

    def elements(self) -> Iterator[tuple[int, ...]]:
        d = self.modulus
        for coeffs in itertools.product(*(range(o) for o in self.orders)):
            x = [0] * self.cols
            for c, g in zip(coeffs, self.generators):
                if c:
                    x = [(xi + c * gi) % d for xi, gi in zip(x, g)]
            yield tuple(x)


def kernel_mod(m: Sequence[Sequence[int]], d: int) -> ModKernel:
    """Solutions of ``M x = 0`` over ``Z/d`` via the Smith normal form.

    With ``U M V = D`` the substitution ``x = V y`` turns the system into
    ``delta_j y_j = 0 mod d``, so coordinate ``j`` ranges over a cyclic
    group of order ``gcd(delta_j, d)``.  Trivial factors are dropped.
    """
    if d < 2:
        raise ValueError("modulus must be at least 2")
    rows, cols = _check_shape(m)
    snf = smith_normal_form(m)
    gens, orders = [], []
    for j in range(cols):
        delta = snf.D[j][j] if j < rows else 0
        order = gcd(delta, d)
        if order == 1:
            continue
        step = d // order
        gens.append(tuple((step * snf.V[i][j]) % d for i in range(cols)))
        orders.append(order)
    return ModKernel(modulus=d, cols=cols, generators=tuple(gens), orders=tuple(orders))


def kernel_mod_bruteforce(m: Sequence[Sequence[int]], d: int) -> set[tuple[int, ...]]:
    """Enumerate every solution; only sensible when ``d ** cols`` is small."""
    _, cols = _check_shape(m)
    mat = np.array(m, dtype=np.int64).T % d
    found: set[tuple[int, ...]] = set()
    vectors = itertools.product(range(d), repeat=cols)
    while True:
        block = np.array(list(itertools.islice(vectors, 65536)), dtype=np.int64)
        if block.size == 0:
            return found
        ok = np.all((block @ mat) % d == 0, axis=1)
        found.update(tuple(int(x) for x in row) for row in block[ok])


# ---------------------------------------------------------------------------
# Rational matrices


def to_rational(m: Sequence[Sequence]) -> RatMatrix:
    return [[Fraction(x) for x in row] for row in m]


def rref(m: Sequence[Sequence]) -> tuple[RatMatrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    a = to_rational(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(m: Sequence[Sequence]) -> int:
    if not m:
        return 0
    return len(rref(m)[1])


def rational_nullspace(m: Sequence[Sequence]) -> list[list[Fraction]]:
    """Basis of ``{v : M v = 0}``, one vector per free column."""
    _, cols = _check_shape(m)
    red, pivots = rref(m)
    basis = []
    for free in (c for c in range(cols) if c not in pivots):
        v = [Fraction(0)] * cols
        v[free] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -red[row][free]
        basis.append(v)
    return basis


def in_row_space(vec: Sequence, m: Sequence[Sequence]) -> bool:
    return rank(list(m) + [list(vec)]) == rank(m)
