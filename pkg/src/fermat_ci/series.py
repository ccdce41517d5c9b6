"""Truncated power series with rational coefficients.

Univariate series in h are lists ``c[i]`` = coefficient of h^i.  The
bivariate ring Q[y][[h]] / (h^{N+1}, y^{M+1}) is a list over h-degree of
y-polynomials, ``c[i][j]`` = coefficient of h^i y^j.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

Series = list[Fraction]
Series2 = list[list[Fraction]]


def exp_series(c, N: int) -> Series:
    """exp(c h) mod h^{N+1}."""
    c = Fraction(c)
    return [c**k / factorial(k) for k in range(N + 1)]


def mul(a: Series, b: Series, N: int) -> Series:
    out = [Fraction(0)] * (N + 1)
    for i, x in enumerate(a[: N + 1]):
        if x:
            for j, y in enumerate(b[: N + 1 - i]):
                out[i + j] += x * y
    return out


def inv(a: Series, N: int) -> Series:
    if a[0] == 0:
        raise ZeroDivisionError("series has no constant term")
    out = [Fraction(0)] * (N + 1)
    out[0] = 1 / a[0]
    for k in range(1, N + 1):
        s = sum(a[i] * out[k - i] for i in range(1, min(k, len(a) - 1) + 1))
        out[k] = -s * out[0]
    return out


def power(a: Series, e: int, N: int) -> Series:
    out = [Fraction(1)] + [Fraction(0)] * N
    for _ in range(e):
        out = mul(out, a, N)
    return out


def todd_factor(c, N: int) -> Series:
    """(c h) / (1 - exp(-c h)) mod h^{N+1}, for c != 0."""
    c = Fraction(c)
    # (1 - exp(-ch)) / h = sum_k (-1)^k c^{k+1} h^k / (k+1)!
    quotient = [(-1) ** k * c ** (k + 1) / factorial(k + 1) for k in range(N + 1)]
    return [c * x for x in inv(quotient, N)]


# ---------------------------------------------------------------------------
# bivariate


def zero2(N: int, M: int) -> Series2:
    return [[Fraction(0)] * (M + 1) for _ in range(N + 1)]


def one2(N: int, M: int) -> Series2:
    out = zero2(N, M)
    out[0][0] = Fraction(1)
    return out


def lift(a: Series, N: int, M: int) -> Series2:
    """Embed a series in h (no y-dependence)."""
    out = zero2(N, M)
    for i in range(min(N + 1, len(a))):
        out[i][0] = Fraction(a[i])
    return out


def _ymul(p, q, M):
    out = [Fraction(0)] * (M + 1)
    for i, x in enumerate(p):
        if x:
            for j in range(M + 1 - i):
                out[i + j] += x * q[j]
    return out


def _yinv(p, M):
    if p[0] == 0:
        raise ZeroDivisionError("y-polynomial has no constant term")
    out = [Fraction(0)] * (M + 1)
    out[0] = 1 / p[0]
    for k in range(1, M + 1):
        out[k] = -sum(p[i] * out[k - i] for i in range(1, k + 1)) * out[0]
    return out


def mul2(a: Series2, b: Series2, N: int, M: int) -> Series2:
    out = zero2(N, M)
    for i in range(N + 1):
        for j in range(N + 1 - i):
            prod = _ymul(a[i], b[j], M)
            row = out[i + j]
            for k in range(M + 1):
                row[k] += prod[k]
    return out


def inv2(a: Series2, N: int, M: int) -> Series2:
    g0 = _yinv(a[0], M)
    out = [g0]
    for k in range(1, N + 1):
        acc = [Fraction(0)] * (M + 1)
        for i in range(1, k + 1):
            prod = _ymul(a[i], out[k - i], M)
            acc = [x + y for x, y in zip(acc, prod)]
        out.append([-x for x in _ymul(acc, g0, M)])
    return out


def one_plus_y_exp(c, N: int, M: int) -> Series2:
    """1 + y exp(c h)."""
    out = one2(N, M)
    if M >= 1:
        for i, x in enumerate(exp_series(c, N)):
            out[i][1] += x
    return out
