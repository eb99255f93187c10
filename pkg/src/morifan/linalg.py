"""Exact rational linear algebra on plain lists of Fractions/ints."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vector = tuple[int, ...]


def as_fractions(v: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def primitive(v: Sequence) -> Vector:
    """Scale a rational vector by a positive factor to a primitive integer vector."""
    fr = as_fractions(v)
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    m = [list(as_fractions(r)) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : rows . x = 0}, one vector per free column."""
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(x)
    return basis


def canonical_subspace(rows: Sequence[Sequence]) -> tuple[Vector, ...]:
    """Canonical integer basis of the row space (rref rows made primitive)."""
    red, _ = rref(rows) if rows else ([], [])
    return tuple(primitive(r) for r in red)


def solve(columns: Sequence[Sequence], target: Sequence) -> list[Fraction] | None:
    """Solve sum_j y_j * columns[j] = target; None if inconsistent.

    The columns are assumed independent, so the solution is unique.
    """
    n = len(columns)
    d = len(target)
    aug = [[Fraction(columns[j][i]) for j in range(n)] + [Fraction(target[i])]
           for i in range(d)]
    red, pivots = rref(aug)
    if n in pivots:
        return None
    y = [Fraction(0)] * n
    for row, p in zip(red, pivots):
        y[p] = row[n]
    return y


def mat_vec(matrix: Sequence[Sequence], v: Sequence) -> tuple[Fraction, ...]:
    return tuple(Fraction(dot(row, v)) for row in matrix)


def transpose(matrix: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*matrix)] if matrix else []


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = transpose(b)
    return [[dot(row, col) for col in bt] for row in a]
