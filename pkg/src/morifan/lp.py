"""Exact two-phase simplex over the rationals, Bland's rule throughout.

Small dense problems only (tens of rows and columns). No tolerances: every
pivot is carried out exactly in integer arithmetic, and Bland's
smallest-index rule rules out cycling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: tuple[Fraction, ...] | None = None
    value: Fraction | None = None

    @property
    def feasible(self) -> bool:
        return self.status != INFEASIBLE


class _Tableau:
    """Fraction-free tableau: entry (i, j) stands for rows[i][j] / det, with det > 0.

    Pivots use Bareiss' update, whose divisions are exact, so everything stays in
    Python ints. The objective rows ride along as ordinary rows.
    """

    def __init__(self, rows: list[list[int]], objectives: list[list[int]], basis: list[int]):
        self.rows = rows
        self.objectives = objectives
        self.basis = basis
        self.det = 1

    def pivot(self, r: int, c: int) -> None:
        prow = self.rows[r]
        p, d = prow[c], self.det
        for table in (self.rows, self.objectives):
            for i, row in enumerate(table):
                if row is prow:
                    continue
                f = row[c]
                if f:
                    table[i] = [(a * p - f * b) // d for a, b in zip(row, prow)]
                else:
                    table[i] = [a * p // d for a in row]
        self.det = p
        if p < 0:
            for table in (self.rows, self.objectives):
                for i, row in enumerate(table):
                    table[i] = [-a for a in row]
            self.det = -p
        self.basis[r] = c

    def run(self, k: int, allowed: int) -> str:
        """Minimize objective k over columns [0, allowed); Bland entering/leaving choice."""
        while True:
            red = self.objectives[k]
            enter = next((j for j in range(allowed) if red[j] < 0), None)
            if enter is None:
                return OPTIMAL
            best = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    key = (Fraction(row[-1], a), self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return UNBOUNDED
            self.pivot(best[1], enter)


def _integral(row: Sequence) -> list[int]:
    scale = lcm(*(x.denominator for x in row)) if row else 1
    if scale == 1:
        return [int(x) for x in row]
    return [int(x * scale) for x in row]


def linprog(
    c: Sequence,
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    free: Sequence[int] = (),
) -> LPResult:
    """Minimize ``c.x`` s.t. ``A_eq x = b_eq``, ``A_ub x <= b_ub``, ``x >= 0``.

    Variables listed in ``free`` are unrestricted in sign.
    """
    n = len(c)
    free = sorted(set(free))
    # column layout: x (n) | negative parts of free vars | slacks | artificials | rhs
    ncols_x = n + len(free)

    def expand(row):
        row = list(row)
        return row + [-row[j] for j in free]

    # entries may be ints or Fractions; each row is scaled to integers below
    n_slack = len(A_ub)
    raw: list[list] = []
    for i, (row, b) in enumerate(zip(A_ub, b_ub)):
        slack = [0] * n_slack
        slack[i] = 1
        raw.append(expand(row) + slack + [b])
    for row, b in zip(A_eq, b_eq):
        raw.append(expand(row) + [0] * n_slack + [b])

    m = len(raw)
    width = ncols_x + n_slack
    rows = []
    for i, row in enumerate(raw):
        if row[-1] < 0:
            row = [-v for v in row]
        row = _integral(row)
        art = [0] * m
        art[i] = 1
        rows.append(row[:-1] + art + row[-1:])

    phase1 = [-sum(row[j] for row in rows) for j in range(width)] + [0] * m + [-sum(row[-1] for row in rows)]
    phase2 = _integral(expand(c)) + [0] * (n_slack + m + 1)
    tab = _Tableau(rows, [phase1, phase2], [width + i for i in range(m)])

    tab.run(0, width + m)
    if tab.objectives[0][-1] != 0:
        return LPResult(INFEASIBLE)

    # drive zero-level artificials out of the basis; rows with no way out are redundant
    for i in range(m):
        if tab.basis[i] >= width:
            col = next((j for j in range(width) if tab.rows[i][j] != 0), None)
            if col is not None:
                tab.pivot(i, col)

    if tab.run(1, width) == UNBOUNDED:
        return LPResult(UNBOUNDED)

    values = [Fraction(0)] * (width + m)
    for b, row in zip(tab.basis, tab.rows):
        values[b] = Fraction(row[-1], tab.det)
    x = values[:n]
    for k, j in enumerate(free):
        x[j] -= values[n + k]
    value = sum(Fraction(ci) * xi for ci, xi in zip(c, x))
    return LPResult(OPTIMAL, tuple(x), value)


def is_feasible(A_eq=(), b_eq=(), A_ub=(), b_ub=(), nvars: int = 0, free=()) -> LPResult:
    return linprog([0] * nvars, A_eq, b_eq, A_ub, b_ub, free)
