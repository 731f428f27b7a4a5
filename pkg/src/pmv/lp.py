"""Exact two-phase simplex over the rationals (Bland's rule, so no cycling)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from pmv.linalg import frac


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: tuple[Fraction, ...] | None = None
    objective: Fraction | None = None


def _pivot(tab: list[list[Fraction]], basis: list[int], r: int, c: int) -> None:
    p = tab[r][c]
    if p != 1:
        tab[r] = [v / p for v in tab[r]]
    row = tab[r]
    for i in range(len(tab)):
        if i != r:
            f = tab[i][c]
            if f != 0:
                tab[i] = [a - f * b for a, b in zip(tab[i], row)]
    basis[r] = c


def _simplex(tab: list[list[Fraction]], basis: list[int], allowed: int) -> str:
    """Minimise the objective stored in the last row. Columns >= allowed never enter."""
    m = len(tab) - 1
    obj = tab[m]
    while True:
        obj = tab[m]
        enter = next((j for j in range(allowed) if obj[j] < 0), None)
        if enter is None:
            return "optimal"
        best = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return "unbounded"
        _pivot(tab, basis, best[1], enter)


def linprog(
    c: Sequence,
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    free: Sequence[int] = (),
) -> LPResult:
    """Minimise ``c @ x`` subject to ``A_eq x = b_eq``, ``A_ub x <= b_ub``.

    Variables are nonnegative except those listed in ``free``.
    """
    n = len(c)
    free = sorted(set(free))
    # column layout: x (n) | negative parts of free vars | slacks | artificials
    nf = len(free)
    nub = len(A_ub)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []

    def expand(row):
        row = [frac(v) for v in row]
        return row + [-row[j] for j in free]

    for row, b in zip(A_eq, b_eq):
        rows.append(expand(row) + [Fraction(0)] * nub)
        rhs.append(frac(b))
    for k, (row, b) in enumerate(zip(A_ub, b_ub)):
        slack = [Fraction(0)] * nub
        slack[k] = Fraction(1)
        rows.append(expand(row) + slack)
        rhs.append(frac(b))
    nstruct = n + nf + nub
    for i in range(len(rows)):
        if rhs[i] < 0:
            rows[i] = [-v for v in rows[i]]
            rhs[i] = -rhs[i]
    m = len(rows)
    tab = []
    for i in range(m):
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        tab.append(rows[i] + art + [rhs[i]])
    basis = [nstruct + i for i in range(m)]
    # phase one: minimise the sum of artificials
    phase1 = [Fraction(0)] * (nstruct + m + 1)
    for i in range(m):
        phase1 = [a - b for a, b in zip(phase1, tab[i])]
    for i in range(m):
        phase1[nstruct + i] = Fraction(0)
    tab.append(phase1)
    _simplex(tab, basis, nstruct)
    if tab[m][-1] != 0:
        return LPResult("infeasible")
    # drive remaining artificials out of the basis
    for i in range(m):
        if basis[i] >= nstruct:
            col = next((j for j in range(nstruct) if tab[i][j] != 0), None)
            if col is not None:
                _pivot(tab, basis, i, col)
    keep = [i for i in range(m) if basis[i] < nstruct]
    tab = [tab[i][:nstruct] + [tab[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]
    cost = [frac(v) for v in c] + [-frac(c[j]) for j in free] + [Fraction(0)] * nub + [Fraction(0)]
    obj = cost[:]
    for i, b in enumerate(basis):
        f = obj[b]
        if f != 0:
            obj = [a - f * v for a, v in zip(obj, tab[i])]
    tab.append(obj)
    status = _simplex(tab, basis, nstruct)
    if status != "optimal":
        return LPResult(status)
    values = [Fraction(0)] * nstruct
    for i, b in enumerate(basis):
        values[b] = tab[i][-1]
    x = values[:n]
    for k, j in enumerate(free):
        x[j] -= values[n + k]
    objective = sum((frac(ci) * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPResult("optimal", tuple(x), objective)
