"""Exact vertex enumeration for polytopes {t : A t <= b} in parameter space."""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb
from typing import Sequence

from pmv.algebra import CapExceeded
from pmv.linalg import frac, rref

DEFAULT_MAX_DIM = 12
DEFAULT_MAX_BASES = 2_000_000

Row = tuple[tuple[Fraction, ...], Fraction]


def normalize_rows(rows: Sequence[Row]) -> tuple[list[Row], bool]:
    """Scale each inequality so its first nonzero coefficient is +-1 and drop duplicates.

    Returns the reduced list and a feasibility flag for the constant rows.
    """
    best: dict[tuple, Fraction] = {}
    feasible = True
    for a, b in rows:
        a = tuple(frac(v) for v in a)
        b = frac(b)
        lead = next((v for v in a if v != 0), None)
        if lead is None:
            if b < 0:
                feasible = False
            continue
        scale = abs(lead)
        a = tuple(v / scale for v in a)
        b = b / scale
        if a not in best or b < best[a]:
            best[a] = b
    return sorted(best.items()), feasible


def _solve_square(rows: list[tuple[Fraction, ...]], rhs: list[Fraction]) -> tuple[Fraction, ...] | None:
    d = len(rows)
    red, pivots = rref([list(r) + [v] for r, v in zip(rows, rhs)], d + 1)
    if len(pivots) != d or pivots[-1] == d:
        return None
    return tuple(row[d] for row in red)


def enumerate_vertices_h(rows: Sequence[Row], dim: int, *, max_dim: int = DEFAULT_MAX_DIM,
                         max_bases: int = DEFAULT_MAX_BASES) -> list[tuple[Fraction, ...]]:
    """All vertices of the bounded polytope {t in Q^dim : a.t <= b for (a, b) in rows}.

    Active-set search: every choice of ``dim`` constraints with a unique
    intersection point is solved exactly and kept if the point is feasible.
    """
    if dim > max_dim:
        raise CapExceeded(f"polytope dimension {dim} exceeds the cap {max_dim}")
    reduced, feasible = normalize_rows(rows)
    if not feasible:
        return []
    if dim == 0:
        return [()]
    if comb(len(reduced), dim) > max_bases:
        raise CapExceeded(f"{comb(len(reduced), dim)} candidate active sets exceed the cap {max_bases}")
    found = set()
    for combo in itertools.combinations(range(len(reduced)), dim):
        pt = _solve_square([reduced[i][0] for i in combo], [reduced[i][1] for i in combo])
        if pt is None or pt in found:
            continue
        if all(sum((x * y for x, y in zip(a, pt)), Fraction(0)) <= b for a, b in reduced):
            found.add(pt)
    return sorted(found)


def active_rank(rows: Sequence[Row], point: Sequence) -> int:
    """Rank of the constraints that are tight at ``point``."""
    tight = [list(a) for a, b in rows if sum((frac(x) * y for x, y in zip(a, point)), Fraction(0)) == b]
    return len(rref(tight, len(point))[1]) if tight and point else 0
