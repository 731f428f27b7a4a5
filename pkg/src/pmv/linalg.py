"""Exact linear algebra over the rationals.

Everything here works on lists of :class:`fractions.Fraction` (or ints) and
never touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vector = tuple
Matrix = list


def frac(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point values are not accepted")
    return Fraction(value)


def rref(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form. Returns (matrix, pivot column list)."""
    m = [[frac(v) for v in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0]) if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        p = m[r][c]
        if p != 1:
            m[r] = [v / p for v in m[r]]
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
    """Basis of {x : rows @ x = 0}."""
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """One solution of ``rows @ x = rhs`` (free variables set to 0), or None."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [rhs[i]] for i, r in enumerate(rows)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    return x


def affine_rank(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull of ``points`` (-1 for the empty set)."""
    if not points:
        return -1
    base = points[0]
    diffs = [[frac(a) - frac(b) for a, b in zip(p, base)] for p in points[1:]]
    return rank(diffs) if diffs else 0


def affine_dependency(points: Sequence[Sequence]) -> list[Fraction] | None:
    """Nonzero weights ``w`` with sum(w)=0 and sum(w_i p_i)=0, if any exist."""
    if not points:
        return None
    dim = len(points[0])
    rows = [[frac(p[i]) for p in points] for i in range(dim)]
    rows.append([Fraction(1)] * len(points))
    null = nullspace(rows, len(points))
    return null[0] if null else None


class AffineSubspace:
    """Incremental solver for a system of linear equations.

    Every variable is kept as an affine expression in the currently free
    variables, so adding an equation costs a substitution instead of a full
    re-elimination. Suited to the large, highly redundant additivity systems
    produced by finite algebras.
    """

    def __init__(self, nvars: int):
        self.nvars = nvars
        # expr[v] = (const, {free_var: coef})
        self.expr: list[tuple[Fraction, dict[int, Fraction]]] = [
            (Fraction(0), {v: Fraction(1)}) for v in range(nvars)
        ]
        self.free: set[int] = set(range(nvars))
        self.consistent = True

    def _substitute(self, coeffs: dict[int, Fraction]) -> tuple[Fraction, dict[int, Fraction]]:
        const = Fraction(0)
        lin: dict[int, Fraction] = {}
        for v, a in coeffs.items():
            if a == 0:
                continue
            c, terms = self.expr[v]
            const += a * c
            for f, b in terms.items():
                s = lin.get(f, 0) + a * b
                if s:
                    lin[f] = s
                else:
                    lin.pop(f, None)
        return const, lin

    def add_equation(self, coeffs: dict[int, object], rhs=0) -> bool:
        """Add ``sum coeffs[v] * x_v = rhs``. Returns False if it was redundant."""
        const, lin = self._substitute({v: frac(a) for v, a in coeffs.items()})
        rhs = frac(rhs) - const
        if not lin:
            if rhs != 0:
                self.consistent = False
            return False
        f = max(lin)
        a = lin.pop(f)
        # t_f = (rhs - sum lin[g] t_g) / a
        new_const = rhs / a
        new_terms = {g: -b / a for g, b in lin.items()}
        self.free.discard(f)
        for v in range(self.nvars):
            c, terms = self.expr[v]
            if f not in terms:
                continue
            k = terms.pop(f)
            c = c + k * new_const
            for g, b in new_terms.items():
                s = terms.get(g, 0) + k * b
                if s:
                    terms[g] = s
                else:
                    terms.pop(g, None)
            self.expr[v] = (c, terms)
        return True

    @property
    def dimension(self) -> int:
        return len(self.free) if self.consistent else -1

    def parametrization(self) -> tuple[list[int], list[Fraction], list[list[Fraction]]]:
        """(free variable order, constant vector, coefficient matrix nvars x d)."""
        order = sorted(self.free)
        consts = [c for c, _ in self.expr]
        coefs = [[terms.get(f, Fraction(0)) for f in order] for _, terms in self.expr]
        return order, consts, coefs


def integer_kernel(rows: Sequence[Sequence], ncols: int) -> list[tuple[int, ...]]:
    """Lattice basis of {x in Z^n : rows @ x = 0} for a rational matrix.

    Column operations by extended Euclid bring the matrix to column echelon
    form while tracking a unimodular transform; the transformed unit vectors
    belonging to zero columns span the integer kernel.
    """
    if ncols == 0:
        return []
    mat = []
    for row in rows:
        fr = [frac(v) for v in row]
        den = 1
        for v in fr:
            den = den * v.denominator // gcd(den, v.denominator)
        mat.append([int(v * den) for v in fr])
    # columns as lists; track unimodular U (columns)
    cols = [[mat[i][j] for i in range(len(mat))] for j in range(ncols)]
    U = [[int(i == j) for i in range(ncols)] for j in range(ncols)]
    start = 0
    for i in range(len(mat)):
        # gather a gcd into column `start` using columns start..n-1 on row i
        for j in range(start + 1, ncols):
            while cols[j][i] != 0:
                q = cols[start][i] // cols[j][i]
                cols[start] = [a - q * b for a, b in zip(cols[start], cols[j])]
                U[start] = [a - q * b for a, b in zip(U[start], U[j])]
                cols[start], cols[j] = cols[j], cols[start]
                U[start], U[j] = U[j], U[start]
        if start < ncols and cols[start][i] != 0:
            start += 1
        if start == ncols:
            break
    basis = [tuple(U[j]) for j in range(start, ncols)]
    return [_normalize_sign(b) for b in basis]


def _normalize_sign(v: tuple[int, ...]) -> tuple[int, ...]:
    for a in v:
        if a != 0:
            return v if a > 0 else tuple(-b for b in v)
    return v


def in_integer_span(basis: Sequence[Sequence], target: Sequence) -> tuple[int, ...] | None:
    """Integer coefficients c with sum c_i basis_i = target, if they exist.

    ``basis`` must be linearly independent over Q; then the rational solution
    is unique and membership reduces to integrality.
    """
    if not basis:
        return () if all(frac(t) == 0 for t in target) else None
    dim = len(target)
    rows = [[frac(b[i]) for b in basis] for i in range(dim)]
    sol = solve(rows, [frac(t) for t in target])
    if sol is None:
        return None
    if any(v.denominator != 1 for v in sol):
        return None
    return tuple(int(v) for v in sol)


def lattice_basis(generators: Iterable[Sequence], dim: int) -> list[tuple[Fraction, ...]]:
    """Basis of the subgroup of Q^dim generated by ``generators``."""
    gens = [tuple(frac(v) for v in g) for g in generators]
    gens = [g for g in gens if any(g)]
    if not gens:
        return []
    den = 1
    for g in gens:
        for v in g:
            den = den * v.denominator // gcd(den, v.denominator)
    ints = [[int(v * den) for v in g] for g in gens]
    # row-style Hermite reduction of the generator list
    rows = [r[:] for r in ints]
    out = []
    col = 0
    while rows and col < dim:
        nz = [r for r in rows if r[col] != 0]
        zero = [r for r in rows if r[col] == 0]
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            rest = []
            for r in nz[1:]:
                q = r[col] // piv[col]
                r = [a - q * b for a, b in zip(r, piv)]
                (rest if r[col] != 0 else zero).append(r)
            nz = [piv] + rest
        if nz:
            out.append(nz[0])
        rows = [r for r in zero if any(r)]
        col += 1
    return [tuple(Fraction(v, den) for v in r) for r in out]
