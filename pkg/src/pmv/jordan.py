"""Signed measures, their lattice operations and simplex certification of S(A)."""

from __future__ import annotations

import random
import weakref
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from pmv.algebra import InfiniteCarrierError, PmvAlgebra
from pmv.groups import LexQ2, Qn, RieszRep
from pmv.linalg import affine_dependency, affine_rank, frac
from pmv.lp import linprog
from pmv.states import RState, additive_subspace, fmt_vec, state_polytope

Vec = tuple


def _zero(rep: RieszRep) -> Vec:
    return tuple(Fraction(0) for _ in range(rep.dim))


@dataclass(frozen=True, eq=False)
class RSignedMeasure:
    """Additive map from a finite algebra into Q^n, stored by carrier index."""

    algebra: PmvAlgebra
    rep: RieszRep
    table: tuple[Vec, ...]

    def __call__(self, x) -> Vec:
        return self.table[self.algebra.tables.index[x]]

    def _same(self, other: "RSignedMeasure"):
        if other.algebra is not self.algebra or other.rep != self.rep:
            raise ValueError("measures live on different algebras or targets")

    def __add__(self, other: "RSignedMeasure") -> "RSignedMeasure":
        self._same(other)
        return RSignedMeasure(self.algebra, self.rep, tuple(self.rep.add(a, b) for a, b in zip(self.table, other.table)))

    def __sub__(self, other: "RSignedMeasure") -> "RSignedMeasure":
        self._same(other)
        return RSignedMeasure(self.algebra, self.rep, tuple(self.rep.sub(a, b) for a, b in zip(self.table, other.table)))

    def __neg__(self) -> "RSignedMeasure":
        return RSignedMeasure(self.algebra, self.rep, tuple(self.rep.neg(a) for a in self.table))

    def scale(self, alpha) -> "RSignedMeasure":
        return RSignedMeasure(self.algebra, self.rep, tuple(self.rep.scale(alpha, a) for a in self.table))

    def is_positive(self) -> bool:
        z = _zero(self.rep)
        return all(self.rep.leq(z, v) for v in self.table)

    def __eq__(self, other):
        return (isinstance(other, RSignedMeasure) and other.algebra is self.algebra
                and other.rep == self.rep and other.table == self.table)

    def __hash__(self):
        return hash(self.table)

    def to_json(self) -> dict:
        t = self.algebra.tables
        return {t.label(i): fmt_vec(v) for i, v in enumerate(self.table)}

    def __repr__(self):
        return "RSignedMeasure(" + ", ".join(f"{k}:({','.join(v)})" for k, v in self.to_json().items()) + ")"


def _require_qn(rep: RieszRep):
    if isinstance(rep, LexQ2):
        raise ValueError("lattice operations need a Dedekind complete target; Q lex Q is excluded")
    if not isinstance(rep, Qn):
        raise TypeError(f"unsupported target {rep!r}")


def additivity_failure(A: PmvAlgebra, rep: RieszRep, table: Sequence[Vec]) -> str | None:
    t = A.tables
    if tuple(table[t.zero]) != _zero(rep):
        return "m(0) != 0"
    for x, y, z in t.sums:
        if rep.add(table[x], table[y]) != tuple(table[z]):
            return f"m({t.label(x)}+{t.label(y)}) != m({t.label(x)}) + m({t.label(y)})"
    return None


def make_measure(A: PmvAlgebra, rep: RieszRep, table: Sequence[Sequence]) -> RSignedMeasure:
    if not A.finite:
        raise InfiniteCarrierError("signed measures are handled on finite carriers")
    tab = tuple(rep.check(tuple(v)) for v in table)
    if len(tab) != A.tables.n:
        raise ValueError(f"expected {A.tables.n} values, got {len(tab)}")
    why = additivity_failure(A, rep, tab)
    if why:
        raise ValueError(f"not additive: {why}")
    return RSignedMeasure(A, rep, tab)


def measure_of_state(s: RState) -> RSignedMeasure:
    return RSignedMeasure(s.algebra, s.rep, s.table)


def zero_measure(A: PmvAlgebra, rep: RieszRep) -> RSignedMeasure:
    return RSignedMeasure(A, rep, tuple(_zero(rep) for _ in range(A.tables.n)))


_basis_cache: "weakref.WeakKeyDictionary[PmvAlgebra, list]" = weakref.WeakKeyDictionary()


def measure_basis(A: PmvAlgebra) -> list[tuple[Fraction, ...]]:
    """Basis of the real additive maps on A, each a value vector in carrier order."""
    if A not in _basis_cache:
        free, _, coefs = additive_subspace(A).parametrization()
        _basis_cache[A] = [tuple(row[j] for row in coefs) for j in range(len(free))]
    return _basis_cache[A]


def random_measure(A: PmvAlgebra, rep: RieszRep, rng: random.Random, *, lo: int = -4, hi: int = 4,
                   denominator: int = 1) -> RSignedMeasure:
    basis = measure_basis(A)
    comps = []
    for _ in range(rep.dim):
        coeffs = [Fraction(rng.randint(lo, hi), rng.randint(1, denominator)) for _ in basis]
        comps.append([sum((c * b[i] for c, b in zip(coeffs, basis)), Fraction(0)) for i in range(A.tables.n)])
    return make_measure(A, rep, list(zip(*comps)))


def measure_order(m1: RSignedMeasure, m2: RSignedMeasure) -> bool:
    """m1 <=+ m2, i.e. m2 - m1 is a (nonnegative) measure."""
    return (m2 - m1).is_positive()


# -- subadditive maps and their sup construction -------------------------------------


@dataclass(frozen=True, eq=False)
class SubadditiveMap:
    algebra: PmvAlgebra
    rep: RieszRep
    table: tuple[Vec, ...]

    def __post_init__(self):
        t = self.algebra.tables
        rep = self.rep
        if tuple(self.table[t.zero]) != _zero(rep):
            raise ValueError("subadditive map must vanish at 0")
        for x, y, z in t.sums:
            if not rep.leq(self.table[z], rep.add(self.table[x], self.table[y])):
                raise ValueError(f"not subadditive at {t.label(x)}+{t.label(y)}")


def subadditive(A: PmvAlgebra, rep: RieszRep, table: Sequence[Sequence]) -> SubadditiveMap:
    return SubadditiveMap(A, rep, tuple(rep.check(tuple(v)) for v in table))


def random_subadditive(A: PmvAlgebra, rep: RieszRep, rng: random.Random, *, pieces: int = 3) -> SubadditiveMap:
    """Pointwise max of random measures plus a nonnegative constant on nonzero elements."""
    ms = [random_measure(A, rep, rng) for _ in range(rng.randint(1, pieces))]
    t = A.tables
    bump = [Fraction(rng.randint(0, 3)) for _ in range(rep.dim)]
    table = []
    for i in range(t.n):
        v = ms[0].table[i]
        for m in ms[1:]:
            v = rep.join(v, m.table[i])
        if i != t.zero:
            v = rep.add(v, tuple(bump))
        table.append(v)
    return SubadditiveMap(A, rep, tuple(table))


def _decomposition_dp(A: PmvAlgebra, values: Sequence[Fraction], better) -> list[Fraction]:
    """best(x) = better(d(x), best(y) + d(z) over defined y + z = x with y, z != 0)."""
    t = A.tables
    splits: dict[int, list[tuple[int, int]]] = {}
    for y, z, x in t.sums:
        if y != t.zero and z != t.zero:
            splits.setdefault(x, []).append((y, z))
    best: list[Fraction | None] = [None] * t.n
    # y and z below x with z nonzero forces y < x, so ascending below-count is a valid order
    for x in sorted(range(t.n), key=lambda i: (int(t.below_count[i]), i)):
        b = values[x]
        for y, z in splits.get(x, ()):
            b = better(b, best[y] + values[z])
        best[x] = b
    return best


def _componentwise_dp(A: PmvAlgebra, rep: RieszRep, table: Sequence[Vec], better) -> tuple[Vec, ...]:
    cols = [_decomposition_dp(A, [v[i] for v in table], better) for i in range(rep.dim)]
    return tuple(zip(*cols))


def sup_from_subadditive(A: PmvAlgebra, d: SubadditiveMap) -> RSignedMeasure:
    """m(x) = sup of d(x_1)+...+d(x_k) over ordered decompositions x = x_1+...+x_k."""
    if not A.finite:
        raise InfiniteCarrierError("the decomposition supremum is computed on finite carriers")
    _require_qn(d.rep)
    tab = _componentwise_dp(A, d.rep, d.table, max)
    why = additivity_failure(A, d.rep, tab)
    if why:
        raise ArithmeticError(f"decomposition supremum is not additive: {why}")
    return RSignedMeasure(A, d.rep, tab)


def brute_force_decomposition_sup(A: PmvAlgebra, d: SubadditiveMap) -> RSignedMeasure:
    """Same supremum, by listing every ordered decomposition explicitly."""
    t = A.tables
    nonzero = [i for i in range(t.n) if i != t.zero]
    summable, oplus = t.summable, t.oplus
    best: dict[int, list[Vec]] = {i: [] for i in range(t.n)}
    rep = d.rep

    def walk(total: int, acc: Vec):
        best[total].append(acc)
        for e in nonzero:
            if summable[total, e]:
                walk(int(oplus[total, e]), rep.add(acc, d.table[e]))

    for e in nonzero:
        walk(e, d.table[e])
    tab = []
    for i in range(t.n):
        if i == t.zero:
            tab.append(_zero(rep))
            continue
        sums = best[i]
        tab.append(tuple(max(v[k] for v in sums) for k in range(rep.dim)))
    return RSignedMeasure(A, rep, tuple(tab))


def lattice_ops(m1: RSignedMeasure, m2: RSignedMeasure, op: str = "sup") -> RSignedMeasure:
    """Supremum or infimum of two signed measures in the order <=+."""
    m1._same(m2)
    _require_qn(m1.rep)
    A, rep = m1.algebra, m1.rep
    if op == "sup":
        d = tuple(rep.join(a, b) for a, b in zip(m1.table, m2.table))
        tab = _componentwise_dp(A, rep, d, max)
    elif op == "inf":
        e = tuple(rep.meet(a, b) for a, b in zip(m1.table, m2.table))
        tab = _componentwise_dp(A, rep, e, min)
    else:
        raise ValueError("op must be 'sup' or 'inf'")
    why = additivity_failure(A, rep, tab)
    if why:
        raise ArithmeticError(f"{op} is not additive: {why}")
    return RSignedMeasure(A, rep, tab)


def jordan_decompose(m: RSignedMeasure) -> tuple[RSignedMeasure, RSignedMeasure]:
    """m = m_plus - m_minus with m_plus = m v 0."""
    plus = lattice_ops(m, zero_measure(m.algebra, m.rep), "sup")
    minus = plus - m
    if not (plus.is_positive() and minus.is_positive()):
        raise ArithmeticError("Jordan parts are not both positive")
    return plus, minus


def lub_oracle(m1: RSignedMeasure, m2: RSignedMeasure) -> RSignedMeasure:
    """Least upper bound by exact linear programming.

    Minimise the total mass sum_x h(x) over additive h with h >= m1 and
    h >= m2 pointwise. The least upper bound m* is feasible, and every
    feasible h has h - m* a nonnegative additive map, so h has total mass at
    least that of m*, with equality only when h - m* vanishes everywhere.
    The minimiser is therefore unique and equal to m*.
    """
    m1._same(m2)
    _require_qn(m1.rep)
    A, rep = m1.algebra, m1.rep
    basis = measure_basis(A)
    n = A.tables.n
    k = len(basis)
    cols = []
    for i in range(rep.dim):
        lower = [max(m1.table[x][i], m2.table[x][i]) for x in range(n)]
        c = [sum((b[x] for x in range(n)), Fraction(0)) for b in basis]
        A_ub = [[-b[x] for b in basis] for x in range(n)]
        b_ub = [-v for v in lower]
        res = linprog(c, A_ub=A_ub, b_ub=b_ub, free=range(k))
        if res.status != "optimal":
            raise ArithmeticError(f"least-upper-bound LP is {res.status}")
        col = [sum((w * b[x] for w, b in zip(res.x, basis)), Fraction(0)) for x in range(n)]
        if any(v < lo for v, lo in zip(col, lower)):
            raise ArithmeticError("LP solution is not an upper bound")
        cols.append(col)
    tab = tuple(zip(*cols)) if cols else ()
    why = additivity_failure(A, rep, tab)
    if why:
        raise ArithmeticError(f"LP solution is not additive: {why}")
    return RSignedMeasure(A, rep, tab)


# -- simplex certification -------------------------------------------------------------


@dataclass
class SimplexReport:
    vertex_count: int
    dimension: int
    is_simplex: bool
    is_bauer: bool
    witness: list[Fraction] | None = None
    empty: bool = False
    components: int = 1
    component_simplex: list[bool] = field(default_factory=list)
    product_is_simplex: bool | None = None

    def to_json(self) -> dict:
        out = {
            "vertex_count": self.vertex_count,
            "dimension": self.dimension,
            "is_simplex": self.is_simplex,
            "is_bauer": self.is_bauer,
            "empty": self.empty,
            "witness": fmt_vec(self.witness) if self.witness else None,
        }
        if self.components > 1:
            out["product"] = {
                "components": self.components,
                "component_simplex": self.component_simplex,
                "product_is_simplex": self.product_is_simplex,
            }
        return out


def simplex_report(A: PmvAlgebra, rep: RieszRep | None = None) -> SimplexReport:
    """Affine-independence certificate for the real state space.

    For a Q^n target the (R,1_R)-state space is the n-fold product of S(A);
    each factor gets the Q^1 verdict and the product is a simplex only when
    at most one factor has positive dimension.
    """
    rep = rep or Qn(1)
    _require_qn(rep)
    P = state_polytope(A)
    V = P.vertices
    if not V:
        return SimplexReport(0, -1, False, False, empty=True, components=rep.dim)
    dim = affine_rank(V)
    simplex = len(V) == dim + 1
    witness = None if simplex else affine_dependency(V)
    rep_n = rep.dim
    product = simplex and (rep_n == 1 or dim == 0)
    return SimplexReport(len(V), dim, simplex, simplex, witness, False, rep_n,
                         [simplex] * rep_n, product)
