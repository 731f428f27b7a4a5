"""Real states, state polytopes, (R,1_R)-states and their classification."""

from __future__ import annotations

import copy
import itertools
import random
import weakref
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Any, Callable, Sequence

from pmv.algebra import (
    CapExceeded,
    ChainAlgebra,
    GammaAlgebra,
    InfiniteCarrierError,
    PmvAlgebra,
    ProductAlgebra,
    TableAlgebra,
)
from pmv.groups import LexQ2, Qn, RieszRep, Z2LexGroup
from pmv.ideals import Ideal, IdealVerdict, classify_ideal, quotient
from pmv.linalg import AffineSubspace, frac, rref
from pmv.lp import linprog
from pmv.polytope import DEFAULT_MAX_DIM, active_rank, enumerate_vertices_h

Vec = tuple  # tuple of Fractions

DEFAULT_MAX_MORPHISMS = 100_000


def fmt(v) -> str:
    return str(frac(v))


def fmt_vec(v: Sequence) -> list[str]:
    return [fmt(a) for a in v]


# -- states as value tables ----------------------------------------------------


@dataclass(frozen=True, eq=False)
class RState:
    """A map from a finite algebra into [0, 1_R], stored as a full value table.

    ``table[i]`` is the value at the i-th element of ``algebra.tables``.
    """

    algebra: PmvAlgebra
    rep: RieszRep
    table: tuple[Vec, ...]
    name: str = ""

    def __call__(self, x) -> Vec:
        return self.table[self.algebra.tables.index[x]]

    @property
    def bounded(self) -> bool:
        return False

    @property
    def components(self) -> int:
        return self.rep.dim

    def component(self, i: int) -> "RState":
        return RState(self.algebra, Qn(1), tuple((v[i],) for v in self.table))

    def scalar_values(self) -> tuple[Fraction, ...]:
        """Value vector of a Q^1 state in carrier order."""
        if self.rep.dim != 1:
            raise ValueError("scalar_values needs a Q^1 state")
        return tuple(v[0] for v in self.table)

    def values(self) -> dict[str, list[str]]:
        t = self.algebra.tables
        return {t.label(i): fmt_vec(v) for i, v in enumerate(self.table)}

    def to_json(self) -> dict:
        return {"target": repr(self.rep), "values": self.values()}

    def __eq__(self, other):
        return (isinstance(other, RState) and other.algebra is self.algebra
                and other.rep == self.rep and other.table == self.table)

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        body = ", ".join(f"{k}:({','.join(v)})" for k, v in self.values().items())
        return f"RState({self.name + ': ' if self.name else ''}{body})"


@dataclass(frozen=True, eq=False)
class LexFamilyState:
    """s_b on Gamma(Z lex Z, (1,0)) into Q lex Q: s_b(a, m) = (a, m*b)."""

    algebra: GammaAlgebra
    b: Fraction
    rep: RieszRep = field(default_factory=LexQ2)

    def __call__(self, x) -> Vec:
        a, m = x
        return (Fraction(a), m * self.b)

    @property
    def bounded(self) -> bool:
        return True

    def to_json(self) -> dict:
        return {"target": repr(self.rep), "family": {"b": fmt(self.b)}}

    def __repr__(self):
        return f"LexFamilyState(b={self.b})"


AnyState = Any  # RState | LexFamilyState


def _state_violation(A: PmvAlgebra, rep: RieszRep, f: Callable[[Any], Vec], elems, sums) -> str | None:
    """First reason why f is not an (R,1_R)-state, or None."""
    if tuple(f(A.one)) != tuple(rep.one):
        return f"s(1) = {fmt_vec(f(A.one))} is not 1_R"
    for x in elems:
        if not rep.in_unit_interval(f(x)):
            return f"s({A.label(x)}) = {fmt_vec(f(x))} leaves [0, 1_R]"
    for x, y, z in sums:
        if rep.add(f(x), f(y)) != tuple(f(z)):
            return f"s({A.label(x)}+{A.label(y)}) != s({A.label(x)}) + s({A.label(y)})"
    return None


def _finite_sums(A: PmvAlgebra):
    t = A.tables
    return [(t.elements[x], t.elements[y], t.elements[z]) for x, y, z in t.sums]


def make_state(A: PmvAlgebra, rep: RieszRep, table: Sequence[Sequence], name: str = "") -> RState:
    """Build and validate a finite RState from a per-index value table."""
    t = A.tables
    if len(table) != t.n:
        raise ValueError(f"expected {t.n} values, got {len(table)}")
    tab = tuple(rep.check(tuple(v)) for v in table)
    s = RState(A, rep, tab, name)
    why = _state_violation(A, rep, s, t.elements, _finite_sums(A))
    if why:
        raise ValueError(f"not a state: {why}")
    return s


def state_from_function(A: PmvAlgebra, rep: RieszRep, f: Callable[[Any], Sequence], name: str = "") -> RState:
    return make_state(A, rep, [tuple(frac(v) for v in f(x)) for x in A.tables.elements], name)


# -- the state polytope ----------------------------------------------------------

_additive_cache: "weakref.WeakKeyDictionary[PmvAlgebra, AffineSubspace]" = weakref.WeakKeyDictionary()
_polytope_cache: "weakref.WeakKeyDictionary[PmvAlgebra, StatePolytope]" = weakref.WeakKeyDictionary()


def additive_subspace(A: PmvAlgebra) -> AffineSubspace:
    """Solution space of m(0)=0 and m(x+y)=m(x)+m(y) for all defined sums (a copy)."""
    if A not in _additive_cache:
        t = A.tables
        sub = AffineSubspace(t.n)
        sub.add_equation({t.zero: 1}, 0)
        for x, y, z in t.sums:
            coeffs: dict[int, int] = {}
            for v, c in ((x, 1), (y, 1), (z, -1)):
                coeffs[v] = coeffs.get(v, 0) + c
            sub.add_equation(coeffs, 0)
        _additive_cache[A] = sub
    return copy.deepcopy(_additive_cache[A])


@dataclass(eq=False)
class StatePolytope:
    """S(A) in parameter form: s = consts + coefs @ t, subject to 0 <= s <= 1."""

    algebra: PmvAlgebra
    free: list[int]
    consts: list[Fraction]
    coefs: list[list[Fraction]]
    consistent: bool
    equations: int
    max_dim: int = DEFAULT_MAX_DIM

    @property
    def dimension(self) -> int:
        return len(self.free) if self.consistent else -1

    @cached_property
    def rows(self) -> list[tuple[tuple[Fraction, ...], Fraction]]:
        out = []
        for c, a in zip(self.consts, self.coefs):
            a = tuple(a)
            out.append((tuple(-v for v in a), c))  # -(c + a.t) <= 0
            out.append((a, 1 - c))  # c + a.t <= 1
        return out

    def point(self, t: Sequence) -> tuple[Fraction, ...]:
        return tuple(c + sum((x * y for x, y in zip(a, t)), Fraction(0)) for c, a in zip(self.consts, self.coefs))

    def coordinates(self, values: Sequence) -> tuple[Fraction, ...] | None:
        """Parameters of a full value vector, or None if it violates an equality."""
        t = tuple(frac(values[f]) for f in self.free)
        return t if self.point(t) == tuple(frac(v) for v in values) else None

    def contains(self, values: Sequence) -> bool:
        if not self.consistent:
            return False
        return self.coordinates(values) is not None and all(0 <= frac(v) <= 1 for v in values)

    @cached_property
    def vertices(self) -> list[tuple[Fraction, ...]]:
        """Vertex value vectors (carrier order), canonically sorted."""
        if not self.consistent:
            return []
        ts = enumerate_vertices_h(self.rows, self.dimension, max_dim=self.max_dim)
        return sorted(self.point(t) for t in ts)

    @property
    def empty(self) -> bool:
        return not self.vertices

    def is_vertex(self, values: Sequence) -> bool:
        t = self.coordinates(values)
        if t is None or not self.contains(values):
            return False
        return active_rank(self.rows, t) == self.dimension

    def to_json(self) -> dict:
        return {"dimension": self.dimension,
                "vertices": [fmt_vec(v) for v in self.vertices]}


def state_polytope(A: PmvAlgebra, *, max_dim: int = DEFAULT_MAX_DIM) -> StatePolytope:
    """H-representation of the real state space of a finite algebra."""
    if not A.finite:
        raise InfiniteCarrierError(f"{A.name}: state polytopes need a finite carrier")
    P = _polytope_cache.get(A)
    if P is None:
        sub = additive_subspace(A)
        t = A.tables
        sub.add_equation({t.one: 1}, 1)
        free, consts, coefs = sub.parametrization()
        P = StatePolytope(A, free, consts, coefs, sub.consistent, len(t.sums) + 2, max_dim)
        _polytope_cache[A] = P
    if P.max_dim != max_dim:
        P = copy.copy(P)
        P.max_dim = max_dim
        P.__dict__.pop("vertices", None)
    return P


def enumerate_vertices(P: StatePolytope) -> list[RState]:
    """Extremal real states of the algebra, as Q^1-valued states."""
    A = P.algebra
    return [make_state(A, Qn(1), [(v,) for v in vec], name=f"v{i}") for i, vec in enumerate(P.vertices)]


def random_convex_point(points: Sequence[Sequence], rng: random.Random, *, interior: bool = False,
                        denominator: int = 12) -> tuple[Fraction, ...]:
    """Random rational convex combination; ``interior`` forces every weight positive."""
    low = 1 if interior else 0
    w = [rng.randint(low, denominator) for _ in points]
    if sum(w) == 0:
        w[rng.randrange(len(w))] = 1
    total = sum(w)
    dim = len(points[0])
    return tuple(sum((Fraction(wi, total) * frac(p[k]) for wi, p in zip(w, points)), Fraction(0))
                 for k in range(dim))


def random_r_state(A: PmvAlgebra, n: int, rng: random.Random, *, interior: bool = False) -> RState:
    """Q^n-state whose components are random points of S(A)."""
    V = state_polytope(A).vertices
    comps = [random_convex_point(V, rng, interior=interior) for _ in range(n)]
    return make_state(A, Qn(n), list(zip(*comps)))


# -- (R,1_R)-states ------------------------------------------------------------------


def r_state(A: PmvAlgebra, rep: RieszRep, components: Sequence | None = None, *, b=None) -> AnyState:
    """Assemble an (R,1_R)-state.

    For a Q^n target pass n component real states (RState over Q^1, value
    dicts keyed by element, or value sequences in carrier order). For the
    Q lex Q target pass the family parameter ``b >= 0``.
    """
    if isinstance(rep, LexQ2):
        if b is None:
            raise ValueError("the Q lex Q target needs the family parameter b")
        b = frac(b)
        if b < 0:
            raise ValueError("family parameter b must be nonnegative")
        if not (isinstance(A, GammaAlgebra) and isinstance(A.group, Z2LexGroup) and A.u == (1, 0)):
            raise ValueError("the s_b family lives on Gamma(Z lex Z, (1,0))")
        return LexFamilyState(A, b)
    if not isinstance(rep, Qn):
        raise TypeError(f"unsupported target {rep!r}")
    if components is None or len(components) != rep.dim:
        raise ValueError(f"{rep.tag} target needs {rep.dim} component states")
    t = A.tables
    cols = []
    for i, comp in enumerate(components):
        if isinstance(comp, RState):
            col = comp.scalar_values()
        elif isinstance(comp, dict):
            col = tuple(frac(comp[e]) for e in t.elements)
        else:
            col = tuple(frac(v) for v in comp)
        try:
            make_state(A, Qn(1), [(v,) for v in col])
        except ValueError as exc:
            raise ValueError(f"component {i} is not a state: {exc}") from None
        cols.append(col)
    return make_state(A, rep, list(zip(*cols)))


# -- classification ------------------------------------------------------------


@dataclass
class StateVerdict:
    is_state: bool
    is_morphism: bool
    is_meet_preserving: bool
    is_extremal: bool | None
    kernel: Ideal
    kernel_verdict: IdealVerdict
    bounded: bool = False
    note: str = ""
    witness: dict = field(default_factory=dict)
    kernel_sample: list | None = None

    @property
    def kernel_maximal(self) -> bool:
        return self.kernel_verdict.is_maximal

    def to_json(self) -> dict:
        k = self.kernel
        out = {
            "is_state": self.is_state,
            "is_morphism": self.is_morphism,
            "is_meet_preserving": self.is_meet_preserving,
            "is_extremal": "unknown" if self.is_extremal is None else self.is_extremal,
            "kernel": k.labels() if k.members is not None else self.kernel_sample,
            "kernel_normal": self.kernel_verdict.is_normal,
            "kernel_maximal": self.kernel_maximal,
            "bounded": self.bounded,
        }
        if self.note:
            out["note"] = self.note
        if self.witness:
            out["witness"] = self.witness
        return out


def _hom_failure(A: PmvAlgebra, rep: RieszRep, s, elems) -> dict | None:
    """First failure of the homomorphism equations into Gamma(R, 1_R)."""
    one = rep.one
    if tuple(s(A.zero)) != tuple(rep.zero):
        return {"eq": "s(0)=0"}
    for x in elems:
        sx = s(x)
        if tuple(s(A.neg_minus(x))) != rep.sub(one, sx):
            return {"eq": "s(x^-)=s(x)^-", "x": A.label(x)}
        if tuple(s(A.neg_tilde(x))) != rep.sub(one, sx):
            return {"eq": "s(x^~)=s(x)^~", "x": A.label(x)}
    for x in elems:
        for y in elems:
            if tuple(s(A.oplus(x, y))) != rep.truncated_sum(s(x), s(y)):
                return {"eq": "s(x(+)y)=s(x)(+)s(y)", "x": A.label(x), "y": A.label(y)}
    return None


def _meet_failure(A: PmvAlgebra, rep: RieszRep, s, elems) -> dict | None:
    for x in elems:
        for y in elems:
            if tuple(s(A.meet(x, y))) != rep.meet(s(x), s(y)):
                return {"x": A.label(x), "y": A.label(y)}
    return None


def is_morphism(A: PmvAlgebra, s) -> bool:
    elems = A.tables.elements if A.finite else A.sample(25)
    return _hom_failure(A, s.rep, s, elems) is None


def is_meet_preserving(A: PmvAlgebra, s) -> bool:
    elems = A.tables.elements if A.finite else A.sample(25)
    return _meet_failure(A, s.rep, s, elems) is None


def is_extremal(A: PmvAlgebra, s: RState) -> bool:
    """For Q^n targets: every component is a vertex of S(A)."""
    P = state_polytope(A)
    return all(P.is_vertex(s.component(i).scalar_values()) for i in range(s.components))


def state_kernel(A: PmvAlgebra, s) -> Ideal:
    zero = tuple(s.rep.zero)
    if isinstance(s, RState):
        t = A.tables
        return Ideal(A, frozenset(t.elements[i] for i, v in enumerate(s.table) if v == zero))
    return Ideal(A, None, lambda x: tuple(s(x)) == zero, description="{x : s(x) = 0}")


def classify_r_state(A: PmvAlgebra, s, *, bound: int = 25) -> StateVerdict:
    """Morphism / meet-preservation / extremality verdicts plus the kernel."""
    rep = s.rep
    if isinstance(s, LexFamilyState):
        sample = A.sample(bound)
        sums = [(x, y, A.oplus(x, y)) for x in sample for y in sample if A.odot(x, y) == A.zero]
        why = _state_violation(A, rep, s, sample, sums)
        if why:
            raise ValueError(f"not a state: {why}")
        hom = _hom_failure(A, rep, s, sample)
        meet = _meet_failure(A, rep, s, sample)
        K = state_kernel(A, s)
        kv = classify_ideal(A, K, bound=bound)
        witness = {}
        if hom:
            witness["morphism"] = hom
        if meet:
            witness["meet"] = meet
        return StateVerdict(True, hom is None, meet is None, s.b == 0, K, kv, bounded=True,
                            note="extremality from the known classification of the s_b family: "
                                 "only b = 0 is extremal",
                            witness=witness, kernel_sample=[A.label(x) for x in sample if x in K])
    if not isinstance(rep, Qn):
        raise TypeError(f"classification needs a Q^n target, got {rep!r}")
    t = A.tables
    why = _state_violation(A, rep, s, t.elements, _finite_sums(A))
    if why:
        raise ValueError(f"not a state: {why}")
    hom = _hom_failure(A, rep, s, t.elements)
    meet = _meet_failure(A, rep, s, t.elements)
    K = state_kernel(A, s)
    witness = {}
    if hom:
        witness["morphism"] = hom
    if meet:
        witness["meet"] = meet
    return StateVerdict(True, hom is None, meet is None, is_extremal(A, s), K, classify_ideal(A, K),
                        witness=witness)


# -- morphisms ------------------------------------------------------------------


def _chain_factors(A: PmvAlgebra) -> list[int]:
    if isinstance(A, ChainAlgebra):
        return [A.k]
    if isinstance(A, ProductAlgebra) and all(isinstance(f, ChainAlgebra) for f in A.factors):
        return [f.k for f in A.factors]
    raise TypeError(f"{A.name} is not a product of chains")


def morphism_from_partition(A: PmvAlgebra, rep: Qn, desc: Sequence) -> RState:
    """s(x) = sum_i (x_i / k_i) a_i for a Boolean partition (a_1, ..., a_n) of 1_R.

    A scalar 0 or 1 in ``desc`` stands for 0 or 1_R.
    """
    ks = _chain_factors(A)
    if len(desc) != len(ks):
        raise ValueError(f"invalid partition: need {len(ks)} Boolean elements, got {len(desc)}")
    m = rep.dim
    parts = []
    for a in desc:
        if isinstance(a, (int, Fraction, str)):
            a = (frac(a),) * m
        a = rep.check(tuple(a))
        if any(v not in (0, 1) for v in a):
            raise ValueError(f"invalid partition: {fmt_vec(a)} is not Boolean in Gamma({rep.tag})")
        parts.append(a)
    for i, j in itertools.combinations(range(len(parts)), 2):
        if rep.meet(parts[i], parts[j]) != rep.zero:
            raise ValueError(f"invalid partition: a_{i + 1} and a_{j + 1} are not disjoint")
    total = rep.zero
    for a in parts:
        total = rep.add(total, a)
    if total != rep.one:
        raise ValueError("invalid partition: the elements do not sum to 1_R")
    single = isinstance(A, ChainAlgebra)

    def f(x):
        xs = (x,) if single else x
        out = rep.zero
        for xi, k, a in zip(xs, ks, parts):
            out = rep.add(out, rep.scale(Fraction(xi, k), a))
        return out

    return state_from_function(A, rep, f)


def farey(order: int) -> list[Fraction]:
    return sorted({Fraction(p, q) for q in range(1, max(order, 1) + 1) for p in range(q + 1)})


def real_morphisms(A: PmvAlgebra) -> list[tuple[Fraction, ...]]:
    """All homomorphisms A -> [0,1] as value vectors, by propagating backtracking search.

    A homomorphic image of a finite algebra in [0,1] is a chain with at most
    height(A)+1 elements, hence a subalgebra of the (height)-step chain, so
    candidate values are Farey fractions of that order.
    """
    t = A.tables
    n = t.n
    cands = farey(t.height)
    order = sorted(range(n), key=lambda i: (int(t.below_count[i]), i))
    val: list[Fraction | None] = [None] * n
    assigned: list[int] = []
    one = Fraction(1)

    def assign(i: int, v: Fraction, trail: list[int]) -> bool:
        stack = [(i, v)]
        while stack:
            j, w = stack.pop()
            if val[j] is not None:
                if val[j] != w:
                    return False
                continue
            val[j] = w
            assigned.append(j)
            trail.append(j)
            stack.append((int(t.minus[j]), one - w))
            stack.append((int(t.tilde[j]), one - w))
            for k in list(assigned):
                vk = val[k]
                stack.append((int(t.oplus[j, k]), min(w + vk, one)))
                stack.append((int(t.oplus[k, j]), min(vk + w, one)))
        return True

    def undo(trail: list[int]) -> None:
        for j in trail:
            val[j] = None
        del assigned[len(assigned) - len(trail):]

    out = []

    def search():
        nxt = next((i for i in order if val[i] is None), None)
        if nxt is None:
            out.append(tuple(val))
            return
        for c in cands:
            trail: list[int] = []
            if assign(nxt, c, trail):
                search()
            undo(trail)

    base: list[int] = []
    if assign(t.zero, Fraction(0), base) and assign(t.one, one, base):
        search()
    return sorted(out)


def enumerate_r_morphisms(A: PmvAlgebra, rep: Qn, *, max_morphisms: int = DEFAULT_MAX_MORPHISMS) -> list[RState]:
    """All homomorphisms A -> Gamma(Q^m, 1); a map into a product is a hom iff each coordinate is."""
    if not A.finite:
        raise InfiniteCarrierError("morphism enumeration needs a finite carrier")
    if not isinstance(rep, Qn):
        raise TypeError("morphism enumeration supports Q^m targets")
    base = real_morphisms(A)
    total = len(base) ** rep.dim
    if total > max_morphisms:
        raise CapExceeded(f"{total} morphisms exceed the cap {max_morphisms}")
    out = []
    for combo in itertools.product(base, repeat=rep.dim):
        out.append(RState(A, rep, tuple(zip(*combo))))
    return out


# -- kernels and quotients -----------------------------------------------------


def quotient_by_kernel(A: PmvAlgebra, s: RState) -> tuple[TableAlgebra, RState, dict]:
    """M/Ker(s) with the induced state s~([x]) = s(x), plus the projection map."""
    K = state_kernel(A, s)
    Q, proj = quotient(A, K)
    t = A.tables
    vals: list[Vec | None] = [None] * len(Q.carrier)
    for i, e in enumerate(t.elements):
        c = proj[e]
        if vals[c] is None:
            vals[c] = s.table[i]
        elif vals[c] != s.table[i]:
            raise ArithmeticError(f"induced state is not well defined on class {Q.carrier[c]}")
    induced = make_state(Q, s.rep, vals)
    return Q, induced, proj


# -- convex decomposition --------------------------------------------------------


@dataclass
class Decomposition:
    states: list[RState]
    weights: list[Fraction]

    def reconstruct(self) -> tuple[Vec, ...]:
        first = self.states[0]
        rep = first.rep
        out = [rep.zero] * len(first.table)
        for st, w in zip(self.states, self.weights):
            out = [rep.add(o, rep.scale(w, v)) for o, v in zip(out, st.table)]
        return tuple(out)

    def to_json(self) -> dict:
        return {"weights": fmt_vec(self.weights),
                "states": [[fmt_vec(v) for v in st.table] for st in self.states]}


def barycentric(vertices: Sequence[Sequence], point: Sequence) -> list[Fraction]:
    """Nonnegative weights summing to 1 that reproduce ``point`` (exact LP feasibility)."""
    k = len(vertices)
    dim = len(point)
    rows = [[frac(v[i]) for v in vertices] for i in range(dim)]
    rows.append([Fraction(1)] * k)
    rhs = [frac(p) for p in point] + [Fraction(1)]
    # the equality system is highly redundant; keep an independent subset
    red, pivots = rref([r + [v] for r, v in zip(rows, rhs)], k + 1)
    if pivots and pivots[-1] == k:
        raise ValueError("state lies outside the convex hull of the extremal states")
    res = linprog([0] * k, A_eq=[r[:k] for r in red], b_eq=[r[k] for r in red])
    if res.status != "optimal":
        raise ValueError("state lies outside the convex hull of the extremal states")
    return list(res.x)


def convex_decompose(A: PmvAlgebra, s: RState, vertices: Sequence[RState] | None = None) -> Decomposition:
    """Write a Q^n-state as a convex combination of extremal Q^n-states.

    Weights are computed per component over the vertices of S(A) and
    multiplied out over all combinations of component vertices.
    """
    if not isinstance(s.rep, Qn):
        raise TypeError("convex decomposition needs a Q^n target")
    if vertices is None:
        vertices = enumerate_vertices(state_polytope(A))
    V = [v.scalar_values() for v in vertices]
    per = [barycentric(V, s.component(i).scalar_values()) for i in range(s.components)]
    states, weights = [], []
    for combo in itertools.product(range(len(V)), repeat=s.components):
        w = Fraction(1)
        for i, j in enumerate(combo):
            w *= per[i][j]
        states.append(RState(A, s.rep, tuple(zip(*(V[j] for j in combo)))))
        weights.append(w)
    dec = Decomposition(states, weights)
    if dec.reconstruct() != s.table:
        raise ArithmeticError("convex decomposition does not reconstruct the state")
    return dec


# -- the identity suite --------------------------------------------------------


IDENTITIES = ("i", "ii", "iii", "iv", "v", "vi", "vii", "xii")


def check_state_identities(A: PmvAlgebra, s, *, bound: int = 25) -> dict[str, dict | None]:
    """Evaluate the basic state identities; maps each name to None (pass) or a witness."""
    rep = s.rep
    elems = A.tables.elements if A.finite else A.sample(bound)
    one = rep.one
    lab = A.label
    res: dict[str, dict | None] = {k: None for k in IDENTITIES}

    def fail(name, **kw):
        if res[name] is None:
            res[name] = {k: lab(v) for k, v in kw.items()}

    if tuple(s(A.zero)) != rep.zero:
        res["i"] = {}
    for x in elems:
        sx = s(x)
        mx, tx = A.neg_minus(x), A.neg_tilde(x)
        if not (tuple(s(mx)) == rep.sub(one, sx) == tuple(s(tx))):
            fail("iii", x=x)
        if A.contains(A.neg_minus(mx)) and not (tuple(s(A.neg_minus(mx))) == tuple(sx) == tuple(s(A.neg_tilde(tx)))):
            fail("iv", x=x)
        for y in elems:
            sy = s(y)
            if A.leq(x, y):
                diff = rep.sub(sy, sx)
                if not (rep.leq(sx, sy) and tuple(s(A.odot(y, mx))) == diff == tuple(s(A.odot(tx, y)))):
                    fail("ii", x=x, y=y)
            j, m = A.join(x, y), A.meet(x, y)
            if rep.add(s(j), s(m)) != rep.add(sx, sy):
                fail("v", x=x, y=y)
            p, q = A.oplus(x, y), A.odot(x, y)
            if rep.add(s(p), s(q)) != rep.add(sx, sy):
                fail("vi", x=x, y=y)
            if rep.truncated_sum(s(p), s(q)) != rep.truncated_sum(sx, sy):
                fail("vii", x=x, y=y)
            if tuple(s(p)) != tuple(s(A.oplus(y, x))):
                fail("xii", x=x, y=y)
    return res
