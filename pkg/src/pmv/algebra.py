"""Pseudo MV-algebras: backends, derived operations, axiom checks, partial sum.

Four backends share the :class:`PmvAlgebra` interface:

* :class:`TableAlgebra` - Cayley tables over labelled elements (handles are
  indices into the carrier list);
* :class:`ChainAlgebra` - the chain Gamma(Z, k) with carrier 0..k;
* :class:`GammaAlgebra` - the unit interval [0, u] of a unital l-group,
  finite for Z^n and infinite for Z lex Z;
* :class:`ProductAlgebra` - direct products, handles are tuples.

Finite algebras compile to :class:`FiniteTables` (numpy index tables), which
every exhaustive routine in the package works from.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Iterable, Sequence

import numpy as np

from pmv.groups import OrderedGroup, UnitalGroup, Z2LexGroup, ZnGroup


class CarrierError(ValueError):
    """An element does not belong to the algebra's carrier."""


class InfiniteCarrierError(ValueError):
    """An exhaustive operation was requested on an infinite algebra."""


class CapExceeded(RuntimeError):
    """A desk-scale size cap was exceeded."""


class _Undefined:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNDEFINED"

    def __bool__(self):
        return False


UNDEFINED = _Undefined()

DEFAULT_MAX_CARRIER = 64


class PmvAlgebra:
    """Common interface. Subclasses implement the primitive operations."""

    finite: bool = True

    # primitives -----------------------------------------------------------
    zero: Any
    one: Any

    def oplus(self, x, y):
        raise NotImplementedError

    def neg_minus(self, x):
        raise NotImplementedError

    def neg_tilde(self, x):
        raise NotImplementedError

    def contains(self, x) -> bool:
        raise NotImplementedError

    def elements(self) -> list:
        raise InfiniteCarrierError(f"{self.name} has an infinite carrier")

    def label(self, x) -> str:
        return str(x)

    @property
    def name(self) -> str:
        return type(self).__name__

    # derived operations ---------------------------------------------------
    def odot(self, x, y):
        # y (.) x = (x^- (+) y^-)^~
        return self.neg_tilde(self.oplus(self.neg_minus(y), self.neg_minus(x)))

    def leq(self, x, y) -> bool:
        return self.oplus(self.neg_minus(x), y) == self.one

    def join(self, x, y):
        return self.oplus(x, self.odot(self.neg_tilde(x), y))

    def meet(self, x, y):
        return self.odot(x, self.oplus(self.neg_minus(x), y))

    # finite helpers -------------------------------------------------------
    @cached_property
    def tables(self) -> "FiniteTables":
        return FiniteTables.compile(self)

    def size(self) -> int:
        return len(self.elements())

    def require(self, x):
        if not self.contains(x):
            raise CarrierError(f"{x!r} is not an element of {self.name}")
        return x


class TableAlgebra(PmvAlgebra):
    """Algebra given by Cayley tables. Handles are carrier indices."""

    def __init__(self, carrier: Sequence[str], oplus, neg_minus, neg_tilde, zero: int, one: int, name: str | None = None):
        n = len(carrier)
        self.carrier = [str(c) for c in carrier]
        if len(set(self.carrier)) != n:
            raise ValueError("carrier labels must be distinct")
        self.oplus_table = np.asarray(oplus, dtype=np.int64)
        self.minus_table = np.asarray(neg_minus, dtype=np.int64)
        self.tilde_table = np.asarray(neg_tilde, dtype=np.int64)
        if self.oplus_table.shape != (n, n):
            raise ValueError(f"oplus table must be {n}x{n}, got shape {self.oplus_table.shape}")
        if self.minus_table.shape != (n,) or self.tilde_table.shape != (n,):
            raise ValueError("negation tables must have one entry per carrier element")
        for t in (self.oplus_table, self.minus_table, self.tilde_table):
            if t.size and (t.min() < 0 or t.max() >= n):
                raise ValueError("table entry outside the carrier")
        self.zero = int(zero)
        self.one = int(one)
        self._name = name or f"Table[{n}]"

    @property
    def name(self):
        return self._name

    def oplus(self, x, y):
        return int(self.oplus_table[x, y])

    def neg_minus(self, x):
        return int(self.minus_table[x])

    def neg_tilde(self, x):
        return int(self.tilde_table[x])

    def contains(self, x):
        return isinstance(x, (int, np.integer)) and 0 <= x < len(self.carrier)

    def elements(self):
        return list(range(len(self.carrier)))

    def label(self, x):
        return self.carrier[x]

    def index_of(self, label: str) -> int:
        return self.carrier.index(str(label))

    def to_json(self) -> dict:
        lab = self.carrier
        return {
            "kind": "table",
            "carrier": list(lab),
            "oplus": [[lab[v] for v in row] for row in self.oplus_table.tolist()],
            "neg_minus": [lab[v] for v in self.minus_table.tolist()],
            "neg_tilde": [lab[v] for v in self.tilde_table.tolist()],
            "zero": lab[self.zero],
            "one": lab[self.one],
        }

    @classmethod
    def from_json(cls, spec: dict) -> "TableAlgebra":
        carrier = [str(c) for c in spec["carrier"]]
        idx = {c: i for i, c in enumerate(carrier)}

        def look(v, where):
            try:
                return idx[str(v)]
            except KeyError:
                raise ValueError(f"{where}: unknown element {v!r}") from None

        rows = spec["oplus"]
        n = len(carrier)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"oplus: table must be {n}x{n}")
        if len(spec["neg_minus"]) != n or len(spec["neg_tilde"]) != n:
            raise ValueError("neg_minus/neg_tilde: one entry per carrier element required")
        oplus = [[look(v, f"oplus[{i}][{j}]") for j, v in enumerate(r)] for i, r in enumerate(rows)]
        minus = [look(v, f"neg_minus[{i}]") for i, v in enumerate(spec["neg_minus"])]
        tilde = [look(v, f"neg_tilde[{i}]") for i, v in enumerate(spec["neg_tilde"])]
        return cls(carrier, oplus, minus, tilde, look(spec["zero"], "zero"), look(spec["one"], "one"))

    def with_oplus_entry(self, x: int, y: int, value: int) -> "TableAlgebra":
        table = self.oplus_table.copy()
        table[x, y] = value
        return TableAlgebra(self.carrier, table, self.minus_table, self.tilde_table, self.zero, self.one,
                            name=f"{self.name}[{self.carrier[x]}+{self.carrier[y]}:={self.carrier[value]}]")


class ChainAlgebra(PmvAlgebra):
    """Gamma(Z, k): the (k+1)-element Lukasiewicz chain on 0..k."""

    def __init__(self, k: int):
        if k < 1:
            raise ValueError("chain length k must be >= 1")
        self.k = k
        self.zero = 0
        self.one = k

    @property
    def name(self):
        return f"L{self.k}"

    def oplus(self, x, y):
        return min(x + y, self.k)

    def neg_minus(self, x):
        return self.k - x

    def neg_tilde(self, x):
        return self.k - x

    def odot(self, x, y):
        return max(x + y - self.k, 0)

    def leq(self, x, y):
        return x <= y

    def join(self, x, y):
        return max(x, y)

    def meet(self, x, y):
        return min(x, y)

    def contains(self, x):
        return isinstance(x, (int, np.integer)) and not isinstance(x, bool) and 0 <= x <= self.k

    def elements(self):
        return list(range(self.k + 1))


class GammaAlgebra(PmvAlgebra):
    """Gamma(G, u) = [0, u] with x (+) y = (x+y) ^ u, x^- = u-x, x^~ = -x+u."""

    def __init__(self, ug: UnitalGroup):
        self.ug = ug
        self.group: OrderedGroup = ug.group
        self.u = ug.unit
        self.zero = self.group.zero
        self.one = self.u
        self.finite = isinstance(self.group, ZnGroup)

    @classmethod
    def zn(cls, unit: Sequence[int]) -> "GammaAlgebra":
        return cls(UnitalGroup(ZnGroup(len(unit)), tuple(unit)))

    @classmethod
    def z2lex(cls, unit: Sequence[int] = (1, 0)) -> "GammaAlgebra":
        return cls(UnitalGroup(Z2LexGroup(), tuple(unit)))

    @property
    def name(self):
        return f"Gamma({self.group.tag},{self.label(self.u)})"

    def oplus(self, x, y):
        g = self.group
        return g.meet(g.add(x, y), self.u)

    def neg_minus(self, x):
        return self.group.sub(self.u, x)

    def neg_tilde(self, x):
        g = self.group
        return g.add(g.neg(x), self.u)

    def odot(self, x, y):
        g = self.group
        return g.join(g.add(g.sub(x, self.u), y), g.zero)

    def leq(self, x, y):
        return self.group.leq(x, y)

    def join(self, x, y):
        return self.group.join(x, y)

    def meet(self, x, y):
        return self.group.meet(x, y)

    def contains(self, x):
        try:
            x = self.group.check(tuple(x))
        except (TypeError, ValueError):
            return False
        return self.group.leq(self.group.zero, x) and self.group.leq(x, self.u)

    def require(self, x):
        x = tuple(x)
        return super().require(x)

    def elements(self):
        if not self.finite:
            raise InfiniteCarrierError(f"{self.name} has an infinite carrier")
        return [tuple(p) for p in itertools.product(*(range(a + 1) for a in self.u))]

    def sample(self, bound: int) -> list:
        """Deterministic finite sample of the carrier, in increasing order."""
        if self.finite:
            return self.elements()
        top = self.u[0]
        # the lex interval [0, u]: first coordinate 0 with second >= 0,
        # 0 < first < top with any second, first == top with second <= u[1]
        out = []
        for a in range(top + 1):
            if a == 0:
                seconds = range(0, bound)
            elif a == top:
                seconds = range(self.u[1] - bound + 1, self.u[1] + 1)
            else:
                seconds = range(-bound + 1, bound)
            out.extend((a, b) for b in seconds)
        return out

    def label(self, x):
        return "(" + ",".join(str(v) for v in x) + ")"


class ProductAlgebra(PmvAlgebra):
    """Direct product; operations act componentwise."""

    def __init__(self, factors: Sequence[PmvAlgebra]):
        if not factors:
            raise ValueError("a product needs at least one factor")
        self.factors = list(factors)
        self.zero = tuple(f.zero for f in self.factors)
        self.one = tuple(f.one for f in self.factors)
        self.finite = all(f.finite for f in self.factors)

    @property
    def name(self):
        return "x".join(f.name for f in self.factors)

    def _map2(self, op, x, y):
        return tuple(getattr(f, op)(a, b) for f, a, b in zip(self.factors, x, y))

    def oplus(self, x, y):
        return self._map2("oplus", x, y)

    def odot(self, x, y):
        return self._map2("odot", x, y)

    def join(self, x, y):
        return self._map2("join", x, y)

    def meet(self, x, y):
        return self._map2("meet", x, y)

    def leq(self, x, y):
        return all(f.leq(a, b) for f, a, b in zip(self.factors, x, y))

    def neg_minus(self, x):
        return tuple(f.neg_minus(a) for f, a in zip(self.factors, x))

    def neg_tilde(self, x):
        return tuple(f.neg_tilde(a) for f, a in zip(self.factors, x))

    def contains(self, x):
        return isinstance(x, tuple) and len(x) == len(self.factors) and all(
            f.contains(a) for f, a in zip(self.factors, x))

    def elements(self):
        return [tuple(p) for p in itertools.product(*(f.elements() for f in self.factors))]

    def label(self, x):
        return "(" + ",".join(f.label(a) for f, a in zip(self.factors, x)) + ")"


def chain_power(k: int, n: int) -> ProductAlgebra:
    """The product of n copies of the chain L_k."""
    return ProductAlgebra([ChainAlgebra(k) for _ in range(n)])


def chain_product(*ks: int) -> ProductAlgebra:
    return ProductAlgebra([ChainAlgebra(k) for k in ks])


@dataclass
class FiniteTables:
    """Index-based operation tables of a finite algebra (canonical order)."""

    algebra: PmvAlgebra
    elements: list
    index: dict
    oplus: np.ndarray
    minus: np.ndarray
    tilde: np.ndarray
    zero: int
    one: int

    @classmethod
    def compile(cls, A: PmvAlgebra) -> "FiniteTables":
        if not A.finite:
            raise InfiniteCarrierError(f"{A.name} has an infinite carrier")
        if isinstance(A, TableAlgebra):
            n = len(A.carrier)
            return cls(A, list(range(n)), {i: i for i in range(n)}, A.oplus_table.copy(),
                       A.minus_table.copy(), A.tilde_table.copy(), A.zero, A.one)
        elems = A.elements()
        index = {e: i for i, e in enumerate(elems)}
        n = len(elems)
        oplus = np.empty((n, n), dtype=np.int64)
        for i, x in enumerate(elems):
            for j, y in enumerate(elems):
                oplus[i, j] = index[A.oplus(x, y)]
        minus = np.array([index[A.neg_minus(x)] for x in elems], dtype=np.int64)
        tilde = np.array([index[A.neg_tilde(x)] for x in elems], dtype=np.int64)
        return cls(A, elems, index, oplus, minus, tilde, index[A.zero], index[A.one])

    @property
    def n(self) -> int:
        return len(self.elements)

    @cached_property
    def odot(self) -> np.ndarray:
        # x (.) y = (y^- (+) x^-)^~
        m = self.minus
        return self.tilde[self.oplus[m[None, :], m[:, None]]]

    @cached_property
    def leq(self) -> np.ndarray:
        return self.oplus[self.minus[:, None], np.arange(self.n)[None, :]] == self.one

    @cached_property
    def join(self) -> np.ndarray:
        ar = np.arange(self.n)
        return self.oplus[ar[:, None], self.odot[self.tilde[:, None], ar[None, :]]]

    @cached_property
    def meet(self) -> np.ndarray:
        ar = np.arange(self.n)
        return self.odot[ar[:, None], self.oplus[self.minus[:, None], ar[None, :]]]

    @cached_property
    def summable(self) -> np.ndarray:
        """summable[x, y] iff x + y is defined."""
        return self.odot == self.zero

    @cached_property
    def sums(self) -> list[tuple[int, int, int]]:
        """All defined partial sums (x, y, x+y) in lexicographic order."""
        xs, ys = np.nonzero(self.summable)
        return [(int(x), int(y), int(self.oplus[x, y])) for x, y in zip(xs, ys)]

    @cached_property
    def below_count(self) -> np.ndarray:
        return self.leq.sum(axis=0)

    @cached_property
    def height(self) -> int:
        """Length of the longest chain 0 < ... < 1."""
        order = np.argsort(self.below_count, kind="stable")
        h = np.zeros(self.n, dtype=np.int64)
        leq = self.leq
        for j in order:
            below = [i for i in range(self.n) if leq[i, j] and i != j]
            h[j] = max((h[i] + 1 for i in below), default=0)
        return int(h[self.one])

    def label(self, i: int) -> str:
        return self.algebra.label(self.elements[i])


def to_table(A: PmvAlgebra) -> TableAlgebra:
    """Copy a finite algebra into a :class:`TableAlgebra` with the same labels."""
    t = A.tables
    labels = [A.label(e) for e in t.elements]
    return TableAlgebra(labels, t.oplus, t.minus, t.tilde, t.zero, t.one, name=f"table({A.name})")


# -- evaluation --------------------------------------------------------------

_UNARY = {"neg_minus", "neg_tilde"}
_BINARY = {"oplus", "odot", "leq", "join", "meet"}


def pmv_eval(op: str, A: PmvAlgebra, x, y=None):
    """Evaluate a primitive or derived operation, checking carrier membership."""
    x = A.require(x)
    if op in _UNARY:
        return getattr(A, op)(x)
    if op not in _BINARY:
        raise ValueError(f"unknown operation {op!r}")
    if y is None:
        raise ValueError(f"operation {op!r} needs two operands")
    y = A.require(y)
    return getattr(A, op)(x, y)


def partial_add(A: PmvAlgebra, x, y):
    """x + y, defined exactly when x (.) y = 0; otherwise UNDEFINED."""
    if A.odot(x, y) != A.zero:
        return UNDEFINED
    return A.oplus(x, y)


def partial_sum(A: PmvAlgebra, items: Iterable):
    total = A.zero
    for a in items:
        total = partial_add(A, total, a)
        if total is UNDEFINED:
            return UNDEFINED
    return total


def subtract(A: PmvAlgebra, x, y, side: str = "right"):
    """For x <= y: side='right' gives y - x (z + x = y); side='left' gives -x + y (x + z = y)."""
    x, y = A.require(x), A.require(y)
    if not A.leq(x, y):
        raise ValueError(f"{A.label(x)} is not below {A.label(y)}")
    if side == "right":
        z = A.odot(y, A.neg_minus(x))
        back = partial_add(A, z, x)
    elif side == "left":
        z = A.odot(A.neg_tilde(x), y)
        back = partial_add(A, x, z)
    else:
        raise ValueError("side must be 'left' or 'right'")
    if back != y:
        raise ArithmeticError(f"difference of {A.label(y)} and {A.label(x)} does not re-add")
    return z


def iterate(A: PmvAlgebra, x, n: int, mode: str = "nat_mul"):
    """Iterated operations: nat_mul (partial sum nx), odot_pow (x^n), oplus_mul (n.x with (+))."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if mode == "nat_mul":
        acc = A.zero
        for _ in range(n):
            acc = partial_add(A, acc, x)
            if acc is UNDEFINED:
                return UNDEFINED
        return acc
    if mode == "odot_pow":
        acc = A.one
        for _ in range(n):
            acc = A.odot(acc, x)
        return acc
    if mode == "oplus_mul":
        acc = A.zero
        for _ in range(n):
            acc = A.oplus(acc, x)
        return acc
    raise ValueError(f"unknown iteration mode {mode!r}")


# -- axioms --------------------------------------------------------------------

AXIOMS = ("A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "0!=1")


@dataclass
class AxiomResult:
    passed: bool
    witness: dict | None = None


@dataclass
class AxiomReport:
    algebra: str
    results: dict[str, AxiomResult]
    bounded: bool = False
    sample_size: int | None = None

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results.values())

    @property
    def failed(self) -> list[str]:
        return [k for k, r in self.results.items() if not r.passed]

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra,
            "ok": self.ok,
            "bounded": self.bounded,
            "axioms": {k: ({"pass": True} if r.passed else {"pass": False, "witness": r.witness})
                       for k, r in self.results.items()},
        }


def _first(mask: np.ndarray, names: str, label: Callable[[int], str], offset=()):
    hits = np.argwhere(mask)
    if hits.size == 0:
        return None
    idx = tuple(offset) + tuple(int(v) for v in hits[0])
    return {name: label(i) for name, i in zip(names, idx)}


def check_axioms(A: PmvAlgebra) -> AxiomReport:
    """Exhaustively evaluate A1-A8 and 0 != 1; report the first counterexample per axiom."""
    if not A.finite:
        raise InfiniteCarrierError(f"{A.name}: use sampled_axiom_check for infinite carriers")
    t = A.tables if not isinstance(A, TableAlgebra) else FiniteTables.compile(A)
    n = t.n
    O, mi, ti = t.oplus, t.minus, t.tilde
    od = t.odot
    lab = t.label
    ar = np.arange(n)
    X, Y = ar[:, None], ar[None, :]
    res: dict[str, AxiomResult] = {}

    # A1, chunked over x to bound memory
    w = None
    for x in range(n):
        lhs = O[x, O]  # x (+) (y (+) z): O[x, O[y, z]]
        rhs = O[O[x][:, None], ar[None, :]]  # (x (+) y) (+) z
        bad = lhs != rhs
        if bad.any():
            w = _first(bad, "yz", lab)
            w = {"x": lab(x), **w}
            break
    res["A1"] = AxiomResult(w is None, w)

    bad = (O[:, t.zero] != ar) | (O[t.zero, :] != ar)
    res["A2"] = AxiomResult(not bad.any(), _first(bad, "x", lab))
    bad = (O[:, t.one] != t.one) | (O[t.one, :] != t.one)
    res["A3"] = AxiomResult(not bad.any(), _first(bad, "x", lab))
    ok4 = ti[t.one] == t.zero and mi[t.one] == t.zero
    res["A4"] = AxiomResult(bool(ok4), None if ok4 else {})
    bad = ti[O[mi[X], mi[Y]]] != mi[O[ti[X], ti[Y]]]
    res["A5"] = AxiomResult(not bad.any(), _first(bad, "xy", lab))
    e1 = O[X, od[ti[X], Y]]
    e2 = O[Y, od[ti[Y], X]]
    e3 = O[od[X, mi[Y]], Y]
    e4 = O[od[Y, mi[X]], X]
    bad = (e1 != e2) | (e2 != e3) | (e3 != e4)
    res["A6"] = AxiomResult(not bad.any(), _first(bad, "xy", lab))
    bad = od[X, O[mi[X], Y]] != od[O[X, ti[Y]], Y]
    res["A7"] = AxiomResult(not bad.any(), _first(bad, "xy", lab))
    bad = ti[mi] != ar
    res["A8"] = AxiomResult(not bad.any(), _first(bad, "x", lab))
    res["0!=1"] = AxiomResult(t.zero != t.one, None if t.zero != t.one else {})
    return AxiomReport(A.name, res)


def sampled_axiom_check(A: PmvAlgebra, sample: Sequence) -> AxiomReport:
    """Evaluate A1-A8 over the cube of a finite sample (bounded verification)."""
    if isinstance(A, TableAlgebra):
        return check_axioms(A)
    S = [A.require(s) for s in sample]
    lab = A.label
    O, mi, ti, od = A.oplus, A.neg_minus, A.neg_tilde, A.odot
    res: dict[str, AxiomResult] = {}

    def first(pred, arity):
        for combo in itertools.product(S, repeat=arity):
            if not pred(*combo):
                return {k: lab(v) for k, v in zip("xyz", combo)}
        return None

    checks: list[tuple[str, int, Callable]] = [
        ("A1", 3, lambda x, y, z: O(x, O(y, z)) == O(O(x, y), z)),
        ("A2", 1, lambda x: O(x, A.zero) == x == O(A.zero, x)),
        ("A3", 1, lambda x: O(x, A.one) == A.one == O(A.one, x)),
        ("A5", 2, lambda x, y: ti(O(mi(x), mi(y))) == mi(O(ti(x), ti(y)))),
        ("A6", 2, lambda x, y: O(x, od(ti(x), y)) == O(y, od(ti(y), x)) == O(od(x, mi(y)), y)
         == O(od(y, mi(x)), x)),
        ("A7", 2, lambda x, y: od(x, O(mi(x), y)) == od(O(x, ti(y)), y)),
        ("A8", 1, lambda x: ti(mi(x)) == x),
    ]
    for name, arity, pred in checks:
        w = first(pred, arity)
        res[name] = AxiomResult(w is None, w)
    ok4 = ti(A.one) == A.zero and mi(A.one) == A.zero
    res["A4"] = AxiomResult(ok4, None if ok4 else {})
    res["0!=1"] = AxiomResult(A.zero != A.one, None if A.zero != A.one else {})
    res = {k: res[k] for k in AXIOMS}
    return AxiomReport(A.name, res, bounded=True, sample_size=len(S))


# -- Riesz decomposition -------------------------------------------------------


@dataclass(frozen=True)
class Rdp2Witness:
    c11: Any
    c12: Any
    c21: Any
    c22: Any


def verify_rdp2(A: PmvAlgebra, a1, a2, b1, b2, w: Rdp2Witness) -> bool:
    return (
        partial_add(A, w.c11, w.c12) == a1
        and partial_add(A, w.c21, w.c22) == a2
        and partial_add(A, w.c11, w.c21) == b1
        and partial_add(A, w.c12, w.c22) == b2
        and A.meet(w.c12, w.c21) == A.zero
    )


def rdp2_brute_force(A: PmvAlgebra, a1, a2, b1, b2) -> Rdp2Witness | None:
    """Exhaustive search for a decomposition witness (finite carriers)."""
    elems = A.elements()
    for c11 in elems:
        for c12 in elems:
            if partial_add(A, c11, c12) != a1:
                continue
            for c21 in elems:
                if partial_add(A, c11, c21) != b1 or A.meet(c12, c21) != A.zero:
                    continue
                for c22 in elems:
                    w = Rdp2Witness(c11, c12, c21, c22)
                    if verify_rdp2(A, a1, a2, b1, b2, w):
                        return w
    return None


def rdp2_decompose(A: PmvAlgebra, a1, a2, b1, b2) -> Rdp2Witness:
    """Common refinement of a1 + a2 = b1 + b2 with c12 ^ c21 = 0."""
    a1, a2, b1, b2 = (A.require(v) for v in (a1, a2, b1, b2))
    sa, sb = partial_add(A, a1, a2), partial_add(A, b1, b2)
    if sa is UNDEFINED or sb is UNDEFINED or sa != sb:
        raise ValueError("rdp2_decompose needs a1 + a2 and b1 + b2 defined and equal")
    if isinstance(A, TableAlgebra):
        w = rdp2_brute_force(A, a1, a2, b1, b2)
        if w is None:
            raise ArithmeticError("no RDP2 witness: the table is not a pseudo MV-algebra")
        return w
    c11 = A.meet(a1, b1)
    c12 = subtract(A, c11, a1, "left")
    c21 = subtract(A, c11, b1, "left")
    c22 = subtract(A, c21, a2, "left")
    w = Rdp2Witness(c11, c12, c21, c22)
    if not verify_rdp2(A, a1, a2, b1, b2, w):
        raise ArithmeticError("l-group decomposition failed verification")
    return w


# -- Boolean elements ----------------------------------------------------------


def boolean_elements(A: PmvAlgebra) -> list:
    return [e for e in A.elements() if A.oplus(e, e) == e]


def boolean_partitions(A: PmvAlgebra, n: int) -> list[tuple]:
    """Ordered n-tuples of pairwise disjoint Boolean elements summing to 1."""
    B = boolean_elements(A)
    out = []
    for combo in itertools.product(B, repeat=n):
        if any(A.meet(combo[i], combo[j]) != A.zero for i in range(n) for j in range(i + 1, n)):
            continue
        if partial_sum(A, combo) == A.one:
            out.append(combo)
    return out


# -- construction from JSON ----------------------------------------------------


def algebra_from_spec(spec: dict) -> PmvAlgebra:
    """Build an algebra from its JSON description (table, chain, gamma, product)."""
    kind = spec.get("kind")
    if kind == "table":
        return TableAlgebra.from_json(spec)
    if kind == "chain":
        return ChainAlgebra(int(spec["k"]))
    if kind == "gamma":
        group = spec.get("group")
        unit = [int(v) for v in spec["unit"]]
        if group == "zn":
            if "n" in spec and int(spec["n"]) != len(unit):
                raise ValueError("gamma: n does not match the unit's length")
            return GammaAlgebra.zn(unit)
        if group == "z2lex":
            return GammaAlgebra.z2lex(unit)
        raise ValueError(f"gamma: unknown group {group!r}")
    if kind == "product":
        return ProductAlgebra([algebra_from_spec(f) for f in spec["factors"]])
    raise ValueError(f"unknown algebra kind {kind!r}")
