"""The state pseudo-norm on a unital group, its kernel and the image subgroup.

The completion of G under d_s is not built; everything is checked on the
image subgroup s^(G) inside Q^n, which is the dense part being completed.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from pmv.algebra import CapExceeded, ChainAlgebra, GammaAlgebra, PmvAlgebra, ProductAlgebra
from pmv.groups import Qn, ZnGroup
from pmv.linalg import frac, in_integer_span, integer_kernel, lattice_basis, rref, solve
from pmv.states import RState, fmt_vec

Vec = tuple


def _unit_of(A: PmvAlgebra) -> tuple[int, ...]:
    if isinstance(A, GammaAlgebra) and isinstance(A.group, ZnGroup):
        return tuple(A.u)
    if isinstance(A, ChainAlgebra):
        return (A.k,)
    if isinstance(A, ProductAlgebra) and all(isinstance(f, ChainAlgebra) for f in A.factors):
        return tuple(f.k for f in A.factors)
    raise TypeError(f"{A.name} is not Gamma(Z^n, u)")


@dataclass(eq=False)
class MetricContext:
    """A state on Gamma(Z^n, u) together with its extension to Z^n."""

    algebra: PmvAlgebra
    state: RState
    unit: tuple[int, ...]
    _memo: dict = field(default_factory=dict, repr=False)

    @property
    def rep(self) -> Qn:
        return self.state.rep

    @property
    def rank(self) -> int:
        return len(self.unit)

    def carrier(self, g: Sequence[int]):
        """The algebra handle of a group element in [0, u]."""
        g = tuple(g)
        return g[0] if isinstance(self.algebra, ChainAlgebra) else g

    def _slice_value(self, h: Sequence[int]) -> Vec:
        """s^(h) for h >= 0, by peeling off h ^ u until nothing is left."""
        rep = self.rep
        out = rep.zero
        h = list(h)
        while any(h):
            piece = tuple(min(a, b) for a, b in zip(h, self.unit))
            out = rep.add(out, self.state(self.carrier(piece)))
            h = [a - b for a, b in zip(h, piece)]
        return out

    def extend(self, g: Sequence[int]) -> Vec:
        """s^(g) = s^(g+) - s^(g-) via greedy unit slices."""
        g = tuple(int(v) for v in g)
        hit = self._memo.get(g)
        if hit is not None:
            return hit
        if len(g) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates")
        pos = tuple(max(v, 0) for v in g)
        neg = tuple(max(-v, 0) for v in g)
        out = self._memo[g] = self.rep.sub(self._slice_value(pos), self._slice_value(neg))
        return out

    __call__ = extend

    @cached_property
    def columns(self) -> list[Vec]:
        """s^(e_i) for the standard generators."""
        return [self.extend(tuple(int(i == j) for j in range(self.rank))) for i in range(self.rank)]

    def linear(self, g: Sequence[int]) -> Vec:
        """s^(g) from the value matrix."""
        rep = self.rep
        out = rep.zero
        for c, col in zip(g, self.columns):
            out = rep.add(out, rep.scale(c, col))
        return out

    def random_decomposition_value(self, g: Sequence[int], rng: random.Random) -> Vec:
        """s^(g) from a random alternative split g = p - q into random slices of [0, u]."""
        r = [rng.randint(0, 2 * u) for u in self.unit]
        p = [max(v, 0) + a for v, a in zip(g, r)]
        q = [max(-v, 0) + a for v, a in zip(g, r)]
        rep = self.rep

        def random_slices(h):
            out = rep.zero
            h = list(h)
            while any(h):
                piece = tuple(rng.randint(1 if a else 0, min(a, u)) if a else 0 for a, u in zip(h, self.unit))
                out = rep.add(out, self.state(self.carrier(piece)))
                h = [a - b for a, b in zip(h, piece)]
            return out

        return rep.sub(random_slices(p), random_slices(q))

    def value_rows(self) -> list[list[Fraction]]:
        return [[col[i] for col in self.columns] for i in range(self.rep.dim)]

    @cached_property
    def image_basis(self) -> list[Vec]:
        return lattice_basis(self.columns, self.rep.dim)


def extend_state(A: PmvAlgebra, s: RState, *, checks: int = 50, seed: int = 0) -> MetricContext:
    """Extend a state on Gamma(Z^n, u) to Z^n; well-definedness checked on sampled elements."""
    unit = _unit_of(A)
    if not isinstance(s.rep, Qn):
        raise TypeError("metric contexts need a Q^n target")
    ctx = MetricContext(A, s, unit)
    if ctx.extend(unit) != ctx.rep.one:
        raise ArithmeticError("extended state does not send u to 1_R")
    rng = random.Random(seed)
    for _ in range(checks):
        g = tuple(rng.randint(-3 * u, 3 * u) for u in unit)
        v = ctx.extend(g)
        if v != ctx.linear(g) or v != ctx.random_decomposition_value(g, rng):
            raise ArithmeticError(f"extension is not well defined at {g}")
    return ctx


def pseudo_norm(ctx: MetricContext, x: Sequence[int]) -> Fraction:
    return ctx.rep.norm_unit(ctx.extend(x))


def dist(ctx: MetricContext, x: Sequence[int], y: Sequence[int]) -> Fraction:
    return pseudo_norm(ctx, tuple(a - b for a, b in zip(x, y)))


def norm_kernel(ctx: MetricContext) -> list[tuple[int, ...]]:
    """Integer basis of {x in Z^n : s^(x) = 0}."""
    if ctx.rank == 0:
        return []
    return integer_kernel(ctx.value_rows(), ctx.rank)


def sample_grid(ctx: MetricContext, min_points: int = 200) -> list[tuple[int, ...]]:
    """The smallest box {|g_i| <= r u_i} with at least ``min_points`` elements."""
    r = 1
    while True:
        axes = [range(-r * u, r * u + 1) for u in ctx.unit]
        size = 1
        for a in axes:
            size *= len(a)
        if size >= min_points:
            return [tuple(p) for p in itertools.product(*axes)]
        r += 1


@dataclass
class PropertyTally:
    checked: int = 0
    passed: int = 0
    counterexample: list | None = None

    def record(self, ok: bool, *witness):
        self.checked += 1
        if ok:
            self.passed += 1
        elif self.counterexample is None:
            self.counterexample = [list(w) if isinstance(w, tuple) else str(w) for w in witness]

    @property
    def ok(self) -> bool:
        return self.checked == self.passed

    def to_json(self):
        return {"checked": self.checked, "passed": self.passed, "counterexample": self.counterexample}


@dataclass
class NormReport:
    properties: dict[str, PropertyTally] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(p.ok for p in self.properties.values())

    def to_json(self):
        return {"ok": self.ok, "properties": {k: v.to_json() for k, v in self.properties.items()}}


def check_norm_properties(ctx: MetricContext, samples: Sequence[Sequence[int]], *, pair_limit: int = 40_000,
                          seed: int = 0) -> NormReport:
    """Triangle inequality, coordinate Lipschitz bound, homogeneity bound, symmetry and monotonicity."""
    samples = [tuple(g) for g in samples]
    norm = {g: pseudo_norm(ctx, g) for g in samples}
    value = {g: ctx.extend(g) for g in samples}
    props = {k: PropertyTally() for k in ("i", "ii", "iii", "iv", "v")}
    pairs = list(itertools.product(samples, repeat=2))
    if len(pairs) > pair_limit:
        pairs = random.Random(seed).sample(pairs, pair_limit)
    add = lambda a, b: tuple(p + q for p, q in zip(a, b))  # noqa: E731
    sub = lambda a, b: tuple(p - q for p, q in zip(a, b))  # noqa: E731
    for x, y in pairs:
        props["i"].record(pseudo_norm(ctx, add(x, y)) <= norm[x] + norm[y], x, y)
        d = pseudo_norm(ctx, sub(x, y))
        props["ii"].record(all(abs(a - b) <= d for a, b in zip(value[x], value[y])), x, y)
        if all(-b <= a <= b for a, b in zip(x, y)):
            props["v"].record(norm[x] <= norm[y], x, y)
    zero = tuple(0 for _ in ctx.unit)
    props["iv"].record(pseudo_norm(ctx, zero) == 0, zero)
    for x in samples:
        props["iv"].record(pseudo_norm(ctx, tuple(-a for a in x)) == norm[x], x)
        for n in range(-3, 4):
            props["iii"].record(pseudo_norm(ctx, tuple(n * a for a in x)) <= abs(n) * norm[x], x, n)
    return NormReport(props)


def is_metric_on(ctx: MetricContext, samples: Sequence[Sequence[int]]) -> tuple[bool, list | None]:
    """Whether d_s separates the sampled points; returns a witness pair otherwise."""
    seen: dict[Vec, tuple] = {}
    for g in samples:
        v = ctx.extend(g)
        if v in seen and seen[v] != tuple(g):
            return False, [list(seen[v]), list(g)]
        seen[v] = tuple(g)
    return True, None


# -- interpolation on the image subgroup ----------------------------------------------


def in_image(ctx: MetricContext, z: Sequence) -> bool:
    return in_integer_span(ctx.image_basis, z) is not None


def _box_search(ctx: MetricContext, lo: Vec, hi: Vec, cap: int = 200_000) -> Vec | None:
    """Exhaustive search of image points in the box [lo, hi]."""
    B = ctx.image_basis
    k = len(B)
    if k == 0:
        z = tuple(Fraction(0) for _ in lo)
        return z if all(a <= 0 <= b for a, b in zip(lo, hi)) else None
    dim = len(lo)
    # pick k coordinates where the basis is invertible; coefficients are linear in them
    mat = [[B[j][i] for j in range(k)] for i in range(dim)]
    _, piv = rref([[mat[i][j] for i in range(dim)] for j in range(k)], dim)
    rows = piv[:k]
    sq = [mat[i] for i in rows]
    inv_cols = [solve(sq, [Fraction(int(r == c)) for r in range(k)]) for c in range(k)]
    ranges = []
    for j in range(k):
        # c_j = sum_r inv[j][r] z_rows[r]
        lo_j = sum((min(inv_cols[r][j] * lo[rows[r]], inv_cols[r][j] * hi[rows[r]]) for r in range(k)), Fraction(0))
        hi_j = sum((max(inv_cols[r][j] * lo[rows[r]], inv_cols[r][j] * hi[rows[r]]) for r in range(k)), Fraction(0))
        a = -((-lo_j.numerator) // lo_j.denominator)
        b = hi_j.numerator // hi_j.denominator
        ranges.append(range(a, b + 1))
    total = 1
    for r in ranges:
        total *= len(r)
    if total > cap:
        raise CapExceeded(f"interpolation box holds {total} lattice candidates")
    for c in itertools.product(*ranges):
        z = tuple(sum((cj * b[i] for cj, b in zip(c, B)), Fraction(0)) for i in range(dim))
        if all(a <= v <= b for a, v, b in zip(lo, z, hi)):
            return z
    return None


@dataclass
class InterpolationReport:
    checked: int = 0
    passed: int = 0
    interpolants: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.checked == self.passed

    def to_json(self):
        return {"checked": self.checked, "passed": self.passed,
                "failures": [[fmt_vec(v) for v in q] for q in self.failures]}


def find_interpolant(ctx: MetricContext, x1: Vec, x2: Vec, y1: Vec, y2: Vec) -> Vec | None:
    rep = ctx.rep
    lo, hi = rep.join(x1, x2), rep.meet(y1, y2)
    if not rep.leq(lo, hi):
        return None
    for z in (lo, hi, x1, x2, y1, y2):
        if rep.leq(lo, z) and rep.leq(z, hi) and in_image(ctx, z):
            return z
    return _box_search(ctx, lo, hi)


def check_interpolation(ctx: MetricContext, quadruples: Sequence[tuple[Vec, Vec, Vec, Vec]]) -> InterpolationReport:
    """For each x1, x2 <= y1, y2 in the image, look for an image z with x1, x2 <= z <= y1, y2."""
    rep_ = InterpolationReport()
    rep = ctx.rep
    for q in quadruples:
        x1, x2, y1, y2 = (tuple(frac(v) for v in p) for p in q)
        if not all(rep.leq(x, y) for x in (x1, x2) for y in (y1, y2)):
            raise ValueError("quadruple is not ordered as x1, x2 <= y1, y2")
        rep_.checked += 1
        z = find_interpolant(ctx, x1, x2, y1, y2)
        if z is None:
            rep_.failures.append((x1, x2, y1, y2))
        else:
            rep_.passed += 1
            rep_.interpolants.append(z)
    return rep_


def sample_quadruples(ctx: MetricContext, count: int, rng: random.Random, *, spread: int = 2):
    """x_i = s^(g_i), y_i = s^(g1 v g2 + q_i) with q_i >= 0, so x_i <= y_j by monotonicity."""
    out = []
    for _ in range(count):
        g1, g2 = (tuple(rng.randint(-spread * u, spread * u) for u in ctx.unit) for _ in range(2))
        top = tuple(max(a, b) for a, b in zip(g1, g2))
        y = [tuple(t + rng.randint(0, spread * u) for t, u in zip(top, ctx.unit)) for _ in range(2)]
        out.append((ctx.extend(g1), ctx.extend(g2), ctx.extend(y[0]), ctx.extend(y[1])))
    return out


def factors_through_kernel(ctx: MetricContext, samples: Sequence[Sequence[int]]) -> bool:
    """s^(x + k) = s^(x) for every sampled x and kernel basis vector k."""
    K = norm_kernel(ctx)
    for x in samples:
        v = ctx.extend(x)
        for k in K:
            for c in (-2, -1, 1, 2):
                if ctx.extend(tuple(a + c * b for a, b in zip(x, k))) != v:
                    return False
    return True


def image_is_directed(ctx: MetricContext, samples: Sequence[Sequence[int]]) -> bool:
    """Every sampled image element is a difference of two positive image elements."""
    zero = ctx.rep.zero
    for g in samples:
        pos = tuple(max(a, 0) for a in g)
        neg = tuple(max(-a, 0) for a in g)
        p, n = ctx.extend(pos), ctx.extend(neg)
        if not (ctx.rep.leq(zero, p) and ctx.rep.leq(zero, n) and ctx.rep.sub(p, n) == ctx.extend(g)):
            return False
    return True
