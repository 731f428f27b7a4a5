"""Ideals, normality, maximality, generated ideals and quotient algebras."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

import numpy as np

from pmv.algebra import (
    CapExceeded,
    InfiniteCarrierError,
    PmvAlgebra,
    TableAlgebra,
    GammaAlgebra,
    iterate,
)
from pmv.groups import Z2LexGroup

DEFAULT_MAX_IDEALS = 4096


@dataclass(frozen=True, eq=False)
class Ideal:
    """An ideal given by its members (finite) or by a membership oracle (lazy)."""

    algebra: PmvAlgebra
    members: frozenset | None = None
    oracle: Callable[[Any], bool] | None = None
    generators: tuple = ()
    description: str = ""

    def __contains__(self, x) -> bool:
        if self.members is not None:
            return x in self.members
        return bool(self.oracle(x))

    @property
    def lazy(self) -> bool:
        return self.members is None

    def sorted_members(self) -> list:
        if self.members is None:
            raise InfiniteCarrierError("lazy ideal has no finite member list")
        index = self.algebra.tables.index
        return sorted(self.members, key=index.__getitem__)

    def labels(self) -> list[str]:
        return [self.algebra.label(x) for x in self.sorted_members()]

    def __eq__(self, other):
        if not isinstance(other, Ideal) or self.members is None or other.members is None:
            return NotImplemented
        return self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        if self.members is None:
            return f"Ideal(<lazy {self.description}>)"
        return "Ideal({" + ", ".join(self.labels()) + "})"


def ideal_from(A: PmvAlgebra, elements: Iterable) -> Ideal:
    return Ideal(A, frozenset(A.require(x) for x in elements))


def _closure_mask(A: PmvAlgebra, mask: np.ndarray) -> np.ndarray:
    t = A.tables
    mask = mask.copy()
    mask[t.zero] = True
    while True:
        idx = np.flatnonzero(mask)
        new = mask.copy()
        new[np.unique(t.oplus[np.ix_(idx, idx)])] = True
        # downward closure: anything below a member
        new |= t.leq[:, np.flatnonzero(new)].any(axis=1)
        if (new == mask).all():
            return mask
        mask = new


def _mask_of(A: PmvAlgebra, elements: Iterable) -> np.ndarray:
    t = A.tables
    mask = np.zeros(t.n, dtype=bool)
    for x in elements:
        mask[t.index[A.require(x)]] = True
    return mask


def _ideal_of_mask(A: PmvAlgebra, mask: np.ndarray, generators=()) -> Ideal:
    t = A.tables
    return Ideal(A, frozenset(t.elements[i] for i in np.flatnonzero(mask)), generators=tuple(generators))


def ideal_generated(A: PmvAlgebra, S: Iterable = (), *, bound: int = 25) -> Ideal:
    """Least ideal containing S.

    On infinite carriers the result is an oracle: y belongs when
    y <= n.(s_1 (+) ... (+) s_k) for some n <= bound.
    """
    S = tuple(S)
    if A.finite:
        return _ideal_of_mask(A, _closure_mask(A, _mask_of(A, S)), S)
    total = A.zero
    for s in S:
        total = A.oplus(total, A.require(s))

    if isinstance(A, GammaAlgebra) and isinstance(A.group, Z2LexGroup):
        return Ideal(A, None, _lex_oracle(total), S, description=f"generated by {[A.label(s) for s in S]}")

    def oracle(y, total=total):
        return any(A.leq(y, iterate(A, total, n, "oplus_mul")) for n in range(1, bound + 1))

    return Ideal(A, None, oracle, S, description=f"generated by {[A.label(s) for s in S]}, n<={bound}")


def _lex_oracle(t) -> Callable[[Any], bool]:
    # y <= n.t for some n, decided exactly: n.t = (n t) ^ u in the lex order
    if t[0] > 0:
        return lambda y: True
    if t[1] > 0:
        return lambda y: y[0] == 0
    return lambda y: tuple(y) == (0, 0)


def all_ideals(A: PmvAlgebra, *, max_ideals: int = DEFAULT_MAX_IDEALS) -> list[Ideal]:
    """Every ideal, as joins of principal ideals, canonically ordered."""
    t = A.tables
    principal = {}
    for i in range(t.n):
        m = _closure_mask(A, np.eye(1, t.n, i, dtype=bool)[0])
        principal.setdefault(m.tobytes(), m)
    found = dict(principal)
    frontier = list(principal.values())
    while frontier:
        nxt = []
        for m in frontier:
            for p in principal.values():
                j = m | p
                if (j == m).all() or (j == p).all():
                    continue
                j = _closure_mask(A, j)
                key = j.tobytes()
                if key not in found:
                    found[key] = j
                    nxt.append(j)
                    if len(found) > max_ideals:
                        raise CapExceeded(f"more than {max_ideals} ideals in {A.name}")
        frontier = nxt
    masks = sorted(found.values(), key=lambda m: (int(m.sum()), tuple(np.flatnonzero(m))))
    return [_ideal_of_mask(A, m) for m in masks]


@dataclass
class IdealVerdict:
    is_ideal: bool
    is_normal: bool
    is_maximal: bool
    bounded: bool = False
    witness: dict = field(default_factory=dict)

    def to_json(self):
        return {"is_ideal": self.is_ideal, "is_normal": self.is_normal,
                "is_maximal": self.is_maximal, "bounded": self.bounded}


def _classify_finite(A: PmvAlgebra, I: Ideal) -> IdealVerdict:
    t = A.tables
    mask = _mask_of(A, I.members)
    idx = np.flatnonzero(mask)
    witness: dict = {}
    is_ideal = bool(mask[t.zero])
    if is_ideal:
        sums = t.oplus[np.ix_(idx, idx)]
        if not mask[sums].all():
            is_ideal = False
            witness["not_closed"] = True
        below = t.leq[:, idx].any(axis=1)
        if (below & ~mask).any():
            is_ideal = False
            witness["not_downward_closed"] = t.label(int(np.flatnonzero(below & ~mask)[0]))
    is_normal = is_ideal
    if is_ideal:
        for a in range(t.n):
            left = set(t.oplus[a, idx].tolist())
            right = set(t.oplus[idx, a].tolist())
            if left != right:
                is_normal = False
                witness["not_normal_at"] = t.label(a)
                break
    is_maximal = is_ideal and not mask[t.one]
    if is_maximal:
        for x in np.flatnonzero(~mask):
            m = mask.copy()
            m[x] = True
            if not _closure_mask(A, m).all():
                is_maximal = False
                witness["extends_with"] = t.label(int(x))
                break
    return IdealVerdict(is_ideal, is_normal, is_maximal, False, witness)


def _classify_bounded(A: PmvAlgebra, I: Ideal, bound: int) -> IdealVerdict:
    S = A.sample(bound)
    inside = [x for x in S if x in I]
    witness: dict = {}
    is_ideal = A.zero in I
    for x in inside:
        for y in inside:
            if A.oplus(x, y) not in I:
                is_ideal = False
                witness["not_closed"] = (A.label(x), A.label(y))
                break
        if not is_ideal:
            break
    if is_ideal:
        for a in S:
            if a not in I and any(A.leq(a, b) for b in inside):
                is_ideal = False
                witness["not_downward_closed"] = A.label(a)
                break
    is_normal = is_ideal
    if is_ideal:
        for a in S:
            left = {A.oplus(a, b) for b in inside}
            right = {A.oplus(c, a) for c in inside}
            # two-sided inclusion on the sample; elements of one side produced
            # by members outside the sample are not visible
            if not (left <= right or right <= left):
                is_normal = False
                witness["not_normal_at"] = A.label(a)
                break
    is_maximal = is_ideal and A.one not in I
    if is_maximal:
        for x in S:
            if x in I:
                continue
            for y in S:
                if not any(A.leq(y, A.oplus(iterate(A, x, n, "oplus_mul"), h))
                           for n in range(1, bound + 1) for h in inside):
                    is_maximal = False
                    witness["not_generated"] = (A.label(x), A.label(y))
                    break
            if not is_maximal:
                break
    return IdealVerdict(is_ideal, is_normal, is_maximal, True, witness)


def classify_ideal(A: PmvAlgebra, I: Ideal, *, bound: int = 25) -> IdealVerdict:
    """Ideal / normal / maximal verdicts; bounded verification on infinite carriers."""
    if A.finite and I.members is not None:
        return _classify_finite(A, I)
    return _classify_bounded(A, I, bound)


def all_maximal_ideals(A: PmvAlgebra, *, max_ideals: int = DEFAULT_MAX_IDEALS) -> list[tuple[Ideal, bool]]:
    """All maximal ideals with a normality flag each."""
    ideals = all_ideals(A, max_ideals=max_ideals)
    t = A.tables
    proper = [I for I in ideals if t.elements[t.one] not in I.members]
    out = []
    for I in proper:
        if any(I.members < J.members for J in proper):
            continue
        out.append((I, _classify_finite(A, I).is_normal))
    return out


def congruence_classes(A: PmvAlgebra, I: Ideal) -> list[list[int]]:
    """Classes of x ~ y iff x (.) y^- and y (.) x^- lie in I (index lists, canonical order)."""
    t = A.tables
    mask = _mask_of(A, I.members)
    rel = mask[t.odot[:, t.minus]]  # rel[x, y]: x (.) y^- in I
    equiv = rel & rel.T
    seen = np.zeros(t.n, dtype=bool)
    classes = []
    for x in range(t.n):
        if seen[x]:
            continue
        cls = np.flatnonzero(equiv[x])
        seen[cls] = True
        classes.append(cls.tolist())
    return classes


def quotient(A: PmvAlgebra, I: Ideal) -> tuple[TableAlgebra, dict]:
    """M/I for a normal ideal I, as a table algebra plus the projection map."""
    if not A.finite or I.members is None:
        raise InfiniteCarrierError("quotients are computed for finite algebras only")
    verdict = _classify_finite(A, I)
    if not verdict.is_normal:
        raise ValueError("quotient needs a normal ideal")
    t = A.tables
    classes = congruence_classes(A, I)
    cls_of = np.empty(t.n, dtype=np.int64)
    for c, members in enumerate(classes):
        cls_of[members] = c
    if cls_of[t.zero] == cls_of[t.one]:
        raise ValueError("quotient by the whole algebra is degenerate (0 = 1)")
    reps = [c[0] for c in classes]
    oplus = cls_of[t.oplus[np.ix_(reps, reps)]]
    # well-definedness: the class of x (+) y must not depend on representatives
    if not (cls_of[t.oplus] == oplus[cls_of[:, None], cls_of[None, :]]).all():
        raise ArithmeticError("congruence is not compatible with (+)")
    minus = cls_of[t.minus[reps]]
    tilde = cls_of[t.tilde[reps]]
    labels = ["[" + t.label(r) + "]" for r in reps]
    Q = TableAlgebra(labels, oplus, minus, tilde, int(cls_of[t.zero]), int(cls_of[t.one]),
                     name=f"{A.name}/I")
    projection = {t.elements[i]: int(cls_of[i]) for i in range(t.n)}
    return Q, projection


def is_isomorphic(A: PmvAlgebra, B: PmvAlgebra) -> bool:
    """Brute-force isomorphism test for small finite algebras (order-preserving bijections first)."""
    ta, tb = A.tables, B.tables
    if ta.n != tb.n:
        return False
    n = ta.n
    # candidates respect the number of elements below each element
    ca, cb = ta.below_count, tb.below_count
    cand = [[j for j in range(n) if cb[j] == ca[i]] for i in range(n)]
    order = sorted(range(n), key=lambda i: len(cand[i]))
    f = [-1] * n
    used = [False] * n

    def ok_partial(i):
        for k in range(n):
            if f[k] < 0:
                continue
            r = ta.oplus[i, k]
            if f[r] >= 0 and f[r] != tb.oplus[f[i], f[k]]:
                return False
            r = ta.oplus[k, i]
            if f[r] >= 0 and f[r] != tb.oplus[f[k], f[i]]:
                return False
        return True

    def search(pos):
        if pos == n:
            return all(f[ta.minus[i]] == tb.minus[f[i]] and f[ta.tilde[i]] == tb.tilde[f[i]]
                       and all(f[ta.oplus[i, j]] == tb.oplus[f[i], f[j]] for j in range(n))
                       for i in range(n))
        i = order[pos]
        for j in cand[i]:
            if used[j]:
                continue
            f[i], used[j] = j, True
            if ok_partial(i) and search(pos + 1):
                return True
            f[i], used[j] = -1, False
        return False

    return search(0)
