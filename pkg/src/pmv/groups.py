"""Concrete unital l-groups and unital Riesz spaces with exact arithmetic.

Group elements and Riesz vectors are plain tuples (ints for the integer
groups, Fractions for the Riesz spaces). The owning group or space object
carries the order and validates dimensions.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from pmv.linalg import frac

GroupElement = tuple


class DimensionError(ValueError):
    pass


class OrderedGroup:
    """Abelian lattice-ordered group on tuples of a fixed length.

    Subclasses supply ``leq``, ``join`` and ``meet``; the group operations are
    coordinatewise.
    """

    dim: int
    tag: str
    integral = True

    def check(self, x: Sequence) -> GroupElement:
        if len(x) != self.dim:
            raise DimensionError(f"{self.tag}: expected {self.dim} coordinates, got {len(x)}")
        if self.integral:
            out = []
            for v in x:
                if isinstance(v, Fraction):
                    if v.denominator != 1:
                        raise ValueError(f"{self.tag}: non-integer coordinate {v}")
                    v = int(v)
                elif not isinstance(v, int):
                    raise TypeError(f"{self.tag}: coordinate {v!r} is not an integer")
                out.append(v)
            return tuple(out)
        return tuple(frac(v) for v in x)

    @property
    def zero(self) -> GroupElement:
        return (0,) * self.dim if self.integral else (Fraction(0),) * self.dim

    def add(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def neg(self, x):
        return tuple(-a for a in x)

    def sub(self, x, y):
        return tuple(a - b for a, b in zip(x, y))

    def leq(self, x, y) -> bool:
        raise NotImplementedError

    def join(self, x, y):
        raise NotImplementedError

    def meet(self, x, y):
        raise NotImplementedError

    def positive(self, x):
        return self.join(x, self.zero)

    def negative(self, x):
        return self.neg(self.meet(x, self.zero))

    def abs(self, x):
        return self.add(self.positive(x), self.negative(x))

    def __eq__(self, other):
        return type(self) is type(other) and self.dim == other.dim

    def __hash__(self):
        return hash((type(self).__name__, self.dim))


class ZnGroup(OrderedGroup):
    """Z^n with the componentwise order."""

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("dimension must be nonnegative")
        self.dim = n
        self.tag = f"Z^{n}"

    def leq(self, x, y):
        return all(a <= b for a, b in zip(x, y))

    def join(self, x, y):
        return tuple(max(a, b) for a, b in zip(x, y))

    def meet(self, x, y):
        return tuple(min(a, b) for a, b in zip(x, y))

    def is_strong_unit(self, u) -> bool:
        return all(a >= 1 for a in u)

    def __repr__(self):
        return f"ZnGroup({self.dim})"


def lex_leq(x, y) -> bool:
    for a, b in zip(x, y):
        if a != b:
            return a < b
    return True


class Z2LexGroup(OrderedGroup):
    """Z x Z with the lexicographic (total) order."""

    def __init__(self):
        self.dim = 2
        self.tag = "Z lex Z"

    def leq(self, x, y):
        return lex_leq(x, y)

    def join(self, x, y):
        return y if lex_leq(x, y) else x

    def meet(self, x, y):
        return x if lex_leq(x, y) else y

    def is_strong_unit(self, u) -> bool:
        return u[0] >= 1

    def __repr__(self):
        return "Z2LexGroup()"


@dataclass(frozen=True)
class UnitalGroup:
    group: OrderedGroup
    unit: GroupElement

    def __post_init__(self):
        u = self.group.check(self.unit)
        object.__setattr__(self, "unit", u)
        if not self.group.is_strong_unit(u):
            raise ValueError(f"{u} is not a strong unit of {self.group.tag}")


def group_eval(op: str, group: OrderedGroup, x, y=None):
    """Evaluate ``op`` in {add, neg, join, meet, leq} on group elements."""
    x = group.check(x)
    if op == "neg":
        return group.neg(x)
    if y is None:
        raise ValueError(f"operation {op!r} needs two operands")
    y = group.check(y)
    if op == "add":
        return group.add(x, y)
    if op == "join":
        return group.join(x, y)
    if op == "meet":
        return group.meet(x, y)
    if op == "leq":
        return group.leq(x, y)
    raise ValueError(f"unknown group operation {op!r}")


class RieszRep(OrderedGroup):
    """A concrete unital Riesz space over Q."""

    integral = False
    archimedean: bool
    dedekind_complete: bool

    @property
    def one(self) -> tuple[Fraction, ...]:
        raise NotImplementedError

    def scale(self, a, r):
        a = frac(a)
        return tuple(a * v for v in r)

    def norm_unit(self, r) -> Fraction:
        raise NotImplementedError

    def truncated_sum(self, r1, r2):
        """r1 (+) r2 in Gamma(R, 1_R)."""
        return self.meet(self.add(r1, r2), self.one)

    def in_unit_interval(self, r) -> bool:
        return self.leq(self.zero, r) and self.leq(r, self.one)


class Qn(RieszRep):
    """Q^n with the componentwise order and unit (1,...,1)."""

    archimedean = True
    dedekind_complete = True

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("Q^n needs n >= 1")
        self.dim = n
        self.tag = f"Q^{n}"

    @property
    def coordinates(self) -> range:
        return range(self.dim)

    @property
    def one(self):
        return (Fraction(1),) * self.dim

    def leq(self, x, y):
        return all(a <= b for a, b in zip(x, y))

    def join(self, x, y):
        return tuple(max(a, b) for a, b in zip(x, y))

    def meet(self, x, y):
        return tuple(min(a, b) for a, b in zip(x, y))

    def norm_unit(self, r):
        return max((abs(frac(v)) for v in r), default=Fraction(0))

    def __repr__(self):
        return f"Qn({self.dim})"


class LexQ2(RieszRep):
    """Q x Q, lexicographically ordered, unit (1, 0). Not Archimedean."""

    archimedean = False
    dedekind_complete = False

    def __init__(self):
        self.dim = 2
        self.tag = "Q lex Q"

    @property
    def one(self):
        return (Fraction(1), Fraction(0))

    def leq(self, x, y):
        return lex_leq(x, y)

    def join(self, x, y):
        return y if lex_leq(x, y) else x

    def meet(self, x, y):
        return x if lex_leq(x, y) else y

    def norm_unit(self, r):
        # inf{a : |r| <= (a, 0)}; not attained when |r| has a positive second coordinate
        return abs(frac(r[0]))

    def __repr__(self):
        return "LexQ2()"


def riesz_eval(op: str, rep: RieszRep, r, arg=None, *, assert_positive: bool = False):
    """Evaluate ``op`` in {add, scale, abs, join, meet, leq} in a Riesz space.

    For ``scale`` the scalar comes first: ``riesz_eval("scale", rep, a, r)``.
    With ``assert_positive`` a negative scalar triggers a warning but the
    product is still returned.
    """
    if op == "scale":
        a = frac(r)
        vec = rep.check(arg)
        if assert_positive and a < 0:
            warnings.warn(f"negative scalar {a} does not preserve the positive cone", stacklevel=2)
        return rep.scale(a, vec)
    r = rep.check(r)
    if op == "abs":
        return rep.abs(r)
    if arg is None:
        raise ValueError(f"operation {op!r} needs two operands")
    s = rep.check(arg)
    if op == "add":
        return rep.add(r, s)
    if op == "join":
        return rep.join(r, s)
    if op == "meet":
        return rep.meet(r, s)
    if op == "leq":
        return rep.leq(r, s)
    raise ValueError(f"unknown Riesz operation {op!r}")


def norm_unit(r, rep: RieszRep) -> Fraction:
    """The unit norm inf{a >= 0 : |r| <= a 1_R}."""
    return rep.norm_unit(rep.check(r))
