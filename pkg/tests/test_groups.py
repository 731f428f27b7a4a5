import warnings
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pmv.groups import (
    DimensionError,
    LexQ2,
    Qn,
    UnitalGroup,
    Z2LexGroup,
    ZnGroup,
    group_eval,
    norm_unit,
    riesz_eval,
)

ints = st.integers(-20, 20)
rats = st.fractions(min_value=-10, max_value=10, max_denominator=12)


def test_zn_join():
    assert group_eval("join", ZnGroup(2), (1, 0), (0, 1)) == (1, 1)


def test_lex_leq_across_first_coordinate():
    assert group_eval("leq", Z2LexGroup(), (0, 5), (1, -100)) is True
    assert group_eval("leq", Z2LexGroup(), (1, -100), (0, 5)) is False


def test_zn_add():
    assert group_eval("add", ZnGroup(2), (1, 2), (3, -1)) == (4, 1)


def test_group_errors():
    with pytest.raises(DimensionError):
        group_eval("add", ZnGroup(2), (1, 2), (1, 2, 3))
    with pytest.raises(ValueError):
        group_eval("join", ZnGroup(2), (1, 2))
    with pytest.raises(TypeError):
        ZnGroup(1).check((F(1, 2),)) if False else ZnGroup(1).check((0.5,))
    with pytest.raises(ValueError):
        ZnGroup(1).check((F(1, 2),))


def test_strong_unit_validation():
    UnitalGroup(ZnGroup(2), (2, 1))
    UnitalGroup(Z2LexGroup(), (1, -7))
    with pytest.raises(ValueError):
        UnitalGroup(ZnGroup(2), (2, 0))
    with pytest.raises(ValueError):
        UnitalGroup(Z2LexGroup(), (0, 9))


def test_riesz_examples():
    assert riesz_eval("abs", Qn(3), (-1, 2, 0)) == (1, 2, 0)
    assert riesz_eval("join", LexQ2(), (0, 7), (0, 3)) == (0, 7)
    assert riesz_eval("scale", Qn(2), F(1, 2), (1, 3)) == (F(1, 2), F(3, 2))


def test_negative_scale_warns_but_computes():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        out = riesz_eval("scale", Qn(1), -2, (3,), assert_positive=True)
    assert out == (-6,)
    assert caught


def test_floats_rejected():
    with pytest.raises(TypeError):
        Qn(1).check((0.5,))


def test_norm_unit_examples():
    assert norm_unit((F(1, 2), -1), Qn(2)) == 1
    assert norm_unit((0, 0, 0), Qn(3)) == 0
    assert norm_unit((2, -9), LexQ2()) == 2


def test_lex_norm_not_attained():
    rep = LexQ2()
    r = rep.check((2, 5))
    a = norm_unit(r, rep)
    assert not rep.leq(rep.abs(r), rep.scale(a, rep.one))
    assert rep.leq(rep.abs(r), rep.scale(a + F(1, 1000), rep.one))


def test_rep_flags():
    assert Qn(2).archimedean and Qn(2).dedekind_complete and Qn(2).one == (1, 1)
    assert not LexQ2().archimedean and LexQ2().one == (1, 0)


@given(st.tuples(ints, ints), st.tuples(ints, ints))
def test_lattice_group_identity_zn(x, y):
    g = ZnGroup(2)
    assert g.add(g.join(x, y), g.meet(x, y)) == g.add(x, y)


@given(st.tuples(ints, ints), st.tuples(ints, ints))
def test_lattice_group_identity_lex(x, y):
    g = Z2LexGroup()
    assert g.add(g.join(x, y), g.meet(x, y)) == g.add(x, y)


def test_lattice_identity_exhaustive_grid():
    for g in (ZnGroup(2), Z2LexGroup()):
        pts = [(a, b) for a in range(-3, 4) for b in range(-3, 4)]
        for x in pts:
            for y in pts:
                assert g.add(g.join(x, y), g.meet(x, y)) == g.add(x, y)


@given(st.lists(rats, min_size=3, max_size=3), st.lists(rats, min_size=3, max_size=3), rats)
def test_norm_axioms_qn(r, s, a):
    rep = Qn(3)
    r, s = rep.check(r), rep.check(s)
    assert (norm_unit(r, rep) == 0) == (r == rep.zero)
    assert norm_unit(rep.scale(a, r), rep) == abs(a) * norm_unit(r, rep)
    assert norm_unit(rep.add(r, s), rep) <= norm_unit(r, rep) + norm_unit(s, rep)
    assert norm_unit(r, rep) == max(abs(v) for v in r)
