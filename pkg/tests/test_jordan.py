import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pmv.algebra import ChainAlgebra, chain_power, chain_product
from pmv.groups import LexQ2, Qn
from pmv.jordan import (
    brute_force_decomposition_sup,
    jordan_decompose,
    lattice_ops,
    lub_oracle,
    make_measure,
    measure_of_state,
    measure_order,
    random_measure,
    random_subadditive,
    simplex_report,
    subadditive,
    sup_from_subadditive,
    zero_measure,
)
from pmv.states import enumerate_vertices, random_r_state, state_polytope

B2 = chain_power(1, 2)  # carrier (0,0), (0,1), (1,0), (1,1)


def on_b2(e1, e2):
    return make_measure(B2, Qn(1), [(0,), (e2,), (e1,), (e1 + e2,)])


def test_order_examples():
    m1, m2 = on_b2(2, 0), on_b2(0, 2)
    assert measure_order(m1, m1)
    assert not measure_order(m1, m2) and not measure_order(m2, m1)
    assert measure_order(m1, m1 + on_b2(1, 3))


def test_make_measure_rejects_non_additive():
    with pytest.raises(ValueError, match="not additive"):
        make_measure(B2, Qn(1), [(0,), (1,), (1,), (1,)])


def test_subadditive_sup_examples():
    d = subadditive(B2, Qn(1), [(0,), (2,), (2,), (2,)])
    m = sup_from_subadditive(B2, d)
    assert m == on_b2(2, 2) and m((1, 1)) == (4,)
    add = on_b2(3, -1)
    assert sup_from_subadditive(B2, subadditive(B2, Qn(1), add.table)) == add
    assert sup_from_subadditive(B2, subadditive(B2, Qn(1), zero_measure(B2, Qn(1)).table)) == zero_measure(B2, Qn(1))
    with pytest.raises(ValueError):
        subadditive(B2, Qn(1), [(0,), (1,), (1,), (3,)])


def test_sup_inf_examples():
    m1, m2 = on_b2(2, 0), on_b2(0, 2)
    s = lattice_ops(m1, m2, "sup")
    assert s == on_b2(2, 2)
    assert lub_oracle(m1, m2) == s
    lo, hi = on_b2(0, 1), on_b2(1, 1)
    assert lattice_ops(lo, hi, "sup") == hi and lattice_ops(lo, hi, "inf") == lo
    assert lattice_ops(on_b2(-2, 5), zero_measure(B2, Qn(1)), "inf") == on_b2(-2, 0)
    pos = on_b2(1, 2)
    assert lattice_ops(pos, zero_measure(B2, Qn(1)), "inf") == zero_measure(B2, Qn(1))
    assert lub_oracle(lo, hi) == hi and lub_oracle(pos, pos) == pos


def test_jordan_examples():
    m = on_b2(1, -1)
    plus, minus = jordan_decompose(m)
    assert plus == on_b2(1, 0) and minus == on_b2(0, 1)
    pos = on_b2(2, 3)
    assert jordan_decompose(pos) == (pos, zero_measure(B2, Qn(1)))
    assert jordan_decompose(-pos) == (zero_measure(B2, Qn(1)), pos)


def test_lex_target_excluded():
    m = make_measure(B2, LexQ2(), [(0, 0), (0, 1), (1, 0), (1, 1)])
    with pytest.raises(ValueError, match="Dedekind"):
        lattice_ops(m, m)


ALGS = [chain_power(1, 2), chain_power(2, 2), chain_product(2, 3)]


@given(st.integers(0, 2**31), st.sampled_from(ALGS), st.integers(1, 2))
def test_sup_is_least_upper_bound(seed, A, n):
    rng = random.Random(seed)
    m1, m2 = random_measure(A, Qn(n), rng), random_measure(A, Qn(n), rng)
    s = lattice_ops(m1, m2, "sup")
    assert measure_order(m1, s) and measure_order(m2, s)
    assert s == lub_oracle(m1, m2)
    i = lattice_ops(m1, m2, "inf")
    assert measure_order(i, m1) and measure_order(i, m2)
    assert i == -lub_oracle(-m1, -m2)


@given(st.integers(0, 2**31), st.sampled_from(ALGS))
def test_riesz_laws(seed, A):
    rng = random.Random(seed)
    rep = Qn(2)
    a, b, c = (random_measure(A, rep, rng) for _ in range(3))
    sup = lambda x, y: lattice_ops(x, y, "sup")
    inf = lambda x, y: lattice_ops(x, y, "inf")
    assert sup(a, b) == sup(b, a) and inf(a, b) == inf(b, a)
    assert sup(sup(a, b), c) == sup(a, sup(b, c))
    assert inf(inf(a, b), c) == inf(a, inf(b, c))
    assert sup(a, inf(a, b)) == a and inf(a, sup(a, b)) == a
    assert sup(a, b) + c == sup(a + c, b + c)
    alpha = F(rng.randint(1, 9), rng.randint(1, 5))
    assert sup(a, b).scale(alpha) == sup(a.scale(alpha), b.scale(alpha))
    assert sup(a, b) + inf(a, b) == a + b


@given(st.integers(0, 2**31), st.sampled_from(ALGS))
def test_jordan_parts_disjoint(seed, A):
    m = random_measure(A, Qn(2), random.Random(seed))
    plus, minus = jordan_decompose(m)
    assert plus - minus == m
    assert lattice_ops(plus, minus, "inf") == zero_measure(A, Qn(2))


@given(st.integers(0, 2**31), st.sampled_from([chain_power(1, 2), ChainAlgebra(4), chain_product(2, 1), chain_power(1, 3)]))
def test_dp_matches_brute_force(seed, A):
    d = random_subadditive(A, Qn(1), random.Random(seed))
    assert sup_from_subadditive(A, d) == brute_force_decomposition_sup(A, d)


def test_states_are_measures_in_the_base():
    A = chain_product(2, 1)
    P = state_polytope(A)
    for _ in range(10):
        s = random_r_state(A, 1, random.Random(_))
        m = measure_of_state(s)
        assert m.is_positive() and m(A.one) == (1,)
        assert P.contains(s.scalar_values())
    for v in enumerate_vertices(P):
        assert make_measure(A, Qn(1), v.table) == measure_of_state(v)


def test_simplex_examples():
    r = simplex_report(chain_power(2, 3))
    assert (r.vertex_count, r.dimension, r.is_simplex, r.is_bauer) == (3, 2, True, True)
    r = simplex_report(ChainAlgebra(4))
    assert (r.vertex_count, r.dimension, r.is_simplex) == (1, 0, True)
    r = simplex_report(chain_power(1, 2), Qn(2))
    assert r.component_simplex == [True, True] and r.product_is_simplex is False
    assert r.to_json()["product"]["components"] == 2
