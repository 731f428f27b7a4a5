import itertools
import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pmv.algebra import ChainAlgebra, GammaAlgebra, chain_power, chain_product
from pmv.groups import LexQ2, Qn
from pmv.ideals import all_maximal_ideals, is_isomorphic
from pmv.states import (
    IDENTITIES,
    barycentric,
    check_state_identities,
    classify_r_state,
    convex_decompose,
    enumerate_r_morphisms,
    enumerate_vertices,
    is_extremal,
    is_meet_preserving,
    is_morphism,
    make_state,
    morphism_from_partition,
    quotient_by_kernel,
    r_state,
    random_r_state,
    real_morphisms,
    state_from_function,
    state_polytope,
)

h = F(1, 2)


def proj(A, i, k=1):
    return state_from_function(A, Qn(1), lambda x: (F(x[i], k),))


def test_chain_has_unique_state():
    P = state_polytope(ChainAlgebra(2))
    assert P.dimension == 0 and P.vertices == [(0, h, 1)]
    for k in range(1, 6):
        assert state_polytope(ChainAlgebra(k)).vertices == [tuple(F(j, k) for j in range(k + 1))]


def test_boolean_square_segment():
    A = chain_power(1, 2)
    P = state_polytope(A)
    assert P.dimension == 1
    got = {v.scalar_values() for v in enumerate_vertices(P)}
    assert got == {proj(A, 0).scalar_values(), proj(A, 1).scalar_values()}


def test_three_vertices_for_cube_of_l2():
    A = chain_power(2, 3)
    P = state_polytope(A)
    assert P.dimension == 2
    assert {v.scalar_values() for v in enumerate_vertices(P)} == {proj(A, i, 2).scalar_values() for i in range(3)}


def test_lex_family_values():
    A = GammaAlgebra.z2lex()
    assert r_state(A, LexQ2(), b=F(7, 3))((0, 1)) == (0, F(7, 3))
    assert r_state(A, LexQ2(), b=0)((1, -5)) == (1, 0)
    with pytest.raises(ValueError):
        r_state(A, LexQ2(), b=-1)


def test_qn_state_from_components():
    A = chain_power(1, 2)
    s = r_state(A, Qn(2), [proj(A, 0), proj(A, 1)])
    assert s((1, 0)) == (1, 0)
    with pytest.raises(ValueError, match="component 1 is not a state"):
        r_state(A, Qn(2), [proj(A, 0), [0, 0, 0, 0]])


def test_make_state_rejects_non_additive():
    with pytest.raises(ValueError):
        make_state(ChainAlgebra(2), Qn(1), [(0,), (F(1, 3),), (1,)])


def test_identity_morphism_on_boolean_cube():
    A = chain_power(1, 3)
    s = state_from_function(A, Qn(3), lambda x: tuple(F(v) for v in x))
    v = classify_r_state(A, s)
    assert v.is_morphism and v.is_extremal and v.is_meet_preserving
    assert v.kernel.sorted_members() == [(0, 0, 0)]
    assert not v.kernel_maximal


def test_constant_component_morphism_has_maximal_kernel():
    A = chain_power(1, 3)
    s = state_from_function(A, Qn(3), lambda x: (F(x[0]),) * 3)
    v = classify_r_state(A, s)
    assert v.is_morphism and v.is_extremal
    assert set(v.kernel.members) == {x for x in A.elements() if x[0] == 0}
    assert v.kernel_maximal


def test_lex_family_classification():
    A = GammaAlgebra.z2lex()
    v = classify_r_state(A, r_state(A, LexQ2(), b=1))
    assert v.is_morphism and v.bounded and not v.is_extremal
    assert v.kernel_sample == ["(0,0)"] and not v.kernel_maximal
    v0 = classify_r_state(A, r_state(A, LexQ2(), b=0))
    assert v0.is_extremal and v0.kernel_maximal
    assert all(lab.startswith("(0,") for lab in v0.kernel_sample) and len(v0.kernel_sample) > 10


def test_partition_morphisms():
    A = chain_power(1, 2)
    ident = morphism_from_partition(A, Qn(2), [(1, 0), (0, 1)])
    assert ident((1, 0)) == (1, 0) and ident((0, 1)) == (0, 1)
    const = morphism_from_partition(A, Qn(2), [1, 0])
    assert all(const(x) == (F(x[0]),) * 2 for x in A.elements())
    B = chain_power(1, 3)
    s = morphism_from_partition(B, Qn(3), [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert s((1, 0, 0)) == (1, 0, 0) not in {(0, 0, 0), (1, 1, 1)}
    with pytest.raises(ValueError, match="invalid partition"):
        morphism_from_partition(A, Qn(2), [(1, 0), (1, 0)])
    with pytest.raises(ValueError, match="invalid partition"):
        morphism_from_partition(A, Qn(2), [(h, 0), (h, 1)])


def _brute_force_real_homs(A):
    """Every map carrier -> {j/L}, L = lcm(1..height), checked against the hom equations."""
    t = A.tables
    L = math.lcm(*range(1, t.height + 1))
    vals = [F(j, L) for j in range(L + 1)]
    out = []
    E = t.elements
    for combo in itertools.product(vals, repeat=len(E)):
        f = dict(zip(E, combo))
        if f[A.zero] != 0 or f[A.one] != 1:
            continue
        if any(f[A.neg_minus(x)] != 1 - f[x] or f[A.neg_tilde(x)] != 1 - f[x] for x in E):
            continue
        if all(f[A.oplus(x, y)] == min(1, f[x] + f[y]) for x in E for y in E):
            out.append(combo)
    return sorted(out)


@pytest.mark.parametrize("A", [ChainAlgebra(2), ChainAlgebra(3), chain_power(1, 2), chain_product(2, 1)], ids=lambda A: A.name)
def test_real_morphisms_match_brute_force(A):
    assert real_morphisms(A) == _brute_force_real_homs(A)


def test_morphism_count_examples():
    assert len(enumerate_r_morphisms(chain_power(1, 2), Qn(2))) == 4
    assert len(enumerate_r_morphisms(chain_power(2, 3), Qn(1))) == 3
    assert len(enumerate_r_morphisms(ChainAlgebra(1), Qn(1))) == 1


@pytest.mark.parametrize("n,m,k", list(itertools.product((1, 2), (1, 2, 3), (1, 2, 3))))
def test_morphism_count_matches_maximal_ideals(n, m, k):
    A = chain_power(k, n)
    assert len(enumerate_r_morphisms(A, Qn(m))) == len(all_maximal_ideals(A)) ** m == n ** m


def test_quotient_by_kernel_examples():
    A = chain_power(1, 2)
    s = r_state(A, Qn(2), [proj(A, 0), proj(A, 0)])
    Q, induced, _ = quotient_by_kernel(A, s)
    assert is_isomorphic(Q, ChainAlgebra(1))
    assert len(set(induced.table)) == len(induced.table)
    B = chain_product(2, 1)
    s = state_from_function(B, Qn(1), lambda x: (F(x[1]),))
    Q, _, _ = quotient_by_kernel(B, s)
    assert is_isomorphic(Q, ChainAlgebra(1))
    ident = state_from_function(B, Qn(2), lambda x: (F(x[0], 2), F(x[1])))
    Q, _, _ = quotient_by_kernel(B, ident)
    assert is_isomorphic(Q, B)


def test_convex_decomposition_examples():
    A = chain_power(1, 2)
    p1, p2 = proj(A, 0).scalar_values(), proj(A, 1).scalar_values()
    mid = tuple((a + b) / 2 for a, b in zip(p1, p2))
    assert barycentric([p1, p2], mid) == [h, h]
    comp1 = tuple(F(3, 4) * a + F(1, 4) * b for a, b in zip(p1, p2))
    s = r_state(A, Qn(2), [comp1, p2])
    dec = convex_decompose(A, s, [proj(A, 0), proj(A, 1)])
    assert dec.weights == [0, F(3, 4), 0, F(1, 4)]
    assert dec.reconstruct() == s.table
    v = enumerate_r_morphisms(A, Qn(2))[1]
    dec = convex_decompose(A, v)
    assert sorted(dec.weights) == [0, 0, 0, 1]


@pytest.mark.parametrize("A", [ChainAlgebra(3), chain_power(1, 2), chain_product(2, 1)], ids=lambda A: A.name)
def test_identity_suite_on_vertices(A):
    for v in enumerate_vertices(state_polytope(A)):
        assert check_state_identities(A, v) == {k: None for k in IDENTITIES}


@given(st.integers(0, 2**31), st.integers(1, 3))
def test_identity_suite_on_random_states(seed, n):
    A = chain_product(2, 1)
    s = random_r_state(A, n, random.Random(seed))
    assert all(w is None for w in check_state_identities(A, s).values())


def test_identity_suite_catches_broken_map():
    A = ChainAlgebra(2)
    s = make_state(A, Qn(1), [(0,), (h,), (1,)])
    object.__setattr__(s, "table", ((0,), (F(1, 3),), (1,)))
    res = check_state_identities(A, s)
    assert res["iii"] is not None


@given(st.integers(0, 2**31), st.integers(1, 3))
def test_three_verdicts_agree(seed, n):
    rng = random.Random(seed)
    A = rng.choice([chain_power(1, 2), chain_product(2, 1), chain_power(2, 2)])
    s = random_r_state(A, n, rng, interior=rng.random() < 0.5)
    assert is_extremal(A, s) == is_morphism(A, s) == is_meet_preserving(A, s)


def test_kernels_are_normal_and_maximal_kernel_gives_morphism():
    rng = random.Random(3)
    A = chain_product(2, 1, 1)
    for _ in range(40):
        s = random_r_state(A, rng.randint(1, 2), rng)
        v = classify_r_state(A, s)
        assert v.kernel_verdict.is_ideal and v.kernel_verdict.is_normal
        if v.kernel_maximal:
            assert v.is_morphism
    # engineered: every component is the same projection, so the kernel is maximal
    for i, k in enumerate((2, 1, 1)):
        p = proj(A, i, k)
        s = r_state(A, Qn(2), [p, p])
        v = classify_r_state(A, s)
        assert v.kernel_maximal and v.is_morphism


def test_morphism_is_componentwise():
    A = chain_product(2, 1)
    for s in enumerate_r_morphisms(A, Qn(2)) + [random_r_state(A, 2, random.Random(i)) for i in range(10)]:
        comps = all(is_morphism(A, s.component(i)) for i in range(2))
        assert comps == is_morphism(A, s)
