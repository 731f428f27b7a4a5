import itertools
import random
from fractions import Fraction as F

import pytest

from pmv.algebra import ChainAlgebra, GammaAlgebra
from pmv.groups import Qn
from pmv.metric import (
    check_interpolation,
    check_norm_properties,
    dist,
    extend_state,
    factors_through_kernel,
    find_interpolant,
    image_is_directed,
    in_image,
    is_metric_on,
    norm_kernel,
    pseudo_norm,
    sample_grid,
    sample_quadruples,
)
from pmv.states import state_from_function, state_polytope, make_state

G22 = GammaAlgebra.zn((2, 2))


def ctx_of(f, A=G22, n=2):
    return extend_state(A, state_from_function(A, Qn(n), f))


def identity_ctx():
    return ctx_of(lambda x: (F(x[0], 2), F(x[1], 2)))


def collapsed_ctx():
    return ctx_of(lambda x: (F(x[0], 2), F(x[0], 2)))


def chain_ctx(k=2):
    A = ChainAlgebra(k)
    (v,) = state_polytope(A).vertices
    return extend_state(A, make_state(A, Qn(1), [(c,) for c in v]))


def test_chain_extension():
    ctx = chain_ctx(2)
    assert ctx((5,)) == (F(5, 2),)
    assert ctx((-3,)) == (F(-3, 2),)


def test_pseudo_norm_examples():
    ctx = identity_ctx()
    assert pseudo_norm(ctx, (1, 2)) == 1
    assert pseudo_norm(ctx, (0, 0)) == 0
    assert dist(ctx, (3, -1), (3, -1)) == 0


def test_extension_is_linear_everywhere_on_a_box():
    ctx = collapsed_ctx()
    for g in itertools.product(range(-5, 6), repeat=2):
        assert ctx(g) == ctx.linear(g)


def test_kernels():
    assert norm_kernel(identity_ctx()) == []
    assert norm_kernel(collapsed_ctx()) == [(0, 1)]
    assert norm_kernel(chain_ctx()) == []


def test_homogeneity_equality_for_negative_multiple():
    ctx = identity_ctx()
    for x in sample_grid(ctx)[:50]:
        assert pseudo_norm(ctx, tuple(-2 * a for a in x)) == 2 * pseudo_norm(ctx, x)


@pytest.mark.parametrize("make", [chain_ctx, identity_ctx, collapsed_ctx])
def test_norm_properties(make):
    ctx = make()
    grid = sample_grid(ctx)
    assert len(grid) >= 200
    rep = check_norm_properties(ctx, grid)
    assert rep.ok, rep.to_json()
    assert factors_through_kernel(ctx, grid)
    assert image_is_directed(ctx, grid[:60])


def test_metric_iff_trivial_kernel():
    for make in (chain_ctx, identity_ctx, collapsed_ctx):
        ctx = make()
        ok, witness = is_metric_on(ctx, sample_grid(ctx))
        assert ok == (norm_kernel(ctx) == [])
        if not ok:
            a, b = witness
            assert dist(ctx, a, b) == 0 and a != b


def test_interpolation_examples():
    ctx = chain_ctx(3)
    x1, x2, y1, y2 = (F(1, 3),), (F(2, 3),), (F(5, 3),), (1,)
    assert find_interpolant(ctx, x1, x2, y1, y2) == (F(2, 3),)
    assert find_interpolant(ctx, x1, x1, x1, y1) == x1
    ctx = identity_ctx()
    assert find_interpolant(ctx, (0, 0), (F(1, 2), 0), (1, F(1, 2)), (F(1, 2), 1)) == (F(1, 2), 0)
    assert not in_image(ctx, (F(1, 4), 0))


@pytest.mark.parametrize("make", [chain_ctx, identity_ctx, collapsed_ctx])
def test_interpolation_on_samples(make):
    ctx = make()
    rep = check_interpolation(ctx, sample_quadruples(ctx, 100, random.Random(7)))
    assert rep.ok and rep.checked == 100
    for z in rep.interpolants:
        assert in_image(ctx, z)


def test_unordered_quadruple_rejected():
    ctx = identity_ctx()
    with pytest.raises(ValueError):
        check_interpolation(ctx, [((1, 1), (0, 0), (0, 0), (1, 1))])


def test_non_gamma_algebra_rejected():
    with pytest.raises(TypeError):
        extend_state(GammaAlgebra.z2lex(), None)
