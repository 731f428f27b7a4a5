import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pmv.algebra import (
    UNDEFINED,
    ChainAlgebra,
    GammaAlgebra,
    InfiniteCarrierError,
    ProductAlgebra,
    TableAlgebra,
    algebra_from_spec,
    boolean_elements,
    boolean_partitions,
    chain_power,
    chain_product,
    check_axioms,
    iterate,
    partial_add,
    pmv_eval,
    rdp2_brute_force,
    rdp2_decompose,
    sampled_axiom_check,
    subtract,
    to_table,
    verify_rdp2,
)

SMALL = [
    ChainAlgebra(1), ChainAlgebra(2), ChainAlgebra(4), chain_power(1, 2), chain_product(2, 1),
    chain_product(1, 2, 1), GammaAlgebra.zn((2, 1)),
]


def test_chain_operations():
    A = ChainAlgebra(2)
    assert pmv_eval("oplus", A, 1, 1) == 2
    assert pmv_eval("odot", A, 1, 1) == 0


def test_lex_negation():
    A = GammaAlgebra.z2lex((1, 0))
    assert pmv_eval("neg_minus", A, (0, 5)) == (1, -5)


def test_axioms_pass_on_small_algebras():
    for A in SMALL:
        rep = check_axioms(A)
        assert rep.ok, (A.name, rep.failed)


def test_mutated_chain_fails_a6():
    T = to_table(ChainAlgebra(2))
    M = T.with_oplus_entry(T.index_of("1"), T.index_of("1"), T.index_of("1"))
    rep = check_axioms(M)
    assert not rep.ok
    assert rep.results["A6"].witness == {"x": "1", "y": "2"}


def test_infinite_carrier_needs_sampling():
    A = GammaAlgebra.z2lex()
    with pytest.raises(InfiniteCarrierError):
        check_axioms(A)
    assert sampled_axiom_check(A, [(0, 0), (0, 1), (0, 3), (1, -2), (1, 0)]).ok
    grid = A.sample(25)
    assert len(grid) == 50
    rep = sampled_axiom_check(A, grid)
    assert rep.ok and rep.bounded


def test_sampled_check_on_table_delegates():
    T = to_table(ChainAlgebra(2))
    assert not sampled_axiom_check(T, []).bounded


def test_partial_addition():
    A = ChainAlgebra(2)
    assert partial_add(A, 1, 1) == 2
    assert partial_add(A, 2, 1) is UNDEFINED
    B = chain_power(1, 2)
    e1, e2 = (1, 0), (0, 1)
    assert partial_add(B, e1, e2) == (1, 1) == B.join(e1, e2)


def test_subtract_examples():
    assert subtract(ChainAlgebra(2), 1, 2, "right") == 1
    assert subtract(GammaAlgebra.zn((2, 2)), (1, 0), (2, 1), "right") == (1, 1)
    assert subtract(ChainAlgebra(3), 3, 3, "left") == 0
    with pytest.raises(ValueError):
        subtract(ChainAlgebra(2), 2, 1)


def test_iterate_examples():
    A = ChainAlgebra(3)
    assert iterate(A, 1, 3, "nat_mul") == 3
    assert iterate(A, 2, 2, "nat_mul") is UNDEFINED
    assert iterate(ChainAlgebra(2), 1, 2, "odot_pow") == 0
    assert iterate(A, 2, 2, "oplus_mul") == 3


def test_rdp2_examples():
    A = GammaAlgebra.zn((2, 2))
    w = rdp2_decompose(A, (1, 0), (1, 2), (0, 1), (2, 1))
    assert (w.c11, w.c12, w.c21, w.c22) == ((0, 0), (1, 0), (0, 1), (1, 1))
    w = rdp2_decompose(ChainAlgebra(2), 1, 1, 2, 0)
    assert (w.c11, w.c12, w.c21, w.c22) == (1, 0, 1, 0)
    w = rdp2_decompose(ChainAlgebra(2), 0, 0, 0, 0)
    assert (w.c11, w.c12, w.c21, w.c22) == (0, 0, 0, 0)


def test_rdp2_exhaustive_against_brute_force():
    for A in (ChainAlgebra(3), chain_product(1, 2), to_table(chain_power(1, 2))):
        E = A.elements()
        for a1, a2, b1, b2 in itertools.product(E, repeat=4):
            s = partial_add(A, a1, a2)
            if s is UNDEFINED or s != partial_add(A, b1, b2):
                continue
            w = rdp2_decompose(A, a1, a2, b1, b2)
            assert verify_rdp2(A, a1, a2, b1, b2, w)
            assert rdp2_brute_force(A, a1, a2, b1, b2) is not None


def test_boolean_elements():
    assert boolean_elements(ChainAlgebra(2)) == [0, 2]
    B = chain_power(1, 2)
    assert len(boolean_elements(B)) == 4
    parts = set(boolean_partitions(B, 2))
    assert parts == {((1, 0), (0, 1)), ((0, 1), (1, 0)), ((0, 0), (1, 1)), ((1, 1), (0, 0))}


def _derived_identities(A):
    E = A.elements()
    for x, y in itertools.product(E, repeat=2):
        assert A.join(x, y) == A.oplus(x, A.odot(A.neg_tilde(x), y))
        assert A.meet(x, y) == A.odot(x, A.oplus(A.neg_minus(x), y))
        assert A.neg_tilde(A.neg_minus(x)) == x
        left = A.odot(A.oplus(x, y), A.neg_minus(y))
        assert partial_add(A, left, A.odot(y, x)) == x
    for x, y, z in itertools.product(E, repeat=3):
        assert A.meet(x, A.join(y, z)) == A.join(A.meet(x, y), A.meet(x, z))


@pytest.mark.parametrize("A", SMALL, ids=lambda A: A.name)
def test_derived_identities_exhaustive(A):
    _derived_identities(A)


def test_table_backend_matches_formulas():
    for A in SMALL:
        T = to_table(A)
        ta = A.tables
        for i, j in itertools.product(range(ta.n), repeat=2):
            assert T.odot(i, j) == ta.index[A.odot(ta.elements[i], ta.elements[j])]
            assert T.join(i, j) == ta.index[A.join(ta.elements[i], ta.elements[j])]
            assert T.leq(i, j) == A.leq(ta.elements[i], ta.elements[j])


@given(st.data())
def test_partial_add_associative(data):
    A = data.draw(st.sampled_from([ChainAlgebra(4), chain_product(2, 2), GammaAlgebra.zn((2, 3))]))
    E = A.elements()
    x, y, z = (data.draw(st.sampled_from(E)) for _ in range(3))
    xy = partial_add(A, x, y)
    yz = partial_add(A, y, z)
    left = UNDEFINED if xy is UNDEFINED else partial_add(A, xy, z)
    right = UNDEFINED if yz is UNDEFINED else partial_add(A, x, yz)
    assert left == right


def test_table_json_roundtrip():
    T = to_table(chain_product(1, 2))
    U = TableAlgebra.from_json(T.to_json())
    assert U.to_json() == T.to_json()
    assert check_axioms(U).ok


def test_algebra_from_spec():
    assert algebra_from_spec({"kind": "chain", "k": 3}).size() == 4
    P = algebra_from_spec({"kind": "product", "factors": [{"kind": "chain", "k": 1}] * 2})
    assert isinstance(P, ProductAlgebra) and P.size() == 4
    G = algebra_from_spec({"kind": "gamma", "group": "zn", "unit": [2, 2]})
    assert G.size() == 9
    with pytest.raises(ValueError):
        algebra_from_spec({"kind": "table", "carrier": ["0", "1"], "oplus": [["0"]], "neg_minus": ["1", "0"],
                           "neg_tilde": ["1", "0"], "zero": "0", "one": "1"})
