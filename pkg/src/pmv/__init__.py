"""Exact computations with pseudo MV-algebras, their states and signed measures."""

from pmv.algebra import (
    AxiomReport,
    CapExceeded,
    CarrierError,
    ChainAlgebra,
    GammaAlgebra,
    InfiniteCarrierError,
    PmvAlgebra,
    ProductAlgebra,
    TableAlgebra,
    UNDEFINED,
    algebra_from_spec,
    chain_power,
    chain_product,
    check_axioms,
    iterate,
    partial_add,
    pmv_eval,
    rdp2_decompose,
    subtract,
)
from pmv.groups import LexQ2, Qn, UnitalGroup, Z2LexGroup, ZnGroup, group_eval, norm_unit, riesz_eval
from pmv.ideals import Ideal, all_maximal_ideals, classify_ideal, ideal_generated, quotient
from pmv.jordan import (
    RSignedMeasure,
    jordan_decompose,
    lattice_ops,
    lub_oracle,
    measure_order,
    simplex_report,
    sup_from_subadditive,
)
from pmv.metric import check_interpolation, check_norm_properties, dist, extend_state, norm_kernel, pseudo_norm
from pmv.states import (
    RState,
    StatePolytope,
    classify_r_state,
    convex_decompose,
    enumerate_r_morphisms,
    enumerate_vertices,
    morphism_from_partition,
    quotient_by_kernel,
    r_state,
    state_polytope,
)

__version__ = "0.1.0"
