"""Exact-arithmetic toolkit for matched pairs of finite groups, the
bicrossed-product Hopf algebras they generate, graded categories with a
crossed group action, and the set-theoretic Yang-Baxter solutions that
braidings on those categories induce."""

from .scalars import Cyclotomic, cyclotomic_polynomial, embed, root_of_unity, unify
from .groups import (
    FiniteGroup,
    GroupHom,
    Subgroup,
    all_homomorphisms,
    cayley_color_matrix,
    enumerate_homs,
    group_cyclic,
    group_direct_product,
    group_from_table,
    group_product,
    group_symmetric,
    group_trivial,
    hom_validate,
    subgroup_generated,
)
from .matched_pair import (
    Factorization,
    MatchedPair,
    PairAnalysis,
    analyze,
    bicrossed_group,
    from_factorization,
    matched_pair_conjugation,
    matched_pair_trivial,
    matched_pair_validate,
    restrict,
)
from .cocycles import (
    CocyclePair,
    cocycle_pair_validate,
    embed_cocycles,
    enumerate_cocycle_pairs,
    pointwise_product,
    trivial_cocycles,
)
from .hopf import (
    HModule,
    HopfAlgebra,
    RMatrix,
    antipode_antihom_report,
    build_bicrossed,
    closed_form_antipode,
    module_tensor,
    module_validate,
    regular_module,
    rmatrix_from_braiding,
    seq_maps,
    solve_antipode,
    trivial_module,
    verify_antipode,
    verify_bialgebra,
    verify_quasitriangular,
)
from .crossed_cat import (
    CrossedAction,
    EquivariantObject,
    GradedMap,
    GradedSpace,
    K_functor,
    K_inverse,
    braiding_morphism,
    equivariant_tensor,
    equivariant_validate,
    free_object,
    gamma_scalar,
    hopf_monad_check,
    rho2_scalar,
    rho_apply,
    unit_object,
    verify_braiding,
    verify_crossed_action,
)
from .ybe import (
    BraidingData,
    BraidingPair,
    SetSolution,
    b_map,
    braiding_pair_validate,
    enumerate_braiding_pairs,
    g_crossed_braiding_pair,
    r_map,
    scalar_braiding_check,
    scalar_braiding_search,
    verify_qybe,
)
from .report import CheckReport, CheckResult

__version__ = "0.1.0"
