"""Exact sl2-actions on symmetric polynomials and Young diagrams.

Two actions by differential operators on the algebra of symmetric
polynomials in n variables are realized in the Schur basis, together with
their lowest-weight (kernel) spaces, the decomposition into irreducible
modules, character and multiplicity formulas, and the transported
operators on the vector space spanned by Young diagrams.  All arithmetic
is exact over the rationals."""

from .combinatorics import (
    addable_corners,
    alpha_tuples,
    content,
    count_lw_solutions,
    count_partitions_in_rectangle,
    gamma,
    partitions,
    removable_corners,
    sylvester_cayley,
)
from .polyring import (
    Poly,
    elementary_poly,
    homogeneous_poly,
    is_symmetric,
    partial,
    power_sum_poly,
    rho1_apply,
    rho2_apply,
    sigma_slice,
    z_generator_poly,
)
from .symfunc import (
    SchurVector,
    alternant,
    elementary_schur,
    homogeneous_schur,
    multiply,
    pieri_e1,
    poly_to_schur,
    power_sum_schur,
    schur_to_poly,
    staircase,
    z_generator_schur,
    z_monomial_schur,
)
from .sl2_actions import (
    LowestWeightVector,
    act_rho1,
    act_rho1_named,
    act_rho2,
    character_finite,
    decompose_finite,
    decompose_lambda_n,
    lowest_weight_basis_rho1,
    lowest_weight_space_rho2,
    vd_realization,
    weight_of_alpha,
)
from .young import (
    DiagramVector,
    KerovParams,
    diagram_multiply,
    hat_apply,
    kerov_apply,
    nabla,
    phi,
    phi_inverse,
    pi_k,
    tilde_apply,
    xi_minus,
    zeta,
)
from .exprlang import EvalError, ParseError, evaluate, parse, print_expr

__all__ = [
    "DiagramVector",
    "EvalError",
    "KerovParams",
    "LowestWeightVector",
    "ParseError",
    "Poly",
    "SchurVector",
    "act_rho1",
    "act_rho1_named",
    "act_rho2",
    "addable_corners",
    "alpha_tuples",
    "alternant",
    "character_finite",
    "content",
    "count_lw_solutions",
    "count_partitions_in_rectangle",
    "decompose_finite",
    "decompose_lambda_n",
    "diagram_multiply",
    "elementary_poly",
    "elementary_schur",
    "evaluate",
    "gamma",
    "hat_apply",
    "homogeneous_poly",
    "homogeneous_schur",
    "is_symmetric",
    "kerov_apply",
    "lowest_weight_basis_rho1",
    "lowest_weight_space_rho2",
    "multiply",
    "nabla",
    "parse",
    "partial",
    "partitions",
    "phi",
    "phi_inverse",
    "pi_k",
    "pieri_e1",
    "poly_to_schur",
    "power_sum_poly",
    "power_sum_schur",
    "print_expr",
    "removable_corners",
    "rho1_apply",
    "rho2_apply",
    "schur_to_poly",
    "sigma_slice",
    "staircase",
    "sylvester_cayley",
    "tilde_apply",
    "vd_realization",
    "weight_of_alpha",
    "xi_minus",
    "z_generator_poly",
    "z_generator_schur",
    "z_monomial_schur",
    "zeta",
]
