"""Exact computer algebra for the nonsymmetric compositional Delta identities.

The package computes, over the exact field Q(q,t), both the operator sides
(Dyck path algebra, Macdonald operators, the u-series operator calculus) and
the combinatorial sides (decorated paths, flagged parking functions, flagged
LLT polynomials) of the compositional Delta identities, and verifies them
against each other at desk scale.
"""

from .scalars import (
    PoleError,
    QtRat,
    SpecializedDomain,
    SymbolicDomain,
    UDomain,
    UPoly,
    bar_qt,
    specialize,
    u_coeff,
)
from .partitions import cell_stats, mu_stats
from .symfunc import SymFunc, VirtualAlphabet, involutions, omega_kernel, plethysm
from .macdonald import (
    c_compose,
    delta_op,
    macdonald_expand,
    macdonald_ht,
    nabla,
    tau_star_sym,
    theta_op,
)
from .vspace import VElem, tau_star_ell
from .pspace import (
    PElem,
    atom,
    atom_expand,
    demazure_pi,
    pi_ell_inv,
    plethysm_pi_ell,
    pol_part,
    pp_inv,
    pp_map,
    stable_atom,
    weyl_chain,
    weyl_pibold,
)
from .paths import (
    DecoratedPath,
    DyckPath,
    PartialPath,
    dinv,
    dinv_variants,
    enumerate_decorated,
    enumerate_labels,
    path_stats,
)
from .llt import llt_poly, rhs_nonsym, rhs_symmetric
from .words import (
    SpanError,
    WordExpansion,
    eval_word,
    expand_in_word_images,
    mq_apply,
    nabla_check,
    w_check,
    y_as_words,
)
from .delta_ops import (
    chi_op,
    core_bracket,
    lhs_column,
    lhs_eq1,
    lhs_eq2,
    ns_c_alpha,
    ns_m_alpha_k,
)
from .checks import CheckSpec, Report, run_check, run_suite, suite_specs

__version__ = "0.1.0"
