# SPDX-License-Identifier: Apache-2.0
"""Function-space norms on sampled functions, with theorem verifiers.

The heavy lifting lives in the compiled extension; this package re-exports
its surface.
"""

from ._core import (  # noqa: F401
    DomainError,
    Expr,
    besov_fd_seminorm,
    block_energies,
    bvp1_norm,
    bvp_alpha_norm,
    chain_derivative_values,
    check_banach_algebra,
    check_basic_inequality,
    check_composition_bvp1,
    check_nfold,
    check_sobolev_chain,
    corpus_values,
    embedding_chain_report,
    finite_difference,
    holder_zygmund_seminorm,
    inf,
    interp_norm,
    j_functional,
    kfunctional_sup_l1,
    lp_besov_norm,
    modulus,
    paraproduct_residual,
    parse_expr,
    pvar_bruteforce,
    pvar_dp,
    sample_expr,
    scaling_check,
    scan_example4,
    sobolev_fd_norm,
    up_seminorm,
    vp_norm,
)

__version__ = "0.1.0"
