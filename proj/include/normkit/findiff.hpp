// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>

#include "normkit/sampled.hpp"
#include "normkit/types.hpp"

namespace normkit {

/// Forward difference of order m with step h.  On [lo, hi] the result lives
/// on the truncated domain [lo, hi - m h]; h must be a positive integer
/// multiple of the grid spacing so the stencil never interpolates.
struct DiffSpec {
  int order = 1;   // m >= 1
  double step = 0.0;
};

/// Parameters of the finite-difference Besov seminorm.  The operator applied
/// is Delta_h^{M+1}; the default M = floor(s) + 1 keeps the order safely
/// above s, and an explicit smaller M selects the lower-order variant
/// (still requires 0 < s < M + 1).
struct BesovParams {
  double s = 0.5;
  double p = 2.0;
  double q = 2.0;
  int M = 0;  // 0 requests the default floor(s) + 1

  int effective_m() const { return M > 0 ? M : int(s) + 1; }
};

/// Binomial-formula evaluation; equal to the iterated one-step recursion
/// exactly, which the tests pin down.
SampledFunction finite_difference(const SampledFunction& f, DiffSpec spec);

/// Discrete L^p norm: rectangle rule over the nodes, max for p = infinity.
double discrete_lp_norm(std::span<const double> ys, double spacing, double p);

/// m-th order modulus of continuity: sup over grid-aligned h in (0, t] of
/// the discrete L^p norm of Delta_h^m f on its truncated domain.
double modulus(const SampledFunction& f, int m, double t, double p);

/// ( integral over [spacing, 1] of (h^{-s} ||Delta_h^{M+1} f||_p)^q dh/h )^{1/q}
/// on a logarithmic h-grid snapped to grid-aligned steps (>= 64 nodes where
/// the grid allows); q = infinity takes the sup over the h-grid.  The small-h
/// cutoff at one grid spacing is the resolution limit of the discretization.
NormValue besov_fd_seminorm(const SampledFunction& f, const BesovParams& params);

/// sup |f| + sup over grid-aligned (x, h), 0 < h <= 1, of h^{-s} |Delta_h^k f(x)|
/// with k = floor(s) + 1.
double holder_zygmund_seminorm(const SampledFunction& f, double s);

/// ||f||_{L^p} + sup over grid-aligned h of ||Delta_h^1 f||_p / h.
double sobolev_fd_norm(const SampledFunction& f, double p);

}  // namespace normkit
