// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "normkit/sampled.hpp"
#include "normkit/types.hpp"

namespace normkit {

/// nu_p (alpha = 0) or nu_p^alpha together with a maximizing grid partition.
/// Recomputing the objective on `partition` reproduces `value` to 1e-12.
/// The discrete value is a lower bound of the continuum supremum; refinement
/// studies are the caller's job, which is why the grid size travels with
/// every norm built on top of this.
struct VariationResult {
  double value = 0.0;
  std::vector<std::size_t> partition;  // strictly increasing grid indices
  double p = 1.0;
  double alpha = 0.0;
};

/// Exact maximization of sum_k |f(t_k)-f(t_{k-1})|^p / |t_k-t_{k-1}|^(alpha p)
/// over all grid subsets with >= 2 points, O(n^2) dynamic program; returns
/// the p-th root.  Ties prefer fewer points, then smaller indices.
/// p = infinity takes the sup of the increment ratios instead of the sum
/// (the l^infty sequence norm of Def-4.1 type).
VariationResult pvar_dp(const SampledFunction& f, double p, double alpha = 0.0);

/// Same objective over local extrema only; valid for alpha = 0, where
/// dropping interior points of monotone runs never decreases the sum.
/// Accelerator for large grids, equivalence-tested against pvar_dp.
VariationResult pvar_dp_pruned(const SampledFunction& f, double p);

/// Exhaustive 2^n oracle, guarded to n <= 20.
VariationResult pvar_bruteforce(const SampledFunction& f, double p, double alpha = 0.0);

/// Evaluate the partition objective (p-th root) for a given index subset.
double partition_objective(const SampledFunction& f, double p, double alpha,
                           const std::vector<std::size_t>& partition);

/// sup |f| + nu_p^alpha(f); the Banach-space (and Banach-algebra) norm.
double vp_norm(const SampledFunction& f, double p, double alpha = 0.0);

/// |f(x0)| + vp_norm(f', p) with the derivative supplied explicitly; this is
/// the order-one member of the BV_p^alpha scale, which is defined through
/// the primitive's derivative once alpha reaches 1.
double bvp1_norm(const SampledFunction& fprime, double f_at_x0, double p);

/// nu_p^alpha(f) + sup_{x != 0} |f(x)| / |x|^alpha over admissible nodes.
/// Grid nodes at x = 0 are excluded from the sup (use midpoint grids when
/// alpha > 0); errors if every node is excluded.
double bvp_alpha_norm(const SampledFunction& f, double p, double alpha);

/// Discrete U_p seminorm: sup over t (multiples of the spacing) of
/// [ t^{-1} * rectangle-rule integral of sup_{|h| <= t} |f(x+h)-f(x)|^p ]^{1/p}.
double up_seminorm(const SampledFunction& f, double p);

}  // namespace normkit
