// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "normkit/sampled.hpp"
#include "normkit/types.hpp"

namespace normkit {

/// K(t, a) for the couple (l^infty, l^1) of finite sequences.  The optimal
/// split clips a at a level lambda, so
///   K(t) = min over lambda in {0} u {|a_i|} of [ lambda + t * sum (|a_i|-lambda)_+ ];
/// the objective is piecewise linear in lambda and the minimum sits at a
/// breakpoint.  Exact, no search.
double kfunctional_sup_l1(std::span<const double> a, double t);

/// J(t, a) = max(||a||_infty, t ||a||_1).
double j_functional(std::span<const double> a, double t);

struct KProfile {
  std::vector<double> ts;  // logarithmic t-grid
  std::vector<double> ks;  // K(t, a)
  std::string couple = "linf-l1";  // which pair of endpoint norms
};

KProfile k_profile(std::span<const double> a, std::size_t nodes = 129);

/// Real-interpolation norm ( int (t^{-theta} K(t,a))^p dt/t )^{1/p} on a
/// logarithmic t-grid widened until the integrand at both ends is <= 1e-6 of
/// its peak (error after 3 widenings); p = infinity takes the sup.
double interp_norm(std::span<const double> a, double theta, double p);

/// U_alpha(f): ( (f(t_i) - f(t_{i-1})) / |t_i - t_{i-1}|^alpha ) over marked
/// grid nodes; the finite-dimensional reduction the embedding proofs run on.
std::vector<double> variation_increment_vector(const SampledFunction& f, double alpha,
                                               std::span<const std::size_t> marks);

/// The five stations of the embedding chain
///   B^{1/p,1} -> (BV_inf^a, BV_1^a)_{1/p,p} -> BV_p^a -> U_p -> B^{1/p,inf}
/// evaluated discretely, plus the three inequalities the proofs give exactly
/// at the discrete level.  The interpolation station takes the worst case
/// over a fixed family of mark sets: all nodes, local extrema, and 64 seeded
/// random subsets.
struct EmbeddingChainReport {
  double besov_q1 = 0.0;      // FD Besov, s = 1/p, q = 1
  double interp_mid = 0.0;    // worst-case interp norm of the increment vector
  double bvp_alpha = 0.0;     // BV_p^alpha station
  double up = 0.0;            // U_p station
  double besov_qinf = 0.0;    // FD Besov, s = 1/p, q = infinity

  double incr_linf = 0.0;     // worst-case ||U_alpha(f)||_infty over the family
  double incr_l1 = 0.0;       // worst-case ||U_alpha(f)||_1
  double bound_linf_rhs = 0.0;  // 2 * BV_inf^alpha value
  double bound_l1_rhs = 0.0;    // BV_1^alpha value
  double up_rhs = 0.0;          // 2^{1/p} * V_p norm
  bool linf_ok = false, l1_ok = false, up_ok = false;

  double p = 0.0, alpha = 0.0;
  std::uint64_t seed = 0;
};

EmbeddingChainReport embedding_chain_report(const SampledFunction& f, double p,
                                            double alpha, std::uint64_t seed = 0);

}  // namespace normkit
