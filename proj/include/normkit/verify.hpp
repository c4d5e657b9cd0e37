// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "normkit/corpus.hpp"
#include "normkit/expr.hpp"
#include "normkit/sampled.hpp"
#include "normkit/types.hpp"

namespace normkit {

/// One verified inequality: both sides, their ratio, and whether
/// lhs <= rhs + slack.  Reports are deterministic functions of
/// (inputs, seed); the digest identifies the inputs.
struct InequalityReport {
  std::string theorem;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;  // lhs / rhs
  double slack = 1e-9;
  bool holds = false;
  std::string inputs_digest;
  std::uint64_t seed = 0;
  std::string note;
};

InequalityReport make_report(std::string theorem, double lhs, double rhs,
                             std::string digest, std::uint64_t seed,
                             double slack = 1e-9);

/// FNV-1a over the little-endian bytes of the values; stable input identity.
std::string digest_values(std::span<const double> values);

enum class FamilyId {
  SmoothPoly,
  Trig,
  AbsKink,
  Step,
  CorpusPsi,
  CorpusUAlpha,
  CorpusPsiAB,
};

const char* family_name(FamilyId id);
std::optional<FamilyId> family_from_name(const std::string& name);

/// A seeded draw from a family: generation is deterministic in (id, seed)
/// and every member has finite vp_norm on its sampling window.
struct FunctionFamily {
  FamilyId id = FamilyId::SmoothPoly;
  std::uint64_t seed = 0;
  std::size_t size = 257;  // sample count used when the member is gridded
};

/// Deterministic function drawn from a family.  Step members carry no
/// derivative; corpus members use their closed forms.
struct GeneratedFunction {
  std::string name;
  std::function<double(double)> f;
  std::function<double(double)> df;  // empty for Step
  bool has_derivative = false;
};

GeneratedFunction make_family_function(FamilyId id, std::uint64_t seed);
SampledFunction make_family_sample(FamilyId id, std::uint64_t seed, Interval interval,
                                   std::size_t n);
SampledFunction make_family_sample(const FunctionFamily& family, Interval interval);

/// Random differentiable Expr from the smooth family used for chains:
/// polynomials of degree <= 3, sin, cos, exp, affine, all scaled to keep
/// ranges within about [-3, 3].
Expr make_smooth_chain_expr(Rng& rng);
/// Same family plus abs kinks, for the composition checks.
Expr make_kink_expr(Rng& rng);

// --- theorem checks -------------------------------------------------------

/// ||f g||_{V_p^alpha} <= ||f||_{V_p^alpha} ||g||_{V_p^alpha} with the
/// sup + nu_p^alpha norm; f and g must share a grid.
InequalityReport check_banach_algebra(const SampledFunction& f, const SampledFunction& g,
                                      double p, double alpha = 0.0,
                                      std::uint64_t seed = 0);

/// Basic inequality: g = alpha0 + int_{t0} h is built internally; f must be
/// sampled on (a superset of) g(I).  Returns the sharp form (a) and the
/// product form (b).
std::pair<InequalityReport, InequalityReport> check_basic_inequality(
    const SampledFunction& f, const SampledFunction& h, double p, double alpha0,
    double t0, std::uint64_t seed = 0);

/// ||f o g||_{BV_p^1} <= ||f||_{BV_p^1} (1 + 2^{1/p} ||g||_{BV_p^1}) with
/// exact expression derivatives; g anchored at the window's left endpoint,
/// f anchored at g(x0) inside its own domain g(I).  Only the membership =>
/// bounded-operator direction is exercised; the converse would need the full
/// operator image and is not numerically testable.
InequalityReport check_composition_bvp1(const Expr& f, const Expr& g, double p,
                                        Interval window, std::size_t n = 513,
                                        std::uint64_t seed = 0);

struct NfoldReport {
  InequalityReport side_i;
  std::optional<InequalityReport> side_ii;
  double prefactor_i = 0.0;   // 2^{(n-1)/p}
  double prefactor_ii = 0.0;  // 2^{n/p}
  std::vector<double> factor_norms;  // ||g_n'||_{V_p(I)}, then ||g_k'|| on tail images
  bool degenerate_tail = false;
};

/// n-fold bound: ||[o g_i]'||_{V_p(I)} against 2^{(n-1)/p} ||g_n'||_{V_p(I)}
/// prod_k ||g_k'||_{V_p(tail image)}, and the (ii) variant with an outer f.
NfoldReport check_nfold(std::span<const Expr> gs, const Expr* f, double p,
                        Interval window, std::size_t n = 513, std::uint64_t seed = 0);

enum class NormSelector { Vp, BVp1 };

struct NormPropertyEstimate {
  double c = 0.0;  // max over trials of ||f o g|| / (1 + ||g||)
  std::string argmax_digest;
  std::vector<double> per_trial;
};

NormPropertyEstimate check_norm_property(const GeneratedFunction& f, FamilyId family,
                                         NormSelector norm, int trials, double p,
                                         Interval window, std::size_t n,
                                         std::uint64_t seed);

/// Multiplication with compact support: g is cut to the support window by a
/// smooth bump, then ||f g||_{BV_p^1} <= c ||f|| ||g|| with c calibrated once
/// on a frozen seed set and reused; the report flags later exceedance.
InequalityReport check_mult_support(const GeneratedFunction& f, const GeneratedFunction& g,
                                    double p, Interval window, Interval support,
                                    std::size_t n = 513, std::uint64_t seed = 0);

double mult_support_calibrated_constant(double p);

struct SobolevChainReport {
  InequalityReport norm_bound;  // sobolev norm of G o u vs sup|G'| * norm of u
  double residual = 0.0;        // L^p distance, grid derivative vs (G' o u) u'
  bool residual_ok = false;
  double g_at_zero = 0.0;
};

/// Chain rule in W^{1,p}: requires |G(0)| <= 1e-12; residual tolerance is the
/// caller's (1e-3 smooth, 1e-2 kinked on midpoint grids).
SobolevChainReport check_sobolev_chain(const Expr& G, const Expr& u, double p,
                                       Interval window, std::size_t n = 10001,
                                       double residual_tol = 1e-3,
                                       std::uint64_t seed = 0);

enum class Classification { Convergent, Divergent, Inconclusive };

const char* classification_name(Classification c);

struct Example4Report {
  double alpha = 0.0, beta = 0.0, p = 0.0;
  std::vector<std::size_t> grid_sizes;
  std::vector<double> values;       // nu_p(psi') per refinement level
  std::vector<double> sum_values;   // nu_p^p, the partition sums that diverge
  Classification cls = Classification::Inconclusive;
  bool expected_convergent = false;  // sign of alpha/beta - 1 - 1/p
  bool matches_criterion = false;
};

/// nu_p(psi'_{alpha,beta}) on dyadically refined midpoint grids n = 2^8..2^max;
/// CONVERGENT when the last two partition sums differ by < 5 percent,
/// DIVERGENT when the sums grow at every doubling and by >= 20 percent over
/// the scan.
Example4Report scan_example4(double alpha, double beta, double p, int max_level = 14);

}  // namespace normkit
