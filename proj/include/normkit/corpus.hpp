// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "normkit/types.hpp"

namespace normkit {

/// Smooth cutoff rho: identically 1 on [-1/e, 1/e], supported in [-1/2, 1/2],
/// C-infinity ramps in between.  The singular-oscillation test functions are
/// built on it.
double smooth_bump(double t);
double smooth_bump_deriv(double t);

/// A test-corpus function together with its a.e. derivative in closed form.
struct CorpusFunction {
  std::string name;
  std::function<double(double)> f;
  std::function<double(double)> df;
  Interval window;  // where the function is meant to be sampled
};

/// u_alpha(x) = |x + alpha| - |alpha|; Lipschitz with a kink at -alpha.
CorpusFunction corpus_u_alpha(double alpha);

/// psi(t) = |t| rho(t) / log|t| (0 at t = 0); mild singular behaviour at the
/// origin, still of bounded p-variation derivative.
CorpusFunction corpus_psi();

/// psi_{alpha,beta}(t) = |t|^{alpha+1} rho(t) sin(|t|^{-beta}), 0 < beta < alpha.
/// Derivative oscillates with amplitude ~ |t|^{alpha-beta}; nu_p(psi') is
/// finite exactly when 1/p < alpha/beta - 1.
CorpusFunction corpus_psi_ab(double alpha, double beta);

/// Deterministic double in [0, 1) from a splitmix-style stream; the seeded
/// generators below must be bit-stable across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next_u64();
  double uniform();                       // [0, 1)
  double uniform(double a, double b);     // [a, b)
  int uniform_int(int lo, int hi);        // [lo, hi]

 private:
  std::uint64_t state_;
};

}  // namespace normkit
