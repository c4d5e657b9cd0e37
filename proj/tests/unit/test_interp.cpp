// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "normkit/corpus.hpp"
#include "normkit/expr.hpp"
#include "normkit/interp.hpp"
#include "normkit/pvar.hpp"
#include "normkit/verify.hpp"

using namespace normkit;

namespace {

// split-search oracle: random splits a = a0 + a1 plus a dense clip grid
double k_oracle(std::span<const double> a, double t, std::uint64_t seed) {
  Rng rng(seed);
  double linf = 0.0, l1 = 0.0;
  for (double v : a) {
    linf = std::max(linf, std::abs(v));
    l1 += std::abs(v);
  }
  double best = std::min(linf, t * l1);
  std::vector<double> candidates;
  for (int s = 0; s <= 2000; ++s) candidates.push_back(linf * double(s) / 2000.0);
  for (double v : a) candidates.push_back(std::abs(v));  // the true breakpoints
  for (double lambda : candidates) {
    double excess = 0.0;
    for (double v : a) excess += std::max(0.0, std::abs(v) - lambda);
    best = std::min(best, lambda + t * excess);
  }
  for (int trial = 0; trial < 10000; ++trial) {
    double a0max = 0.0, a1sum = 0.0;
    for (double v : a) {
      const double u = rng.uniform() * v;
      a0max = std::max(a0max, std::abs(u));
      a1sum += std::abs(v - u);
    }
    best = std::min(best, a0max + t * a1sum);
  }
  return best;
}

}  // namespace

TEST_CASE("kfunctional: the (2,1) plateau example") {
  const std::vector<double> a{2.0, 1.0};
  CHECK(kfunctional_sup_l1(a, 1.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(k_oracle(a, 1.0, 9) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("kfunctional: small-t decay and large-t saturation") {
  const std::vector<double> a{0.5, -1.5, 2.0};
  const double l1 = 4.0, linf = 2.0;
  for (double t : {1e-6, 1e-4, 1e-2}) {
    const double k = kfunctional_sup_l1(a, t);
    CHECK(k <= t * l1 + 1e-15);
    CHECK(k >= 0.0);
  }
  CHECK(kfunctional_sup_l1(a, 100.0) == linf);
}

TEST_CASE("kfunctional: threshold formula equals the split oracle") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng(s + 42);
    const int n = rng.uniform_int(1, 16);
    std::vector<double> a(std::size_t(n), 0.0);
    for (double& v : a) v = rng.uniform(-2.0, 2.0);
    for (double t : {0.05, 0.3, 1.0, 4.0}) {
      const double exact = kfunctional_sup_l1(a, t);
      const double oracle = k_oracle(a, t, s * 7 + 1);
      CHECK(exact == doctest::Approx(oracle).epsilon(1e-9));
      CHECK(oracle >= exact - 1e-12);  // the brute force never beats the formula
    }
  }
}

TEST_CASE("kfunctional: profiles are nondecreasing and concave") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Rng rng(s);
    std::vector<double> a(8, 0.0);
    for (double& v : a) v = rng.uniform(-1.0, 1.0);
    const KProfile prof = k_profile(a, 65);
    double l1 = 0.0, linf = 0.0;
    for (double v : a) {
      l1 += std::abs(v);
      linf = std::max(linf, std::abs(v));
    }
    for (std::size_t i = 0; i < prof.ts.size(); ++i) {
      CHECK(prof.ks[i] <= std::min(linf, prof.ts[i] * l1) + 1e-12);
      if (i > 0) CHECK(prof.ks[i] >= prof.ks[i - 1] - 1e-12);
      if (i > 0 && i + 1 < prof.ts.size()) {
        // midpoint concavity on the t axis
        const double t_mid = 0.5 * (prof.ts[i - 1] + prof.ts[i + 1]);
        const double k_mid = kfunctional_sup_l1(a, t_mid);
        CHECK(2.0 * k_mid >= kfunctional_sup_l1(a, prof.ts[i - 1]) +
                                 kfunctional_sup_l1(a, prof.ts[i + 1]) - 1e-12);
      }
    }
  }
}

TEST_CASE("kfunctional: couple-swap identity K(t) = t K(1/t, swapped)") {
  Rng rng(17);
  std::vector<double> a(12, 0.0);
  for (double& v : a) v = rng.uniform(-3.0, 3.0);
  // swapped couple oracle: inf ||a0||_1 + u ||a1||_inf over clip levels
  auto k_l1_linf = [&](double u) {
    double linf = 0.0;
    for (double v : a) linf = std::max(linf, std::abs(v));
    double best = u * linf;  // a0 = 0
    for (int s = 0; s <= 4000; ++s) {
      const double lambda = linf * double(s) / 4000.0;
      double excess = 0.0;
      for (double v : a) excess += std::max(0.0, std::abs(v) - lambda);
      best = std::min(best, excess + u * lambda);
    }
    return best;
  };
  for (double t : {0.1, 0.5, 2.0, 10.0})
    CHECK(kfunctional_sup_l1(a, t) ==
          doctest::Approx(t * k_l1_linf(1.0 / t)).epsilon(1e-6));
}

TEST_CASE("j_functional: one-liner contract") {
  const std::vector<double> a{3.0, -4.0};
  CHECK(j_functional(a, 1.0) == 7.0);
  CHECK(j_functional(a, 0.1) == 4.0);
}

TEST_CASE("interp_norm: zero vector and absolute homogeneity") {
  const std::vector<double> z(8, 0.0);
  CHECK(interp_norm(z, 0.5, 2.0) == 0.0);
  Rng rng(5);
  std::vector<double> a(16, 0.0);
  for (double& v : a) v = rng.uniform(-1.0, 1.0);
  std::vector<double> b(a);
  for (double& v : b) v *= -3.0;
  CHECK(interp_norm(b, 0.5, 2.0) ==
        doctest::Approx(3.0 * interp_norm(a, 0.5, 2.0)).epsilon(1e-9));
}

TEST_CASE("interp_norm: theta = 1/p echoes the l^p norm, stable in N") {
  double lo = kInf, hi = 0.0;
  for (std::size_t n : {8u, 16u, 32u, 64u, 128u, 256u, 512u}) {
    Rng rng(n);
    std::vector<double> a(n, 0.0);
    double l2 = 0.0;
    for (double& v : a) {
      v = rng.uniform(-1.0, 1.0);
      l2 += v * v;
    }
    const double r = interp_norm(a, 0.5, 2.0) / std::sqrt(l2);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  CHECK(hi / lo < 2.0);
}

TEST_CASE("variation_increment_vector: telescoping, zeros, frozen example") {
  const SampledFunction mono({0.0, 1.0, 2.0, 3.0}, {0.0, 0.5, 0.75, 2.0});
  const std::vector<std::size_t> all{0, 1, 2, 3};
  const std::vector<double> v = variation_increment_vector(mono, 0.0, all);
  double l1 = 0.0;
  for (double x : v) l1 += std::abs(x);
  CHECK(l1 == doctest::Approx(2.0).epsilon(1e-15));

  const SampledFunction c({0.0, 1.0, 2.0}, {4.0, 4.0, 4.0});
  for (double x : variation_increment_vector(c, 0.0, std::vector<std::size_t>{0, 1, 2}))
    CHECK(x == 0.0);

  const SampledFunction osc({0.0, 1.0, 2.0, 3.0}, {0.0, 1.0, 0.0, 1.0});
  const std::vector<double> w = variation_increment_vector(osc, 0.0, all);
  CHECK(w == std::vector<double>{1.0, -1.0, 1.0});
  double l2 = 0.0;
  for (double x : w) l2 += x * x;
  CHECK(std::sqrt(l2) == doctest::Approx(std::pow(3.0, 0.5)));

  CHECK_THROWS_AS(variation_increment_vector(osc, 0.0, std::vector<std::size_t>{2, 1}),
                  std::invalid_argument);
}

TEST_CASE("embedding_chain_report: zero input gives an all-zero chain") {
  const SampledFunction z = sample([](double) { return 0.0; }, Interval(0.0, 1.0), 128);
  const EmbeddingChainReport rep = embedding_chain_report(z, 2.0, 0.0);
  CHECK(rep.besov_q1 == 0.0);
  CHECK(rep.interp_mid == 0.0);
  CHECK(rep.bvp_alpha == 0.0);
  CHECK(rep.up == 0.0);
  CHECK(rep.besov_qinf == 0.0);
  CHECK(rep.linf_ok);
  CHECK(rep.l1_ok);
  CHECK(rep.up_ok);
}

TEST_CASE("embedding_chain_report: a single normalized jump meets the l-infty"
          " bound with factor at most 2") {
  std::vector<double> xs(128), ys(128);
  for (int i = 0; i < 128; ++i) {
    xs[std::size_t(i)] = double(i) / 127.0;
    ys[std::size_t(i)] = i < 64 ? 0.0 : 1.0;
  }
  const SampledFunction f(xs, ys);
  const EmbeddingChainReport rep = embedding_chain_report(f, 2.0, 0.0);
  CHECK(rep.linf_ok);
  CHECK(rep.incr_linf <= rep.bound_linf_rhs);
  CHECK(rep.incr_linf >= 0.5 * rep.bound_linf_rhs / 2.0);  // equality factor <= 2
}

TEST_CASE("embedding_chain_report: sin satisfies the U_p link across refinements") {
  double prev_ratio = -1.0;
  for (std::size_t n : {128u, 256u, 512u}) {
    const SampledFunction f = sample(parse_expr("sin(2*pi*x)"), Interval(0.0, 1.0), n);
    const EmbeddingChainReport rep = embedding_chain_report(f, 2.0, 0.0);
    CHECK(rep.up_ok);
    CHECK(rep.up <= rep.up_rhs + 1e-9);
    const double r = rep.up / rep.up_rhs;
    if (prev_ratio >= 0.0) CHECK(std::abs(r - prev_ratio) < 0.2);
    prev_ratio = r;
  }
}

TEST_CASE("embedding_chain_report: the three exact bounds hold across families") {
  const FamilyId fams[] = {FamilyId::SmoothPoly, FamilyId::Trig, FamilyId::AbsKink,
                           FamilyId::Step};
  for (std::uint64_t s = 0; s < 40; ++s) {
    const SampledFunction f =
        make_family_sample(fams[s % 4], s, Interval(0.0, 1.0), 128);
    for (double alpha : {0.0, 0.5}) {
      const EmbeddingChainReport rep = embedding_chain_report(f, 2.0, alpha, s);
      CHECK(rep.linf_ok);
      CHECK(rep.l1_ok);
      CHECK(rep.up_ok);
    }
  }
}
