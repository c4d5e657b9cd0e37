// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "normkit/corpus.hpp"
#include "normkit/lpaley.hpp"

using namespace normkit;

namespace {

double l2_dot(const PeriodicSignal& a, const PeriodicSignal& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a.ys[i] * b.ys[i];
  return acc * a.grid.spacing();
}

PeriodicSignal band_limited_probe(const UniformGrid& grid, std::uint64_t seed,
                                  std::size_t max_bin) {
  Rng rng(seed);
  std::vector<double> amp(max_bin + 1, 0.0), phase(max_bin + 1, 0.0);
  for (std::size_t k = 2; k <= max_bin; ++k) {
    amp[k] = rng.uniform(-1.0, 1.0) / double(k);
    phase[k] = rng.uniform(0.0, 2.0 * M_PI);
  }
  return sample_periodic(
      [&](double x) {
        double acc = 0.0;
        for (std::size_t k = 2; k <= max_bin; ++k)
          acc += amp[k] * std::cos(2.0 * M_PI * double(k) * x / grid.length + phase[k]);
        return acc;
      },
      grid);
}

}  // namespace

TEST_CASE("build_partition: partition-sum identities hold to rounding") {
  const UniformGrid grid = UniformGrid::make(1024, 1.0);
  const PartitionOfUnity pou = build_partition(2.0, grid);
  for (std::size_t k = 1; k <= grid.n / 2; ++k) {
    double s = 0.0;
    for (int j = pou.j_min; j <= pou.j_max; ++j) s += pou.phi_level(j)[k];
    CHECK(std::abs(s - 1.0) <= 1e-10);
    double inhom = pou.psi[k];
    for (int j = std::max(0, pou.j_min); j <= pou.j_max; ++j)
      inhom += pou.phi_level(j)[k];
    CHECK(std::abs(inhom - 1.0) <= 1e-10);
  }
  CHECK(pou.psi[0] == 1.0);
}

TEST_CASE("build_partition: windows live inside their annuli and beyond-neighbor"
          " windows are disjoint") {
  const UniformGrid grid = UniformGrid::make(1024, 1.0);
  const PartitionOfUnity pou = build_partition(2.0, grid);
  for (int j = pou.j_min; j <= pou.j_max; ++j) {
    const auto& w = pou.phi_level(j);
    for (std::size_t k = 0; k <= grid.n / 2; ++k) {
      if (w[k] == 0.0) continue;
      const double xi = pou.freqs[k];
      CHECK(xi >= std::ldexp(1.0, j) / pou.K - 1e-12);
      CHECK(xi <= pou.K * std::ldexp(1.0, j + 1) + 1e-12);
    }
  }
  for (int j = pou.j_min; j <= pou.j_max; ++j)
    for (int m = j + 2; m <= pou.j_max; ++m) {
      double overlap = 0.0;
      for (std::size_t k = 0; k <= grid.n / 2; ++k)
        overlap += pou.phi_level(j)[k] * pou.phi_level(m)[k];
      CHECK(overlap == 0.0);
    }
}

TEST_CASE("build_partition: psi is identically 1 below 1/K") {
  const UniformGrid grid = UniformGrid::make(1024, 1.0);
  const PartitionOfUnity pou = build_partition(2.0, grid);
  for (std::size_t k = 0; k <= grid.n / 2; ++k)
    if (pou.freqs[k] <= 1.0 / pou.K) CHECK(pou.psi[k] == 1.0);
}

TEST_CASE("build_partition: parameter validation") {
  const UniformGrid grid = UniformGrid::make(128, 1.0);
  CHECK_THROWS_AS(build_partition(1.0, grid), std::invalid_argument);
  CHECK_THROWS_AS(UniformGrid::make(100, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_partition(2.0, UniformGrid::make(32, 1.0)), std::invalid_argument);
}

TEST_CASE("dyadic_block: plateau-centered tones land in one block") {
  const UniformGrid grid = UniformGrid::make(2048, 1.0);
  const PartitionOfUnity pou = build_partition(2.0, grid);
  for (int j : {2, 4, 6}) {
    const double freq = 1.5 * std::ldexp(1.0, j);  // center of the level-j plateau
    const PeriodicSignal probe = sample_periodic(
        [freq](double x) { return std::cos(2.0 * M_PI * freq * x); }, grid);
    double total = 0.0, in_level = 0.0;
    for (int m = pou.j_min; m <= pou.j_max; ++m) {
      const double e = l2_dot(dyadic_block(probe, pou, m), dyadic_block(probe, pou, m));
      total += e;
      if (m == j) in_level = e;
    }
    CHECK(in_level / total >= 0.99);
  }
}

TEST_CASE("dyadic_block: constants live entirely in the low window") {
  const UniformGrid grid = UniformGrid::make(256, 1.0);
  const PartitionOfUnity pou = build_partition(2.0, grid);
  const PeriodicSignal c = sample_periodic([](double) { return 4.2; }, grid);
  for (int j = pou.j_min; j <= pou.j_max; ++j)
    CHECK(periodic_lp_norm(dyadic_block(c, pou, j), kInf) < 1e-12);
  CHECK(periodic_lp_norm(low_block(c, pou), kInf) == doctest::Approx(4.2).epsilon(1e-12));
}

TEST_CASE("decompose: low part plus blocks reconstructs the signal") {
  const UniformGrid grid = UniformGrid::make(1024, 1.0);
  const PartitionOfUnity pou = build_partition(2.0, grid);
  const PeriodicSignal f = band_limited_probe(grid, 3, 400);
  const BlockDecomposition dec = decompose(f, pou);
  CHECK(dec.residual_rel_l2 <= 1e-9);
}

TEST_CASE("dyadic_block: beyond-neighbor blocks are orthogonal") {
  const UniformGrid grid = UniformGrid::make(512, 1.0);
  const PartitionOfUnity pou = build_partition(2.0, grid);
  const PeriodicSignal f = band_limited_probe(grid, 9, 200);
  std::vector<PeriodicSignal> blocks;
  for (int j = pou.j_min; j <= pou.j_max; ++j) blocks.push_back(dyadic_block(f, pou, j));
  const double scale = l2_dot(f, f);
  for (std::size_t a = 0; a < blocks.size(); ++a)
    for (std::size_t b = a + 2; b < blocks.size(); ++b)
      CHECK(std::abs(l2_dot(blocks[a], blocks[b])) <= 1e-10 * std::max(1.0, scale));
}

TEST_CASE("lp_besov_norm: zero input, linearity, single-tone value") {
  const UniformGrid grid = UniformGrid::make(1024, 1.0);
  const PartitionOfUnity pou = build_partition(2.0, grid);
  const PeriodicSignal z = sample_periodic([](double) { return 0.0; }, grid);
  CHECK(lp_besov_norm(z, pou, 0.5, 2.0, 2.0, true).value == 0.0);

  const int j = 4;
  const double freq = 1.5 * std::ldexp(1.0, j);
  const PeriodicSignal tone = sample_periodic(
      [freq](double x) { return std::cos(2.0 * M_PI * freq * x); }, grid);
  const double block_lp = periodic_lp_norm(dyadic_block(tone, pou, j), 2.0);
  const double norm = lp_besov_norm(tone, pou, 0.5, 2.0, kInf, true).value;
  CHECK(norm == doctest::Approx(std::pow(2.0, 0.5 * j) * block_lp).epsilon(0.01));

  PeriodicSignal scaled = tone;
  for (double& y : scaled.ys) y *= -2.5;
  CHECK(lp_besov_norm(scaled, pou, 0.5, 2.0, 2.0, true).value ==
        doctest::Approx(2.5 * lp_besov_norm(tone, pou, 0.5, 2.0, 2.0, true).value)
            .epsilon(1e-12));
}

TEST_CASE("scaling_check: identity dilation and the dyadic law") {
  const UniformGrid grid = UniformGrid::make(4096, 1.0);
  const PeriodicSignal f = band_limited_probe(grid, 11, 256);  // below n/8
  const ScalingReport r0 = scaling_check(f, 2.0, 0.5, 2.0, 2.0, 0);
  CHECK(r0.ratio == doctest::Approx(1.0).epsilon(1e-12));
  for (int m : {1, 2}) {
    const ScalingReport r = scaling_check(f, 2.0, 0.5, 2.0, 2.0, m);
    CHECK(std::abs(r.ratio - 1.0) <= 0.05);
    CHECK(std::abs(r.lp_ratio - 1.0) <= 0.01);
  }
}

TEST_CASE("scaling_check: measured dilation exponent fits s - 1/p") {
  const UniformGrid grid = UniformGrid::make(4096, 1.0);
  const PeriodicSignal f = band_limited_probe(grid, 17, 256);
  const double s = 0.5, p = 2.0;
  for (int m : {1, 2}) {
    const ScalingReport r = scaling_check(f, 2.0, s, p, 2.0, m);
    const double exponent = std::log2(r.norm_dilated / r.norm_orig) / double(m);
    CHECK(std::abs(exponent - (s - 1.0 / p)) <= 0.05);
  }
}

TEST_CASE("scaling_check: aliasing guard rejects wide-band input") {
  const UniformGrid grid = UniformGrid::make(256, 1.0);
  const PeriodicSignal f = sample_periodic(
      [](double x) { return std::cos(2.0 * M_PI * 100.0 * x); }, grid);
  CHECK_THROWS_AS(scaling_check(f, 2.0, 0.5, 2.0, 2.0, 2), DomainError);
}

TEST_CASE("paraproduct_split: multiplying by one reproduces the block") {
  const UniformGrid grid = UniformGrid::make(2048, 1.0);
  const PartitionOfUnity pou = build_partition(2.0, grid);
  const PeriodicSignal f = band_limited_probe(grid, 5, 300);
  const PeriodicSignal one = sample_periodic([](double) { return 1.0; }, grid);
  const int k = 4;
  const ParaproductSplit ps = paraproduct_split(f, one, pou, k);
  CHECK(ps.sum_residual_rel <= 1e-8);
  const PeriodicSignal dk = dyadic_block(f, pou, k);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double s = ps.high_low.ys[i] + ps.low_high.ys[i] + ps.diagonal.ys[i];
    num += (s - dk.ys[i]) * (s - dk.ys[i]);
    den += dk.ys[i] * dk.ys[i];
  }
  CHECK(std::sqrt(num / den) <= 1e-8);
}

TEST_CASE("paraproduct_split: separated tones are a high-low interaction") {
  const UniformGrid grid = UniformGrid::make(2048, 1.0);
  const PartitionOfUnity pou = build_partition(2.0, grid);
  const int k = 5;
  const double hi_freq = 1.5 * std::ldexp(1.0, k);  // level k
  const double lo_freq = 1.5;                       // level 0
  const PeriodicSignal f = sample_periodic(
      [hi_freq](double x) { return std::cos(2.0 * M_PI * hi_freq * x); }, grid);
  const PeriodicSignal g = sample_periodic(
      [lo_freq](double x) { return 1.0 + 0.5 * std::cos(2.0 * M_PI * lo_freq * x); }, grid);
  const ParaproductSplit ps = paraproduct_split(f, g, pou, k);
  const double e_hl = l2_dot(ps.high_low, ps.high_low);
  const double e_cross = l2_dot(ps.low_high, ps.low_high) + l2_dot(ps.diagonal, ps.diagonal);
  CHECK(e_cross <= 0.01 * (e_hl + e_cross));
}

TEST_CASE("paraproduct_split: random band-limited pair sums exactly") {
  const UniformGrid grid = UniformGrid::make(4096, 1.0);
  const PartitionOfUnity pou = build_partition(2.0, grid);
  const PeriodicSignal f = band_limited_probe(grid, 21, 300);
  const PeriodicSignal g = band_limited_probe(grid, 22, 300);
  for (int k : {3, 5, 7}) {
    const ParaproductSplit ps = paraproduct_split(f, g, pou, k);
    CHECK(ps.sum_residual_rel <= 1e-8);
  }
  CHECK_THROWS_AS(paraproduct_split(f, g, pou, pou.j_max), std::invalid_argument);
}
