// SPDX-License-Identifier: Apache-2.0
#include "normkit/interp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "normkit/findiff.hpp"
#include "normkit/pvar.hpp"

namespace normkit {

namespace {

struct SortedMagnitudes {
  std::vector<double> mags;     // descending
  std::vector<double> prefix;   // prefix[i] = sum of top i magnitudes

  explicit SortedMagnitudes(std::span<const double> a) {
    mags.reserve(a.size());
    for (double v : a) mags.push_back(std::abs(v));
    std::sort(mags.begin(), mags.end(), std::greater<double>());
    prefix.resize(mags.size() + 1, 0.0);
    for (std::size_t i = 0; i < mags.size(); ++i) prefix[i + 1] = prefix[i] + mags[i];
  }

  // K(t) = min over clip levels lambda in {0, mags...}; at lambda = mags[j]
  // the excess mass is prefix[j] - j * mags[j].
  double k(double t) const {
    if (mags.empty() || mags.front() == 0.0) return 0.0;
    double best = t * prefix.back();  // lambda = 0
    for (std::size_t j = 0; j < mags.size(); ++j) {
      const double lambda = mags[j];
      const double excess = prefix[j] - double(j) * lambda;
      best = std::min(best, lambda + t * excess);
    }
    return best;
  }
};

}  // namespace

double kfunctional_sup_l1(std::span<const double> a, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("kfunctional: need t >= 0");
  return SortedMagnitudes(a).k(t);
}

double j_functional(std::span<const double> a, double t) {
  double linf = 0.0, l1 = 0.0;
  for (double v : a) {
    linf = std::max(linf, std::abs(v));
    l1 += std::abs(v);
  }
  return std::max(linf, t * l1);
}

KProfile k_profile(std::span<const double> a, std::size_t nodes) {
  if (nodes < 2) throw std::invalid_argument("k_profile: need at least 2 nodes");
  SortedMagnitudes sm(a);
  const double linf = sm.mags.empty() ? 0.0 : sm.mags.front();
  const double l1 = sm.prefix.back();
  KProfile out;
  out.ts.resize(nodes);
  out.ks.resize(nodes);
  // K saturates at ||a||_infty once t ||a||_1 >= ||a||_infty; bracket that knee
  const double t_mid = (l1 > 0.0) ? linf / l1 : 1.0;
  const double t_lo = t_mid * 1e-4, t_hi = t_mid * 1e4;
  for (std::size_t i = 0; i < nodes; ++i) {
    const double u = double(i) / double(nodes - 1);
    out.ts[i] = t_lo * std::pow(t_hi / t_lo, u);
    out.ks[i] = sm.k(out.ts[i]);
  }
  return out;
}

double interp_norm(std::span<const double> a, double theta, double p) {
  if (!(theta > 0.0) || !(theta < 1.0))
    throw std::invalid_argument("interp_norm: need theta in (0, 1)");
  if (!is_inf(p) && !(p >= 1.0)) throw std::invalid_argument("interp_norm: need p >= 1");
  SortedMagnitudes sm(a);
  const double linf = sm.mags.empty() ? 0.0 : sm.mags.front();
  if (linf == 0.0) return 0.0;
  const double l1 = sm.prefix.back();

  auto weighted = [&](double t) { return std::pow(t, -theta) * sm.k(t); };

  // the integrand peaks near the saturation knee t ~ ||a||_inf / ||a||_1 and
  // decays like t^{1-theta} below it and t^{-theta} above it; size the window
  // from those exponents, then verify with up to 3 widenings
  const double knee = linf / l1;
  constexpr double decay = 1e-6;
  double t_lo = 0.1 * knee * std::pow(decay, 1.0 / (1.0 - theta));
  double t_hi = 10.0 * knee * std::pow(decay, -1.0 / theta);
  const std::size_t nodes_per_decade = 24;
  for (int widening = 0;; ++widening) {
    const double peak = std::max({weighted(knee), weighted(t_lo), weighted(t_hi)});
    if (weighted(t_lo) <= decay * peak && weighted(t_hi) <= decay * peak) break;
    if (widening >= 3)
      throw DomainError("interp_norm: integrand not decayed after 3 widenings");
    if (weighted(t_lo) > decay * peak) t_lo *= 1e-2;
    if (weighted(t_hi) > decay * peak) t_hi *= 1e2;
  }

  const std::size_t nodes = std::max<std::size_t>(
      65, std::size_t(std::log10(t_hi / t_lo) * double(nodes_per_decade)) + 1);
  if (is_inf(p)) {
    double sup = 0.0;
    for (std::size_t i = 0; i < nodes; ++i) {
      const double u = double(i) / double(nodes - 1);
      sup = std::max(sup, weighted(t_lo * std::pow(t_hi / t_lo, u)));
    }
    return sup;
  }
  // trapezoid in log t
  double acc = 0.0, prev = 0.0;
  double prev_logt = std::log(t_lo);
  for (std::size_t i = 0; i < nodes; ++i) {
    const double u = double(i) / double(nodes - 1);
    const double t = t_lo * std::pow(t_hi / t_lo, u);
    const double val = std::pow(weighted(t), p);
    const double logt = std::log(t);
    if (i > 0) acc += 0.5 * (prev + val) * (logt - prev_logt);
    prev = val;
    prev_logt = logt;
  }
  return std::pow(acc, 1.0 / p);
}

std::vector<double> variation_increment_vector(const SampledFunction& f, double alpha,
                                               std::span<const std::size_t> marks) {
  if (marks.size() < 2)
    throw std::invalid_argument("variation_increment_vector: need >= 2 marks");
  for (std::size_t k = 0; k < marks.size(); ++k) {
    if (marks[k] >= f.size())
      throw std::invalid_argument("variation_increment_vector: mark out of range");
    if (k > 0 && !(marks[k - 1] < marks[k]))
      throw std::invalid_argument("variation_increment_vector: marks not increasing");
  }
  std::vector<double> out(marks.size() - 1);
  for (std::size_t k = 1; k < marks.size(); ++k) {
    const double dy = f.ys[marks[k]] - f.ys[marks[k - 1]];
    const double dx = f.xs[marks[k]] - f.xs[marks[k - 1]];
    out[k - 1] = (alpha == 0.0) ? dy : dy / std::pow(dx, alpha);
  }
  return out;
}

namespace {

std::vector<std::size_t> extrema_marks(const SampledFunction& f) {
  std::vector<std::size_t> idx;
  idx.push_back(0);
  for (std::size_t i = 1; i + 1 < f.size(); ++i) {
    const double dl = f.ys[i] - f.ys[idx.back()];
    const double dr = f.ys[i + 1] - f.ys[i];
    if ((dl > 0 && dr < 0) || (dl < 0 && dr > 0)) idx.push_back(i);
  }
  idx.push_back(f.size() - 1);
  return idx;
}

std::vector<std::size_t> random_marks(std::size_t n, std::mt19937_64& rng) {
  // each node kept with probability ~1/2; endpoints forced so marks >= 2
  std::vector<std::size_t> idx;
  for (std::size_t i = 1; i + 1 < n; ++i)
    if (rng() & 1u) idx.push_back(i);
  idx.insert(idx.begin(), 0);
  idx.push_back(n - 1);
  return idx;
}

}  // namespace

EmbeddingChainReport embedding_chain_report(const SampledFunction& f, double p,
                                            double alpha, std::uint64_t seed) {
  if (!(p > 1.0) || is_inf(p))
    throw std::invalid_argument("embedding_chain_report: need p in (1, inf)");
  if (!(alpha >= 0.0) || alpha >= 1.0)
    throw std::invalid_argument("embedding_chain_report: need alpha in [0, 1)");

  EmbeddingChainReport rep;
  rep.p = p;
  rep.alpha = alpha;
  rep.seed = seed;

  BesovParams bp;
  bp.s = 1.0 / p;
  bp.p = p;
  bp.q = 1.0;
  rep.besov_q1 = besov_fd_seminorm(f, bp).value;
  bp.q = kInf;
  rep.besov_qinf = besov_fd_seminorm(f, bp).value;

  rep.bvp_alpha = bvp_alpha_norm(f, p, alpha);
  rep.up = up_seminorm(f, p);

  // mark-set family: all nodes, local extrema, 64 seeded random subsets
  std::vector<std::vector<std::size_t>> family;
  {
    std::vector<std::size_t> all(f.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    family.push_back(std::move(all));
  }
  family.push_back(extrema_marks(f));
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  for (int i = 0; i < 64; ++i) family.push_back(random_marks(f.size(), rng));

  const double theta = 1.0 / p;
  for (const auto& marks : family) {
    const std::vector<double> incr = variation_increment_vector(f, alpha, marks);
    double linf = 0.0, l1 = 0.0;
    for (double v : incr) {
      linf = std::max(linf, std::abs(v));
      l1 += std::abs(v);
    }
    rep.incr_linf = std::max(rep.incr_linf, linf);
    rep.incr_l1 = std::max(rep.incr_l1, l1);
    rep.interp_mid = std::max(rep.interp_mid, interp_norm(incr, theta, p));
  }

  constexpr double slack = 1e-9;
  rep.bound_linf_rhs = 2.0 * bvp_alpha_norm(f, kInf, alpha);
  rep.bound_l1_rhs = bvp_alpha_norm(f, 1.0, alpha);
  rep.up_rhs = std::pow(2.0, 1.0 / p) * vp_norm(f, p);
  rep.linf_ok = rep.incr_linf <= rep.bound_linf_rhs + slack;
  rep.l1_ok = rep.incr_l1 <= rep.bound_l1_rhs + slack;
  rep.up_ok = rep.up <= rep.up_rhs + slack;
  return rep;
}

}  // namespace normkit
