// SPDX-License-Identifier: Apache-2.0
#include "normkit/pvar.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace normkit {

namespace {

void check_params(const SampledFunction& f, double p, double alpha) {
  if (f.size() < 2) throw std::invalid_argument("pvar: need at least 2 samples");
  if (!(p >= 1.0)) throw std::invalid_argument("pvar: need p >= 1");
  if (!(alpha >= 0.0) || alpha >= 1.0)
    throw std::invalid_argument("pvar: need alpha in [0, 1)");
}

double increment_weight(const SampledFunction& f, double p, double alpha,
                        std::size_t i, std::size_t j) {
  const double dy = std::abs(f.ys[j] - f.ys[i]);
  if (alpha == 0.0) return std::pow(dy, p);
  return std::pow(dy / std::pow(f.xs[j] - f.xs[i], alpha), p);
}

double increment_ratio(const SampledFunction& f, double alpha, std::size_t i,
                       std::size_t j) {
  const double dy = std::abs(f.ys[j] - f.ys[i]);
  if (alpha == 0.0) return dy;
  return dy / std::pow(f.xs[j] - f.xs[i], alpha);
}

// p = infinity: the objective is the max increment ratio, attained by a pair.
VariationResult pvar_sup(const SampledFunction& f, double alpha) {
  const std::size_t n = f.size();
  double best = -1.0;
  std::size_t bi = 0, bj = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double r = increment_ratio(f, alpha, i, j);
      if (r > best) {
        best = r;
        bi = i;
        bj = j;
      }
    }
  return VariationResult{best, {bi, bj}, kInf, alpha};
}

VariationResult dp_on_indices(const SampledFunction& f, double p, double alpha,
                              const std::vector<std::size_t>& idx) {
  const std::size_t m = idx.size();
  // best[j]: max objective over partitions ending at idx[j], paired with the
  // number of points used; ties prefer fewer points, then smaller predecessors.
  std::vector<double> best(m, 0.0);
  std::vector<std::size_t> count(m, 1);
  std::vector<std::ptrdiff_t> pred(m, -1);
  for (std::size_t j = 1; j < m; ++j) {
    double bv = -1.0;
    std::size_t bc = 0;
    std::ptrdiff_t bp = -1;
    for (std::size_t i = 0; i < j; ++i) {
      // weights are nonnegative, so extending the best partition ending at i
      // dominates starting a fresh pair {i, j}
      const double extend = best[i] + increment_weight(f, p, alpha, idx[i], idx[j]);
      const std::size_t ec = count[i] + 1;
      const bool better =
          extend > bv || (extend == bv && (ec < bc || (ec == bc && std::ptrdiff_t(i) < bp)));
      if (better) {
        bv = extend;
        bc = ec;
        bp = std::ptrdiff_t(i);
      }
    }
    best[j] = bv;
    count[j] = bc;
    pred[j] = bp;
  }
  std::size_t end = 1;
  for (std::size_t j = 2; j < m; ++j) {
    if (best[j] > best[end] ||
        (best[j] == best[end] && count[j] < count[end]))
      end = j;
  }
  std::vector<std::size_t> part;
  for (std::ptrdiff_t j = std::ptrdiff_t(end); j >= 0; j = pred[j]) {
    part.push_back(idx[std::size_t(j)]);
    if (pred[j] < 0) break;
  }
  std::reverse(part.begin(), part.end());
  // a single increment needs no p-th-root round trip; keep it exact
  const double value = part.size() == 2
                           ? increment_ratio(f, alpha, part[0], part[1])
                           : std::pow(best[end], 1.0 / p);
  return VariationResult{value, std::move(part), p, alpha};
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  return idx;
}

std::vector<std::size_t> extremal_indices(const SampledFunction& f) {
  const std::size_t n = f.size();
  std::vector<std::size_t> idx;
  idx.push_back(0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double dl = f.ys[i] - f.ys[idx.back()];
    const double dr = f.ys[i + 1] - f.ys[i];
    if ((dl > 0 && dr < 0) || (dl < 0 && dr > 0)) idx.push_back(i);
  }
  idx.push_back(n - 1);
  return idx;
}

}  // namespace

double partition_objective(const SampledFunction& f, double p, double alpha,
                           const std::vector<std::size_t>& partition) {
  if (partition.size() < 2)
    throw std::invalid_argument("partition_objective: need >= 2 indices");
  if (is_inf(p)) {
    double m = 0.0;
    for (std::size_t k = 1; k < partition.size(); ++k)
      m = std::max(m, increment_ratio(f, alpha, partition[k - 1], partition[k]));
    return m;
  }
  double sum = 0.0;
  for (std::size_t k = 1; k < partition.size(); ++k)
    sum += increment_weight(f, p, alpha, partition[k - 1], partition[k]);
  return std::pow(sum, 1.0 / p);
}

VariationResult pvar_dp(const SampledFunction& f, double p, double alpha) {
  if (is_inf(p)) {
    if (f.size() < 2) throw std::invalid_argument("pvar: need at least 2 samples");
    if (!(alpha >= 0.0) || alpha >= 1.0)
      throw std::invalid_argument("pvar: need alpha in [0, 1)");
    return pvar_sup(f, alpha);
  }
  check_params(f, p, alpha);
  return dp_on_indices(f, p, alpha, all_indices(f.size()));
}

VariationResult pvar_dp_pruned(const SampledFunction& f, double p) {
  if (is_inf(p)) return pvar_sup(f, 0.0);
  check_params(f, p, 0.0);
  return dp_on_indices(f, p, 0.0, extremal_indices(f));
}

VariationResult pvar_bruteforce(const SampledFunction& f, double p, double alpha) {
  const std::size_t n = f.size();
  if (n > 20) throw std::invalid_argument("pvar_bruteforce: n > 20 would enumerate 2^n subsets");
  if (!is_inf(p)) check_params(f, p, alpha);
  double best = -1.0;
  std::vector<std::size_t> bestpart;
  std::vector<std::size_t> part;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    if (std::popcount(mask) < 2) continue;
    part.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ull << i)) part.push_back(i);
    double v;
    if (is_inf(p)) {
      v = 0.0;
      for (std::size_t k = 1; k < part.size(); ++k)
        v = std::max(v, increment_ratio(f, alpha, part[k - 1], part[k]));
    } else {
      v = 0.0;
      for (std::size_t k = 1; k < part.size(); ++k)
        v += increment_weight(f, p, alpha, part[k - 1], part[k]);
    }
    if (v > best || (v == best && !bestpart.empty() && part.size() < bestpart.size())) {
      best = v;
      bestpart = part;
    }
  }
  const double value = is_inf(p) ? best : std::pow(best, 1.0 / p);
  return VariationResult{value, std::move(bestpart), p, alpha};
}

double vp_norm(const SampledFunction& f, double p, double alpha) {
  return f.sup_abs() + pvar_dp(f, p, alpha).value;
}

double bvp1_norm(const SampledFunction& fprime, double f_at_x0, double p) {
  return std::abs(f_at_x0) + vp_norm(fprime, p);
}

double bvp_alpha_norm(const SampledFunction& f, double p, double alpha) {
  if (!(alpha >= 0.0) || alpha >= 1.0)
    throw std::invalid_argument("bvp_alpha_norm: need alpha in [0, 1)");
  const double nu = pvar_dp(f, p, alpha).value;
  double sup = 0.0;
  bool any = false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double ax = std::abs(f.xs[i]);
    if (alpha > 0.0 && ax == 0.0) continue;  // x in R \ {0} per the definition
    any = true;
    sup = std::max(sup, alpha == 0.0 ? std::abs(f.ys[i])
                                     : std::abs(f.ys[i]) / std::pow(ax, alpha));
  }
  if (!any) throw std::invalid_argument("bvp_alpha_norm: every node excluded from the sup");
  return nu + sup;
}

double up_seminorm(const SampledFunction& f, double p) {
  if (is_inf(p) || !(p >= 1.0))
    throw std::invalid_argument("up_seminorm: need finite p >= 1");
  if (!f.is_uniform())
    throw std::invalid_argument("up_seminorm: uniform grid required");
  const std::size_t n = f.size();
  const std::size_t cells = n - 1;  // rectangle rule, left endpoints
  // M[i] = sup_{|h| <= k*spacing} |f(x_i + h) - f(x_i)|^p, grown incrementally
  // in k so the whole (t, x) sweep is O(n^2).
  std::vector<double> M(cells, 0.0);
  double best = 0.0;
  double running = 0.0;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i < cells; ++i) {
      double cand = M[i];
      if (i + k < n) cand = std::max(cand, std::pow(std::abs(f.ys[i + k] - f.ys[i]), p));
      if (i >= k) cand = std::max(cand, std::pow(std::abs(f.ys[i - k] - f.ys[i]), p));
      running += cand - M[i];
      M[i] = cand;
    }
    // t^{-1} * spacing * sum = sum / k
    best = std::max(best, running / double(k));
  }
  return std::pow(best, 1.0 / p);
}

}  // namespace normkit
