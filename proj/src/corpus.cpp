// SPDX-License-Identifier: Apache-2.0
#include "normkit/corpus.hpp"

#include <cmath>
#include <stdexcept>

namespace normkit {

namespace {

constexpr double kInnerEdge = 0.36787944117144233;  // 1/e
constexpr double kOuterEdge = 0.5;

double ramp(double u) {  // 0 at u <= 0, 1 at u >= 1, C-infinity
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  const double e0 = std::exp(-1.0 / u);
  const double e1 = std::exp(-1.0 / (1.0 - u));
  return e0 / (e0 + e1);
}

double ramp_deriv(double u) {
  if (u <= 0.0 || u >= 1.0) return 0.0;
  const double e0 = std::exp(-1.0 / u);
  const double e1 = std::exp(-1.0 / (1.0 - u));
  const double d0 = e0 / (u * u);
  const double d1 = e1 / ((1.0 - u) * (1.0 - u));
  const double denom = (e0 + e1) * (e0 + e1);
  return (d0 * e1 + e0 * d1) / denom;
}

}  // namespace

double smooth_bump(double t) {
  const double a = std::abs(t);
  if (a <= kInnerEdge) return 1.0;
  if (a >= kOuterEdge) return 0.0;
  return ramp((kOuterEdge - a) / (kOuterEdge - kInnerEdge));
}

double smooth_bump_deriv(double t) {
  const double a = std::abs(t);
  if (a <= kInnerEdge || a >= kOuterEdge) return 0.0;
  const double scale = 1.0 / (kOuterEdge - kInnerEdge);
  const double d = -scale * ramp_deriv((kOuterEdge - a) / (kOuterEdge - kInnerEdge));
  return t > 0 ? d : -d;
}

CorpusFunction corpus_u_alpha(double alpha) {
  CorpusFunction out{"u_alpha(" + std::to_string(alpha) + ")",
                     [alpha](double x) { return std::abs(x + alpha) - std::abs(alpha); },
                     [alpha](double x) {
                       const double u = x + alpha;
                       return u > 0 ? 1.0 : (u < 0 ? -1.0 : 0.0);
                     },
                     Interval(-2.0, 2.0)};
  return out;
}

CorpusFunction corpus_psi() {
  CorpusFunction out{"psi", {}, {}, Interval(-0.5, 0.5)};
  out.f = [](double t) {
    if (t == 0.0) return 0.0;
    const double r = smooth_bump(t);
    if (r == 0.0) return 0.0;
    return std::abs(t) * r / std::log(std::abs(t));
  };
  out.df = [](double t) {
    if (t == 0.0) return 0.0;  // a.e. value; the limit is 0
    const double a = std::abs(t);
    const double s = t > 0 ? 1.0 : -1.0;
    const double r = smooth_bump(t);
    const double dr = smooth_bump_deriv(t);
    if (r == 0.0 && dr == 0.0) return 0.0;
    const double lg = std::log(a);
    return s * r / lg + a * dr / lg - s * r / (lg * lg);
  };
  return out;
}

CorpusFunction corpus_psi_ab(double alpha, double beta) {
  if (!(beta > 0.0) || !(beta < alpha))
    throw std::invalid_argument("corpus_psi_ab: need 0 < beta < alpha");
  CorpusFunction out{"psi_ab(" + std::to_string(alpha) + "," + std::to_string(beta) + ")",
                     {}, {}, Interval(-0.5, 0.5)};
  out.f = [alpha, beta](double t) {
    if (t == 0.0) return 0.0;
    const double r = smooth_bump(t);
    if (r == 0.0) return 0.0;
    const double a = std::abs(t);
    return std::pow(a, alpha + 1.0) * r * std::sin(std::pow(a, -beta));
  };
  out.df = [alpha, beta](double t) {
    if (t == 0.0) return 0.0;
    const double r = smooth_bump(t);
    const double dr = smooth_bump_deriv(t);
    if (r == 0.0 && dr == 0.0) return 0.0;
    const double a = std::abs(t);
    const double s = t > 0 ? 1.0 : -1.0;
    const double osc = std::pow(a, -beta);
    const double sn = std::sin(osc), cs = std::cos(osc);
    // d/dt |t|^{a+1} rho sin(|t|^-b)
    return s * (alpha + 1.0) * std::pow(a, alpha) * r * sn +
           std::pow(a, alpha + 1.0) * dr * sn -
           s * beta * std::pow(a, alpha - beta) * r * cs;
  };
  return out;
}

std::uint64_t Rng::next_u64() {
  // splitmix64; chosen for cross-platform bit stability of the corpora
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double Rng::uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double a, double b) { return a + (b - a) * uniform(); }

int Rng::uniform_int(int lo, int hi) {
  return lo + int(next_u64() % std::uint64_t(hi - lo + 1));
}

}  // namespace normkit
