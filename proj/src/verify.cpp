// SPDX-License-Identifier: Apache-2.0
#include "normkit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <stdexcept>

#include "normkit/findiff.hpp"
#include "normkit/pvar.hpp"

namespace normkit {

namespace {

constexpr double kSlack = 1e-9;

SampledFunction pointwise_product(const SampledFunction& a, const SampledFunction& b) {
  if (a.xs != b.xs) throw std::invalid_argument("pointwise product: grid mismatch");
  std::vector<double> ys(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) ys[i] = a.ys[i] * b.ys[i];
  return SampledFunction(a.xs, std::move(ys));
}

}  // namespace

std::string digest_values(std::span<const double> values) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (double v : values) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    for (int i = 0; i < 8; ++i) {
      h ^= (bits >> (8 * i)) & 0xffu;
      h *= 0x100000001b3ull;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

InequalityReport make_report(std::string theorem, double lhs, double rhs,
                             std::string digest, std::uint64_t seed, double slack) {
  InequalityReport rep;
  rep.theorem = std::move(theorem);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.ratio = rhs != 0.0 ? lhs / rhs : (lhs == 0.0 ? 0.0 : kInf);
  rep.slack = slack;
  rep.holds = lhs <= rhs + slack;
  rep.inputs_digest = std::move(digest);
  rep.seed = seed;
  return rep;
}

const char* family_name(FamilyId id) {
  switch (id) {
    case FamilyId::SmoothPoly: return "smooth-poly";
    case FamilyId::Trig: return "trig";
    case FamilyId::AbsKink: return "abs-kink";
    case FamilyId::Step: return "step";
    case FamilyId::CorpusPsi: return "corpus-psi";
    case FamilyId::CorpusUAlpha: return "corpus-u-alpha";
    case FamilyId::CorpusPsiAB: return "corpus-psi-ab";
  }
  return "?";
}

std::optional<FamilyId> family_from_name(const std::string& name) {
  for (FamilyId id : {FamilyId::SmoothPoly, FamilyId::Trig, FamilyId::AbsKink,
                      FamilyId::Step, FamilyId::CorpusPsi, FamilyId::CorpusUAlpha,
                      FamilyId::CorpusPsiAB})
    if (name == family_name(id)) return id;
  return std::nullopt;
}

GeneratedFunction make_family_function(FamilyId id, std::uint64_t seed) {
  Rng rng(seed * 0x9e3779b97f4a7c15ull + 0x714276321855ull + std::uint64_t(id));
  GeneratedFunction out;
  out.name = family_name(id);
  out.has_derivative = true;
  switch (id) {
    case FamilyId::SmoothPoly: {
      const int deg = rng.uniform_int(2, 4);
      std::vector<double> c(static_cast<std::size_t>(deg) + 1, 0.0);
      for (double& ci : c) ci = rng.uniform(-1.0, 1.0);
      out.f = [c](double x) {
        double acc = 0.0;
        for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
        return acc;
      };
      out.df = [c](double x) {
        double acc = 0.0;
        for (std::size_t k = c.size(); k-- > 1;) acc = acc * x + double(k) * c[k];
        return acc;
      };
      return out;
    }
    case FamilyId::Trig: {
      const double a = rng.uniform(-1.0, 1.0), b = rng.uniform(-1.0, 1.0);
      const double k = double(rng.uniform_int(1, 3)), m = double(rng.uniform_int(1, 3));
      const double phase = rng.uniform(0.0, 6.283185307179586);
      constexpr double tau = 6.283185307179586;
      out.f = [=](double x) {
        return a * std::sin(tau * k * x + phase) + b * std::cos(tau * m * x);
      };
      out.df = [=](double x) {
        return a * tau * k * std::cos(tau * k * x + phase) -
               b * tau * m * std::sin(tau * m * x);
      };
      return out;
    }
    case FamilyId::AbsKink: {
      const int terms = rng.uniform_int(1, 3);
      std::vector<double> c(static_cast<std::size_t>(terms), 0.0);
      std::vector<double> a(static_cast<std::size_t>(terms), 0.0);
      for (int i = 0; i < terms; ++i) {
        c[std::size_t(i)] = rng.uniform(-1.0, 1.0);
        a[std::size_t(i)] = rng.uniform(-0.9, 0.9);
      }
      const double lin = rng.uniform(-0.5, 0.5);
      out.f = [=](double x) {
        double acc = lin * x;
        for (std::size_t i = 0; i < c.size(); ++i) acc += c[i] * std::abs(x - a[i]);
        return acc;
      };
      out.df = [=](double x) {
        double acc = lin;
        for (std::size_t i = 0; i < c.size(); ++i) {
          const double u = x - a[i];
          acc += c[i] * (u > 0 ? 1.0 : (u < 0 ? -1.0 : 0.0));
        }
        return acc;
      };
      return out;
    }
    case FamilyId::Step: {
      const int jumps = rng.uniform_int(3, 10);
      std::vector<double> thresholds(static_cast<std::size_t>(jumps), 0.0);
      std::vector<double> values(static_cast<std::size_t>(jumps) + 1, 0.0);
      for (double& t : thresholds) t = rng.uniform(-0.95, 0.95);
      std::sort(thresholds.begin(), thresholds.end());
      for (double& v : values) v = rng.uniform(-1.0, 1.0);
      out.f = [=](double x) {
        std::size_t idx = 0;
        while (idx < thresholds.size() && x >= thresholds[idx]) ++idx;
        return values[idx];
      };
      out.has_derivative = false;
      return out;
    }
    case FamilyId::CorpusPsi: {
      CorpusFunction c = corpus_psi();
      out.name = c.name;
      out.f = c.f;
      out.df = c.df;
      return out;
    }
    case FamilyId::CorpusUAlpha: {
      CorpusFunction c = corpus_u_alpha(rng.uniform(-1.5, 1.5));
      out.name = c.name;
      out.f = c.f;
      out.df = c.df;
      return out;
    }
    case FamilyId::CorpusPsiAB: {
      // supercritical members only: alpha/beta - 1 >= 2, finite for every p >= 1
      const double alpha = rng.uniform(1.5, 2.5);
      const double beta = rng.uniform(0.2, alpha / 3.0);
      CorpusFunction c = corpus_psi_ab(alpha, beta);
      out.name = c.name;
      out.f = c.f;
      out.df = c.df;
      return out;
    }
  }
  throw std::logic_error("make_family_function: unreachable");
}

SampledFunction make_family_sample(FamilyId id, std::uint64_t seed, Interval interval,
                                   std::size_t n) {
  // step thresholds and kink points are random reals, so they land between
  // grid nodes on their own
  return sample(make_family_function(id, seed).f, interval, n);
}

SampledFunction make_family_sample(const FunctionFamily& family, Interval interval) {
  return make_family_sample(family.id, family.seed, interval, family.size);
}

Expr make_smooth_chain_expr(Rng& rng) {
  const Expr x = Expr::variable();
  switch (rng.uniform_int(0, 4)) {
    case 0: {  // affine
      return Expr::constant(rng.uniform(-0.8, 0.8)) * x +
             Expr::constant(rng.uniform(-0.5, 0.5));
    }
    case 1: {  // cubic with tamed coefficients
      return Expr::constant(rng.uniform(-0.8, 0.8)) * x +
             Expr::constant(rng.uniform(-0.3, 0.3) / 3.0) * Expr::pow(x, 2.0) +
             Expr::constant(rng.uniform(-0.3, 0.3) / 9.0) * Expr::pow(x, 3.0);
    }
    case 2: {
      return Expr::constant(rng.uniform(-2.5, 2.5)) *
             Expr::sin(Expr::constant(rng.uniform(0.3, 1.2)) * x +
                       Expr::constant(rng.uniform(-3.0, 3.0)));
    }
    case 3: {
      return Expr::constant(rng.uniform(-2.5, 2.5)) *
             Expr::cos(Expr::constant(rng.uniform(0.3, 1.2)) * x);
    }
    default: {  // exp scaled to stay within [-3, 3] on [-3, 3]
      const double a = rng.uniform(0.3, 1.2);
      return Expr::constant(a) * Expr::exp(x * Expr::constant(1.0 / 3.0)) -
             Expr::constant(a);
    }
  }
}

Expr make_kink_expr(Rng& rng) {
  if (rng.uniform() < 0.5) {
    const Expr x = Expr::variable();
    return Expr::constant(rng.uniform(-1.0, 1.0)) *
               Expr::abs(x - Expr::constant(rng.uniform(-0.9, 0.9))) +
           Expr::constant(rng.uniform(-0.5, 0.5)) * x;
  }
  return make_smooth_chain_expr(rng);
}

InequalityReport check_banach_algebra(const SampledFunction& f, const SampledFunction& g,
                                      double p, double alpha, std::uint64_t seed) {
  const SampledFunction fg = pointwise_product(f, g);
  const double lhs = vp_norm(fg, p, alpha);
  const double rhs = vp_norm(f, p, alpha) * vp_norm(g, p, alpha);
  std::vector<double> dig(f.ys);
  dig.insert(dig.end(), g.ys.begin(), g.ys.end());
  dig.push_back(p);
  dig.push_back(alpha);
  return make_report(alpha == 0.0 ? "banach-algebra" : "banach-algebra-alpha", lhs, rhs,
                     digest_values(dig), seed);
}

std::pair<InequalityReport, InequalityReport> check_basic_inequality(
    const SampledFunction& f, const SampledFunction& h, double p, double alpha0,
    double t0, std::uint64_t seed) {
  const SampledFunction g = cumulative_integral(h, alpha0, t0);
  const SampledFunction fog = compose_samples(f, g);
  const SampledFunction product = pointwise_product(fog, h);

  const double nu_f = pvar_dp(f, p).value;
  const double nu_h = pvar_dp(h, p).value;
  const double sup_f = f.sup_abs();
  const double sup_h = h.sup_abs();
  const double root2p = std::pow(2.0, 1.0 / p);

  std::vector<double> dig(f.ys);
  dig.insert(dig.end(), h.ys.begin(), h.ys.end());
  dig.push_back(p);
  dig.push_back(alpha0);
  dig.push_back(t0);
  const std::string digest = digest_values(dig);

  const double lhs_a = pvar_dp(product, p).value;
  const double rhs_a = nu_f * (sup_h + root2p * nu_h) + nu_h * sup_f;
  InequalityReport a = make_report("basic-inequality-a", lhs_a, rhs_a, digest, seed);

  const double lhs_b = product.sup_abs() + lhs_a;
  const double rhs_b = root2p * (sup_f + nu_f) * (sup_h + nu_h);
  InequalityReport b = make_report("basic-inequality-b", lhs_b, rhs_b, digest, seed);
  return {std::move(a), std::move(b)};
}

InequalityReport check_composition_bvp1(const Expr& f, const Expr& g, double p,
                                        Interval window, std::size_t n,
                                        std::uint64_t seed) {
  const Expr df = f.derivative();
  const Expr dg = g.derivative();
  const SampledFunction g_sampled = sample(g, window, n);
  const Interval image = image_interval(g_sampled).interval;
  const double y0 = g(window.lo);

  // lhs: derivative of f o g through the chain rule, anchored at the window's
  // left endpoint
  const SampledFunction chain = sample(
      [&](double x) { return df(g(x)) * dg(x); }, window, n);
  const double lhs = std::abs(f(y0)) + vp_norm(chain, p);

  // rhs: f anchored at g(x0), a point of its own domain g(I)
  const double norm_f = std::abs(f(y0)) + vp_norm(sample(df, image, n), p);
  const double norm_g = std::abs(g(window.lo)) + vp_norm(sample(dg, window, n), p);
  const double rhs = norm_f * (1.0 + std::pow(2.0, 1.0 / p) * norm_g);

  const std::vector<double> dig{p, window.lo, window.hi, double(n), y0};
  InequalityReport rep =
      make_report("composition-bvp1", lhs, rhs, digest_values(dig), seed);
  rep.note = "f:" + f.str() + " g:" + g.str();
  return rep;
}

NfoldReport check_nfold(std::span<const Expr> gs, const Expr* f, double p,
                        Interval window, std::size_t n, std::uint64_t seed) {
  if (gs.size() < 2) throw std::invalid_argument("check_nfold: need n >= 2 functions");
  const std::size_t count = gs.size();
  NfoldReport rep;
  rep.prefactor_i = std::pow(2.0, double(count - 1) / p);
  rep.prefactor_ii = std::pow(2.0, double(count) / p);

  // tail compositions g_{k+1} o ... o g_n and their image intervals
  std::vector<Interval> tail_images;
  tail_images.reserve(count - 1);
  for (std::size_t k = 0; k + 1 < count; ++k) {
    Expr tail = gs[k + 1];
    for (std::size_t j = k + 2; j < count; ++j) tail = Expr::compose(std::move(tail), gs[j]);
    const ImageInterval img = image_interval(sample(tail, window, n));
    if (img.degenerate_constant) rep.degenerate_tail = true;
    tail_images.push_back(img.interval);
  }

  // ||g_n'||_{V_p(I)} then ||g_k'||_{V_p(tail_k(I))} for k = 1..n-1
  rep.factor_norms.push_back(vp_norm(sample(gs[count - 1].derivative(), window, n), p));
  double rhs_product = rep.factor_norms.back();
  for (std::size_t k = 0; k + 1 < count; ++k) {
    const double nk = vp_norm(sample(gs[k].derivative(), tail_images[k], n), p);
    rep.factor_norms.push_back(nk);
    rhs_product *= nk;
  }

  const ChainProduct chain = chain_derivative(gs);
  const SampledFunction chain_sampled =
      sample([&](double x) { return chain(x); }, window, n);

  std::vector<double> dig{p, window.lo, window.hi, double(count), double(n)};
  const std::string digest = digest_values(dig);

  const double lhs_i = vp_norm(chain_sampled, p);
  rep.side_i = make_report("nfold-i", lhs_i, rep.prefactor_i * rhs_product, digest, seed);
  if (rep.degenerate_tail) rep.side_i.note = "degenerate-tail";

  if (f != nullptr) {
    const Expr full = fold_compose(gs);
    const Interval full_image = image_interval(sample(full, window, n)).interval;
    const SampledFunction fog_h = sample(
        [&](double x) { return (*f)(full(x)) * chain(x); }, window, n);
    const double lhs_ii = vp_norm(fog_h, p);
    const double norm_f = vp_norm(sample(*f, full_image, n), p);
    rep.side_ii = make_report("nfold-ii", lhs_ii,
                              rep.prefactor_ii * norm_f * rhs_product, digest, seed);
    if (rep.degenerate_tail) rep.side_ii->note = "degenerate-tail";
  }
  return rep;
}

NormPropertyEstimate check_norm_property(const GeneratedFunction& f, FamilyId family,
                                         NormSelector norm, int trials, double p,
                                         Interval window, std::size_t n,
                                         std::uint64_t seed) {
  NormPropertyEstimate est;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = seed + std::uint64_t(t);
    const GeneratedFunction g = make_family_function(family, trial_seed);
    double num = 0.0, den = 0.0;
    if (norm == NormSelector::Vp) {
      const SampledFunction gs = make_family_sample(family, trial_seed, window, n);
      std::vector<double> ys(gs.size());
      for (std::size_t i = 0; i < gs.size(); ++i) ys[i] = f.f(gs.ys[i]);
      num = vp_norm(SampledFunction(gs.xs, std::move(ys)), p);
      den = 1.0 + vp_norm(gs, p);
    } else {
      if (!f.has_derivative || !g.has_derivative)
        throw std::invalid_argument("check_norm_property: BVp1 needs derivatives");
      const SampledFunction comp_d = sample(
          [&](double x) { return f.df(g.f(x)) * g.df(x); }, window, n);
      num = std::abs(f.f(g.f(window.lo))) + vp_norm(comp_d, p);
      const SampledFunction gd = sample(g.df, window, n);
      den = 1.0 + std::abs(g.f(window.lo)) + vp_norm(gd, p);
    }
    const double ratio = num / den;
    est.per_trial.push_back(ratio);
    if (ratio > est.c) {
      est.c = ratio;
      est.argmax_digest = digest_values(std::vector<double>{double(trial_seed), ratio});
    }
  }
  return est;
}

namespace {

// f multiplied by a smooth cutoff supported exactly in `support`
GeneratedFunction cut_to_support(const GeneratedFunction& g, Interval support) {
  const double center = 0.5 * (support.lo + support.hi);
  const double width = support.length();
  GeneratedFunction out = g;
  out.name = g.name + "*bump";
  out.f = [g, center, width](double t) {
    const double u = (t - center) / width;
    return (u <= -0.5 || u >= 0.5) ? 0.0 : g.f(t) * smooth_bump(u);
  };
  out.df = [g, center, width](double t) {
    const double u = (t - center) / width;
    if (u <= -0.5 || u >= 0.5) return 0.0;
    return g.df(t) * smooth_bump(u) + g.f(t) * smooth_bump_deriv(u) / width;
  };
  return out;
}

double mult_support_ratio(const GeneratedFunction& f, const GeneratedFunction& g_cut,
                          double p, Interval window, std::size_t n) {
  auto bvp1_of = [&](const std::function<double(double)>& fn,
                     const std::function<double(double)>& dfn) {
    const SampledFunction d = sample(dfn, window, n);
    return std::abs(fn(window.lo)) + vp_norm(d, p);
  };
  const double norm_f = bvp1_of(f.f, f.df);
  const double norm_g = bvp1_of(g_cut.f, g_cut.df);
  const double lhs = bvp1_of(
      [&](double t) { return f.f(t) * g_cut.f(t); },
      [&](double t) { return f.df(t) * g_cut.f(t) + f.f(t) * g_cut.df(t); });
  return lhs / (norm_f * norm_g);
}

}  // namespace

double mult_support_calibrated_constant(double p) {
  // frozen calibration sweep; the constant exists by the theorem, its value
  // does not, so it is pinned empirically once and reused
  static std::map<double, double> cache;
  const auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  const Interval window(-2.0, 2.0);
  const Interval support(-1.0, 1.0);
  double c = 0.0;
  const FamilyId fams[] = {FamilyId::SmoothPoly, FamilyId::Trig, FamilyId::AbsKink};
  for (std::uint64_t s = 1000; s < 1300; ++s) {
    const GeneratedFunction f = make_family_function(fams[s % 3], s);
    const GeneratedFunction g = make_family_function(fams[(s + 1) % 3], s ^ 0xabcdu);
    c = std::max(c, mult_support_ratio(f, cut_to_support(g, support), p, window, 513));
  }
  cache[p] = c;
  return c;
}

InequalityReport check_mult_support(const GeneratedFunction& f, const GeneratedFunction& g,
                                    double p, Interval window, Interval support,
                                    std::size_t n, std::uint64_t seed) {
  if (!(window.lo < support.lo) || !(support.hi < window.hi))
    throw std::invalid_argument("check_mult_support: support must sit inside the window");
  if (!f.has_derivative || !g.has_derivative)
    throw std::invalid_argument("check_mult_support: derivatives required");
  const GeneratedFunction g_cut = cut_to_support(g, support);
  const double c = mult_support_calibrated_constant(p);

  auto bvp1_of = [&](const std::function<double(double)>& fn,
                     const std::function<double(double)>& dfn) {
    return std::abs(fn(window.lo)) + vp_norm(sample(dfn, window, n), p);
  };
  const double norm_f = bvp1_of(f.f, f.df);
  const double norm_g = bvp1_of(g_cut.f, g_cut.df);
  const double lhs = bvp1_of(
      [&](double t) { return f.f(t) * g_cut.f(t); },
      [&](double t) { return f.df(t) * g_cut.f(t) + f.f(t) * g_cut.df(t); });

  const std::vector<double> dig{p, window.lo, window.hi, support.lo, support.hi,
                                double(n), double(seed)};
  InequalityReport rep = make_report("mult-support", lhs, c * norm_f * norm_g,
                                     digest_values(dig), seed);
  rep.note = "calibrated c = " + std::to_string(c);
  return rep;
}

SobolevChainReport check_sobolev_chain(const Expr& G, const Expr& u, double p,
                                       Interval window, std::size_t n,
                                       double residual_tol, std::uint64_t seed) {
  SobolevChainReport rep;
  rep.g_at_zero = G(0.0);
  if (std::abs(rep.g_at_zero) > 1e-12)
    throw std::invalid_argument("check_sobolev_chain: G(0) must vanish");
  const Expr dG = G.derivative();
  const Expr du = u.derivative();

  const SampledFunction us = sample(u, window, n);
  const SampledFunction Gu = sample([&](double x) { return G(u(x)); }, window, n);
  const SampledFunction chain = sample([&](double x) { return dG(u(x)) * du(x); }, window, n);

  // central grid derivative of G o u on the interior against the chain rule
  const double h = us.spacing();
  std::vector<double> diff(n - 2);
  for (std::size_t i = 1; i + 1 < n; ++i)
    diff[i - 1] = (Gu.ys[i + 1] - Gu.ys[i - 1]) / (2.0 * h) - chain.ys[i];
  rep.residual = discrete_lp_norm(diff, h, p);
  rep.residual_ok = rep.residual <= residual_tol;

  // sup |G'| over the hull of u's range and the origin: the L^p part of the
  // bound rides on the secant |G(y) - G(0)| <= sup |G'| |y|, whose mean-value
  // point can sit anywhere between 0 and y
  const Interval urange = image_interval(us).interval;
  const double ylo = std::min(0.0, urange.lo), yhi = std::max(0.0, urange.hi);
  double supdG = 0.0;
  const std::size_t fine = 4 * n;
  for (std::size_t i = 0; i <= fine; ++i) {
    const double y = ylo + (yhi - ylo) * double(i) / double(fine);
    supdG = std::max(supdG, std::abs(dG(y)));
  }
  const std::vector<double> dig{p, window.lo, window.hi, double(n)};
  rep.norm_bound = make_report("sobolev-chain-norm", sobolev_fd_norm(Gu, p),
                               supdG * sobolev_fd_norm(us, p), digest_values(dig), seed);
  rep.norm_bound.note = "G:" + G.str() + " u:" + u.str();
  return rep;
}

const char* classification_name(Classification c) {
  switch (c) {
    case Classification::Convergent: return "CONVERGENT";
    case Classification::Divergent: return "DIVERGENT";
    case Classification::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

Example4Report scan_example4(double alpha, double beta, double p, int max_level) {
  if (!(beta > 0.0) || !(beta < alpha))
    throw std::invalid_argument("scan_example4: need 0 < beta < alpha");
  if (max_level < 9) throw std::invalid_argument("scan_example4: need max_level >= 9");
  Example4Report rep;
  rep.alpha = alpha;
  rep.beta = beta;
  rep.p = p;
  const CorpusFunction psi = corpus_psi_ab(alpha, beta);

  for (int level = 8; level <= max_level; ++level) {
    const std::size_t n = std::size_t(1) << level;
    // midpoint grid on [-1/2, 1/2]; never touches t = 0
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = -0.5 + (double(i) + 0.5) / double(n);
      ys[i] = psi.df(xs[i]);
    }
    const SampledFunction d(std::move(xs), std::move(ys));
    const double nu = pvar_dp_pruned(d, p).value;
    rep.grid_sizes.push_back(n);
    rep.values.push_back(nu);
    rep.sum_values.push_back(std::pow(nu, p));
  }

  const std::size_t m = rep.sum_values.size();
  const double last = rep.sum_values[m - 1], prev = rep.sum_values[m - 2];
  bool grows_everywhere = true;
  for (std::size_t i = 1; i < m; ++i)
    if (rep.sum_values[i] <= rep.sum_values[i - 1]) grows_everywhere = false;
  if (prev > 0.0 && std::abs(last / prev - 1.0) < 0.05)
    rep.cls = Classification::Convergent;
  else if (grows_everywhere && last >= 1.2 * rep.sum_values.front())
    rep.cls = Classification::Divergent;
  else
    rep.cls = Classification::Inconclusive;

  rep.expected_convergent = (1.0 / p) < (alpha / beta - 1.0);
  rep.matches_criterion =
      (rep.cls == Classification::Convergent && rep.expected_convergent) ||
      (rep.cls == Classification::Divergent && !rep.expected_convergent);
  return rep;
}

}  // namespace normkit
