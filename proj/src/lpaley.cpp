// SPDX-License-Identifier: Apache-2.0
#include "normkit/lpaley.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "normkit/findiff.hpp"

namespace normkit {

namespace {

using cplx = std::complex<double>;

bool power_of_two(std::size_t n) { return n >= 2 && std::has_single_bit(n); }

// iterative radix-2 Cooley-Tukey; grids are power-of-two by construction
void fft_inplace(std::vector<cplx>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * std::numbers::pi / double(len);
    const cplx wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cplx w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const cplx u = a[i + k];
        const cplx v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse)
    for (cplx& x : a) x /= double(n);
}

std::vector<cplx> forward(const std::vector<double>& y) {
  std::vector<cplx> a(y.begin(), y.end());
  fft_inplace(a, false);
  return a;
}

std::vector<double> inverse_real(std::vector<cplx> a) {
  fft_inplace(a, true);
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i].real();
  return out;
}

// multiply the spectrum by an even window given on bins 0..n/2
void apply_window(std::vector<cplx>& spec, const std::vector<double>& w) {
  const std::size_t n = spec.size();
  spec[0] *= w[0];
  for (std::size_t k = 1; k <= n / 2; ++k) {
    spec[k] *= w[k];
    if (k < n / 2) spec[n - k] *= w[k];
  }
}

// smooth transition: 0 at u <= 0, 1 at u >= 1
double smoothstep(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  const double e0 = std::exp(-1.0 / u);
  const double e1 = std::exp(-1.0 / (1.0 - u));
  return e0 / (e0 + e1);
}

}  // namespace

UniformGrid UniformGrid::make(std::size_t n, double length) {
  if (!power_of_two(n)) throw std::invalid_argument("UniformGrid: n must be a power of two");
  if (!(length > 0.0)) throw std::invalid_argument("UniformGrid: need length > 0");
  UniformGrid g;
  g.n = n;
  g.length = length;
  g.xs.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.xs[i] = double(i) * length / double(n);
  return g;
}

PeriodicSignal::PeriodicSignal(UniformGrid g, std::vector<double> y)
    : grid(std::move(g)), ys(std::move(y)) {
  if (ys.size() != grid.n) throw std::invalid_argument("PeriodicSignal: size mismatch");
}

PeriodicSignal sample_periodic(const std::function<double(double)>& f,
                               const UniformGrid& grid) {
  std::vector<double> ys(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) {
    ys[i] = f(grid.xs[i]);
    if (!std::isfinite(ys[i]))
      throw DomainError("sample_periodic: non-finite value", grid.xs[i]);
  }
  return PeriodicSignal(grid, std::move(ys));
}

namespace {

struct ThetaProfile {
  double a, b;  // support [a, b], plateau [1, 2]

  double operator()(double u) const {
    if (u <= a || u >= b) return 0.0;
    if (u < 1.0) return smoothstep((u - a) / (1.0 - a));
    if (u <= 2.0) return 1.0;
    return smoothstep((b - u) / (b - 2.0));
  }
};

// s(xi) = sum over all integer p of theta(2^-p xi); only p with
// 2^-p xi in [a, b] contribute
double dyadic_sum(const ThetaProfile& theta, double xi) {
  const int p_lo = int(std::ceil(std::log2(xi / theta.b) - 1e-12));
  const int p_hi = int(std::floor(std::log2(xi / theta.a) + 1e-12));
  double s = 0.0;
  for (int p = p_lo; p <= p_hi; ++p) s += theta(std::ldexp(xi, -p));
  return s;
}

}  // namespace

PartitionOfUnity build_partition(double K, const UniformGrid& grid) {
  if (!(K > 1.0)) throw std::invalid_argument("build_partition: need K > 1");
  if (grid.n < 64) throw std::invalid_argument("build_partition: need n >= 64");

  PartitionOfUnity pou;
  pou.K = K;
  pou.support_lo = std::max(1.0 / K, 0.75);
  pou.support_hi = std::min(2.0 * K, 2.75);
  pou.n = grid.n;
  pou.length = grid.length;
  const ThetaProfile theta{pou.support_lo, pou.support_hi};

  const std::size_t bins = grid.n / 2 + 1;
  pou.freqs.resize(bins);
  for (std::size_t k = 0; k < bins; ++k) pou.freqs[k] = double(k) / grid.length;
  const double xi_min = pou.freqs[1];
  const double xi_max = pou.freqs[bins - 1];

  // smallest level reaching the first nonzero bin, largest starting below Nyquist
  int j_min = int(std::ceil(std::log2(xi_min / pou.support_hi) - 1e-12));
  while (pou.support_hi * std::ldexp(1.0, j_min) < xi_min * (1.0 - 1e-12)) ++j_min;
  int j_max = int(std::floor(std::log2(xi_max / pou.support_lo) + 1e-12));
  while (pou.support_lo * std::ldexp(1.0, j_max) > xi_max * (1.0 + 1e-12)) --j_max;
  if (j_max - j_min < 2)
    throw std::invalid_argument("build_partition: grid too small to host two dyadic levels");
  pou.j_min = j_min;
  pou.j_max = j_max;

  pou.phi.assign(std::size_t(pou.level_count()), std::vector<double>(bins, 0.0));
  for (std::size_t k = 1; k < bins; ++k) {
    const double xi = pou.freqs[k];
    const double s = dyadic_sum(theta, xi);
    for (int j = j_min; j <= j_max; ++j) {
      const double t = theta(std::ldexp(xi, -j));
      if (t != 0.0) pou.phi[std::size_t(j - j_min)][k] = t / s;
    }
  }
  pou.psi.assign(bins, 0.0);
  pou.psi[0] = 1.0;  // DC belongs to the low window
  for (std::size_t k = 1; k < bins; ++k) {
    double acc = 0.0;
    for (int j = std::max(0, j_min); j <= j_max; ++j)
      acc += pou.phi[std::size_t(j - j_min)][k];
    pou.psi[k] = 1.0 - acc;
  }
  return pou;
}

namespace {

void check_same_grid(const PeriodicSignal& f, const PartitionOfUnity& pou) {
  if (f.grid.n != pou.n || f.grid.length != pou.length)
    throw std::invalid_argument("lpaley: signal and partition grids differ");
}

}  // namespace

PeriodicSignal dyadic_block(const PeriodicSignal& f, const PartitionOfUnity& pou, int j) {
  check_same_grid(f, pou);
  if (!pou.level_in_range(j))
    throw std::invalid_argument("dyadic_block: level out of range");
  auto spec = forward(f.ys);
  apply_window(spec, pou.phi_level(j));
  return PeriodicSignal(f.grid, inverse_real(std::move(spec)));
}

PeriodicSignal low_block(const PeriodicSignal& f, const PartitionOfUnity& pou) {
  check_same_grid(f, pou);
  auto spec = forward(f.ys);
  apply_window(spec, pou.psi);
  return PeriodicSignal(f.grid, inverse_real(std::move(spec)));
}

BlockDecomposition decompose(const PeriodicSignal& f, const PartitionOfUnity& pou) {
  check_same_grid(f, pou);
  BlockDecomposition out{low_block(f, pou), {}, 0.0};
  out.blocks.reserve(std::size_t(std::max(0, pou.j_max + 1)));
  for (int j = 0; j <= pou.j_max; ++j) out.blocks.push_back(dyadic_block(f, pou, j));

  std::vector<double> recon = out.low.ys;
  for (const auto& b : out.blocks)
    for (std::size_t i = 0; i < recon.size(); ++i) recon[i] += b.ys[i];
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < recon.size(); ++i) {
    num += (recon[i] - f.ys[i]) * (recon[i] - f.ys[i]);
    den += f.ys[i] * f.ys[i];
  }
  out.residual_rel_l2 = den > 0 ? std::sqrt(num / den) : std::sqrt(num);
  return out;
}

double periodic_lp_norm(const PeriodicSignal& f, double p) {
  return discrete_lp_norm(f.ys, f.grid.spacing(), p);
}

NormValue lp_besov_norm(const PeriodicSignal& f, const PartitionOfUnity& pou, double s,
                        double p, double q, bool homogeneous) {
  check_same_grid(f, pou);
  NormValue out;
  out.kind = homogeneous ? "besov-lp-homogeneous" : "besov-lp";
  out.grid_size = f.size();
  out.p = p;
  out.q = q;
  out.s = s;
  const int j_lo = homogeneous ? pou.j_min : std::max(0, pou.j_min);
  double acc = 0.0, sup = 0.0;
  for (int j = j_lo; j <= pou.j_max; ++j) {
    const double term =
        std::pow(2.0, s * double(j)) * periodic_lp_norm(dyadic_block(f, pou, j), p);
    if (is_inf(q)) sup = std::max(sup, term);
    else acc += std::pow(term, q);
  }
  out.value = is_inf(q) ? sup : std::pow(acc, 1.0 / q);
  if (!homogeneous) out.value += periodic_lp_norm(low_block(f, pou), p);
  out.quadrature_nodes = std::size_t(pou.j_max - j_lo + 1);
  return out;
}

PeriodicSignal decimate(const PeriodicSignal& f, int m) {
  if (m < 0) throw std::invalid_argument("decimate: need m >= 0");
  if (m == 0) return f;
  const std::size_t factor = std::size_t(1) << m;
  if (f.grid.n / factor < 2 || f.grid.n % factor != 0)
    throw std::invalid_argument("decimate: grid too small for 2^m decimation");

  // aliasing guard: spectral energy at or above the new Nyquist must vanish
  const auto spec = forward(f.ys);
  const std::size_t new_nyq = f.grid.n / (2 * factor);
  double high = 0.0, total = 0.0;
  for (std::size_t k = 1; k <= f.grid.n / 2; ++k) {
    const double e = std::norm(spec[k]);
    total += e;
    if (k >= new_nyq) high += e;
  }
  if (total > 0.0 && high > 1e-20 * total)
    throw DomainError("decimate: input not band-limited below n / 2^{m+1}");

  UniformGrid g = UniformGrid::make(f.grid.n / factor, f.grid.length / double(factor));
  std::vector<double> ys(g.n);
  for (std::size_t i = 0; i < g.n; ++i) ys[i] = f.ys[i * factor];
  return PeriodicSignal(std::move(g), std::move(ys));
}

ScalingReport scaling_check(const PeriodicSignal& f, double K, double s, double p,
                            double q, int m) {
  ScalingReport rep;
  rep.m = m;
  rep.s = s;
  rep.p = p;
  rep.q = q;
  const PartitionOfUnity pou_f = build_partition(K, f.grid);
  rep.norm_orig = lp_besov_norm(f, pou_f, s, p, q, /*homogeneous=*/true).value;
  const PeriodicSignal g = decimate(f, m);
  const PartitionOfUnity pou_g = build_partition(K, g.grid);
  rep.norm_dilated = lp_besov_norm(g, pou_g, s, p, q, /*homogeneous=*/true).value;
  const double expected = std::pow(2.0, double(m) * (s - 1.0 / p));
  rep.ratio = rep.norm_dilated / (expected * rep.norm_orig);
  rep.lp_ratio = periodic_lp_norm(g, p) /
                 (std::pow(2.0, -double(m) / p) * periodic_lp_norm(f, p));
  return rep;
}

ParaproductSplit paraproduct_split(const PeriodicSignal& f, const PeriodicSignal& g,
                                   const PartitionOfUnity& pou, int k) {
  check_same_grid(f, pou);
  check_same_grid(g, pou);
  if (k - 2 < pou.j_min || k + 4 > pou.j_max)
    throw std::invalid_argument(
        "paraproduct_split: shifted windows [k-2, k+4] exceed the resolvable levels");

  const std::size_t n = f.size();
  // components indexed -1 (psi part, owns DC) and 0..j_max; their sum is the
  // signal itself up to rounding, which is what makes the three-term identity
  // exact on the grid
  auto components = [&](const PeriodicSignal& u) {
    std::vector<std::vector<double>> comp;
    comp.push_back(low_block(u, pou).ys);
    for (int j = 0; j <= pou.j_max; ++j) comp.push_back(dyadic_block(u, pou, j).ys);
    return comp;
  };
  const auto cf = components(f);
  const auto cg = components(g);
  const std::size_t levels = cf.size();  // index u corresponds to level u - 1

  // cumulative Q up to level j inclusive: prefix sums of the components
  auto prefixes = [&](const std::vector<std::vector<double>>& c) {
    std::vector<std::vector<double>> pre(c.size() + 1, std::vector<double>(n, 0.0));
    for (std::size_t u = 0; u < c.size(); ++u)
      for (std::size_t i = 0; i < n; ++i) pre[u + 1][i] = pre[u][i] + c[u][i];
    return pre;
  };
  const auto pf = prefixes(cf);
  const auto pg = prefixes(cg);

  std::vector<double> hl(n, 0.0), lh(n, 0.0), dg(n, 0.0);
  for (std::size_t u = 0; u < levels; ++u) {
    for (std::size_t i = 0; i < n; ++i) {
      // high-low: g strictly more than one level below f
      if (u >= 2) hl[i] += cf[u][i] * pg[u - 1][i];
      if (u >= 2) lh[i] += cg[u][i] * pf[u - 1][i];
      // diagonal: |level(f) - level(g)| <= 1
      const std::size_t v_lo = (u == 0) ? 0 : u - 1;
      const std::size_t v_hi = std::min(levels - 1, u + 1);
      double bar = 0.0;
      for (std::size_t v = v_lo; v <= v_hi; ++v) bar += cg[v][i];
      dg[i] += cf[u][i] * bar;
    }
  }

  ParaproductSplit out{
      dyadic_block(PeriodicSignal(f.grid, std::move(hl)), pou, k),
      dyadic_block(PeriodicSignal(f.grid, std::move(lh)), pou, k),
      dyadic_block(PeriodicSignal(f.grid, std::move(dg)), pou, k),
      0.0};

  std::vector<double> prod(n);
  for (std::size_t i = 0; i < n; ++i) prod[i] = f.ys[i] * g.ys[i];
  const PeriodicSignal target = dyadic_block(PeriodicSignal(f.grid, std::move(prod)), pou, k);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double sum = out.high_low.ys[i] + out.low_high.ys[i] + out.diagonal.ys[i];
    num += (sum - target.ys[i]) * (sum - target.ys[i]);
    den += target.ys[i] * target.ys[i];
  }
  out.sum_residual_rel = den > 0 ? std::sqrt(num / den) : std::sqrt(num);
  return out;
}

}  // namespace normkit
