// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "normkit/sampled.hpp"
#include "normkit/types.hpp"

namespace normkit {

/// Equispaced periodic grid: n power-of-two samples on [0, L).  Carrier for
/// the spectral module; frequencies are physical (cycles per unit length),
/// so bin k of a length-L window sits at |xi| = k / L.
struct UniformGrid {
  std::size_t n = 0;
  double length = 1.0;
  std::vector<double> xs;

  static UniformGrid make(std::size_t n, double length = 1.0);
  double spacing() const { return length / double(n); }
};

/// Real signal on a UniformGrid, extended periodically.
struct PeriodicSignal {
  UniformGrid grid;
  std::vector<double> ys;

  PeriodicSignal(UniformGrid g, std::vector<double> y);
  std::size_t size() const { return ys.size(); }
};

PeriodicSignal sample_periodic(const std::function<double(double)>& f,
                               const UniformGrid& grid);

/// Dyadic partition of unity on the frequency grid.  theta is a smooth bump
/// equal to 1 on [1, 2] and supported in [max(1/K, 3/4), min(2K, 11/4)]; the
/// support ratio stays below 4 so windows two levels apart are exactly
/// disjoint.  phi_j(xi) = theta(2^-j xi) / s(xi) with s the full dyadic sum,
/// so the level sum is exactly 1 at every resolvable nonzero frequency;
/// psi = 1 - sum_{j >= 0} phi_j is the low window (it owns the DC bin).
struct PartitionOfUnity {
  double K = 2.0;
  double support_lo = 0.75, support_hi = 2.75;  // theta support in |xi|
  std::size_t n = 0;
  double length = 1.0;
  int j_min = 0;  // lowest level whose annulus reaches a nonzero bin
  int j_max = 0;  // highest level whose annulus starts below Nyquist

  std::vector<double> freqs;              // |xi| per bin 0..n/2
  std::vector<std::vector<double>> phi;   // level j -> window over bins 0..n/2
  std::vector<double> psi;                // low window over bins 0..n/2

  int level_count() const { return j_max - j_min + 1; }
  bool level_in_range(int j) const { return j >= j_min && j <= j_max; }
  const std::vector<double>& phi_level(int j) const { return phi[std::size_t(j - j_min)]; }
};

PartitionOfUnity build_partition(double K, const UniformGrid& grid);

/// Delta_j f: inverse transform of phi_j * fhat.  Real output (windows are
/// even in xi).
PeriodicSignal dyadic_block(const PeriodicSignal& f, const PartitionOfUnity& pou, int j);

/// Low part Q_0 f = psi * fhat (includes the mean).
PeriodicSignal low_block(const PeriodicSignal& f, const PartitionOfUnity& pou);

struct BlockDecomposition {
  PeriodicSignal low;
  std::vector<PeriodicSignal> blocks;  // levels 0..j_max
  double residual_rel_l2 = 0.0;        // || low + sum blocks - f ||_2 / ||f||_2
};

BlockDecomposition decompose(const PeriodicSignal& f, const PartitionOfUnity& pou);

/// Littlewood-Paley Besov norm: l^q over levels of 2^{sj} ||Delta_j f||_p.
/// Homogeneous mode sums all resolvable levels j_min..j_max and never sees
/// the DC bin (grid stand-in for the quotient modulo polynomials);
/// non-homogeneous mode is ||psi part||_p plus the sum over j >= 0.
NormValue lp_besov_norm(const PeriodicSignal& f, const PartitionOfUnity& pou, double s,
                        double p, double q, bool homogeneous);

/// Dilation by 2^m via index decimation onto an n/2^m grid of length L/2^m.
/// Requires f band-limited below n/2^{m+1} (checked; this is the aliasing
/// guard) so the decimated samples represent the same function.
PeriodicSignal decimate(const PeriodicSignal& f, int m);

struct ScalingReport {
  double ratio = 0.0;          // ||f(2^m .)|| / (2^{m(s-1/p)} ||f||)
  double norm_orig = 0.0;
  double norm_dilated = 0.0;
  double lp_ratio = 0.0;       // ||f(2^m .)||_{L^p} / (2^{-m/p} ||f||_{L^p})
  int m = 0;
  double s = 0.0, p = 0.0, q = 0.0;
};

/// Checks the dyadic dilation law lambda^{1/p - s} ||f(lambda .)|| ~ ||f||
/// at lambda = 2^m on the homogeneous norm.
ScalingReport scaling_check(const PeriodicSignal& f, double K, double s, double p,
                            double q, int m);

struct ParaproductSplit {
  PeriodicSignal high_low;   // Delta_k( sum_u Delta_u f * Q_{u-2} g )
  PeriodicSignal low_high;   // symmetric term
  PeriodicSignal diagonal;   // Delta_k( sum_u Delta_u f * Dbar_u g ), |v-u| <= 1
  double sum_residual_rel = 0.0;  // vs Delta_k(f * g), relative L^2
};

/// Decomposition of Delta_k(f g) into high-low, low-high and diagonal
/// interactions.  The three parts classify every block pair exactly once
/// (low part counted as level -1), so their sum reproduces Delta_k(fg) on
/// the grid; the window aggregates Q and Dbar are the ones the support
/// calculus singles out.
ParaproductSplit paraproduct_split(const PeriodicSignal& f, const PeriodicSignal& g,
                                   const PartitionOfUnity& pou, int k);

/// Discrete L^p norm on the periodic grid (rectangle rule, max for p = inf).
double periodic_lp_norm(const PeriodicSignal& f, double p);

}  // namespace normkit
