// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "normkit/types.hpp"

namespace normkit {

/// A real function known through its values on a strictly increasing finite
/// grid; the universal representation everything else consumes.  Between
/// nodes the function is read by piecewise-linear interpolation, which keeps
/// monotonicity and boundedness and makes p-variation consistent between a
/// function and its resamplings.
struct SampledFunction {
  std::vector<double> xs;
  std::vector<double> ys;
  Interval interval;

  SampledFunction(std::vector<double> xs_, std::vector<double> ys_);

  std::size_t size() const { return xs.size(); }

  /// Grid spacing, valid only for uniform grids.
  double spacing() const { return (interval.hi - interval.lo) / double(xs.size() - 1); }
  bool is_uniform(double rel_tol = 1e-9) const;

  /// Piecewise-linear interpolation; clamps to the boundary values outside
  /// [lo, hi] by less than interpolation tolerance, errors otherwise.
  double value_at(double x) const;

  double sup_abs() const;
};

struct ImageInterval {
  Interval interval;
  bool degenerate_constant = false;  // widened by epsilon padding when min == max
};

/// Regulated step function: piecewise constant with one-sided limits at every
/// breakpoint (discontinuities of the first kind only).  Samples cannot encode
/// one-sided limits, hence the dedicated type.
struct StepFunction {
  std::vector<double> breakpoints;     // strictly increasing, size m >= 2
  std::vector<double> point_values;    // f(b_i), size m
  std::vector<double> plateau_values;  // f on (b_i, b_{i+1}), size m - 1

  StepFunction(std::vector<double> b, std::vector<double> pv, std::vector<double> plat);

  std::size_t breakpoint_count() const { return breakpoints.size(); }
  double left_limit(std::size_t i) const;   // i >= 1
  double right_limit(std::size_t i) const;  // i <= m - 2
  double sup_abs() const;

  /// Sampling that witnesses every jump: breakpoints plus plateau midpoints.
  SampledFunction to_sampled() const;
};

SampledFunction sample(const std::function<double(double)>& f, Interval interval,
                       std::size_t n);

/// g(x) = alpha + int_{t0}^x h, trapezoid rule on h's grid, g on the same grid.
SampledFunction cumulative_integral(const SampledFunction& h, double alpha, double t0);

ImageInterval image_interval(const SampledFunction& g);

/// (f o g) on g's grid; requires image_interval(g) inside f's domain within
/// 1e-12 * |J| and reports the worst offender otherwise.
SampledFunction compose_samples(const SampledFunction& f, const SampledFunction& g);

/// Midpoint value at every interior breakpoint, interior limit at the ends.
StepFunction normalize(const StepFunction& f);

/// Two-column x,y ingestion; header line optional; strictly increasing x
/// required, violations reported with the line number.
SampledFunction read_csv(std::istream& in);
SampledFunction read_csv_file(const std::string& path);
void write_csv(const SampledFunction& f, std::ostream& out);

}  // namespace normkit
