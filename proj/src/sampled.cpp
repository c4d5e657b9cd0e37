// SPDX-License-Identifier: Apache-2.0
#include "normkit/sampled.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace normkit {

namespace {

Interval interval_from_grid(const std::vector<double>& xs) {
  if (xs.size() < 2) throw std::invalid_argument("SampledFunction: need n >= 2 samples");
  return Interval(xs.front(), xs.back());
}

}  // namespace

SampledFunction::SampledFunction(std::vector<double> xs_, std::vector<double> ys_)
    : xs(std::move(xs_)), ys(std::move(ys_)), interval(interval_from_grid(xs)) {
  if (xs.size() != ys.size())
    throw std::invalid_argument("SampledFunction: xs/ys length mismatch");
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    if (!(xs[i] < xs[i + 1]))
      throw std::invalid_argument("SampledFunction: xs not strictly increasing at index " +
                                  std::to_string(i + 1));
  for (std::size_t i = 0; i < ys.size(); ++i)
    if (!std::isfinite(ys[i]))
      throw std::invalid_argument("SampledFunction: non-finite value at index " +
                                  std::to_string(i));
}

bool SampledFunction::is_uniform(double rel_tol) const {
  const double h = spacing();
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    if (std::abs((xs[i + 1] - xs[i]) - h) > rel_tol * std::max(1.0, std::abs(h)))
      return false;
  return true;
}

double SampledFunction::value_at(double x) const {
  const double tol = 1e-12 * std::max(1.0, interval.length());
  if (x < interval.lo - tol || x > interval.hi + tol)
    throw DomainError("value_at: abscissa outside sampled interval", x);
  if (x <= xs.front()) return ys.front();
  if (x >= xs.back()) return ys.back();
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  const std::size_t j = std::size_t(it - xs.begin());
  const double t = (x - xs[j - 1]) / (xs[j] - xs[j - 1]);
  return ys[j - 1] + t * (ys[j] - ys[j - 1]);
}

double SampledFunction::sup_abs() const {
  double m = 0.0;
  for (double y : ys) m = std::max(m, std::abs(y));
  return m;
}

StepFunction::StepFunction(std::vector<double> b, std::vector<double> pv,
                           std::vector<double> plat)
    : breakpoints(std::move(b)), point_values(std::move(pv)), plateau_values(std::move(plat)) {
  if (breakpoints.size() < 2)
    throw std::invalid_argument("StepFunction: need at least two breakpoints");
  if (point_values.size() != breakpoints.size() ||
      plateau_values.size() + 1 != breakpoints.size())
    throw std::invalid_argument("StepFunction: field length mismatch");
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    if (!(breakpoints[i] < breakpoints[i + 1]))
      throw std::invalid_argument("StepFunction: breakpoints not strictly increasing");
  auto finite = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double t) { return std::isfinite(t); });
  };
  if (!finite(point_values) || !finite(plateau_values))
    throw std::invalid_argument("StepFunction: one-sided values must be finite");
}

double StepFunction::left_limit(std::size_t i) const {
  if (i == 0 || i >= breakpoints.size())
    throw std::invalid_argument("StepFunction::left_limit: index out of range");
  return plateau_values[i - 1];
}

double StepFunction::right_limit(std::size_t i) const {
  if (i + 1 >= breakpoints.size())
    throw std::invalid_argument("StepFunction::right_limit: index out of range");
  return plateau_values[i];
}

double StepFunction::sup_abs() const {
  double m = 0.0;
  for (double y : point_values) m = std::max(m, std::abs(y));
  for (double y : plateau_values) m = std::max(m, std::abs(y));
  return m;
}

SampledFunction StepFunction::to_sampled() const {
  std::vector<double> xs, ys;
  xs.reserve(2 * breakpoints.size());
  ys.reserve(2 * breakpoints.size());
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    xs.push_back(breakpoints[i]);
    ys.push_back(point_values[i]);
    if (i + 1 < breakpoints.size()) {
      xs.push_back(0.5 * (breakpoints[i] + breakpoints[i + 1]));
      ys.push_back(plateau_values[i]);
    }
  }
  return SampledFunction(std::move(xs), std::move(ys));
}

SampledFunction sample(const std::function<double(double)>& f, Interval interval,
                       std::size_t n) {
  if (n < 2) throw std::invalid_argument("sample: need n >= 2");
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    // endpoints exact, no accumulated drift
    const double t = double(i) / double(n - 1);
    xs[i] = interval.lo + t * (interval.hi - interval.lo);
  }
  xs.front() = interval.lo;
  xs.back() = interval.hi;
  for (std::size_t i = 0; i < n; ++i) {
    ys[i] = f(xs[i]);
    if (!std::isfinite(ys[i]))
      throw DomainError("sample: evaluation produced a non-finite value", xs[i]);
  }
  return SampledFunction(std::move(xs), std::move(ys));
}

SampledFunction cumulative_integral(const SampledFunction& h, double alpha, double t0) {
  if (!h.interval.contains(t0))
    throw std::invalid_argument("cumulative_integral: t0 outside the interval");
  const std::size_t n = h.size();
  std::vector<double> cum(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i)
    cum[i + 1] = cum[i] + 0.5 * (h.ys[i] + h.ys[i + 1]) * (h.xs[i + 1] - h.xs[i]);
  // cum linearly interpolated at t0; fixes g(t0) = alpha exactly at grid nodes
  auto it = std::upper_bound(h.xs.begin(), h.xs.end(), t0);
  double cum_t0;
  if (it == h.xs.begin()) {
    cum_t0 = cum.front();
  } else if (it == h.xs.end()) {
    cum_t0 = cum.back();
  } else {
    const std::size_t j = std::size_t(it - h.xs.begin());
    const double t = (t0 - h.xs[j - 1]) / (h.xs[j] - h.xs[j - 1]);
    cum_t0 = cum[j - 1] + t * (cum[j] - cum[j - 1]);
  }
  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) ys[i] = alpha + cum[i] - cum_t0;
  return SampledFunction(h.xs, std::move(ys));
}

ImageInterval image_interval(const SampledFunction& g) {
  auto [mn, mx] = std::minmax_element(g.ys.begin(), g.ys.end());
  if (*mn < *mx) return ImageInterval{Interval(*mn, *mx), false};
  const double pad = std::max(std::abs(*mn), 1.0) * 16.0 *
                     std::numeric_limits<double>::epsilon();
  return ImageInterval{Interval(*mn - pad, *mx + pad), true};
}

SampledFunction compose_samples(const SampledFunction& f, const SampledFunction& g) {
  const double tol = 1e-12 * f.interval.length();
  double worst = 0.0, worst_x = g.xs.front();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double over = std::max(f.interval.lo - g.ys[i], g.ys[i] - f.interval.hi);
    if (over > worst) {
      worst = over;
      worst_x = g.xs[i];
    }
  }
  if (worst > tol)
    throw DomainError("compose_samples: image of g escapes f's domain by " +
                          std::to_string(worst),
                      worst_x);
  std::vector<double> ys(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double y = std::clamp(g.ys[i], f.interval.lo, f.interval.hi);
    ys[i] = f.value_at(y);
  }
  return SampledFunction(g.xs, std::move(ys));
}

StepFunction normalize(const StepFunction& f) {
  StepFunction out = f;
  const std::size_t m = f.breakpoints.size();
  out.point_values.front() = f.plateau_values.front();
  out.point_values.back() = f.plateau_values.back();
  for (std::size_t i = 1; i + 1 < m; ++i)
    out.point_values[i] = 0.5 * (f.plateau_values[i - 1] + f.plateau_values[i]);
  return out;
}

SampledFunction read_csv(std::istream& in) {
  std::vector<double> xs, ys;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    if (trimmed.empty() || trimmed[0] == '#') continue;
    std::replace(trimmed.begin(), trimmed.end(), ',', ' ');
    std::istringstream ss(trimmed);
    double x, y;
    if (!(ss >> x >> y)) {
      if (xs.empty()) continue;  // header row before any data
      throw std::invalid_argument("csv: cannot parse line " + std::to_string(lineno));
    }
    if (!xs.empty() && !(x > xs.back()))
      throw std::invalid_argument("csv: x not strictly increasing at line " +
                                  std::to_string(lineno));
    xs.push_back(x);
    ys.push_back(y);
  }
  if (xs.size() < 2) throw std::invalid_argument("csv: fewer than two data rows");
  return SampledFunction(std::move(xs), std::move(ys));
}

SampledFunction read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("csv: cannot open " + path);
  return read_csv(in);
}

void write_csv(const SampledFunction& f, std::ostream& out) {
  out << "x,y\n";
  char buf[64];
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", f.xs[i], f.ys[i]);
    out << buf;
  }
}

}  // namespace normkit
