// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace normkit {

constexpr double kInf = std::numeric_limits<double>::infinity();

inline bool is_inf(double p) { return std::isinf(p); }

/// Numeric failure while evaluating or transforming a function
/// (log of a nonpositive number, image escaping a domain, ...).
/// Carries the offending abscissa when one exists.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
  DomainError(const std::string& msg, double where)
      : std::runtime_error(msg + " (at x = " + std::to_string(where) + ")"),
        where_(where) {}
  double where() const { return where_; }

 private:
  double where_ = std::numeric_limits<double>::quiet_NaN();
};

/// Closed interval [lo, hi] with lo < hi; the degenerate case is rejected.
struct Interval {
  double lo;
  double hi;

  Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
      throw std::invalid_argument("Interval: need finite lo < hi, got [" +
                                  std::to_string(lo_) + ", " +
                                  std::to_string(hi_) + "]");
  }

  double length() const { return hi - lo; }
  bool contains(double x, double tol = 0.0) const {
    return x >= lo - tol && x <= hi + tol;
  }
};

/// A computed norm together with the discretization it was computed on.
/// Every value in this library is grid-dependent, so the metadata is part
/// of the result, not an afterthought.
struct NormValue {
  double value = 0.0;
  std::string kind;
  std::size_t grid_size = 0;
  std::size_t quadrature_nodes = 0;  // h- or t-grid resolution where applicable
  double p = 0.0, q = 0.0, s = 0.0, alpha = 0.0;
  int order = 0;  // difference order actually applied
};

}  // namespace normkit
