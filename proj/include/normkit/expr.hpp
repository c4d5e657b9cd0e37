// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "normkit/sampled.hpp"
#include "normkit/types.hpp"

namespace normkit {

/// Immutable AST of a real function of one variable.  Nodes are shared,
/// trees are never mutated after construction, so copies are cheap and
/// concurrent evaluation is safe.
///
/// Supported forms: constants, `x`, unary neg/abs/sign/sin/cos/exp/log/sqrt,
/// binary + - * /, `u ^ c` with a constant exponent, `abspow(u, mu)` = |u|^mu,
/// and an explicit composition marker.  `^` is restricted to constant
/// exponents so differentiation stays total; |t|^mu forms go through abspow,
/// whose a.e. derivative is mu * sign(t) * |t|^(mu-1).
class Expr {
 public:
  enum class Kind {
    Constant, Variable,
    Neg, Abs, Sign, Sin, Cos, Exp, Log, Sqrt,
    Add, Sub, Mul, Div, Pow, AbsPow,
    Compose,
  };

  struct Node {
    Kind kind;
    double value = 0.0;  // Constant payload; exponent for Pow/AbsPow
    std::shared_ptr<const Node> a, b;
  };

  Expr() : Expr(constant(0.0)) {}

  static Expr constant(double c);
  static Expr variable();
  static Expr neg(Expr u);
  static Expr abs(Expr u);
  static Expr sign(Expr u);
  static Expr sin(Expr u);
  static Expr cos(Expr u);
  static Expr exp(Expr u);
  static Expr log(Expr u);
  static Expr sqrt(Expr u);
  static Expr add(Expr u, Expr v);
  static Expr sub(Expr u, Expr v);
  static Expr mul(Expr u, Expr v);
  static Expr div(Expr u, Expr v);
  static Expr pow(Expr u, double exponent);
  static Expr abspow(Expr u, double exponent);
  static Expr compose(Expr outer, Expr inner);  // outer after inner

  Kind kind() const { return root_->kind; }
  const Node& node() const { return *root_; }

  /// IEEE-double evaluation; sign(0) = 0 by the a.e.-derivative convention.
  /// Throws DomainError on log of a nonpositive number, division by zero,
  /// negative base with fractional exponent, 0^negative, or non-finite results.
  double operator()(double x) const;

  /// Symbolic derivative.  abs differentiates to sign (0 at 0); building the
  /// derivative never fails, evaluation-time domain errors propagate.
  Expr derivative() const;

  /// Canonical printable form; parse(str()) is structurally equal to *this.
  std::string str() const;

  bool structurally_equal(const Expr& other) const;
  bool is_constant() const;

 private:
  explicit Expr(std::shared_ptr<const Node> n) : root_(std::move(n)) {}
  std::shared_ptr<const Node> root_;
};

inline Expr operator+(Expr a, Expr b) { return Expr::add(std::move(a), std::move(b)); }
inline Expr operator-(Expr a, Expr b) { return Expr::sub(std::move(a), std::move(b)); }
inline Expr operator*(Expr a, Expr b) { return Expr::mul(std::move(a), std::move(b)); }
inline Expr operator/(Expr a, Expr b) { return Expr::div(std::move(a), std::move(b)); }
inline Expr operator-(Expr a) { return Expr::neg(std::move(a)); }

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : std::invalid_argument(msg + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Usual precedence: ^ binds tighter than unary minus, then * /, then + -,
/// with parentheses and call syntax `sin(x)`; `x` is the sole variable.
Expr parse_expr(std::string_view text);

/// The factors of the n-fold chain rule built WITHOUT differentiating the
/// composed tree: factor i is g_i' composed with the tail g_{i+1} o ... o g_n
/// (identity tail for i = n).  The product of the factors is the derivative
/// of g_1 o ... o g_n.
struct ChainProduct {
  std::vector<Expr> factors;

  double operator()(double x) const;
  Expr as_expr() const;  // the product as a single tree
};

ChainProduct chain_derivative(std::span<const Expr> gs);

/// g_1 o g_2 o ... o g_n as a tree of composition markers.
Expr fold_compose(std::span<const Expr> gs);

SampledFunction sample(const Expr& f, Interval interval, std::size_t n);

}  // namespace normkit
