// SPDX-License-Identifier: Apache-2.0
#include "normkit/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>

namespace normkit {

namespace {

using Node = Expr::Node;
using Kind = Expr::Kind;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Kind k, double v, NodePtr a = nullptr, NodePtr b = nullptr) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->value = v;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

}  // namespace

Expr Expr::constant(double c) { return Expr(make(Kind::Constant, c)); }
Expr Expr::variable() { return Expr(make(Kind::Variable, 0.0)); }

#define NORMKIT_UNARY(NAME, KIND)                                  \
  Expr Expr::NAME(Expr u) { return Expr(make(Kind::KIND, 0.0, u.root_)); }
NORMKIT_UNARY(neg, Neg)
NORMKIT_UNARY(abs, Abs)
NORMKIT_UNARY(sign, Sign)
NORMKIT_UNARY(sin, Sin)
NORMKIT_UNARY(cos, Cos)
NORMKIT_UNARY(exp, Exp)
NORMKIT_UNARY(log, Log)
NORMKIT_UNARY(sqrt, Sqrt)
#undef NORMKIT_UNARY

Expr Expr::add(Expr u, Expr v) { return Expr(make(Kind::Add, 0.0, u.root_, v.root_)); }
Expr Expr::sub(Expr u, Expr v) { return Expr(make(Kind::Sub, 0.0, u.root_, v.root_)); }
Expr Expr::mul(Expr u, Expr v) { return Expr(make(Kind::Mul, 0.0, u.root_, v.root_)); }
Expr Expr::div(Expr u, Expr v) { return Expr(make(Kind::Div, 0.0, u.root_, v.root_)); }

Expr Expr::pow(Expr u, double exponent) {
  return Expr(make(Kind::Pow, exponent, u.root_));
}
Expr Expr::abspow(Expr u, double exponent) {
  return Expr(make(Kind::AbsPow, exponent, u.root_));
}
Expr Expr::compose(Expr outer, Expr inner) {
  return Expr(make(Kind::Compose, 0.0, outer.root_, inner.root_));
}

namespace {

double eval_node(const Node& n, double x) {
  auto finite = [&](double v, const char* what) {
    if (!std::isfinite(v)) throw DomainError(std::string(what) + " produced a non-finite value", x);
    return v;
  };
  switch (n.kind) {
    case Kind::Constant: return n.value;
    case Kind::Variable: return x;
    case Kind::Neg: return -eval_node(*n.a, x);
    case Kind::Abs: return std::abs(eval_node(*n.a, x));
    case Kind::Sign: {
      const double u = eval_node(*n.a, x);
      return u > 0 ? 1.0 : (u < 0 ? -1.0 : 0.0);
    }
    case Kind::Sin: return std::sin(eval_node(*n.a, x));
    case Kind::Cos: return std::cos(eval_node(*n.a, x));
    case Kind::Exp: return finite(std::exp(eval_node(*n.a, x)), "exp");
    case Kind::Log: {
      const double u = eval_node(*n.a, x);
      if (!(u > 0)) throw DomainError("log of a nonpositive number", x);
      return std::log(u);
    }
    case Kind::Sqrt: {
      const double u = eval_node(*n.a, x);
      if (u < 0) throw DomainError("sqrt of a negative number", x);
      return std::sqrt(u);
    }
    case Kind::Add: return finite(eval_node(*n.a, x) + eval_node(*n.b, x), "+");
    case Kind::Sub: return finite(eval_node(*n.a, x) - eval_node(*n.b, x), "-");
    case Kind::Mul: return finite(eval_node(*n.a, x) * eval_node(*n.b, x), "*");
    case Kind::Div: {
      const double v = eval_node(*n.b, x);
      if (v == 0.0) throw DomainError("division by zero", x);
      return finite(eval_node(*n.a, x) / v, "/");
    }
    case Kind::Pow: {
      const double u = eval_node(*n.a, x);
      const double c = n.value;
      if (u == 0.0 && c < 0) throw DomainError("0 raised to a negative power", x);
      if (u < 0 && c != std::floor(c))
        throw DomainError("negative base with fractional exponent", x);
      return finite(std::pow(u, c), "^");
    }
    case Kind::AbsPow: {
      const double u = std::abs(eval_node(*n.a, x));
      const double c = n.value;
      if (u == 0.0) {
        if (c > 0) return 0.0;
        if (c == 0) return 1.0;
        throw DomainError("abspow at 0 with a negative exponent", x);
      }
      return finite(std::pow(u, c), "abspow");
    }
    case Kind::Compose: return eval_node(*n.a, eval_node(*n.b, x));
  }
  throw std::logic_error("eval: unreachable");
}

NodePtr diff_node(const NodePtr& n);

NodePtr nmul(NodePtr a, NodePtr b) { return make(Kind::Mul, 0.0, std::move(a), std::move(b)); }
NodePtr nconst(double c) { return make(Kind::Constant, c); }

// d(outer(u))/dx = outer'(u) * u'
NodePtr chain(NodePtr derivative_of_outer_at_u, const NodePtr& u) {
  return nmul(std::move(derivative_of_outer_at_u), diff_node(u));
}

NodePtr diff_node(const NodePtr& n) {
  switch (n->kind) {
    case Kind::Constant: return nconst(0.0);
    case Kind::Variable: return nconst(1.0);
    case Kind::Neg: return make(Kind::Neg, 0.0, diff_node(n->a));
    case Kind::Abs: return chain(make(Kind::Sign, 0.0, n->a), n->a);
    case Kind::Sign: return chain(nconst(0.0), n->a);  // a.e. derivative
    case Kind::Sin: return chain(make(Kind::Cos, 0.0, n->a), n->a);
    case Kind::Cos: return chain(make(Kind::Neg, 0.0, make(Kind::Sin, 0.0, n->a)), n->a);
    case Kind::Exp: return chain(make(Kind::Exp, 0.0, n->a), n->a);
    case Kind::Log: return make(Kind::Div, 0.0, diff_node(n->a), n->a);
    case Kind::Sqrt:
      return make(Kind::Div, 0.0, diff_node(n->a),
                  nmul(nconst(2.0), make(Kind::Sqrt, 0.0, n->a)));
    case Kind::Add: return make(Kind::Add, 0.0, diff_node(n->a), diff_node(n->b));
    case Kind::Sub: return make(Kind::Sub, 0.0, diff_node(n->a), diff_node(n->b));
    case Kind::Mul:
      return make(Kind::Add, 0.0, nmul(diff_node(n->a), n->b), nmul(n->a, diff_node(n->b)));
    case Kind::Div:
      // (u/v)' = (u'v - uv') / v^2
      return make(Kind::Div, 0.0,
                  make(Kind::Sub, 0.0, nmul(diff_node(n->a), n->b), nmul(n->a, diff_node(n->b))),
                  make(Kind::Pow, 2.0, n->b));
    case Kind::Pow:
      return chain(nmul(nconst(n->value), make(Kind::Pow, n->value - 1.0, n->a)), n->a);
    case Kind::AbsPow:
      // d|u|^mu = mu * sign(u) * |u|^(mu-1) * u'
      return chain(nmul(nconst(n->value),
                        nmul(make(Kind::Sign, 0.0, n->a), make(Kind::AbsPow, n->value - 1.0, n->a))),
                   n->a);
    case Kind::Compose:
      return nmul(make(Kind::Compose, 0.0, diff_node(n->a), n->b), diff_node(n->b));
  }
  throw std::logic_error("diff: unreachable");
}

int precedence(Kind k) {
  switch (k) {
    case Kind::Add: case Kind::Sub: return 1;
    case Kind::Mul: case Kind::Div: return 2;
    case Kind::Neg: return 3;
    case Kind::Pow: return 4;
    default: return 5;  // atoms and call syntax
  }
}

void print_node(const Node& n, std::string& out);

void print_child(const Node& child, int parent_prec, bool tighten, std::string& out) {
  const bool parens = precedence(child.kind) < parent_prec ||
                      (tighten && precedence(child.kind) == parent_prec);
  if (parens) out += '(';
  print_node(child, out);
  if (parens) out += ')';
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void print_node(const Node& n, std::string& out) {
  switch (n.kind) {
    case Kind::Constant:
      if (n.value < 0) {
        out += '(';
        out += format_number(n.value);
        out += ')';
      } else {
        out += format_number(n.value);
      }
      return;
    case Kind::Variable: out += 'x'; return;
    case Kind::Neg:
      out += '-';
      print_child(*n.a, precedence(Kind::Neg), true, out);
      return;
    case Kind::Abs: out += "abs("; print_node(*n.a, out); out += ')'; return;
    case Kind::Sign: out += "sign("; print_node(*n.a, out); out += ')'; return;
    case Kind::Sin: out += "sin("; print_node(*n.a, out); out += ')'; return;
    case Kind::Cos: out += "cos("; print_node(*n.a, out); out += ')'; return;
    case Kind::Exp: out += "exp("; print_node(*n.a, out); out += ')'; return;
    case Kind::Log: out += "log("; print_node(*n.a, out); out += ')'; return;
    case Kind::Sqrt: out += "sqrt("; print_node(*n.a, out); out += ')'; return;
    case Kind::Add:
      print_child(*n.a, 1, false, out); out += " + "; print_child(*n.b, 1, true, out);
      return;
    case Kind::Sub:
      print_child(*n.a, 1, false, out); out += " - "; print_child(*n.b, 1, true, out);
      return;
    case Kind::Mul:
      print_child(*n.a, 2, false, out); out += "*"; print_child(*n.b, 2, true, out);
      return;
    case Kind::Div:
      print_child(*n.a, 2, false, out); out += "/"; print_child(*n.b, 2, true, out);
      return;
    case Kind::Pow:
      print_child(*n.a, 5, false, out);
      out += '^';
      if (n.value < 0) {
        out += '(';
        out += format_number(n.value);
        out += ')';
      } else {
        out += format_number(n.value);
      }
      return;
    case Kind::AbsPow:
      out += "abspow(";
      print_node(*n.a, out);
      out += ", ";
      out += format_number(n.value);
      out += ')';
      return;
    case Kind::Compose:
      out += "compose(";
      print_node(*n.a, out);
      out += ", ";
      print_node(*n.b, out);
      out += ')';
      return;
  }
}

bool equal_nodes(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.value != b.value) return false;
  if ((a.a == nullptr) != (b.a == nullptr)) return false;
  if ((a.b == nullptr) != (b.b == nullptr)) return false;
  if (a.a && !equal_nodes(*a.a, *b.a)) return false;
  if (a.b && !equal_nodes(*a.b, *b.b)) return false;
  return true;
}

bool node_has_variable(const Node& n) {
  if (n.kind == Kind::Variable) return true;
  if (n.a && node_has_variable(*n.a)) return true;
  if (n.b && node_has_variable(*n.b)) return true;
  return false;
}

}  // namespace

double Expr::operator()(double x) const { return eval_node(*root_, x); }

Expr Expr::derivative() const { return Expr(diff_node(root_)); }

std::string Expr::str() const {
  std::string out;
  print_node(*root_, out);
  return out;
}

bool Expr::structurally_equal(const Expr& other) const {
  return equal_nodes(*root_, *other.root_);
}

bool Expr::is_constant() const { return !node_has_variable(*root_); }

// ---------------------------------------------------------------------------
// Recursive-descent parser
// ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expression();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Expr expression() {
    Expr lhs = term();
    for (;;) {
      if (eat('+')) lhs = lhs + term();
      else if (eat('-')) lhs = lhs - term();
      else return lhs;
    }
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      if (eat('*')) lhs = lhs * unary();
      else if (eat('/')) lhs = lhs / unary();
      else return lhs;
    }
  }

  Expr unary() {
    if (eat('-')) {
      Expr u = unary();
      // fold a literal negation so -1.5 is one constant node
      if (u.kind() == Expr::Kind::Constant) return Expr::constant(-u.node().value);
      return -u;
    }
    if (eat('+')) return unary();
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (eat('^')) {
      const std::size_t at = pos_;
      Expr e = exponent_atom();
      if (!e.is_constant()) throw ParseError("exponent must be constant", at);
      return Expr::pow(std::move(base), e(0.0));
    }
    return base;
  }

  // exponent: optionally signed number or parenthesized constant expression
  Expr exponent_atom() {
    if (eat('-')) return -exponent_atom();
    return atom();
  }

  Expr atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (c == '(') {
      ++pos_;
      Expr e = expression();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  Expr number() {
    const char* begin = text_.data() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) throw ParseError("malformed number", pos_);
    pos_ += std::size_t(end - begin);
    return Expr::constant(v);
  }

  Expr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    if (name == "x") return Expr::variable();
    if (name == "pi") return Expr::constant(3.14159265358979323846);
    if (name == "e") return Expr::constant(2.71828182845904523536);

    if (!eat('(')) throw ParseError("unknown identifier '" + name + "'", start);
    if (name == "abspow") {
      Expr arg = expression();
      if (!eat(',')) throw ParseError("abspow needs a second argument", pos_);
      const std::size_t at = pos_;
      Expr mu = expression();
      if (!mu.is_constant()) throw ParseError("abspow exponent must be constant", at);
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return Expr::abspow(std::move(arg), mu(0.0));
    }
    if (name == "compose") {
      Expr outer = expression();
      if (!eat(',')) throw ParseError("compose needs a second argument", pos_);
      Expr inner = expression();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return Expr::compose(std::move(outer), std::move(inner));
    }
    Expr arg = expression();
    if (!eat(')')) throw ParseError("expected ')'", pos_);
    if (name == "abs") return Expr::abs(std::move(arg));
    if (name == "sign") return Expr::sign(std::move(arg));
    if (name == "sin") return Expr::sin(std::move(arg));
    if (name == "cos") return Expr::cos(std::move(arg));
    if (name == "exp") return Expr::exp(std::move(arg));
    if (name == "log") return Expr::log(std::move(arg));
    if (name == "sqrt") return Expr::sqrt(std::move(arg));
    throw ParseError("unknown function '" + name + "'", start);
  }
};

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

double ChainProduct::operator()(double x) const {
  double prod = 1.0;
  for (const Expr& f : factors) prod *= f(x);
  return prod;
}

Expr ChainProduct::as_expr() const {
  Expr prod = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) prod = prod * factors[i];
  return prod;
}

ChainProduct chain_derivative(std::span<const Expr> gs) {
  if (gs.size() < 2) throw std::invalid_argument("chain_derivative: need n >= 2 functions");
  const std::size_t n = gs.size();
  ChainProduct out;
  out.factors.reserve(n);
  // factor i: g_i' o (g_{i+1} o ... o g_n); factor n has the identity tail
  for (std::size_t i = 0; i < n; ++i) {
    Expr di = gs[i].derivative();
    if (i + 1 == n) {
      out.factors.push_back(std::move(di));
      continue;
    }
    Expr tail = gs[i + 1];
    for (std::size_t j = i + 2; j < n; ++j) tail = Expr::compose(std::move(tail), gs[j]);
    out.factors.push_back(Expr::compose(std::move(di), std::move(tail)));
  }
  return out;
}

Expr fold_compose(std::span<const Expr> gs) {
  if (gs.empty()) throw std::invalid_argument("fold_compose: need at least one function");
  Expr out = gs[0];
  for (std::size_t i = 1; i < gs.size(); ++i) out = Expr::compose(std::move(out), gs[i]);
  return out;
}

SampledFunction sample(const Expr& f, Interval interval, std::size_t n) {
  return sample([&f](double x) { return f(x); }, interval, n);
}

}  // namespace normkit
