#include "sfw/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "sfw/error.hpp"

namespace sfw {

namespace detail {

enum class Op { constant, variable, radius2, add, sub, mul, div, neg, pow, func };
enum class Func { exp, log, sqrt, sin, cos, tan, sinh, cosh, tanh, atan, atanh };

struct ExprNode {
  Op op = Op::constant;
  double number = 0.0;
  int index = 0;
  Func func = Func::exp;
  std::shared_ptr<const ExprNode> lhs;
  std::shared_ptr<const ExprNode> rhs;
};

}  // namespace detail

namespace {

using detail::ExprNode;
using detail::Func;
using detail::Op;
using NodePtr = std::shared_ptr<const ExprNode>;

NodePtr make_constant(double v) {
  auto n = std::make_shared<ExprNode>();
  n->op = Op::constant;
  n->number = v;
  return n;
}

NodePtr make_binary(Op op, NodePtr a, NodePtr b) {
  auto n = std::make_shared<ExprNode>();
  n->op = op;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

Jet apply_func(Func f, const Jet& a) {
  const double v = a.value;
  switch (f) {
    case Func::exp: return exp(a);
    case Func::log: return log(a);
    case Func::sqrt: {
      const double s = std::sqrt(v);
      return a.apply(s, 0.5 / s, -0.25 / (s * v));
    }
    case Func::sin: return a.apply(std::sin(v), std::cos(v), -std::sin(v));
    case Func::cos: return a.apply(std::cos(v), -std::sin(v), -std::cos(v));
    case Func::tan: {
      const double t = std::tan(v);
      const double sec2 = 1.0 + t * t;
      return a.apply(t, sec2, 2.0 * t * sec2);
    }
    case Func::sinh: return a.apply(std::sinh(v), std::cosh(v), std::sinh(v));
    case Func::cosh: return a.apply(std::cosh(v), std::sinh(v), std::cosh(v));
    case Func::tanh: {
      const double t = std::tanh(v);
      const double s = 1.0 - t * t;
      return a.apply(t, s, -2.0 * t * s);
    }
    case Func::atan: {
      const double d = 1.0 / (1.0 + v * v);
      return a.apply(std::atan(v), d, -2.0 * v * d * d);
    }
    case Func::atanh: {
      const double d = 1.0 / (1.0 - v * v);
      return a.apply(std::atanh(v), d, 2.0 * v * d * d);
    }
  }
  return a;
}

bool is_constant(const NodePtr& n) { return n->op == Op::constant; }

Jet eval(const ExprNode& n, const Vec& x) {
  const int dim = static_cast<int>(x.size());
  switch (n.op) {
    case Op::constant: return Jet::constant(dim, n.number);
    case Op::variable: return Jet::variable(dim, n.index, x(n.index));
    case Op::radius2: {
      Jet j(dim, x.squaredNorm());
      j.grad = 2.0 * x;
      j.hess = 2.0 * Mat::Identity(dim, dim);
      return j;
    }
    case Op::add: return eval(*n.lhs, x) + eval(*n.rhs, x);
    case Op::sub: return eval(*n.lhs, x) - eval(*n.rhs, x);
    case Op::mul: return eval(*n.lhs, x) * eval(*n.rhs, x);
    case Op::div: return eval(*n.lhs, x) / eval(*n.rhs, x);
    case Op::neg: return -eval(*n.lhs, x);
    case Op::pow: {
      const Jet base = eval(*n.lhs, x);
      if (is_constant(n.rhs)) return pow(base, n.rhs->number);
      return exp(eval(*n.rhs, x) * log(base));
    }
    case Op::func: return apply_func(n.func, eval(*n.lhs, x));
  }
  return Jet(dim);
}

double eval_value(const ExprNode& n, const Vec& x) {
  switch (n.op) {
    case Op::constant: return n.number;
    case Op::variable: return x(n.index);
    case Op::radius2: return x.squaredNorm();
    case Op::add: return eval_value(*n.lhs, x) + eval_value(*n.rhs, x);
    case Op::sub: return eval_value(*n.lhs, x) - eval_value(*n.rhs, x);
    case Op::mul: return eval_value(*n.lhs, x) * eval_value(*n.rhs, x);
    case Op::div: return eval_value(*n.lhs, x) / eval_value(*n.rhs, x);
    case Op::neg: return -eval_value(*n.lhs, x);
    case Op::pow: return std::pow(eval_value(*n.lhs, x), eval_value(*n.rhs, x));
    case Op::func: {
      const double v = eval_value(*n.lhs, x);
      switch (n.func) {
        case Func::exp: return std::exp(v);
        case Func::log: return std::log(v);
        case Func::sqrt: return std::sqrt(v);
        case Func::sin: return std::sin(v);
        case Func::cos: return std::cos(v);
        case Func::tan: return std::tan(v);
        case Func::sinh: return std::sinh(v);
        case Func::cosh: return std::cosh(v);
        case Func::tanh: return std::tanh(v);
        case Func::atan: return std::atan(v);
        case Func::atanh: return std::atanh(v);
      }
    }
  }
  return 0.0;
}

/// Recursive-descent parser over a single expression string.
class Parser {
 public:
  Parser(const std::string& src, int dim) : src_(src), dim_(dim) {}

  NodePtr parse() {
    NodePtr n = parse_sum();
    skip_ws();
    if (pos_ != src_.size()) error("unexpected trailing input");
    return n;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    std::ostringstream os;
    os << "expression parse error at column " << (pos_ + 1) << ": " << msg
       << " in '" << src_ << "'";
    fail(ErrorKind::parse, os.str());
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr parse_sum() {
    NodePtr n = parse_product();
    for (;;) {
      if (accept('+')) n = make_binary(Op::add, n, parse_product());
      else if (accept('-')) n = make_binary(Op::sub, n, parse_product());
      else return n;
    }
  }

  NodePtr parse_product() {
    NodePtr n = parse_unary();
    for (;;) {
      if (accept('*')) n = make_binary(Op::mul, n, parse_unary());
      else if (accept('/')) n = make_binary(Op::div, n, parse_unary());
      else return n;
    }
  }

  NodePtr parse_unary() {
    if (accept('-')) {
      auto n = std::make_shared<ExprNode>();
      n->op = Op::neg;
      n->lhs = parse_unary();
      return n;
    }
    if (accept('+')) return parse_unary();
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_primary();
    if (accept('^')) return make_binary(Op::pow, base, parse_unary());
    return base;
  }

  NodePtr parse_primary() {
    skip_ws();
    if (pos_ >= src_.size()) error("unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr n = parse_sum();
      if (!accept(')')) error("expected ')'");
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = src_.c_str() + pos_;
      char* end = nullptr;
      const double v = std::strtod(begin, &end);
      if (end == begin) error("bad number");
      pos_ += static_cast<std::size_t>(end - begin);
      return make_constant(v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      const std::string name = src_.substr(start, pos_ - start);
      return identifier(name, start);
    }
    error(std::string("unexpected character '") + c + "'");
  }

  NodePtr identifier(const std::string& name, std::size_t start) {
    static const std::pair<const char*, Func> funcs[] = {
        {"exp", Func::exp},   {"log", Func::log},     {"sqrt", Func::sqrt},
        {"sin", Func::sin},   {"cos", Func::cos},     {"tan", Func::tan},
        {"sinh", Func::sinh}, {"cosh", Func::cosh},   {"tanh", Func::tanh},
        {"atan", Func::atan}, {"atanh", Func::atanh}};
    for (const auto& [fname, f] : funcs) {
      if (name == fname) {
        if (!accept('(')) error("expected '(' after " + name);
        auto n = std::make_shared<ExprNode>();
        n->op = Op::func;
        n->func = f;
        n->lhs = parse_sum();
        if (!accept(')')) error("expected ')' closing " + name);
        return n;
      }
    }
    int index = -1;
    if (name == "x" || name == "x1") index = 0;
    else if (name == "y" || name == "x2") index = 1;
    else if (name == "z" || name == "x3") index = 2;
    if (name == "r2") {
      auto n = std::make_shared<ExprNode>();
      n->op = Op::radius2;
      return n;
    }
    if (name == "pi") return make_constant(3.14159265358979323846);
    if (index < 0) {
      pos_ = start;
      error("unknown identifier '" + name + "'");
    }
    if (index >= dim_) {
      pos_ = start;
      error("coordinate '" + name + "' exceeds dimension " + std::to_string(dim_));
    }
    auto n = std::make_shared<ExprNode>();
    n->op = Op::variable;
    n->index = index;
    return n;
  }

  const std::string& src_;
  int dim_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression Expression::parse(const std::string& source, int dim) {
  if (dim < 1 || dim > kMaxDim) fail(ErrorKind::usage, "expression dimension must be 1..3");
  Parser p(source, dim);
  return Expression(p.parse(), dim, source);
}

Expression Expression::constant(double value, int dim) {
  std::ostringstream os;
  os.precision(17);
  os << value;
  return Expression(make_constant(value), dim, os.str());
}

Expression Expression::polynomial(const std::vector<Monomial>& terms, int dim) {
  NodePtr sum = make_constant(0.0);
  std::ostringstream src;
  src.precision(17);
  bool first = true;
  for (const auto& t : terms) {
    if (static_cast<int>(t.exponents.size()) != dim)
      fail(ErrorKind::spec, "monomial exponent count must equal the dimension");
    NodePtr term = make_constant(t.coefficient);
    if (!first) src << " + ";
    src << "(" << t.coefficient << ")";
    first = false;
    for (int i = 0; i < dim; ++i) {
      const int e = t.exponents[static_cast<std::size_t>(i)];
      if (e < 0) fail(ErrorKind::spec, "negative monomial exponent");
      if (e == 0) continue;
      auto var = std::make_shared<ExprNode>();
      var->op = Op::variable;
      var->index = i;
      term = make_binary(Op::mul, term,
                         e == 1 ? NodePtr(var) : make_binary(Op::pow, var, make_constant(e)));
      src << "*x" << (i + 1);
      if (e != 1) src << "^" << e;
    }
    sum = make_binary(Op::add, sum, term);
  }
  if (first) src << "0";
  return Expression(sum, dim, src.str());
}

double Expression::value(const Vec& x) const {
  if (!root_) return 0.0;
  return eval_value(*root_, x);
}

Jet Expression::jet(const Vec& x) const {
  if (!root_) return Jet(static_cast<int>(x.size()));
  return eval(*root_, x);
}

}  // namespace sfw
