#pragma once

// Conway-style tangle expressions and the realizability construction.
//
// Grammar:
//   expr   := term ('+' term)*        sum of tangles (left associative)
//   term   := factor '*'*             postfix '*' is a quarter-turn rotation
//   factor := integer                 the integral tangle T_n
//           | '~' factor              reflection
//           | '(' expr ')'
//
// Semantics on formal fractions: T_n -> [n,1], '+' -> fraction addition,
// '*' -> star ([p,q] -> [-q,p]), '~' -> sign flip ([p,q] -> [-p,q]).

#include <cctype>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "tanglegcd/bracket.hpp"
#include "tanglegcd/diagram.hpp"
#include "tanglegcd/fraction.hpp"

namespace tanglegcd {

struct TangleExpr;
using ExprPtr = std::shared_ptr<const TangleExpr>;

struct TangleExpr {
  enum class Kind { Integral, Sum, Rotate, Reflect };
  Kind kind;
  std::int64_t n = 0;      // Integral only
  ExprPtr left, right;     // Sum uses both; Rotate/Reflect use left
};

inline ExprPtr integral(std::int64_t n) {
  return std::make_shared<TangleExpr>(TangleExpr{TangleExpr::Kind::Integral, n, nullptr, nullptr});
}
inline ExprPtr sum(ExprPtr a, ExprPtr b) {
  return std::make_shared<TangleExpr>(
      TangleExpr{TangleExpr::Kind::Sum, 0, std::move(a), std::move(b)});
}
inline ExprPtr rotated(ExprPtr a) {
  return std::make_shared<TangleExpr>(
      TangleExpr{TangleExpr::Kind::Rotate, 0, std::move(a), nullptr});
}
inline ExprPtr reflected(ExprPtr a) {
  return std::make_shared<TangleExpr>(
      TangleExpr{TangleExpr::Kind::Reflect, 0, std::move(a), nullptr});
}

inline bool operator==(const TangleExpr& a, const TangleExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case TangleExpr::Kind::Integral: return a.n == b.n;
    case TangleExpr::Kind::Sum: return *a.left == *b.left && *a.right == *b.right;
    default: return *a.left == *b.left;
  }
}

// ---- parsing ---------------------------------------------------------------

struct ParseError : std::runtime_error {
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what),
        position(position) {}
  std::size_t position;
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(const std::string& src) : src_(src) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != src_.size()) throw ParseError(pos_, "unexpected trailing input");
    return e;
  }

 private:
  ExprPtr expr() {
    ExprPtr left = term();
    while (true) {
      skip_ws();
      if (!match('+')) return left;
      left = sum(std::move(left), term());
    }
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (true) {
      skip_ws();
      if (!match('*')) return e;
      e = rotated(std::move(e));
    }
  }

  ExprPtr factor() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError(pos_, "expected an integer, '~' or '('");
    char c = src_[pos_];
    if (c == '~') {
      ++pos_;
      return reflected(factor());
    }
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      skip_ws();
      if (!match(')')) throw ParseError(pos_, "expected ')'");
      return e;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return integral(integer_lit());
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  std::int64_t integer_lit() {
    std::size_t start = pos_;
    if (src_[pos_] == '-') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == digits) throw ParseError(start, "expected digits after '-'");
    try {
      return std::stoll(src_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      throw ParseError(start, "integer literal out of range");
    }
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool match(char c) {
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ExprPtr parse(const std::string& text) { return detail::ExprParser(text).run(); }

// Emits text that parses back to the same AST.
inline std::string print(const ExprPtr& e) {
  switch (e->kind) {
    case TangleExpr::Kind::Integral:
      return std::to_string(e->n);
    case TangleExpr::Kind::Sum: {
      std::string lhs = print(e->left);
      std::string rhs = print(e->right);
      if (e->right->kind == TangleExpr::Kind::Sum) rhs = "(" + rhs + ")";
      return lhs + " + " + rhs;
    }
    case TangleExpr::Kind::Rotate: {
      std::string inner = print(e->left);
      if (e->left->kind == TangleExpr::Kind::Sum) inner = "(" + inner + ")";
      return inner + "*";
    }
    case TangleExpr::Kind::Reflect: {
      std::string inner = print(e->left);
      if (e->left->kind == TangleExpr::Kind::Sum || e->left->kind == TangleExpr::Kind::Rotate)
        inner = "~(" + inner + ")";
      else
        inner = "~" + inner;
      return inner;
    }
  }
  throw std::logic_error("unreachable expression kind");
}

// Total crossings of the compiled diagram: sum of |n| over integral leaves.
inline std::int64_t crossing_count(const ExprPtr& e) {
  switch (e->kind) {
    case TangleExpr::Kind::Integral: return checked_abs(e->n);
    case TangleExpr::Kind::Sum: return checked_add(crossing_count(e->left), crossing_count(e->right));
    default: return crossing_count(e->left);
  }
}

// ---- evaluation ------------------------------------------------------------

inline FormalFraction eval_fraction(const ExprPtr& e) {
  switch (e->kind) {
    case TangleExpr::Kind::Integral: return FormalFraction(e->n, 1);
    case TangleExpr::Kind::Sum: return eval_fraction(e->left) + eval_fraction(e->right);
    case TangleExpr::Kind::Rotate: return star(eval_fraction(e->left));
    case TangleExpr::Kind::Reflect: return reflected(eval_fraction(e->left));
  }
  throw std::logic_error("unreachable expression kind");
}

inline BracketVector eval_vector(const ExprPtr& e) {
  switch (e->kind) {
    case TangleExpr::Kind::Integral: {
      if (e->n == 0) return zero_tangle_vector();
      const BracketVector& step = twist_vector(e->n > 0 ? 1 : -1);
      BracketVector v = step;
      for (std::int64_t i = 1; i < checked_abs(e->n); ++i) v = compose(v, step);
      return v;
    }
    case TangleExpr::Kind::Sum: return compose(eval_vector(e->left), eval_vector(e->right));
    case TangleExpr::Kind::Rotate: return rotated(eval_vector(e->left));
    case TangleExpr::Kind::Reflect: return reflected(eval_vector(e->left));
  }
  throw std::logic_error("unreachable expression kind");
}

inline TangleDiagram to_diagram(const ExprPtr& e) {
  switch (e->kind) {
    case TangleExpr::Kind::Integral: {
      if (e->n == 0) return tangle_zero();
      int sign = e->n > 0 ? 1 : -1;
      TangleDiagram t = tangle_twist(sign);
      for (std::int64_t i = 1; i < checked_abs(e->n); ++i) t = sum(t, tangle_twist(sign));
      return t;
    }
    case TangleExpr::Kind::Sum: return sum(to_diagram(e->left), to_diagram(e->right));
    case TangleExpr::Kind::Rotate: return rotated(to_diagram(e->left));
    case TangleExpr::Kind::Reflect: return reflected(to_diagram(e->left));
  }
  throw std::logic_error("unreachable expression kind");
}

// ---- continued fractions and rational tangles -------------------------------

// Floor-division Euclid: p/q = a_1 + 1/(a_2 + 1/(... + 1/a_k)) with every
// quotient after the first nonzero. Requires q != 0.
inline std::vector<std::int64_t> continued_fraction(std::int64_t p, std::int64_t q) {
  if (q == 0) throw std::invalid_argument("continued_fraction requires a nonzero denominator");
  std::vector<std::int64_t> quotients;
  while (true) {
    std::int64_t a = p / q;
    if ((p % q != 0) && ((p < 0) != (q < 0))) --a;  // floor division
    quotients.push_back(a);
    std::int64_t r = p - checked_mul(a, q);
    if (r == 0) return quotients;
    p = q;
    q = r;
  }
}

namespace detail {

// 1/r on expressions: a rotation then a reflection takes [p,q] to [q,p].
inline ExprPtr reciprocal_expr(ExprPtr e) { return reflected(rotated(std::move(e))); }

}  // namespace detail

// A tangle expression with invariant exactly [p,q], built from integral
// tangles by additions and reciprocals along the continued fraction of p/q.
// Requires gcd(p,q) = 1.
inline ExprPtr rational_tangle(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw std::invalid_argument("rational_tangle is undefined for [0,0]");
  if (std::gcd(checked_abs(p), checked_abs(q)) != 1)
    throw std::invalid_argument("rational_tangle requires coprime p, q");
  FormalFraction target(p, q);
  if (target.q == 0) return rotated(integral(0));  // [1,0] = star of [0,1]
  auto quotients = continued_fraction(target.p, target.q);
  ExprPtr e = integral(quotients.back());
  for (std::size_t i = quotients.size() - 1; i-- > 0;)
    e = sum(integral(quotients[i]), detail::reciprocal_expr(std::move(e)));
  return e;
}

// ---- realizability -----------------------------------------------------------

namespace detail {

// The tangle S = (2* + 0*)*, with invariant [0,2].
inline ExprPtr s_tangle() { return rotated(sum(rotated(integral(2)), rotated(integral(0)))); }

// Invariant [0,d] for odd d >= 3: (((-d)* + (-d)*)* + d')* + (-2), d' = (d-1)/2.
inline ExprPtr zero_over_odd(std::int64_t d) {
  ExprPtr half = rotated(sum(rotated(integral(-d)), rotated(integral(-d))));
  ExprPtr most = rotated(sum(std::move(half), integral((d - 1) / 2)));
  return sum(std::move(most), integral(-2));
}

}  // namespace detail

// A tangle expression whose invariant is exactly [p,q], for any class except
// [0,0]. Decomposes p = 2^n * d * p', q = 2^n * d * q' (d odd, gcd(p',q')=1)
// and sums n copies of S, the [0,d] gadget, and a rational tangle; when q' is
// even, realizes [q,p] and swaps back with a rotation plus a reflection.
inline ExprPtr realize(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0)
    throw std::invalid_argument("realize is undefined for [0,0]; use realize_zero_zero()");
  FormalFraction target(p, q);
  p = target.p;
  q = target.q;

  std::int64_t g = std::gcd(checked_abs(p), checked_abs(q));
  std::int64_t pp = p / g, qq = q / g;
  if (qq % 2 == 0) {
    // p' is odd here; build [q,p] and apply the reciprocal at diagram level.
    return detail::reciprocal_expr(realize(q, p));
  }

  int twos = 0;
  std::int64_t d = g;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }

  std::vector<ExprPtr> parts;
  for (int i = 0; i < twos; ++i) parts.push_back(detail::s_tangle());
  if (d > 1) parts.push_back(detail::zero_over_odd(d));
  if (!(pp == 0 && qq == 1) || parts.empty()) parts.push_back(rational_tangle(pp, qq));

  ExprPtr e = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) e = sum(std::move(e), parts[i]);
  return e;
}

// [0,0] is not produced by the factorized construction; it is realized by the
// sum of two quarter-turned trivial tangles, whose middle strands close into a
// circle (both closures then contain that circle, so both brackets vanish).
inline ExprPtr realize_zero_zero() {
  return sum(rotated(integral(0)), rotated(integral(0)));
}

}  // namespace tanglegcd
