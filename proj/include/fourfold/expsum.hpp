#pragma once

#include <map>
#include <optional>
#include <string>

#include "fourfold/polynomial.hpp"

namespace fourfold {

// Finite formal sum  sum_lambda c_lambda * e^(lambda*t)  with Gaussian-rational
// exponents and coefficients. Terms with coefficient zero are never stored, and
// the map keeps exponents in the canonical (re, im)-lex order, so structural
// equality is semantic equality and iteration order is printable order.
class ExpSum {
 public:
  using Terms = std::map<GaussianRational, GaussianRational, GaussianLexLess>;

  ExpSum() = default;
  ExpSum(std::initializer_list<std::pair<GaussianRational, GaussianRational>> terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
  }

  static ExpSum constant(GaussianRational c) {
    ExpSum s;
    s.add_term(GaussianRational(0), std::move(c));
    return s;
  }

  void add_term(const GaussianRational& exponent, const GaussianRational& coeff);

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  GaussianRational coeff(const GaussianRational& exponent) const;

  // Term of maximal exponent in the (re, im)-lex order; in the cases the
  // library cares about exponents are real and this is the dominant term.
  // Throws on the empty sum.
  std::pair<GaussianRational, GaussianRational> leading_term() const;

  ExpSum operator-() const;
  friend ExpSum operator+(const ExpSum& a, const ExpSum& b);
  friend ExpSum operator-(const ExpSum& a, const ExpSum& b);
  // Product: exponents add, coefficients multiply, like terms merge.
  friend ExpSum operator*(const ExpSum& a, const ExpSum& b);
  friend ExpSum operator*(const GaussianRational& c, const ExpSum& s);
  friend bool operator==(const ExpSum& a, const ExpSum& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const ExpSum& a, const ExpSum& b) { return !(a == b); }

  std::string str() const;

 private:
  Terms terms_;
};

// (c_lambda) -> (f(lambda) * c_lambda): evaluation of a polynomial in d/dt.
ExpSum apply_poly_to_exponents(const ExpSum& s, const Polynomial& f);

// exp(gauss * t^2) * ExpSum, the shape Donaldson series take in one variable.
struct QuadExpSeries {
  Rational gauss;
  ExpSum sum;

  friend bool operator==(const QuadExpSeries& a, const QuadExpSeries& b) {
    return a.gauss == b.gauss && a.sum == b.sum;
  }
  friend bool operator!=(const QuadExpSeries& a, const QuadExpSeries& b) { return !(a == b); }
  // Gaussian parts add, exponential sums convolve.
  friend QuadExpSeries operator*(const QuadExpSeries& a, const QuadExpSeries& b) {
    return {a.gauss + b.gauss, a.sum * b.sum};
  }

  std::string str() const;
};

enum class Hyperbolic { cosh, sinh };

// Multiply by exp(quad_shift * t^2) * cosh(a t) (resp. sinh): the Gaussian part
// shifts and the sum convolves with {a: 1/2, -a: +-1/2}.
QuadExpSeries mul_hyperbolic(const QuadExpSeries& s, const GaussianRational& a, Hyperbolic kind,
                             const Rational& quad_shift);

// n! * (coefficient of t^n), i.e. the n-th derivative at 0:
//   sum_lambda c_lambda * sum_{2a+b=n} n!/(a! b!) gauss^a lambda^b.
GaussianRational taylor_coefficient(const QuadExpSeries& s, unsigned n);

}  // namespace fourfold
