#include "fourfold/expsum.hpp"

#include <stdexcept>

namespace fourfold {

void ExpSum::add_term(const GaussianRational& exponent, const GaussianRational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GaussianRational ExpSum::coeff(const GaussianRational& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

std::pair<GaussianRational, GaussianRational> ExpSum::leading_term() const {
  if (terms_.empty()) throw std::domain_error("ExpSum: leading term of the zero sum");
  auto it = std::prev(terms_.end());
  return {it->first, it->second};
}

ExpSum ExpSum::operator-() const {
  ExpSum r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

ExpSum operator+(const ExpSum& a, const ExpSum& b) {
  ExpSum r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

ExpSum operator-(const ExpSum& a, const ExpSum& b) { return a + (-b); }

ExpSum operator*(const ExpSum& a, const ExpSum& b) {
  ExpSum r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

ExpSum operator*(const GaussianRational& c, const ExpSum& s) {
  ExpSum r;
  if (c.is_zero()) return r;
  for (const auto& [e, k] : s.terms_) r.terms_.emplace(e, c * k);
  return r;
}

std::string ExpSum::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")e^{" + e.str() + "t}";
  }
  return s;
}

ExpSum apply_poly_to_exponents(const ExpSum& s, const Polynomial& f) {
  ExpSum r;
  for (const auto& [e, c] : s.terms()) r.add_term(e, f.eval(e) * c);
  return r;
}

QuadExpSeries mul_hyperbolic(const QuadExpSeries& s, const GaussianRational& a, Hyperbolic kind,
                             const Rational& quad_shift) {
  GaussianRational half(Rational(1, 2));
  ExpSum h;
  h.add_term(a, half);
  h.add_term(-a, kind == Hyperbolic::cosh ? half : -half);
  return {s.gauss + quad_shift, s.sum * h};
}

GaussianRational taylor_coefficient(const QuadExpSeries& s, unsigned n) {
  // Per exponential term: n! [t^n] e^{q t^2} e^{lambda t}
  //   = sum over 2a + b = n of n!/(a! b!) q^a lambda^b.
  GaussianRational total(0);
  mpz_class n_fac = factorial(n);
  for (const auto& [lambda, c] : s.sum.terms()) {
    GaussianRational term(0);
    for (unsigned a = 0; 2 * a <= n; ++a) {
      unsigned b = n - 2 * a;
      Rational multinomial(mpq_class(n_fac) / (mpq_class(factorial(a)) * mpq_class(factorial(b))));
      term += GaussianRational(multinomial * s.gauss.pow(a)) * lambda.pow(b);
    }
    total += c * term;
  }
  return total;
}

std::string QuadExpSeries::str() const {
  return "exp(" + gauss.str() + "t^2) * [" + sum.str() + "]";
}

}  // namespace fourfold
