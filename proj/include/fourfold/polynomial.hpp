#pragma once

#include <vector>

#include "fourfold/gaussian.hpp"

namespace fourfold {

// Dense univariate polynomial over Q(i), coefficients stored lowest degree
// first and trimmed so the top coefficient is nonzero (zero poly = empty).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(GaussianRational c) { coeffs_.push_back(std::move(c)); trim(); }
  explicit Polynomial(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return Polynomial(GaussianRational(1)); }
  // t^n
  static Polynomial monomial(unsigned n, GaussianRational c = GaussianRational(1));
  // Monic product of (t - r) over the given roots, multiplicity by repetition.
  static Polynomial from_roots(const std::vector<GaussianRational>& roots);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial reported as -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
  GaussianRational at(unsigned i) const {
    return i < coeffs_.size() ? coeffs_[i] : GaussianRational(0);
  }
  GaussianRational leading() const {
    return coeffs_.empty() ? GaussianRational(0) : coeffs_.back();
  }

  GaussianRational eval(const GaussianRational& x) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const GaussianRational& c, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned e) const;

  // Euclidean division; second component is the remainder.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  // Division that must be exact; throws std::domain_error on a remainder.
  Polynomial exact_div(const Polynomial& d) const;

  std::string str() const;  // debugging / text reports

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<GaussianRational> coeffs_;
};

}  // namespace fourfold
