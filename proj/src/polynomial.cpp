#include "fourfold/polynomial.hpp"

#include <stdexcept>

namespace fourfold {

Polynomial Polynomial::monomial(unsigned n, GaussianRational c) {
  std::vector<GaussianRational> v(n + 1, GaussianRational(0));
  v[n] = std::move(c);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(const std::vector<GaussianRational>& roots) {
  Polynomial p = one();
  for (const auto& r : roots) p = p * Polynomial({-r, GaussianRational(1)});
  return p;
}

GaussianRational Polynomial::eval(const GaussianRational& x) const {
  GaussianRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<GaussianRational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), GaussianRational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial::zero();
  std::vector<GaussianRational> v(a.coeffs_.size() + b.coeffs_.size() - 1, GaussianRational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial operator*(const GaussianRational& c, const Polynomial& p) {
  Polynomial r = p;
  for (auto& x : r.coeffs_) x *= c;
  r.trim();
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial acc = one(), base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
  Polynomial rem = *this;
  if (rem.degree() < d.degree()) return {zero(), rem};
  std::vector<GaussianRational> q(rem.coeffs_.size() - d.coeffs_.size() + 1, GaussianRational(0));
  GaussianRational lead = d.leading();
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    unsigned shift = static_cast<unsigned>(rem.degree() - d.degree());
    GaussianRational c = rem.leading() / lead;
    q[shift] = c;
    rem = rem - monomial(shift, c) * d;
  }
  return {Polynomial(std::move(q)), rem};
}

Polynomial Polynomial::exact_div(const Polynomial& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw std::domain_error("Polynomial: division not exact");
  return q;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const GaussianRational& c = coeffs_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    if (i == 0) {
      s += c.str();
    } else {
      if (c != GaussianRational(1)) s += (c.is_real() || c.re.is_zero()) ? c.str() + "*" : "(" + c.str() + ")*";
      s += "t";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace fourfold
