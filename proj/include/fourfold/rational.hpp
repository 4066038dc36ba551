#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fourfold {

// Exact rational scalar, always canonical (reduced, positive denominator).
// Thin value wrapper over GMP; nothing in the library ever touches a float.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design, literals everywhere
  Rational(long n, long d) : q_(n, d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  explicit Rational(const mpz_class& n) : q_(n) {}

  // Parses "p", "-p", "p/q". Throws on garbage or zero denominator.
  static Rational parse(const std::string& s);

  const mpq_class& mpq() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integral() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  // Integer exponents; negative ones invert (throws on 0^-n).
  Rational pow(long e) const;

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  // "p" when integral, "p/q" otherwise.
  std::string str() const;

 private:
  mpq_class q_;
};

inline std::string Rational::str() const {
  return is_integral() ? num().get_str() : num().get_str() + "/" + den().get_str();
}

inline Rational Rational::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw std::domain_error("Rational: 0^negative");
    return (Rational(1) / *this).pow(-e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(e));
  Rational r;
  r.q_ = mpq_class(n) / mpq_class(d);
  return r;
}

inline Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational::parse: bad literal '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("Rational::parse: zero denominator in '" + s + "'");
  q.canonicalize();
  return Rational(std::move(q));
}

// n! as an exact integer, for Taylor-coefficient combinatorics.
inline mpz_class factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

// 2^e with e possibly negative.
inline Rational pow2(long e) { return Rational(2).pow(e); }

}  // namespace fourfold
