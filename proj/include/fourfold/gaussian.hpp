#pragma once

#include <string>

#include "fourfold/rational.hpp"

namespace fourfold {

// Element of Q(i): re + im*i with exact rational parts.
struct GaussianRational {
  Rational re, im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT: reals embed implicitly
  GaussianRational(long r) : re(r) {}                 // NOLINT
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  bool is_integral() const { return re.is_integral() && im.is_integral(); }

  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }  // |z|^2, exact

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    Rational n = o.norm();
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  GaussianRational pow(unsigned long e) const {
    GaussianRational acc(1), base = *this;
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  // "0", "3/2", "i", "-2i", "1+i", "1-2/3i"
  std::string str() const;
};

inline std::string GaussianRational::str() const {
  if (im.is_zero()) return re.str();
  std::string i_part = (im == Rational(1))    ? "i"
                       : (im == Rational(-1)) ? "-i"
                                              : im.str() + "i";
  if (re.is_zero()) return i_part;
  return re.str() + (im.sign() > 0 ? "+" : "") + i_part;
}

// i^r for any residue.
inline GaussianRational i_power(long r) {
  switch (((r % 4) + 4) % 4) {
    case 0: return GaussianRational(1);
    case 1: return GaussianRational(Rational(0), Rational(1));
    case 2: return GaussianRational(-1);
    default: return GaussianRational(Rational(0), Rational(-1));
  }
}

// Total order on Q(i), lexicographic on (re, im). Mathematically arbitrary but
// fixed: it is what makes ExpSum term order (and every printed report) canonical.
inline int lex_compare(const GaussianRational& a, const GaussianRational& b) {
  if (a.re < b.re) return -1;
  if (b.re < a.re) return 1;
  if (a.im < b.im) return -1;
  if (b.im < a.im) return 1;
  return 0;
}

struct GaussianLexLess {
  bool operator()(const GaussianRational& a, const GaussianRational& b) const {
    return lex_compare(a, b) < 0;
  }
};

}  // namespace fourfold
