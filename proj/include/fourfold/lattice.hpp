#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fourfold/rational.hpp"

namespace fourfold {

// Homology class in the coordinates of a fixed lattice basis.
using H2Class = std::vector<std::int64_t>;

H2Class neg(const H2Class& a);
H2Class add(const H2Class& a, const H2Class& b);
H2Class sub(const H2Class& a, const H2Class& b);
H2Class scale(std::int64_t k, const H2Class& a);

struct SignatureInfo {
  int positive = 0;
  int negative = 0;
  int signature() const { return positive - negative; }
};

using GramMatrix = std::vector<std::vector<std::int64_t>>;

// Exact determinant (fraction-free Bareiss, block-split first).
mpz_class gram_determinant(const GramMatrix& gram);

// Signature by exact rational congruence diagonalization; no numerics anywhere.
// Throws std::domain_error on a singular gram.
SignatureInfo signature_of(const GramMatrix& gram);

// Unimodular symmetric intersection lattice with labeled basis. Construction
// rejects anything non-symmetric or with |det| != 1; the rest of the library
// can then rely on Poincare duality identifying classes with functionals.
class Lattice {
 public:
  Lattice() = default;  // the rank-0 lattice
  explicit Lattice(GramMatrix gram, std::vector<std::string> labels = {});

  int rank() const { return static_cast<int>(gram_.size()); }
  const GramMatrix& gram() const { return gram_; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& label) const;  // -1 when absent
  H2Class basis_vector(int i) const;

  // a^T * gram * b, exact.
  std::int64_t pairing(const H2Class& a, const H2Class& b) const;

  SignatureInfo signature() const { return signature_of(gram_); }

  // K . x = x . x (mod 2) for every x; checked on the basis.
  bool is_characteristic(const H2Class& k) const;

  static Lattice diagonal(const std::vector<std::int64_t>& entries,
                          std::vector<std::string> labels = {});
  static Lattice direct_sum(const Lattice& a, const Lattice& b);

  // The two standard indefinite building blocks. Catalog manifolds are
  // assembled from direct sums of these plus diagonal pieces.
  static Lattice hyperbolic_block(const std::string& f_label, const std::string& s_label);
  static Lattice neg_e8_block(const std::string& label_prefix);  // labels prefix1..prefix8

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.gram_ == b.gram_ && a.labels_ == b.labels_;
  }
  friend bool operator!=(const Lattice& a, const Lattice& b) { return !(a == b); }

 private:
  GramMatrix gram_;
  std::vector<std::string> labels_;
};

struct SpanSolution {
  bool in_span = false;
  std::vector<Rational> coeffs;   // one per spanning class; empty when not in span
  std::vector<bool> integral;     // per-coefficient integrality
  bool all_integral = false;
};

// Decides target = sum c_i * spanning_i in lattice coordinates.
// Throws std::invalid_argument on a linearly dependent spanning set (no
// canonical coefficients would exist) or on dimension mismatches.
SpanSolution solve_in_span(const Lattice& l, const H2Class& target,
                           const std::vector<H2Class>& spanning);

}  // namespace fourfold
