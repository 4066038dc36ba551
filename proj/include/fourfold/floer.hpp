#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fourfold/check.hpp"
#include "fourfold/polynomial.hpp"

namespace fourfold {

// Dense square matrix over Q(i). Just enough linear algebra for the spectral
// bookkeeping below; everything stays exact.
struct GMatrix {
  std::vector<std::vector<GaussianRational>> a;

  GMatrix() = default;
  explicit GMatrix(int n)
      : a(static_cast<size_t>(n), std::vector<GaussianRational>(static_cast<size_t>(n))) {}
  static GMatrix identity(int n);

  int dim() const { return static_cast<int>(a.size()); }
  bool is_zero() const;
  GaussianRational trace() const;

  friend GMatrix operator+(const GMatrix& x, const GMatrix& y);
  friend GMatrix operator-(const GMatrix& x, const GMatrix& y);
  friend GMatrix operator*(const GMatrix& x, const GMatrix& y);
  friend GMatrix operator*(const GaussianRational& c, const GMatrix& x);
  friend bool operator==(const GMatrix& x, const GMatrix& y) { return x.a == y.a; }
  friend bool operator!=(const GMatrix& x, const GMatrix& y) { return !(x == y); }

  std::vector<GaussianRational> apply(const std::vector<GaussianRational>& v) const;
};

// det(tI - A), monic, by Faddeev-LeVerrier (exact; no eigenvalue numerics).
Polynomial char_poly(const GMatrix& m);

// p(A) by Horner.
GMatrix eval_poly(const Polynomial& p, const GMatrix& m);

// Synthetic Floer-pairing model: the action of the surface class on the
// instanton side reduced to (matrix, left vector, right vector). The only
// structural promise is the spectrum grid {i^r * 2k : 0 <= k <= g-1},
// certified by annihilators rather than eigensolvers. mults[k] declares the
// annihilation exponent needed at |eigenvalue| 2k (k = 0..g-2); top_dim the
// dimension of the (2g-2) generalized eigenspace (1 in the cases the theory
// covers). w_sq / b_plus / b1 tie the model to a manifold-side degree
// congruence.
struct FloerModel {
  std::string name;
  int genus = 2;
  int dim = 1;
  GMatrix action;
  std::vector<GaussianRational> left;
  std::vector<GaussianRational> right;
  std::vector<int> mults;
  int top_dim = 1;
  std::int64_t w_sq = 0;
  int b_plus = 3;
  int b1 = 0;
};

// Shape checks only (sizes, ranges). Throws std::invalid_argument.
void validate_floer_model(const FloerModel& m);

struct SpectrumCert {
  bool ok = false;
  std::string witness;  // first nonzero residual entry when not ok
};

// (prod_{k=0}^{g-1} (A^4 - (2k)^4 I))^dim = 0, the no-root-finding membership
// test for the spectrum grid.
SpectrumCert certify_spectrum(const FloerModel& m);

// f0(t) = (t + (2g-2)) (t^2 + (2g-2)^2) prod_{k=0}^{g-2} (t^4 - (2k)^4):
// vanishes at every grid point i^r * 2k except t = 2g-2.
Polynomial build_f0(int g);

// p(t) = p0 * prod_{k=0}^{g-2} (t^4 - (2k)^4)^{mults[k]}, normalized so that
// p(2g-2) = 1 -- and hence p(i^r (2g-2)) = 1 for every r, p being a
// polynomial in t^4.
Polynomial annihilator_p(const FloerModel& m);

// Characteristic polynomial divided by (t - (2g-2))^{top_dim}, exactly.
// Throws when the division leaves a remainder or when the quotient still
// vanishes at 2g-2 (declared top_dim below the actual multiplicity).
Polynomial f1_cofactor(const FloerModel& m);

// left^T A^n right.
GaussianRational simulate_pairing(const FloerModel& m, int n);

// simulate_pairing for n = 0..n_max, sharing the matrix-vector sweeps.
std::vector<GaussianRational> pairing_sequence(const FloerModel& m, int n_max);

// left^T p(A) A^n right for n = 0..n_max. Requires p(A) (A^4 - (2g-2)^4 I)
// = 0; a violation means the annihilation exponents are too small for the
// model's block structure and throws with the residual content named.
std::vector<GaussianRational> projected_sequence(const FloerModel& m, const Polynomial& p,
                                                 int n_max);

// c_r = left^T e_r(A) p(A) right, with e_r the Lagrange selector for the
// eigenvalue i^r (2g-2) among the four rotations.
std::array<GaussianRational, 4> projector_constants(const FloerModel& m);

// V[n][r] = i^{rn}, the 4x4 system matrix of the residue solve. |det| = 16.
GMatrix vandermonde_matrix();

// Solves sum_r i^{rn} c_r = vals[n] / (2g-2)^n for n = 0..3.
std::array<GaussianRational, 4> vandermonde_recover(const std::array<GaussianRational, 4>& vals,
                                                    int g);

struct AsymptoticReport {
  int d0 = 0;
  GaussianRational leading;  // a_{d0}: D(h^n) ~ leading * (2g-2)^n along n = d0 (mod 4)
  int growth = 0;            // 2g-2
  std::array<GaussianRational, 4> c_r;  // residues at i^r (2g-2)
  std::array<GaussianRational, 4> a;    // a_j = sum_r c_r i^{rj}, one per residue class
  bool contradiction_branch = false;    // leading == 0
  std::vector<CheckLine> checks;
};

// Partial-fraction asymptotics of the generating function F(t) = sum d_seq[j]
// t^j: multiplies by (1 - (2g-2)^4 t^4) t^d p(1/t) (d = deg p, p the
// normalized annihilator for the given mults), demands the product truncate
// to a polynomial of degree < d+4, and reads the four top residues off exact
// evaluations. Throws std::invalid_argument when d_seq is shorter than 2d+8
// and std::domain_error when the truncation fails (the sequence does not come
// from a grid-spectrum model).
AsymptoticReport generating_asymptotics(const std::vector<GaussianRational>& d_seq, int g,
                                        const std::vector<int>& mults, int d0);

}  // namespace fourfold
