#include "fourfold/lattice.hpp"

#include <set>
#include <stdexcept>

namespace fourfold {

namespace {

void check_same_size(const H2Class& a, const H2Class& b, const char* who) {
  if (a.size() != b.size()) throw std::invalid_argument(std::string(who) + ": size mismatch");
}

// Connected components of the nonzero pattern. Catalog grams are direct sums
// of small standard blocks; splitting first keeps determinant/signature cheap
// even at four-digit ranks.
std::vector<std::vector<int>> components(const GramMatrix& gram) {
  int n = static_cast<int>(gram.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      out[id].push_back(i);
      for (int j = 0; j < n; ++j)
        if (comp[j] < 0 && gram[i][j] != 0) {
          comp[j] = id;
          stack.push_back(j);
        }
    }
  }
  return out;
}

mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;  // exact by Bareiss
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

void validate_square_symmetric(const GramMatrix& gram) {
  for (const auto& row : gram)
    if (row.size() != gram.size()) throw std::invalid_argument("gram matrix is not square");
  for (size_t i = 0; i < gram.size(); ++i)
    for (size_t j = i + 1; j < gram.size(); ++j)
      if (gram[i][j] != gram[j][i]) throw std::invalid_argument("gram matrix is not symmetric");
}

}  // namespace

H2Class neg(const H2Class& a) {
  H2Class r = a;
  for (auto& x : r) x = -x;
  return r;
}

H2Class add(const H2Class& a, const H2Class& b) {
  check_same_size(a, b, "add");
  H2Class r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

H2Class sub(const H2Class& a, const H2Class& b) { return add(a, neg(b)); }

H2Class scale(std::int64_t k, const H2Class& a) {
  H2Class r = a;
  for (auto& x : r) x *= k;
  return r;
}

mpz_class gram_determinant(const GramMatrix& gram) {
  validate_square_symmetric(gram);
  mpz_class det = 1;
  for (const auto& comp : components(gram)) {
    std::vector<std::vector<mpz_class>> sub(comp.size(), std::vector<mpz_class>(comp.size()));
    for (size_t a = 0; a < comp.size(); ++a)
      for (size_t b = 0; b < comp.size(); ++b) sub[a][b] = gram[comp[a]][comp[b]];
    det *= bareiss_det(std::move(sub));
  }
  return det;
}

SignatureInfo signature_of(const GramMatrix& gram) {
  validate_square_symmetric(gram);
  SignatureInfo info;
  for (const auto& comp : components(gram)) {
    int n = static_cast<int>(comp.size());
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = Rational(gram[comp[i]][comp[j]]);

    // Symmetric (congruence) elimination with exact pivots. A zero diagonal is
    // repaired by adding a row+column that pairs nonzero with it; if none
    // exists the form is singular.
    for (int k = 0; k < n; ++k) {
      if (a[k][k].is_zero()) {
        int j = -1;
        for (int i = k + 1; i < n; ++i)
          if (!a[k][i].is_zero()) {
            j = i;
            break;
          }
        if (j < 0) throw std::domain_error("signature_of: singular gram matrix");
        for (int c = 0; c < n; ++c) a[k][c] += a[j][c];
        for (int r = 0; r < n; ++r) a[r][k] += a[r][j];
      }
      Rational pivot = a[k][k];
      if (pivot.sign() > 0)
        ++info.positive;
      else
        ++info.negative;
      for (int i = k + 1; i < n; ++i) {
        if (a[i][k].is_zero()) continue;
        Rational f = a[i][k] / pivot;
        for (int c = k; c < n; ++c) a[i][c] -= f * a[k][c];
        for (int r = k; r < n; ++r) a[r][i] -= f * a[r][k];
      }
    }
  }
  return info;
}

Lattice::Lattice(GramMatrix gram, std::vector<std::string> labels)
    : gram_(std::move(gram)), labels_(std::move(labels)) {
  validate_square_symmetric(gram_);
  if (labels_.empty()) {
    for (size_t i = 0; i < gram_.size(); ++i) labels_.push_back("e" + std::to_string(i + 1));
  }
  if (labels_.size() != gram_.size())
    throw std::invalid_argument("Lattice: label count does not match rank");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw std::invalid_argument("Lattice: duplicate basis labels");
  mpz_class det = gram_determinant(gram_);
  if (det != 1 && det != -1)
    throw std::invalid_argument("Lattice: gram matrix is not unimodular (|det| = " +
                                mpz_class(abs(det)).get_str() + ")");
}

int Lattice::index_of(const std::string& label) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return -1;
}

H2Class Lattice::basis_vector(int i) const {
  if (i < 0 || i >= rank()) throw std::invalid_argument("Lattice: basis index out of range");
  H2Class v(static_cast<size_t>(rank()), 0);
  v[static_cast<size_t>(i)] = 1;
  return v;
}

std::int64_t Lattice::pairing(const H2Class& a, const H2Class& b) const {
  if (static_cast<int>(a.size()) != rank() || static_cast<int>(b.size()) != rank())
    throw std::invalid_argument("pairing: class size does not match lattice rank");
  mpz_class acc = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a[static_cast<size_t>(i)] == 0) continue;
    mpz_class row = 0;
    for (int j = 0; j < rank(); ++j)
      row += mpz_class(gram_[static_cast<size_t>(i)][static_cast<size_t>(j)]) *
             b[static_cast<size_t>(j)];
    acc += mpz_class(a[static_cast<size_t>(i)]) * row;
  }
  if (!acc.fits_slong_p()) throw std::overflow_error("pairing: result out of int64 range");
  return acc.get_si();
}

bool Lattice::is_characteristic(const H2Class& k) const {
  for (int i = 0; i < rank(); ++i) {
    H2Class e = basis_vector(i);
    if (((pairing(k, e) - pairing(e, e)) % 2) != 0) return false;
  }
  return true;
}

Lattice Lattice::diagonal(const std::vector<std::int64_t>& entries,
                          std::vector<std::string> labels) {
  GramMatrix g(entries.size(), std::vector<std::int64_t>(entries.size(), 0));
  for (size_t i = 0; i < entries.size(); ++i) g[i][i] = entries[i];
  return Lattice(std::move(g), std::move(labels));
}

Lattice Lattice::direct_sum(const Lattice& a, const Lattice& b) {
  size_t n = a.gram_.size(), m = b.gram_.size();
  GramMatrix g(n + m, std::vector<std::int64_t>(n + m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) g[i][j] = a.gram_[i][j];
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) g[n + i][n + j] = b.gram_[i][j];
  std::vector<std::string> labels = a.labels_;
  labels.insert(labels.end(), b.labels_.begin(), b.labels_.end());
  return Lattice(std::move(g), std::move(labels));
}

Lattice Lattice::hyperbolic_block(const std::string& f_label, const std::string& s_label) {
  return Lattice({{0, 1}, {1, 0}}, {f_label, s_label});
}

Lattice Lattice::neg_e8_block(const std::string& label_prefix) {
  GramMatrix a(8, std::vector<std::int64_t>(8, 0));
  for (int i = 0; i < 8; ++i) a[i][i] = -2;
  // E8 diagram: chain 0-1-2-3-4-5-6 with the extra node 7 hung off node 4.
  const int edges[7][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}};
  for (const auto& e : edges) a[e[0]][e[1]] = a[e[1]][e[0]] = 1;
  std::vector<std::string> labels;
  for (int i = 1; i <= 8; ++i) labels.push_back(label_prefix + std::to_string(i));
  return Lattice(std::move(a), std::move(labels));
}

SpanSolution solve_in_span(const Lattice& l, const H2Class& target,
                           const std::vector<H2Class>& spanning) {
  size_t n = static_cast<size_t>(l.rank());
  if (target.size() != n) throw std::invalid_argument("solve_in_span: target size mismatch");
  for (const auto& v : spanning)
    if (v.size() != n) throw std::invalid_argument("solve_in_span: spanning class size mismatch");

  size_t m = spanning.size();
  // Augmented system  [spanning columns | target], exact Gaussian elimination.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(m + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < m; ++j) a[i][j] = Rational(spanning[j][i]);
    a[i][m] = Rational(target[i]);
  }

  std::vector<int> pivot_row_of_col(m, -1);
  size_t row = 0;
  for (size_t col = 0; col < m && row < n; ++col) {
    size_t piv = row;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) continue;  // dependent column, caught below
    std::swap(a[row], a[piv]);
    pivot_row_of_col[col] = static_cast<int>(row);
    Rational inv = Rational(1) / a[row][col];
    for (size_t c = col; c <= m; ++c) a[row][c] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      Rational f = a[r][col];
      for (size_t c = col; c <= m; ++c) a[r][c] -= f * a[row][c];
    }
    ++row;
  }

  for (size_t col = 0; col < m; ++col)
    if (pivot_row_of_col[col] < 0)
      throw std::invalid_argument("solve_in_span: spanning set is linearly dependent");

  SpanSolution sol;
  for (size_t r = row; r < n; ++r)
    if (!a[r][m].is_zero()) return sol;  // inconsistent: target outside the span

  sol.in_span = true;
  sol.coeffs.resize(m);
  sol.integral.resize(m);
  sol.all_integral = true;
  for (size_t col = 0; col < m; ++col) {
    sol.coeffs[col] = a[static_cast<size_t>(pivot_row_of_col[col])][m];
    sol.integral[col] = sol.coeffs[col].is_integral();
    if (!sol.integral[col]) sol.all_integral = false;
  }
  return sol;
}

}  // namespace fourfold
